"""The qha command line: check, ayd, stability, convert, cohomology, generate.

Every command emits a deterministic JSON report (stable key order) or a
human-readable rendering with --pretty.  Exit codes: 0 when every requested
check passes, 1 when some check fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .fields import rationals, prime_field, FieldError
from .reports import CheckReport
from .quasihopf import (QuasiHopfAlgebra, StructureError, GroupTableError,
                        group_algebra, sweedler_h4, twisted_dual_group_algebra,
                        cyclic_group_table, symmetric_group_table,
                        z2_nontrivial_cocycle, z3_nontrivial_cocycle, trivial_module,
                        validate_structure, check_quasi_bialgebra, check_quasi_hopf)
from .algebroid import (HopfAlgebroid, BaseRing, enveloping_algebroid,
                        base_ring_dual_numbers,
                        check_algebroid_structure, check_left_bialgebroid,
                        check_right_bialgebroid, check_hopf_algebroid)
from .coefficients import (Contramodule, FlavorError, HOPF_MU, QUASI_I, QUASI_II,
                           evaluation_at_unit,
                           check_contramodule_hopf, check_ayd_hopf,
                           check_stability_hopf, check_ayd_quasi_I,
                           check_ayd_quasi_II, check_stability_quasi,
                           check_contramodule_algebroid, check_ayd_algebroid,
                           check_stability_algebroid,
                           convert_I_to_II, convert_II_to_I)
from .cyclic import (ModuleAlgebra, build_cocyclic,
                     hochschild_cohomology, cyclic_cohomology, CocyclicError)
from .structures import (parse_structure, serialize, write_structure,
                         content_hash, StructureFileError, FLAVOR_NAMES)


class UsageError(ValueError):
    pass


def _field_from_args(args):
    if args.field == "Q":
        return rationals()
    try:
        return prime_field(args.p)
    except FieldError as e:
        raise UsageError(str(e)) from None


def _input_record(name, path, obj):
    return {"name": name, "path": path, "sha256": content_hash(obj)}


def _emit(report: dict, args) -> int:
    if not getattr(args, "reproducible", False):
        report["timing_ms"] = round((time.monotonic() - args._t0) * 1000.0, 3)
    text = (_pretty(report) if getattr(args, "pretty", False)
            else json.dumps(report, sort_keys=True))
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report.get("pass", True) else 1


def _pretty(report: dict) -> str:
    lines = ["command: %s" % report.get("command", "?")]
    for rec in report.get("inputs", []):
        lines.append("input: %s (%s)" % (rec["name"], rec["sha256"][:12]))
    for chk in report.get("checks", []):
        mark = "ok  " if chk["pass"] else "FAIL"
        extra = ""
        if chk.get("counterexample"):
            extra = "  at " + ", ".join("%s=%s" % kv
                                        for kv in sorted(chk["counterexample"].items()))
        lines.append("%s %s%s" % (mark, chk["check"], extra))
    if "dims" in report:
        lines.append("dims: %s" % report["dims"])
    lines.append("result: %s" % ("PASS" if report.get("pass", True) else "FAIL"))
    if "timing_ms" in report:
        lines.append("timing_ms: %s" % report["timing_ms"])
    return "\n".join(lines)


def _full_check(structure) -> CheckReport:
    rep = CheckReport()
    if isinstance(structure, QuasiHopfAlgebra):
        rep.extend(validate_structure(structure))
        rep.extend(check_quasi_bialgebra(structure))
        rep.extend(check_quasi_hopf(structure))
    elif isinstance(structure, HopfAlgebroid):
        rep.extend(check_algebroid_structure(structure))
        rep.extend(check_left_bialgebroid(structure))
        rep.extend(check_right_bialgebroid(structure))
        rep.extend(check_hopf_algebroid(structure))
    else:
        raise UsageError("check expects a quasi_hopf or hopf_algebroid file")
    return rep


def cmd_check(args) -> int:
    structure = parse_structure(args.structure)
    rep = _full_check(structure)
    report = {
        "command": "check",
        "inputs": [_input_record(structure.name, args.structure, structure)],
        "checks": rep.to_dict()["checks"],
        "pass": rep.passed,
    }
    return _emit(report, args)


def _coefficient_checks(coeff: Contramodule, stability: bool) -> CheckReport:
    rep = CheckReport()
    if coeff.flavor == HOPF_MU:
        if stability:
            rep.extend(check_stability_hopf(coeff))
        else:
            rep.extend(check_contramodule_hopf(coeff))
            rep.extend(check_ayd_hopf(coeff))
    elif coeff.flavor == QUASI_I:
        if stability:
            rep.extend(check_stability_quasi(coeff))
        else:
            rep.extend(check_ayd_quasi_I(coeff))
    elif coeff.flavor == QUASI_II:
        if stability:
            rep.extend(check_stability_quasi(convert_II_to_I(coeff)))
        else:
            rep.extend(check_ayd_quasi_II(coeff))
    else:
        if stability:
            rep.extend(check_stability_algebroid(coeff))
        else:
            rep.extend(check_contramodule_algebroid(coeff))
            rep.extend(check_ayd_algebroid(coeff))
    return rep


def _load_coefficient(args):
    structure = parse_structure(args.structure)
    coeff = parse_structure(args.coefficient, parent=structure)
    if not isinstance(coeff, Contramodule):
        raise UsageError("expected a contramodule file, got %r"
                         % type(coeff).__name__)
    return structure, coeff


def cmd_ayd(args) -> int:
    structure, coeff = _load_coefficient(args)
    rep = _coefficient_checks(coeff, stability=False)
    report = {
        "command": "ayd",
        "inputs": [_input_record(structure.name, args.structure, structure),
                   _input_record("coefficient", args.coefficient, coeff)],
        "flavor": FLAVOR_NAMES[coeff.flavor],
        "checks": rep.to_dict()["checks"],
        "pass": rep.passed,
    }
    return _emit(report, args)


def cmd_stability(args) -> int:
    structure, coeff = _load_coefficient(args)
    rep = _coefficient_checks(coeff, stability=True)
    report = {
        "command": "stability",
        "inputs": [_input_record(structure.name, args.structure, structure),
                   _input_record("coefficient", args.coefficient, coeff)],
        "flavor": FLAVOR_NAMES[coeff.flavor],
        "checks": rep.to_dict()["checks"],
        "pass": rep.passed,
    }
    return _emit(report, args)


def cmd_convert(args) -> int:
    coeff = parse_structure(args.coefficient)
    if not isinstance(coeff, Contramodule):
        raise UsageError("convert expects a contramodule file")
    target = {"typeI": QUASI_I, "typeII": QUASI_II,
              "type_I": QUASI_I, "type_II": QUASI_II}.get(args.to)
    if target is None:
        raise UsageError("--to must be typeI or typeII")
    if coeff.flavor == target:
        out = coeff
    elif coeff.flavor == QUASI_I and target == QUASI_II:
        out = convert_I_to_II(coeff)
    elif coeff.flavor == QUASI_II and target == QUASI_I:
        out = convert_II_to_I(coeff)
    else:
        raise UsageError("cannot convert flavor %s to %s"
                         % (FLAVOR_NAMES[coeff.flavor], args.to))
    if args.out:
        write_structure(args.out, out, name=args.name or "converted")
    else:
        print(json.dumps(serialize(out, args.name or "converted"), sort_keys=True))
    return 0


def cmd_cohomology(args) -> int:
    structure = parse_structure(args.structure)
    algebra = parse_structure(args.algebra, parent=structure)
    coeff = parse_structure(args.coefficient, parent=structure)
    if not isinstance(algebra, ModuleAlgebra):
        raise UsageError("expected a module_algebra file for the algebra object")
    if not isinstance(coeff, Contramodule):
        raise UsageError("expected a contramodule file for the coefficient")
    n_max = args.degree + 1
    cc = build_cocyclic(algebra, coeff, n_max)
    if args.theory == "hochschild":
        result = hochschild_cohomology(cc, args.degree)
    else:
        result = cyclic_cohomology(cc, args.degree)
    checks = [{"check": "algebra_object", "pass": True, "counterexample": None},
              {"check": "coefficient_stable", "pass": True, "counterexample": None},
              {"check": "cocyclic_identities", "pass": True, "counterexample": None}]
    report = {
        "command": "cohomology",
        "inputs": [_input_record(structure.name, args.structure, structure),
                   _input_record("algebra", args.algebra, algebra),
                   _input_record("coefficient", args.coefficient, coeff)],
        "theory": result.theory,
        "field": str(result.field),
        "degree": args.degree,
        "dims": list(result.dims),
        "checks": checks,
        "pass": True,
    }
    return _emit(report, args)


def _load_table(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def cmd_generate(args) -> int:
    f = _field_from_args(args)
    what = args.what
    name = args.name
    if what == "group_algebra":
        if args.cyclic:
            table = cyclic_group_table(args.cyclic)
            name = name or "kC%d" % args.cyclic
        elif args.symmetric:
            table = symmetric_group_table(args.symmetric)
            name = name or "kS%d" % args.symmetric
        elif args.table:
            table = _load_table(args.table)
            name = name or "kG"
        else:
            raise UsageError("group_algebra needs --cyclic N, --symmetric N or --table FILE")
        obj = group_algebra(f, table, name)
    elif what == "sweedler_h4":
        obj = sweedler_h4(f)
        name = name or "H4"
    elif what == "twisted_dual_z2":
        obj = twisted_dual_group_algebra(f, cyclic_group_table(2),
                                         z2_nontrivial_cocycle(f))
        name = name or "k^Z2_w"
    elif what == "twisted_dual_z3":
        obj = twisted_dual_group_algebra(f, cyclic_group_table(3),
                                         z3_nontrivial_cocycle(f))
        name = name or "k^Z3_w"
    elif what == "twisted_dual":
        if not (args.table and args.omega):
            raise UsageError("twisted_dual needs --table FILE and --omega FILE")
        table = _load_table(args.table)
        omega_raw = _load_table(args.omega)
        omega = [[[f.parse(v) for v in row] for row in slab] for slab in omega_raw]
        obj = twisted_dual_group_algebra(f, table, omega)
        name = name or "k^G_w"
    elif what == "enveloping_dual_numbers":
        obj = enveloping_algebroid(base_ring_dual_numbers(f))
        name = name or obj.name
    elif what == "enveloping":
        if not args.base:
            raise UsageError("enveloping needs --base FILE with dim/mult/unit")
        doc = _load_table(args.base)
        r = doc["dim"]
        mult = []
        for slab in doc["mult"]:
            for row in slab:
                mult.extend(f.parse(v) for v in row)
        unit = [f.parse(v) for v in doc["unit"]]
        obj = enveloping_algebroid(BaseRing(f, r, mult, unit))
        name = name or obj.name
    elif what == "unit_algebra":
        if not args.structure:
            raise UsageError("unit_algebra needs --structure FILE")
        parent = parse_structure(args.structure)
        from .cyclic import unit_algebra
        obj = unit_algebra(parent)
        name = name or "unitA"
    elif what == "trivial_contramodule":
        if not args.structure:
            raise UsageError("trivial_contramodule needs --structure FILE")
        parent = parse_structure(args.structure)
        if not isinstance(parent, QuasiHopfAlgebra):
            raise UsageError("trivial_contramodule needs a quasi_hopf structure")
        k = trivial_module(parent)
        flavor = HOPF_MU if parent.is_hopf() else QUASI_I
        obj = Contramodule(k, evaluation_at_unit(k), flavor)
        name = name or "trivialM"
    else:
        raise UsageError("unknown generator %r" % what)
    if args.out:
        write_structure(args.out, obj, name=name)
    else:
        print(json.dumps(serialize(obj, name), sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qha",
        description="Exact checks and cyclic cohomology for quasi-Hopf algebras "
                    "and Hopf algebroids.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--pretty", action="store_true",
                       help="human-readable output instead of JSON")
        p.add_argument("--reproducible", action="store_true",
                       help="omit the timing field for byte-identical reports")
        p.add_argument("--out", help="write the report to a file")

    p = sub.add_parser("check", help="verify all axioms of a structure file")
    p.add_argument("structure")
    common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("ayd", help="verify contramodule and aYD conditions")
    p.add_argument("structure")
    p.add_argument("coefficient")
    common(p)
    p.set_defaults(fn=cmd_ayd)

    p = sub.add_parser("stability", help="verify the stability condition")
    p.add_argument("structure")
    p.add_argument("coefficient")
    common(p)
    p.set_defaults(fn=cmd_stability)

    p = sub.add_parser("convert", help="convert a coefficient between type I and II")
    p.add_argument("coefficient")
    p.add_argument("--to", required=True, help="typeI or typeII")
    p.add_argument("--out", help="write the converted coefficient to a file")
    p.add_argument("--name", default="")
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("cohomology", help="compute Hochschild or cyclic cohomology")
    p.add_argument("structure")
    p.add_argument("algebra")
    p.add_argument("coefficient")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--theory", choices=["hochschild", "cyclic"], default="cyclic")
    common(p)
    p.set_defaults(fn=cmd_cohomology)

    p = sub.add_parser("generate", help="emit a built-in structure as JSON")
    p.add_argument("what", choices=[
        "group_algebra", "sweedler_h4", "twisted_dual_z2", "twisted_dual_z3",
        "twisted_dual",
        "enveloping_dual_numbers", "enveloping", "unit_algebra",
        "trivial_contramodule"])
    p.add_argument("--field", choices=["Q", "GFp"], default="Q")
    p.add_argument("--p", type=int, default=5)
    p.add_argument("--cyclic", type=int)
    p.add_argument("--symmetric", type=int)
    p.add_argument("--table")
    p.add_argument("--omega")
    p.add_argument("--base")
    p.add_argument("--structure")
    p.add_argument("--name", default="")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_generate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    args._t0 = time.monotonic()
    try:
        return args.fn(args)
    except (StructureFileError, UsageError, FlavorError, GroupTableError,
            StructureError, CocyclicError, FieldError, OSError) as e:
        code = getattr(e, "code", "usage")
        sys.stderr.write("error [%s]: %s\n" % (code, e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
