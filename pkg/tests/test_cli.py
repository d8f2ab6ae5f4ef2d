import json

import pytest

from qha.cli import main
from qha.structures import (parse_structure, parse_document, serialize,
                            write_structure)
from qha.quasihopf import cyclic_group_table, trivial_module
from qha.algebroid import enveloping_algebroid, base_ring_dual_numbers
from qha.coefficients import Contramodule, evaluation_at_unit, HOPF_MU

from conftest import F5


@pytest.fixture()
def kc2_file(tmp_path):
    path = tmp_path / "kC2.json"
    assert main(["generate", "group_algebra", "--cyclic", "2",
                 "--out", str(path)]) == 0
    return str(path)


def test_roundtrip_parse_serialize_parse(tmp_path, kc2_file):
    H = parse_structure(kc2_file)
    doc = serialize(H, "kC2")
    H2 = parse_document(doc)
    assert serialize(H2, "kC2") == doc


def test_roundtrip_algebroid(tmp_path):
    H = enveloping_algebroid(base_ring_dual_numbers(F5))
    path = tmp_path / "env.json"
    write_structure(str(path), H, "env")
    H2 = parse_structure(str(path))
    assert serialize(H2, "env") == serialize(H, "env")


def test_roundtrip_contramodule(tmp_path, kc2_file):
    H = parse_structure(kc2_file)
    k = trivial_module(H)
    C = Contramodule(k, evaluation_at_unit(k), HOPF_MU)
    path = tmp_path / "c.json"
    write_structure(str(path), C, "c")
    C2 = parse_structure(str(path))
    assert C2.mu == C.mu and C2.flavor == C.flavor
    C3 = parse_structure(str(path), parent=H)
    assert C3.mu == C.mu


def test_check_exit_codes(tmp_path, kc2_file, capsys):
    assert main(["check", kc2_file, "--reproducible"]) == 0
    doc = json.load(open(kc2_file))
    doc["counit"] = ["1", "0"]      # breaks the counit algebra-map axiom
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["check", str(bad), "--reproducible"]) == 1


def test_non_prime_characteristic(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"field": {"type": "GFp", "p": 4},
                               "kind": "quasi_hopf", "dim": 1}))
    assert main(["check", str(bad)]) == 2
    assert "non_prime_characteristic" in capsys.readouterr().err


def test_dimension_mismatch_names_the_field(tmp_path, kc2_file, capsys):
    doc = json.load(open(kc2_file))
    doc["mult"][0][0] = ["1"]       # wrong row length
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["check", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "dimension_mismatch" in err and "mult" in err


def test_scalar_parse_error(tmp_path, kc2_file, capsys):
    doc = json.load(open(kc2_file))
    doc["unit"][0] = "one half"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["check", str(bad)]) == 2
    assert "scalar_parse" in capsys.readouterr().err


def test_determinism(tmp_path, kc2_file, capsys):
    main(["check", kc2_file, "--reproducible"])
    first = capsys.readouterr().out
    main(["check", kc2_file, "--reproducible"])
    second = capsys.readouterr().out
    assert first == second


def test_ayd_and_stability_commands(tmp_path, kc2_file):
    coeff = tmp_path / "m.json"
    assert main(["generate", "trivial_contramodule", "--structure", kc2_file,
                 "--out", str(coeff)]) == 0
    assert main(["ayd", kc2_file, str(coeff), "--reproducible"]) == 0
    assert main(["stability", kc2_file, str(coeff), "--reproducible"]) == 0
    # scaled contraaction fails stability with exit code 1
    doc = json.load(open(coeff))
    doc["contraaction"][0] = [[str(2 * int(x)) for x in row]
                              for row in doc["contraaction"][0]]
    bad = tmp_path / "scaled.json"
    bad.write_text(json.dumps(doc))
    assert main(["stability", kc2_file, str(bad), "--reproducible"]) == 1


def test_incompatible_kinds_usage_error(tmp_path, kc2_file, capsys):
    env = tmp_path / "env.json"
    assert main(["generate", "enveloping_dual_numbers", "--out", str(env)]) == 0
    coeff = tmp_path / "m.json"
    assert main(["generate", "trivial_contramodule", "--structure", kc2_file,
                 "--out", str(coeff)]) == 0
    assert main(["ayd", str(env), str(coeff)]) == 2


def test_convert_roundtrip_bytes(tmp_path):
    tw = tmp_path / "tw.json"
    assert main(["generate", "twisted_dual_z2", "--out", str(tw)]) == 0
    coeff = tmp_path / "m.json"
    assert main(["generate", "trivial_contramodule", "--structure", str(tw),
                 "--out", str(coeff)]) == 0
    two = tmp_path / "m2.json"
    back = tmp_path / "m3.json"
    assert main(["convert", str(coeff), "--to", "typeII", "--out", str(two)]) == 0
    assert main(["convert", str(two), "--to", "typeI", "--out", str(back),
                 "--name", "trivialM"]) == 0
    a = json.load(open(coeff))
    b = json.load(open(back))
    assert a["contraaction"] == b["contraaction"]


def test_cohomology_command(tmp_path, kc2_file, capsys):
    unit_a = tmp_path / "unitA.json"
    coeff = tmp_path / "m.json"
    assert main(["generate", "unit_algebra", "--structure", kc2_file,
                 "--out", str(unit_a)]) == 0
    assert main(["generate", "trivial_contramodule", "--structure", kc2_file,
                 "--out", str(coeff)]) == 0
    assert main(["cohomology", kc2_file, str(unit_a), str(coeff),
                 "--degree", "4", "--theory", "cyclic", "--reproducible"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dims"] == [1, 0, 1, 0, 1]
    assert main(["cohomology", kc2_file, str(unit_a), str(coeff),
                 "--degree", "3", "--theory", "hochschild",
                 "--reproducible"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dims"] == [1, 0, 0, 0]


def test_generate_group_table_file(tmp_path):
    table = tmp_path / "table.json"
    table.write_text(json.dumps(cyclic_group_table(3)))
    out = tmp_path / "kC3.json"
    assert main(["generate", "group_algebra", "--table", str(table),
                 "--out", str(out)]) == 0
    assert main(["check", str(out), "--reproducible"]) == 0
    bad_table = tmp_path / "bad.json"
    bad_table.write_text(json.dumps([[0, 1], [1, 1]]))
    assert main(["generate", "group_algebra", "--table", str(bad_table)]) == 2


def test_generate_twisted_from_files(tmp_path):
    table = tmp_path / "table.json"
    table.write_text(json.dumps(cyclic_group_table(2)))
    omega = tmp_path / "omega.json"
    omega.write_text(json.dumps(
        [[["1", "1"], ["1", "1"]], [["1", "1"], ["1", "-1"]]]))
    out = tmp_path / "tw.json"
    assert main(["generate", "twisted_dual", "--table", str(table),
                 "--omega", str(omega), "--out", str(out)]) == 0
    assert main(["check", str(out), "--reproducible"]) == 0


def test_parent_mismatch_detected(tmp_path, kc2_file):
    coeff = tmp_path / "m.json"
    main(["generate", "trivial_contramodule", "--structure", kc2_file,
          "--out", str(coeff)])
    other = tmp_path / "kC3.json"
    table = tmp_path / "t.json"
    table.write_text(json.dumps(cyclic_group_table(3)))
    main(["generate", "group_algebra", "--table", str(table), "--out", str(other)])
    assert main(["ayd", str(other), str(coeff)]) == 2


def test_roundtrip_module_algebra(tmp_path, kc2_file):
    H = parse_structure(kc2_file)
    from qha.cyclic import unit_algebra
    A = unit_algebra(H)
    path = tmp_path / "a.json"
    write_structure(str(path), A, "unitA")
    A2 = parse_structure(str(path))
    assert serialize(A2, "unitA") == serialize(A, "unitA")
    A3 = parse_structure(str(path), parent=H)
    assert A3.mult == A.mult and A3.unit == A.unit


def test_roundtrip_module_kind(tmp_path, kc2_file):
    H = parse_structure(kc2_file)
    from qha.quasihopf import regular_module
    V = regular_module(H)
    path = tmp_path / "m.json"
    write_structure(str(path), V, "reg")
    V2 = parse_structure(str(path))
    assert all(a == b for a, b in zip(V.mats, V2.mats))


def test_cohomology_command_algebroid(tmp_path, capsys):
    from qha.algebroid import enveloping_algebroid, base_ring_dual_numbers, \
        base_module
    from qha.coefficients import Contramodule, ALGEBROID_MU
    from qha.linalg import Matrix
    H = enveloping_algebroid(base_ring_dual_numbers(F5))
    struct = tmp_path / "env.json"
    write_structure(str(struct), H, "env")
    alg_file = tmp_path / "unitA.json"
    assert main(["generate", "unit_algebra", "--structure", str(struct),
                 "--out", str(alg_file)]) == 0
    M = Contramodule(base_module(H),
                     Matrix(F5, 2, 8, [0, 0, 0, 0, 0, 0, 1, 0,
                                       0, 0, 0, 0, 1, 0, 0, 0]), ALGEBROID_MU)
    coeff = tmp_path / "m.json"
    write_structure(str(coeff), M, "stableM")
    assert main(["ayd", str(struct), str(coeff), "--reproducible"]) == 0
    capsys.readouterr()
    assert main(["cohomology", str(struct), str(alg_file), str(coeff),
                 "--degree", "2", "--theory", "cyclic", "--reproducible"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dims"] == [2, 0, 2]
