#!/usr/bin/env python3
"""Axiom checking tour: the four stock algebras, and how failures look.

Run:  python3 demos/demo_axioms.py
"""

from qha.fields import rationals, prime_field
from qha.quasihopf import (group_algebra, sweedler_h4, twisted_dual_group_algebra,
                           cyclic_group_table, symmetric_group_table,
                           z2_nontrivial_cocycle, validate_structure,
                           check_quasi_bialgebra, check_quasi_hopf)


def banner(text):
    print("\n== %s " % text + "=" * max(0, 60 - len(text)))


def run_all(H):
    print("structure invariants:", "pass" if validate_structure(H).passed else "FAIL")
    print(check_quasi_bialgebra(H).pretty())
    print(check_quasi_hopf(H).pretty())


for field in (rationals(), prime_field(5)):
    banner("group algebra kC2 over %s" % field)
    run_all(group_algebra(field, cyclic_group_table(2), "kC2"))

banner("group algebra kS3 (nonabelian, dim 6)")
run_all(group_algebra(rationals(), symmetric_group_table(3), "kS3"))

banner("Sweedler's H4 (the antipode has order four)")
H4 = sweedler_h4(rationals())
run_all(H4)
s2 = H4.antipode * H4.antipode
print("S^2 = id?", s2.is_identity(), " S^4 = id?", (s2 * s2).is_identity())

banner("twisted dual group algebra k^Z2 with w(a,a,a) = -1")
F = rationals()
Ht = twisted_dual_group_algebra(F, cyclic_group_table(2), z2_nontrivial_cocycle(F))
run_all(Ht)
print("Phi is genuinely nontrivial:", not Ht.is_hopf())

banner("the same twist with a NON-cocycle: exactly the pentagon fails")
o, m = F.one, F.neg(F.one)
bad_omega = [[[o, o], [o, o]], [[o, o], [m, o]]]   # w(a,a,e) = -1, rest 1
bad = twisted_dual_group_algebra(F, cyclic_group_table(2), bad_omega)
print(check_quasi_bialgebra(bad).pretty())
