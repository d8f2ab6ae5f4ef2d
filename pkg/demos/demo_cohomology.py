#!/usr/bin/env python3
"""Cocyclic modules and cohomology: unit coefficients, dual numbers, algebroids.

Run:  python3 demos/demo_cohomology.py
"""

from qha.fields import rationals, prime_field
from qha.linalg import Matrix
from qha.quasihopf import (group_algebra, twisted_dual_group_algebra,
                           cyclic_group_table, z2_nontrivial_cocycle,
                           trivial_module, HModule)
from qha.algebroid import (enveloping_algebroid, base_ring_dual_numbers,
                           base_module)
from qha.coefficients import (Contramodule, evaluation_at_unit, HOPF_MU, QUASI_I,
                              ALGEBROID_MU)
from qha.cyclic import (ModuleAlgebra, unit_algebra, check_algebra_object,
                        build_cocyclic, hochschild_cohomology, cyclic_cohomology)

QQ = rationals()
F5 = prime_field(5)


def unit_coefficient(H, flavor):
    k = trivial_module(H)
    return Contramodule(k, evaluation_at_unit(k), flavor)


print("== HC of the unit: H = kC2, A = k, M = k ==")
for field in (QQ, F5):
    H = group_algebra(field, cyclic_group_table(2), "kC2")
    cc = build_cocyclic(unit_algebra(H), unit_coefficient(H, HOPF_MU), n_max=5)
    print("%-7s HH^0..3 = %s   HC^0..4 = %s" % (
        field, hochschild_cohomology(cc, 3).dims, cyclic_cohomology(cc, 4).dims))

print("\n== a genuinely quasi example: the twisted dual k^Z2_w ==")
Ht = twisted_dual_group_algebra(QQ, cyclic_group_table(2), z2_nontrivial_cocycle(QQ))
cc = build_cocyclic(unit_algebra(Ht), unit_coefficient(Ht, QUASI_I), n_max=4)
print("HH^0..3 =", hochschild_cohomology(cc, 3).dims,
      "  HC^0..3 =", cyclic_cohomology(cc, 3).dims)
print("(every cosimplicial and cocyclic identity was verified during the build)")

print("\n== classical cyclic cohomology of A = k[x]/(x^2), H = k ==")
Hk = group_algebra(QQ, [[0]], "k")
carrier = HModule(Hk, [Matrix.identity(QQ, 2)], name="A")
cols = []
for i in range(2):
    for j in range(2):
        if i + j == 0:
            cols.append((QQ.one, QQ.zero))
        elif i + j == 1:
            cols.append((QQ.zero, QQ.one))
        else:
            cols.append((QQ.zero, QQ.zero))
A = ModuleAlgebra(carrier,
                  Matrix.from_cols(QQ, cols, ambient=2),
                  Matrix.from_cols(QQ, [(QQ.one, QQ.zero)], ambient=2))
print("algebra object checks:", "pass" if check_algebra_object(A).passed else "FAIL")
cc = build_cocyclic(A, unit_coefficient(Hk, HOPF_MU), n_max=4)
print("C^n dims:", [cc.dim(n) for n in range(5)])
print("HH^0..3 =", hochschild_cohomology(cc, 3).dims,
      "  HC^0..3 =", cyclic_cohomology(cc, 3).dims)

print("\n== over a Hopf algebroid: A (x) A^op for A = k[x]/(x^2), GF(5) ==")
He = enveloping_algebroid(base_ring_dual_numbers(F5))
M = Contramodule(base_module(He),
                 Matrix(F5, 2, 8, [0, 0, 0, 0, 0, 0, 1, 0,
                                   0, 0, 0, 0, 1, 0, 0, 0]),
                 ALGEBROID_MU)
cc = build_cocyclic(unit_algebra(He), M, n_max=3)
print("C^n dims:", [cc.dim(n) for n in range(4)])
print("HH^0..2 =", hochschild_cohomology(cc, 2).dims,
      "  HC^0..2 =", cyclic_cohomology(cc, 2).dims)
