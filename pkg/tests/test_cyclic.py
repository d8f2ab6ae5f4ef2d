import itertools
import random

import pytest

from qha.linalg import Matrix
from qha.quasihopf import (group_algebra, cyclic_group_table, trivial_module,
                           HModule, StructureError)
from qha.algebroid import (enveloping_algebroid, base_ring_dual_numbers,
                           base_module)
from qha.coefficients import (Contramodule, evaluation_at_unit, HOPF_MU, QUASI_I,
                              ALGEBROID_MU)
from qha.cyclic import (ModuleAlgebra, unit_algebra, check_algebra_object,
                        build_cocyclic, verify_cocyclic_identities,
                        hochschild_cohomology, cyclic_cohomology)

from conftest import QQ, F5, random_invertible


def trivial_hopf(field):
    return group_algebra(field, [[0]], "k")


def dual_numbers_algebra(H, field):
    """k[x]/(x^2) as an algebra object with the trivial action of H = k."""
    carrier = HModule(H, [Matrix.identity(field, 2)] * H.dim, name="A")
    cols = []
    for i in range(2):
        for j in range(2):
            if i + j == 0:
                cols.append((field.one, field.zero))
            elif i + j == 1:
                cols.append((field.zero, field.one))
            else:
                cols.append((field.zero, field.zero))
    mult = Matrix.from_cols(field, cols, ambient=2)
    unit = Matrix.from_cols(field, [(field.one, field.zero)], ambient=2)
    return ModuleAlgebra(carrier, mult, unit)


def functions_algebra(H):
    """k^(C2) with the permutation action of kC2: a module algebra."""
    f = H.field
    swap = Matrix.from_rows(f, [[f.zero, f.one], [f.one, f.zero]])
    carrier = HModule(H, [Matrix.identity(f, 2), swap], name="k^C2")
    cols = []
    for i in range(2):
        for j in range(2):
            v = [f.zero, f.zero]
            if i == j:
                v[i] = f.one
            cols.append(tuple(v))
    mult = Matrix.from_cols(f, cols, ambient=2)
    unit = Matrix.from_cols(f, [(f.one, f.one)], ambient=2)
    return ModuleAlgebra(carrier, mult, unit)


def unit_coefficient(H, flavor=HOPF_MU):
    k = trivial_module(H)
    return Contramodule(k, evaluation_at_unit(k), flavor)


# -- algebra-object checks ------------------------------------------------------

def test_unit_algebra_object(kc2_q):
    assert check_algebra_object(unit_algebra(kc2_q)).passed


def test_functions_algebra_is_module_algebra(kc2_q):
    assert check_algebra_object(functions_algebra(kc2_q)).passed


def test_trivial_eps_action_algebra_over_twisted(twisted_q):
    # any associative algebra with the eps-action: Phi acts by counit scalars
    H = twisted_q
    A = dual_numbers_algebra_trivial_over(H)
    assert check_algebra_object(A).passed


def dual_numbers_algebra_trivial_over(H):
    f = H.field
    mats = [Matrix.identity(f, 2).scale(H.counit[i]) for i in range(H.dim)]
    carrier = HModule(H, mats, name="A")
    cols = []
    for i in range(2):
        for j in range(2):
            if i + j == 0:
                cols.append((f.one, f.zero))
            elif i + j == 1:
                cols.append((f.zero, f.one))
            else:
                cols.append((f.zero, f.zero))
    mult = Matrix.from_cols(f, cols, ambient=2)
    unit = Matrix.from_cols(f, [(f.one, f.zero)], ambient=2)
    return ModuleAlgebra(carrier, mult, unit)


def test_broken_algebra_object_fails(kc2_q):
    A = functions_algebra(kc2_q)
    bad_mult = A.mult.scale(QQ.from_int(2))
    bad = ModuleAlgebra(A.carrier, bad_mult, A.unit)
    assert not check_algebra_object(bad).passed


# -- cocyclic builds -------------------------------------------------------------

@pytest.mark.parametrize("field", [QQ, F5])
def test_unit_cocyclic_over_kc2(field):
    H = group_algebra(field, cyclic_group_table(2), "kC2")
    cc = build_cocyclic(unit_algebra(H), unit_coefficient(H), 5)
    assert [cc.dim(n) for n in range(6)] == [1] * 6
    assert verify_cocyclic_identities(cc) is None
    assert hochschild_cohomology(cc, 3).dims == [1, 0, 0, 0]
    assert cyclic_cohomology(cc, 4).dims == [1, 0, 1, 0, 1]


def test_unstable_coefficient_rejected(kc2_q):
    bad = unit_coefficient(kc2_q).scaled(QQ.from_int(2))
    with pytest.raises(StructureError):
        build_cocyclic(unit_algebra(kc2_q), bad, 2)


def test_twisted_cocyclic(twisted_q):
    M = unit_coefficient(twisted_q, flavor=QUASI_I)
    cc = build_cocyclic(unit_algebra(twisted_q), M, 4)
    assert verify_cocyclic_identities(cc) is None
    assert hochschild_cohomology(cc, 3).dims == [1, 0, 0, 0]
    assert cyclic_cohomology(cc, 3).dims == [1, 0, 1, 0]


def test_functions_algebra_cocyclic(kc2_q):
    cc = build_cocyclic(functions_algebra(kc2_q), unit_coefficient(kc2_q), 3)
    assert verify_cocyclic_identities(cc) is None
    hh = hochschild_cohomology(cc, 2)
    hc = cyclic_cohomology(cc, 2)
    assert all(d >= 0 for d in hh.dims) and all(d >= 0 for d in hc.dims)
    # b o b = 0 is asserted inside hochschild_cohomology


def test_algebroid_cocyclic():
    H = enveloping_algebroid(base_ring_dual_numbers(F5))
    A = unit_algebra(H)
    assert check_algebra_object(A).passed
    Mcar = base_module(H)
    mu = Matrix(F5, 2, 8, [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0])
    M = Contramodule(Mcar, mu, ALGEBROID_MU)
    cc = build_cocyclic(A, M, 3)
    assert verify_cocyclic_identities(cc) is None
    assert hochschild_cohomology(cc, 2).dims == [2, 0, 0]
    assert cyclic_cohomology(cc, 2).dims == [2, 0, 2]


def test_truncation_guard(kc2_q):
    cc = build_cocyclic(unit_algebra(kc2_q), unit_coefficient(kc2_q), 2)
    with pytest.raises(ValueError):
        hochschild_cohomology(cc, 2)
    with pytest.raises(ValueError):
        cyclic_cohomology(cc, 2)


def test_row_exactness(kc2_q):
    cc = build_cocyclic(unit_algebra(kc2_q), unit_coefficient(kc2_q), 4)
    for n in range(5):
        lam = cc.lam(n)
        eye = Matrix.identity(cc.field, cc.dim(n))
        big_n = cc.norm(n)
        assert (big_n * (eye - lam)).is_zero()
        assert ((eye - lam) * big_n).is_zero()


# -- the classical oracle (independent implementation) ----------------------------

class ClassicalCyclicComplex:
    """Textbook cyclic cochain complex of an algebra with trivial coefficients,
    coded directly on basis tuples (independent of the library pipeline)."""

    def __init__(self, field, dim, mult_table):
        # mult_table[i][j] = dict {k: coeff}
        self.f = field
        self.dim = dim
        self.mult = mult_table

    def tuples(self, n):
        return list(itertools.product(range(self.dim), repeat=n + 1))

    def face_matrix(self, n, i):
        f = self.f
        src, dst = self.tuples(n), self.tuples(n + 1)
        cols = {t: {} for t in src}
        for t in dst:
            if i <= n:
                prod = self.mult[t[i]][t[i + 1]]
                for b, c in prod.items():
                    cols.setdefault(t[:i] + (b,) + t[i + 2:], {})
                    cur = cols[t[:i] + (b,) + t[i + 2:]]
                    cur[t] = f.add(cur.get(t, f.zero), c)
            else:
                prod = self.mult[t[n + 1]][t[0]]
                for b, c in prod.items():
                    cur = cols.setdefault((b,) + t[1:n + 1], {})
                    cur[t] = f.add(cur.get(t, f.zero), c)
        dst_index = {t: k for k, t in enumerate(dst)}
        out_cols = []
        for t in src:
            col = [f.zero] * len(dst)
            for dt, c in cols.get(t, {}).items():
                col[dst_index[dt]] = c
            out_cols.append(col)
        return Matrix.from_cols(f, out_cols, ambient=len(dst))

    def b(self, n):
        f = self.f
        out = Matrix.zeros(f, self.dim ** (n + 2), self.dim ** (n + 1))
        for i in range(n + 2):
            m = self.face_matrix(n, i)
            out = out + (m if i % 2 == 0 else m.scale(f.neg(f.one)))
        return out

    def b_prime(self, n):
        f = self.f
        out = Matrix.zeros(f, self.dim ** (n + 2), self.dim ** (n + 1))
        for i in range(n + 1):
            m = self.face_matrix(n, i)
            out = out + (m if i % 2 == 0 else m.scale(f.neg(f.one)))
        return out

    def lam(self, n):
        # (t f)(a_0..a_n) = f(a_n, a_0..a_(n-1)), so the basis functional
        # delta_s is sent to delta_(s_1..s_n s_0)
        f = self.f
        src = self.tuples(n)
        idx = {t: k for k, t in enumerate(src)}
        cols = []
        for t in src:
            col = [f.zero] * len(src)
            col[idx[t[1:] + (t[0],)]] = f.one
            cols.append(col)
        t_mat = Matrix.from_cols(f, cols, ambient=len(src))
        return t_mat if n % 2 == 0 else t_mat.scale(f.neg(f.one))

    def norm(self, n):
        f = self.f
        lam = self.lam(n)
        out = Matrix.identity(f, self.dim ** (n + 1))
        acc = Matrix.identity(f, self.dim ** (n + 1))
        for _ in range(n):
            acc = acc * lam
            out = out + acc
        return out

    def hochschild_dims(self, up_to):
        bs = [self.b(n) for n in range(up_to + 1)]
        dims = []
        for n in range(up_to + 1):
            ker = self.dim ** (n + 1) - bs[n].rank()
            im = bs[n - 1].rank() if n >= 1 else 0
            dims.append(ker - im)
        return dims

    def cyclic_dims(self, up_to):
        f = self.f

        def tdim(n):
            return sum(self.dim ** (n - p + 1) for p in range(n + 1))

        def tmat(n):
            rows, cols_n = tdim(n + 1), tdim(n)
            ent = [[f.zero] * cols_n for _ in range(rows)]
            coff, off = [], 0
            for p in range(n + 1):
                coff.append(off)
                off += self.dim ** (n - p + 1)
            roff, off = [], 0
            for p in range(n + 2):
                roff.append(off)
                off += self.dim ** (n - p + 2)
            for p in range(n + 1):
                q = n - p
                vert = self.b(q) if p % 2 == 0 else self.b_prime(q).scale(f.neg(f.one))
                for i in range(vert.rows):
                    for j in range(vert.cols):
                        v = vert.get(i, j)
                        if v != 0:
                            ent[roff[p] + i][coff[p] + j] = v
                horiz = (Matrix.identity(f, self.dim ** (q + 1)) - self.lam(q)) \
                    if p % 2 == 0 else self.norm(q)
                for i in range(horiz.rows):
                    for j in range(horiz.cols):
                        v = horiz.get(i, j)
                        if v != 0:
                            ent[roff[p + 1] + i][coff[p] + j] = v
            return Matrix.from_rows(f, ent)

        dims = []
        for n in range(up_to + 1):
            ker = tdim(n) - tmat(n).rank()
            im = tmat(n - 1).rank() if n >= 1 else 0
            dims.append(ker - im)
        return dims


def dual_numbers_oracle(field):
    one = field.one
    mult = [[{0: one}, {1: one}], [{1: one}, {}]]
    return ClassicalCyclicComplex(field, 2, mult)


def test_classical_oracle_equivalence():
    H = trivial_hopf(QQ)
    A = dual_numbers_algebra(H, QQ)
    cc = build_cocyclic(A, unit_coefficient(H), 4)
    oracle = dual_numbers_oracle(QQ)
    assert hochschild_cohomology(cc, 3).dims == oracle.hochschild_dims(3)
    assert cyclic_cohomology(cc, 3).dims == oracle.cyclic_dims(3)


def test_classical_oracle_unit_pattern():
    # sanity for the oracle itself: A = k gives the classical HC(k) pattern
    oracle = ClassicalCyclicComplex(QQ, 1, [[{0: QQ.one}]])
    assert oracle.hochschild_dims(3) == [1, 0, 0, 0]
    assert oracle.cyclic_dims(4) == [1, 0, 1, 0, 1]


def test_basis_change_invariance(kc2_q):
    # conjugating A and M by invertible matrices leaves all dims unchanged
    H = kc2_q
    rng = random.Random(17)
    A = functions_algebra(H)
    g = random_invertible(QQ, 2, rng)
    gi = g.inverse()
    carrier2 = HModule(H, [g * m * gi for m in A.carrier.mats], name="A'")
    mult2 = g * A.mult * gi.kron(gi)
    unit2 = g * A.unit
    A2 = ModuleAlgebra(carrier2, mult2, unit2)
    assert check_algebra_object(A2).passed
    cc1 = build_cocyclic(A, unit_coefficient(H), 3)
    cc2 = build_cocyclic(A2, unit_coefficient(H), 3)
    assert hochschild_cohomology(cc1, 2).dims == hochschild_cohomology(cc2, 2).dims
    assert cyclic_cohomology(cc1, 2).dims == cyclic_cohomology(cc2, 2).dims


def test_tensor_power_bracketed(twisted_q, kc2_q):
    from qha.cyclic import tensor_power_bracketed
    # n = 1 is A itself
    A = functions_algebra(kc2_q)
    chain = tensor_power_bracketed(A, 1)
    assert chain.module(1) is A.carrier
    with pytest.raises(ValueError):
        tensor_power_bracketed(A, 0)
    # trivial Phi: every rebracketing isomorphism is the identity
    chain = tensor_power_bracketed(A, 3)
    for k in (1, 2):
        assert chain.rebracket_front(k).is_identity()
    # dim-2 carrier over the twisted dual: 8-dim cube with +-1 diagonal
    # rebracketings (dictated by the associator, not the algebra structure)
    from qha.quasihopf import regular_module
    from qha.cyclic import ModuleAlgebra
    reg = regular_module(twisted_q)
    shape_only = ModuleAlgebra(
        reg, Matrix.zeros(QQ, 2, 4),
        Matrix.from_cols(QQ, [(QQ.one, QQ.zero)], ambient=2))
    chain = tensor_power_bracketed(shape_only, 3)
    assert chain.module(3).dim == 8
    r2 = chain.rebracket_front(2)
    for i in range(8):
        for j in range(8):
            v = r2.get(i, j)
            assert v == (QQ.zero if i != j else v)
            if i == j:
                assert v in (QQ.one, QQ.neg(QQ.one))
    assert any(r2.get(i, i) == QQ.neg(QQ.one) for i in range(8))


def test_z3_twisted_cocyclic():
    from qha.fields import prime_field
    from qha.quasihopf import (twisted_dual_group_algebra, cyclic_group_table,
                               z3_nontrivial_cocycle)
    from qha.coefficients import QUASI_I
    F7 = prime_field(7)
    H = twisted_dual_group_algebra(F7, cyclic_group_table(3),
                                   z3_nontrivial_cocycle(F7), "k^Z3_w")
    cc = build_cocyclic(unit_algebra(H), unit_coefficient(H, flavor=QUASI_I), 4)
    assert verify_cocyclic_identities(cc) is None
    assert hochschild_cohomology(cc, 3).dims == [1, 0, 0, 0]
    assert cyclic_cohomology(cc, 3).dims == [1, 0, 1, 0]
