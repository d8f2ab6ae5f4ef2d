import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from qha.fields import FieldError, rationals, prime_field
from qha.linalg import (Matrix, Subspace, ShapeError, kernel, solve,
                        quotient_section, tensor_index, intertwiner_space)

QQ = rationals()
F2 = prime_field(2)
F5 = prime_field(5)


def mat(field, rows):
    return Matrix.from_rows(field, [[field.from_int(x) for x in r] for r in rows])


def vec(field, xs):
    return tuple(field.from_int(x) for x in xs)


# -- independent oracles ------------------------------------------------------

def brute_force_kernel_gfp(field, m):
    """Enumerate all vectors of GF(p)^cols and keep those sent to zero."""
    sols = []
    for combo in itertools.product(field.elements(), repeat=m.cols):
        if all(x == 0 for x in m.apply(combo)):
            sols.append(combo)
    return sols


def test_field_errors():
    with pytest.raises(FieldError):
        prime_field(4)
    with pytest.raises(FieldError):
        prime_field(1)
    assert str(F5) == "GF(5)"
    assert F5.inv(F5.from_int(2)) == 3
    assert QQ.parse("-1/2") * 2 == -1


def test_kernel_rank_one_case():
    m = mat(QQ, [[1, 2], [2, 4]])
    k = kernel(m)
    assert k.dim == 1
    # span{(-2, 1)} in canonical form: leading coefficient normalised to 1
    assert k.basis == ((QQ.one, QQ.parse("1/2")),) or k.contains(vec(QQ, [-2, 1]))
    assert k.contains(vec(QQ, [-2, 1]))


def test_kernel_identity_case():
    m = Matrix.identity(QQ, 3)
    assert kernel(m).dim == 0


def test_kernel_gf2_against_brute_force():
    m = mat(F2, [[1, 1], [1, 1]])
    k = kernel(m)
    brute = [v for v in brute_force_kernel_gfp(F2, m) if any(x != 0 for x in v)]
    assert brute == [(1, 1)]
    assert k.dim == 1 and k.basis == ((1, 1),)


def test_solve_examples():
    eye = Matrix.identity(QQ, 3)
    v = vec(QQ, [3, -1, 2])
    assert solve(eye, v) == v

    zero = Matrix.zeros(QQ, 2, 2)
    assert solve(zero, vec(QQ, [1, 0])) is None

    d = mat(QQ, [[2, 0], [0, 3]])
    assert solve(d, vec(QQ, [1, 1])) == (QQ.parse("1/2"), QQ.parse("1/3"))


def test_quotient_section_trivial_relations():
    proj, lift = quotient_section(QQ, 3, Subspace.zero(QQ, 3))
    assert proj.is_identity() and lift.is_identity()


def test_quotient_section_line_in_plane():
    rel = Subspace.from_generators(QQ, 2, [vec(QQ, [1, -1])])
    proj, lift = quotient_section(QQ, 2, rel)
    assert proj.rows == 1 and lift.cols == 1
    assert (proj * lift).is_identity()
    assert all(x == 0 for x in proj.apply(vec(QQ, [1, -1])))


def test_quotient_section_gf5_random_relations():
    rng = random.Random(7)
    for _ in range(20):
        v = tuple(F5.from_int(rng.randrange(5)) for _ in range(3))
        if all(x == 0 for x in v):
            continue
        rel = Subspace.from_generators(F5, 3, [v])
        proj, lift = quotient_section(F5, 3, rel)
        assert proj.rows == 2
        assert (proj * lift).is_identity()
        # kernel of the projector recomputed from scratch equals the relations
        assert proj.kernel() == rel


def test_tensor_index():
    assert tensor_index(0, 0, 7) == 0
    assert tensor_index(1, 2, 3) == 5
    assert tensor_index(2, 0, 4) == 8
    with pytest.raises(ShapeError):
        tensor_index(0, 3, 3)
    with pytest.raises(ShapeError):
        tensor_index(-1, 0, 3)
    with pytest.raises(ShapeError):
        tensor_index(2, 0, 3, dim_v=2)


def test_intertwiner_space_unconstrained_and_identity():
    full = intertwiner_space(QQ, [], 2, 2)
    assert full.dim == 4
    eye = Matrix.identity(QQ, 2)
    same = intertwiner_space(QQ, [(eye, eye)], 2, 2)
    assert same.dim == 4


def test_intertwiner_space_c2_regular():
    # regular representation of C2: the swap matrix; commutant is 2-dim.
    swap = mat(QQ, [[0, 1], [1, 0]])
    space = intertwiner_space(QQ, [(swap, swap)], 2, 2)
    assert space.dim == 2
    # brute-force oracle: solve the 4x4 system X*swap = swap*X directly
    count = 0
    for entries in itertools.product([0, 1], repeat=4):
        x = mat(QQ, [entries[:2], entries[2:]])
        if x * swap == swap * x:
            count += 1
    assert count == 4  # over {0,1}^4: the 2-dim GF(2)-pattern has 4 points


def test_solve_matrix_and_inverse():
    m = mat(QQ, [[2, 1], [1, 1]])
    inv = m.inverse()
    assert (m * inv).is_identity() and (inv * m).is_identity()
    with pytest.raises(ShapeError):
        mat(QQ, [[1, 1], [1, 1]]).inverse()


small_entries = st.integers(min_value=-4, max_value=4)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.integers(2, 4), st.data())
def test_rank_nullity_rationals(rows, cols, data):
    entries = data.draw(st.lists(small_entries, min_size=rows * cols, max_size=rows * cols))
    m = Matrix(QQ, rows, cols, [QQ.from_int(x) for x in entries])
    assert m.kernel().dim + m.rank() == cols


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_kernel_vectors_annihilate(rows, cols, data):
    entries = data.draw(st.lists(st.integers(0, 4), min_size=rows * cols, max_size=rows * cols))
    m = Matrix(F5, rows, cols, entries)
    k = m.kernel()
    for v in k.basis:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.data())
def test_subspace_canonical_under_permutation(n, data):
    gens = data.draw(st.lists(
        st.lists(small_entries, min_size=n, max_size=n), min_size=1, max_size=4))
    gens = [tuple(QQ.from_int(x) for x in g) for g in gens]
    s1 = Subspace.from_generators(QQ, n, gens)
    s2 = Subspace.from_generators(QQ, n, list(reversed(gens)))
    assert s1.basis == s2.basis


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.data())
def test_quotient_section_contract(n, data):
    gens = data.draw(st.lists(
        st.lists(st.integers(0, 4), min_size=n, max_size=n), min_size=0, max_size=3))
    rel = Subspace.from_generators(F5, n, gens)
    proj, lift = quotient_section(F5, n, rel)
    assert (proj * lift).is_identity()
    for r in rel.basis:
        assert all(x == 0 for x in proj.apply(r))
    assert proj.kernel() == rel
