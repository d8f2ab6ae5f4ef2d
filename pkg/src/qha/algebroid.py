"""Hopf algebroids over a noncommutative base ring, by structure constants.

The coproducts of a bialgebroid land in tensor products over the base, so
they are stored as chosen k-linear lifts into H (x) H together with the
relation subspaces that define the quotients.  Every identity "modulo
relations" is checked by projecting with a canonical quotient section, and
the checks verify that stored lifts are compatible with the relations
(Takeuchi membership, bimodule properties) rather than assuming it.

The left base ring R is the stored one; the right base is represented as
the same carrier with opposite multiplication.
"""

from __future__ import annotations

from functools import cached_property

from .fields import Field
from .linalg import (Matrix, Subspace, ShapeError, quotient_section,
                     intertwiner_space, basis_vec)
from .reports import CheckReport
from .quasihopf import (HModule, QuasiHopfAlgebra, StructureError, IntertwinerError,
                        max_tensor_dim, is_intertwiner)


class BaseRing:
    """An associative unital algebra over the scalar field (the base R)."""

    def __init__(self, field: Field, dim: int, mult, unit, name: str = "R"):
        if dim <= 0:
            raise StructureError("base ring must have positive dimension")
        self.field = field
        self.dim = dim
        self.mult = tuple(mult)
        self.unit = tuple(unit)
        self.name = name
        if len(self.mult) != dim ** 3 or len(self.unit) != dim:
            raise StructureError("base ring tensors have wrong shape")

    def mult_vec(self, a, b):
        f = self.field
        n = self.dim
        out = [f.zero] * n
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb == 0:
                    continue
                c = f.mul(ca, cb)
                base = (i * n + j) * n
                for k in range(n):
                    m = self.mult[base + k]
                    if m != 0:
                        out[k] = f.add(out[k], f.mul(c, m))
        return tuple(out)

    def basis(self, i: int):
        return basis_vec(self.field, self.dim, i)

    def validate(self) -> CheckReport:
        rep = CheckReport()
        n = self.dim
        ok, wit = True, None
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.mult_vec(self.mult_vec(self.basis(i), self.basis(j)),
                                        self.basis(k))
                    rhs = self.mult_vec(self.basis(i),
                                        self.mult_vec(self.basis(j), self.basis(k)))
                    if lhs != rhs:
                        ok, wit = False, (("i", i), ("j", j), ("k", k))
                        break
                if not ok:
                    break
            if not ok:
                break
        rep.add("base_associative", ok, wit)
        ok = all(self.mult_vec(self.unit, self.basis(i)) == self.basis(i)
                 and self.mult_vec(self.basis(i), self.unit) == self.basis(i)
                 for i in range(n))
        rep.add("base_unital", ok)
        return rep

    def __repr__(self):
        return "BaseRing(%s, dim %d over %s)" % (self.name, self.dim, self.field)


class HopfAlgebroid:
    """Structure data (H, s_l, t_l, s_r, t_r, Delta_l, Delta_r, eps_l, eps_r, S).

    Source/target maps are stored as dim(H) x dim(R) matrices, the coproduct
    lifts as dim(H)^2 x dim(H) matrices (column i lifts Delta(e_i)), and the
    counits as dim(R) x dim(H) matrices.
    """

    def __init__(self, base: BaseRing, dim: int, mult, unit,
                 s_l: Matrix, t_l: Matrix, s_r: Matrix, t_r: Matrix,
                 delta_l_lift: Matrix, delta_r_lift: Matrix,
                 eps_l: Matrix, eps_r: Matrix,
                 antipode: Matrix, antipode_inv: Matrix, name: str = ""):
        self.base = base
        self.field = base.field
        self.dim = dim
        self.mult = tuple(mult)
        self.unit = tuple(unit)
        self.s_l, self.t_l, self.s_r, self.t_r = s_l, t_l, s_r, t_r
        self.delta_l_lift = delta_l_lift
        self.delta_r_lift = delta_r_lift
        self.eps_l, self.eps_r = eps_l, eps_r
        self.antipode = antipode
        self.antipode_inv = antipode_inv
        self.name = name or "H"
        n, r = dim, base.dim
        if len(self.mult) != n ** 3 or len(self.unit) != n:
            raise StructureError("algebra tensors have wrong shape")
        for m, shape in ((s_l, (n, r)), (t_l, (n, r)), (s_r, (n, r)), (t_r, (n, r)),
                         (delta_l_lift, (n * n, n)), (delta_r_lift, (n * n, n)),
                         (eps_l, (r, n)), (eps_r, (r, n)),
                         (antipode, (n, n)), (antipode_inv, (n, n))):
            if (m.rows, m.cols) != shape:
                raise StructureError("structure matrix has shape %dx%d, want %dx%d"
                                     % (m.rows, m.cols, *shape))

    # -- algebra plumbing ---------------------------------------------------

    @cached_property
    def _mult_sparse(self):
        n = self.dim
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                base = (i * n + j) * n
                row.append(tuple((k, self.mult[base + k]) for k in range(n)
                                 if self.mult[base + k] != 0))
            table.append(tuple(row))
        return tuple(table)

    def mult_vec(self, a, b):
        f = self.field
        out = [f.zero] * self.dim
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            row = self._mult_sparse[i]
            for j, cb in enumerate(b):
                if cb == 0:
                    continue
                c = f.mul(ca, cb)
                for k, ck in row[j]:
                    out[k] = f.add(out[k], f.mul(c, ck))
        return tuple(out)

    def prod(self, *vecs):
        out = vecs[0]
        for v in vecs[1:]:
            out = self.mult_vec(out, v)
        return out

    def basis(self, i: int):
        return basis_vec(self.field, self.dim, i)

    def apply_s(self, vec):
        return self.antipode.apply(vec)

    def apply_s_inv(self, vec):
        return self.antipode_inv.apply(vec)

    def s_l_vec(self, rvec):
        return self.s_l.apply(rvec)

    def t_l_vec(self, rvec):
        return self.t_l.apply(rvec)

    def s_r_vec(self, rvec):
        return self.s_r.apply(rvec)

    def t_r_vec(self, rvec):
        return self.t_r.apply(rvec)

    def delta_l_terms(self, i: int):
        return self._delta_terms(self.delta_l_lift, i)

    def delta_r_terms(self, i: int):
        return self._delta_terms(self.delta_r_lift, i)

    def _delta_terms(self, lift: Matrix, i: int):
        n = self.dim
        col = lift.col(i)
        return tuple((col[p * n + q], p, q) for p in range(n) for q in range(n)
                     if col[p * n + q] != 0)

    def left_mult_matrix(self, vec) -> Matrix:
        cols = [self.mult_vec(vec, self.basis(j)) for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, ambient=self.dim)

    def right_mult_matrix(self, vec) -> Matrix:
        cols = [self.mult_vec(self.basis(j), vec) for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, ambient=self.dim)

    # -- relation subspaces --------------------------------------------------

    @cached_property
    def rel_l(self) -> Subspace:
        """Relations of H (x)_{R_l} H: t_l(r) x (x) y - x (x) s_l(r) y."""
        return self._pair_relations(
            lambda b: self.left_mult_matrix(self.t_l.col(b)),
            lambda b: self.left_mult_matrix(self.s_l.col(b)))

    @cached_property
    def rel_r(self) -> Subspace:
        """Relations of H (x)_{R_r} H: x s_r(a) (x) y - x (x) y t_r(a)."""
        return self._pair_relations(
            lambda b: self.right_mult_matrix(self.s_r.col(b)),
            lambda b: self.right_mult_matrix(self.t_r.col(b)))

    def _pair_relations(self, first_op, second_op) -> Subspace:
        f = self.field
        n = self.dim
        gens = []
        for b in range(self.base.dim):
            op1, op2 = first_op(b), second_op(b)
            for x in range(n):
                c1 = op1.col(x)
                for y in range(n):
                    vec = [f.zero] * (n * n)
                    for i, v in enumerate(c1):
                        if v != 0:
                            vec[i * n + y] = v
                    c2 = op2.col(y)
                    for j, v in enumerate(c2):
                        if v != 0:
                            vec[x * n + j] = f.sub(vec[x * n + j], v)
                    gens.append(tuple(vec))
        return Subspace.from_generators(f, n * n, gens)

    def structural_key(self):
        return ("algebroid", self.dim, self.base.dim, self.mult, self.unit,
                self.s_l.entries, self.t_l.entries, self.s_r.entries,
                self.t_r.entries, self.delta_l_lift.entries,
                self.delta_r_lift.entries, self.eps_l.entries, self.eps_r.entries,
                self.antipode.entries)

    def __repr__(self):
        return "HopfAlgebroid(%s, dim %d over base dim %d)" % (
            self.name, self.dim, self.base.dim)


class AlgebroidModule(HModule):
    """A left module over the underlying algebra of a Hopf algebroid."""


def regular_algebroid_module(H: HopfAlgebroid) -> AlgebroidModule:
    mats = [H.left_mult_matrix(H.basis(i)) for i in range(H.dim)]
    return AlgebroidModule(H, mats, name="regular")


def base_module(H: HopfAlgebroid) -> AlgebroidModule:
    """The monoidal unit: the base R with action h . r = eps_l(h s_l(r))."""
    f = H.field
    r = H.base.dim
    mats = []
    for i in range(H.dim):
        cols = [H.eps_l.apply(H.mult_vec(H.basis(i), H.s_l.col(j)))
                for j in range(r)]
        mats.append(Matrix.from_cols(f, cols, ambient=r))
    return AlgebroidModule(H, mats, name="R")


class RelationSpace:
    """The base-tensor relations of M (x)_{R_l} N with a canonical section."""

    def __init__(self, field, ambient_dim: int, relations: Subspace):
        self.field = field
        self.ambient_dim = ambient_dim
        self.relations = relations
        self.projector, self.lift = quotient_section(field, ambient_dim, relations)

    @property
    def quotient_dim(self) -> int:
        return self.ambient_dim - self.relations.dim

    def __repr__(self):
        return "RelationSpace(ambient %d, relations %d)" % (
            self.ambient_dim, self.relations.dim)


def module_tensor_relations(M: AlgebroidModule, N: AlgebroidModule) -> RelationSpace:
    H = M.parent
    f = H.field
    gens = []
    for b in range(H.base.dim):
        tl = M.act(H.t_l.col(b))
        sl = N.act(H.s_l.col(b))
        for x in range(M.dim):
            c1 = tl.col(x)
            for y in range(N.dim):
                vec = [f.zero] * (M.dim * N.dim)
                for i, v in enumerate(c1):
                    if v != 0:
                        vec[i * N.dim + y] = v
                c2 = sl.col(y)
                for j, v in enumerate(c2):
                    if v != 0:
                        vec[x * N.dim + j] = f.sub(vec[x * N.dim + j], v)
                gens.append(tuple(vec))
    return RelationSpace(f, M.dim * N.dim, Subspace.from_generators(f, M.dim * N.dim, gens))


def tensor_over_base(M: AlgebroidModule, N: AlgebroidModule):
    """M (x)_{R_l} N with the Delta_l-induced action.

    Returns (module, RelationSpace).  Raises StructureError with a witness
    when the ambient diagonal action fails to preserve the relations (the
    action would then be ill-defined on the quotient).
    """
    if M.parent is not N.parent:
        raise StructureError("tensor factors must share a parent algebroid")
    H = M.parent
    f = H.field
    if M.dim * N.dim > max_tensor_dim():
        raise StructureError("tensor dimension %d exceeds QHA_MAX_DIM" % (M.dim * N.dim))
    rel = module_tensor_relations(M, N)
    amb = []
    for i in range(H.dim):
        m = Matrix.zeros(f, M.dim * N.dim, M.dim * N.dim)
        for c, p, q in H.delta_l_terms(i):
            m = m + M.mats[p].kron(N.mats[q]).scale(c)
        amb.append(m)
    for i in range(H.dim):
        for v in rel.relations.basis:
            if not rel.relations.contains(amb[i].apply(v)):
                raise StructureError(
                    "tensor action ill-defined: basis element %d maps a relation "
                    "outside the relation space" % i)
    mats = [rel.projector * a * rel.lift for a in amb]
    mod = AlgebroidModule(H, mats, name="(%s)x_R(%s)" % (M.name, N.name))
    return mod, rel


# -- internal homs over the base ------------------------------------------------

def right_linear_hom_basis(M: AlgebroidModule, N: AlgebroidModule) -> Subspace:
    """Hom(M, N)_{R_l}: maps commuting with every t_l(r)-action."""
    H = M.parent
    pairs = [(M.act(H.t_l.col(b)), N.act(H.t_l.col(b))) for b in range(H.base.dim)]
    return intertwiner_space(H.field, pairs, N.dim, M.dim)


def left_linear_hom_basis(M: AlgebroidModule, N: AlgebroidModule) -> Subspace:
    """Hom_{R_l}(M, N): maps commuting with every s_l(r)-action."""
    H = M.parent
    pairs = [(M.act(H.s_l.col(b)), N.act(H.s_l.col(b))) for b in range(H.base.dim)]
    return intertwiner_space(H.field, pairs, N.dim, M.dim)


def _hom_action_subspace(M: AlgebroidModule, V: AlgebroidModule, basis: Subspace,
                         legs_fn) -> AlgebroidModule:
    """Express a full-carrier hom action in the coordinates of a sub-carrier."""
    H = M.parent
    f = H.field
    bmat = basis.basis_matrix()
    mats = []
    for i in range(H.dim):
        full = Matrix.zeros(f, M.dim * V.dim, M.dim * V.dim)
        for c, post_vec, pre_vec in legs_fn(i):
            full = full + M.act(post_vec).kron(V.act(pre_vec).transpose()).scale(c)
        sub = bmat.solve_matrix(full * bmat)
        if sub is None:
            raise StructureError("hom action does not preserve the base-linear carrier")
        mats.append(sub)
    return AlgebroidModule(H, mats)


def left_hom_algebroid(V: AlgebroidModule, M: AlgebroidModule):
    """Hom^l(V, M) = Hom(V, M)_{R_l} with h.phi = h^1 phi(S(h^2) -), Delta_r legs.

    Returns (module, basis) where basis is the canonical carrier subspace of
    Hom_k(V, M)."""
    if V.parent is not M.parent:
        raise StructureError("hom factors must share a parent algebroid")
    H = V.parent
    basis = right_linear_hom_basis(V, M)

    def legs(i):
        return [(c, H.basis(p), H.apply_s(H.basis(q)))
                for c, p, q in H.delta_r_terms(i)]

    mod = _hom_action_subspace(M, V, basis, legs)
    mod.name = "Hom^l(%s,%s)" % (V.name, M.name)
    return mod, basis


def right_hom_algebroid(V: AlgebroidModule, M: AlgebroidModule):
    """Hom^r(V, M) = Hom_{R_l}(V, M) with h.phi = h^2 phi(S^-1(h^1) -), Delta_r legs."""
    if V.parent is not M.parent:
        raise StructureError("hom factors must share a parent algebroid")
    H = V.parent
    basis = left_linear_hom_basis(V, M)

    def legs(i):
        return [(c, H.basis(q), H.apply_s_inv(H.basis(p)))
                for c, p, q in H.delta_r_terms(i)]

    mod = _hom_action_subspace(M, V, basis, legs)
    mod.name = "Hom^r(%s,%s)" % (V.name, M.name)
    return mod, basis


# -- adjunctions (strict evaluations over the base) -------------------------------

def ev_l_algebroid(V: AlgebroidModule, M: AlgebroidModule):
    """ev^l: Hom^l(V,M) (x)_{R_l} V -> M, phi (x) v |-> phi(v).

    Returns (matrix on the quotient carrier, hom module, hom basis, tensor data).
    """
    hom_mod, hom_basis = left_hom_algebroid(V, M)
    tens, rel = tensor_over_base(hom_mod, V)
    f = M.parent.field
    amb_cols = []
    bm = hom_basis.basis_matrix()
    for c in range(hom_mod.dim):
        fmat = Matrix(f, M.dim, V.dim, bm.col(c))
        for v in range(V.dim):
            amb_cols.append(fmat.col(v))
    amb = Matrix.from_cols(f, amb_cols, ambient=M.dim)
    ev = amb * rel.lift
    if ev * rel.projector != amb:
        raise StructureError("ev^l is not constant on tensor relation classes")
    return ev, hom_mod, hom_basis, (tens, rel)


def ev_r_algebroid(V: AlgebroidModule, M: AlgebroidModule):
    """ev^r: V (x)_{R_l} Hom^r(V,M) -> M, v (x) phi |-> phi(v)."""
    hom_mod, hom_basis = right_hom_algebroid(V, M)
    tens, rel = tensor_over_base(V, hom_mod)
    f = M.parent.field
    bm = hom_basis.basis_matrix()
    amb_cols = []
    for v in range(V.dim):
        for c in range(hom_mod.dim):
            fmat = Matrix(f, M.dim, V.dim, bm.col(c))
            amb_cols.append(fmat.col(v))
    amb = Matrix.from_cols(f, amb_cols, ambient=M.dim)
    ev = amb * rel.lift
    if ev * rel.projector != amb:
        raise StructureError("ev^r is not constant on tensor relation classes")
    return ev, hom_mod, hom_basis, (tens, rel)


def zeta_l_algebroid(f_mat: Matrix, M: AlgebroidModule, N: AlgebroidModule,
                     L: AlgebroidModule) -> Matrix:
    """zeta^l: Hom_H(M (x)_R N, L) -> Hom_H(M, Hom^l(N, L)), f |-> (m |-> f(m (x) -)).

    Input and output are verified H-module morphisms; coordinates on the
    target side are taken in the canonical hom-carrier basis."""
    H = M.parent
    f = H.field
    tens, rel = tensor_over_base(M, N)
    _check_morphism(f_mat, tens, L, "zeta_l input")
    hom_mod, hom_basis = left_hom_algebroid(N, L)
    cols = []
    for i in range(M.dim):
        full = []
        for a in range(L.dim):
            for j in range(N.dim):
                amb = [f.zero] * (M.dim * N.dim)
                amb[i * N.dim + j] = f.one
                val = f_mat.apply(rel.projector.apply(amb))
                full.append(val[a])
        coords = hom_basis.coordinates(tuple(full))
        if coords is None:
            raise IntertwinerError("zeta_l image is not base-linear")
        cols.append(coords)
    out = Matrix.from_cols(f, cols, ambient=hom_mod.dim)
    _check_morphism(out, M, hom_mod, "zeta_l output")
    return out


def eta_l_algebroid(g_mat: Matrix, M: AlgebroidModule, N: AlgebroidModule,
                    L: AlgebroidModule) -> Matrix:
    """eta^l(g) = ev^l o (g (x) id): back to Hom_H(M (x)_R N, L)."""
    H = M.parent
    f = H.field
    hom_mod, hom_basis = left_hom_algebroid(N, L)
    _check_morphism(g_mat, M, hom_mod, "eta_l input")
    tens, rel = tensor_over_base(M, N)
    bm = hom_basis.basis_matrix()
    amb_cols = []
    for i in range(M.dim):
        gfull = Matrix(f, L.dim, N.dim, bm.apply(g_mat.col(i)))
        for j in range(N.dim):
            amb_cols.append(gfull.col(j))
    amb = Matrix.from_cols(f, amb_cols, ambient=L.dim)
    out = amb * rel.lift
    if out * rel.projector != amb:
        raise StructureError("eta_l image not constant on relation classes")
    _check_morphism(out, tens, L, "eta_l output")
    return out


def zeta_r_algebroid(f_mat: Matrix, N: AlgebroidModule, M: AlgebroidModule,
                     L: AlgebroidModule) -> Matrix:
    """zeta^r: Hom_H(N (x)_R M, L) -> Hom_H(M, Hom^r(N, L)), f |-> (m |-> f(- (x) m))."""
    H = M.parent
    f = H.field
    tens, rel = tensor_over_base(N, M)
    _check_morphism(f_mat, tens, L, "zeta_r input")
    hom_mod, hom_basis = right_hom_algebroid(N, L)
    cols = []
    for i in range(M.dim):
        full = []
        for a in range(L.dim):
            for j in range(N.dim):
                amb = [f.zero] * (N.dim * M.dim)
                amb[j * M.dim + i] = f.one
                val = f_mat.apply(rel.projector.apply(amb))
                full.append(val[a])
        coords = hom_basis.coordinates(tuple(full))
        if coords is None:
            raise IntertwinerError("zeta_r image is not base-linear")
        cols.append(coords)
    out = Matrix.from_cols(f, cols, ambient=hom_mod.dim)
    _check_morphism(out, M, hom_mod, "zeta_r output")
    return out


def eta_r_algebroid(g_mat: Matrix, N: AlgebroidModule, M: AlgebroidModule,
                    L: AlgebroidModule) -> Matrix:
    """eta^r(g) = ev^r o (id (x) g): back to Hom_H(N (x)_R M, L)."""
    H = M.parent
    f = H.field
    hom_mod, hom_basis = right_hom_algebroid(N, L)
    _check_morphism(g_mat, M, hom_mod, "eta_r input")
    tens, rel = tensor_over_base(N, M)
    bm = hom_basis.basis_matrix()
    amb_cols = []
    for j in range(N.dim):
        for i in range(M.dim):
            gfull = Matrix(f, L.dim, N.dim, bm.apply(g_mat.col(i)))
            amb_cols.append(gfull.col(j))
    amb = Matrix.from_cols(f, amb_cols, ambient=L.dim)
    out = amb * rel.lift
    if out * rel.projector != amb:
        raise StructureError("eta_r image not constant on relation classes")
    _check_morphism(out, tens, L, "eta_r output")
    return out


def _check_morphism(f_mat: Matrix, src, dst, what: str):
    if f_mat.rows != dst.dim or f_mat.cols != src.dim:
        raise ShapeError("%s must be %dx%d, got %dx%d"
                         % (what, dst.dim, src.dim, f_mat.rows, f_mat.cols))
    if not is_intertwiner(f_mat, src, dst):
        raise IntertwinerError("%s is not an H-module morphism" % what)


def eval_adjunctions_algebroid(M: AlgebroidModule, N: AlgebroidModule,
                               L: AlgebroidModule) -> dict:
    """The biclosed-structure maps for the triple (M, N, L) at matrix level.

    Returns the two evaluation matrices together with closures for the four
    adjunction maps; the evaluations are verified H-module morphisms."""
    ev_l, hl_mod, _, (tens_l, _) = ev_l_algebroid(N, L)
    ev_r, hr_mod, _, (tens_r, _) = ev_r_algebroid(N, L)
    _check_morphism(ev_l, tens_l, L, "ev^l")
    _check_morphism(ev_r, tens_r, L, "ev^r")
    return {
        "ev_l": ev_l,
        "ev_r": ev_r,
        "zeta_l": lambda fm: zeta_l_algebroid(fm, M, N, L),
        "eta_l": lambda gm: eta_l_algebroid(gm, M, N, L),
        "zeta_r": lambda fm: zeta_r_algebroid(fm, N, M, L),
        "eta_r": lambda gm: eta_r_algebroid(gm, N, M, L),
    }


# -- axiom checks -------------------------------------------------------------

def _pair_dict(terms):
    return {(p, q): c for c, p, q in terms}


def _tensor2_vec(f, n, terms):
    out = [f.zero] * (n * n)
    for c, p, q in terms:
        out[p * n + q] = f.add(out[p * n + q], c)
    return tuple(out)


def _mult_into_leg(H, terms, vec, leg, side):
    """Multiply one leg of a 2-tensor by a fixed element of H."""
    f = H.field
    out = []
    for c, p, q in terms:
        if leg == 0:
            prod = H.mult_vec(vec, H.basis(p)) if side == "l" else \
                H.mult_vec(H.basis(p), vec)
            for k, v in enumerate(prod):
                if v != 0:
                    out.append((f.mul(c, v), k, q))
        else:
            prod = H.mult_vec(vec, H.basis(q)) if side == "l" else \
                H.mult_vec(H.basis(q), vec)
            for k, v in enumerate(prod):
                if v != 0:
                    out.append((f.mul(c, v), p, k))
    return out


def check_algebroid_structure(H: HopfAlgebroid) -> CheckReport:
    """Ring-map invariants: algebra axioms, source/target (anti)homomorphisms
    with commuting images, and the antipode pair."""
    f = H.field
    n, r = H.dim, H.base.dim
    rep = CheckReport()
    rep.extend(H.base.validate())

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = H.mult_vec(H.mult_vec(H.basis(i), H.basis(j)), H.basis(k))
                rhs = H.mult_vec(H.basis(i), H.mult_vec(H.basis(j), H.basis(k)))
                if lhs != rhs:
                    ok, wit = False, (("i", i), ("j", j), ("k", k))
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("mult_associative", ok, wit)
    rep.add("mult_unital", all(
        H.mult_vec(H.unit, H.basis(i)) == H.basis(i)
        and H.mult_vec(H.basis(i), H.unit) == H.basis(i) for i in range(n)))

    def is_hom(mat, opposite):
        for a in range(r):
            for b in range(r):
                rab = H.base.mult_vec(H.base.basis(a), H.base.basis(b))
                lhs = mat.apply(rab)
                if opposite:
                    rhs = H.mult_vec(mat.col(b), mat.col(a))
                else:
                    rhs = H.mult_vec(mat.col(a), mat.col(b))
                if lhs != rhs:
                    return False
        return mat.apply(H.base.unit) == H.unit

    rep.add("s_l_homomorphism", is_hom(H.s_l, opposite=False))
    rep.add("t_l_antihomomorphism", is_hom(H.t_l, opposite=True))
    # s_r is an algebra map from R^op, t_r from (R^op)^op = R
    rep.add("s_r_homomorphism_op", is_hom(H.s_r, opposite=True))
    rep.add("t_r_homomorphism", is_hom(H.t_r, opposite=False))

    rep.add("left_images_commute", all(
        H.mult_vec(H.s_l.col(a), H.t_l.col(b)) == H.mult_vec(H.t_l.col(b), H.s_l.col(a))
        for a in range(r) for b in range(r)))
    rep.add("right_images_commute", all(
        H.mult_vec(H.s_r.col(a), H.t_r.col(b)) == H.mult_vec(H.t_r.col(b), H.s_r.col(a))
        for a in range(r) for b in range(r)))

    eye = Matrix.identity(f, n)
    rep.add("antipode_inverse_pair",
            H.antipode * H.antipode_inv == eye and H.antipode_inv * H.antipode == eye)
    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            lhs = H.apply_s(H.mult_vec(H.basis(i), H.basis(j)))
            rhs = H.mult_vec(H.apply_s(H.basis(j)), H.apply_s(H.basis(i)))
            if lhs != rhs:
                ok, wit = False, (("i", i), ("j", j))
                break
        if not ok:
            break
    rep.add("antipode_antihom", ok and H.apply_s(H.unit) == H.unit, wit)
    return rep


def check_left_bialgebroid(H: HopfAlgebroid) -> CheckReport:
    """The left bialgebroid axioms, all identities taken modulo the
    (x)_{R_l} relation subspace(s)."""
    f = H.field
    n, r = H.dim, H.base.dim
    rep = CheckReport()
    rel = H.rel_l

    ok, wit = True, None
    for b in range(r):
        for i in range(n):
            sl = H.s_l.col(b)
            lhs = _tensor2_vec(f, n, _expand_delta(H, H.delta_l_lift,
                                                   H.mult_vec(sl, H.basis(i))))
            rhs = _tensor2_vec(f, n, _mult_into_leg(H, H.delta_l_terms(i), sl, 0, "l"))
            if not rel.contains(tuple(f.sub(x, y) for x, y in zip(lhs, rhs))):
                ok, wit = False, (("r", b), ("b", i), ("side", 0))
                break
            tl = H.t_l.col(b)
            lhs = _tensor2_vec(f, n, _expand_delta(H, H.delta_l_lift,
                                                   H.mult_vec(tl, H.basis(i))))
            rhs = _tensor2_vec(f, n, _mult_into_leg(H, H.delta_l_terms(i), tl, 1, "l"))
            if not rel.contains(tuple(f.sub(x, y) for x, y in zip(lhs, rhs))):
                ok, wit = False, (("r", b), ("b", i), ("side", 1))
                break
        if not ok:
            break
    rep.add("delta_l_bimodule", ok, wit)

    rel3 = _triple_relations(H, ("l", "l"))
    ok, wit = True, None
    for i in range(n):
        lhs = _delta3(H, H.delta_l_lift, H.delta_l_lift, i, expand_first=True)
        rhs = _delta3(H, H.delta_l_lift, H.delta_l_lift, i, expand_first=False)
        diff = tuple(f.sub(x, y) for x, y in zip(lhs, rhs))
        if not rel3.contains(diff):
            ok, wit = False, (("b", i),)
            break
    rep.add("delta_l_coassoc", ok, wit)

    ok, wit = True, None
    for i in range(n):
        acc1 = tuple([f.zero] * n)
        acc2 = tuple([f.zero] * n)
        for c, p, q in H.delta_l_terms(i):
            term1 = H.mult_vec(H.s_l.apply(H.eps_l.apply(H.basis(p))), H.basis(q))
            acc1 = tuple(f.add(x, f.mul(c, t)) for x, t in zip(acc1, term1))
            term2 = H.mult_vec(H.t_l.apply(H.eps_l.apply(H.basis(q))), H.basis(p))
            acc2 = tuple(f.add(x, f.mul(c, t)) for x, t in zip(acc2, term2))
        if acc1 != H.basis(i) or acc2 != H.basis(i):
            ok, wit = False, (("b", i),)
            break
    rep.add("delta_l_counital", ok, wit)

    ok, wit = True, None
    for a in range(r):
        for b in range(r):
            for i in range(n):
                val = H.mult_vec(H.mult_vec(H.s_l.col(a), H.t_l.col(b)), H.basis(i))
                lhs = H.eps_l.apply(val)
                rhs = H.base.mult_vec(H.base.mult_vec(H.base.basis(a),
                                                      H.eps_l.apply(H.basis(i))),
                                      H.base.basis(b))
                if lhs != rhs:
                    ok, wit = False, (("r", a), ("rp", b), ("b", i))
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("eps_l_bimodule", ok, wit)

    ok, wit = True, None
    for i in range(n):
        for b in range(r):
            tlr = H.t_l.col(b)
            slr = H.s_l.col(b)
            one = _tensor2_vec(f, n, _mult_into_leg(H, H.delta_l_terms(i), tlr, 0, "r"))
            two = _tensor2_vec(f, n, _mult_into_leg(H, H.delta_l_terms(i), slr, 1, "r"))
            if not rel.contains(tuple(f.sub(x, y) for x, y in zip(one, two))):
                ok, wit = False, (("b", i), ("r", b))
                break
        if not ok:
            break
    rep.add("takeuchi_left", ok, wit)

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            prod = H.mult_vec(H.basis(i), H.basis(j))
            lhs = _tensor2_vec(f, n, _expand_delta(H, H.delta_l_lift, prod))
            rhs = _pair_product(H, H.delta_l_terms(i), H.delta_l_terms(j))
            if not rel.contains(tuple(f.sub(x, y) for x, y in zip(lhs, rhs))):
                ok, wit = False, (("b", i), ("bp", j))
                break
        if not ok:
            break
    uvec = [f.zero] * (n * n)
    for p, cp in enumerate(H.unit):
        if cp != 0:
            for q, cq in enumerate(H.unit):
                if cq != 0:
                    uvec[p * n + q] = f.mul(cp, cq)
    lhsu = _tensor2_vec(f, n, _expand_delta(H, H.delta_l_lift, H.unit))
    unit_ok = rel.contains(tuple(f.sub(x, y) for x, y in zip(lhsu, uvec)))
    rep.add("delta_l_multiplicative", ok and unit_ok, wit)

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            prod = H.mult_vec(H.basis(i), H.basis(j))
            lhs = H.eps_l.apply(prod)
            mid = H.eps_l.apply(H.mult_vec(
                H.basis(i), H.s_l.apply(H.eps_l.apply(H.basis(j)))))
            rgt = H.eps_l.apply(H.mult_vec(
                H.basis(i), H.t_l.apply(H.eps_l.apply(H.basis(j)))))
            if lhs != mid or lhs != rgt:
                ok, wit = False, (("b", i), ("bp", j))
                break
        if not ok:
            break
    rep.add("eps_l_character", ok, wit)
    return rep


def _expand_delta(H: HopfAlgebroid, lift: Matrix, vec):
    """Delta of an arbitrary element through the stored lift, as sparse terms."""
    f = H.field
    n = H.dim
    out = []
    for i, c in enumerate(vec):
        if c == 0:
            continue
        for cd, p, q in H._delta_terms(lift, i):
            out.append((f.mul(c, cd), p, q))
    return out


def _pair_product(H: HopfAlgebroid, terms1, terms2):
    """Componentwise product of two lifted 2-tensors, as a dense vector."""
    f = H.field
    n = H.dim
    out = [f.zero] * (n * n)
    for c1, p1, q1 in terms1:
        for c2, p2, q2 in terms2:
            c = f.mul(c1, c2)
            left = H.mult_vec(H.basis(p1), H.basis(p2))
            right = H.mult_vec(H.basis(q1), H.basis(q2))
            for k, lv in enumerate(left):
                if lv == 0:
                    continue
                for l, rv in enumerate(right):
                    if rv != 0:
                        out[k * n + l] = f.add(out[k * n + l],
                                               f.mul(c, f.mul(lv, rv)))
    return tuple(out)


def _triple_relations(H: HopfAlgebroid, kinds) -> Subspace:
    """Relation subspace of H^(x)3 for the pair of tensor signs in ``kinds``:
    "l" for (x)_{R_l} (t_l x (x) y - x (x) s_l y), "r" for (x)_{R_r}."""
    f = H.field
    n = H.dim
    gens = []
    for pos, kind in enumerate(kinds):       # pos 0: between slots 1|2, pos 1: 2|3
        if kind == "l":
            pair = H.rel_l
        else:
            pair = H.rel_r
        for v in pair.basis:
            for extra in range(n):
                vec = [f.zero] * (n ** 3)
                for idx, c in enumerate(v):
                    if c == 0:
                        continue
                    p, q = divmod(idx, n)
                    if pos == 0:
                        vec[(p * n + q) * n + extra] = c
                    else:
                        vec[(extra * n + p) * n + q] = c
                gens.append(tuple(vec))
    return Subspace.from_generators(f, n ** 3, gens)


def _delta3(H: HopfAlgebroid, lift_outer: Matrix, lift_inner: Matrix, i: int,
            expand_first: bool):
    """(Delta (x) id) Delta or (id (x) Delta) Delta through stored lifts."""
    f = H.field
    n = H.dim
    out = [f.zero] * (n ** 3)
    for c, p, q in H._delta_terms(lift_outer, i):
        if expand_first:
            for c2, a, b in H._delta_terms(lift_inner, p):
                out[(a * n + b) * n + q] = f.add(out[(a * n + b) * n + q],
                                                 f.mul(c, c2))
        else:
            for c2, a, b in H._delta_terms(lift_inner, q):
                out[(p * n + a) * n + b] = f.add(out[(p * n + a) * n + b],
                                                 f.mul(c, c2))
    return tuple(out)


def check_right_bialgebroid(H: HopfAlgebroid) -> CheckReport:
    """Mirror of the left bialgebroid axioms for (Delta_r, eps_r) over R^op."""
    f = H.field
    n, r = H.dim, H.base.dim
    rep = CheckReport()
    rel = H.rel_r

    def op_mult(a, b):
        return H.base.mult_vec(b, a)

    ok, wit = True, None
    for b in range(r):
        for i in range(n):
            # r . b = b t_r(r): first leg multiplied on the right by t_r(r)
            tr = H.t_r.col(b)
            lhs = _tensor2_vec(f, n, _expand_delta(H, H.delta_r_lift,
                                                   H.mult_vec(H.basis(i), tr)))
            rhs = _tensor2_vec(f, n, _mult_into_leg(H, H.delta_r_terms(i), tr, 0, "r"))
            if not rel.contains(tuple(f.sub(x, y) for x, y in zip(lhs, rhs))):
                ok, wit = False, (("r", b), ("b", i), ("side", 0))
                break
            sr = H.s_r.col(b)
            lhs = _tensor2_vec(f, n, _expand_delta(H, H.delta_r_lift,
                                                   H.mult_vec(H.basis(i), sr)))
            rhs = _tensor2_vec(f, n, _mult_into_leg(H, H.delta_r_terms(i), sr, 1, "r"))
            if not rel.contains(tuple(f.sub(x, y) for x, y in zip(lhs, rhs))):
                ok, wit = False, (("r", b), ("b", i), ("side", 1))
                break
        if not ok:
            break
    rep.add("delta_r_bimodule", ok, wit)

    rel3 = _triple_relations(H, ("r", "r"))
    ok, wit = True, None
    for i in range(n):
        lhs = _delta3(H, H.delta_r_lift, H.delta_r_lift, i, expand_first=True)
        rhs = _delta3(H, H.delta_r_lift, H.delta_r_lift, i, expand_first=False)
        if not rel3.contains(tuple(f.sub(x, y) for x, y in zip(lhs, rhs))):
            ok, wit = False, (("b", i),)
            break
    rep.add("delta_r_coassoc", ok, wit)

    ok, wit = True, None
    for i in range(n):
        acc1 = tuple([f.zero] * n)
        acc2 = tuple([f.zero] * n)
        for c, p, q in H.delta_r_terms(i):
            term1 = H.mult_vec(H.basis(p), H.s_r.apply(H.eps_r.apply(H.basis(q))))
            acc1 = tuple(f.add(x, f.mul(c, t)) for x, t in zip(acc1, term1))
            term2 = H.mult_vec(H.basis(q), H.t_r.apply(H.eps_r.apply(H.basis(p))))
            acc2 = tuple(f.add(x, f.mul(c, t)) for x, t in zip(acc2, term2))
        if acc1 != H.basis(i) or acc2 != H.basis(i):
            ok, wit = False, (("b", i),)
            break
    rep.add("delta_r_counital", ok, wit)

    ok, wit = True, None
    for a in range(r):
        for b in range(r):
            for i in range(n):
                val = H.mult_vec(H.mult_vec(H.basis(i), H.t_r.col(a)), H.s_r.col(b))
                lhs = H.eps_r.apply(val)
                rhs = op_mult(op_mult(H.base.basis(a), H.eps_r.apply(H.basis(i))),
                              H.base.basis(b))
                if lhs != rhs:
                    ok, wit = False, (("r", a), ("rp", b), ("b", i))
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("eps_r_bimodule", ok, wit)

    ok, wit = True, None
    for i in range(n):
        for b in range(r):
            sr = H.s_r.col(b)
            tr = H.t_r.col(b)
            one = _tensor2_vec(f, n, _mult_into_leg(H, H.delta_r_terms(i), sr, 0, "l"))
            two = _tensor2_vec(f, n, _mult_into_leg(H, H.delta_r_terms(i), tr, 1, "l"))
            if not rel.contains(tuple(f.sub(x, y) for x, y in zip(one, two))):
                ok, wit = False, (("b", i), ("r", b))
                break
        if not ok:
            break
    rep.add("takeuchi_right", ok, wit)

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            prod = H.mult_vec(H.basis(i), H.basis(j))
            lhs = _tensor2_vec(f, n, _expand_delta(H, H.delta_r_lift, prod))
            rhs = _pair_product(H, H.delta_r_terms(i), H.delta_r_terms(j))
            if not rel.contains(tuple(f.sub(x, y) for x, y in zip(lhs, rhs))):
                ok, wit = False, (("b", i), ("bp", j))
                break
        if not ok:
            break
    uvec = [f.zero] * (n * n)
    for p, cp in enumerate(H.unit):
        if cp != 0:
            for q, cq in enumerate(H.unit):
                if cq != 0:
                    uvec[p * n + q] = f.mul(cp, cq)
    lhsu = _tensor2_vec(f, n, _expand_delta(H, H.delta_r_lift, H.unit))
    rep.add("delta_r_multiplicative",
            ok and rel.contains(tuple(f.sub(x, y) for x, y in zip(lhsu, uvec))), wit)

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            prod = H.mult_vec(H.basis(i), H.basis(j))
            lhs = H.eps_r.apply(prod)
            mid = H.eps_r.apply(H.mult_vec(
                H.s_r.apply(H.eps_r.apply(H.basis(i))), H.basis(j)))
            rgt = H.eps_r.apply(H.mult_vec(
                H.t_r.apply(H.eps_r.apply(H.basis(i))), H.basis(j)))
            if lhs != mid or lhs != rgt:
                ok, wit = False, (("b", i), ("bp", j))
                break
        if not ok:
            break
    rep.add("eps_r_character", ok, wit)
    return rep


def check_hopf_algebroid(H: HopfAlgebroid) -> CheckReport:
    """The antipode axioms linking the two bialgebroid structures, plus the
    derived identities used by the internal-hom constructions."""
    f = H.field
    n, r = H.dim, H.base.dim
    rep = CheckReport()

    rep.add("counit_source_target_1", H.s_l * H.eps_l * H.t_r == H.t_r)
    rep.add("counit_source_target_2", H.s_r * H.eps_r * H.t_l == H.t_l)
    rep.add("counit_source_target_3", H.t_l * H.eps_l * H.s_r == H.s_r)
    rep.add("counit_source_target_4", H.t_r * H.eps_r * H.s_l == H.s_l)

    rel_lr = _triple_relations(H, ("l", "r"))
    ok, wit = True, None
    for i in range(n):
        lhs = _delta3(H, H.delta_r_lift, H.delta_l_lift, i, expand_first=True)
        rhs = _delta3(H, H.delta_l_lift, H.delta_r_lift, i, expand_first=False)
        if not rel_lr.contains(tuple(f.sub(x, y) for x, y in zip(lhs, rhs))):
            ok, wit = False, (("b", i),)
            break
    rep.add("mixed_coassoc_1", ok, wit)

    rel_rl = _triple_relations(H, ("r", "l"))
    ok, wit = True, None
    for i in range(n):
        lhs = _delta3(H, H.delta_l_lift, H.delta_r_lift, i, expand_first=True)
        rhs = _delta3(H, H.delta_r_lift, H.delta_l_lift, i, expand_first=False)
        if not rel_rl.contains(tuple(f.sub(x, y) for x, y in zip(lhs, rhs))):
            ok, wit = False, (("b", i),)
            break
    rep.add("mixed_coassoc_2", ok, wit)

    ok, wit = True, None
    for a in range(r):
        for i in range(n):
            for b in range(r):
                lhs = H.apply_s(H.prod(H.t_l.col(a), H.basis(i), H.t_r.col(b)))
                rhs = H.prod(H.s_r.col(b), H.apply_s(H.basis(i)), H.s_l.col(a))
                if lhs != rhs:
                    ok, wit = False, (("r", a), ("h", i), ("rp", b))
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("antipode_twisted_linear", ok, wit)

    ok, wit = True, None
    for i in range(n):
        acc = tuple([f.zero] * n)
        for c, p, q in H.delta_l_terms(i):
            term = H.mult_vec(H.apply_s(H.basis(p)), H.basis(q))
            acc = tuple(f.add(x, f.mul(c, t)) for x, t in zip(acc, term))
        if acc != H.s_r.apply(H.eps_r.apply(H.basis(i))):
            ok, wit = False, (("b", i),)
            break
    rep.add("antipode_convolution_left", ok, wit)

    ok, wit = True, None
    for i in range(n):
        acc = tuple([f.zero] * n)
        for c, p, q in H.delta_r_terms(i):
            term = H.mult_vec(H.basis(p), H.apply_s(H.basis(q)))
            acc = tuple(f.add(x, f.mul(c, t)) for x, t in zip(acc, term))
        if acc != H.s_l.apply(H.eps_l.apply(H.basis(i))):
            ok, wit = False, (("b", i),)
            break
    rep.add("antipode_convolution_right", ok, wit)

    ok, wit = True, None
    for i in range(n):
        acc = tuple([f.zero] * n)
        for c, p, q in H.delta_l_terms(i):
            term = H.mult_vec(H.apply_s_inv(H.basis(q)), H.basis(p))
            acc = tuple(f.add(x, f.mul(c, t)) for x, t in zip(acc, term))
        if acc != H.t_r.apply(H.eps_r.apply(H.basis(i))):
            ok, wit = False, (("b", i),)
            break
    rep.add("derived_sinv_convolution", ok, wit)

    ok, wit = True, None
    for i in range(n):
        acc = tuple([f.zero] * n)
        for c, p, q in H.delta_r_terms(i):
            term = H.mult_vec(H.basis(q), H.apply_s_inv(H.basis(p)))
            acc = tuple(f.add(x, f.mul(c, t)) for x, t in zip(acc, term))
        if acc != H.t_l.apply(H.eps_l.apply(H.basis(i))):
            ok, wit = False, (("b", i),)
            break
    rep.add("derived_tl_convolution", ok, wit)

    kow_a = H.t_r * H.eps_r * H.t_l == Matrix.from_cols(
        f, [H.apply_s_inv(H.t_l.col(b)) for b in range(r)], ambient=n)
    kow_b = H.s_r * H.eps_r * H.s_l == Matrix.from_cols(
        f, [H.apply_s(H.s_l.col(b)) for b in range(r)], ambient=n)
    rep.add("kow_identity", kow_a and kow_b)

    ok, wit = True, None
    for a in range(r):
        for i in range(n):
            for b in range(r):
                lhs = H.prod(H.t_r.col(b), H.apply_s_inv(H.basis(i)), H.t_l.col(a))
                rhs = H.apply_s_inv(H.prod(H.s_l.col(a), H.basis(i), H.s_r.col(b)))
                if lhs != rhs:
                    ok, wit = False, (("r", a), ("h", i), ("rp", b))
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("sinv_twisted_linear", ok, wit)
    return rep


# -- builders -----------------------------------------------------------------

def base_ring_dual_numbers(field: Field) -> BaseRing:
    """k[x]/(x^2), basis (1, x)."""
    z, o = field.zero, field.one
    mult = [z] * 8
    mult[(0 * 2 + 0) * 2 + 0] = o     # 1*1 = 1
    mult[(0 * 2 + 1) * 2 + 1] = o     # 1*x = x
    mult[(1 * 2 + 0) * 2 + 1] = o     # x*1 = x
    return BaseRing(field, 2, mult, (o, z), name="k[x]/(x^2)")


def base_ring_scalars(field: Field) -> BaseRing:
    return BaseRing(field, 1, [field.one], (field.one,), name="k")


def enveloping_algebroid(A: BaseRing, name: str = "") -> HopfAlgebroid:
    """The Hopf algebroid A (x) A^op with s_l(a) = a (x) 1, t_l(b) = 1 (x) b,
    split coproducts, counits a (x) b |-> ab resp. ba, and S(a (x) b) = b (x) a."""
    f = A.field
    r = A.dim
    n = r * r
    z = f.zero

    def idx(i, j):
        return i * r + j

    mult = [z] * n ** 3
    for i1 in range(r):
        for j1 in range(r):
            for i2 in range(r):
                for j2 in range(r):
                    left = A.mult_vec(A.basis(i1), A.basis(i2))
                    right = A.mult_vec(A.basis(j2), A.basis(j1))
                    row = (idx(i1, j1) * n + idx(i2, j2)) * n
                    for k, lv in enumerate(left):
                        if lv == 0:
                            continue
                        for l, rv in enumerate(right):
                            if rv != 0:
                                mult[row + idx(k, l)] = f.add(mult[row + idx(k, l)],
                                                              f.mul(lv, rv))
    unit = [z] * n
    for i, ci in enumerate(A.unit):
        if ci != 0:
            for j, cj in enumerate(A.unit):
                if cj != 0:
                    unit[idx(i, j)] = f.mul(ci, cj)

    # source/target maps, built columnwise
    def col_sl(b):
        v = [z] * n
        for j, cj in enumerate(A.unit):
            if cj != 0:
                v[idx(b, j)] = cj
        return v

    def col_tl(b):
        v = [z] * n
        for i, ci in enumerate(A.unit):
            if ci != 0:
                v[idx(i, b)] = ci
        return v

    s_l = Matrix.from_cols(f, [col_sl(b) for b in range(r)], ambient=n)
    t_l = Matrix.from_cols(f, [col_tl(b) for b in range(r)], ambient=n)
    s_r, t_r = t_l, s_l

    lift_cols = []
    for i in range(r):
        for j in range(r):
            v = [z] * (n * n)
            for s, cs in enumerate(A.unit):
                if cs == 0:
                    continue
                for t, ct in enumerate(A.unit):
                    if ct != 0:
                        v[idx(i, s) * n + idx(t, j)] = f.mul(cs, ct)
            lift_cols.append(v)
    lift = Matrix.from_cols(f, lift_cols, ambient=n * n)

    eps_l = Matrix.from_cols(f, [A.mult_vec(A.basis(i), A.basis(j))
                                 for i in range(r) for j in range(r)], ambient=r)
    eps_r = Matrix.from_cols(f, [A.mult_vec(A.basis(j), A.basis(i))
                                 for i in range(r) for j in range(r)], ambient=r)

    s_cols = [basis_vec(f, n, idx(j, i)) for i in range(r) for j in range(r)]
    antipode = Matrix.from_cols(f, s_cols, ambient=n)

    return HopfAlgebroid(A, n, mult, unit, s_l, t_l, s_r, t_r, lift, lift,
                         eps_l, eps_r, antipode, antipode,
                         name=name or "%s^e" % A.name)


def algebroid_from_hopf(Hq: QuasiHopfAlgebra, name: str = "") -> HopfAlgebroid:
    """View a Hopf algebra (trivial Phi, alpha, beta) as a Hopf algebroid over k."""
    if not Hq.is_hopf():
        raise StructureError("algebroid_from_hopf needs a Hopf input "
                             "(trivial Phi, alpha = beta = 1)")
    f = Hq.field
    n = Hq.dim
    base = base_ring_scalars(f)
    unit_col = Matrix.from_cols(f, [Hq.unit], ambient=n)
    lift = Matrix.from_cols(f, [Hq.comult[i] for i in range(n)], ambient=n * n)
    eps = Matrix.from_rows(f, [Hq.counit])
    return HopfAlgebroid(base, n, Hq.mult, Hq.unit,
                         unit_col, unit_col, unit_col, unit_col,
                         lift, lift, eps, eps,
                         Hq.antipode, Hq.antipode_inv,
                         name=name or Hq.name)
