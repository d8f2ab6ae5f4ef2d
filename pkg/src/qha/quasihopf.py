"""Quasi-Hopf algebras presented by structure constants.

A quasi-Hopf algebra is stored as plain tensors over an exact field: the
multiplication 3-tensor, unit vector, comultiplication rows, counit, an
invertible antipode pair (S, S inverse), the associator element Phi with
its inverse, and the two antipode decorations alpha, beta.  Hopf algebras
are the special case Phi = 1 (x) 1 (x) 1, alpha = beta = 1.

All axiom checks report per-axiom pass/fail with the lexicographically
first failing basis tuple, so runs are reproducible bit for bit.
"""

from __future__ import annotations

import os
from functools import cached_property

from .fields import Field
from .linalg import Matrix, Subspace, ShapeError, intertwiner_space, basis_vec, vec_scale
from .reports import CheckReport


class StructureError(ValueError):
    """Structure constants are malformed (shape or invariant violation)."""


class IntertwinerError(ValueError):
    """A map required to be H-linear is not."""


def max_tensor_dim() -> int:
    """Ambient-dimension cap for tensor constructions (env QHA_MAX_DIM)."""
    try:
        return int(os.environ.get("QHA_MAX_DIM", "4096"))
    except ValueError:
        return 4096


class QuasiHopfAlgebra:
    """Structure-constant presentation of (H, m, u, Delta, eps, S, S^-1, Phi, alpha, beta).

    mult[i][j][k] is the e_k coefficient of e_i * e_j, stored flat (row-major);
    comult[i] is Delta(e_i) in k^(n*n) with tensor_index ordering; phi and
    phi_inv live in k^(n^3).
    """

    def __init__(self, field: Field, dim: int, mult, unit, comult, counit,
                 antipode: Matrix, antipode_inv: Matrix, phi, phi_inv,
                 alpha, beta, name: str = ""):
        n = dim
        self.field = field
        self.dim = n
        self.mult = tuple(mult)
        self.unit = tuple(unit)
        self.comult = tuple(tuple(row) for row in comult)
        self.counit = tuple(counit)
        self.antipode = antipode
        self.antipode_inv = antipode_inv
        self.phi = tuple(phi)
        self.phi_inv = tuple(phi_inv)
        self.alpha = tuple(alpha)
        self.beta = tuple(beta)
        self.name = name or "H"
        if len(self.mult) != n ** 3:
            raise StructureError("mult tensor must have %d entries" % n ** 3)
        if len(self.unit) != n or len(self.counit) != n:
            raise StructureError("unit/counit must have length %d" % n)
        if len(self.comult) != n or any(len(r) != n * n for r in self.comult):
            raise StructureError("comult must be %d rows of length %d" % (n, n * n))
        if antipode.rows != n or antipode.cols != n:
            raise StructureError("antipode must be %dx%d" % (n, n))
        if antipode_inv.rows != n or antipode_inv.cols != n:
            raise StructureError("antipode_inv must be %dx%d" % (n, n))
        if len(self.phi) != n ** 3 or len(self.phi_inv) != n ** 3:
            raise StructureError("phi/phi_inv must have %d entries" % n ** 3)
        if len(self.alpha) != n or len(self.beta) != n:
            raise StructureError("alpha/beta must have length %d" % n)

    # -- derived tables (lazy, immutable once computed) --------------------

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

    @cached_property
    def _delta_sparse(self):
        n = self.dim
        out = []
        for i in range(n):
            row = self.comult[i]
            out.append(tuple((row[p * n + q], p, q) for p in range(n) for q in range(n)
                             if row[p * n + q] != 0))
        return tuple(out)

    @cached_property
    def _phi_sparse(self):
        return self._sparse3(self.phi)

    @cached_property
    def _phi_inv_sparse(self):
        return self._sparse3(self.phi_inv)

    def _sparse3(self, flat):
        n = self.dim
        out = {}
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    c = flat[(x * n + y) * n + z]
                    if c != 0:
                        out[(x, y, z)] = c
        return out

    def s_col(self, i: int):
        return self.antipode.col(i)

    def s_inv_col(self, i: int):
        return self.antipode_inv.col(i)

    # -- element arithmetic -------------------------------------------------

    def mult_vec(self, a, b):
        """Product of two elements given as coefficient vectors."""
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

    def eps(self, vec):
        f = self.field
        s = f.zero
        for c, e in zip(vec, self.counit):
            if c != 0 and e != 0:
                s = f.add(s, f.mul(c, e))
        return s

    def delta_terms(self, i: int):
        """Sweedler decomposition of Delta(e_i) as (coef, leg1, leg2) triples."""
        return self._delta_sparse[i]

    def delta_vec(self, vec):
        """Delta of an arbitrary element, as a sparse 2-tensor dict."""
        f = self.field
        out = {}
        for i, c in enumerate(vec):
            if c == 0:
                continue
            for cd, p, q in self._delta_sparse[i]:
                key = (p, q)
                v = f.mul(c, cd)
                out[key] = f.add(out.get(key, f.zero), v)
        return {k: v for k, v in out.items() if v != 0}

    def phi_terms(self):
        """Nonzero terms of Phi as a dict {(x, y, z): coef}."""
        return self._phi_sparse

    def phi_inv_terms(self):
        return self._phi_inv_sparse

    def is_hopf(self) -> bool:
        """True when Phi = 1(x)1(x)1 and alpha = beta = 1."""
        f = self.field
        n = self.dim
        u = self.unit
        triv = [f.zero] * n ** 3
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    triv[(x * n + y) * n + z] = f.mul(u[x], f.mul(u[y], u[z]))
        return (tuple(triv) == self.phi and self.alpha == u and self.beta == u)

    def structural_key(self):
        return ("qha", self.dim, self.mult, self.unit, self.comult, self.counit,
                self.antipode.entries, self.phi, self.alpha, self.beta)

    def __repr__(self):
        return "QuasiHopfAlgebra(%s, dim %d over %s)" % (self.name, self.dim, self.field)


# -- sparse tensor-power elements -------------------------------------------
#
# Elements of H^(x)k appear in the axiom checks (pentagon lives in H^(x)4).
# They are kept as dicts {(i_1,...,i_k): coef} over basis tuples.

def tp_from_vec(vec):
    return {(i,): c for i, c in enumerate(vec) if c != 0}


def tp_tensor(H, a, b):
    f = H.field
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            out[ka + kb] = f.add(out.get(ka + kb, f.zero), f.mul(ca, cb))
    return {k: v for k, v in out.items() if v != 0}


def tp_unit(H, k: int):
    out = {(): H.field.one}
    uv = tp_from_vec(H.unit)
    for _ in range(k):
        out = tp_tensor(H, out, uv)
    return out


def tp_mul(H, a, b):
    """Componentwise product in H^(x)k of two sparse tensors."""
    f = H.field
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            terms = {(): f.mul(ca, cb)}
            for ia, ib in zip(ka, kb):
                row = H._mult_sparse[ia][ib]
                if not row:
                    terms = {}
                    break
                new = {}
                for kk, cc in terms.items():
                    for k2, c2 in row:
                        key = kk + (k2,)
                        new[key] = f.add(new.get(key, f.zero), f.mul(cc, c2))
                terms = new
            for kk, cc in terms.items():
                out[kk] = f.add(out.get(kk, f.zero), cc)
    return {k: v for k, v in out.items() if v != 0}


def tp_delta_slot(H, a, slot: int):
    """Apply Delta to one tensor slot, raising the tensor degree by one."""
    f = H.field
    out = {}
    for key, c in a.items():
        for cd, p, q in H.delta_terms(key[slot]):
            nk = key[:slot] + (p, q) + key[slot + 1:]
            out[nk] = f.add(out.get(nk, f.zero), f.mul(c, cd))
    return {k: v for k, v in out.items() if v != 0}


def tp_eps_slot(H, a, slot: int):
    """Apply the counit to one tensor slot, lowering the degree by one."""
    f = H.field
    out = {}
    for key, c in a.items():
        e = H.counit[key[slot]]
        if e == 0:
            continue
        nk = key[:slot] + key[slot + 1:]
        out[nk] = f.add(out.get(nk, f.zero), f.mul(c, e))
    return {k: v for k, v in out.items() if v != 0}


def tp_eq(a, b) -> bool:
    a = {k: v for k, v in a.items() if v != 0}
    b = {k: v for k, v in b.items() if v != 0}
    return a == b


def tp_first_diff(a, b):
    keys = sorted(set(a) | set(b))
    for k in keys:
        if a.get(k, 0) != b.get(k, 0):
            return k
    return None


# -- modules -----------------------------------------------------------------

class HModule:
    """A finite-dimensional left module: one action matrix per basis element."""

    def __init__(self, parent: QuasiHopfAlgebra, mats, name: str = ""):
        self.parent = parent
        self.mats = tuple(mats)
        if len(self.mats) != parent.dim:
            raise StructureError("need %d action matrices" % parent.dim)
        self.dim = self.mats[0].rows if self.mats else 0
        for m in self.mats:
            if m.rows != self.dim or m.cols != self.dim:
                raise StructureError("action matrices must be square of equal size")
        self.name = name

    def act(self, vec) -> Matrix:
        """Action matrix of an arbitrary algebra element."""
        f = self.parent.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for i, c in enumerate(vec):
            if c != 0:
                out = out + self.mats[i].scale(c)
        return out

    def action_tensor(self):
        """rho[i][a][b] flat: coefficient of v_b in e_i . v_a."""
        # stored matrices are column-action: (mats[i])[b, a]; transpose per slice
        out = []
        for m in self.mats:
            t = m.transpose()
            out.extend(t.entries)
        return tuple(out)

    def structural_key(self):
        return ("mod", self.dim, tuple(m.entries for m in self.mats),
                self.parent.structural_key())

    def __repr__(self):
        return "HModule(%s, dim %d)" % (self.name or "?", self.dim)


def check_module(V: HModule) -> CheckReport:
    """Verify the unital action axioms rho(u) = id, rho(ab) = rho(a) rho(b)."""
    H = V.parent
    rep = CheckReport()
    rep.add("module_unit", V.act(H.unit).is_identity())
    ok = True
    witness = None
    for i in range(H.dim):
        for j in range(H.dim):
            lhs = V.act(H.mult_vec(H.basis(i), H.basis(j)))
            rhs = V.mats[i] * V.mats[j]
            if lhs != rhs:
                ok = False
                witness = (("i", i), ("j", j))
                break
        if not ok:
            break
    rep.add("module_multiplicative", ok, witness)
    return rep


def trivial_module(H: QuasiHopfAlgebra) -> HModule:
    """The monoidal unit k, acting through the counit."""
    f = H.field
    return HModule(H, [Matrix(f, 1, 1, [H.counit[i]]) for i in range(H.dim)], name="k")


def regular_module(H: QuasiHopfAlgebra) -> HModule:
    """H acting on itself by left multiplication."""
    f = H.field
    mats = []
    for i in range(H.dim):
        cols = [H.mult_vec(H.basis(i), H.basis(j)) for j in range(H.dim)]
        mats.append(Matrix.from_cols(f, cols, ambient=H.dim))
    return HModule(H, mats, name="regular")


def tensor_module(V: HModule, W: HModule) -> HModule:
    """V (x) W with action a.(v (x) w) = a^1 v (x) a^2 w."""
    if V.parent is not W.parent:
        raise StructureError("tensor factors must share a parent algebra")
    H = V.parent
    f = H.field
    d = V.dim * W.dim
    if d > max_tensor_dim():
        raise StructureError("tensor dimension %d exceeds QHA_MAX_DIM" % d)
    mats = []
    for i in range(H.dim):
        m = Matrix.zeros(f, d, d)
        for c, p, q in H.delta_terms(i):
            m = m + V.mats[p].kron(W.mats[q]).scale(c)
        mats.append(m)
    return HModule(H, mats, name="(%s)x(%s)" % (V.name, W.name))


def associator(V: HModule, W: HModule, U: HModule) -> Matrix:
    """The action of Phi on V (x) W (x) U, an isomorphism (VW)U -> V(WU)."""
    for X in (W, U):
        if X.parent is not V.parent:
            raise StructureError("associator factors must share a parent algebra")
    H = V.parent
    f = H.field
    d = V.dim * W.dim * U.dim
    out = Matrix.zeros(f, d, d)
    for (x, y, z), c in H.phi_terms().items():
        out = out + V.mats[x].kron(W.mats[y]).kron(U.mats[z]).scale(c)
    return out


# -- internal homs -----------------------------------------------------------
#
# The carrier of Hom(V, M) is k^(dM*dV) in the matrix-unit basis E_ab
# (e_b |-> m_a), flattened row-major: index a*dV + b.

def _hom_action(M: HModule, V: HModule, legs_fn) -> HModule:
    H = M.parent
    f = H.field
    mats = []
    for i in range(H.dim):
        m = Matrix.zeros(f, M.dim * V.dim, M.dim * V.dim)
        for c, post_vec, pre_vec in legs_fn(i):
            m = m + M.act(post_vec).kron(V.act(pre_vec).transpose()).scale(c)
        mats.append(m)
    return HModule(H, mats)


def left_hom(V: HModule, M: HModule) -> HModule:
    """Hom^l(V, M): carrier Hom_k(V, M), action h.phi = h^1 phi(S(h^2) -)."""
    if V.parent is not M.parent:
        raise StructureError("hom factors must share a parent algebra")
    H = V.parent

    def legs(i):
        return [(c, H.basis(p), H.s_col(q)) for c, p, q in H.delta_terms(i)]

    mod = _hom_action(M, V, legs)
    mod.name = "Hom^l(%s,%s)" % (V.name, M.name)
    return mod


def right_hom(V: HModule, M: HModule) -> HModule:
    """Hom^r(V, M): carrier Hom_k(V, M), action h.phi = h^2 phi(S^-1(h^1) -)."""
    if V.parent is not M.parent:
        raise StructureError("hom factors must share a parent algebra")
    H = V.parent

    def legs(i):
        return [(c, H.basis(q), H.s_inv_col(p)) for c, p, q in H.delta_terms(i)]

    mod = _hom_action(M, V, legs)
    mod.name = "Hom^r(%s,%s)" % (V.name, M.name)
    return mod


def hom_vec_to_matrix(f: Field, vec, d_m: int, d_v: int) -> Matrix:
    return Matrix(f, d_m, d_v, vec)


def matrix_to_hom_vec(m: Matrix):
    return m.entries


def eval_left(V: HModule, M: HModule) -> Matrix:
    """ev^l: Hom^l(V,M) (x) V -> M, phi (x) m |-> X( phi(S(Y) alpha Z m) )."""
    if V.parent is not M.parent:
        raise StructureError("evaluation factors must share a parent algebra")
    H = V.parent
    f = H.field
    dh = M.dim * V.dim
    cols = {}
    for (x, y, z), c in H.phi_terms().items():
        post = M.act(H.basis(x))                       # X acting on the value
        inner = V.act(H.prod(H.apply_s(H.basis(y)), H.alpha, H.basis(z)))
        for a in range(M.dim):
            pa = post.col(a)
            for b in range(V.dim):
                for v in range(V.dim):
                    w = inner.get(b, v)
                    if w == 0:
                        continue
                    key = (a * V.dim + b) * V.dim + v
                    cw = f.mul(c, w)
                    cur = cols.get(key)
                    cols[key] = vec_scale(f, cw, pa) if cur is None else \
                        tuple(f.add(s, f.mul(cw, t)) for s, t in zip(cur, pa))
    out = []
    zero_col = tuple([f.zero] * M.dim)
    for j in range(dh * V.dim):
        out.append(cols.get(j, zero_col))
    return Matrix.from_cols(f, out, ambient=M.dim)


def eval_right(V: HModule, M: HModule) -> Matrix:
    """ev^r: V (x) Hom^r(V,M) -> M, m (x) phi |-> R( phi(S^-1(Q) S^-1(alpha) P m) )."""
    if V.parent is not M.parent:
        raise StructureError("evaluation factors must share a parent algebra")
    H = V.parent
    f = H.field
    dh = M.dim * V.dim
    cols = {}
    for (p, q, r), c in H.phi_inv_terms().items():
        post = M.act(H.basis(r))
        inner = V.act(H.prod(H.apply_s_inv(H.basis(q)), H.apply_s_inv(H.alpha), H.basis(p)))
        for a in range(M.dim):
            pa = post.col(a)
            for b in range(V.dim):
                for v in range(V.dim):
                    w = inner.get(b, v)
                    if w == 0:
                        continue
                    key = v * dh + (a * V.dim + b)
                    cw = f.mul(c, w)
                    cur = cols.get(key)
                    cols[key] = vec_scale(f, cw, pa) if cur is None else \
                        tuple(f.add(s, f.mul(cw, t)) for s, t in zip(cur, pa))
    out = []
    zero_col = tuple([f.zero] * M.dim)
    for j in range(V.dim * dh):
        out.append(cols.get(j, zero_col))
    return Matrix.from_cols(f, out, ambient=M.dim)


def is_intertwiner(f_mat: Matrix, src: HModule, dst: HModule) -> bool:
    return all(f_mat * src.mats[i] == dst.mats[i] * f_mat
               for i in range(src.parent.dim))


def require_intertwiner(f_mat: Matrix, src: HModule, dst: HModule, what: str):
    if f_mat.rows != dst.dim or f_mat.cols != src.dim:
        raise ShapeError("%s must be %dx%d" % (what, dst.dim, src.dim))
    if not is_intertwiner(f_mat, src, dst):
        raise IntertwinerError("%s is not an H-module morphism" % what)


def hom_module_morphisms(V: HModule, W: HModule) -> Subspace:
    """Canonical basis of Hom_H(V, W), vectorised row-major."""
    if V.parent is not W.parent:
        raise StructureError("hom factors must share a parent algebra")
    pairs = [(V.mats[i], W.mats[i]) for i in range(V.parent.dim)]
    return intertwiner_space(V.parent.field, pairs, W.dim, V.dim)


# -- the biclosed-structure adjunctions ----------------------------------------

def zeta_l(f_mat: Matrix, M: HModule, N: HModule, L: HModule) -> Matrix:
    """zeta^l: Hom_H(M (x) N, L) -> Hom_H(M, Hom^l(N, L)).

    f |-> (m |-> f(P m (x) Q beta S(R) -)).
    """
    H = M.parent
    fld = H.field
    require_intertwiner(f_mat, tensor_module(M, N), L, "zeta_l input")
    out = Matrix.zeros(fld, L.dim * N.dim, M.dim)
    for (p, q, r), c in H.phi_inv_terms().items():
        mp = M.act(H.basis(p))
        nq = N.act(H.prod(H.basis(q), H.beta, H.apply_s(H.basis(r))))
        rows = []
        for a in range(L.dim):
            for b in range(N.dim):
                row = []
                for i in range(M.dim):
                    s = fld.zero
                    for mi in range(M.dim):
                        u = mp.get(mi, i)
                        if u == 0:
                            continue
                        for nj in range(N.dim):
                            w = nq.get(nj, b)
                            if w == 0:
                                continue
                            e = f_mat.get(a, mi * N.dim + nj)
                            if e != 0:
                                s = fld.add(s, fld.mul(fld.mul(u, w), e))
                    row.append(s)
                rows.append(row)
        out = out + Matrix.from_rows(fld, rows).scale(c)
    result = out
    require_intertwiner(result, M, left_hom(N, L), "zeta_l output")
    return result


def eta_l(g_mat: Matrix, M: HModule, N: HModule, L: HModule) -> Matrix:
    """eta^l(g) = ev^l o (g (x) id): Hom_H(M, Hom^l(N,L)) -> Hom_H(M (x) N, L)."""
    H = M.parent
    hl = left_hom(N, L)
    require_intertwiner(g_mat, M, hl, "eta_l input")
    ev = eval_left(N, L)
    eye_n = Matrix.identity(H.field, N.dim)
    result = ev * g_mat.kron(eye_n)
    require_intertwiner(result, tensor_module(M, N), L, "eta_l output")
    return result


def zeta_r(f_mat: Matrix, N: HModule, M: HModule, L: HModule) -> Matrix:
    """zeta^r: Hom_H(N (x) M, L) -> Hom_H(M, Hom^r(N, L)).

    f |-> (m |-> f(Y S^-1(beta) S^-1(X) - (x) Z m)).
    """
    H = M.parent
    fld = H.field
    require_intertwiner(f_mat, tensor_module(N, M), L, "zeta_r input")
    out = Matrix.zeros(fld, L.dim * N.dim, M.dim)
    for (x, y, z), c in H.phi_terms().items():
        mz = M.act(H.basis(z))
        ny = N.act(H.prod(H.basis(y), H.apply_s_inv(H.beta), H.apply_s_inv(H.basis(x))))
        rows = []
        for a in range(L.dim):
            for b in range(N.dim):
                row = []
                for i in range(M.dim):
                    s = fld.zero
                    for mi in range(M.dim):
                        u = mz.get(mi, i)
                        if u == 0:
                            continue
                        for nj in range(N.dim):
                            w = ny.get(nj, b)
                            if w == 0:
                                continue
                            e = f_mat.get(a, nj * M.dim + mi)
                            if e != 0:
                                s = fld.add(s, fld.mul(fld.mul(u, w), e))
                    row.append(s)
                rows.append(row)
        out = out + Matrix.from_rows(fld, rows).scale(c)
    result = out
    require_intertwiner(result, M, right_hom(N, L), "zeta_r output")
    return result


def eta_r(g_mat: Matrix, N: HModule, M: HModule, L: HModule) -> Matrix:
    """eta^r(g) = ev^r o (id (x) g): Hom_H(M, Hom^r(N,L)) -> Hom_H(N (x) M, L)."""
    H = M.parent
    hr = right_hom(N, L)
    require_intertwiner(g_mat, M, hr, "eta_r input")
    ev = eval_right(N, L)
    eye_n = Matrix.identity(H.field, N.dim)
    result = ev * eye_n.kron(g_mat)
    require_intertwiner(result, tensor_module(N, M), L, "eta_r output")
    return result


# -- axiom checks --------------------------------------------------------------

def validate_structure(H: QuasiHopfAlgebra) -> CheckReport:
    """Type invariants: associative unital algebra, Delta/eps algebra maps,
    Phi invertible, S anti-automorphism with the stored inverse."""
    f = H.field
    n = H.dim
    rep = CheckReport()

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

    ok, wit = True, None
    for i in range(n):
        if H.mult_vec(H.unit, H.basis(i)) != H.basis(i) or \
           H.mult_vec(H.basis(i), H.unit) != H.basis(i):
            ok, wit = False, (("i", i),)
            break
    rep.add("mult_unital", ok, wit)

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            prod_ij = H.mult_vec(H.basis(i), H.basis(j))
            lhs = H.delta_vec(prod_ij)
            rhs = tp_mul(H, dict(((p, q), c) for c, p, q in H.delta_terms(i)),
                         dict(((p, q), c) for c, p, q in H.delta_terms(j)))
            if not tp_eq(lhs, rhs):
                ok, wit = False, (("i", i), ("j", j))
                break
        if not ok:
            break
    unit_ok = tp_eq(H.delta_vec(H.unit), tp_unit(H, 2))
    rep.add("comult_algebra_map", ok and unit_ok, wit)

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            lhs = H.eps(H.mult_vec(H.basis(i), H.basis(j)))
            rhs = f.mul(H.counit[i], H.counit[j])
            if lhs != rhs:
                ok, wit = False, (("i", i), ("j", j))
                break
        if not ok:
            break
    rep.add("counit_algebra_map", ok and f.is_one(H.eps(H.unit)), wit)

    prod_f = tp_mul(H, H.phi_terms(), H.phi_inv_terms())
    prod_b = tp_mul(H, H.phi_inv_terms(), H.phi_terms())
    rep.add("phi_invertible", tp_eq(prod_f, tp_unit(H, 3)) and tp_eq(prod_b, tp_unit(H, 3)))

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


def check_quasi_bialgebra(H: QuasiHopfAlgebra) -> CheckReport:
    """The quasi-bialgebra axioms: Phi-twisted coassociativity, the pentagon,
    counitality, and the Phi counit normalisation."""
    rep = CheckReport()
    n = H.dim

    ok, wit = True, None
    phi = H.phi_terms()
    phi_inv = H.phi_inv_terms()
    for i in range(n):
        d = dict(((p, q), c) for c, p, q in H.delta_terms(i))
        lhs = tp_delta_slot(H, d, 1)                   # (id (x) Delta) Delta
        rhs = tp_mul(H, tp_mul(H, phi, tp_delta_slot(H, d, 0)), phi_inv)
        if not tp_eq(lhs, rhs):
            ok, wit = False, (("a", i),)
            break
    rep.add("coassoc_twisted", ok, wit)

    lhs = tp_mul(H, tp_delta_slot(H, phi, 2), tp_delta_slot(H, phi, 0))
    one = tp_from_vec(H.unit)
    rhs = tp_mul(H, tp_mul(H, tp_tensor(H, one, phi), tp_delta_slot(H, phi, 1)),
                 tp_tensor(H, phi, one))
    diff = tp_first_diff(lhs, rhs)
    rep.add("pentagon", diff is None, None if diff is None else (("tuple", diff),))

    ok, wit = True, None
    for i in range(n):
        d = dict(((p, q), c) for c, p, q in H.delta_terms(i))
        left = tp_eps_slot(H, d, 0)
        right = tp_eps_slot(H, d, 1)
        want = {(i,): H.field.one}
        if not (tp_eq(left, want) and tp_eq(right, want)):
            ok, wit = False, (("a", i),)
            break
    rep.add("counit", ok, wit)

    rep.add("phi_counit", tp_eq(tp_eps_slot(H, phi, 1), tp_unit(H, 2)))
    return rep


def check_quasi_hopf(H: QuasiHopfAlgebra) -> CheckReport:
    """The antipode axioms and the derived identities used downstream."""
    f = H.field
    n = H.dim
    rep = CheckReport()

    ok, wit = True, None
    for i in range(n):
        acc = tuple([f.zero] * n)
        for c, p, q in H.delta_terms(i):
            term = H.prod(H.apply_s(H.basis(p)), H.alpha, H.basis(q))
            acc = tuple(f.add(a, f.mul(c, t)) for a, t in zip(acc, term))
        if acc != vec_scale(f, H.counit[i], H.alpha):
            ok, wit = False, (("h", i),)
            break
    rep.add("alpha_axiom", ok, wit)

    ok, wit = True, None
    for i in range(n):
        acc = tuple([f.zero] * n)
        for c, p, q in H.delta_terms(i):
            term = H.prod(H.basis(p), H.beta, H.apply_s(H.basis(q)))
            acc = tuple(f.add(a, f.mul(c, t)) for a, t in zip(acc, term))
        if acc != vec_scale(f, H.counit[i], H.beta):
            ok, wit = False, (("h", i),)
            break
    rep.add("beta_axiom", ok, wit)

    acc = tuple([f.zero] * n)
    for (x, y, z), c in H.phi_terms().items():
        term = H.prod(H.basis(x), H.beta, H.apply_s(H.basis(y)), H.alpha, H.basis(z))
        acc = tuple(f.add(a, f.mul(c, t)) for a, t in zip(acc, term))
    rep.add("ev_coev", acc == H.unit)

    acc = tuple([f.zero] * n)
    for (p, q, r), c in H.phi_inv_terms().items():
        term = H.prod(H.apply_s(H.basis(p)), H.alpha, H.basis(q), H.beta, H.basis(r))
        acc = tuple(f.add(a, f.mul(c, t)) for a, t in zip(acc, term))
    rep.add("coev_ev", acc == H.unit)

    ok, wit = True, None
    for i in range(n):
        if H.eps(H.apply_s(H.basis(i))) != H.counit[i]:
            ok, wit = False, (("h", i),)
            break
    rep.add("eps_antipode", ok, wit)

    acc = tuple([f.zero] * n)
    for (p, q, r), c in H.phi_inv_terms().items():
        term = H.prod(H.basis(q), H.beta, H.apply_s(H.basis(r)))
        acc = tuple(f.add(a, f.mul(f.mul(c, H.counit[p]), t)) for a, t in zip(acc, term))
    rep.add("eps_p_q_beta_s_r", acc == H.beta)
    return rep


# -- builders -----------------------------------------------------------------

class GroupTableError(ValueError):
    """The given multiplication table is not a group."""


def _validate_group(table) -> tuple:
    n = len(table)
    table = [list(map(int, row)) for row in table]
    for row in table:
        if len(row) != n or any(not 0 <= x < n for x in row):
            raise GroupTableError("table is not square over range(%d)" % n)
    identity = None
    for e in range(n):
        if all(table[e][g] == g and table[g][e] == g for g in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupTableError("table has no identity element")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise GroupTableError("table is not associative at (%d,%d,%d)" % (i, j, k))
    inv = [None] * n
    for g in range(n):
        for h in range(n):
            if table[g][h] == identity and table[h][g] == identity:
                inv[g] = h
                break
        if inv[g] is None:
            raise GroupTableError("element %d has no inverse" % g)
    return table, identity, inv


def group_algebra(field: Field, table, name: str = "kG") -> QuasiHopfAlgebra:
    """The group algebra kG as a (quasi-)Hopf algebra with trivial Phi."""
    table, e, inv = _validate_group(table)
    n = len(table)
    z, o = field.zero, field.one
    mult = [z] * n ** 3
    for i in range(n):
        for j in range(n):
            mult[(i * n + j) * n + table[i][j]] = o
    unit = basis_vec(field, n, e)
    comult = []
    for i in range(n):
        row = [z] * (n * n)
        row[i * n + i] = o
        comult.append(row)
    counit = tuple([o] * n)
    s = Matrix.from_cols(field, [basis_vec(field, n, inv[i]) for i in range(n)])
    phi = [z] * n ** 3
    phi[(e * n + e) * n + e] = o
    return QuasiHopfAlgebra(field, n, mult, unit, comult, counit, s, s,
                            phi, list(phi), unit, unit, name=name)


def cyclic_group_table(n: int):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_group_table(n: int):
    """Multiplication table of S_n with permutations in lexicographic order."""
    from itertools import permutations
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            comp = tuple(p[q[i]] for i in range(n))   # p after q
            row.append(index[comp])
        table.append(row)
    return table


def sweedler_h4(field: Field) -> QuasiHopfAlgebra:
    """Sweedler's four-dimensional Hopf algebra.

    Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx; Delta(g) = g(x)g,
    Delta(x) = x(x)1 + g(x)x.  Over a field of characteristic != 2 the
    antipode has order four (S^2 != id).
    """
    z, o = field.zero, field.one
    n = 4
    # basis order 1, g, x, gx: monomial g^a x^b sits at index a + 2b
    def idx(a, b):
        return a + 2 * b

    mult = [z] * n ** 3
    for a1 in range(2):
        for b1 in range(2):
            for a2 in range(2):
                for b2 in range(2):
                    if b1 + b2 >= 2:
                        continue
                    sign = o if (b1 * a2) % 2 == 0 else field.neg(o)
                    mult[(idx(a1, b1) * n + idx(a2, b2)) * n
                         + idx((a1 + a2) % 2, b1 + b2)] = sign
    unit = basis_vec(field, n, 0)
    comult = [None] * n
    for a in range(2):
        for b in range(2):
            row = [z] * (n * n)
            if b == 0:
                row[idx(a, 0) * n + idx(a, 0)] = o            # g^a (x) g^a
            else:
                # Delta(g^a x) = Delta(g)^a Delta(x)
                row[idx(a, 1) * n + idx(a, 0)] = o            # g^a x (x) g^a
                row[idx((a + 1) % 2, 0) * n + idx(a, 1)] = o  # g^(a+1) (x) g^a x
            comult[idx(a, b)] = row
    counit = (o, o, z, z)
    # S: 1->1, g->g, x->-gx, gx->x
    s_cols = [basis_vec(field, n, 0), basis_vec(field, n, 1),
              vec_scale(field, field.neg(o), basis_vec(field, n, 3)),
              basis_vec(field, n, 2)]
    s = Matrix.from_cols(field, s_cols)
    s_inv = s.inverse()
    phi = [z] * n ** 3
    phi[0] = o
    return QuasiHopfAlgebra(field, n, mult, unit, comult, counit, s, s_inv,
                            phi, list(phi), unit, unit, name="H4")


def twisted_dual_group_algebra(field: Field, table, omega,
                               name: str = "k^G_w") -> QuasiHopfAlgebra:
    """Functions on a finite group, with associator twisted by a 3-cochain.

    omega[x][y][z] must be a nonzero scalar for all group elements; the
    pentagon check passes exactly when omega is a 3-cocycle.  The structure
    is Phi = sum w(x,y,z) d_x (x) d_y (x) d_z, S(d_x) = d_{x^-1}, alpha = 1,
    beta = sum w(x, x^-1, x)^-1 d_x.

    The antipode of functions on a group is forced to be the inversion
    permutation, and with diagonal alpha, beta the two evaluation
    normalisations are simultaneously satisfiable iff w(x, x^-1, x^2) = 1
    for every x.  That holds automatically on exponent-two groups; for
    other groups pick a representative of the cohomology class with that
    property (z3_nontrivial_cocycle returns one for Z/3).
    """
    table, e, inv = _validate_group(table)
    n = len(table)
    z, o = field.zero, field.one

    def w(x, y, zz):
        val = omega[x][y][zz]
        if val == 0:
            raise StructureError("omega must be nowhere zero")
        return val

    mult = [z] * n ** 3
    for i in range(n):
        mult[(i * n + i) * n + i] = o
    unit = tuple([o] * n)
    comult = []
    for g in range(n):
        row = [z] * (n * n)
        for u in range(n):
            for v in range(n):
                if table[u][v] == g:
                    row[u * n + v] = o
        comult.append(row)
    counit = tuple(o if g == e else z for g in range(n))
    s = Matrix.from_cols(field, [basis_vec(field, n, inv[i]) for i in range(n)])
    phi = [z] * n ** 3
    phi_inv = [z] * n ** 3
    for x in range(n):
        for y in range(n):
            for zz in range(n):
                phi[(x * n + y) * n + zz] = w(x, y, zz)
                phi_inv[(x * n + y) * n + zz] = field.inv(w(x, y, zz))
    alpha = unit
    beta = tuple(field.inv(w(x, inv[x], x)) for x in range(n))
    return QuasiHopfAlgebra(field, n, mult, unit, comult, counit, s, s,
                            phi, phi_inv, alpha, beta, name=name)


def z2_nontrivial_cocycle(field: Field):
    """The nontrivial normalised 3-cocycle on Z/2: w(a,a,a) = -1, else 1."""
    o = field.one
    m = field.neg(o)
    w = [[[o, o], [o, o]], [[o, o], [o, m]]]
    return w


def primitive_root_of_unity(field: Field, order: int):
    """A primitive root of unity of the given order in GF(p), if one exists."""
    if field.kind == "Q":
        if order <= 2:
            return field.one if order == 1 else field.neg(field.one)
        raise StructureError("the rationals have no %d-th roots of unity" % order)
    if (field.p - 1) % order != 0:
        raise StructureError("GF(%d) has no primitive %d-th root of unity"
                             % (field.p, order))
    divisors = [d for d in range(1, order) if order % d == 0]
    for cand in range(2, field.p):
        if pow(cand, order, field.p) == 1 and \
                all(pow(cand, d, field.p) != 1 for d in divisors):
            return cand
    raise StructureError("no primitive root found")


def z3_nontrivial_cocycle(field: Field):
    """A generator of the order-three part of H^3(Z/3, k^*), normalised so
    that w(x, x^-1, x^2) = 1 (which the plain-antipode twisted dual needs).

    Needs a primitive cube root of unity in the field, so GF(p) with
    p = 1 mod 3."""
    zeta = field.from_int(primitive_root_of_unity(field, 3))
    o = field.one
    z2 = field.mul(zeta, zeta)
    w = [[[o] * 3 for _ in range(3)] for _ in range(3)]
    w[1][1][1] = zeta
    w[1][1][2] = z2
    w[2][2][1] = z2
    w[2][2][2] = zeta
    return w
