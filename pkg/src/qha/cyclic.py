"""Cocyclic modules from algebra objects and stable contramodule coefficients.

Given a unital associative algebra object A in the module category and a
stable aYD contramodule M, the spaces C^n = Hom_H(A^(x)(n+1), M) carry
cofaces (precomposition with adjacent multiplications), codegeneracies
(precomposition with unit insertions) and cyclic operators built from the
contratrace maps.  Tensor powers are bracketed left to right; the quasi
case rebrackets through explicit associator composites, the algebroid case
through requotient maps.  The build verifies every cosimplicial and
cocyclic identity as an exact matrix identity and refuses to return a
structure that fails any of them.

Hochschild cohomology is computed from the coface alternating sum, cyclic
cohomology from the first-quadrant bicomplex with columns b, -b' and rows
1 - lambda, N (lambda = (-1)^n t_n).
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field
from .linalg import Matrix
from .reports import CheckReport
from .quasihopf import (QuasiHopfAlgebra, StructureError,
                        tensor_module, trivial_module, associator,
                        hom_module_morphisms, is_intertwiner, max_tensor_dim)
from .coefficients import Contramodule, HOPF_MU, QUASI_I, QUASI_II, \
    check_stability_hopf, check_stability_quasi, check_stability_algebroid
from .center import CenterElement, iota_apply
from . import algebroid as alg


class CocyclicError(ValueError):
    """A cocyclic identity failed during construction."""


class ModuleAlgebra:
    """A unital associative algebra object in the module category.

    ``mult`` maps the tensor square (the quotient carrier, for algebroids)
    to the carrier; ``unit`` is a matrix from the unit object's carrier
    (one column over a quasi-Hopf algebra, the base ring for algebroids).
    """

    def __init__(self, carrier, mult: Matrix, unit: Matrix):
        self.carrier = carrier
        self.mult = mult
        self.unit = unit
        H = carrier.parent
        if isinstance(H, QuasiHopfAlgebra):
            self.is_algebroid = False
            sq = carrier.dim * carrier.dim
            unit_cols = 1
        else:
            self.is_algebroid = True
            sq = alg.tensor_over_base(carrier, carrier)[0].dim
            unit_cols = H.base.dim
        if mult.rows != carrier.dim or mult.cols != sq:
            raise StructureError("mult must be %dx%d" % (carrier.dim, sq))
        if unit.rows != carrier.dim or unit.cols != unit_cols:
            raise StructureError("unit must be %dx%d" % (carrier.dim, unit_cols))

    @property
    def parent(self):
        return self.carrier.parent

    @property
    def field(self):
        return self.carrier.parent.field

    def unit_element(self):
        """The unit of A as a carrier vector (the image of 1 in the base)."""
        H = self.parent
        one = (H.field.one,) if not self.is_algebroid else H.base.unit
        return self.unit.apply(one)


def unit_algebra(H) -> ModuleAlgebra:
    """The monoidal unit as an algebra object (A = k, or A = R)."""
    f = H.field
    if isinstance(H, QuasiHopfAlgebra):
        carrier = trivial_module(H)
        return ModuleAlgebra(carrier, Matrix.identity(f, 1), Matrix.identity(f, 1))
    carrier = alg.base_module(H)
    _, rel = alg.tensor_over_base(carrier, carrier)
    # multiplication descends from r (x) r' |-> r r'
    amb_cols = []
    r = carrier.dim
    for i in range(r):
        for j in range(r):
            amb_cols.append(H.base.mult_vec(H.base.basis(i), H.base.basis(j)))
    amb = Matrix.from_cols(f, amb_cols, ambient=r)
    mult = amb * rel.lift
    return ModuleAlgebra(carrier, mult, Matrix.identity(f, r))


def check_algebra_object(A: ModuleAlgebra) -> CheckReport:
    """Morphism property of mult/unit, associativity up to the associator,
    and two-sided unitality."""
    rep = CheckReport()
    if A.is_algebroid:
        return _check_algebra_object_algebroid(A, rep)
    H = A.parent
    f = A.field
    V = A.carrier
    sq = tensor_module(V, V)
    rep.add("mult_is_morphism", is_intertwiner(A.mult, sq, V))
    unit_mod = trivial_module(H)
    rep.add("unit_is_morphism", is_intertwiner(A.unit, unit_mod, V))
    eye = Matrix.identity(f, V.dim)
    lhs = A.mult * A.mult.kron(eye)
    rhs = A.mult * eye.kron(A.mult) * associator(V, V, V)
    rep.add("associative_up_to_phi", lhs == rhs)
    u = A.unit_element()
    ucol = Matrix.from_cols(f, [u], ambient=V.dim)
    rep.add("left_unital", (A.mult * ucol.kron(eye)) == eye)
    rep.add("right_unital", (A.mult * eye.kron(ucol)) == eye)
    return rep


def _check_algebra_object_algebroid(A: ModuleAlgebra, rep: CheckReport) -> CheckReport:
    H = A.parent
    f = A.field
    V = A.carrier
    sq, rel = alg.tensor_over_base(V, V)
    rep.add("mult_is_morphism", is_intertwiner(A.mult, sq, V))
    unit_mod = alg.base_module(H)
    rep.add("unit_is_morphism", is_intertwiner(A.unit, unit_mod, V))
    # associativity on the triple quotient (strict associators)
    trip, rel3 = alg.tensor_over_base(sq, V)
    trip2, rel3b = alg.tensor_over_base(V, sq)
    eye = Matrix.identity(f, V.dim)
    m_amb = A.mult * rel.projector                      # ambient V (x) V -> V
    lhs = A.mult * rel.projector * m_amb.kron(eye)      # ambient V^3 -> V
    rhs = A.mult * rel.projector * eye.kron(m_amb)
    rep.add("associative_up_to_phi", lhs == rhs)
    u = A.unit_element()
    ucol = Matrix.from_cols(f, [u], ambient=V.dim)
    rep.add("left_unital", (A.mult * rel.projector * ucol.kron(eye)) == eye)
    rep.add("right_unital", (A.mult * rel.projector * eye.kron(ucol)) == eye)
    return rep


# -- tensor powers with bracketing ------------------------------------------------

class TensorPowerChain:
    """Left-nested tensor powers of A with projection/lift bookkeeping.

    For each k the carrier of L_k = (..(A (x) A) .. (x) A) is reached from
    the ambient k-fold tensor power by the composite projection; the quasi
    case has identity projections, the algebroid case collapses the base
    relations stage by stage.  ``rebracket_front(k)`` caches nothing itself
    but is built from the stored stage data, so repeated calls agree
    bit for bit.
    """

    def __init__(self, A: ModuleAlgebra, depth: int):
        self.A = A
        H = A.parent
        f = A.field
        d = A.carrier.dim
        if d ** depth > max_tensor_dim():
            raise StructureError(
                "tensor power dimension %d exceeds QHA_MAX_DIM "
                "(set the environment variable to raise the cap)" % d ** depth)
        self.mods = [None, A.carrier]
        self.proj = [None, Matrix.identity(f, d)]   # ambient A^k -> L_k carrier
        self.lift = [None, Matrix.identity(f, d)]
        eye = Matrix.identity(f, d)
        for k in range(2, depth + 1):
            if A.is_algebroid:
                mod, rel = alg.tensor_over_base(self.mods[k - 1], A.carrier)
                stage_p, stage_l = rel.projector, rel.lift
            else:
                mod = tensor_module(self.mods[k - 1], A.carrier)
                stage_p = Matrix.identity(f, mod.dim)
                stage_l = stage_p
            self.mods.append(mod)
            self.proj.append(stage_p * self.proj[k - 1].kron(eye))
            self.lift.append(self.lift[k - 1].kron(eye) * stage_l)

    def module(self, k: int):
        """The left-nested k-th tensor power as a module (1 <= k)."""
        return self.mods[k]

    def rebracket_front(self, k: int) -> Matrix:
        """The morphism A (x) L_k -> L_(k+1) identifying the two bracketings.

        Quasi case: the composite of inverse associators moving the front
        factor into the left-nested tree; algebroid case: the requotient map
        through the ambient identity."""
        A = self.A
        f = A.field
        d = A.carrier.dim
        if A.is_algebroid:
            # lift to A (x) (ambient k-power), then project as a (k+1)-power
            _, relf = alg.tensor_over_base(A.carrier, self.mods[k])
            expand = Matrix.identity(f, d).kron(self.lift[k])
            return self.proj[k + 1] * expand * relf.lift
        if k == 1:
            return Matrix.identity(f, d * d)
        # A (x) L_k -> (A (x) L_(k-1)) (x) A -> L_k (x) A, recursively
        eye = Matrix.identity(f, d)
        step = associator(A.carrier, self.mods[k - 1], A.carrier).inverse()
        return self.rebracket_front(k - 1).kron(eye) * step


def tensor_power_bracketed(A: ModuleAlgebra, n: int) -> TensorPowerChain:
    """The left-nested tensor powers L_1 .. L_n of A with their rebracketing
    isomorphisms.  The unit object (the would-be zeroth power) is available
    separately through unit_algebra."""
    if n < 1:
        raise ValueError("n must be >= 1; the unit object is unit_algebra(H)")
    return TensorPowerChain(A, n)


def _mult_map(chain: TensorPowerChain, k: int, i: int) -> Matrix:
    """The morphism L_(k) -> L_(k-1) multiplying slots i, i+1 (0-based)."""
    A = chain.A
    f = A.field
    d = A.carrier.dim
    if A.is_algebroid:
        m_amb = A.mult * alg.tensor_over_base(A.carrier, A.carrier)[1].projector
        slot = Matrix.identity(f, d ** i).kron(m_amb).kron(
            Matrix.identity(f, d ** (k - i - 2)))
        return chain.proj[k - 1] * slot * chain.lift[k]
    if i == k - 2:
        # rebracket the last pair together, then multiply
        alpha = associator(chain.mods[k - 2], A.carrier, A.carrier) if k > 2 else None
        eye_prefix = Matrix.identity(f, d ** (k - 2))
        if k == 2:
            return A.mult
        return eye_prefix.kron(A.mult) * alpha
    return _mult_map(chain, k - 1, i).kron(Matrix.identity(f, d))


def _unit_insertion(chain: TensorPowerChain, k: int, p: int) -> Matrix:
    """The morphism L_k -> L_(k+1) inserting the unit of A at slot p."""
    A = chain.A
    f = A.field
    d = A.carrier.dim
    ucol = Matrix.from_cols(f, [A.unit_element()], ambient=d)
    if A.is_algebroid:
        slot = Matrix.identity(f, d ** p).kron(ucol).kron(
            Matrix.identity(f, d ** (k - p)))
        return chain.proj[k + 1] * slot * chain.lift[k]
    if p == k:
        return Matrix.identity(f, d ** k).kron(ucol)
    if k == 1 and p == 0:
        return ucol.kron(Matrix.identity(f, d))
    return _unit_insertion(chain, k - 1, p).kron(Matrix.identity(f, d))


# -- the cocyclic module ---------------------------------------------------------

@dataclass
class CohomologyResult:
    theory: str              # "hochschild" or "cyclic"
    field: Field
    dims: list

    def to_dict(self):
        return {"theory": self.theory, "field": str(self.field), "dims": list(self.dims)}


class CocyclicModule:
    """C^n = Hom_H(A^(x)(n+1), M) with all structure operators as matrices
    in the canonical intertwiner bases, identities verified at build time."""

    def __init__(self, n_max, spaces, cofaces, codegens, cyclics, field):
        self.n_max = n_max
        self.spaces = spaces          # list of Subspace, C^0 .. C^n_max
        self.cofaces = cofaces        # cofaces[n][i]: C^n -> C^(n+1)
        self.codegens = codegens      # codegens[n][j]: C^(n+1) -> C^n
        self.cyclics = cyclics        # cyclics[n]: C^n -> C^n
        self.field = field

    def dim(self, n: int) -> int:
        return self.spaces[n].dim

    def boundary(self, n: int) -> Matrix:
        """Hochschild coboundary b = sum (-1)^i delta_i : C^n -> C^(n+1)."""
        f = self.field
        out = Matrix.zeros(f, self.dim(n + 1), self.dim(n))
        sign = f.one
        for d in self.cofaces[n]:
            out = out + d.scale(sign)
            sign = f.neg(sign)
        return out

    def boundary_prime(self, n: int) -> Matrix:
        """b' = sum_{i <= n} (-1)^i delta_i (the last coface omitted)."""
        f = self.field
        out = Matrix.zeros(f, self.dim(n + 1), self.dim(n))
        sign = f.one
        for d in self.cofaces[n][:-1]:
            out = out + d.scale(sign)
            sign = f.neg(sign)
        return out

    def lam(self, n: int) -> Matrix:
        """lambda_n = (-1)^n t_n."""
        f = self.field
        t = self.cyclics[n]
        return t if n % 2 == 0 else t.scale(f.neg(f.one))

    def norm(self, n: int) -> Matrix:
        """N = sum_{i=0}^{n} lambda^i."""
        f = self.field
        lam = self.lam(n)
        out = Matrix.identity(f, self.dim(n))
        acc = Matrix.identity(f, self.dim(n))
        for _ in range(n):
            acc = acc * lam
            out = out + acc
        return out


def _check_stability(M: Contramodule) -> bool:
    if M.flavor == HOPF_MU:
        return check_stability_hopf(M).passed
    if M.flavor == QUASI_I:
        return check_stability_quasi(M).passed
    if M.flavor == QUASI_II:
        from .coefficients import convert_II_to_I
        return check_stability_quasi(convert_II_to_I(M)).passed
    return check_stability_algebroid(M).passed


def build_cocyclic(A: ModuleAlgebra, M: Contramodule, n_max: int) -> CocyclicModule:
    """Materialise the cocyclic module up to degree n_max and verify every
    cosimplicial and cocyclic identity; raises CocyclicError naming the
    first failing relation otherwise."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if not check_algebra_object(A).passed:
        raise StructureError("the algebra object fails its axioms")
    if not _check_stability(M):
        raise StructureError("the coefficient contramodule is not stable")
    if A.parent is not M.parent:
        raise StructureError("algebra object and coefficient parents differ")

    E = CenterElement(M)
    f = A.field
    chain = TensorPowerChain(A, n_max + 1)
    coeff = M.carrier

    spaces = [hom_module_morphisms(chain.mods[n + 1], coeff)
              for n in range(n_max + 1)]

    def coords(space, vec):
        c = space.coordinates(vec)
        if c is None:
            raise CocyclicError("an operator image left its intertwiner space")
        return c

    def precompose(space_src, space_dst, carrier_map: Matrix) -> Matrix:
        """F |-> F o carrier_map, in intertwiner coordinates."""
        cols = []
        for b in space_src.basis:
            fm = Matrix(f, coeff.dim, carrier_map.rows, b)
            cols.append(coords(space_dst, (fm * carrier_map).entries))
        return Matrix.from_cols(f, cols, ambient=space_dst.dim)

    cofaces = []
    codegens = []
    cyclics = []

    def t_op(n: int, space_n) -> Matrix:
        if n == 0:
            # the order-one cyclic operator is forced to be the identity
            return Matrix.identity(f, space_n.dim)
        r_n = chain.rebracket_front(n)
        cols = []
        for b in space_n.basis:
            fm = Matrix(f, coeff.dim, chain.mods[n + 1].dim, b)
            g = fm * r_n
            out = iota_apply(E, A.carrier, chain.mods[n], g)
            cols.append(coords(space_n, out.entries))
        return Matrix.from_cols(f, cols, ambient=space_n.dim)

    for n in range(n_max + 1):
        cyclics.append(t_op(n, spaces[n]))

    for n in range(n_max):
        row = []
        for i in range(n + 1):
            mm = _mult_map(chain, n + 2, i)
            row.append(precompose(spaces[n], spaces[n + 1], mm))
        # the wrap-around coface: t_(n+1) o delta_0
        row.append(cyclics[n + 1] * row[0])
        cofaces.append(row)
        srow = []
        for j in range(n + 1):
            ins = _unit_insertion(chain, n + 1, j + 1)
            srow.append(precompose(spaces[n + 1], spaces[n], ins))
        codegens.append(srow)

    cc = CocyclicModule(n_max, spaces, cofaces, codegens, cyclics, f)
    problem = verify_cocyclic_identities(cc)
    if problem is not None:
        raise CocyclicError("cocyclic identity failed: %s" % problem)
    return cc


def verify_cocyclic_identities(cc: CocyclicModule):
    """Return None when all identities hold, else a description string."""
    f = cc.field
    for n in range(cc.n_max - 1):
        d_lo, d_hi = cc.cofaces[n], cc.cofaces[n + 1]
        for j in range(n + 3):
            for i in range(j):
                if d_hi[j] * d_lo[i] != d_hi[i] * d_lo[j - 1]:
                    return "coface relation (n=%d, i=%d, j=%d)" % (n, i, j)
    for n in range(cc.n_max - 1):
        s_hi, s_lo = cc.codegens[n + 1], cc.codegens[n]
        for j in range(n + 1):
            for i in range(j + 1):
                if s_lo[i] * s_hi[j + 1] != s_lo[j] * s_hi[i]:
                    return "codegeneracy relation (n=%d, i=%d, j=%d)" % (n, i, j)
    for n in range(cc.n_max):
        d, s = cc.cofaces[n], cc.codegens[n]
        eye = Matrix.identity(f, cc.dim(n))
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = s[j] * d[i]
                if i < j:
                    dd = cc.cofaces[n - 1][i] if n >= 1 else None
                    ss = cc.codegens[n - 1][j - 1] if n >= 1 else None
                    if dd is None or lhs != dd * ss:
                        return "mixed relation (n=%d, i=%d, j=%d)" % (n, i, j)
                elif i in (j, j + 1):
                    if lhs != eye:
                        return "mixed identity relation (n=%d, i=%d, j=%d)" % (n, i, j)
                else:
                    if n >= 1:
                        dd = cc.cofaces[n - 1][i - 1]
                        ss = cc.codegens[n - 1][j]
                        if lhs != dd * ss:
                            return "mixed relation (n=%d, i=%d, j=%d)" % (n, i, j)
    for n in range(cc.n_max + 1):
        t = cc.cyclics[n]
        acc = Matrix.identity(f, cc.dim(n))
        for _ in range(n + 1):
            acc = acc * t
        if not acc.is_identity():
            return "t^(n+1) != id (n=%d)" % n
    for n in range(cc.n_max):
        t_hi = cc.cyclics[n + 1]
        t_lo = cc.cyclics[n]
        d = cc.cofaces[n]
        if t_hi * d[0] != d[n + 1]:
            return "cyclic coface wrap (n=%d)" % n
        for i in range(1, n + 2):
            if t_hi * d[i] != d[i - 1] * t_lo:
                return "cyclic coface relation (n=%d, i=%d)" % (n, i)
        s = cc.codegens[n]
        for i in range(1, n + 1):
            if t_lo * s[i] != s[i - 1] * t_hi:
                return "cyclic codegeneracy relation (n=%d, i=%d)" % (n, i)
        if t_lo * s[0] != s[n] * (t_hi * t_hi):
            return "cyclic codegeneracy wrap (n=%d)" % n
    return None


# -- cohomology -------------------------------------------------------------------

def hochschild_cohomology(cc: CocyclicModule, up_to: int) -> CohomologyResult:
    """Betti numbers of the b-complex in degrees 0..up_to; verifies b b = 0."""
    if up_to + 1 > cc.n_max:
        raise ValueError("truncation too short: need n_max >= %d" % (up_to + 1))
    f = cc.field
    bs = [cc.boundary(n) for n in range(up_to + 1)]
    for n in range(up_to):
        if not (bs[n + 1] * bs[n]).is_zero():
            raise CocyclicError("b o b != 0 at degree %d" % n)
    dims = []
    for n in range(up_to + 1):
        ker = cc.dim(n) - bs[n].rank()
        im = bs[n - 1].rank() if n >= 1 else 0
        dims.append(ker - im)
    return CohomologyResult("hochschild", f, dims)


def cyclic_cohomology(cc: CocyclicModule, up_to: int) -> CohomologyResult:
    """Cyclic cohomology via the first-quadrant bicomplex, degrees 0..up_to.

    Columns carry b and -b', rows 1 - lambda and N; the first-quadrant
    support makes the n_max-truncation exact in the requested degrees."""
    if up_to + 1 > cc.n_max:
        raise ValueError("truncation too short: need n_max >= %d" % (up_to + 1))
    f = cc.field

    def total_dim(n):
        return sum(cc.dim(n - p) for p in range(n + 1))

    def total_matrix(n):
        rows = total_dim(n + 1)
        cols = total_dim(n)
        ent = [[f.zero] * cols for _ in range(rows)]
        col_off = []
        off = 0
        for p in range(n + 1):
            col_off.append(off)
            off += cc.dim(n - p)
        row_off = []
        off = 0
        for p in range(n + 2):
            row_off.append(off)
            off += cc.dim(n + 1 - p)
        for p in range(n + 1):
            q = n - p
            vert = cc.boundary(q) if p % 2 == 0 else \
                cc.boundary_prime(q).scale(f.neg(f.one))
            for i in range(vert.rows):
                for j in range(vert.cols):
                    v = vert.get(i, j)
                    if v != 0:
                        ent[row_off[p] + i][col_off[p] + j] = v
            eye = Matrix.identity(f, cc.dim(q))
            horiz = (eye - cc.lam(q)) if p % 2 == 0 else cc.norm(q)
            for i in range(horiz.rows):
                for j in range(horiz.cols):
                    v = horiz.get(i, j)
                    if v != 0:
                        ent[row_off[p + 1] + i][col_off[p] + j] = v
        return Matrix.from_rows(f, ent) if rows else Matrix(f, 0, cols, [])

    dims = []
    for n in range(up_to + 1):
        dn = total_matrix(n)
        ker = total_dim(n) - dn.rank()
        im = total_matrix(n - 1).rank() if n >= 1 else 0
        dims.append(ker - im)
    return CohomologyResult("cyclic", f, dims)
