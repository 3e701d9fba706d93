"""Finitely presented modules, their duals and morphisms, and local invariants.

Conventions: a module ``M = coker(A)`` has ``rank`` generators; ``A`` has one
*column* per relation.  Elements are length-``rank`` vectors read modulo the
column span, functionals are row vectors ``u`` with ``u A = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .errors import (
    ArityMismatch,
    CertificateError,
    NotAField,
    NotAFunctional,
    NotUnivariate,
    NotWellDefined,
    RingMismatch,
)
from .groebner import Ideal, Submodule, krull_dim, syzygies
from .polyring import FreeVector, univariate_divmod

__all__ = [
    "PresentedModule",
    "ModuleElement",
    "HomFunctional",
    "HomSubmodule",
    "Morphism",
    "MorphismCheck",
    "IsoReport",
    "RationalPoint",
    "MaximalIdeal",
    "SmithForm",
    "hom_dual",
    "hom_apply",
    "morphism_check",
    "morphism_is_iso",
    "direct_sum",
    "ideal_as_module",
    "fitting_ideal",
    "determinant",
    "mu_at",
    "delta_at",
    "evaluation_matrix",
    "trace_ideal",
    "snf_decompose",
]


def _vec(ring, g, v):
    if isinstance(v, ModuleElement):
        v = v.vector
    if isinstance(v, HomFunctional):
        v = v.vector
    if not isinstance(v, FreeVector):
        v = FreeVector(ring, [ring(c) for c in v])
    if v.ring != ring:
        raise RingMismatch("vector over a different ring")
    if len(v) != g:
        raise ArityMismatch(f"vector of length {len(v)} for a module with {g} generators")
    return v


class PresentedModule:
    """``coker(A)`` for a ``rank x len(relations)`` matrix given by its columns."""

    def __init__(self, ring, rank, relations=()):
        self.ring = ring
        self.rank = rank
        self.relations = tuple(_vec(ring, rank, c) for c in relations)
        self._relmod = None

    @classmethod
    def free(cls, ring, rank):
        return cls(ring, rank, ())

    @property
    def ncols(self):
        return len(self.relations)

    def entry(self, i, j):
        return self.relations[j][i]

    def matrix(self):
        """Relation matrix as a list of rows."""
        return [[col[i] for col in self.relations] for i in range(self.rank)]

    @property
    def relation_module(self):
        if self._relmod is None:
            self._relmod = Submodule(self.ring, self.rank, self.relations)
        return self._relmod

    def element(self, comps):
        return ModuleElement(self, comps)

    def gens(self):
        return [ModuleElement(self, FreeVector.unit(self.ring, self.rank, i)) for i in range(self.rank)]

    def is_zero(self, v):
        """Is the vector ``v`` zero in the module (a combination of relations)?"""
        v = _vec(self.ring, self.rank, v)
        if v.is_zero():
            return True
        if not self.relations:
            return False
        return self.relation_module.contains(v)

    def with_relations(self, extra):
        return PresentedModule(self.ring, self.rank, self.relations + tuple(extra))

    def __eq__(self, other):
        if not isinstance(other, PresentedModule):
            return NotImplemented
        return self.ring == other.ring and self.rank == other.rank and self.relations == other.relations

    def __hash__(self):
        return hash((self.rank, self.relations))

    def __repr__(self):
        cols = ", ".join(str(c) for c in self.relations)
        return f"PresentedModule(rank={self.rank}, relations=[{cols}])"


class ModuleElement:
    """A vector of the free ambient, read modulo the relations."""

    __slots__ = ("module", "vector")

    def __init__(self, module, comps):
        self.module = module
        self.vector = _vec(module.ring, module.rank, comps)

    def __add__(self, other):
        return ModuleElement(self.module, self.vector + _vec(self.module.ring, self.module.rank, other))

    def __sub__(self, other):
        return ModuleElement(self.module, self.vector - _vec(self.module.ring, self.module.rank, other))

    def __neg__(self):
        return ModuleElement(self.module, -self.vector)

    def __mul__(self, scalar):
        return ModuleElement(self.module, self.vector * scalar)

    __rmul__ = __mul__

    def is_zero(self):
        return self.module.is_zero(self.vector)

    def equiv(self, other):
        return (self - other).is_zero()

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.module == other.module and self.vector == other.vector

    def __hash__(self):
        return hash(self.vector)

    def __repr__(self):
        return f"ModuleElement{self.vector}"


class HomFunctional:
    """A homomorphism ``M -> R`` stored as a row vector annihilating every relation."""

    __slots__ = ("module", "vector")

    def __init__(self, module, comps, check=True):
        self.module = module
        self.vector = _vec(module.ring, module.rank, comps)
        if check:
            for j, col in enumerate(module.relations):
                if not self.vector.dot(col).is_zero():
                    raise NotAFunctional(f"functional does not vanish on relation column {j}")

    def __call__(self, m):
        return hom_apply(self, m)

    def __add__(self, other):
        return HomFunctional(self.module, self.vector + other.vector, check=False)

    def __sub__(self, other):
        return HomFunctional(self.module, self.vector - other.vector, check=False)

    def __mul__(self, scalar):
        return HomFunctional(self.module, self.vector * scalar, check=False)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HomFunctional):
            return NotImplemented
        return self.module == other.module and self.vector == other.vector

    def __hash__(self):
        return hash(self.vector)

    def __repr__(self):
        return f"HomFunctional{self.vector}"


class HomSubmodule:
    """An R-submodule of ``Hom(M, R)`` given by generating functionals."""

    def __init__(self, module, gens):
        self.module = module
        self.gens = tuple(g if isinstance(g, HomFunctional) else HomFunctional(module, g) for g in gens)
        for g in self.gens:
            if g.module != module:
                raise ArityMismatch("functional belongs to another module")

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def scaled(self, c):
        """The submodule ``c * E``."""
        c = self.module.ring(c)
        return HomSubmodule(self.module, [HomFunctional(self.module, g.vector * c, check=False) for g in self.gens])

    def combination(self, coeffs):
        ring = self.module.ring
        v = FreeVector.zero(ring, self.module.rank)
        for c, g in zip(coeffs, self.gens):
            if c:
                v = v + g.vector * c
        return HomFunctional(self.module, v, check=False)

    def as_submodule(self):
        """The generators as a submodule of the free dual ``R^rank``."""
        return Submodule(self.module.ring, self.module.rank, [g.vector for g in self.gens])

    def __repr__(self):
        return "HomSubmodule([" + ", ".join(str(g.vector) for g in self.gens) + "])"


def hom_apply(f, m):
    """Evaluate ``f`` on ``m``: the dot product of the two vectors."""
    v = _vec(f.module.ring, f.module.rank, m)
    return f.vector.dot(v)


def hom_dual(M):
    """Generators of ``Hom(M, R)``: the syzygies of the rows of the relation matrix."""
    ring = M.ring
    rows = [FreeVector(ring, [col[i] for col in M.relations]) for i in range(M.rank)]
    K = syzygies(Submodule(ring, M.ncols, rows))
    gens = [HomFunctional(M, v) for v in K.gens]
    return HomSubmodule(M, gens)


def direct_sum(M, N):
    if M.ring != N.ring:
        raise RingMismatch("modules over different rings")
    ring = M.ring
    zm = [ring.zero()] * M.rank
    zn = [ring.zero()] * N.rank
    cols = [FreeVector(ring, list(c.comps) + zn) for c in M.relations]
    cols += [FreeVector(ring, zm + list(c.comps)) for c in N.relations]
    return PresentedModule(ring, M.rank + N.rank, cols)


def ideal_as_module(I):
    """The ideal ``I`` as a module: generators ``I.gens``, relations their syzygies."""
    K = syzygies(I)
    return PresentedModule(I.ring, len(I.gens), K.gens)


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class MorphismCheck:
    well_defined: bool
    column: int = None

    def __bool__(self):
        return self.well_defined


@dataclass
class IsoReport:
    kind: str  # 'iso' | 'not_surjective' | 'not_injective'
    inverse: "Morphism" = None
    witness: FreeVector = None

    def __bool__(self):
        return self.kind == "iso"


class Morphism:
    """``source -> target`` given by the images of the source generators (matrix columns)."""

    def __init__(self, source, target, columns):
        if source.ring != target.ring:
            raise RingMismatch("morphism between modules over different rings")
        self.source = source
        self.target = target
        self.ring = source.ring
        cols = tuple(_vec(self.ring, target.rank, c) for c in columns)
        if len(cols) != source.rank:
            raise ArityMismatch(f"{len(cols)} columns for a source with {source.rank} generators")
        self.columns = cols

    @classmethod
    def from_rows(cls, source, target, rows):
        ring = source.ring
        cols = [[ring(rows[i][j]) for i in range(target.rank)] for j in range(source.rank)]
        return cls(source, target, cols)

    @classmethod
    def identity(cls, M):
        return cls(M, M, [FreeVector.unit(M.ring, M.rank, i) for i in range(M.rank)])

    def matrix(self):
        return [[col[i] for col in self.columns] for i in range(self.target.rank)]

    def apply(self, v):
        v = _vec(self.ring, self.source.rank, v)
        out = FreeVector.zero(self.ring, self.target.rank)
        for c, col in zip(v.comps, self.columns):
            if c:
                out = out + col * c
        return out

    def __call__(self, v):
        return ModuleElement(self.target, self.apply(v))

    def compose(self, inner):
        """``self o inner``."""
        return Morphism(inner.source, self.target, [self.apply(c) for c in inner.columns])

    def check(self):
        return morphism_check(self)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.columns == other.columns

    __hash__ = None

    def __repr__(self):
        return "Morphism([" + ", ".join(str(c) for c in self.columns) + "])"


def morphism_check(H):
    """Well-definedness: every source relation must map into the target relations."""
    for j, rel in enumerate(H.source.relations):
        if not H.target.is_zero(H.apply(rel)):
            return MorphismCheck(False, j)
    return MorphismCheck(True)


def _equiv_identity(F, M):
    """Does the endomorphism ``F`` of ``M`` agree with the identity modulo relations?"""
    for i, col in enumerate(F.columns):
        if not M.is_zero(col - FreeVector.unit(M.ring, M.rank, i)):
            return False
    return True


def morphism_is_iso(H):
    """Decide bijectivity; on success return an explicit verified inverse."""
    if not morphism_check(H):
        raise NotWellDefined("matrix does not define a homomorphism")
    ring, S, T = H.ring, H.source, H.target
    gens = list(H.columns) + list(T.relations)
    span = Submodule(ring, T.rank, gens)
    inverse_cols = []
    for j in range(T.rank):
        e = FreeVector.unit(ring, T.rank, j)
        coeffs = span.lift(e) if gens else None
        if coeffs is None:
            return IsoReport("not_surjective", witness=e)
        inverse_cols.append(FreeVector(ring, coeffs[: S.rank]))
    if gens:
        for v in syzygies(span).gens:
            w = FreeVector(ring, v.comps[: S.rank])
            if not S.is_zero(w):
                return IsoReport("not_injective", witness=w)
    G = Morphism(T, S, inverse_cols)
    if not morphism_check(G) or not _equiv_identity(H.compose(G), T) or not _equiv_identity(G.compose(H), S):
        raise CertificateError("constructed inverse failed verification")
    return IsoReport("iso", inverse=G)


# ---------------------------------------------------------------------------
# Fitting ideals


def determinant(rows):
    """Determinant of a small square polynomial matrix by cofactor expansion."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        a = rows[0][j]
        if a.is_zero():
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = a * determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else rows[0][0].ring.zero()


def fitting_ideal(M, t):
    """``Fitt_t(M)``: the ideal of ``(rank - t)``-minors of the relation matrix."""
    if t < 0:
        raise ValueError("Fitting index must be nonnegative")
    ring = M.ring
    k = M.rank - t
    if k <= 0:
        return Ideal(ring, [ring.one()])
    if k > M.ncols:
        return Ideal(ring, [])
    A = M.matrix()
    minors = []
    for rs in combinations(range(M.rank), k):
        for cs in combinations(range(M.ncols), k):
            d = determinant([[A[i][j] for j in cs] for i in rs])
            if not d.is_zero():
                minors.append(d)
    return Ideal(ring, minors)


# ---------------------------------------------------------------------------
# maximal ideals and residue fields


class _PointResidue:
    """Residue field ``k`` at a rational point: images are raw field values."""

    def __init__(self, ring, coords):
        self.ring = ring
        self.field = ring.field
        if len(coords) != ring.nvars:
            raise ArityMismatch(f"point of length {len(coords)} in {ring.nvars} variables")
        self.point = [self.field.convert(c) for c in coords]
        self.zero, self.one = self.field.zero, self.field.one
        for name in ("add", "sub", "mul", "is_zero", "neg"):
            setattr(self, name, getattr(self.field, name))

    def image(self, f):
        return f.evaluate_raw(self.point)

    def inv(self, a):
        return self.field.inv(a)

    def ideal(self):
        ring = self.ring
        return Ideal(ring, [ring.gen(i) - ring.constant(c) for i, c in enumerate(self.point)])


class _QuotientResidue:
    """``R/m`` for a zero-dimensional ideal ``m``, arithmetic by normal forms.

    Inversion solves a linear system on the standard-monomial basis; failure on
    a nonzero element proves ``m`` is not maximal.
    """

    def __init__(self, ring, ideal):
        self.ring = ring
        self.field = ring.field
        self.m = ideal
        self.gb = ideal.groebner()
        dim = krull_dim(ideal)
        if dim != 0:
            raise NotAField(f"ideal has dimension {dim}, not a maximal ideal")
        self.basis = self._standard_monomials()
        self._pos = {e: i for i, e in enumerate(self.basis)}
        self.zero = ring.zero()
        self.one = self.gb.reduce(ring.one())

    def _standard_monomials(self):
        lts = [e for _, e in self.gb.leading_monomials()]
        n = self.ring.nvars
        seen, frontier = set(), [(0,) * n]
        while frontier:
            e = frontier.pop()
            if e in seen or any(all(a <= b for a, b in zip(lt, e)) for lt in lts):
                continue
            seen.add(e)
            for i in range(n):
                frontier.append(e[:i] + (e[i] + 1,) + e[i + 1 :])
        key = self.ring.order.key
        return sorted(seen, key=key)

    def image(self, f):
        return self.gb.reduce(f)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return self.gb.reduce(a * b)

    def is_zero(self, a):
        return a.is_zero()

    def coords(self, a):
        v = [self.field.zero] * len(self.basis)
        for e, c in a._t.items():
            v[self._pos[e]] = c
        return v

    def inv(self, a):
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero in the residue field")
        cols = [self.coords(self.mul(a, self.ring.monomial(b))) for b in self.basis]
        A = [[cols[j][i] for j in range(len(cols))] for i in range(len(self.basis))]
        x = linalg.solve(self.field, A, self.coords(self.one))
        if x is None:
            raise NotAField(f"{a} is not invertible modulo the ideal")
        return self.ring.from_dict({b: c for b, c in zip(self.basis, x)})

    def ideal(self):
        return self.m


class RationalPoint:
    """Maximal ideal ``(x_1 - p_1, ..., x_n - p_n)`` of a rational point."""

    def __init__(self, coords):
        self.coords = tuple(coords)

    def residue_field(self, ring):
        return _PointResidue(ring, self.coords)

    def __repr__(self):
        return f"RationalPoint{self.coords}"


class MaximalIdeal:
    """Maximal ideal given by generators; maximality is checked lazily."""

    def __init__(self, ideal):
        self.ideal = ideal

    def residue_field(self, ring):
        if self.ideal.ring != ring:
            raise RingMismatch("maximal ideal from another ring")
        return _QuotientResidue(ring, self.ideal)

    def __repr__(self):
        return f"MaximalIdeal({self.ideal})"


def _residue(ring, m):
    if isinstance(m, (RationalPoint, MaximalIdeal)):
        return m.residue_field(ring)
    if isinstance(m, Ideal):
        return MaximalIdeal(m).residue_field(ring)
    return RationalPoint(m).residue_field(ring)


def mu_at(M, m):
    """Minimal number of generators of ``M`` localized at the maximal ideal ``m``."""
    res = _residue(M.ring, m)
    if not M.relations:
        return M.rank
    rows = [[res.image(M.relations[j][i]) for j in range(M.ncols)] for i in range(M.rank)]
    return M.rank - linalg.rank(res, rows)


def evaluation_matrix(M, S, E):
    """Polynomial matrix ``[f_i(s_j)]`` for functionals ``E`` and elements ``S``."""
    gens = E.gens if isinstance(E, HomSubmodule) else tuple(E)
    return [[hom_apply(f, s) for s in S] for f in gens]


def delta_at(M, S, E, m):
    """Rank of a free E-summand inside <S> locally at ``m``.

    Equal to the rank over the residue field of the evaluation matrix
    ``[f_i(s_j) mod m]``.  ``S`` defaults to the generators, ``E`` to all of Hom(M, R).
    """
    S = list(M.gens() if S is None else S)
    if E is None:
        E = hom_dual(M)
    gens = E.gens if isinstance(E, HomSubmodule) else tuple(E)
    if not S or not gens:
        return 0
    res = _residue(M.ring, m)
    rows = [[res.image(v) for v in row] for row in evaluation_matrix(M, S, gens)]
    return linalg.rank(res, rows)


def trace_ideal(M, E, S=None):
    """Ideal generated by all ``f(s)``, ``f`` in ``E``, ``s`` in ``S`` (default: generators)."""
    if S is None:
        S = M.gens()
    values = [v for row in evaluation_matrix(M, list(S), E) for v in row if not v.is_zero()]
    return Ideal(M.ring, values)


# ---------------------------------------------------------------------------
# Smith normal form over k[t]


@dataclass
class SmithForm:
    U: list
    V: list
    D: list
    invariants: list
    free_rank: int


def _matmul(A, B, ring):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = [[ring.zero() for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for j in range(m):
            s = ring.zero()
            for l in range(k):
                if A[i][l] and B[l][j]:
                    s = s + A[i][l] * B[l][j]
            out[i][j] = s
    return out


def snf_decompose(M):
    """Smith form ``U A V = D`` of the relation matrix over a univariate ring."""
    ring = M.ring
    if ring.nvars != 1:
        raise NotUnivariate("Smith normal form needs a one-variable ring")
    g, c = M.rank, M.ncols
    A = [[M.relations[j][i] for j in range(c)] for i in range(g)]
    U = [[ring.one() if i == j else ring.zero() for j in range(g)] for i in range(g)]
    V = [[ring.one() if i == j else ring.zero() for j in range(c)] for i in range(c)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] = row[dst] + q * row[src]
        for row in V:
            row[dst] = row[dst] + q * row[src]

    for s in range(min(g, c)):
        while True:
            best = None
            for i in range(s, g):
                for j in range(s, c):
                    if A[i][j] and (best is None or A[i][j].degree() < A[best[0]][best[1]].degree()):
                        best = (i, j)
            if best is None:
                break
            swap_rows(s, best[0])
            swap_cols(s, best[1])
            p = A[s][s]
            dirty = False
            for i in range(s + 1, g):
                if A[i][s]:
                    q, r = univariate_divmod(A[i][s], p)
                    add_row(i, s, -q)
                    dirty = dirty or bool(r)
            for j in range(s + 1, c):
                if A[s][j]:
                    q, r = univariate_divmod(A[s][j], p)
                    add_col(j, s, -q)
                    dirty = dirty or bool(r)
            if dirty:
                continue
            bad = None
            for i in range(s + 1, g):
                for j in range(s + 1, c):
                    if A[i][j] and univariate_divmod(A[i][j], p)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(s, bad, ring.one())
        if A[s][s]:
            lc = A[s][s].leading_term()[0].value
            inv = ring.field.inv(lc)
            A[s] = [a.scale(inv) for a in A[s]]
            U[s] = [a.scale(inv) for a in U[s]]
    invariants = [A[i][i] for i in range(min(g, c)) if A[i][i]]
    return SmithForm(U=U, V=V, D=A, invariants=invariants, free_rank=g - len(invariants))
