"""Free-summand splitting: symmetric algebras, certificate search, cancellation.

Every positive answer comes with a certificate that re-verifies exactly, and
every negative answer with a proper trace ideal whose Groebner basis shows
``1`` is not a member.  When neither is found within the candidate budget the
outcome is tagged inconclusive.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from . import linalg
from .coefficients import FieldElement
from .errors import CertificateError, Inconclusive, NoFieldElementLeft, NotIso
from .groebner import Ideal, eliminate, krull_dim
from .modules import (
    HomFunctional,
    HomSubmodule,
    Morphism,
    PresentedModule,
    _residue,
    fitting_ideal,
    hom_apply,
    hom_dual,
    ideal_as_module,
    morphism_check,
    morphism_is_iso,
)
from .polyring import FreeVector, PolyRing

__all__ = [
    "SymPresentation",
    "SplitCertificate",
    "ObstructionReport",
    "CancelResult",
    "HRCheck",
    "sym_presentation",
    "minimal_generator_check",
    "avoid_primes",
    "free_basic_certificate",
    "split_search",
    "split_off",
    "bass_cancel",
    "huneke_rossi_check",
    "projective_unimodular_element",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 200
ROUND_SIZE = 10


# ---------------------------------------------------------------------------
# symmetric algebra


@dataclass
class SymPresentation:
    """``Sym(M) = base[u_1..u_n] / J`` with one u-linear generator per relation."""

    base: PolyRing
    ring: PolyRing
    n: int
    ideal: Ideal

    def u(self, i):
        return self.ring.gen(self.base.nvars + i)

    def dim(self):
        return krull_dim(self.ideal)


def _u_names(base, n):
    names = []
    for i in range(n):
        name = f"u{i + 1}"
        while name in base.names:
            name = "_" + name
        names.append(name)
    return names


def _linear_forms(ring, rows_of_vectors, offset):
    """``sum_i v_i * u_i`` for each vector ``v`` (entries embedded in ``ring``)."""
    out = []
    for v in rows_of_vectors:
        form = ring.zero()
        for i, c in enumerate(v.comps):
            if c:
                form = form + c.embed(ring, 0) * ring.gen(offset + i)
        if form:
            out.append(form)
    return out


def sym_presentation(M):
    """Symmetric algebra of a presented module (or of an ideal, via its syzygies)."""
    if isinstance(M, Ideal):
        M = ideal_as_module(M)
    base = M.ring
    ring = base.extend(_u_names(base, M.rank))
    forms = _linear_forms(ring, M.relations, base.nvars)
    return SymPresentation(base, ring, M.rank, Ideal(ring, forms))


def _dual_sym(P):
    """``Sym(Q^*)`` for ``Q = ker(R^g -> P)``: the u-forms of the functionals on ``P``."""
    base = P.ring
    ring = base.extend(_u_names(base, P.rank))
    forms = _linear_forms(ring, [f.vector for f in hom_dual(P)], base.nvars)
    return SymPresentation(base, ring, P.rank, Ideal(ring, forms))


# ---------------------------------------------------------------------------
# minimal generators of projectives


def _residue_side(P, r, m):
    res = _residue(P.ring, m)
    field = P.ring.field
    rv = [field.convert(c) for c in r]
    if all(field.is_zero(c) for c in rv):
        return False
    if not P.relations:
        return True
    rows = [[res.image(col[i]) for col in P.relations] for i in range(P.rank)]
    image_r = [res.image(P.ring.constant(c)) for c in rv]
    base_rank = linalg.rank(res, rows)
    aug = [row + [v] for row, v in zip(rows, image_r)]
    return linalg.rank(res, aug) > base_rank


def _sym_side(P, r, m):
    sym = _dual_sym(P)
    ring = sym.ring
    field = P.ring.field
    res = _residue(P.ring, m)
    gens = list(sym.ideal.gens)
    gens += [g.embed(ring, 0) for g in res.ideal().gens]
    gens += [sym.u(i) - ring.constant(field.convert(c)) for i, c in enumerate(r)]
    return Ideal(ring, gens).is_unit()


def minimal_generator_check(P, r, m, method="both"):
    """Is ``sum r_i eta_i`` a minimal generator of ``P`` locally at ``m``?

    ``P`` must be projective (not checked).  ``method`` selects the
    residue-field test, the symmetric-algebra test, or both with agreement
    enforced.
    """
    r = list(r)
    if len(r) != P.rank:
        from .errors import ArityMismatch

        raise ArityMismatch(f"{len(r)} coefficients for {P.rank} generators")
    if method == "residue":
        return _residue_side(P, r, m)
    if method == "sym":
        return _sym_side(P, r, m)
    a, b = _residue_side(P, r, m), _sym_side(P, r, m)
    if a != b:
        raise CertificateError(f"criteria disagree at r={r}: residue={a}, sym={b}")
    return a


def avoid_primes(primes, var_index, ring=None):
    """Smallest nonnegative integer ``c`` with ``x_l - c`` outside every given prime.

    ``var_index`` is 0-based.  For each prime at most one ``c`` is excluded,
    namely the constant normal form of ``x_l`` when there is one.
    """
    primes = list(primes)
    if ring is None:
        if not primes:
            from .coefficients import QQ

            return FieldElement(QQ, 0)
        ring = primes[0].ring
    field = ring.field
    x = ring.gen(var_index)
    bad = set()
    for P in primes:
        nf = P.groebner().reduce(x)
        if nf.is_constant():
            bad.add(nf.constant_coefficient_raw())
    limit = getattr(field, "p", None)
    c = 0
    while field.convert(c) in bad:
        c += 1
        if limit is not None and c >= limit:
            raise NoFieldElementLeft(f"all {limit} elements of {field.name} are excluded")
    value = field.convert(c)
    for P in primes:
        if P.contains(x - ring.constant(value)):
            raise CertificateError("chosen value lies in a prime")
    return FieldElement(field, value)


# ---------------------------------------------------------------------------
# certificates and reports


@dataclass
class SplitCertificate:
    """Elements ``x_j`` and functionals ``f_j`` with ``f_j(x_k) = delta_jk``.

    ``e_coeffs[j]`` writes ``f_j`` over the generators of ``E``;
    ``s_coeffs[j]`` writes ``x_j`` over the spanning elements ``S``.
    """

    module: PresentedModule
    E: HomSubmodule
    S: list
    elements: list
    functionals: list
    e_coeffs: list
    s_coeffs: list
    stats: dict = field(default_factory=dict)

    status = "ok"

    @property
    def rank(self):
        return len(self.elements)

    def projector(self):
        """Matrix columns of ``v -> sum_j f_j(v) x_j``."""
        M = self.module
        cols = []
        for l in range(M.rank):
            e = FreeVector.unit(M.ring, M.rank, l)
            v = FreeVector.zero(M.ring, M.rank)
            for x, f in zip(self.elements, self.functionals):
                c = hom_apply(f, e)
                if c:
                    v = v + x * c
            cols.append(v)
        return Morphism(M, M, cols)

    def verify(self):
        M, ring = self.module, self.module.ring
        one, zero = ring.one(), ring.zero()
        for j, f in enumerate(self.functionals):
            for k, col in enumerate(M.relations):
                if not hom_apply(f, col).is_zero():
                    raise CertificateError(f"f_{j} does not vanish on relation {k}")
            if self.E.combination(self.e_coeffs[j]).vector != f.vector:
                raise CertificateError(f"f_{j} does not match its combination of E")
            for k, x in enumerate(self.elements):
                want = one if j == k else zero
                if hom_apply(f, x) != want:
                    raise CertificateError(f"f_{j}(x_{k}) != {want}")
        for j, x in enumerate(self.elements):
            v = FreeVector.zero(ring, M.rank)
            for c, s in zip(self.s_coeffs[j], self.S):
                if c:
                    v = v + s * c
            if not M.is_zero(v - x):
                raise CertificateError(f"x_{j} is not the recorded combination of S")
        P = self.projector()
        if not morphism_check(P):
            raise CertificateError("projector is not well defined")
        PP = P.compose(P)
        for a, b in zip(PP.columns, P.columns):
            if not M.is_zero(a - b):
                raise CertificateError("projector is not idempotent")
        return True


@dataclass
class ObstructionReport:
    """Failure of a splitting search.

    With ``inconclusive`` false, ``trace_ideal`` is proper (``gb`` proves it)
    and no free summand of the requested rank exists inside the span.
    """

    trace_ideal: Ideal
    stage: int
    inconclusive: bool = False
    witness: tuple = None
    stats: dict = field(default_factory=dict)
    partial: SplitCertificate = None

    @property
    def status(self):
        return "inconclusive" if self.inconclusive else "obstruction"

    @property
    def gb(self):
        return self.trace_ideal.groebner()

    def verify(self):
        if self.inconclusive:
            return True
        if self.gb.reduce(self.trace_ideal.ring.one()).is_zero():
            raise CertificateError("trace ideal is the unit ideal")
        if self.witness is not None:
            for g in self.trace_ideal.gens:
                if not g.evaluate(self.witness).is_zero():
                    raise CertificateError("witness point does not lie on the trace ideal")
        return True


def _find_witness(I, span=2):
    ring = I.ring
    if not I.gens or ring.nvars > 4:
        return None
    field = ring.field
    vals = [field.convert(v) for v in range(-span, span + 1)]
    for pt in product(vals, repeat=ring.nvars):
        if all(field.is_zero(g.evaluate_raw(pt)) for g in I.gens):
            return tuple(FieldElement(field, v) for v in pt)
    return None


# ---------------------------------------------------------------------------
# search machinery


class _Stage:
    """Split-off state: module ``M_k``, projected functionals, biorthogonal pairs."""

    def __init__(self, M, E, S):
        self.M0, self.E, self.S = M, E, list(S)
        self.xs, self.fs, self.xcoef, self.fcoef = [], [], [], []
        self.ring = M.ring

    def module(self):
        return self.M0.with_relations(self.xs)

    def projected(self):
        """Generators ``e - sum_j e(x_j) f_j`` with their coefficients over E."""
        ring, n = self.ring, len(self.E)
        out = []
        for i, e in enumerate(self.E):
            v = e.vector
            coef = [ring.zero()] * n
            coef[i] = ring.one()
            for x, f, fc in zip(self.xs, self.fs, self.fcoef):
                c = hom_apply(e, x)
                if c:
                    v = v - f.vector * c
                    coef = [a - b * c for a, b in zip(coef, fc)]
            out.append((v, coef))
        return out

    def try_candidate(self, x, xc, proj):
        """Test ``x``; on success append the projected pair and return True."""
        ring = self.ring
        values = [v.dot(x) for v, _ in proj]
        idx = [i for i, v in enumerate(values) if v]
        if not idx:
            return False
        I = Ideal(ring, [values[i] for i in idx])
        cof = I.lift(ring.one())
        if cof is None:
            return False
        n = len(self.E)
        fv = FreeVector.zero(ring, self.M0.rank)
        fcoef = [ring.zero()] * n
        for c, i in zip(cof, idx):
            if c:
                fv = fv + proj[i][0] * c
                fcoef = [a + b * c for a, b in zip(fcoef, proj[i][1])]
        xk, xkc = x, list(xc)
        for xj, f, xjc in zip(self.xs, self.fs, self.xcoef):
            c = hom_apply(f, x)
            if c:
                xk = xk - xj * c
                xkc = [a - b * c for a, b in zip(xkc, xjc)]
        self.xs.append(xk)
        self.xcoef.append(xkc)
        self.fs.append(HomFunctional(self.M0, fv))
        self.fcoef.append(fcoef)
        return True

    def certificate(self, stats):
        return SplitCertificate(
            module=self.M0,
            E=self.E,
            S=self.S,
            elements=list(self.xs),
            functionals=list(self.fs),
            e_coeffs=list(self.fcoef),
            s_coeffs=list(self.xcoef),
            stats=dict(stats),
        )


def _trace(ring, proj, S):
    entries, values = [], []
    for i, (v, _) in enumerate(proj):
        for j, s in enumerate(S):
            val = v.dot(s)
            if val:
                entries.append((i, j))
                values.append(val)
    return Ideal(ring, values), entries


def _random_poly(ring, rng, bound, degree):
    field = ring.field
    if degree == 0:
        return ring.constant(field.random_element(rng, bound))
    terms = {}
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(ring.nvars), d):
            e = [0] * ring.nvars
            for i in combo:
                e[i] += 1
            terms[tuple(e)] = field.random_element(rng, bound)
    return ring.from_dict(terms)


def _unit_coeffs(ring, n, j):
    c = [ring.zero()] * n
    c[j] = ring.one()
    return c


def _candidates(ring, S, lifts, rng, budget):
    """Yield ``(vector, coefficients over S)``: generators, trace lifts, then random."""
    n = len(S)
    pool = [(s, _unit_coeffs(ring, n, j)) for j, s in enumerate(S)] + lifts
    count = 0
    for v, c in pool:
        if count >= budget:
            return
        if not v.is_zero():
            count += 1
            yield v, c
    rnd = 0
    while count < budget:
        bound = 2 * max(len(pool), 1) * 2**rnd
        degree = 0 if rnd < 2 else (1 if rnd < 4 else 2)
        for _ in range(ROUND_SIZE):
            if count >= budget:
                return
            coeffs = [_random_poly(ring, rng, bound, degree) for _ in pool]
            v = FreeVector.zero(ring, len(S[0]))
            c = [ring.zero()] * n
            for r, (pv, pc) in zip(coeffs, pool):
                if r:
                    v = v + pv * r
                    c = [a + b * r for a, b in zip(c, pc)]
            if v.is_zero():
                continue
            count += 1
            yield v, c
        rnd += 1


def _trace_lifts(ring, I, entries, S, nE):
    """Elements ``y_i = sum_j g_ij s_j`` from a representation ``1 = sum g_ij e_i(s_j)``."""
    cof = I.lift(ring.one())
    if cof is None:
        return []
    per = {}
    for (i, j), c in zip(entries, cof):
        if c:
            per.setdefault(i, {})[j] = c
    out = []
    g = len(S[0]) if S else 0
    for i in sorted(per):
        v = FreeVector.zero(ring, g)
        coef = [ring.zero()] * len(S)
        for j, c in per[i].items():
            v = v + S[j] * c
            coef[j] = c
        out.append((v, coef))
    return out


def _as_vectors(M, items):
    out = []
    for s in items:
        if hasattr(s, "vector"):
            s = s.vector
        if not isinstance(s, FreeVector):
            s = M.ring.vector(s)
        out.append(s)
    return out


def free_basic_certificate(M, E, x):
    """Rank-one certificate for ``x`` or the proper evaluation ideal ``({f_i(x)})``."""
    E = E if E is not None else hom_dual(M)
    (x,) = _as_vectors(M, [x])
    st = _Stage(M, E, [x])
    proj = st.projected()
    if st.try_candidate(x, [M.ring.one()], proj):
        return st.certificate({"candidates": 1})
    values = [v.dot(x) for v, _ in proj]
    I = Ideal(M.ring, [v for v in values if v])
    return ObstructionReport(trace_ideal=I, stage=1, witness=_find_witness(I), stats={"candidates": 1})


def split_search(M, E=None, rank=1, restrict_to=None, seed=0, budget=DEFAULT_BUDGET):
    """Search for a free E-summand of the given rank inside the span of ``restrict_to``.

    Returns a :class:`SplitCertificate` or an :class:`ObstructionReport`.
    Deterministic for a fixed ``seed``.
    """
    if rank < 1:
        raise ValueError("rank must be at least 1")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    t0 = time.perf_counter()
    ring = M.ring
    E = E if E is not None else hom_dual(M)
    S = _as_vectors(M, restrict_to) if restrict_to is not None else [g.vector for g in M.gens()]
    st = _Stage(M, E, S)
    stats = {"candidates": 0, "per_stage": []}

    def done(result):
        stats["elapsed_ms"] = (time.perf_counter() - t0) * 1000.0
        result.stats = dict(stats)
        return result

    for k in range(1, rank + 1):
        proj = st.projected()
        I, entries = _trace(ring, proj, S)
        if not S or not I.gens or not I.is_unit():
            partial = st.certificate(stats) if st.xs else None
            return done(ObstructionReport(trace_ideal=I, stage=k, witness=_find_witness(I), partial=partial))
        rng = random.Random(seed * 1_000_003 + k)
        lifts = _trace_lifts(ring, I, entries, S, len(E))
        used = 0
        found = False
        for v, c in _candidates(ring, S, lifts, rng, budget):
            used += 1
            if st.try_candidate(v, c, proj):
                found = True
                break
        stats["candidates"] += used
        stats["per_stage"].append(used)
        if not found:
            partial = st.certificate(stats) if st.xs else None
            return done(ObstructionReport(trace_ideal=I, stage=k, inconclusive=True, partial=partial))
    return done(st.certificate(stats))


def split_off(M, E, S, x, f):
    """Quotient data after splitting off ``<x>`` along ``f`` (``f(x) = 1``).

    Returns ``(M', E', S')`` with ``M' = M/<x>``, ``E'`` the functionals
    ``e - e(x) f`` and ``S'`` the images of ``S``.
    """
    (x,) = _as_vectors(M, [x])
    fv = f.vector if isinstance(f, HomFunctional) else M.ring.vector(f)
    if not fv.dot(x) == M.ring.one():
        raise ValueError("f(x) must equal 1")
    M2 = M.with_relations([x])
    gens = []
    for e in E:
        c = hom_apply(e, x)
        gens.append(HomFunctional(M2, e.vector - fv * c))
    S2 = _as_vectors(M, S)
    return M2, HomSubmodule(M2, gens), S2


# ---------------------------------------------------------------------------
# unimodular elements of projectives through the symmetric algebra


def projective_unimodular_element(P, span=3):
    """Constant coefficients ``r`` making ``sum r_i eta_i`` unimodular in projective ``P``.

    Eliminates the base variables from the symmetric algebra of ``Q^*`` and
    picks an integer point off the zero set of what remains.  Returns
    ``(r, certificate)`` or ``None`` when that ideal is zero or no point in
    the search box works.
    """
    sym = _dual_sym(P)
    k = P.ring.nvars
    I = eliminate(sym.ideal, k)
    gens = [g for g in I.gens if g]
    if not gens:
        return None
    field = P.ring.field
    vals = list(range(0, span + 1))
    for pt in sorted(product(vals, repeat=P.rank), key=lambda p: (sum(p), p)):
        raw = (0,) * k + tuple(field.convert(v) for v in pt)
        if any(not field.is_zero(g.evaluate_raw(raw)) for g in gens):
            x = P.ring.vector(list(pt))
            cert = free_basic_certificate(P, hom_dual(P), x)
            if isinstance(cert, SplitCertificate):
                return [FieldElement(field, v) for v in pt], cert
            raise CertificateError("point off the eliminated ideal is not unimodular")
    return None


# ---------------------------------------------------------------------------
# cancellation


@dataclass
class CancelResult:
    morphism: Morphism
    alpha: Morphism
    beta: Morphism
    gamma: Morphism
    eta: Morphism
    epsilon: Morphism
    a: object
    x1: FreeVector
    z: FreeVector
    x: FreeVector
    f: HomFunctional
    stats: dict = field(default_factory=dict)

    status = "ok"

    def verify(self):
        T = self.alpha.target
        ring = T.ring
        a_x1 = FreeVector(ring, [self.a] + list(self.x1.comps))
        a_x = FreeVector(ring, [self.a] + list(self.x.comps))
        one_x = FreeVector(ring, [ring.one()] + list(self.x.comps))
        one_0 = FreeVector.unit(ring, T.rank, 0)
        for name, H in (("beta", self.beta), ("gamma", self.gamma), ("eta", self.eta), ("epsilon", self.epsilon)):
            if not morphism_check(H):
                raise CertificateError(f"{name} is not well defined")
        if hom_apply(self.f, self.x) != ring.one():
            raise CertificateError("f(x) != 1")
        checks = (
            ("beta(a, x1) = (a, x)", self.beta.apply(a_x1), a_x),
            ("gamma(a, x) = (1, x)", self.gamma.apply(a_x), one_x),
            ("eta(1, x) = (1, 0)", self.eta.apply(one_x), one_0),
            ("epsilon(1, 0) = (1, 0)", self.epsilon.columns[0], one_0),
        )
        for label, got, want in checks:
            if not T.is_zero(got - want):
                raise CertificateError(f"identity {label} fails")
        if not morphism_is_iso(self.morphism):
            raise CertificateError("induced map is not an isomorphism")
        return True


def split_free_head(P):
    """``P = R + X`` with a free first generator: return ``X`` or ``None``."""
    if P.rank < 1:
        return None
    if any(not col[0].is_zero() for col in P.relations):
        return None
    ring = P.ring
    cols = [FreeVector(ring, col.comps[1:]) for col in P.relations if not FreeVector(ring, col.comps[1:]).is_zero()]
    return PresentedModule(ring, P.rank - 1, cols)


def bass_cancel(alpha, seed=0, budget=DEFAULT_BUDGET):
    """Iso ``N -> M`` from an iso ``alpha: R + N -> R + M``."""
    t0 = time.perf_counter()
    N = split_free_head(alpha.source)
    M = split_free_head(alpha.target)
    if N is None or M is None:
        raise ValueError("source and target must have a free first generator")
    report = morphism_is_iso(alpha)
    if not report:
        raise NotIso(f"alpha is not an isomorphism ({report.kind})")
    ring = alpha.ring
    T = alpha.target
    g = M.rank
    col0 = alpha.columns[0]
    a = col0[0]
    x1 = FreeVector(ring, col0.comps[1:])
    E = hom_dual(M)
    rng = random.Random(seed)
    zero = FreeVector.zero(ring, g)
    cands = [zero] + [FreeVector.unit(ring, g, j) for j in range(g)]
    tried = 0
    cert = z = None
    rnd = 0
    while tried < budget:
        if not cands:
            bound = 2 * max(g, 1) * 2**rnd
            degree = 0 if rnd < 2 else (1 if rnd < 4 else 2)
            cands = [FreeVector(ring, [_random_poly(ring, rng, bound, degree) for _ in range(g)]) for _ in range(ROUND_SIZE)]
            rnd += 1
        z = cands.pop(0)
        tried += 1
        x = x1 + z * a
        if x.is_zero():
            continue
        res = free_basic_certificate(M, E, x)
        if isinstance(res, SplitCertificate):
            cert = res
            break
    stats = {"candidates": tried, "elapsed_ms": (time.perf_counter() - t0) * 1000.0}
    if cert is None:
        raise Inconclusive("no free-basic element of the form x1 + a*z found", stats)
    f = cert.functionals[0]

    def block(first, rest):
        return FreeVector(ring, [first] + list(rest.comps))

    units = [FreeVector.unit(ring, g, j) for j in range(g)]
    beta = Morphism(T, T, [block(ring.one(), z)] + [block(ring.zero(), e) for e in units])
    psi = [(ring.one() - a) * hom_apply(f, e) for e in units]
    gamma = Morphism(T, T, [FreeVector.unit(ring, g + 1, 0)] + [block(p, e) for p, e in zip(psi, units)])
    eta = Morphism(T, T, [block(ring.one(), -x)] + [block(ring.zero(), e) for e in units])
    eps = eta.compose(gamma.compose(beta.compose(alpha)))
    induced = Morphism(N, M, [FreeVector(ring, c.comps[1:]) for c in eps.columns[1:]])
    result = CancelResult(
        morphism=induced,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        eta=eta,
        epsilon=eps,
        a=a,
        x1=x1,
        z=z,
        x=x,
        f=f,
        stats=stats,
    )
    result.verify()
    return result


# ---------------------------------------------------------------------------
# dimension cross-check


@dataclass
class HRCheck:
    match: bool
    sym_dim: int
    stratified: int
    strata: list

    @property
    def status(self):
        return "match" if self.match else "mismatch"


def huneke_rossi_check(M, base_ideal=None):
    """Compare ``dim Sym(M)`` with ``max_t (t + dim R/Fitt_{t-1}(M))``.

    ``base_ideal`` (a prime of the polynomial ring) lets the base be a domain
    quotient; ``M``'s relations are then read modulo it.
    """
    ring = M.ring
    base = list(base_ideal.gens) if base_ideal is not None else []
    sym = sym_presentation(M)
    J = Ideal(sym.ring, list(sym.ideal.gens) + [b.embed(sym.ring, 0) for b in base])
    left = krull_dim(J)
    strata = []
    best = None
    for t in range(M.rank + 1):
        F = Ideal(ring, base) if t == 0 else Ideal(ring, list(fitting_ideal(M, t - 1).gens) + base)
        d = krull_dim(F)
        if d < 0:
            continue
        strata.append((t, d))
        best = t + d if best is None else max(best, t + d)
    best = -1 if best is None else best
    return HRCheck(match=left == best, sym_dim=left, stratified=best, strata=strata)
