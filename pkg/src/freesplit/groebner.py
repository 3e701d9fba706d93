"""Buchberger engine for ideals and submodules of free modules.

Internally every element is a dict ``{(comp, e_1, ..., e_n): raw coeff}``;
ideals use ``comp == 0`` throughout.  Module terms are ordered
position-over-term with the lower component index winning, so the leading
term of a vector lives in its first nonzero component.  That makes kernels
and component elimination a plain restriction of the basis.
"""

from __future__ import annotations

import heapq
from itertools import combinations

from .errors import ArityMismatch, RingMismatch
from .polyring import FreeVector, Polynomial

__all__ = [
    "GroebnerBasis",
    "Ideal",
    "Submodule",
    "buchberger",
    "normal_form",
    "syzygies",
    "eliminate",
    "intersect",
    "saturate",
    "quotient",
    "krull_dim",
    "independent_sets",
]


# ---------------------------------------------------------------------------
# term-level helpers


def _neg_key(k):
    if isinstance(k, tuple):
        return tuple(_neg_key(x) for x in k)
    return -k


class _Context:
    """Field and order data for one engine run."""

    def __init__(self, ring, is_ideal):
        self.ring = ring
        self.field = ring.field
        self.is_ideal = is_ideal
        self._okey = ring.order.key
        self._nk = {}
        self.zero_exps = (0,) * ring.nvars

    def nkey(self, m):
        """Heap key: smaller means larger in the term order."""
        k = self._nk.get(m)
        if k is None:
            k = (m[0], _neg_key(self._okey(m[1:])))
            self._nk[m] = k
        return k

    def lt(self, p):
        return min(p, key=self.nkey)


def _divides(a, b):
    if a[0] != b[0]:
        return False
    for x, y in zip(a[1:], b[1:]):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return (a[0],) + tuple(x if x > y else y for x, y in zip(a[1:], b[1:]))


def _coprime(a, b):
    for x, y in zip(a[1:], b[1:]):
        if x and y:
            return False
    return True


def _shift(p, exps, coeff, field):
    """``coeff * x^exps * p`` for internal element ``p``."""
    mul = field.mul
    return {(m[0],) + tuple(x + y for x, y in zip(m[1:], exps)): mul(c, coeff) for m, c in p.items()}


# ring-polynomial dicts (exps -> coeff), used for cofactors and representations


def _radd_into(target, src, coeff, exps, field):
    add, mul, is_zero = field.add, field.mul, field.is_zero
    for e, c in src.items():
        ee = tuple(x + y for x, y in zip(e, exps))
        v = add(target.get(ee, field.zero), mul(c, coeff))
        if is_zero(v):
            target.pop(ee, None)
        else:
            target[ee] = v


def _rmul_into(target, a, b, field, sign=1):
    for e1, c1 in a.items():
        if sign < 0:
            c1 = field.neg(c1)
        _radd_into(target, b, c1, e1, field)


def _reduce(ctx, f, basis, lts, want_cofactors=False):
    """Full reduction of ``f`` by a monic ``basis``; returns remainder, cofactors."""
    field = ctx.field
    add, mul, neg, is_zero = field.add, field.mul, field.neg, field.is_zero
    nkey = ctx.nkey
    p = dict(f)
    heap = [(nkey(m), m) for m in p]
    heapq.heapify(heap)
    rem = {}
    cofs = [dict() for _ in basis] if want_cofactors else None
    by_comp = {}
    for j, lt in enumerate(lts):
        by_comp.setdefault(lt[0], []).append(j)
    while heap:
        _, m = heapq.heappop(heap)
        c = p.get(m)
        if c is None:
            continue
        reducer = None
        for j in by_comp.get(m[0], ()):
            lt = lts[j]
            for x, y in zip(lt[1:], m[1:]):
                if x > y:
                    break
            else:
                reducer = j
                break
        del p[m]
        if reducer is None:
            rem[m] = c
            continue
        lt = lts[reducer]
        q = tuple(x - y for x, y in zip(m[1:], lt[1:]))
        nc = neg(c)
        for gm, gc in basis[reducer].items():
            if gm == lt:
                continue
            mm = (gm[0],) + tuple(x + y for x, y in zip(gm[1:], q))
            old = p.get(mm)
            if old is None:
                p[mm] = mul(nc, gc)
                heapq.heappush(heap, (nkey(mm), mm))
            else:
                v = add(old, mul(nc, gc))
                if is_zero(v):
                    del p[mm]
                else:
                    p[mm] = v
        if want_cofactors:
            cf = cofs[reducer]
            v = add(cf.get(q, field.zero), c)
            if is_zero(v):
                cf.pop(q, None)
            else:
                cf[q] = v
    return rem, cofs


def _monic(ctx, p, rep=None):
    field = ctx.field
    lt = ctx.lt(p)
    inv = field.inv(p[lt])
    p = {m: field.mul(c, inv) for m, c in p.items()}
    if rep is not None:
        rep = [{e: field.mul(c, inv) for e, c in r.items()} for r in rep]
    return p, rep


def _spoly(ctx, a, la, b, lb):
    L = _lcm(la, lb)
    sa = tuple(x - y for x, y in zip(L[1:], la[1:]))
    sb = tuple(x - y for x, y in zip(L[1:], lb[1:]))
    field = ctx.field
    out = _shift(a, sa, field.one, field)
    for m, c in _shift(b, sb, field.neg(field.one), field).items():
        v = field.add(out.get(m, field.zero), c)
        if field.is_zero(v):
            out.pop(m, None)
        else:
            out[m] = v
    return out, sa, sb


def _update(ctx, active, pairs, h, lts):
    """Gebauer-Moeller pair update for the new basis index ``h``."""
    lh = lts[h]
    ideal = ctx.is_ideal
    cand = [g for g in active if lts[g][0] == lh[0]]
    lcm_h = {g: _lcm(lh, lts[g]) for g in cand}
    kept = []
    remaining = list(cand)
    while remaining:
        g1 = remaining.pop(0)
        L1 = lcm_h[g1]
        if ideal and _coprime(lh, lts[g1]):
            kept.append(g1)
            continue
        if any(_divides(lcm_h[g2], L1) for g2 in remaining) or any(
            _divides(lcm_h[g2], L1) for g2 in kept
        ):
            continue
        kept.append(g1)
    new_pairs = [(g, h) for g in kept if not (ideal and _coprime(lh, lts[g]))]
    survivors = []
    for a, b in pairs:
        L = _lcm(lts[a], lts[b])
        if _divides(lh, L) and _lcm(lts[a], lh) != L and _lcm(lh, lts[b]) != L:
            continue
        survivors.append((a, b))
    survivors.extend(new_pairs)
    new_active = [g for g in active if not _divides(lh, lts[g])]
    new_active.append(h)
    return new_active, survivors


def _run_buchberger(ctx, gens, track):
    """Reduced Groebner basis of internal elements ``gens``.

    Returns (basis, lts, reps); ``reps[j][k]`` expresses basis element j in
    terms of input k when ``track`` is set.
    """
    field = ctx.field
    ngens = len(gens)
    store, lts, reps = [], [], []
    active, pairs = [], []

    def add_element(p, rep):
        p, rep = _monic(ctx, p, rep)
        store.append(p)
        lts.append(ctx.lt(p))
        reps.append(rep)
        return len(store) - 1

    def reduce_against_active(p, rep):
        basis = [store[a] for a in active]
        rem, cofs = _reduce(ctx, p, basis, [lts[a] for a in active], want_cofactors=track)
        if track and rem:
            rep = [dict(r) for r in rep]
            for idx, a in enumerate(active):
                if cofs[idx]:
                    for k in range(ngens):
                        if reps[a][k]:
                            _rmul_into(rep[k], cofs[idx], reps[a][k], field, sign=-1)
        return rem, rep

    unit_found = None
    for k, f in enumerate(gens):
        if not f:
            continue
        rep = None
        if track:
            rep = [dict() for _ in range(ngens)]
            rep[k] = {ctx.zero_exps: field.one}
        h, rep = reduce_against_active(f, rep)
        if not h:
            continue
        idx = add_element(h, rep)
        active, pairs = _update(ctx, active, pairs, idx, lts)
        if ctx.is_ideal and lts[idx][1:] == ctx.zero_exps:
            unit_found = idx
            break

    def pair_key(pr):
        a, b = pr
        L = _lcm(lts[a], lts[b])
        return (sum(L[1:]), b, a)

    while pairs and unit_found is None:
        best = min(range(len(pairs)), key=lambda i: pair_key(pairs[i]))
        a, b = pairs.pop(best)
        s, sa, sb = _spoly(ctx, store[a], lts[a], store[b], lts[b])
        rep = None
        if track:
            rep = [dict() for _ in range(ngens)]
            for k in range(ngens):
                if reps[a][k]:
                    _radd_into(rep[k], reps[a][k], field.one, sa, field)
                if reps[b][k]:
                    _radd_into(rep[k], reps[b][k], field.neg(field.one), sb, field)
        if not s:
            continue
        h, rep = reduce_against_active(s, rep)
        if not h:
            continue
        idx = add_element(h, rep)
        active, pairs = _update(ctx, active, pairs, idx, lts)
        if ctx.is_ideal and lts[idx][1:] == ctx.zero_exps:
            unit_found = idx

    if unit_found is not None:
        return [store[unit_found]], [lts[unit_found]], [reps[unit_found]]

    # interreduce the (already minimal) active set
    basis, blts, breps = [], [], []
    for a in active:
        others = [b for b in active if b != a]
        ob = [store[b] for b in others]
        ol = [lts[b] for b in others]
        rem, cofs = _reduce(ctx, store[a], ob, ol, want_cofactors=track)
        rep = None
        if track:
            rep = [dict(r) for r in reps[a]]
            for idx, b in enumerate(others):
                if cofs[idx]:
                    for k in range(ngens):
                        if reps[b][k]:
                            _rmul_into(rep[k], cofs[idx], reps[b][k], field, sign=-1)
        rem, rep = _monic(ctx, rem, rep)
        basis.append(rem)
        blts.append(ctx.lt(rem))
        breps.append(rep)
    # largest leading term first (smaller heap key means larger term)
    order = sorted(range(len(basis)), key=lambda i: ctx.nkey(blts[i]))
    return [basis[i] for i in order], [blts[i] for i in order], [breps[i] for i in order]


# ---------------------------------------------------------------------------
# conversion


def _to_internal(f, rank):
    if isinstance(f, Polynomial):
        if rank is not None:
            raise ArityMismatch("polynomial given where a vector was expected")
        return {(0,) + e: c for e, c in f._t.items()}
    if isinstance(f, FreeVector):
        if rank is None or len(f) != rank:
            raise ArityMismatch(f"vector of length {len(f)} for ambient rank {rank}")
        out = {}
        for i, comp in enumerate(f.comps):
            for e, c in comp._t.items():
                out[(i,) + e] = c
        return out
    raise TypeError(f"cannot use {type(f).__name__} in a Groebner computation")


def _from_internal(p, ring, rank):
    if rank is None:
        return Polynomial(ring, {m[1:]: c for m, c in p.items()}, _trusted=True)
    comps = [dict() for _ in range(rank)]
    for m, c in p.items():
        comps[m[0]][m[1:]] = c
    return FreeVector(ring, [Polynomial(ring, d, _trusted=True) for d in comps])


def _ring_poly(ring, d):
    return Polynomial(ring, d, _trusted=True)


class GroebnerBasis:
    """Reduced Groebner basis of an ideal (``rank is None``) or a submodule of ``R^rank``.

    Elements are monic and sorted by decreasing leading term.  When built with
    tracking, :meth:`lift` expresses members in terms of the original generators.
    """

    def __init__(self, ring, rank, gens, track=False):
        self.ring = ring
        self.rank = rank
        self._ctx = _Context(ring, rank is None)
        internal = [_to_internal(g, rank) for g in gens]
        self.ngens = len(internal)
        self._basis, self._lts, self._reps = _run_buchberger(self._ctx, internal, track)
        self.tracked = track
        self.elements = tuple(_from_internal(p, ring, rank) for p in self._basis)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def leading_monomials(self):
        """Leading terms as ``(component, exponents)`` (component 0 for ideals)."""
        return [(lt[0], lt[1:]) for lt in self._lts]

    def is_unit(self):
        if self.rank is not None:
            return False
        return len(self._lts) == 1 and self._lts[0][1:] == self._ctx.zero_exps

    def is_zero(self):
        return not self._basis

    def _coerce(self, f):
        if isinstance(f, (Polynomial, FreeVector)) and f.ring != self.ring:
            raise RingMismatch(f"{f.ring!r} vs {self.ring!r}")
        return _to_internal(f, self.rank)

    def reduce(self, f, with_cofactors=False):
        """Remainder of ``f``; with cofactors, ``f = sum(c_i * g_i) + remainder``."""
        p = self._coerce(f)
        rem, cofs = _reduce(self._ctx, p, self._basis, self._lts, want_cofactors=with_cofactors)
        r = _from_internal(rem, self.ring, self.rank)
        if not with_cofactors:
            return r
        return r, [_ring_poly(self.ring, c) for c in cofs]

    def contains(self, f):
        rem, _ = _reduce(self._ctx, self._coerce(f), self._basis, self._lts)
        return not rem

    __contains__ = contains

    def lift(self, f):
        """Cofactors ``c`` with ``f = sum(c_k * gens_k)``, or ``None`` if ``f`` is not a member."""
        if not self.tracked:
            raise ValueError("lift needs a basis computed with track=True")
        rem, cofs = _reduce(self._ctx, self._coerce(f), self._basis, self._lts, want_cofactors=True)
        if rem:
            return None
        field = self._ctx.field
        out = [dict() for _ in range(self.ngens)]
        for j, cf in enumerate(cofs):
            if not cf:
                continue
            for k in range(self.ngens):
                if self._reps[j][k]:
                    _rmul_into(out[k], cf, self._reps[j][k], field)
        return [_ring_poly(self.ring, d) for d in out]

    def representation(self, j):
        """Element ``j`` in terms of the original generators (tracked bases only)."""
        if not self.tracked:
            raise ValueError("basis was computed without tracking")
        return [_ring_poly(self.ring, d) for d in self._reps[j]]

    def check(self):
        """Exhaustive Buchberger criterion: every S-pair reduces to zero."""
        ctx = self._ctx
        for a, b in combinations(range(len(self._basis)), 2):
            la, lb = self._lts[a], self._lts[b]
            if la[0] != lb[0]:
                continue
            s, _, _ = _spoly(ctx, self._basis[a], la, self._basis[b], lb)
            rem, _ = _reduce(ctx, s, self._basis, self._lts)
            if rem:
                return False
        return True

    def is_reduced(self):
        """Monic, and no term of any element divisible by another leading term."""
        field = self._ctx.field
        for j, p in enumerate(self._basis):
            if p[self._lts[j]] != field.one:
                return False
            for m in p:
                for k, lt in enumerate(self._lts):
                    if k == j and m == lt:
                        continue
                    if _divides(lt, m):
                        return False
        return True

    def __repr__(self):
        return "GroebnerBasis([" + ", ".join(str(e) for e in self.elements) + "])"


def buchberger(gens, order=None, track=False):
    """Reduced Groebner basis of an :class:`Ideal` or :class:`Submodule`.

    ``order`` (a kind string or ``(kind, block)``) recomputes in a copy of the
    ring with a different monomial order.
    """
    if order is None:
        return gens.groebner(track=track)
    kind, block = (order, 0) if isinstance(order, str) else order
    ring = gens.ring.with_order(kind, block)
    rank = gens.rank if isinstance(gens, Submodule) else None
    moved = [_move(g, ring) for g in gens.gens]
    return GroebnerBasis(ring, rank, moved, track=track)


def _move(f, ring):
    if isinstance(f, Polynomial):
        return Polynomial(ring, f._t, _trusted=True)
    return FreeVector(ring, [Polynomial(ring, c._t, _trusted=True) for c in f.comps])


def normal_form(f, G, with_cofactors=False):
    return G.reduce(f, with_cofactors=with_cofactors)


# ---------------------------------------------------------------------------
# ideals and submodules


class Ideal:
    """Ideal of a polynomial ring given by generators (zero generators allowed)."""

    rank = None

    def __init__(self, ring, gens=()):
        self.ring = ring
        gens = [ring(g) for g in gens]
        self.gens = tuple(gens)
        self._gb = None
        self._tgb = None

    def groebner(self, track=False):
        if track:
            if self._tgb is None:
                self._tgb = GroebnerBasis(self.ring, None, self.gens, track=True)
                if self._gb is None:
                    self._gb = self._tgb
            return self._tgb
        if self._gb is None:
            self._gb = GroebnerBasis(self.ring, None, self.gens)
        return self._gb

    @property
    def gb(self):
        return self.groebner()

    def contains(self, f):
        return self.groebner().contains(self.ring(f))

    __contains__ = contains

    def is_unit(self):
        return self.groebner().is_unit()

    def is_zero(self):
        return self.groebner().is_zero()

    def lift(self, f):
        return self.groebner(track=True).lift(self.ring(f))

    def __le__(self, other):
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.groebner().elements == other.groebner().elements

    def __hash__(self):
        return hash(self.groebner().elements)

    def __add__(self, other):
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def dim(self):
        return krull_dim(self)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"


class Submodule:
    """Submodule of ``R^rank`` generated by the given vectors."""

    def __init__(self, ring, rank, gens=()):
        self.ring = ring
        self.rank = rank
        gens = tuple(gens)
        for g in gens:
            if len(g) != rank:
                raise ArityMismatch(f"generator of length {len(g)} in rank {rank}")
            if g.ring != ring:
                raise RingMismatch("generator from another ring")
        self.gens = gens
        self._gb = None
        self._tgb = None

    def groebner(self, track=False):
        if track:
            if self._tgb is None:
                self._tgb = GroebnerBasis(self.ring, self.rank, self.gens, track=True)
                if self._gb is None:
                    self._gb = self._tgb
            return self._tgb
        if self._gb is None:
            self._gb = GroebnerBasis(self.ring, self.rank, self.gens)
        return self._gb

    @property
    def gb(self):
        return self.groebner()

    def contains(self, v):
        return self.groebner().contains(v)

    __contains__ = contains

    def lift(self, v):
        return self.groebner(track=True).lift(v)

    def __le__(self, other):
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.ring == other.ring and self.rank == other.rank and self <= other and other <= self

    __hash__ = None

    def __repr__(self):
        return f"Submodule(rank={self.rank}, [" + ", ".join(str(g) for g in self.gens) + "])"


def syzygies(gens):
    """Kernel of ``R^t -> ambient`` sending ``e_i`` to the i-th generator.

    Computed from the basis of ``{(g_i, e_i)}`` in ``R^(r+t)``: with the
    g-block ahead in position-over-term, basis elements whose leading term lies
    in the e-block have a vanishing g-block and generate the kernel.
    """
    ring = gens.ring
    vecs = list(gens.gens)
    t = len(vecs)
    if isinstance(gens, Ideal):
        vecs = [FreeVector(ring, [g]) for g in vecs]
        r = 1
    else:
        r = gens.rank
    if t == 0:
        return Submodule(ring, 0, [])
    aug = [v.concat(FreeVector.unit(ring, t, i)) for i, v in enumerate(vecs)]
    G = GroebnerBasis(ring, r + t, aug)
    out = []
    for p, lt in zip(G._basis, G._lts):
        if lt[0] >= r:
            v = _from_internal(p, ring, r + t)
            out.append(FreeVector(ring, v.comps[r:]))
    return Submodule(ring, t, out)


def eliminate(I, k):
    """``I`` intersected with the subring in the last ``nvars - k`` variables."""
    ring = I.ring
    if not 0 <= k <= ring.nvars:
        raise ArityMismatch(f"cannot eliminate {k} of {ring.nvars} variables")
    if k == 0:
        return Ideal(ring, I.groebner().elements)
    G = buchberger(I, order=("elim", k))
    keep = [g for g in G.elements if not any(any(e[:k]) for e in g._t)]
    return Ideal(ring, [_move(g, ring) for g in keep])


def _with_tag(ring):
    return ring.extend(("_t",), front=True, order="elim", block=1)


def intersect(I, J):
    """``I`` and ``J`` intersected, via eliminating a tag variable from ``tI + (1-t)J``."""
    if I.ring != J.ring:
        raise RingMismatch("ideals over different rings")
    ring = I.ring
    T = _with_tag(ring)
    t = T.gen(0)
    one_minus_t = T.one() - t
    gens = [t * g.embed(T, 1) for g in I.gens if g] + [one_minus_t * g.embed(T, 1) for g in J.gens if g]
    G = GroebnerBasis(T, None, gens)
    keep = [g.contract(ring, 1) for g in G.elements if not any(e[0] for e in g._t)]
    return Ideal(ring, keep)


def saturate(I, s):
    """``I : s^inf`` by eliminating ``t`` from ``I + (1 - t*s)``."""
    ring = I.ring
    s = ring(s)
    if s.is_zero():
        raise ZeroDivisionError("saturation by the zero polynomial")
    T = _with_tag(ring)
    t = T.gen(0)
    gens = [g.embed(T, 1) for g in I.gens if g] + [T.one() - t * s.embed(T, 1)]
    G = GroebnerBasis(T, None, gens)
    keep = [g.contract(ring, 1) for g in G.elements if not any(e[0] for e in g._t)]
    return Ideal(ring, keep)


def exact_divide(f, g):
    """``f / g`` when ``g`` divides ``f`` exactly, else ``None``."""
    G = GroebnerBasis(f.ring, None, [g])
    rem, cofs = G.reduce(f, with_cofactors=True)
    if not rem.is_zero():
        return None
    lc = g.leading_term()[0].value
    return cofs[0].scale(f.ring.field.inv(lc)) if cofs else f.ring.zero()


def quotient(I, f):
    """Colon ideal ``I : f``."""
    ring = I.ring
    f = ring(f)
    if f.is_zero():
        return Ideal(ring, [ring.one()])
    inter = intersect(I, Ideal(ring, [f]))
    return Ideal(ring, [exact_divide(g, f) for g in inter.gens])


def independent_sets(I):
    """Maximal-size variable subsets independent modulo the initial ideal of ``I``."""
    ring = I.ring
    G = buchberger(I, order="grevlex") if ring.order.kind != "grevlex" else I.groebner()
    if G.is_unit():
        return -1, []
    supports = [frozenset(i for i, a in enumerate(e) if a) for _, e in G.leading_monomials()]
    n = ring.nvars
    for size in range(n, -1, -1):
        found = []
        for U in combinations(range(n), size):
            U = frozenset(U)
            if not any(s <= U for s in supports):
                found.append(tuple(sorted(U)))
        if found:
            return size, found
    return -1, []


def krull_dim(I):
    """Krull dimension of ``ring / I``; the zero ring has dimension -1."""
    return independent_sets(I)[0]
