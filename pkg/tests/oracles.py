"""Independent reference computations used by the tests.

Nothing here calls into the Groebner engine or ``freesplit.linalg``: ranks come
from a naive elimination written from scratch, polynomial identities from
sympy, and ideal membership from a degree-bounded linear system.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

import sympy

from freesplit.polyring import FreeVector


def to_sympy(f, symbols=None):
    ring = f.ring
    syms = symbols or sympy.symbols(ring.names)
    if not isinstance(syms, (list, tuple)):
        syms = (syms,)
    expr = sympy.Integer(0)
    for c, e in f.terms():
        coeff = sympy.Rational(c.value.numerator, c.value.denominator) if isinstance(c.value, Fraction) else sympy.Integer(c.value)
        term = coeff
        for s, a in zip(syms, e):
            term *= s**a
        expr += term
    return expr


def sympy_poly(f, modulus=None):
    syms = sympy.symbols(f.ring.names)
    if modulus:
        return sympy.Poly(to_sympy(f, syms), *syms, modulus=modulus)
    return sympy.Poly(to_sympy(f, syms), *syms, domain="QQ")


def naive_rank(rows, p=None):
    """Rank by plain Gaussian elimination over QQ (Fractions) or F_p (ints)."""
    m = [[(Fraction(v) if p is None else v % p) for v in r] for r in rows]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = (1 / m[rank][c]) if p is None else pow(m[rank][c], p - 2, p)
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [(a - f * b) if p is None else (a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def evaluation_rank(M, S, E, point, p=None):
    """Rank of ``[f(s)(point)]`` by substituting into sympy expressions."""
    syms = sympy.symbols(M.ring.names)
    if not isinstance(syms, (list, tuple)):
        syms = (syms,)
    subs = dict(zip(syms, point))
    rows = []
    for f in E:
        row = []
        for s in S:
            val = sum((to_sympy(a, syms) * to_sympy(b, syms) for a, b in zip(f.vector.comps, s.comps)), sympy.Integer(0))
            v = sympy.nsimplify(sympy.expand(val).subs(subs))
            row.append(Fraction(int(v.p), int(v.q)) if p is None else (int(v.p) * pow(int(v.q), p - 2, p)) % p)
        rows.append(row)
    return naive_rank(rows, p)


def monomials_up_to(nvars, degree):
    out = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def bounded_membership(f, gens, degree, p=None):
    """Is ``f = sum c_i g_i`` with every ``deg(c_i g_i) <= degree``?  Solved as a linear system."""
    ring = f.ring
    n = ring.nvars
    columns = []
    for g in gens:
        if g.is_zero():
            continue
        dg = g.total_degree()
        for m in monomials_up_to(n, degree - dg) if degree >= dg else []:
            columns.append(g * ring.monomial(m))
    target = f
    if target.total_degree() > degree:
        return False
    mons = sorted({e for col in columns for e in col._t} | set(target._t))
    index = {e: i for i, e in enumerate(mons)}

    def coords(h):
        v = [0] * len(mons)
        for e, c in h._t.items():
            v[index[e]] = c
        return v

    A = [coords(c) for c in columns]
    rows_t = [list(r) for r in zip(*A)] if A else [[] for _ in mons]
    b = coords(target)
    base = naive_rank(rows_t, p) if A else 0
    aug = [r + [bv] for r, bv in zip(rows_t, b)]
    return naive_rank(aug, p) == base


def vec_dot_sympy(u, v):
    return sympy.expand(sum((to_sympy(a) * to_sympy(b) for a, b in zip(u.comps, v.comps)), sympy.Integer(0)))


def random_poly(ring, rng, degree, coeff=3, density=0.6):
    terms = {}
    for e in monomials_up_to(ring.nvars, degree):
        if rng.random() < density:
            terms[e] = rng.randint(-coeff, coeff)
    return ring.from_dict(terms)


def random_vector(ring, rng, g, degree, **kw):
    return FreeVector(ring, [random_poly(ring, rng, degree, **kw) for _ in range(g)])
