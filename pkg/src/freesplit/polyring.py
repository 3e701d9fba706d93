"""Monomial orders, polynomial rings, polynomials and free-module vectors.

Monomials are plain tuples of exponents (dense, one entry per variable).
Polynomials keep a dict ``{exponents: raw coefficient}`` and present their
terms sorted strictly descending in the ring's monomial order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .coefficients import FieldElement
from .errors import ArityMismatch, RingMismatch, ZeroPolynomial

__all__ = [
    "Cmp",
    "MonomialOrder",
    "mono_compare",
    "PolyRing",
    "Polynomial",
    "FreeVector",
    "univariate_divmod",
]


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _grevlex_key(e):
    return (sum(e), tuple(-a for a in reversed(e)))


def _make_key(kind, block):
    if kind == "lex":
        return lambda e: e
    if kind == "grevlex":
        return _grevlex_key
    if kind == "elim":
        return lambda e: (_grevlex_key(e[:block]), _grevlex_key(e[block:]))
    raise ValueError(f"unknown monomial order {kind!r}")


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative well-order on exponent vectors.

    ``kind`` is ``'lex'``, ``'grevlex'`` or ``'elim'``; the elimination order
    compares the first ``block`` variables by grevlex and breaks ties with
    grevlex on the rest, so any monomial involving the first block beats every
    monomial free of it.
    """

    kind: str
    nvars: int
    block: int = 0
    key: object = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and not 0 <= self.block <= self.nvars:
            raise ValueError("elimination block larger than the variable count")
        if self.kind != "elim":
            object.__setattr__(self, "block", 0)
        object.__setattr__(self, "key", lru_cache(maxsize=1 << 16)(_make_key(self.kind, self.block)))

    def compare(self, a, b):
        if len(a) != self.nvars or len(b) != self.nvars:
            raise ArityMismatch("monomial length does not match the order")
        ka, kb = self.key(a), self.key(b)
        return Cmp.GT if ka > kb else Cmp.LT if ka < kb else Cmp.EQ

    def describe(self):
        return f"elim {self.block}" if self.kind == "elim" else self.kind


def mono_compare(a, b, order):
    """Compare two exponent vectors under ``order``; returns a :class:`Cmp`."""
    if len(a) != len(b):
        raise ArityMismatch(f"monomials of length {len(a)} and {len(b)}")
    return order.compare(tuple(a), tuple(b))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


class PolyRing:
    """``field[names]`` with a monomial order.

    Two rings are equal when field, variable count and order agree; variable
    names are display metadata only.
    """

    def __init__(self, field, names, order="grevlex", block=0):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        if isinstance(order, MonomialOrder):
            if order.nvars != self.nvars:
                raise ArityMismatch("order built for a different number of variables")
            self.order = order
        else:
            self.order = MonomialOrder(order, self.nvars, block)
        self._index = {name: i for i, name in enumerate(self.names)}
        self._zero_mono = (0,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field is other.field
            and self.nvars == other.nvars
            and self.order == other.order
        )

    def __hash__(self):
        return hash((repr(self.field), self.nvars, self.order))

    def __repr__(self):
        return f"PolyRing({self.field.name}[{','.join(self.names)}], {self.order.describe()})"

    def index_of(self, name):
        return self._index.get(name)

    def with_order(self, kind, block=0):
        return PolyRing(self.field, self.names, kind, block)

    def extend(self, names, front=False, order=None, block=0):
        """Ring with extra variables appended (or prepended)."""
        names = tuple(names)
        all_names = names + self.names if front else self.names + names
        return PolyRing(self.field, all_names, order or self.order.kind, block)

    # constructors
    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, value):
        c = self.field.convert(value)
        if self.field.is_zero(c):
            return Polynomial(self, {})
        return Polynomial(self, {self._zero_mono: c}, _trusted=True)

    def gen(self, i):
        if not 0 <= i < self.nvars:
            raise ArityMismatch(f"variable index {i} out of range")
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one}, _trusted=True)

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ArityMismatch("exponent vector length does not match the ring")
        return Polynomial(self, {exps: self.field.convert(coeff)})

    def from_dict(self, terms):
        return Polynomial(self, {tuple(k): self.field.convert(v) for k, v in terms.items()})

    def __call__(self, value):
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatch("polynomial from another ring")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)

    def parse(self, text):
        from .syntax import TokenStream, tokenize

        stream = TokenStream(tokenize(text))
        value = stream.parse_expr(self)
        if stream.peek.kind != "EOF":
            raise stream.error(f"unexpected {stream.peek.text!r}")
        return value

    def vector(self, comps):
        return FreeVector(self, [self(c) for c in comps])


class Polynomial:
    """Immutable polynomial; ``terms()`` lists ``(coefficient, exponents)`` descending."""

    __slots__ = ("ring", "_t", "_sorted")

    def __init__(self, ring, terms, _trusted=False):
        self.ring = ring
        if _trusted:
            self._t = terms
        else:
            is_zero = ring.field.is_zero
            self._t = {k: v for k, v in terms.items() if not is_zero(v)}
        self._sorted = None

    # -- inspection ------------------------------------------------------
    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and self.ring._zero_mono in self._t)

    def constant_coefficient_raw(self):
        return self._t.get(self.ring._zero_mono, self.ring.field.zero)

    def constant_coefficient(self):
        return FieldElement(self.ring.field, self.constant_coefficient_raw())

    def raw_terms(self):
        """Descending list of ``(exponents, raw coefficient)``."""
        if self._sorted is None:
            key = self.ring.order.key
            self._sorted = sorted(self._t.items(), key=lambda kv: key(kv[0]), reverse=True)
        return self._sorted

    def terms(self):
        f = self.ring.field
        return [(FieldElement(f, c), e) for e, c in self.raw_terms()]

    def monomials(self):
        return [e for e, _ in self.raw_terms()]

    def coefficient(self, exps):
        return FieldElement(self.ring.field, self._t.get(tuple(exps), self.ring.field.zero))

    def leading_term(self):
        if not self._t:
            raise ZeroPolynomial("zero polynomial has no leading term")
        e, c = self.raw_terms()[0]
        return FieldElement(self.ring.field, c), e

    def leading_monomial(self):
        return self.leading_term()[1]

    def total_degree(self):
        if not self._t:
            return -1
        return max(sum(e) for e in self._t)

    def degree(self, i=0):
        if not self._t:
            return -1
        return max(e[i] for e in self._t)

    def variables(self):
        used = set()
        for e in self._t:
            used.update(i for i, a in enumerate(e) if a)
        return sorted(used)

    # -- arithmetic ------------------------------------------------------
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        f = self.ring.field
        out = dict(self._t)
        for e, c in other._t.items():
            v = f.add(out.get(e, f.zero), c)
            if f.is_zero(v):
                out.pop(e, None)
            else:
                out[e] = v
        return Polynomial(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {e: f.neg(c) for e, c in self._t.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, FreeVector):
            return NotImplemented
        other = self._check(other)
        if other is None:
            return NotImplemented
        f = self.ring.field
        add, mul, is_zero = f.add, f.mul, f.is_zero
        out = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = add(out.get(e, f.zero), mul(c1, c2))
        return Polynomial(self.ring, {e: c for e, c in out.items() if not is_zero(c)}, _trusted=True)

    __rmul__ = __mul__

    def scale(self, raw):
        f = self.ring.field
        if f.is_zero(raw):
            return self.ring.zero()
        return Polynomial(self.ring, {e: f.mul(c, raw) for e, c in self._t.items()}, _trusted=True)

    def mul_term(self, exps, raw):
        """Multiply by ``raw * x^exps``."""
        f = self.ring.field
        if f.is_zero(raw):
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {mono_mul(e, exps): f.mul(c, raw) for e, c in self._t.items()},
            _trusted=True,
        )

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self):
        if not self._t:
            return self
        lc = self.raw_terms()[0][1]
        return self.scale(self.ring.field.inv(lc))

    def evaluate(self, point):
        """Substitute field values for the variables; returns a FieldElement."""
        point = list(point)
        if len(point) != self.ring.nvars:
            raise ArityMismatch(f"point of length {len(point)} for {self.ring.nvars} variables")
        f = self.ring.field
        raw = [f.convert(p) for p in point]
        return FieldElement(f, self.evaluate_raw(raw))

    def evaluate_raw(self, raw_point):
        f = self.ring.field
        total = f.zero
        powers = {}
        for e, c in self._t.items():
            term = c
            for i, a in enumerate(e):
                if a:
                    key = (i, a)
                    p = powers.get(key)
                    if p is None:
                        p = raw_point[i] ** a if f.characteristic == 0 else pow(raw_point[i], a, f.p)
                        powers[key] = p
                    term = f.mul(term, p)
            total = f.add(total, term)
        return total

    def substitute(self, images, target):
        """Ring map sending variable i to ``images[i]`` (polynomials in ``target``)."""
        if len(images) != self.ring.nvars:
            raise ArityMismatch("need one image per variable")
        result = target.zero()
        for e, c in self._t.items():
            term = target.constant(c) if self.ring.field is target.field else None
            if term is None:
                raise RingMismatch("substitution across different fields")
            for i, a in enumerate(e):
                if a:
                    term = term * images[i] ** a
            result = result + term
        return result

    def embed(self, target, offset=0):
        """Same polynomial in ``target`` with variables shifted right by ``offset``."""
        if target.field is not self.ring.field:
            raise RingMismatch("embedding across different fields")
        pad = target.nvars - offset - self.ring.nvars
        if pad < 0 or offset < 0:
            raise ArityMismatch("target ring too small for the embedding")
        pre, post = (0,) * offset, (0,) * pad
        return Polynomial(target, {pre + e + post: c for e, c in self._t.items()}, _trusted=True)

    def contract(self, target, offset=0):
        """Inverse of :meth:`embed`; fails if a dropped variable occurs."""
        stop = offset + target.nvars
        out = {}
        for e, c in self._t.items():
            if any(e[:offset]) or any(e[stop:]):
                raise ArityMismatch("polynomial involves variables outside the target ring")
            out[e[offset:stop]] = c
        return Polynomial(target, out, _trusted=True)

    # -- comparison / display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._t == other._t
        if isinstance(other, (int, Fraction, FieldElement)):
            return self._t == self.ring.constant(other)._t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)


def _format_mono(names, e):
    parts = []
    for name, a in zip(names, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def format_polynomial(f):
    """Text form with ``^``, explicit ``*`` and descending terms."""
    if f.is_zero():
        return "0"
    field = f.ring.field
    out = []
    for e, c in f.raw_terms():
        negative = field.characteristic == 0 and c < 0
        mag = -c if negative else c
        mono = _format_mono(f.ring.names, e)
        coeff = field.format(mag)
        if not mono:
            body = coeff
        elif coeff == "1":
            body = mono
        else:
            body = f"{coeff}*{mono}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


class FreeVector:
    """Element of the free module ``R^g``: a tuple of ``g`` polynomials."""

    __slots__ = ("ring", "comps")

    def __init__(self, ring, comps):
        comps = tuple(comps)
        for c in comps:
            if not isinstance(c, Polynomial):
                raise TypeError("FreeVector components must be Polynomials")
            if c.ring != ring:
                raise RingMismatch("component from another ring")
        self.ring = ring
        self.comps = comps

    @classmethod
    def zero(cls, ring, g):
        z = ring.zero()
        return cls(ring, [z] * g)

    @classmethod
    def unit(cls, ring, g, i):
        comps = [ring.zero()] * g
        comps[i] = ring.one()
        return cls(ring, comps)

    def __len__(self):
        return len(self.comps)

    def __iter__(self):
        return iter(self.comps)

    def __getitem__(self, i):
        return self.comps[i]

    def _check(self, other):
        if not isinstance(other, FreeVector):
            raise TypeError("expected a FreeVector")
        if other.ring != self.ring:
            raise RingMismatch("vectors over different rings")
        if len(other) != len(self):
            raise ArityMismatch(f"vectors of length {len(self)} and {len(other)}")

    def __add__(self, other):
        self._check(other)
        return FreeVector(self.ring, [a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other):
        self._check(other)
        return FreeVector(self.ring, [a - b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return FreeVector(self.ring, [-a for a in self.comps])

    def __mul__(self, scalar):
        if isinstance(scalar, FreeVector):
            return NotImplemented
        s = self.ring(scalar) if not isinstance(scalar, Polynomial) else scalar
        return FreeVector(self.ring, [s * a for a in self.comps])

    __rmul__ = __mul__

    def dot(self, other):
        self._check(other)
        total = self.ring.zero()
        for a, b in zip(self.comps, other.comps):
            if a and b:
                total = total + a * b
        return total

    def is_zero(self):
        return all(c.is_zero() for c in self.comps)

    def evaluate_raw(self, raw_point):
        return [c.evaluate_raw(raw_point) for c in self.comps]

    def concat(self, other):
        return FreeVector(self.ring, self.comps + other.comps)

    def __eq__(self, other):
        if not isinstance(other, FreeVector):
            return NotImplemented
        return self.ring == other.ring and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __repr__(self):
        return f"FreeVector({self})"

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.comps) + ")"


def univariate_divmod(f, g):
    """Euclidean division in a one-variable ring: ``f = q*g + r``, deg r < deg g."""
    ring = f.ring
    if ring.nvars != 1:
        from .errors import NotUnivariate

        raise NotUnivariate("univariate division needs a one-variable ring")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    field = ring.field
    dg = g.degree()
    lc_inv = field.inv(g.coefficient((dg,)).value)
    q = ring.zero()
    r = f
    while not r.is_zero() and r.degree() >= dg:
        dr = r.degree()
        c = field.mul(r.coefficient((dr,)).value, lc_inv)
        t = ring.monomial((dr - dg,), c)
        q = q + t
        r = r - t * g
    return q, r
