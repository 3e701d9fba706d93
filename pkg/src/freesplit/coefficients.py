"""Exact coefficient fields: the rationals and prime fields F_p.

A :class:`Field` owns the arithmetic on *raw* values (``Fraction`` for QQ,
``int`` in ``[0, p)`` for F_p).  The polynomial code works on raw values for
speed; :class:`FieldElement` wraps a raw value together with its field for
the user-facing API.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatch

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "QQ",
    "GF",
    "FieldElement",
    "field_arith",
    "field_inverse",
]

_LITERAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class Field:
    """Abstract exact field. Subclasses implement the raw arithmetic."""

    characteristic = 0

    def __call__(self, value):
        return FieldElement(self, self.convert(value))

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def is_zero(self, a):
        return a == 0

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def convert(self, value):
        raise NotImplementedError

    def format(self, a):
        return str(a)

    def parse(self, text):
        """Parse an integer or ``a/b`` literal."""
        m = _LITERAL.match(text)
        if m is None:
            raise ValueError(f"not a field literal: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        return self.div(self.convert(num), self.convert(den))

    def random_element(self, rng, bound):
        """Integer in ``[0, bound]`` for QQ; uniform residue for F_p."""
        raise NotImplementedError


class RationalField(Field):
    """The field of rational numbers, raw values are ``Fraction``."""

    characteristic = 0
    name = "Q"

    def convert(self, value):
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldMismatch(f"cannot convert {value.field} element into Q")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def format(self, a):
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def random_element(self, rng, bound):
        return Fraction(rng.randint(0, bound))

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (_rational_field, ())


def _rational_field():
    return QQ


def _is_prime(n):
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField(Field):
    """The prime field F_p; raw values are ints in ``[0, p)``."""

    def __init__(self, p):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2**31:
            raise ValueError("prime fields are limited to p < 2^31")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"

    def convert(self, value):
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldMismatch(f"cannot convert {value.field} element into {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in F{self.p}")
        return pow(a, -1, self.p)

    def random_element(self, rng, bound):
        return rng.randrange(self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __reduce__(self):
        return (GF, (self.p,))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p):
    """Return the (cached, hence unique) prime field with ``p`` elements."""
    return PrimeField(p)


class FieldElement:
    """An immutable element of QQ or F_p in canonical form.

    Rationals are stored in lowest terms with positive denominator, residues in
    ``[0, p)``, so equal values have identical representations.
    """

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.convert(value))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.convert(other)
        return NotImplemented

    def _wrap(self, raw):
        out = object.__new__(FieldElement)
        object.__setattr__(out, "field", self.field)
        object.__setattr__(out, "value", raw)
        return out

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.div(b, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def inverse(self):
        return self._wrap(self.field.inv(self.value))

    def is_zero(self):
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.convert(other)
        return NotImplemented

    def __hash__(self):
        return hash((repr(self.field), self.value))

    def __repr__(self):
        return f"{self.field!r}({self.field.format(self.value)})"

    def __str__(self):
        return self.field.format(self.value)


def field_arith(a, b, op):
    """Combine two field elements with ``op`` in ``{'add','sub','mul','div'}``."""
    if a.field is not b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def field_inverse(a):
    return a.inverse()
