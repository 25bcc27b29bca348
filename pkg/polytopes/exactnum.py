"""
Exact arithmetic over Q and Q(sqrt5).

Every coordinate in the engine is a ``QuadExt`` (a + b*sqrt5 with rational
a, b). Rationals are ``fractions.Fraction`` which normalizes eagerly, so
equality is structural and hashing is cheap. Floats appear only in
``QuadExt.approx`` for display.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering

Rational = Fraction

# a, optional signed b, optional "*" before sqrt5: "1/2+1/2*sqrt5", "-sqrt5", "3"
_QUAD_PATTERN = re.compile(
    r"^(?P<a>[+-]?\d+(?:/\d+)?)?"
    r"(?:(?P<sign>[+-])?(?P<b>\d+(?:/\d+)?)?(?P<root>\*?sqrt5))?$"
)


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError as exc:
            raise ValueError(f"zero denominator in {value!r}") from exc
    raise TypeError(f"cannot read {type(value).__name__} as an exact rational")


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@total_ordering
class QuadExt:
    """An element a + b*sqrt5 of the real field Q(sqrt5)."""

    __slots__ = ("_a", "_b")

    def __init__(self, a=0, b=0):
        self._a = to_rational(a)
        self._b = to_rational(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, value) -> QuadExt:
        if isinstance(value, QuadExt):
            return value
        if not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot use {type(value).__name__} as an element of Q(sqrt5)")
        return cls(value)

    @classmethod
    def parse(cls, text: str) -> QuadExt:
        """Read the ``a+b*sqrt5`` text format written by ``__str__``."""
        compact = text.replace(" ", "")
        match = _QUAD_PATTERN.match(compact)
        if not compact or match is None:
            raise ValueError(f"not a number of the form a+b*sqrt5: {text!r}")
        a, sign, b, root = match.group("a", "sign", "b", "root")
        if root is None:
            return cls(to_rational(a), 0)
        if a is not None and sign is None:
            # "3*sqrt5": the leading number is the coefficient of sqrt5
            a, b = None, a
        coefficient = to_rational(b) if b is not None else Fraction(1)
        if sign == "-":
            coefficient = -coefficient
        return cls(to_rational(a) if a is not None else 0, coefficient)

    def __repr__(self) -> str:
        return f"QuadExt({self})"

    def __str__(self) -> str:
        if not self._b:
            return str(self._a)
        if not self._a:
            return f"{self._b}*sqrt5"
        sign = "+" if self._b > 0 else "-"
        return f"{self._a}{sign}{abs(self._b)}*sqrt5"

    def __hash__(self) -> int:
        if not self._b:
            return hash(self._a)
        return hash((self._a, self._b))

    def __eq__(self, other) -> bool:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __lt__(self, other) -> bool:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).sign() < 0

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __neg__(self) -> QuadExt:
        return QuadExt(-self._a, -self._b)

    def __pos__(self) -> QuadExt:
        return self

    def __abs__(self) -> QuadExt:
        return -self if self.sign() < 0 else self

    def __add__(self, other) -> QuadExt:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadExt(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other) -> QuadExt:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadExt(self._a - other._a, self._b - other._b)

    def __rsub__(self, other) -> QuadExt:
        return -(self - other)

    def __mul__(self, other) -> QuadExt:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._a, self._b, other._a, other._b
        return QuadExt(a * c + 5 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other) -> QuadExt:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> QuadExt:
        return self.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> QuadExt:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = QuadExt(1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def conjugate(self) -> QuadExt:
        """Galois conjugate a - b*sqrt5."""
        return QuadExt(self._a, -self._b)

    def norm(self) -> Fraction:
        """Field norm a^2 - 5b^2 (product with the Galois conjugate)."""
        return self._a * self._a - 5 * self._b * self._b

    def inverse(self) -> QuadExt:
        norm = self.norm()
        if not norm:
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        return QuadExt(self._a / norm, -self._b / norm)

    def sign(self) -> int:
        sa, sb = _sign(self._a), _sign(self._b)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # opposite signs; a^2 == 5b^2 is impossible for nonzero rationals
        return sa if self._a * self._a > 5 * self._b * self._b else sb

    def is_rational(self) -> bool:
        return not self._b

    def approx(self) -> float:
        """Decimal rendering for display only; never used in decisions."""
        return float(self._a) + float(self._b) * math.sqrt(5)

    __float__ = approx


ZERO = QuadExt(0)
ONE = QuadExt(1)
SQRT5 = QuadExt(0, 1)
PHI = QuadExt(Fraction(1, 2), Fraction(1, 2))
PHI_INVERSE = QuadExt(Fraction(-1, 2), Fraction(1, 2))


def add(x: QuadExt, y: QuadExt) -> QuadExt:
    return QuadExt.coerce(x) + y


def mul(x: QuadExt, y: QuadExt) -> QuadExt:
    return QuadExt.coerce(x) * y


def inverse(x: QuadExt) -> QuadExt:
    return QuadExt.coerce(x).inverse()


def compare(x: QuadExt, y: QuadExt) -> int:
    """-1, 0 or 1 as x is less than, equal to or greater than y."""
    return (QuadExt.coerce(x) - y).sign()


def dot(u, v) -> QuadExt:
    total = ZERO
    for x, y in zip(u, v):
        total = total + x * y
    return total


def squared_distance(u, v) -> QuadExt:
    total = ZERO
    for x, y in zip(u, v):
        delta = x - y
        total = total + delta * delta
    return total
