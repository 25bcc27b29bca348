"""
Exact quaternions over Q(sqrt5) and octonions over Q.

The octonion multiplication table is pinned as seven oriented lines of the
Fano plane and checked against the algebra laws the first time it is built.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .exactnum import ONE, ZERO, QuadExt, to_rational
from .exceptions import AlgebraError

logger = logging.getLogger(__name__)


# ---------------------------
# Quaternions
# ---------------------------

@dataclass(frozen=True)
class Quaternion:
    """w + x*i + y*j + z*k with coefficients in Q(sqrt5)."""

    w: QuadExt = ZERO
    x: QuadExt = ZERO
    y: QuadExt = ZERO
    z: QuadExt = ZERO

    def __post_init__(self):
        for field in ("w", "x", "y", "z"):
            object.__setattr__(self, field, QuadExt.coerce(getattr(self, field)))

    @property
    def components(self) -> tuple[QuadExt, QuadExt, QuadExt, QuadExt]:
        return (self.w, self.x, self.y, self.z)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(*(p + q for p, q in zip(self.components, other.components)))

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(*(p - q for p, q in zip(self.components, other.components)))

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other) -> Quaternion:
        if isinstance(other, Quaternion):
            return qmul(self, other)
        scalar = QuadExt.coerce(other)
        return Quaternion(*(c * scalar for c in self.components))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.components)


def qmul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product."""
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def qconj(a: Quaternion) -> Quaternion:
    return Quaternion(a.w, -a.x, -a.y, -a.z)


def qnorm(a: Quaternion) -> QuadExt:
    return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z


def qinv(a: Quaternion) -> Quaternion:
    norm = qnorm(a)
    if not norm:
        raise ZeroDivisionError("inverse of the zero quaternion")
    return qconj(a) * norm.inverse()


def qassociator(a: Quaternion, b: Quaternion, c: Quaternion) -> Quaternion:
    return qmul(qmul(a, b), c) - qmul(a, qmul(b, c))


Q_ONE = Quaternion(ONE)
Q_I = Quaternion(ZERO, ONE)
Q_J = Quaternion(ZERO, ZERO, ONE)
Q_K = Quaternion(ZERO, ZERO, ZERO, ONE)
QUATERNION_BASIS = (Q_ONE, Q_I, Q_J, Q_K)


# ---------------------------
# Octonion table
# ---------------------------

# (a, b, c): e_a e_b = e_c, and cyclically e_b e_c = e_a, e_c e_a = e_b.
FANO_LINES = (
    (1, 2, 4),
    (2, 3, 5),
    (3, 1, 6),
    (1, 5, 7),
    (2, 6, 7),
    (3, 4, 7),
    (5, 4, 6),
)

# Products fixed by the construction from three generating units.
DEFINING_PRODUCTS = {
    (1, 2): (1, 4),
    (2, 3): (1, 5),
    (3, 1): (1, 6),
}


class TableEntry(NamedTuple):
    sign: int
    index: int

    def __str__(self) -> str:
        unit = "1" if self.index == 0 else f"e{self.index}"
        return ("+" if self.sign > 0 else "-") + unit


@dataclass(frozen=True)
class OctonionTable:
    """Signed products e_i e_j = sign * e_k for 0 <= i, j <= 7."""

    entries: tuple[tuple[TableEntry, ...], ...]

    def lookup(self, i: int, j: int) -> TableEntry:
        return self.entries[i][j]

    def render(self) -> list[list[str]]:
        return [[str(entry) for entry in row] for row in self.entries]


def _assemble_table() -> OctonionTable:
    rows = [[None] * 8 for _ in range(8)]
    for i in range(8):
        rows[0][i] = TableEntry(1, i)
        rows[i][0] = TableEntry(1, i)
    for i in range(1, 8):
        rows[i][i] = TableEntry(-1, 0)
    for a, b, c in FANO_LINES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            rows[x][y] = TableEntry(1, z)
            rows[y][x] = TableEntry(-1, z)
    missing = [(i, j) for i in range(8) for j in range(8) if rows[i][j] is None]
    if missing:
        raise AlgebraError(f"octonion table has no entry for {missing}")
    return OctonionTable(tuple(tuple(row) for row in rows))


def _table_violations(table: OctonionTable) -> list[str]:
    violations = []
    for i in range(1, 8):
        if table.lookup(i, i) != (-1, 0):
            violations.append(f"e{i}^2 is {table.lookup(i, i)}, not -1")
        for j in range(1, 8):
            if i != j:
                forward, backward = table.lookup(i, j), table.lookup(j, i)
                if forward.index != backward.index or forward.sign != -backward.sign:
                    violations.append(f"e{i} and e{j} do not anticommute")
    for (i, j), expected in DEFINING_PRODUCTS.items():
        if tuple(table.lookup(i, j)) != expected:
            violations.append(f"e{i}e{j} is {table.lookup(i, j)}")

    def mul(a, b):
        return omul(a, b, table)

    def assoc(a, b, c):
        return mul(mul(a, b), c) - mul(a, mul(b, c))

    e = [Octonion.basis(index) for index in range(8)]
    if mul(e[1], mul(e[2], e[3])) != e[7]:
        violations.append("e1(e2e3) is not e7")
    for i in range(1, 8):
        for j in range(1, 8):
            if assoc(e[i], e[i], e[j]) or assoc(e[i], e[j], e[j]):
                violations.append(f"associator is not alternating on e{i}, e{j}")
    pairs = [e[i] + e[j] for i in range(8) for j in range(i + 1, 8)]
    for left in pairs:
        for right in pairs:
            if onorm(mul(left, right)) != onorm(left) * onorm(right):
                violations.append(f"norm is not multiplicative on {left} and {right}")
    return violations


@lru_cache(maxsize=None)
def build_octonion_table() -> OctonionTable:
    table = _assemble_table()
    violations = _table_violations(table)
    if violations:
        raise AlgebraError("pinned octonion table is inconsistent: " + "; ".join(violations[:5]))
    logger.debug("octonion table verified")
    return table


# ---------------------------
# Octonions
# ---------------------------

@dataclass(frozen=True)
class Octonion:
    """c0 + c1*e1 + ... + c7*e7 with rational coefficients."""

    components: tuple[Fraction, ...]

    def __post_init__(self):
        components = tuple(to_rational(c) for c in self.components)
        if len(components) != 8:
            raise ValueError(f"an octonion has 8 components, got {len(components)}")
        object.__setattr__(self, "components", components)

    @classmethod
    def basis(cls, index: int) -> Octonion:
        components = [0] * 8
        components[index] = 1
        return cls(tuple(components))

    @classmethod
    def scalar(cls, value) -> Octonion:
        return cls((value, 0, 0, 0, 0, 0, 0, 0))

    def __str__(self) -> str:
        terms = []
        for index, c in enumerate(self.components):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = "" if index and abs(c) == 1 else str(abs(c))
            terms.append(sign + magnitude + (f"e{index}" if index else ""))
        text = "".join(terms) or "0"
        return text[1:] if text.startswith("+") else text

    def __add__(self, other: Octonion) -> Octonion:
        return Octonion(tuple(p + q for p, q in zip(self.components, other.components)))

    def __sub__(self, other: Octonion) -> Octonion:
        return Octonion(tuple(p - q for p, q in zip(self.components, other.components)))

    def __neg__(self) -> Octonion:
        return Octonion(tuple(-c for c in self.components))

    def __mul__(self, other) -> Octonion:
        if isinstance(other, Octonion):
            return omul(self, other)
        scalar = to_rational(other)
        return Octonion(tuple(c * scalar for c in self.components))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.components)


def omul(a: Octonion, b: Octonion, table: OctonionTable | None = None) -> Octonion:
    """Bilinear extension of the basis table."""
    entries = (table or build_octonion_table()).entries
    result = [Fraction(0)] * 8
    for i, p in enumerate(a.components):
        if not p:
            continue
        row = entries[i]
        for j, q in enumerate(b.components):
            if q:
                sign, k = row[j]
                result[k] += sign * p * q
    return Octonion(tuple(result))


def oconj(a: Octonion) -> Octonion:
    first, *rest = a.components
    return Octonion((first, *(-c for c in rest)))


def onorm(a: Octonion) -> Fraction:
    return sum((c * c for c in a.components), Fraction(0))


def oinv(a: Octonion) -> Octonion:
    norm = onorm(a)
    if not norm:
        raise ZeroDivisionError("inverse of the zero octonion")
    return oconj(a) * (1 / norm)


def associator(a: Octonion, b: Octonion, c: Octonion) -> Octonion:
    """(ab)c - a(bc)."""
    return omul(omul(a, b), c) - omul(a, omul(b, c))


def octonion_unit(index: int) -> Octonion:
    if not 0 <= index <= 7:
        raise ValueError(f"octonion units are e0..e7, got e{index}")
    return Octonion.basis(index)
