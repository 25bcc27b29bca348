"""
Schläfli symbols and their classification as spherical polytopes,
Euclidean honeycombs or hyperbolic tessellations.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from django.conf import settings

from .exceptions import InvalidParameter, InvalidSymbol


class SymbolClass(Enum):
    SPHERICAL_POLYTOPE = "spherical"
    EUCLIDEAN_HONEYCOMB = "euclidean"
    HYPERBOLIC = "hyperbolic"
    NOT_RECOGNIZED = "not-recognized"


@dataclass(frozen=True)
class SchlafliSymbol:
    """``{p,q,...}``; the empty symbol is the segment."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        for entry in entries:
            if not isinstance(entry, int) or isinstance(entry, bool) or entry < 3:
                raise InvalidSymbol(f"Schläfli entries must be integers >= 3, got {entry!r}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> SchlafliSymbol:
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise InvalidSymbol(f"expected a braced symbol like {{3,4,3}}, got {text!r}")
        inner = body[1:-1].strip()
        if not inner:
            return cls(())
        try:
            entries = tuple(int(part) for part in inner.split(","))
        except ValueError as exc:
            raise InvalidSymbol(f"non-integer entry in {text!r}") from exc
        return cls(entries)

    @property
    def dimension(self) -> int:
        return len(self.entries) + 1

    def __str__(self) -> str:
        return "{" + ",".join(str(entry) for entry in self.entries) + "}"

    def __len__(self) -> int:
        return len(self.entries)


def dual_symbol(symbol: SchlafliSymbol) -> SchlafliSymbol:
    return SchlafliSymbol(tuple(reversed(symbol.entries)))


def _simplex_symbol(length: int) -> tuple[int, ...]:
    return (3,) * length


def _hypercube_symbol(length: int) -> tuple[int, ...]:
    return (4,) + (3,) * (length - 1)


def _cross_symbol(length: int) -> tuple[int, ...]:
    return (3,) * (length - 1) + (4,)


def _generic_family(length: int) -> set[tuple[int, ...]]:
    return {_simplex_symbol(length), _hypercube_symbol(length), _cross_symbol(length)}


SPHERICAL_RANK3 = {(3, 3), (3, 4), (4, 3), (3, 5), (5, 3)}
SPHERICAL_RANK4 = _generic_family(3) | {(3, 4, 3), (3, 3, 5), (5, 3, 3)}
EUCLIDEAN_RANK4 = {(4, 3, 4)}
EUCLIDEAN_RANK5 = {(4, 3, 3, 4), (3, 4, 3, 3), (3, 3, 4, 3)}


def classify(symbol: SchlafliSymbol) -> SymbolClass:
    entries = symbol.entries
    length = len(entries)
    if length <= 1:
        return SymbolClass.SPHERICAL_POLYTOPE
    if length == 2:
        p, q = entries
        total = Fraction(1, p) + Fraction(1, q)
        if total > Fraction(1, 2):
            return SymbolClass.SPHERICAL_POLYTOPE
        if total == Fraction(1, 2):
            return SymbolClass.EUCLIDEAN_HONEYCOMB
        return SymbolClass.HYPERBOLIC
    # Higher ranks are decided by the known complete lists only.
    if length == 3:
        spherical, euclidean = SPHERICAL_RANK4, EUCLIDEAN_RANK4
    elif length == 4:
        spherical, euclidean = _generic_family(4), EUCLIDEAN_RANK5
    else:
        spherical = _generic_family(length)
        euclidean = {(4,) + (3,) * (length - 2) + (4,)}
    if entries in spherical:
        return SymbolClass.SPHERICAL_POLYTOPE
    if entries in euclidean:
        return SymbolClass.EUCLIDEAN_HONEYCOMB
    return SymbolClass.NOT_RECOGNIZED


class SphericalCatalog(NamedTuple):
    dimension: int
    symbols: tuple[SchlafliSymbol, ...]
    infinite: bool


def spherical_catalog(dimension: int, polygon_bound: int | None = None) -> SphericalCatalog:
    """All regular convex polytopes of ``dimension``.

    Dimension 2 is the infinite polygon family; it is enumerated up to
    ``polygon_bound`` sides (``POLYFORGE_POLYGON_BOUND`` by default) and
    flagged ``infinite``.
    """
    if dimension < 1:
        raise InvalidParameter(f"dimension must be >= 1, got {dimension}")
    if dimension == 1:
        entries = [()]
    elif dimension == 2:
        bound = polygon_bound if polygon_bound is not None else settings.POLYFORGE_POLYGON_BOUND
        entries = [(p,) for p in range(3, bound + 1)]
    elif dimension == 3:
        entries = sorted(SPHERICAL_RANK3)
    elif dimension == 4:
        entries = sorted(SPHERICAL_RANK4)
    else:
        entries = sorted(_generic_family(dimension - 1))
    return SphericalCatalog(
        dimension=dimension,
        symbols=tuple(SchlafliSymbol(e) for e in entries),
        infinite=dimension == 2,
    )
