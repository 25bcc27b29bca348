"""
Symmetry of face lattices and the binary polyhedral groups.

Automorphisms act freely on flags, so an automorphism is pinned down by the
image of one flag; ``lattice.extend_flag_map`` either builds it or proves it
does not exist.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from django.conf import settings

from .algebras import Q_I, Q_ONE, Quaternion, qinv, qmul, qnorm
from .exactnum import ONE, PHI, PHI_INVERSE
from .exceptions import CapExceeded, InvalidParameter, NotRegular, PolytopeError
from .lattice import (
    FaceLattice,
    Flag,
    adjacent_flag,
    base_flag,
    count_flags,
    extend_flag_map,
    f_vector,
    iter_flags,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexPermutation:
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(self.image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"{image} is not a permutation of 0..{len(image) - 1}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, size: int) -> VertexPermutation:
        return cls(tuple(range(size)))

    def __call__(self, vertex: int) -> int:
        return self.image[vertex]

    def __mul__(self, other: VertexPermutation) -> VertexPermutation:
        """Composition: apply ``other`` first."""
        return VertexPermutation(tuple(self.image[v] for v in other.image))

    def inverse(self) -> VertexPermutation:
        inverse = [0] * len(self.image)
        for source, target in enumerate(self.image):
            inverse[target] = source
        return VertexPermutation(tuple(inverse))

    def is_identity(self) -> bool:
        return all(source == target for source, target in enumerate(self.image))


# ---------------------------
# Lattice automorphisms
# ---------------------------

def _check_cap(lattice: FaceLattice):
    cap = settings.POLYFORGE_AUTOMORPHISM_CAP
    if lattice.dimension > cap:
        raise CapExceeded(
            f"automorphism search is capped at dimension {cap}, got {lattice.dimension}"
        )


def flag_automorphism(lattice: FaceLattice, source: Flag, target: Flag) -> VertexPermutation | None:
    """The automorphism carrying flag ``source`` to flag ``target``, if there is one."""
    images = extend_flag_map(lattice, lattice, source, target)
    return None if images is None else VertexPermutation(images)


def generating_reflections(lattice: FaceLattice) -> list[VertexPermutation]:
    """The n automorphisms swapping the base flag with each of its adjacent flags.

    Raises NotRegular if one of them does not exist: the lattice is then not
    flag-transitive.
    """
    base = base_flag(lattice)
    reflections = []
    for rank in range(lattice.dimension):
        neighbour = adjacent_flag(lattice, base, rank)
        reflection = flag_automorphism(lattice, base, neighbour)
        if reflection is None:
            raise NotRegular(f"no automorphism swaps the base flag across rank {rank}")
        reflections.append(reflection)
    return reflections


def automorphism_order(lattice: FaceLattice) -> int:
    _check_cap(lattice)
    if lattice.dimension == 0:
        return 1
    try:
        generating_reflections(lattice)
    except NotRegular:
        # not flag-transitive: count the flags the base flag can be carried to
        base = base_flag(lattice)
        order = sum(
            1 for flag in iter_flags(lattice)
            if extend_flag_map(lattice, lattice, base, flag) is not None
        )
        logger.debug("automorphism order %d found by flag sweep", order)
        return order
    # the reflections generate a group that is transitive on flags
    return count_flags(lattice)


def rotation_order(lattice: FaceLattice) -> int:
    if lattice.dimension < 2:
        raise InvalidParameter(f"rotation order needs dimension >= 2, got {lattice.dimension}")
    order = automorphism_order(lattice)
    if order % 2:
        raise PolytopeError(f"automorphism order {order} is odd and cannot be halved")
    return order // 2


def verify_edge_rule(lattice: FaceLattice) -> bool:
    """Rotations of a 3-polytope number twice its edges."""
    if lattice.dimension != 3:
        raise InvalidParameter(f"the edge rule applies in dimension 3, got {lattice.dimension}")
    return rotation_order(lattice) == 2 * f_vector(lattice)[1]


# ---------------------------
# Quaternion groups
# ---------------------------

def quaternion_key(q: Quaternion):
    return q.components


@dataclass(frozen=True)
class QuaternionGroup:
    elements: tuple[Quaternion, ...]
    generators: tuple[Quaternion, ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, q: Quaternion) -> bool:
        return q in self._members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def _members(self) -> frozenset:
        return frozenset(self.elements)


def group_closure(generators: Iterable[Quaternion], cap: int | None = None) -> QuaternionGroup:
    """Close ``generators`` under multiplication by a breadth-first work queue."""
    generators = tuple(generators)
    cap = settings.POLYFORGE_GROUP_CAP if cap is None else cap
    for g in generators:
        if qnorm(g) != ONE:
            raise InvalidParameter(f"generator {g} does not have unit norm")

    elements = {Q_ONE}
    frontier = [Q_ONE]
    while frontier:
        discovered = []
        for g in generators:
            for h in frontier:
                product = qmul(g, h)
                if product not in elements:
                    elements.add(product)
                    discovered.append(product)
                    if len(elements) > cap:
                        raise CapExceeded(
                            f"closure passed {cap} elements; the generators do not span a finite group of that size"
                        )
        frontier = discovered
    logger.debug("closure of %d generators has %d elements", len(generators), len(elements))
    return QuaternionGroup(tuple(sorted(elements, key=quaternion_key)), generators)


def is_closed(group: QuaternionGroup) -> bool:
    members = set(group.elements)
    return all(qmul(a, b) in members for a in group.elements for b in group.elements) and all(
        qinv(a) in members for a in group.elements
    )


HALF = Fraction(1, 2)
HURWITZ_UNIT = Quaternion(HALF, HALF, HALF, HALF)
ICOSIAN_UNIT = Quaternion(PHI * HALF, PHI_INVERSE * HALF, HALF, 0)


@lru_cache(maxsize=None)
def binary_tetrahedral() -> QuaternionGroup:
    return group_closure((HURWITZ_UNIT, Q_I))


@lru_cache(maxsize=None)
def binary_icosahedral() -> QuaternionGroup:
    return group_closure((HURWITZ_UNIT, ICOSIAN_UNIT))


BINARY_GROUPS = {
    "tetrahedral": binary_tetrahedral,
    "icosahedral": binary_icosahedral,
}
