"""
Graded face lattices of convex polytopes.

A face is the sorted tuple of the vertex indices it contains. Rank -1 is
the empty face and rank ``dimension`` the whole polytope; both are implied
and only the proper ranks 0..n-1 are stored. Within a rank, faces are kept
in sorted order, so two lattices built from the same faces compare equal.
"""
from __future__ import annotations

import logging
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .exceptions import NotRegular, PolytopeError, ValidationFailed
from .schlafli import SchlafliSymbol

logger = logging.getLogger(__name__)

Face = tuple[int, ...]
Flag = tuple[int, ...]
FVector = tuple[int, ...]


@dataclass(frozen=True)
class FaceLattice:
    dimension: int
    ranks: tuple[tuple[Face, ...], ...]

    def __post_init__(self):
        if self.dimension < 0:
            raise ValueError(f"dimension must be >= 0, got {self.dimension}")
        if len(self.ranks) != self.dimension:
            raise ValueError(
                f"a {self.dimension}-dimensional lattice stores {self.dimension} proper ranks, "
                f"got {len(self.ranks)}"
            )

    @classmethod
    def build(cls, dimension: int, ranks) -> FaceLattice:
        """Canonicalize faces (sorted vertex tuples, sorted ranks) and wrap them."""
        canonical = tuple(
            tuple(sorted(tuple(sorted(face)) for face in rank))
            for rank in ranks
        )
        return cls(dimension, canonical)

    @classmethod
    def point(cls) -> FaceLattice:
        return cls(0, ())

    @property
    def vertex_count(self) -> int:
        return len(self.ranks[0]) if self.dimension else 1

    def faces(self, rank: int) -> tuple[Face, ...]:
        if rank == -1:
            return ((),)
        if rank == self.dimension:
            return (tuple(range(self.vertex_count)),)
        if 0 <= rank < self.dimension:
            return self.ranks[rank]
        raise IndexError(f"rank {rank} outside -1..{self.dimension}")

    @cached_property
    def _up(self):
        up = []
        for rank in range(-1, self.dimension):
            above = self.faces(rank + 1)
            by_vertex = defaultdict(set)
            for index, face in enumerate(above):
                for vertex in face:
                    by_vertex[vertex].add(index)
            everything = set(range(len(above)))
            rows = []
            for face in self.faces(rank):
                if face:
                    containing = set.intersection(*(by_vertex.get(v, set()) for v in face))
                else:
                    containing = everything
                rows.append(tuple(sorted(j for j in containing if len(above[j]) > len(face))))
            up.append(tuple(rows))
        return tuple(up)

    @cached_property
    def _down(self):
        down = []
        for rank in range(0, self.dimension + 1):
            rows = [[] for _ in self.faces(rank)]
            for index, parents in enumerate(self.parents(rank - 1)):
                for parent in parents:
                    rows[parent].append(index)
            down.append(tuple(tuple(row) for row in rows))
        return tuple(down)

    def parents(self, rank: int) -> tuple[tuple[int, ...], ...]:
        """For each face of ``rank`` (-1..n-1), the indices of the rank+1 faces containing it."""
        return self._up[rank + 1]

    def children(self, rank: int) -> tuple[tuple[int, ...], ...]:
        """For each face of ``rank`` (0..n), the indices of the rank-1 faces it contains."""
        return self._down[rank]

    @cached_property
    def diamonds(self) -> dict[tuple[int, int, int], tuple[int, ...]]:
        """(k, a, b) -> the rank-k faces between face a of rank k-1 and face b of rank k+1."""
        table = defaultdict(list)
        for rank in range(self.dimension):
            for middle, (below, above) in enumerate(zip(self.children(rank), self.parents(rank))):
                for a in below:
                    for b in above:
                        table[rank, a, b].append(middle)
        return {key: tuple(value) for key, value in table.items()}

    @cached_property
    def vertex_sets(self) -> tuple[tuple[frozenset, ...], ...]:
        """Faces as frozensets, indexed by rank + 1."""
        return tuple(
            tuple(frozenset(face) for face in self.faces(rank))
            for rank in range(-1, self.dimension + 1)
        )


# ---------------------------
# Counting
# ---------------------------

def f_vector(lattice: FaceLattice) -> FVector:
    return tuple(len(lattice.faces(rank)) for rank in range(lattice.dimension))


def euler_characteristic(f: FVector) -> int:
    return sum((-1) ** rank * count for rank, count in enumerate(f))


def euler_characteristic_full(lattice: FaceLattice) -> int:
    """Alternating sum over ranks -1..n, improper faces included."""
    return sum(
        (1 if rank % 2 == 0 else -1) * len(lattice.faces(rank))
        for rank in range(-1, lattice.dimension + 1)
    )


def count_flags(lattice: FaceLattice) -> int:
    # chains from the empty face up to each face, one rank at a time
    counts = [1]
    for rank in range(lattice.dimension + 1):
        counts = [sum(counts[i] for i in below) for below in lattice.children(rank)]
    return counts[0]


# ---------------------------
# Flags
# ---------------------------

def iter_flags(lattice: FaceLattice, prefix: Flag = ()) -> Iterator[Flag]:
    """Depth-first enumeration of flags (face indices for ranks 0..n-1) extending ``prefix``."""
    chain = list(prefix)
    n = lattice.dimension

    def extend():
        if len(chain) == n:
            yield tuple(chain)
            return
        rank = len(chain)
        for face in lattice.parents(rank - 1)[chain[-1] if chain else 0]:
            chain.append(face)
            yield from extend()
            chain.pop()

    yield from extend()


def base_flag(lattice: FaceLattice) -> Flag:
    return next(iter_flags(lattice))


def adjacent_flag(lattice: FaceLattice, flag: Flag, rank: int) -> Flag:
    """The flag differing from ``flag`` exactly in its face of ``rank``."""
    full = (0, *flag, 0)
    middles = lattice.diamonds.get((rank, full[rank], full[rank + 2]), ())
    if len(middles) != 2:
        raise ValidationFailed(
            f"diamond condition fails at rank {rank}",
            [f"{len(middles)} faces of rank {rank} in the interval of flag {flag}"],
        )
    other = middles[0] if middles[1] == flag[rank] else middles[1]
    return flag[:rank] + (other,) + flag[rank + 1:]


def extend_flag_map(first: FaceLattice, second: FaceLattice, source: Flag, target: Flag):
    """Extend the assignment ``source -> target`` to an isomorphism ``first -> second``.

    The map is propagated through diamonds: once the faces a < m < b are
    mapped, the other face between a and b must go to the other face
    between their images. Returns the vertex images as a tuple, or None if
    the assignment does not extend.
    """
    n = first.dimension
    if second.dimension != n:
        return None
    forward = [{} for _ in range(n + 2)]
    backward = [{} for _ in range(n + 2)]
    pending = deque()

    def assign(rank, face, image):
        known = forward[rank + 1].get(face)
        if known is not None:
            return known == image
        if image in backward[rank + 1]:
            return False
        forward[rank + 1][face] = image
        backward[rank + 1][image] = face
        pending.append((rank, face))
        return True

    for rank, (face, image) in enumerate(zip((0, *source, 0), (0, *target, 0)), start=-1):
        if not assign(rank, face, image):
            return None

    source_diamonds, target_diamonds = first.diamonds, second.diamonds

    def fire(rank, a, middle, b):
        middles = source_diamonds.get((rank, a, b), ())
        images = target_diamonds.get((rank, forward[rank][a], forward[rank + 2][b]), ())
        if len(middles) != 2 or len(images) != 2:
            return False
        image = forward[rank + 1][middle]
        if image not in images:
            return False
        other = middles[0] if middles[1] == middle else middles[1]
        return assign(rank, other, images[0] if images[1] == image else images[1])

    while pending:
        rank, face = pending.popleft()
        triples = []
        if 0 <= rank < n:
            mapped_above = [b for b in first.parents(rank)[face] if b in forward[rank + 2]]
            for a in first.children(rank)[face]:
                if a in forward[rank]:
                    triples.extend((rank, a, face, b) for b in mapped_above)
        if rank + 1 < n:
            for middle in first.parents(rank)[face]:
                if middle in forward[rank + 2]:
                    triples.extend(
                        (rank + 1, face, middle, b)
                        for b in first.parents(rank + 1)[middle]
                        if b in forward[rank + 3]
                    )
        if rank >= 1:
            for middle in first.children(rank)[face]:
                if middle in forward[rank]:
                    triples.extend(
                        (rank - 1, a, middle, face)
                        for a in first.children(rank - 1)[middle]
                        if a in forward[rank - 1]
                    )
        for triple in triples:
            if not fire(*triple):
                return None

    for rank in range(-1, n + 1):
        if len(forward[rank + 1]) != len(first.faces(rank)):
            return None
        if len(first.faces(rank)) != len(second.faces(rank)):
            return None
    for rank in range(0, n + 1):
        lower = forward[rank]
        source_children, target_children = first.children(rank), second.children(rank)
        for face, image in forward[rank + 1].items():
            if {lower[c] for c in source_children[face]} != set(target_children[image]):
                return None
    return tuple(forward[1][vertex] for vertex in range(first.vertex_count))


def is_isomorphic(first: FaceLattice, second: FaceLattice) -> bool:
    return find_isomorphism(first, second) is not None


def find_isomorphism(first: FaceLattice, second: FaceLattice):
    """Vertex images of some isomorphism ``first -> second``, or None."""
    if first.dimension != second.dimension or f_vector(first) != f_vector(second):
        return None
    source = base_flag(first)
    for target in iter_flags(second):
        images = extend_flag_map(first, second, source, target)
        if images is not None:
            return images
    return None


# ---------------------------
# Duality and sections
# ---------------------------

def _faces_by_vertex(faces) -> dict[int, set[int]]:
    index = defaultdict(set)
    for position, face in enumerate(faces):
        for vertex in face:
            index[vertex].add(position)
    return index


def dual(lattice: FaceLattice) -> FaceLattice:
    """Reverse the ranks; the old facets become the new vertices."""
    n = lattice.dimension
    if n < 1:
        raise PolytopeError("the dual needs a lattice of dimension >= 1")
    facets_at = _faces_by_vertex(lattice.faces(n - 1))
    ranks = []
    for rank in range(n):
        old = lattice.faces(n - 1 - rank)
        ranks.append([
            tuple(sorted(set.intersection(*(facets_at[v] for v in face))))
            for face in old
        ])
    return FaceLattice.build(n, ranks)


def vertex_figure(lattice: FaceLattice, vertex: int) -> FaceLattice:
    """Faces through ``vertex``, one rank lower; its vertices are the edges at ``vertex``."""
    n = lattice.dimension
    if n < 2:
        raise PolytopeError("a vertex figure needs a lattice of dimension >= 2")
    edges = [lattice.faces(1)[e] for e in lattice.parents(0)[vertex]]
    local = {}
    for position, edge in enumerate(edges):
        other, = (v for v in edge if v != vertex)
        local[other] = position
    ranks = []
    for rank in range(1, n):
        ranks.append([
            tuple(local[v] for v in face if v in local)
            for face in lattice.faces(rank)
            if vertex in face
        ])
    return FaceLattice.build(n - 1, ranks)


def facet_lattice(lattice: FaceLattice, index: int) -> FaceLattice:
    """The lattice of facet ``index``, vertices renumbered in order."""
    n = lattice.dimension
    if n < 1:
        raise PolytopeError("a facet needs a lattice of dimension >= 1")
    facet = lattice.faces(n - 1)[index]
    local = {v: position for position, v in enumerate(facet)}
    members = frozenset(facet)
    ranks = [
        [tuple(local[v] for v in face) for face in lattice.faces(rank) if members.issuperset(face)]
        for rank in range(n - 1)
    ]
    return FaceLattice.build(n - 1, ranks)


# ---------------------------
# Regularity
# ---------------------------

def schlafli_from_lattice(lattice: FaceLattice) -> SchlafliSymbol:
    """Read {p_1, ..., p_{n-1}} off every flag and insist they agree.

    p_i counts the rank-i faces strictly between the flag's (i-2)-face and
    its (i+1)-face.
    """
    n = lattice.dimension
    if n < 1:
        raise PolytopeError("a Schläfli symbol needs a lattice of dimension >= 1")
    sets = lattice.vertex_sets
    memo = {}

    def entry(i, full):
        key = (i, full[i - 1], full[i + 2])
        if key not in memo:
            bottom = sets[i - 1][full[i - 1]]
            memo[key] = sum(
                1 for g in lattice.children(i + 1)[full[i + 2]] if bottom <= sets[i + 1][g]
            )
        return memo[key]

    symbol = None
    for flag in iter_flags(lattice):
        full = (0, *flag, 0)
        entries = tuple(entry(i, full) for i in range(1, n))
        if symbol is None:
            symbol = entries
        elif entries != symbol:
            raise NotRegular(f"flag {flag} reads {entries}, the base flag reads {symbol}")
    if any(entry < 3 for entry in symbol):
        raise NotRegular(f"degenerate entries {symbol}")
    return SchlafliSymbol(symbol)


# ---------------------------
# Validation
# ---------------------------

def validate(lattice: FaceLattice) -> list[str]:
    """Every broken lattice invariant, as messages; empty when the lattice is sound."""
    violations = []
    n = lattice.dimension
    vertices = lattice.vertex_count
    if n == 0:
        return violations

    expected = tuple((v,) for v in range(vertices))
    if lattice.faces(0) != expected:
        violations.append("rank 0 faces are not the singletons 0..V-1")

    seen = {}
    for rank in range(n):
        faces = lattice.faces(rank)
        for face in faces:
            if not face:
                violations.append(f"empty face stored at rank {rank}")
            elif face[0] < 0 or face[-1] >= vertices:
                violations.append(f"face {face} at rank {rank} uses unknown vertices")
            if len(face) == vertices:
                violations.append(f"gradedness: top face missing, rank {rank} face {face} spans every vertex")
            if face in seen:
                violations.append(f"face {face} appears at ranks {seen[face]} and {rank}")
            seen.setdefault(face, rank)
    if violations:
        return violations

    for rank in range(n):
        for face, parents in zip(lattice.faces(rank), lattice.parents(rank)):
            if not parents:
                violations.append(f"gradedness: rank {rank} face {face} lies in no rank {rank + 1} face")
    for rank in range(n + 1):
        for face, children in zip(lattice.faces(rank), lattice.children(rank)):
            if not children:
                violations.append(f"gradedness: rank {rank} face {face} contains no rank {rank - 1} face")

    for rank in range(n):
        lower_sets = lattice.vertex_sets[rank]
        higher = lattice.faces(rank + 1)
        higher_at = _faces_by_vertex(higher)
        counts = Counter()
        for below, above in zip(lattice.children(rank), lattice.parents(rank)):
            for a in below:
                for b in above:
                    counts[a, b] += 1
        for a, face in enumerate(lattice.faces(rank - 1)):
            if face:
                above = set.intersection(*(higher_at[v] for v in face))
            else:
                above = set(range(len(higher)))
            for b in above:
                if lower_sets[a] == lattice.vertex_sets[rank + 2][b]:
                    continue
                if counts[a, b] != 2:
                    violations.append(
                        f"diamond: {counts[a, b]} rank {rank} faces between {face} and {higher[b]}"
                    )
    return violations


def require_valid(lattice: FaceLattice, context: str) -> FaceLattice:
    violations = validate(lattice)
    if violations:
        logger.debug("%s produced %d lattice violations", context, len(violations))
        raise ValidationFailed(f"{context} produced an invalid face lattice", violations)
    return lattice
