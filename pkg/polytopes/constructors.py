"""
Constructors for every regular convex polytope.

The generic families grow by the three cone constructions (pyramid, prism,
bipyramid). The pentagonal and 4-dimensional exceptional polytopes are read
off exact coordinates in Q(sqrt5) by ``lattice_from_geometry``; the
dodecahedron and 120-cell are duals.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, product

from django.conf import settings

from .exactnum import PHI, ZERO, QuadExt, squared_distance
from .exceptions import CapExceeded, InvalidParameter, PolytopeError, UnknownPolytope, ValidationFailed
from .lattice import FaceLattice, dual, f_vector, require_valid
from .schlafli import SchlafliSymbol, SymbolClass, classify

logger = logging.getLogger(__name__)

Vector = tuple[QuadExt, ...]

FIELD = "Q(sqrt5)"


@dataclass(frozen=True)
class Geometry:
    """Exact vertex coordinates; vertex i of the geometry is vertex i of the lattice."""

    dimension: int
    vertices: tuple[Vector, ...]

    def __post_init__(self):
        vertices = tuple(tuple(QuadExt.coerce(c) for c in vertex) for vertex in self.vertices)
        for vertex in vertices:
            if len(vertex) != self.dimension:
                raise InvalidParameter(
                    f"vertex {tuple(str(c) for c in vertex)} has {len(vertex)} coordinates, expected {self.dimension}"
                )
        if len(set(vertices)) != len(vertices):
            raise InvalidParameter("geometry has repeated vertices")
        object.__setattr__(self, "vertices", vertices)

    @property
    def field(self) -> str:
        return FIELD

    def __len__(self) -> int:
        return len(self.vertices)

    def centroid(self) -> Vector:
        count = len(self.vertices)
        return tuple(
            sum((vertex[axis] for vertex in self.vertices), ZERO) / count
            for axis in range(self.dimension)
        )

    def squared_circumradii(self) -> set[QuadExt]:
        center = self.centroid()
        return {squared_distance(vertex, center) for vertex in self.vertices}

    def is_inscribed(self) -> bool:
        return len(self.squared_circumradii()) == 1


def edge_graph(geometry: Geometry) -> tuple[tuple[int, int], ...]:
    """Vertex pairs at the minimal squared distance."""
    shortest = None
    edges = []
    vertices = geometry.vertices
    for i, j in combinations(range(len(vertices)), 2):
        distance = squared_distance(vertices[i], vertices[j])
        if shortest is None or distance < shortest:
            shortest, edges = distance, [(i, j)]
        elif distance == shortest:
            edges.append((i, j))
    logger.debug("edge scan over %d vertices found %d edges", len(vertices), len(edges))
    return tuple(edges)


class FaceMethod(Enum):
    SIMPLICIAL_CLIQUES = "simplicial_cliques"
    BIPARTITE_24CELL = "bipartite_24cell"


def _neighbours(count: int, edges) -> list[set[int]]:
    adjacency = [set() for _ in range(count)]
    for i, j in edges:
        adjacency[i].add(j)
        adjacency[j].add(i)
    return adjacency


def _grow_cliques(cliques, adjacency):
    grown = []
    for clique in cliques:
        common = set.intersection(*(adjacency[v] for v in clique))
        grown.extend(clique + (v,) for v in sorted(common) if v > clique[-1])
    return grown


def _octahedral_cells(geometry: Geometry, adjacency) -> list[tuple[int, ...]]:
    """Each cell is an octahedron: an opposite pair plus its four common neighbours."""
    vertices = geometry.vertices
    edge = squared_distance(vertices[0], vertices[min(adjacency[0])])
    diagonal = edge * 2
    cells = set()
    for u, w in combinations(range(len(vertices)), 2):
        if squared_distance(vertices[u], vertices[w]) != diagonal:
            continue
        cell = tuple(sorted({u, w} | (adjacency[u] & adjacency[w])))
        if len(cell) != 6:
            raise ValidationFailed(
                "bipartite_24cell does not apply",
                [f"opposite pair {u}, {w} spans {len(cell)} vertices, not 6"],
            )
        cells.add(cell)
    return sorted(cells)


def lattice_from_geometry(geometry: Geometry, method: FaceMethod = FaceMethod.SIMPLICIAL_CLIQUES) -> FaceLattice:
    method = FaceMethod(method)
    n = geometry.dimension
    if not geometry.is_inscribed():
        raise ValidationFailed("vertices do not lie on a common sphere")
    count = len(geometry)
    edges = edge_graph(geometry)
    adjacency = _neighbours(count, edges)
    ranks = [[(v,) for v in range(count)]]
    if n >= 2:
        ranks.append(list(edges))
    if method is FaceMethod.SIMPLICIAL_CLIQUES:
        cliques = list(edges)
        for _ in range(2, n):
            cliques = _grow_cliques(cliques, adjacency)
            ranks.append(cliques)
    else:
        if n != 4:
            raise ValidationFailed(f"bipartite_24cell needs dimension 4, got {n}")
        ranks.append(_grow_cliques(edges, adjacency))
        ranks.append(_octahedral_cells(geometry, adjacency))
    lattice = FaceLattice.build(n, ranks[:n])
    return require_valid(lattice, f"{method.value} on {count} vertices")


# ---------------------------
# Cone constructions
# ---------------------------

def pyramid(lattice: FaceLattice) -> FaceLattice:
    """Cone over ``lattice`` from one new apex."""
    n, apex = lattice.dimension, lattice.vertex_count
    ranks = []
    for rank in range(n + 1):
        faces = list(lattice.faces(rank))
        faces.extend(face + (apex,) for face in lattice.faces(rank - 1))
        ranks.append(faces)
    return FaceLattice.build(n + 1, ranks)


def prism(lattice: FaceLattice) -> FaceLattice:
    """Product with a segment: a bottom copy, a shifted top copy, and the faces joining them."""
    n, shift = lattice.dimension, lattice.vertex_count
    ranks = []
    for rank in range(n + 1):
        faces = []
        for face in lattice.faces(rank):
            faces.append(face)
            faces.append(tuple(v + shift for v in face))
        if rank >= 1:
            faces.extend(face + tuple(v + shift for v in face) for face in lattice.faces(rank - 1))
        ranks.append(faces)
    return FaceLattice.build(n + 1, ranks)


def bipyramid(lattice: FaceLattice) -> FaceLattice:
    """Two apexes, each coned over every proper face; the old body is no longer a face."""
    n = lattice.dimension
    if n < 1:
        raise InvalidParameter("a bipyramid needs a lattice of dimension >= 1")
    apexes = (lattice.vertex_count, lattice.vertex_count + 1)
    ranks = []
    for rank in range(n + 1):
        faces = list(lattice.faces(rank)) if rank < n else []
        for apex in apexes:
            faces.extend(face + (apex,) for face in lattice.faces(rank - 1))
        ranks.append(faces)
    return FaceLattice.build(n + 1, ranks)


def _iterate(step, start: FaceLattice, times: int) -> FaceLattice:
    lattice = start
    for _ in range(times):
        lattice = step(lattice)
    return lattice


@lru_cache(maxsize=None)
def _simplex_lattice(n: int) -> FaceLattice:
    return _iterate(pyramid, FaceLattice.point(), n)


@lru_cache(maxsize=None)
def _hypercube_lattice(n: int) -> FaceLattice:
    return _iterate(prism, FaceLattice.point(), n)


@lru_cache(maxsize=None)
def _cross_lattice(n: int) -> FaceLattice:
    return _iterate(bipyramid, _simplex_lattice(1), n - 1)


# ---------------------------
# Named polytopes
# ---------------------------

@dataclass(frozen=True)
class NamedPolytope:
    name: str
    parameter: int | None
    lattice: FaceLattice
    symbol: SchlafliSymbol
    geometry: Geometry | None = None

    @property
    def label(self) -> str:
        if self.parameter is None:
            return self.name
        return f"{self.name}({self.parameter})"

    @property
    def dimension(self) -> int:
        return self.lattice.dimension

    @property
    def f_vector(self) -> tuple[int, ...]:
        return f_vector(self.lattice)


def _announce(polytope: NamedPolytope) -> NamedPolytope:
    logger.info("built %s %s f=%s", polytope.label, polytope.symbol, polytope.f_vector)
    return polytope


def _check_family_dimension(n: int):
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"dimension must be an integer >= 1, got {n!r}")
    cap = settings.POLYFORGE_DIM_CAP
    if n > cap:
        raise CapExceeded(f"dimension {n} is above the cap {cap} (POLYFORGE_DIM_CAP)")


def hypercube_geometry(n: int) -> Geometry:
    """(+-1)^n; bit j of the vertex index is the sign of coordinate j."""
    return Geometry(n, tuple(
        tuple(QuadExt(1 if (index >> axis) & 1 else -1) for axis in range(n))
        for index in range(2 ** n)
    ))


def cross_geometry(n: int) -> Geometry:
    """Vertex 2j is -2e_j and vertex 2j+1 is +2e_j."""
    vertices = []
    for axis in range(n):
        for sign in (-2, 2):
            vertices.append(tuple(QuadExt(sign if other == axis else 0) for other in range(n)))
    return Geometry(n, tuple(vertices))


def segment() -> NamedPolytope:
    return _announce(NamedPolytope(
        "segment", None, _simplex_lattice(1), SchlafliSymbol(()), hypercube_geometry(1),
    ))


def polygon(p: int) -> NamedPolytope:
    if not isinstance(p, int) or p < 3:
        raise InvalidParameter(f"a polygon needs p >= 3 sides, got {p!r}")
    lattice = FaceLattice.build(2, [
        [(v,) for v in range(p)],
        [(v, (v + 1) % p) for v in range(p)],
    ])
    return _announce(NamedPolytope("polygon", p, lattice, SchlafliSymbol((p,))))


def simplex(n: int) -> NamedPolytope:
    _check_family_dimension(n)
    return _announce(NamedPolytope("simplex", n, _simplex_lattice(n), SchlafliSymbol((3,) * (n - 1))))


def hypercube(n: int) -> NamedPolytope:
    _check_family_dimension(n)
    symbol = SchlafliSymbol((4,) + (3,) * (n - 2)) if n >= 2 else SchlafliSymbol(())
    return _announce(NamedPolytope("hypercube", n, _hypercube_lattice(n), symbol, hypercube_geometry(n)))


def cross_polytope(n: int) -> NamedPolytope:
    _check_family_dimension(n)
    symbol = SchlafliSymbol((3,) * (n - 2) + (4,)) if n >= 2 else SchlafliSymbol(())
    return _announce(NamedPolytope("cross", n, _cross_lattice(n), symbol, cross_geometry(n)))


def icosahedron_geometry() -> Geometry:
    """Cyclic permutations of (0, +-1, +-phi)."""
    vertices = []
    for one, golden in product((QuadExt(-1), QuadExt(1)), (-PHI, PHI)):
        vertices.extend([(ZERO, one, golden), (golden, ZERO, one), (one, golden, ZERO)])
    return Geometry(3, tuple(sorted(vertices)))


@lru_cache(maxsize=None)
def _icosahedron_parts() -> tuple[FaceLattice, Geometry]:
    geometry = icosahedron_geometry()
    return lattice_from_geometry(geometry, FaceMethod.SIMPLICIAL_CLIQUES), geometry


def icosahedron() -> NamedPolytope:
    lattice, geometry = _icosahedron_parts()
    return _announce(NamedPolytope("icosahedron", None, lattice, SchlafliSymbol((3, 5)), geometry))


def facet_centroids(lattice: FaceLattice, geometry: Geometry) -> Geometry:
    """One point per facet, in facet order: the dual's vertices."""
    points = []
    for facet in lattice.faces(lattice.dimension - 1):
        points.append(tuple(
            sum((geometry.vertices[v][axis] for v in facet), ZERO) / len(facet)
            for axis in range(geometry.dimension)
        ))
    return Geometry(geometry.dimension, tuple(points))


def dodecahedron() -> NamedPolytope:
    lattice, geometry = _icosahedron_parts()
    return _announce(NamedPolytope(
        "dodecahedron", None, dual(lattice), SchlafliSymbol((5, 3)), facet_centroids(lattice, geometry),
    ))


def cell24_geometry() -> Geometry:
    """The hypercube(4) vertices together with the cross_polytope(4) vertices."""
    vertices = hypercube_geometry(4).vertices + cross_geometry(4).vertices
    return Geometry(4, tuple(sorted(vertices)))


@lru_cache(maxsize=None)
def _cell24_parts() -> tuple[FaceLattice, Geometry]:
    geometry = cell24_geometry()
    return lattice_from_geometry(geometry, FaceMethod.BIPARTITE_24CELL), geometry


def cell24() -> NamedPolytope:
    lattice, geometry = _cell24_parts()
    return _announce(NamedPolytope("cell24", None, lattice, SchlafliSymbol((3, 4, 3)), geometry))


def cell600_geometry() -> Geometry:
    """The binary icosahedral group read as points of the 3-sphere."""
    from .symmetry import binary_icosahedral

    return Geometry(4, tuple(sorted(q.components for q in binary_icosahedral())))


@lru_cache(maxsize=None)
def _cell600_parts() -> tuple[FaceLattice, Geometry]:
    geometry = cell600_geometry()
    return lattice_from_geometry(geometry, FaceMethod.SIMPLICIAL_CLIQUES), geometry


def cell600() -> NamedPolytope:
    lattice, geometry = _cell600_parts()
    return _announce(NamedPolytope("cell600", None, lattice, SchlafliSymbol((3, 3, 5)), geometry))


@lru_cache(maxsize=None)
def _cell120_lattice() -> FaceLattice:
    return dual(_cell600_parts()[0])


def cell120() -> NamedPolytope:
    return _announce(NamedPolytope("cell120", None, _cell120_lattice(), SchlafliSymbol((5, 3, 3))))


# ---------------------------
# Lookup by name or symbol
# ---------------------------

PARAMETRIZED = {
    "polygon": polygon,
    "simplex": simplex,
    "hypercube": hypercube,
    "cross": cross_polytope,
}

FIXED = {
    "segment": segment,
    "icosahedron": icosahedron,
    "dodecahedron": dodecahedron,
    "cell24": cell24,
    "cell600": cell600,
    "cell120": cell120,
}

NAMES = tuple(sorted(PARAMETRIZED) + sorted(FIXED))


def build(name: str, parameter: int | None = None) -> NamedPolytope:
    if name in PARAMETRIZED:
        if parameter is None:
            raise InvalidParameter(f"{name} needs an integer parameter")
        return PARAMETRIZED[name](parameter)
    if name in FIXED:
        if parameter is not None:
            raise InvalidParameter(f"{name} takes no parameter")
        return FIXED[name]()
    raise UnknownPolytope(f"unknown polytope {name!r}; known names: {', '.join(NAMES)}")


EXCEPTIONAL = {
    (3, 5): icosahedron,
    (5, 3): dodecahedron,
    (3, 4, 3): cell24,
    (3, 3, 5): cell600,
    (5, 3, 3): cell120,
}


def from_symbol(symbol: SchlafliSymbol) -> NamedPolytope:
    entries = symbol.entries
    if classify(symbol) is not SymbolClass.SPHERICAL_POLYTOPE:
        raise PolytopeError(f"{symbol} is {classify(symbol).value}, not a finite polytope")
    length = len(entries)
    if length == 0:
        return segment()
    if length == 1:
        return polygon(entries[0])
    if entries in EXCEPTIONAL:
        return EXCEPTIONAL[entries]()
    if entries == (3,) * length:
        return simplex(length + 1)
    if entries == (4,) + (3,) * (length - 1):
        return hypercube(length + 1)
    if entries == (3,) * (length - 1) + (4,):
        return cross_polytope(length + 1)
    raise UnknownPolytope(f"no constructor for {symbol}")
