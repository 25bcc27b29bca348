"""
Invariant suite run by ``polyforge verify`` and ``polyforge algebra check``.

Each check is computed exactly; a failing check is logged at WARNING and
reported, never raised.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from django.conf import settings

from . import algebras, symmetry
from .constructors import NamedPolytope, build, edge_graph
from .exactnum import QuadExt
from .exceptions import PolytopeError
from .lattice import (
    count_flags,
    dual,
    euler_characteristic,
    euler_characteristic_full,
    f_vector,
    is_isomorphic,
    schlafli_from_lattice,
    validate,
)
from .schlafli import SymbolClass, classify, dual_symbol

logger = logging.getLogger(__name__)

EXCEPTIONAL_F_VECTORS = {
    "icosahedron": (12, 30, 20),
    "dodecahedron": (20, 30, 12),
    "cell24": (24, 96, 96, 24),
    "cell600": (120, 720, 1200, 600),
    "cell120": (600, 1200, 720, 120),
}

ROSTER = (
    ("segment", None),
    ("polygon", 5),
    ("simplex", 3),
    ("simplex", 4),
    ("hypercube", 3),
    ("hypercube", 4),
    ("cross", 3),
    ("cross", 4),
    ("cross", 5),
    ("icosahedron", None),
    ("dodecahedron", None),
    ("cell24", None),
    ("cell600", None),
    ("cell120", None),
)

# isomorphism and flag-transitivity sweeps stay below this dimension
SWEEP_DIMENSION = 4


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class VerificationReport:
    subject: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]

    def record(self, name: str, passed: bool, detail: str = "") -> Check:
        check = Check(name, bool(passed), detail)
        if not check.passed:
            logger.warning("%s: %s", self.subject, check)
        self.checks.append(check)
        return check

    def expect_equal(self, name: str, actual, expected) -> Check:
        return self.record(name, actual == expected, f"{actual}" if actual == expected else f"{actual} != {expected}")

    def run(self, name: str, probe) -> Check | None:
        """Record ``probe()`` (returning passed, detail); engine errors count as failures."""
        try:
            passed, detail = probe()
        except (PolytopeError, ZeroDivisionError) as exc:
            return self.record(name, False, f"{type(exc).__name__}: {exc}")
        return self.record(name, passed, detail)


def reference_f_vector(polytope: NamedPolytope) -> tuple[int, ...] | None:
    """Closed-form face counts, or None when no formula is known."""
    n = polytope.parameter
    if polytope.name == "segment":
        return (2,)
    if polytope.name == "polygon":
        return (n, n)
    if polytope.name == "simplex":
        return tuple(comb(n + 1, k + 1) for k in range(n))
    if polytope.name == "hypercube":
        return tuple(2 ** (n - k) * comb(n, k) for k in range(n))
    if polytope.name == "cross":
        return tuple(reversed([2 ** (n - k) * comb(n, k) for k in range(n)]))
    return EXCEPTIONAL_F_VECTORS.get(polytope.name)


def reference_automorphism_order(polytope: NamedPolytope) -> int | None:
    n = polytope.parameter
    if polytope.name == "segment":
        return 2
    if polytope.name == "polygon":
        return 2 * n
    if polytope.name == "simplex":
        return factorial(n + 1)
    if polytope.name in ("hypercube", "cross"):
        return 2 ** n * factorial(n)
    if polytope.name == "cell24":
        return 1152
    return None


def verify_polytope(polytope: NamedPolytope) -> VerificationReport:
    report = VerificationReport(polytope.label)
    lattice = polytope.lattice
    n = lattice.dimension
    f = f_vector(lattice)
    cap = settings.POLYFORGE_AUTOMORPHISM_CAP

    violations = validate(lattice)
    report.record("lattice", not violations, "; ".join(violations[:3]) or "diamond and gradedness hold")
    expected_f = reference_f_vector(polytope)
    if expected_f is not None:
        report.expect_equal("f-vector", f, expected_f)
    report.expect_equal("euler", euler_characteristic(f), 1 + (-1) ** (n - 1))
    report.expect_equal("euler all ranks", euler_characteristic_full(lattice), 0)
    report.expect_equal("dual f-vector", f_vector(dual(lattice)), tuple(reversed(f)))
    if n <= SWEEP_DIMENSION:
        report.run("dual of dual", lambda: (is_isomorphic(dual(dual(lattice)), lattice), "isomorphic"))
    if n <= cap:
        report.run("schlafli", lambda: (
            schlafli_from_lattice(lattice) == polytope.symbol, str(schlafli_from_lattice(lattice)),
        ))
        report.run("dual schlafli", lambda: (
            schlafli_from_lattice(dual(lattice)) == dual_symbol(polytope.symbol),
            str(dual_symbol(polytope.symbol)),
        ))
    report.expect_equal("classification", classify(polytope.symbol).value, SymbolClass.SPHERICAL_POLYTOPE.value)

    if n <= SWEEP_DIMENSION:
        flags = count_flags(lattice)

        def automorphisms():
            order = symmetry.automorphism_order(lattice)
            reference = reference_automorphism_order(polytope)
            expected = (flags,) if reference is None else (flags, reference)
            return all(order == e for e in expected), f"order {order}, flags {flags}"

        report.run("automorphism order", automorphisms)
    if n == 3:
        report.run("edge rule", lambda: (
            symmetry.verify_edge_rule(lattice),
            f"rotations {symmetry.rotation_order(lattice)} = 2 x {f[1]} edges",
        ))

    geometry = polytope.geometry
    if geometry is not None:
        radii = geometry.squared_circumradii()
        report.record("circumradius", len(radii) == 1, ", ".join(sorted(str(r) for r in radii)))
        edges = edge_graph(geometry)
        report.record("edge graph", edges == lattice.faces(1) if n >= 2 else len(edges) == 1,
                      f"{len(edges)} edges")
        points = set(geometry.vertices)
        if polytope.name == "cell24":
            doubled = {tuple(2 * c for c in q.components) for q in symmetry.binary_tetrahedral()}
            report.record("binary tetrahedral x2", doubled == points, f"{len(doubled)} points")
        if polytope.name == "cell600":
            icosians = {q.components for q in symmetry.binary_icosahedral()}
            report.record("binary icosahedral", icosians == points, f"{len(icosians)} points")
    return report


def verify_suite(name: str, parameter: int | None = None) -> list[VerificationReport]:
    if name == "all":
        return [verify_polytope(build(*entry)) for entry in ROSTER]
    return [verify_polytope(build(name, parameter))]


# ---------------------------
# Division algebras
# ---------------------------

def _fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 6))


def _random_quaternion(rng: random.Random) -> algebras.Quaternion:
    return algebras.Quaternion(*(QuadExt(_fraction(rng), _fraction(rng)) for _ in range(4)))


def _random_octonion(rng: random.Random) -> algebras.Octonion:
    return algebras.Octonion(tuple(_fraction(rng) for _ in range(8)))


def _nonzero(draw, rng):
    value = draw(rng)
    while not value:
        value = draw(rng)
    return value


def verify_algebras(seed: int | None = None, samples: int = 500, inverse_samples: int = 200) -> VerificationReport:
    rng = random.Random(settings.POLYFORGE_SAMPLE_SEED if seed is None else seed)
    report = VerificationReport("algebra")

    report.run("octonion table", lambda: (algebras.build_octonion_table() is not None, "verified at build"))
    e = [algebras.octonion_unit(i) for i in range(8)]
    witness = algebras.associator(e[1], e[2], e[3])
    report.expect_equal("associator e1 e2 e3", witness, -2 * e[7])
    report.record(
        "octonion units",
        all(e[i] * e[i] == algebras.Octonion.scalar(-1) for i in range(1, 8))
        and all(e[i] * e[j] == -(e[j] * e[i]) for i in range(1, 8) for j in range(1, 8) if i != j),
        "anti-involutive and anticommuting",
    )
    report.record(
        "octonion alternativity",
        not any(algebras.associator(e[i], e[i], e[j]) for i in range(8) for j in range(8)),
        "property of the pinned table",
    )
    basis = algebras.QUATERNION_BASIS
    report.record(
        "quaternion associativity",
        not any(algebras.qassociator(a, b, c) for a in basis for b in basis for c in basis),
        "all basis associators vanish",
    )

    quaternion_pairs = [(_random_quaternion(rng), _random_quaternion(rng)) for _ in range(samples)]
    report.record(
        "quaternion norm",
        all(algebras.qnorm(algebras.qmul(a, b)) == algebras.qnorm(a) * algebras.qnorm(b) for a, b in quaternion_pairs),
        f"{samples} pairs over Q(sqrt5)",
    )
    octonion_pairs = [(_random_octonion(rng), _random_octonion(rng)) for _ in range(samples)]
    report.record(
        "octonion norm",
        all(algebras.onorm(a * b) == algebras.onorm(a) * algebras.onorm(b) for a, b in octonion_pairs),
        f"{samples} rational pairs",
    )

    quaternions = [_nonzero(_random_quaternion, rng) for _ in range(inverse_samples)]
    report.record(
        "quaternion inverse",
        all(
            algebras.qmul(q, algebras.qinv(q)) == algebras.Q_ONE == algebras.qmul(algebras.qinv(q), q)
            for q in quaternions
        ),
        f"{inverse_samples} elements",
    )
    one = algebras.Octonion.scalar(1)
    octonions = [_nonzero(_random_octonion, rng) for _ in range(inverse_samples)]
    report.record(
        "octonion inverse",
        all(o * algebras.oinv(o) == one == algebras.oinv(o) * o for o in octonions),
        f"{inverse_samples} elements",
    )
    return report
