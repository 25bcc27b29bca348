import json
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ParseError, ValidationError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from polytopes import verification
from polytopes.algebras import build_octonion_table
from polytopes.constructors import build, from_symbol
from polytopes.exceptions import InvalidParameter, InvalidSymbol, PolytopeError, UnknownPolytope
from polytopes.lattice import (
    count_flags,
    dual,
    euler_characteristic,
    euler_characteristic_full,
)
from polytopes.schlafli import SchlafliSymbol, classify, spherical_catalog
from polytopes.serializers import (
    FaceLatticeSerializer,
    GeometrySerializer,
    NamedPolytopeSerializer,
    QuaternionGroupSerializer,
)
from polytopes.symmetry import BINARY_GROUPS, automorphism_order, rotation_order

logger = logging.getLogger(__name__)

USAGE_ERRORS = (InvalidSymbol, InvalidParameter, UnknownPolytope)


def render_json(data) -> str:
    return JSONRenderer().render(data).decode("utf-8")


class Command(BaseCommand):
    help = "Construct, verify and classify regular polytopes with exact arithmetic."
    requires_system_checks = []

    def add_arguments(self, parser):
        verbs = parser.add_subparsers(dest="verb", metavar="verb", required=True)

        def verb(name, help_text):
            return verbs.add_parser(
                name, help=help_text, called_from_command_line=parser.called_from_command_line,
            )

        def target(subparser):
            subparser.add_argument("target", help="polytope name or Schläfli symbol such as {3,4,3}")
            subparser.add_argument("parameter", nargs="?", type=int, help="n or p for the parametrized families")

        generate = verb("generate", "build a polytope and print it")
        target(generate)
        output = generate.add_mutually_exclusive_group()
        output.add_argument("--fvector", action="store_true", help="print the f-vector only")
        output.add_argument("--json", action="store_true", help="print symbol, f-vector, lattice and geometry as JSON")
        output.add_argument("--geometry", action="store_true", help="print the exact vertex coordinates as JSON")
        generate.add_argument("--approx", action="store_true", help="add decimal renderings to --geometry")

        classify_verb = verb("classify", "classify a Schläfli symbol")
        classify_verb.add_argument("symbol")

        dual_verb = verb("dual", "print the dual face lattice as JSON")
        dual_verb.add_argument("source", help="a lattice or polytope JSON file, a polytope name or a Schläfli symbol")
        dual_verb.add_argument("parameter", nargs="?", type=int)

        for name, help_text in (
            ("euler", "print both Euler characteristics"),
            ("flags", "print the number of flags"),
            ("group-order", "print the automorphism and rotation group orders"),
        ):
            target(verb(name, help_text))

        binary = verb("binary-group", "close a binary polyhedral group of unit quaternions")
        binary.add_argument("kind", choices=sorted(BINARY_GROUPS))
        binary.add_argument("--json", action="store_true")

        algebra = verb("algebra", "octonion table and division-algebra checks")
        algebra.add_argument("action", choices=["table", "check"])
        algebra.add_argument("--seed", type=int, default=None, help="seed for the random samples")

        verify = verb("verify", "run the invariant suite on a polytope, or on every one")
        target(verify)

        catalog = verb("catalog", "list the regular convex polytopes of a dimension")
        catalog.add_argument("dimension", type=int)
        catalog.add_argument("--max-sides", type=int, default=None, help="polygon bound in dimension 2")

    def handle(self, *args, **options):
        logger.debug("polyforge %s", options["verb"])
        handler = getattr(self, "handle_" + options["verb"].replace("-", "_"))
        try:
            handler(options)
        except USAGE_ERRORS as exc:
            raise CommandError(str(exc), returncode=2)
        except PolytopeError as exc:
            raise CommandError(str(exc), returncode=1)

    def resolve(self, options):
        name, parameter = options["target"], options.get("parameter")
        if name.strip().startswith("{"):
            if parameter is not None:
                raise InvalidParameter("a Schläfli symbol takes no parameter")
            return from_symbol(SchlafliSymbol.parse(name))
        return build(name, parameter)

    def handle_generate(self, options):
        polytope = self.resolve(options)
        if options["fvector"]:
            self.stdout.write(" ".join(str(count) for count in polytope.f_vector))
        elif options["json"]:
            self.stdout.write(render_json(NamedPolytopeSerializer(polytope).data))
        elif options["geometry"]:
            if polytope.geometry is None:
                raise PolytopeError(f"{polytope.label} is built combinatorially and has no coordinates")
            data = dict(GeometrySerializer(polytope.geometry).data)
            if options["approx"]:
                data["approx"] = [[c.approx() for c in vertex] for vertex in polytope.geometry.vertices]
            self.stdout.write(render_json(data))
        else:
            f = " ".join(str(count) for count in polytope.f_vector)
            self.stdout.write(f"{polytope.label} {polytope.symbol} {f}")

    def handle_classify(self, options):
        self.stdout.write(classify(SchlafliSymbol.parse(options["symbol"])).value)

    def read_lattice(self, path: Path):
        try:
            with path.open("rb") as stream:
                payload = JSONParser().parse(stream)
        except (OSError, ParseError) as exc:
            raise CommandError(f"cannot read {path}: {exc}", returncode=2)
        serializer_class = NamedPolytopeSerializer if isinstance(payload, dict) and "lattice" in payload \
            else FaceLatticeSerializer
        serializer = serializer_class(data=payload)
        try:
            serializer.is_valid(raise_exception=True)
        except ValidationError as exc:
            raise CommandError(f"{path} is not a valid lattice: {json.dumps(exc.detail)}", returncode=2)
        saved = serializer.save()
        return saved.lattice if serializer_class is NamedPolytopeSerializer else saved

    def handle_dual(self, options):
        source = options["source"]
        path = Path(source)
        if source.endswith(".json") or path.is_file():
            lattice = self.read_lattice(path)
        else:
            lattice = self.resolve({"target": source, "parameter": options.get("parameter")}).lattice
        self.stdout.write(render_json(FaceLatticeSerializer(dual(lattice)).data))

    def handle_euler(self, options):
        polytope = self.resolve(options)
        chi = euler_characteristic(polytope.f_vector)
        self.stdout.write(f"chi={chi} chi_full={euler_characteristic_full(polytope.lattice)}")

    def handle_flags(self, options):
        self.stdout.write(str(count_flags(self.resolve(options).lattice)))

    def handle_group_order(self, options):
        lattice = self.resolve(options).lattice
        line = f"isometry={automorphism_order(lattice)}"
        if lattice.dimension >= 2:
            line += f" rotation={rotation_order(lattice)}"
        self.stdout.write(line)

    def handle_binary_group(self, options):
        group = BINARY_GROUPS[options["kind"]]()
        if options["json"]:
            self.stdout.write(render_json(QuaternionGroupSerializer(group).data))
        else:
            self.stdout.write(f"order={group.order}")

    def handle_algebra(self, options):
        if options["action"] == "table":
            self.stdout.write(render_json(build_octonion_table().render()))
            return
        self.report([verification.verify_algebras(seed=options["seed"])])

    def handle_verify(self, options):
        if options["target"] == "all":
            reports = verification.verify_suite("all")
        else:
            reports = [verification.verify_polytope(self.resolve(options))]
        self.report(reports)

    def report(self, reports):
        failed = 0
        for report in reports:
            for check in report.checks:
                self.stdout.write(f"{report.subject} {check}")
            failed += len(report.failures)
        total = sum(len(report.checks) for report in reports)
        self.stdout.write(f"{total - failed}/{total} checks passed")
        if failed:
            raise CommandError(f"{failed} checks failed", returncode=1)

    def handle_catalog(self, options):
        catalog = spherical_catalog(options["dimension"], options["max_sides"])
        for symbol in catalog.symbols:
            self.stdout.write(str(symbol))
        if catalog.infinite:
            self.stdout.write("... {p} for every p >= 3")

