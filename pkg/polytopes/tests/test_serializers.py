from django.test import SimpleTestCase
from rest_framework.exceptions import ValidationError
from rest_framework.renderers import JSONRenderer

from polytopes.algebras import Q_I, Q_J, Q_K, Q_ONE
from polytopes.constructors import Geometry, cell24, hypercube, icosahedron, polygon, prism, simplex
from polytopes.exactnum import PHI, QuadExt
from polytopes.lattice import FaceLattice
from polytopes.schlafli import SchlafliSymbol
from polytopes.serializers import (
    FaceLatticeSerializer,
    GeometrySerializer,
    NamedPolytopeSerializer,
    QuadExtField,
    QuaternionGroupSerializer,
)
from polytopes.symmetry import binary_tetrahedral, group_closure


def render(data) -> bytes:
    return JSONRenderer().render(data)


class QuadExtFieldTests(SimpleTestCase):
    def test_representation(self):
        self.assertEqual(QuadExtField().to_representation(PHI), "1/2+1/2*sqrt5")

    def test_accepts_integers_and_text(self):
        field = QuadExtField()
        self.assertEqual(field.to_internal_value(3), QuadExt(3))
        self.assertEqual(field.to_internal_value("-1/2+1/2*sqrt5"), PHI - 1)

    def test_rejects_floats(self):
        for value in (1.5, True, "sqrt2"):
            with self.subTest(value=value), self.assertRaises(ValidationError):
                QuadExtField().to_internal_value(value)


class FaceLatticeSerializerTests(SimpleTestCase):
    def test_representation(self):
        data = FaceLatticeSerializer(polygon(3).lattice).data
        self.assertEqual(data["dimension"], 2)
        self.assertEqual(data["ranks"], [[[0], [1], [2]], [[0, 1], [0, 2], [1, 2]]])

    def test_round_trip_renders_identically(self):
        lattice = cell24().lattice
        first = render(FaceLatticeSerializer(lattice).data)
        serializer = FaceLatticeSerializer(data=FaceLatticeSerializer(lattice).data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        restored = serializer.save()
        self.assertEqual(restored, lattice)
        self.assertEqual(render(FaceLatticeSerializer(restored).data), first)

    def test_rank_count_mismatch(self):
        serializer = FaceLatticeSerializer(data={"dimension": 3, "ranks": [[[0], [1]]]})
        self.assertFalse(serializer.is_valid())
        self.assertIn("ranks", serializer.errors)

    def test_broken_lattice(self):
        payload = {"dimension": 2, "ranks": [[[0], [1], [2], [3]], [[0, 1], [1, 2], [0, 2], [2, 3]]]}
        serializer = FaceLatticeSerializer(data=payload)
        self.assertFalse(serializer.is_valid())
        self.assertTrue(any(str(message).startswith("diamond") for message in serializer.errors["ranks"]))

    def test_negative_vertex(self):
        serializer = FaceLatticeSerializer(data={"dimension": 1, "ranks": [[[0], [-1]]]})
        self.assertFalse(serializer.is_valid())

    def test_point(self):
        serializer = FaceLatticeSerializer(data={"dimension": 0, "ranks": []})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), FaceLattice.point())


class GeometrySerializerTests(SimpleTestCase):
    def test_round_trip(self):
        geometry = icosahedron().geometry
        data = GeometrySerializer(geometry).data
        self.assertEqual(data["field"], "Q(sqrt5)")
        self.assertIn(["0", "1", "1/2+1/2*sqrt5"], data["vertices"])
        serializer = GeometrySerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), geometry)

    def test_field_defaults(self):
        serializer = GeometrySerializer(data={"dimension": 2, "vertices": [[1, 0], [0, 1]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), Geometry(2, ((1, 0), (0, 1))))

    def test_rejects_other_fields(self):
        serializer = GeometrySerializer(data={"dimension": 1, "field": "Q(sqrt2)", "vertices": [[1]]})
        self.assertFalse(serializer.is_valid())
        self.assertIn("field", serializer.errors)

    def test_rejects_wrong_coordinate_count(self):
        serializer = GeometrySerializer(data={"dimension": 2, "vertices": [[1, 0], [0]]})
        self.assertFalse(serializer.is_valid())
        self.assertIn("vertices", serializer.errors)


class NamedPolytopeSerializerTests(SimpleTestCase):
    def test_representation(self):
        data = NamedPolytopeSerializer(hypercube(3)).data
        self.assertEqual(data["label"], "hypercube(3)")
        self.assertEqual(data["symbol"], "{4,3}")
        self.assertEqual(data["f_vector"], [8, 12, 6])
        self.assertEqual(data["lattice"]["dimension"], 3)
        self.assertEqual(len(data["geometry"]["vertices"]), 8)

    def test_polytope_without_geometry(self):
        data = NamedPolytopeSerializer(polygon(5)).data
        self.assertIsNone(data["geometry"])
        self.assertEqual(data["parameter"], 5)

    def test_round_trip(self):
        polytope = icosahedron()
        serializer = NamedPolytopeSerializer(data=NamedPolytopeSerializer(polytope).data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), polytope)

    def test_symbol_must_match_dimension(self):
        data = dict(NamedPolytopeSerializer(polygon(4)).data)
        data["symbol"] = "{4,3}"
        serializer = NamedPolytopeSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn("symbol", serializer.errors)

    def test_symbol_must_match_lattice(self):
        data = dict(NamedPolytopeSerializer(hypercube(3)).data)
        data.update(name="simplex", symbol="{3,3}")
        serializer = NamedPolytopeSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn("symbol", serializer.errors)

    def test_lattice_must_be_regular(self):
        data = dict(NamedPolytopeSerializer(simplex(3)).data)
        data["lattice"] = FaceLatticeSerializer(prism(simplex(2).lattice)).data
        data["geometry"] = None
        serializer = NamedPolytopeSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn("lattice", serializer.errors)

    def test_malformed_symbol(self):
        data = dict(NamedPolytopeSerializer(polygon(4)).data)
        data["symbol"] = "{4,2}"
        serializer = NamedPolytopeSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn("symbol", serializer.errors)

    def test_symbol_is_parsed(self):
        serializer = NamedPolytopeSerializer(data=dict(NamedPolytopeSerializer(polygon(6)).data))
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save().symbol, SchlafliSymbol((6,)))


class QuaternionGroupSerializerTests(SimpleTestCase):
    def test_representation(self):
        data = QuaternionGroupSerializer(group_closure((Q_I, Q_J))).data
        self.assertEqual(data["order"], 8)
        self.assertIn(["0", "1", "0", "0"], data["elements"])

    def test_round_trip(self):
        group = binary_tetrahedral()
        serializer = QuaternionGroupSerializer(data=QuaternionGroupSerializer(group).data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        restored = serializer.save()
        self.assertEqual(restored.elements, group.elements)

    def test_order_mismatch(self):
        elements = [[str(c) for c in q.components] for q in (Q_ONE, Q_I, Q_J, Q_K)]
        serializer = QuaternionGroupSerializer(data={"order": 8, "elements": elements})
        self.assertFalse(serializer.is_valid())
        self.assertIn("order", serializer.errors)

    def test_repeated_elements(self):
        serializer = QuaternionGroupSerializer(data={"elements": [["1", "0", "0", "0"], [1, 0, 0, 0]]})
        self.assertFalse(serializer.is_valid())
        self.assertIn("elements", serializer.errors)

    def test_malformed_element(self):
        serializer = QuaternionGroupSerializer(data={"elements": [["1", "0", "0"]]})
        self.assertFalse(serializer.is_valid())
