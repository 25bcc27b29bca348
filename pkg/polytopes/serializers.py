# polytopes/serializers.py
from rest_framework import serializers

from .algebras import Quaternion
from .constructors import FIELD, Geometry, NamedPolytope
from .exactnum import QuadExt
from .exceptions import InvalidParameter, InvalidSymbol, PolytopeError
from .lattice import FaceLattice, schlafli_from_lattice, validate
from .schlafli import SchlafliSymbol
from .symmetry import QuaternionGroup, quaternion_key


class QuadExtField(serializers.Field):
    """
    An element of Q(sqrt5) written as "a+b*sqrt5" (plain integers are accepted on input).
    """
    default_error_messages = {
        "invalid": "Expected a number of the form a+b*sqrt5, got {value!r}.",
    }

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        if isinstance(data, bool) or not isinstance(data, (str, int)):
            self.fail("invalid", value=data)
        try:
            return QuadExt.parse(str(data))
        except ValueError:
            self.fail("invalid", value=data)


class QuaternionField(serializers.Field):
    """
    Four QuadExt strings: the coefficients of 1, i, j, k.
    """
    default_error_messages = {
        "invalid": "A quaternion is a list of four numbers.",
    }

    def to_representation(self, value):
        return [str(c) for c in value.components]

    def to_internal_value(self, data):
        if not isinstance(data, list) or len(data) != 4:
            self.fail("invalid")
        component = QuadExtField()
        return Quaternion(*(component.to_internal_value(c) for c in data))


class FaceLatticeSerializer(serializers.Serializer):
    """
    {"dimension": n, "ranks": [...]} with the proper ranks 0..n-1; the empty
    face and the whole polytope are implied.
    """
    dimension = serializers.IntegerField(min_value=0)
    ranks = serializers.ListField(
        child=serializers.ListField(
            child=serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False),
        ),
    )

    def validate(self, attrs):
        dimension, ranks = attrs["dimension"], attrs["ranks"]
        if len(ranks) != dimension:
            raise serializers.ValidationError(
                {"ranks": f"A {dimension}-dimensional lattice stores {dimension} ranks, got {len(ranks)}."}
            )
        lattice = FaceLattice.build(dimension, ranks)
        violations = validate(lattice)
        if violations:
            raise serializers.ValidationError({"ranks": violations})
        attrs["lattice"] = lattice
        return attrs

    def create(self, validated_data):
        return validated_data["lattice"]


class GeometrySerializer(serializers.Serializer):
    dimension = serializers.IntegerField(min_value=0)
    field = serializers.CharField(default=FIELD)
    vertices = serializers.ListField(child=serializers.ListField(child=QuadExtField()))

    def validate_field(self, value):
        if value != FIELD:
            raise serializers.ValidationError(f"Only {FIELD} coordinates are supported.")
        return value

    def validate(self, attrs):
        try:
            attrs["geometry"] = Geometry(attrs["dimension"], tuple(tuple(v) for v in attrs["vertices"]))
        except InvalidParameter as exc:
            raise serializers.ValidationError({"vertices": str(exc)})
        return attrs

    def create(self, validated_data):
        return validated_data["geometry"]


class NamedPolytopeSerializer(serializers.Serializer):
    """
    A constructed polytope: symbol, f-vector, lattice and optional geometry.
    """
    name = serializers.CharField()
    parameter = serializers.IntegerField(allow_null=True, required=False, default=None)
    label = serializers.CharField(read_only=True)
    symbol = serializers.CharField()
    f_vector = serializers.ListField(child=serializers.IntegerField(), read_only=True)
    lattice = FaceLatticeSerializer()
    geometry = GeometrySerializer(allow_null=True, required=False, default=None)

    def validate_symbol(self, value):
        try:
            return SchlafliSymbol.parse(value)
        except InvalidSymbol as exc:
            raise serializers.ValidationError(str(exc))

    def validate(self, attrs):
        lattice = attrs["lattice"]["lattice"]
        geometry = attrs["geometry"]["geometry"] if attrs.get("geometry") else None
        if lattice.dimension != attrs["symbol"].dimension:
            raise serializers.ValidationError(
                {"symbol": f"{attrs['symbol']} names a {attrs['symbol'].dimension}-polytope, "
                           f"the lattice has dimension {lattice.dimension}."}
            )
        try:
            read = schlafli_from_lattice(lattice)
        except PolytopeError as exc:
            raise serializers.ValidationError({"lattice": f"not a regular polytope: {exc}"})
        if read != attrs["symbol"]:
            raise serializers.ValidationError(
                {"symbol": f"{attrs['symbol']} does not match the lattice, which reads {read}."}
            )
        if geometry is not None and len(geometry) != lattice.vertex_count:
            raise serializers.ValidationError(
                {"geometry": f"{len(geometry)} vertices for a lattice with {lattice.vertex_count}."}
            )
        attrs["polytope"] = NamedPolytope(
            attrs["name"], attrs.get("parameter"), lattice, attrs["symbol"], geometry,
        )
        return attrs

    def create(self, validated_data):
        return validated_data["polytope"]


class QuaternionGroupSerializer(serializers.Serializer):
    order = serializers.IntegerField(required=False)
    elements = serializers.ListField(child=QuaternionField(), allow_empty=False)

    def validate(self, attrs):
        elements = attrs["elements"]
        if len(set(elements)) != len(elements):
            raise serializers.ValidationError({"elements": "Elements must be distinct."})
        if "order" in attrs and attrs["order"] != len(elements):
            raise serializers.ValidationError(
                {"order": f"Order {attrs['order']} does not match {len(elements)} elements."}
            )
        attrs["group"] = QuaternionGroup(tuple(sorted(elements, key=quaternion_key)))
        return attrs

    def create(self, validated_data):
        return validated_data["group"]
