from django.test import SimpleTestCase

from polytopes.constructors import cell24, cross_polytope, hypercube, polygon, prism, pyramid, segment, simplex
from polytopes.exceptions import NotRegular, PolytopeError, ValidationFailed
from polytopes.lattice import (
    FaceLattice,
    adjacent_flag,
    base_flag,
    count_flags,
    dual,
    euler_characteristic,
    euler_characteristic_full,
    f_vector,
    facet_lattice,
    find_isomorphism,
    is_isomorphic,
    iter_flags,
    require_valid,
    schlafli_from_lattice,
    validate,
    vertex_figure,
)
from polytopes.schlafli import SchlafliSymbol


class FaceLatticeTests(SimpleTestCase):
    def test_build_canonicalizes(self):
        lattice = FaceLattice.build(2, [[(2,), (0,), (1,)], [(2, 0), (1, 0), (2, 1)]])
        self.assertEqual(lattice.ranks, (((0,), (1,), (2,)), ((0, 1), (0, 2), (1, 2))))
        self.assertEqual(lattice, simplex(2).lattice)

    def test_improper_faces_are_implied(self):
        lattice = simplex(3).lattice
        self.assertEqual(lattice.faces(-1), ((),))
        self.assertEqual(lattice.faces(3), ((0, 1, 2, 3),))
        with self.assertRaises(IndexError):
            lattice.faces(4)

    def test_rank_count_must_match_dimension(self):
        with self.assertRaises(ValueError):
            FaceLattice(2, ((((0,),),)))

    def test_incidence(self):
        lattice = polygon(4).lattice
        for parents in lattice.parents(0):
            self.assertEqual(len(parents), 2)
        for children in lattice.children(1):
            self.assertEqual(len(children), 2)
        self.assertEqual(lattice.children(2), (tuple(range(4)),))

    def test_point(self):
        point = FaceLattice.point()
        self.assertEqual(point.vertex_count, 1)
        self.assertEqual(f_vector(point), ())
        self.assertEqual(count_flags(point), 1)


class CountingTests(SimpleTestCase):
    def test_f_vector(self):
        self.assertEqual(f_vector(simplex(3).lattice), (4, 6, 4))
        self.assertEqual(f_vector(hypercube(3).lattice), (8, 12, 6))
        self.assertEqual(f_vector(segment().lattice), (2,))

    def test_euler_characteristic(self):
        self.assertEqual(euler_characteristic((4, 6, 4)), 2)
        self.assertEqual(euler_characteristic((5, 10, 10, 5)), 0)
        self.assertEqual(euler_characteristic((24, 96, 96, 24)), 0)

    def test_euler_characteristic_full(self):
        self.assertIs(type(euler_characteristic_full(simplex(3).lattice)), int)
        self.assertEqual(euler_characteristic_full(simplex(3).lattice), 0)
        self.assertEqual(euler_characteristic_full(segment().lattice), 0)
        self.assertEqual(euler_characteristic_full(hypercube(4).lattice), 0)
        for n in range(1, 7):
            for polytope in (simplex(n), hypercube(n), cross_polytope(n)):
                with self.subTest(polytope=polytope.label):
                    self.assertEqual(euler_characteristic_full(polytope.lattice), 0)

    def test_dual_symbol_is_reversed(self):
        self.assertEqual(schlafli_from_lattice(dual(hypercube(4).lattice)), SchlafliSymbol((3, 3, 4)))
        self.assertEqual(schlafli_from_lattice(dual(simplex(3).lattice)), SchlafliSymbol((3, 3)))

    def test_count_flags(self):
        self.assertEqual(count_flags(segment().lattice), 2)
        self.assertEqual(count_flags(simplex(3).lattice), 24)
        self.assertEqual(count_flags(hypercube(3).lattice), 48)
        self.assertEqual(count_flags(polygon(9).lattice), 18)

    def test_iter_flags_matches_count(self):
        for lattice in (hypercube(3).lattice, cross_polytope(4).lattice, polygon(6).lattice):
            flags = list(iter_flags(lattice))
            self.assertEqual(len(flags), count_flags(lattice))
            self.assertEqual(len(set(flags)), len(flags))

    def test_iter_flags_with_prefix(self):
        lattice = hypercube(3).lattice
        # a cube vertex lies in 3 edges, each in 2 squares
        self.assertEqual(len(list(iter_flags(lattice, (0,)))), 6)


class FlagTests(SimpleTestCase):
    def test_adjacent_flags(self):
        lattice = cross_polytope(3).lattice
        for flag in iter_flags(lattice):
            for rank in range(lattice.dimension):
                neighbour = adjacent_flag(lattice, flag, rank)
                self.assertNotEqual(neighbour[rank], flag[rank])
                self.assertEqual(neighbour[:rank] + neighbour[rank + 1:], flag[:rank] + flag[rank + 1:])
                self.assertEqual(adjacent_flag(lattice, neighbour, rank), flag)

    def test_base_flag_is_a_chain(self):
        lattice = hypercube(4).lattice
        flag = base_flag(lattice)
        for rank in range(1, lattice.dimension):
            self.assertLessEqual(
                set(lattice.faces(rank - 1)[flag[rank - 1]]), set(lattice.faces(rank)[flag[rank]])
            )


class DualityTests(SimpleTestCase):
    def test_dual_f_vectors(self):
        self.assertEqual(f_vector(dual(hypercube(3).lattice)), (6, 12, 8))
        self.assertEqual(f_vector(dual(cell24().lattice)), (24, 96, 96, 24))

    def test_double_dual(self):
        lattice = simplex(4).lattice
        self.assertTrue(is_isomorphic(dual(dual(lattice)), lattice))
        cube = hypercube(3).lattice
        self.assertEqual(f_vector(dual(dual(cube))), f_vector(cube))

    def test_dual_of_point_is_rejected(self):
        with self.assertRaises(PolytopeError):
            dual(FaceLattice.point())


class IsomorphismTests(SimpleTestCase):
    def test_examples(self):
        tetrahedron = simplex(3).lattice
        self.assertTrue(is_isomorphic(tetrahedron, dual(tetrahedron)))
        self.assertFalse(is_isomorphic(hypercube(3).lattice, cross_polytope(3).lattice))
        self.assertTrue(is_isomorphic(hypercube(2).lattice, cross_polytope(2).lattice))

    def test_isomorphism_maps_faces_to_faces(self):
        first, second = dual(hypercube(3).lattice), cross_polytope(3).lattice
        images = find_isomorphism(first, second)
        self.assertIsNotNone(images)
        mapped = {tuple(sorted(images[v] for v in face)) for face in first.faces(2)}
        self.assertEqual(mapped, set(second.faces(2)))

    def test_pyramids_are_self_dual(self):
        pentagonal_pyramid = pyramid(polygon(5).lattice)
        self.assertEqual(f_vector(pentagonal_pyramid), (6, 10, 6))
        self.assertTrue(is_isomorphic(pentagonal_pyramid, dual(pentagonal_pyramid)))
        self.assertFalse(is_isomorphic(pentagonal_pyramid, prism(simplex(2).lattice)))


class SectionTests(SimpleTestCase):
    def test_vertex_figures(self):
        self.assertEqual(f_vector(vertex_figure(hypercube(3).lattice, 0)), (3, 3))
        self.assertEqual(f_vector(vertex_figure(cell24().lattice, 5)), (8, 12, 6))
        self.assertEqual(f_vector(vertex_figure(cross_polytope(4).lattice, 0)), (6, 12, 8))

    def test_facets(self):
        self.assertEqual(f_vector(facet_lattice(simplex(4).lattice, 0)), (4, 6, 4))
        self.assertEqual(f_vector(facet_lattice(cell24().lattice, 3)), (6, 12, 8))
        self.assertEqual(validate(facet_lattice(hypercube(4).lattice, 2)), [])


class SchlafliFromLatticeTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(schlafli_from_lattice(hypercube(3).lattice), SchlafliSymbol((4, 3)))
        self.assertEqual(schlafli_from_lattice(cell24().lattice), SchlafliSymbol((3, 4, 3)))
        self.assertEqual(schlafli_from_lattice(simplex(4).lattice), SchlafliSymbol((3, 3, 3)))
        self.assertEqual(schlafli_from_lattice(segment().lattice), SchlafliSymbol(()))
        self.assertEqual(schlafli_from_lattice(polygon(11).lattice), SchlafliSymbol((11,)))

    def test_irregular_lattice(self):
        with self.assertRaises(NotRegular):
            schlafli_from_lattice(prism(simplex(2).lattice))


class ValidateTests(SimpleTestCase):
    def test_constructed_lattices_are_valid(self):
        for polytope in (segment(), polygon(7), simplex(5), hypercube(4), cross_polytope(5), cell24()):
            with self.subTest(polytope=polytope.label):
                self.assertEqual(validate(polytope.lattice), [])

    def test_dangling_edge(self):
        lattice = FaceLattice.build(2, [[(0,), (1,), (2,), (3,)], [(0, 1), (1, 2), (0, 2), (2, 3)]])
        violations = validate(lattice)
        self.assertTrue(any(v.startswith("diamond") for v in violations), violations)

    def test_missing_top_face(self):
        # a square whose only proper faces are two vertices and the edge between them
        lattice = FaceLattice.build(2, [[(0,), (1,)], [(0, 1)]])
        violations = validate(lattice)
        self.assertTrue(any(v.startswith("gradedness") for v in violations), violations)

    def test_face_with_unknown_vertex(self):
        lattice = FaceLattice.build(2, [[(0,), (1,), (2,)], [(0, 1), (1, 2), (2, 5)]])
        self.assertTrue(any("unknown vertices" in v for v in validate(lattice)))

    def test_require_valid(self):
        lattice = FaceLattice.build(2, [[(0,), (1,)], [(0, 1)]])
        with self.assertRaises(ValidationFailed) as caught:
            require_valid(lattice, "test input")
        self.assertTrue(caught.exception.violations)
        self.assertIs(require_valid(simplex(3).lattice, "tetrahedron"), simplex(3).lattice)
