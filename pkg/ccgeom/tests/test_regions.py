import math
import unittest

import numpy as np
from hypothesis import given, settings, strategies as st
from scipy.spatial import ConvexHull

from ccgeom.config import override_settings
from ccgeom.cycles import CycleKind, circle, geodesic_line, curvature_of, points_at, perimeter as cycle_perimeter
from ccgeom.exceptions import EmptyInterior, InvalidRegion, NonCompact, BaseNotInterior, OutOfRange, \
    UnsupportedInSpace, SpaceMismatch
from ccgeom.regions import ConvexRegion, HalfDomain, Side, contains, moved, region_from_halves, disk, half_plane, \
    strip, paraball, hypercycle_region, polygon, core, boundary_chain, is_compact, intersect_regions, \
    IntersectionStatus, hausdorff_distance, diameter, perimeter, area, radial_profile, radial_function, \
    support_function, support_profile, redundancy_flags, ideal_boundary, ideal_point_count, finite_vertices, \
    gauss_bonnet_defect, distance_to_region, boundary_samples, model_hausdorff_distance
from ccgeom.regions.measures import _centred_model, _model_directions
from ccgeom.space_kernel import Space, Point, IdealPoint, ModelKind, origin, apply, exp_map, direction_at, \
    rotation_about
from ccgeom.tests.geometry_strategies import isometries, polar_point

E2, S2, H2 = Space.EUCLIDEAN, Space.SPHERE, Space.HYPERBOLIC


def lens(space: Space, r: float, gap: float) -> tuple[ConvexRegion, ConvexRegion]:
    """ Two disks of radius r with centres at distance gap, symmetric about the model centre. """
    return disk(polar_point(space, gap / 2.0, 0.0), r), disk(polar_point(space, gap / 2.0, np.pi), r)


def chord_gap(space: Space, r: float, chord: float) -> float:
    """ The centre distance of two disks of radius r whose common chord has the given length. """

    if space is E2:
        return 2.0 * math.sqrt(r ** 2 - chord ** 2 / 4.0)

    if space is S2:
        return 2.0 * math.acos(math.cos(r) / math.cos(chord / 2.0))

    return 2.0 * math.acosh(math.cosh(r) / math.cosh(chord / 2.0))


def triangle(space: Space, size: float) -> ConvexRegion:
    return polygon(space, [polar_point(space, size, angle) for angle in (0.0, 2.0 * np.pi / 3, 4.0 * np.pi / 3)])


def sampled_redundant(region: ConvexRegion, index: int, count: int = 1000) -> bool:
    """ True if no sample point of constraint index satisfies every other constraint. """

    cycles = region.cycles
    cycle = cycles[index]
    s = np.linspace(0.0, cycle_perimeter(cycle), count, endpoint=False) if cycle.is_closed \
        else np.linspace(-20.0, 20.0, count)
    x = points_at(cycle, s)
    others = [c for i, c in enumerate(cycles) if i != index]
    inside = np.all([c.signed_distances(x) >= 1e-6 for c in others], axis=0)
    return not bool(np.any(inside))


class TestConstruction(unittest.TestCase):
    def test_disk_membership(self) -> None:
        region = disk(Point.plane(0.0, 0.0), 1.0)
        self.assertTrue(contains(region, Point.plane(0.5, 0.0)).inside)
        self.assertFalse(contains(region, Point.plane(2.0, 0.0)).inside)

    def test_strip_membership(self) -> None:
        region = strip(E2, direction=(1.0, 0.0), offset=0.0, width=2.0)
        self.assertTrue(contains(region, Point.plane(100.0, 0.9)).inside)
        self.assertFalse(contains(region, Point.plane(0.0, 1.1)).inside)
        self.assertFalse(contains(region, Point.plane(0.0, -1.1)).inside)

    def test_strip_space_and_width(self) -> None:
        with self.assertRaises(expected_exception=UnsupportedInSpace):
            strip(H2, direction=(1.0, 0.0), offset=0.0, width=1.0)

        with self.assertRaises(expected_exception=OutOfRange):
            strip(E2, direction=(1.0, 0.0), offset=0.0, width=0.0)

    def test_paraball_boundary_has_curvature_one(self) -> None:
        region = paraball(H2, IdealPoint.at_angle(0.3), origin(H2))
        self.assertEqual(CycleKind.PARACYCLE, region.cycles[0].kind)
        self.assertEqual(1.0, curvature_of(region.cycles[0]))
        self.assertEqual(0.0, round(contains(region, origin(H2)).margin, 12))

        with self.assertRaises(expected_exception=UnsupportedInSpace):
            paraball(E2, IdealPoint.at_angle(0.3), Point.plane(0.0, 0.0))

    def test_spherical_disk_radius(self) -> None:
        hemisphere = disk(origin(S2), np.pi / 2)
        self.assertTrue(is_compact(hemisphere))

        with self.assertRaises(expected_exception=OutOfRange):
            disk(origin(S2), 2.0)

    def test_concave_side_only_for_geodesics(self) -> None:
        with self.assertRaises(expected_exception=InvalidRegion):
            HalfDomain(cycle=circle(Point.plane(0.0, 0.0), 1.0), side=Side.CONCAVE)

        line = geodesic_line(E2, np.array([0.0, 1.0, 0.0]))
        below = half_plane(line, 'concave')
        self.assertTrue(contains(below, Point.plane(3.0, -1.0)).inside)
        self.assertFalse(contains(below, Point.plane(3.0, 1.0)).inside)

    def test_empty_and_improper_regions(self) -> None:
        line = geodesic_line(E2, np.array([0.0, 1.0, 0.0]))

        with self.assertRaises(expected_exception=EmptyInterior):
            region_from_halves(E2, [(line, Side.CONVEX), (line, Side.CONCAVE)])

        with self.assertRaises(expected_exception=EmptyInterior):
            region_from_halves(E2, [HalfDomain(cycle=circle(Point.plane(0.0, 0.0), 1.0)),
                                    HalfDomain(cycle=circle(Point.plane(3.0, 0.0), 1.0))])

        with self.assertRaises(expected_exception=InvalidRegion):
            ConvexRegion(space=E2, halves=())

        with self.assertRaises(expected_exception=SpaceMismatch):
            ConvexRegion(space=H2, halves=(HalfDomain(cycle=line),))

    def test_witness_is_inside(self) -> None:
        for space in Space:
            a, b = lens(space, 1.0, 1.2)
            result = intersect_regions(a, b)
            self.assertGreater(contains(result.region, result.region.interior_point).margin, 0.0)

    def test_boundary_samples_are_on_the_boundary(self) -> None:
        for space in Space:
            region = triangle(space, 0.8)
            margins = region.margins(boundary_samples(region, per_arc=32))
            self.assertLessEqual(float(np.max(np.abs(margins))), 1e-10)

    def test_hypercycle_region_and_core(self) -> None:
        base = geodesic_line(H2, np.array([0.0, 1.0, 0.0]))
        region = hypercycle_region(H2, base, 0.5)
        self.assertEqual(CycleKind.HYPERCYCLE, region.cycles[0].kind)
        self.assertTrue(contains(region, origin(H2)).inside)
        reduced = core(region)
        self.assertEqual(CycleKind.GEODESIC, reduced.cycles[0].kind)
        self.assertTrue(contains(region, exp_map(origin(H2), direction_at(origin(H2), 0.0), 3.0)).inside)
        between = polar_point(H2, 0.3, np.pi / 2)
        self.assertTrue(contains(region, between).inside)
        self.assertFalse(contains(reduced, between).inside)
        self.assertTrue(contains(reduced, polar_point(H2, 1.0, -np.pi / 2)).inside)

        with self.assertRaises(expected_exception=UnsupportedInSpace):
            hypercycle_region(E2, geodesic_line(E2, np.array([0.0, 1.0, 0.0])), 0.5)

    def test_moved_region_membership(self) -> None:
        rng = np.random.default_rng(7)

        for space in Space:
            region = triangle(space, 0.7)
            phi = rotation_about(polar_point(space, 0.4, 1.0), 0.9)
            image = moved(region, phi)
            inverse = phi.inverse()

            for _ in range(200):
                p = polar_point(space, rng.uniform(0.0, 1.5), rng.uniform(-np.pi, np.pi))
                self.assertEqual(contains(region, apply(inverse, p)).inside, contains(image, p).inside)


class TestBoundary(unittest.TestCase):
    def test_disk_has_one_smooth_arc(self) -> None:
        for space in Space:
            chains = boundary_chain(disk(origin(space), 0.8))
            self.assertEqual(1, len(chains))
            self.assertTrue(chains[0].closed)
            self.assertEqual(1, len(chains[0].arcs))
            self.assertEqual(0, len(chains[0].vertices))

    def test_strip_has_two_unbounded_lines(self) -> None:
        chains = boundary_chain(strip(E2, direction=(1.0, 0.0), offset=0.0, width=2.0))
        self.assertEqual(2, len(chains))
        self.assertTrue(all(not chain.closed and not chain.is_bounded for chain in chains))
        self.assertFalse(is_compact(strip(E2, direction=(1.0, 0.0), offset=0.0, width=2.0)))

    def test_lens_has_two_arcs_and_two_vertices(self) -> None:
        for space in Space:
            result = intersect_regions(*lens(space, 1.0, 1.0))
            self.assertEqual(IntersectionStatus.COMPACT_LENS, result.status)
            self.assertEqual(2, len(result.chain.arcs))
            self.assertEqual(2, len(result.chain.vertices))

            for vertex in result.chain.vertices:
                self.assertGreater(vertex.outer_angle, 0.0)
                self.assertLess(vertex.outer_angle, np.pi)

            self.assertLessEqual(result.chain.closure_gap(), 1e-9)

    def test_polygon_chain_closes(self) -> None:
        for space in Space:
            chain = boundary_chain(triangle(space, 0.9))[0]
            self.assertTrue(chain.closed)
            self.assertEqual(3, len(chain.arcs))
            self.assertLessEqual(chain.closure_gap(), 1e-9)
            self.assertEqual(3, len(finite_vertices(triangle(space, 0.9))))

    def test_chain_is_recomputed_under_other_settings(self) -> None:
        region = triangle(E2, 0.9)
        chains = boundary_chain(region)
        self.assertIs(chains, boundary_chain(region))

        with override_settings(tangency_window=1e-6):
            other = boundary_chain(region)

        self.assertIsNot(chains, other)
        self.assertEqual(len(chains[0].arcs), len(other[0].arcs))
        self.assertIs(chains, boundary_chain(region))

    def test_gauss_bonnet(self) -> None:
        for space in Space:
            regions = [disk(origin(space), 1.0), triangle(space, 0.9),
                       intersect_regions(*lens(space, 1.0, 0.8)).region]

            for region in regions:
                self.assertLessEqual(abs(gauss_bonnet_defect(region, area(region))), 1e-4)

    def test_euclidean_area(self) -> None:
        self.assertAlmostEqual(np.pi * 4.0, area(disk(Point.plane(1.0, 2.0), 2.0)), places=8)
        square = polygon(E2, [Point.plane(0.0, 0.0), Point.plane(2.0, 0.0), Point.plane(2.0, 2.0),
                              Point.plane(0.0, 2.0)])
        self.assertAlmostEqual(4.0, area(square), places=8)
        self.assertAlmostEqual(8.0, perimeter(square), places=10)

    def test_unbounded_region_refuses_compact_measures(self) -> None:
        region = half_plane(geodesic_line(H2, np.array([0.0, 1.0, 0.0])))

        with self.assertRaises(expected_exception=NonCompact):
            diameter(region)

        with self.assertRaises(expected_exception=NonCompact):
            hausdorff_distance(region, disk(origin(H2), 1.0))

        with self.assertRaises(expected_exception=NonCompact):
            support_function(region, origin(H2), direction_at(origin(H2), 0.0))


class TestRedundancy(unittest.TestCase):
    def test_nested_disk_is_redundant(self) -> None:
        region = region_from_halves(E2, [HalfDomain(cycle=circle(Point.plane(0.0, 0.0), 1.0)),
                                         HalfDomain(cycle=circle(Point.plane(0.0, 0.0), 2.0))])
        self.assertEqual((False, True), region.redundant)

    def test_flags_agree_with_sampling(self) -> None:
        regions = [
            region_from_halves(E2, [HalfDomain(cycle=circle(Point.plane(0.0, 0.0), 1.0)),
                                    HalfDomain(cycle=circle(Point.plane(0.2, 0.0), 2.0))]),
            intersect_regions(*lens(H2, 1.0, 1.0)).region,
            region_from_halves(H2, [HalfDomain(cycle=c) for c in triangle(H2, 0.8).cycles] +
                               [HalfDomain(cycle=circle(origin(H2), 3.0))]),
            region_from_halves(S2, [HalfDomain(cycle=c) for c in triangle(S2, 0.6).cycles] +
                               [HalfDomain(cycle=circle(origin(S2), 0.2))]),
        ]

        for region in regions:
            for index, flag in enumerate(region.redundant):
                self.assertEqual(sampled_redundant(region, index), flag)

    def test_duplicates_are_flagged(self) -> None:
        c = circle(Point.plane(0.0, 0.0), 1.0)
        self.assertEqual((False, True), redundancy_flags([c, c]))


class TestIntersections(unittest.TestCase):
    def test_disjoint_disks(self) -> None:
        result = intersect_regions(disk(Point.plane(0.0, 0.0), 1.0), disk(Point.plane(3.0, 0.0), 1.0))
        self.assertEqual(IntersectionStatus.EMPTY_INTERIOR, result.status)
        self.assertIsNone(result.region)

    def test_nested_disks(self) -> None:
        small = disk(Point.plane(0.1, 0.0), 0.5)
        result = intersect_regions(disk(Point.plane(0.0, 0.0), 1.0), small)
        self.assertEqual(IntersectionStatus.COMPACT_LENS, result.status)
        self.assertEqual(1, len(result.chain.arcs))
        self.assertTrue(result.chain.arcs[0].cycle.same_as(small.cycles[0]))
        self.assertLessEqual(hausdorff_distance(result.region, small), 1e-8)

    def test_facing_half_planes_make_a_strip(self) -> None:
        lower = half_plane(geodesic_line(E2, np.array([0.0, 1.0, 0.0]), -1.0))
        upper = half_plane(geodesic_line(E2, np.array([0.0, -1.0, 0.0]), -1.0))
        result = intersect_regions(lower, upper)
        self.assertEqual(IntersectionStatus.UNBOUNDED, result.status)
        self.assertEqual(2, len(boundary_chain(result.region)))

    def test_halves_of_a_disk_meet_in_a_chord(self) -> None:
        unit = circle(Point.plane(0.0, 0.0), 1.0)
        line = geodesic_line(E2, np.array([0.0, 1.0, 0.0]))
        top = region_from_halves(E2, [(unit, Side.CONVEX), (line, Side.CONVEX)])
        bottom = region_from_halves(E2, [(unit, Side.CONVEX), (line, Side.CONCAVE)])
        result = intersect_regions(top, bottom)
        self.assertEqual(IntersectionStatus.DEGENERATE_CHORD, result.status)
        self.assertAlmostEqual(2.0, result.segment.length, places=9)

    def test_space_mismatch(self) -> None:
        with self.assertRaises(expected_exception=SpaceMismatch):
            intersect_regions(disk(origin(E2), 1.0), disk(origin(H2), 1.0))

    def test_membership_is_consistent(self) -> None:
        rng = np.random.default_rng(11)

        for space in Space:
            a, b = disk(polar_point(space, 0.3, 0.2), 0.9), triangle(space, 1.0)
            both = intersect_regions(a, b).region
            angles = rng.uniform(-np.pi, np.pi, 10_000)
            radii = rng.uniform(0.0, 1.4, 10_000)
            x = np.array([polar_point(space, r, t).v for r, t in zip(radii, angles)])
            expected = a.contains_vectors(x) & b.contains_vectors(x)
            self.assertTrue(np.array_equal(expected, both.contains_vectors(x)))

    def test_small_lens_diameter(self) -> None:
        for space in Space:
            for chord in (1e-3, 1e-4):
                a, b = lens(space, 1.0, chord_gap(space, 1.0, chord))
                result = intersect_regions(a, b)
                self.assertEqual(IntersectionStatus.COMPACT_LENS, result.status)
                self.assertLessEqual(diameter(result.region), chord * 1.01)
                self.assertLessEqual(perimeter(result.region) / 2.0, chord * 1.05)


class TestMeasures(unittest.TestCase):
    def test_unit_disk_support_and_radial(self) -> None:
        region = disk(Point.plane(0.0, 0.0), 1.0)
        base = Point.plane(0.0, 0.0)
        angles = np.linspace(-np.pi, np.pi, 36, endpoint=False)
        self.assertTrue(np.allclose(1.0, radial_profile(region, base, angles), atol=1e-12))
        self.assertTrue(np.allclose(1.0, support_profile(region, base, angles), atol=1e-4))
        self.assertAlmostEqual(1.0, support_function(region, base, direction_at(base, 0.7)), places=9)

    def test_radial_of_intersection_is_minimum(self) -> None:
        angles = np.linspace(-np.pi, np.pi, 360, endpoint=False)

        for space in (E2, H2, S2):
            a, b = lens(space, 1.0, 1.0)
            both = intersect_regions(a, b).region
            base = polar_point(space, 0.1, 1.0)
            expected = np.minimum(radial_profile(a, base, angles), radial_profile(b, base, angles))
            self.assertTrue(np.allclose(expected, radial_profile(both, base, angles), atol=1e-10))

    def test_radial_matches_boundary_distance(self) -> None:
        for space in Space:
            region = triangle(space, 0.9)
            base = region.interior_point
            u = direction_at(base, 0.4)
            rho = radial_function(region, base, u)
            self.assertLessEqual(abs(contains(region, exp_map(base, u, rho)).margin), 1e-9)

    def test_radial_needs_interior_base(self) -> None:
        with self.assertRaises(expected_exception=BaseNotInterior):
            radial_profile(disk(Point.plane(0.0, 0.0), 1.0), Point.plane(1.0, 0.0), np.zeros(1))

    def test_support_of_lens_is_half_width(self) -> None:
        a, b = lens(E2, 1.0, 1.0)
        region = intersect_regions(a, b).region
        base = Point.plane(0.0, 0.0)
        self.assertAlmostEqual(0.5, support_function(region, base, direction_at(base, 0.0)), places=9)

    def test_support_follows_the_max_rule(self) -> None:
        for space in (E2, H2):
            a, b = disk(polar_point(space, 0.4, 0.0), 0.5), triangle(space, 0.6)
            base = origin(space)
            angles = np.linspace(-np.pi, np.pi, 90, endpoint=False)
            image = np.concatenate([_centred_model(space, base, boundary_samples(r), ModelKind.COLLINEAR)
                                    for r in (a, b)])
            hull = image[ConvexHull(image).vertices]
            hull_support = np.max(hull @ _model_directions(space, base, angles).T, axis=0)
            expected = np.maximum(support_profile(a, base, angles), support_profile(b, base, angles))
            self.assertTrue(np.allclose(expected, hull_support, atol=1e-12))

    def test_hausdorff_of_concentric_disks(self) -> None:
        a, b = disk(Point.plane(0.0, 0.0), 1.0), disk(Point.plane(0.0, 0.0), 1.25)
        self.assertAlmostEqual(0.25, hausdorff_distance(a, b), places=9)
        self.assertAlmostEqual(0.25, hausdorff_distance(b, a), places=9)
        self.assertAlmostEqual(0.25, model_hausdorff_distance(a, b, Point.plane(0.0, 0.0)), places=4)
        self.assertEqual(0.0, hausdorff_distance(a, a))

    def test_hausdorff_is_monotone_in_perturbation(self) -> None:
        a, b = lens(H2, 1.0, 1.0)
        reference = intersect_regions(a, b).region
        gaps = []

        for delta in (1e-3, 1e-4, 1e-5):
            shifted = disk(polar_point(H2, 0.5 + delta, 0.0), 1.0)
            gaps.append(hausdorff_distance(reference, intersect_regions(shifted, b).region))

        self.assertGreater(gaps[0], gaps[1])
        self.assertGreater(gaps[1], gaps[2])
        self.assertLessEqual(gaps[0], 1e-2)

    def test_distance_to_region(self) -> None:
        region = disk(Point.plane(0.0, 0.0), 1.0)
        self.assertAlmostEqual(2.0, distance_to_region(region, Point.plane(3.0, 0.0)), places=12)
        self.assertEqual(0.0, distance_to_region(region, Point.plane(0.5, 0.0)))
        square = polygon(E2, [Point.plane(0.0, 0.0), Point.plane(1.0, 0.0), Point.plane(1.0, 1.0),
                              Point.plane(0.0, 1.0)])
        self.assertAlmostEqual(math.sqrt(2.0), distance_to_region(square, Point.plane(2.0, 2.0)), places=12)

    def test_diameter_of_disk(self) -> None:
        self.assertAlmostEqual(2.0, diameter(disk(Point.plane(0.5, 0.0), 1.0)), places=8)
        self.assertAlmostEqual(1.4, diameter(disk(origin(H2), 0.7)), places=8)

    @settings(max_examples=8, deadline=None)
    @given(data=st.data(), space=st.sampled_from(list(Space)))
    def test_measures_are_invariant(self, data, space: Space) -> None:
        phi = data.draw(isometries(space, max_radius=0.6))
        a, b = lens(space, 1.0, 1.0)
        region = intersect_regions(a, b).region
        image = intersect_regions(moved(a, phi), moved(b, phi)).region
        self.assertAlmostEqual(perimeter(region), perimeter(image), delta=1e-8)
        self.assertAlmostEqual(area(region), area(image), delta=1e-8)
        self.assertAlmostEqual(diameter(region), diameter(image), delta=1e-8)
        self.assertAlmostEqual(0.0, hausdorff_distance(moved(region, phi), image), delta=1e-8)


class TestIdealBoundary(unittest.TestCase):
    def test_half_plane_has_an_arc(self) -> None:
        region = half_plane(geodesic_line(H2, np.array([0.0, 1.0, 0.0])))
        boundary = ideal_boundary(region)
        self.assertEqual(1, len(boundary.arcs))
        self.assertAlmostEqual(np.pi, boundary.arcs[0][1] - boundary.arcs[0][0], places=12)
        self.assertEqual(math.inf, ideal_point_count(region))

    def test_paraball_has_one_ideal_point(self) -> None:
        q = IdealPoint.at_angle(1.1)
        region = paraball(H2, q, origin(H2))
        boundary = ideal_boundary(region)
        self.assertEqual(1.0, boundary.count)
        self.assertTrue(np.allclose(q.u, boundary.points[0].u))

    def test_compact_region_has_none(self) -> None:
        self.assertEqual(0.0, ideal_point_count(disk(origin(H2), 2.0)))
        self.assertTrue(ideal_boundary(triangle(H2, 1.0)).is_empty)

    def test_two_paraballs_share_their_ideal_point(self) -> None:
        q = IdealPoint.at_angle(-0.4)
        a = paraball(H2, q, origin(H2))
        b = paraball(H2, q, polar_point(H2, 0.5, 2.0))
        result = intersect_regions(a, b)
        self.assertEqual(1.0, ideal_point_count(result.region))

    def test_other_spaces_have_no_ideal_points(self) -> None:
        with self.assertRaises(expected_exception=UnsupportedInSpace):
            ideal_boundary(disk(origin(E2), 1.0))


if __name__ == '__main__':
    unittest.main()
