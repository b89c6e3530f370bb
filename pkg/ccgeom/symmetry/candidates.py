import logging
from typing import List, Sequence

import numpy as np
from scipy.optimize import minimize

from ccgeom.cycles import Cycle, CycleKind, geodesic_from
from ccgeom.exceptions import UnsupportedCongruence
from ccgeom.regions import ConvexRegion, Vertex, boundary_samples, require_compact, vertices_of
from ccgeom.config import get_settings
from ccgeom.space_kernel import Isometry, Point, Space, direction_at, distances, exp_map, frame_at, \
    geodesic_normal, log_direction, midpoint, oriented_angle, point_reflection, reflection, rotation_about, \
    transvection
from ccgeom.symmetry.axes import axis_for_cycle_pair

logger = logging.getLogger(__name__)

# incommensurable with pi: only a disk is invariant under this rotation
GENERIC_ANGLE = 1.0

ANGLE_PRUNE = 1e-6
AXIS_MATCH = 1e-9


def reflection_in(geodesic: Cycle) -> Isometry:
    """ The reflection whose mirror is the given geodesic. """

    if geodesic.kind is not CycleKind.GEODESIC:
        raise UnsupportedCongruence(f'Reflections need a geodesic mirror, not a {geodesic.kind.value}')

    return reflection(geodesic.space, geodesic.c, geodesic.k)


def bisector_reflection(p: Point, q: Point) -> Isometry:
    """
        The reflection swapping p and q.

        >>> iso = bisector_reflection(Point.plane(0.0, 0.0), Point.plane(2.0, 0.0))
        >>> [round(float(x), 9) for x in iso.apply_vectors(Point.plane(0.0, 0.0).v)]
        [2.0, 0.0, 1.0]
    """

    p.check_space(q)
    space = p.space

    if space is Space.EUCLIDEAN:
        normal = q.v - p.v
        normal[2] = 0.0
        normal = normal / np.linalg.norm(normal)
        return reflection(space, normal, float(normal[:2] @ (p.v[:2] + q.v[:2])) / 2.0)

    return reflection(space, q.v - p.v)


def chord_reflection(p: Point, q: Point) -> Isometry:
    normal, offset = geodesic_normal(p, q)
    return reflection(p.space, normal, offset)


def offset_point(base: Point, y: np.ndarray) -> Point:
    """ The point reached from base along the tangent vector y[0] e1 + y[1] e2 of its frame. """

    length = float(np.hypot(y[0], y[1]))

    if length == 0.0:
        return base

    e1, e2 = frame_at(base)
    return exp_map(base, (y[0] * e1 + y[1] * e2) / length, length)


def circumcentre(region: ConvexRegion) -> Point:
    """ The centre of the smallest disk containing the region (minimax distance to the boundary). """

    chain = require_compact(region, 'The circumcentre')

    if len(chain.arcs) == 1 and chain.arcs[0].is_full and chain.arcs[0].cycle.kind is CycleKind.CIRCLE:
        return chain.arcs[0].cycle.centre

    samples = boundary_samples(region)
    base = region.interior_point

    def spread(y: np.ndarray) -> float:
        return float(np.max(distances(region.space, offset_point(base, y).v, samples)))

    result = minimize(spread, x0=np.zeros(2), method='Nelder-Mead',
                      options={'xatol': 1e-10, 'fatol': 1e-12, 'maxiter': 600})
    return offset_point(base, result.x)


def corners(region: ConvexRegion) -> List[Vertex]:
    """ The non-smooth boundary points in boundary order. """

    tolerance = get_settings().angle_match_tolerance
    return [v for v in vertices_of(region) if v.outer_angle > tolerance]


def _vertex_matchings(vertices: Sequence[Vertex]) -> List[Isometry]:
    """ Maps taking the first corner and its successor onto an equal-angled corner and one of its neighbours. """

    points = [v.point for v in vertices]
    angles = [v.outer_angle for v in vertices]
    count = len(points)
    start = points[0]
    space = start.space
    heading = log_direction(start, points[1])
    found = []

    for j in range(count):
        if abs(angles[j] - angles[0]) > ANGLE_PRUNE:
            logger.debug(f'Corner {j} pruned: outer angle {angles[j]:.9f} against {angles[0]:.9f}')
            continue

        target = points[j]
        move = transvection(start, target)
        moved_heading = move.apply_tangent(heading)

        for neighbour, direct in ((points[(j + 1) % count], True), (points[j - 1], False)):
            if j == 0 and direct:
                continue

            direction = log_direction(target, neighbour)
            turn = float(oriented_angle(space, target.v, moved_heading, direction))
            iso = rotation_about(target, turn).compose(move)

            if not direct:
                iso = reflection_in(geodesic_from(target, direction)).compose(iso)

            found.append(iso)

    return found


def axis_reflections(cycles: Sequence[Cycle], present: Sequence[Isometry] = ()) -> List[Isometry]:
    """ Reflections in the common axes of pairs of cycles, leaving out those equal to a present one. """

    found: List[Isometry] = []

    for i, a in enumerate(cycles):
        for b in cycles[i + 1:]:
            axis = axis_for_cycle_pair(a, b)

            if axis is None:
                continue

            iso = reflection_in(axis)

            if not any(np.allclose(iso.m, other.m, atol=AXIS_MATCH) for other in [*present, *found]):
                found.append(iso)

    return found


def boundary_cycles(region: ConvexRegion) -> List[Cycle]:
    """ The distinct cycles carrying the boundary arcs of a compact region. """

    cycles: List[Cycle] = []

    for arc in require_compact(region, 'Boundary cycles').arcs:
        if not any(arc.cycle.same_as(c) for c in cycles):
            cycles.append(arc.cycle)

    return cycles


def candidate_congruences(region: ConvexRegion) -> List[Isometry]:
    """
        The congruences a compact region can possibly admit, identity first.
        Two corners p, q leave the point reflection at their midpoint and the reflections in their chord and in
        its perpendicular bisector. Three or more corners are matched pairwise by equal outer angles.
        A smooth boundary offers two orthogonal reflections, the point reflection and a generic rotation about
        the circumcentre. With at most one corner the common axes of pairs of boundary cycles are added.
    """

    require_compact(region, 'Candidate congruences')
    space = region.space
    found = [Isometry.identity(space)]
    vertices = corners(region)

    if len(vertices) == 2:
        p, q = vertices[0].point, vertices[1].point
        found += [point_reflection(midpoint(p, q)), chord_reflection(p, q), bisector_reflection(p, q)]
    elif len(vertices) >= 3:
        found += _vertex_matchings(vertices)
    elif len(vertices) == 1:
        found.append(chord_reflection(vertices[0].point, circumcentre(region)))
    else:
        centre = circumcentre(region)
        found += [
            reflection_in(geodesic_from(centre, direction_at(centre, 0.0))),
            reflection_in(geodesic_from(centre, direction_at(centre, np.pi / 2.0))),
            point_reflection(centre),
            rotation_about(centre, GENERIC_ANGLE),
        ]

    if len(vertices) <= 1:
        found += axis_reflections(boundary_cycles(region), found)

    logger.debug(f'{len(found)} candidate congruences for {len(vertices)} corners')
    return found
