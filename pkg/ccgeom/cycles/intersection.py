import logging
from typing import Tuple

import numpy as np

from ccgeom.config import get_settings
from ccgeom.cycles.cycle import Cycle, CycleKind
from ccgeom.decorators import frozen_dataclass
from ccgeom.exceptions import SpaceMismatch
from ccgeom.space_kernel import Space, Point

logger = logging.getLogger(__name__)


@frozen_dataclass
class CycleIntersection:
    """ Common points of two cycles. A tangency is reported as one point with tangent=True. """

    points: Tuple[Point, ...] = ()
    coincident: bool = False
    tangent: bool = False

    @property
    def count(self) -> int:
        return len(self.points)


def same_point_set(a: Cycle, b: Cycle, tolerance: float = 1e-9) -> bool:
    """ Equal as point sets, ignoring which side is marked positive. """

    if a.kind is CycleKind.GEODESIC and b.kind is CycleKind.GEODESIC:
        return a.same_as(b, tolerance) or a.same_as(b.flipped(), tolerance)

    return a.same_as(b, tolerance)


def intersect_cycles(a: Cycle, b: Cycle) -> CycleIntersection:
    """
        Solves the two level-set equations together with the quadric equation.

        >>> from ccgeom.cycles.cycle import circle
        >>> result = intersect_cycles(circle(Point.plane(0.0, 0.0), 1.0), circle(Point.plane(1.0, 0.0), 1.0))
        >>> sorted(round(float(p.v[1]), 6) for p in result.points)
        [-0.866025, 0.866025]
    """

    if a.space is not b.space:
        raise SpaceMismatch(f'Cannot intersect a cycle of {a.space.value} with one of {b.space.value}')

    if same_point_set(a, b):
        return CycleIntersection(coincident=True)

    if a.space is Space.EUCLIDEAN:
        return _intersect_planar(a, b)

    return _intersect_quadric(a, b)


def _intersect_quadric(a: Cycle, b: Cycle) -> CycleIntersection:
    space = a.space
    window = get_settings().tangency_window
    rows = np.array([space.gram @ a.c, space.gram @ b.c])
    direction = np.cross(rows[0], rows[1])
    length = float(np.linalg.norm(direction))

    if length < 1e-14 * max(1.0, float(np.max(np.abs(rows))) ** 2):
        logger.debug('Cycles lie in parallel planes and do not meet')
        return CycleIntersection()

    direction = direction / length
    base = np.linalg.lstsq(rows, np.array([a.k, b.k]), rcond=None)[0]
    quadratic = float(space.inner(direction, direction))
    linear = float(space.inner(base, direction))
    constant = float(space.inner(base, base)) - space.curvature

    if abs(quadratic) < 1e-12:
        if abs(linear) < 1e-12:
            return CycleIntersection()

        candidates = [base - constant / (2.0 * linear) * direction]
        tangent = False
    else:
        discriminant = linear ** 2 - quadratic * constant
        half_gap = np.sqrt(abs(discriminant)) / abs(quadratic)

        if half_gap <= window:
            candidates = [base - linear / quadratic * direction]
            tangent = True
        elif discriminant < 0.0:
            return CycleIntersection()
        else:
            centre = -linear / quadratic
            candidates = [base + (centre - half_gap) * direction, base + (centre + half_gap) * direction]
            tangent = False

    if space is Space.HYPERBOLIC:
        candidates = [x for x in candidates if x[2] > 0.0 and space.inner(x, x) < 0.0]

    points = tuple(Point.on(space, x) for x in candidates)
    return CycleIntersection(points=points, tangent=tangent and len(points) == 1)


def _line_of(cycle: Cycle, other: Cycle) -> Tuple[np.ndarray, float] | None:
    """ A line n.x = k through the common points of cycle and other, one of which is a circle. """

    if cycle.kind is CycleKind.GEODESIC:
        return cycle.c[:2], cycle.k

    if other.kind is CycleKind.GEODESIC:
        return other.c[:2], other.k

    normal = cycle.c[:2] - other.c[:2]
    length = float(np.linalg.norm(normal))

    if length < 1e-14:
        return None

    return normal / length, (cycle.k - other.k) / length


def _intersect_planar(a: Cycle, b: Cycle) -> CycleIntersection:
    window = get_settings().tangency_window

    if a.kind is CycleKind.GEODESIC and b.kind is CycleKind.GEODESIC:
        matrix = np.array([a.c[:2], b.c[:2]])

        if abs(np.linalg.det(matrix)) < 1e-14:
            return CycleIntersection()

        x = np.linalg.solve(matrix, [a.k, b.k])
        return CycleIntersection(points=(Point.plane(x[0], x[1]),))

    line = _line_of(a, b)

    if line is None:
        return CycleIntersection()

    normal, offset = line
    circle = a if a.kind is CycleKind.CIRCLE else b
    centre = circle.c[:2]
    gap = offset - float(normal @ centre)
    foot = centre + gap * normal
    chord_squared = circle.radius ** 2 - gap ** 2
    half_chord = np.sqrt(abs(chord_squared))
    along = np.array([-normal[1], normal[0]])

    if half_chord <= window:
        return CycleIntersection(points=(Point.plane(foot[0], foot[1]),), tangent=True)

    if chord_squared < 0.0:
        return CycleIntersection()

    points = tuple(Point.plane(*(foot + sign * half_chord * along)) for sign in (-1.0, 1.0))
    return CycleIntersection(points=points)


if __name__ == '__main__':
    import doctest
    doctest.testmod(verbose=False, optionflags=doctest.ELLIPSIS)
