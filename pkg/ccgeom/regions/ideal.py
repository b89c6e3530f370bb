import math
from typing import Tuple

import numpy as np

from ccgeom.cycles import Cycle, CycleKind
from ccgeom.decorators import frozen_dataclass
from ccgeom.exceptions import UnsupportedInSpace
from ccgeom.regions.region import ConvexRegion
from ccgeom.space_kernel import Space, IdealPoint

_TOUCH = 1e-12

Interval = Tuple[float, float]


@frozen_dataclass
class IdealBoundary:
    """ The points at infinity of an H2 region: closed arcs of the boundary circle (as angles) and isolated points. """

    arcs: Tuple[Interval, ...] = ()
    points: Tuple[IdealPoint, ...] = ()

    @property
    def count(self) -> float:
        """ The number of ideal points; infinite as soon as one arc has positive length. """
        return math.inf if self.arcs else float(len(self.points))

    @property
    def is_empty(self) -> bool:
        return not self.arcs and not self.points


def _allowed(cycle: Cycle) -> list[Interval]:
    """ The closed set of ideal angles where <c, l> >= 0, i.e. the ideal points of the convex side. """

    kind = cycle.kind

    if kind is CycleKind.CIRCLE:
        return []

    if kind is CycleKind.PARACYCLE:
        angle = cycle.ideal_centre.angle
        return [(angle, angle)]

    c = cycle.c
    amplitude = math.hypot(c[0], c[1])
    phase = math.atan2(c[1], c[0])
    half_width = math.acos(max(-1.0, min(1.0, c[2] / amplitude)))
    return [(phase - half_width, phase + half_width)]


def _meet(x: Interval, y: Interval) -> list[Interval]:
    found = []

    for shift in (-2.0 * np.pi, 0.0, 2.0 * np.pi):
        low, high = max(x[0], y[0] + shift), min(x[1], y[1] + shift)

        if high >= low - _TOUCH:
            found.append((low, max(low, high)))

    return found


def ideal_boundary(region: ConvexRegion) -> IdealBoundary:
    """ The exact set of ideal points in the closure of an H2 region. """

    if region.space is not Space.HYPERBOLIC:
        raise UnsupportedInSpace(f'Ideal points exist only in H2, not in {region.space.value}')

    current: list[Interval] = [(-np.pi, np.pi)]

    for cycle in region.active_cycles:
        current = [piece for x in current for y in _allowed(cycle) for piece in _meet(x, y)]

        if not current:
            break

    arcs = tuple(sorted((low, high) for low, high in current if high - low > _TOUCH))
    points = []

    for low, high in current:
        if high - low <= _TOUCH:
            point = IdealPoint.at_angle(low)
            on_arc = any((low - a) % (2.0 * np.pi) <= b - a for a, b in arcs)

            if not on_arc and not any(np.allclose(p.u, point.u) for p in points):
                points.append(point)

    return IdealBoundary(arcs=arcs, points=tuple(points))


def ideal_point_count(region: ConvexRegion) -> float:
    return ideal_boundary(region).count
