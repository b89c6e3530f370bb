import logging
from typing import List, Optional, Sequence

import numpy as np

from ccgeom.cycles import Cycle, CycleKind, geodesic_line
from ccgeom.exceptions import SpaceMismatch
from ccgeom.regions import HalfDomain
from ccgeom.space_kernel import Isometry, Space

logger = logging.getLogger(__name__)

_DEGENERATE = 1e-12


def _anchor(cycle: Cycle) -> np.ndarray:
    """
        The vector every symmetry axis of the cycle contains: the centre of a circle, the light-like
        normal of a paracycle, the normal of a hypercycle or geodesic (an axis containing it is orthogonal to
        the base line).
    """
    return cycle.c


def _planar_axis(a: Cycle, b: Cycle) -> Optional[Cycle]:
    if a.kind is CycleKind.GEODESIC and b.kind is CycleKind.GEODESIC:
        return None

    if a.kind is CycleKind.GEODESIC:
        a, b = b, a

    centre = a.c[:2]

    if b.kind is CycleKind.GEODESIC:
        direction = b.c[:2]
    else:
        direction = b.c[:2] - centre

    length = float(np.linalg.norm(direction))

    if length < _DEGENERATE:
        return None

    normal = np.array([-direction[1], direction[0], 0.0]) / length
    return geodesic_line(Space.EUCLIDEAN, normal, float(normal[:2] @ centre))


def axis_for_cycle_pair(a: Cycle, b: Cycle) -> Optional[Cycle]:
    """
        The geodesic which is an axis of symmetry of both cycles: through two circle centres, through a
        centre and orthogonal to a base line, or the common perpendicular of two ultraparallel base lines.
        None when no such geodesic is determined, e.g. for concentric circles, parallel or crossing base
        lines.

        >>> from ccgeom.cycles import circle
        >>> from ccgeom.space_kernel import Point
        >>> axis = axis_for_cycle_pair(circle(Point.plane(0.0, 0.0), 1.0), circle(Point.plane(1.0, 0.0), 2.0))
        >>> [round(float(x), 9) + 0.0 for x in axis.c], round(axis.k, 9) + 0.0
        ([0.0, 1.0, 0.0], 0.0)
    """

    if a.space is not b.space:
        raise SpaceMismatch(f'Cycles of {a.space.value} and {b.space.value} have no common axis')

    space = a.space

    if space is Space.EUCLIDEAN:
        return _planar_axis(a, b)

    normal = space.gram @ np.cross(_anchor(a), _anchor(b))
    norm_squared = float(space.inner(normal, normal))

    if norm_squared <= _DEGENERATE * max(1.0, float(np.max(np.abs(normal)))) ** 2:
        logger.debug(f'No axis for a {a.kind.value} and a {b.kind.value}')
        return None

    return geodesic_line(space, normal, 0.0)


def constraint_symmetries(halves: Sequence[HalfDomain], candidates: Sequence[Isometry],
                          tolerance: float = 1e-9) -> List[Isometry]:
    """ The candidates mapping the set of half-domains onto itself. """

    cycles = [h.effective for h in halves]
    kept = []

    for iso in candidates:
        images = [h.transformed(iso).effective for h in halves]

        if all(any(image.same_as(c, tolerance) for c in cycles) for image in images):
            kept.append(iso)

    return kept
