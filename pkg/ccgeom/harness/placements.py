import logging
from typing import Any, Callable, Dict, Tuple

import numpy as np

from ccgeom.config import get_settings
from ccgeom.decorators import retry_func
from ccgeom.exceptions import CaseNotRealized, GeometryException
from ccgeom.cycles import Cycle, signed_distance
from ccgeom.regions import ConvexRegion, HalfDomain, IntersectionResult, IntersectionStatus, Side, finite_vertices, \
    intersect_regions, moved
from ccgeom.space_kernel import Isometry, Point, Space, direction_at, origin, rotation_about, translation_along

logger = logging.getLogger(__name__)


def random_direct_isometry(space: Space, rng: np.random.Generator, reach: float) -> Isometry:
    """
        A direct isometry drawn as a rotation about the model centre followed by a translation away from it:
        uniform rotation angle and translation direction, translation length uniform in [0, reach].
    """

    o = origin(space)
    angle, heading = rng.uniform(-np.pi, np.pi, 2)
    length = float(rng.uniform(0.0, reach))
    return translation_along(o, direction_at(o, float(heading)), length).compose(rotation_about(o, float(angle)))


def side_containing(cycle: Cycle, p: Point) -> HalfDomain:
    """ The half-domain of a geodesic (or the convex side of any other cycle) holding p. """
    return HalfDomain(cycle=cycle, side=Side.CONVEX if signed_distance(cycle, p) > 0 else Side.CONCAVE)


def isometry_inputs(iso: Isometry) -> Dict[str, Any]:
    return {'matrix': iso.m.tolist(), 'orientation': iso.orientation}


def place_pair(first: ConvexRegion, second: ConvexRegion, rng: np.random.Generator, reach: float,
               accept: Callable[[IntersectionResult], bool]) -> Tuple[Isometry, Isometry, IntersectionResult]:
    """
        Moves both regions by random direct isometries until accept() holds for their intersection.
        Gives up with CaseNotRealized after the resampling limit of the settings.
    """

    space = first.space
    limit = get_settings().resample_limit

    def attempt() -> Tuple[Isometry, Isometry, IntersectionResult]:
        phi = random_direct_isometry(space, rng, reach)
        psi = random_direct_isometry(space, rng, reach)

        try:
            result = intersect_regions(moved(first, phi), moved(second, psi))
        except GeometryException as ex:
            raise CaseNotRealized(f'{type(ex).__name__}: {ex}', attempts=1)

        if not accept(result):
            raise CaseNotRealized(f'Placement rejected ({result.status.value})', attempts=1)

        return phi, psi, result

    try:
        return retry_func(attempt, attempts=limit, exceptions=CaseNotRealized, logger=logger)
    except CaseNotRealized as ex:
        raise CaseNotRealized(f'No acceptable placement in {limit} attempts, last: {ex}', attempts=limit)


def is_lens(result: IntersectionResult) -> bool:
    """ A compact intersection bounded by two arcs meeting at two non-smooth points. """

    return result.status is IntersectionStatus.COMPACT_LENS and len(finite_vertices(result.region)) == 2 \
        and len(result.chain.arcs) == 2
