import logging
from typing import Callable, List, Optional

import numpy as np
from scipy.optimize import minimize

from ccgeom.config import get_settings
from ccgeom.cycles import geodesic_from
from ccgeom.decorators import validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import Min
from ccgeom.regions import ConvexRegion, boundary_samples, diameter, require_compact
from ccgeom.space_kernel import Isometry, IsometryType, Point, direction_at, fixed_point, frame_at, \
    log_vector, rotation_about, rotation_angle
from ccgeom.symmetry.candidates import GENERIC_ANGLE, offset_point, reflection_in
from ccgeom.symmetry.classify import require_hemisphere, summarize, verify
from ccgeom.symmetry.report import SymmetryReport, Witness

logger = logging.getLogger(__name__)

SAME_MAP = 1e-4
NEAR_IDENTITY = 1e-3
SCREEN_FACTOR = 100.0

Family = Callable[[Point, np.ndarray], Isometry]


def _turn(base: Point, y: np.ndarray) -> Isometry:
    return rotation_about(offset_point(base, y[:2]), float(y[2]))


def _flip(base: Point, y: np.ndarray) -> Isometry:
    p = offset_point(base, y[:2])
    return reflection_in(geodesic_from(p, direction_at(p, float(y[2]))))


def _screen(region: ConvexRegion, samples: np.ndarray, iso: Isometry) -> float:
    """ How far the image of the boundary samples strays from the boundary. """
    return float(np.max(np.abs(region.margins(iso.apply_vectors(samples)))))


def _refine(region: ConvexRegion, samples: np.ndarray, family: Family, base: Point, y: np.ndarray) -> np.ndarray:
    result = minimize(lambda z: _screen(region, samples, family(base, z)), x0=y, method='Nelder-Mead',
                      options={'xatol': 1e-10, 'fatol': 1e-13, 'maxiter': 600})
    return result.x


def _grid_search(region: ConvexRegion, samples: np.ndarray, family: Family, base: Point, size: float,
                 angles: np.ndarray) -> List[Isometry]:
    """ For every angle, the best grid centre refined by local descent. """

    settings = get_settings()
    axis = np.linspace(-size, size, settings.oracle_grid)
    refined = []

    for angle in angles:
        scores = [(_screen(region, samples, family(base, np.array([x, y, angle]))), x, y) for x in axis for y in axis]
        _, x, y = min(scores)
        best = _refine(region, samples, family, base, np.array([x, y, angle]))
        iso = family(base, best)

        if _screen(region, samples, iso) <= SCREEN_FACTOR * settings.oracle_tolerance * size:
            refined.append(iso)

    return refined


def _distinct(witnesses: List[Witness]) -> List[Witness]:
    kept: List[Witness] = []

    for w in witnesses:
        if w.kind is IsometryType.ROTATION and rotation_angle(w.isometry) < NEAR_IDENTITY:
            continue

        if any(np.max(np.abs(w.isometry.m - k.isometry.m)) <= SAME_MAP for k in kept):
            continue

        kept.append(w)

    return kept


def _is_continuous(region: ConvexRegion, samples: np.ndarray, witnesses: List[Witness], tolerance: float,
                   size: float) -> bool:
    """ Whether a rotation by a generic angle about the centre of some verified rotation verifies as well. """

    turns = [w for w in witnesses if w.kind in (IsometryType.ROTATION, IsometryType.POINT_REFLECTION)]

    if not turns:
        return False

    centre = fixed_point(turns[0].isometry)
    e1, e2 = frame_at(region.interior_point)
    offset = log_vector(region.space, region.interior_point.v, centre.v)
    start = np.array([float(region.space.inner(offset, e1)), float(region.space.inner(offset, e2)), GENERIC_ANGLE])
    best = _refine(region, samples, lambda base, z: _turn(base, np.array([z[0], z[1], GENERIC_ANGLE])),
                   region.interior_point, start)
    generic = _turn(region.interior_point, np.array([best[0], best[1], GENERIC_ANGLE]))
    return bool(verify(region, [generic], tolerance, size))


@validate(Parameter(name='tol', validators=[Min(0, include_boundary=False)], required=False))
def oracle_classify(region: ConvexRegion, tol: Optional[float] = None) -> SymmetryReport:
    """
        Brute-force classification independent of the corner analysis: a grid over rotation centres and
        angles and over reflection axes around an interior point, screened by how far the mapped boundary
        strays from the boundary, refined by Nelder-Mead and verified by the Hausdorff residual.
    """

    settings = get_settings()
    tolerance = settings.oracle_tolerance if tol is None else tol
    chain = require_compact(region, 'The symmetry oracle')
    size = diameter(region)
    require_hemisphere(region, size)
    samples = boundary_samples(region, per_arc=max(8, settings.oracle_screen_samples // len(chain.arcs)))
    base = region.interior_point
    steps = settings.oracle_angles

    found = _grid_search(region, samples, _turn, base, size, 2.0 * np.pi * np.arange(1, steps) / steps)
    found += _grid_search(region, samples, _flip, base, size, np.pi * np.arange(steps) / steps)
    identity = Witness(isometry=Isometry.identity(region.space), residual=0.0, kind=IsometryType.IDENTITY)
    witnesses = _distinct([identity] + verify(region, found, tolerance, size))
    continuous = _is_continuous(region, samples, witnesses, tolerance, size)
    logger.debug(f'Oracle kept {len(witnesses)} of {len(found)} refined candidates')
    return summarize(witnesses, tolerance, size, continuous)
