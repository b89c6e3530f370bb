import logging
from typing import List, Optional, Sequence

import numpy as np

from ccgeom.config import get_settings
from ccgeom.cycles import geodesic_line
from ccgeom.decorators import validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import Min
from ccgeom.exceptions import AmbiguousNearTolerance, UnsupportedInSpace
from ccgeom.regions import ConvexRegion, diameter, hausdorff_distance, moved, require_compact
from ccgeom.space_kernel import Isometry, IsometryType, Space, classify_isometry, fixed_point, mirror, \
    rotation_angle
from ccgeom.symmetry.candidates import candidate_congruences, corners
from ccgeom.symmetry.report import Classification, SymmetryReport, Witness

logger = logging.getLogger(__name__)

VETOED = (IsometryType.TRANSLATION, IsometryType.IDEAL_ROTATION, IsometryType.GLIDE_REFLECTION)
HALF_TURN = 1e-6


def residual_of(region: ConvexRegion, iso: Isometry) -> float:
    """ How far the region is from being invariant under iso, as a Hausdorff distance. """

    if iso.is_identity():
        return 0.0

    return hausdorff_distance(region, moved(region, iso))


def require_hemisphere(region: ConvexRegion, size: float) -> None:
    if region.space is Space.SPHERE and size >= np.pi - 1e-9:
        raise UnsupportedInSpace('Spherical regions must lie in an open hemisphere to be classified')


def summarize(witnesses: Sequence[Witness], tolerance: float, size: float, continuous: bool = False) -> SymmetryReport:
    """ Derives the classification from the verified congruences (identity included). """

    space = witnesses[0].isometry.space
    axes = tuple(geodesic_line(space, *mirror(w.isometry)) for w in witnesses if w.kind is IsometryType.REFLECTION)
    turns = [w for w in witnesses if w.kind in (IsometryType.ROTATION, IsometryType.POINT_REFLECTION)]
    centre = fixed_point(turns[0].isometry) if turns else None

    if continuous:
        return SymmetryReport(classification=Classification.FULL_DISK_GROUP, witnesses=tuple(witnesses), axes=axes,
                              centre=centre, rotation_order=None, tolerance=tolerance, diameter=size)

    order = 1

    if turns:
        smallest = min(rotation_angle(w.isometry) for w in turns)
        order = int(round(2.0 * np.pi / smallest))

    if order >= 3:
        classification = Classification.ROTATIONAL
    elif order == 2:
        classification = Classification.CENTRAL_AND_AXIAL if axes else Classification.CENTRAL_ONLY
    else:
        classification = Classification.AXIAL_ONLY if axes else Classification.TRIVIAL

    return SymmetryReport(classification=classification, witnesses=tuple(witnesses), axes=axes, centre=centre,
                          rotation_order=order, tolerance=tolerance, diameter=size)


def verify(region: ConvexRegion, candidates: Sequence[Isometry], tolerance: float, size: float,
           ambiguity: Optional[List[float]] = None) -> List[Witness]:
    """
        Keeps the candidates whose residual is at most tolerance * size. Translations, rotations about ideal
        points and glide reflections are never kept: a compact region admits none of them.
        Residuals just above the bound are appended to ambiguity.
    """

    witnesses = []

    for iso in candidates:
        kind = classify_isometry(iso)

        if kind is IsometryType.ROTATION and abs(rotation_angle(iso) - np.pi) <= HALF_TURN:
            kind = IsometryType.POINT_REFLECTION

        if kind in VETOED:
            logger.debug(f'Vetoed a {kind.value} candidate')
            continue

        residual = residual_of(region, iso)

        if residual <= tolerance * size:
            witnesses.append(Witness(isometry=iso, residual=residual, kind=kind))
        elif residual <= 2.0 * tolerance * size and ambiguity is not None:
            ambiguity.append(residual)
        else:
            logger.debug(f'Rejected a {kind.value}: residual {residual:.3e}')

    return witnesses


@validate(Parameter(name='tol', validators=[Min(0, include_boundary=False)], required=False))
def classify(region: ConvexRegion, tol: Optional[float] = None) -> SymmetryReport:
    """
        The congruence group of a compact region, verified candidate by candidate with the Hausdorff
        residual relative to the diameter.
    """

    tolerance = get_settings().symmetry_tolerance if tol is None else tol
    require_compact(region, 'Symmetry classification')
    size = diameter(region)
    require_hemisphere(region, size)
    candidates = candidate_congruences(region)
    near: List[float] = []
    witnesses = verify(region, candidates, tolerance, size, near)
    continuous = not corners(region) and len(witnesses) == len(candidates)
    report = summarize(witnesses, tolerance, size, continuous)

    if near:
        raise AmbiguousNearTolerance(
            f'{len(near)} candidate(s) with residual within twice the tolerance, smallest '
            f'{min(near) / size:.3e} of the diameter', report)

    logger.info(f'{region.space.value} region classified {report.classification.value} '
                f'(order {report.rotation_order}, {len(report.axes)} axes)')
    return report
