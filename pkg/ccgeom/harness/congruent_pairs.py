"""
    Evident directions of the characterisations: congruent disks always meet in a centrally and axially symmetric
    lens, incongruent ones in an axially symmetric lens, and two paraballs with a common centre at infinity meet
    in a paraball, which has a single point at infinity and therefore no centre of symmetry.
"""

import logging
from typing import Any, Dict, List

import numpy as np

from ccgeom.config import get_settings
from ccgeom.cycles import signed_distance
from ccgeom.decorators import timer, validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import IsEnum, Min
from ccgeom.exceptions import CaseNotRealized, GeometryException, OutOfRange
from ccgeom.harness.placements import is_lens, isometry_inputs, place_pair
from ccgeom.harness.report import ExperimentReport, TrialRecord, TrialStatus, checked_record, classified_record, \
    merge_reports
from ccgeom.harness.trial_pool import run_trials
from ccgeom.regions import IntersectionStatus, disk, finite_vertices, ideal_point_count, intersect_regions, moved, \
    paraball
from ccgeom.space_kernel import IdealPoint, Space, apply, ideal_rotation, origin, translation_along
from ccgeom.symmetry import Classification, SymmetryReport

logger = logging.getLogger(__name__)

INCONGRUENT_RATIO = 1.3
AXIS_RESIDUAL = 1e-6


def _disk_pair(space: Space, radii: tuple[float, float], trial: int, rng: np.random.Generator) -> TrialRecord:
    congruent = radii[0] == radii[1]
    label = 'congruent' if congruent else 'incongruent'
    o = origin(space)

    try:
        phi, psi, result = place_pair(disk(o, radii[0]), disk(o, radii[1]), rng, 2.0 * radii[0], is_lens)
    except CaseNotRealized as ex:
        logger.info(f'Trial {trial} ({label}) skipped: {ex}')
        return TrialRecord(trial=trial, status=TrialStatus.SKIPPED, notes=f'{label}; empty_interior: {ex}',
                           inputs={'space': space.value, 'radii': list(radii)})

    centres = [apply(phi, o), apply(psi, o)]
    inputs: Dict[str, Any] = {'space': space.value, 'radii': list(radii), 'phi': isometry_inputs(phi),
                              'psi': isometry_inputs(psi)}

    if congruent:
        return classified_record(trial, result.region, [Classification.CENTRAL_AND_AXIAL], inputs, notes=label,
                                 check=lambda report: '' if len(report.axes) == 2 else f'{len(report.axes)} axes')

    def through_centres(report: SymmetryReport) -> str:
        residual = max(abs(signed_distance(report.axes[0], c)) for c in centres)

        if residual > AXIS_RESIDUAL * report.diameter:
            return f'axis misses the centres by {residual:.3e}'

        return ''

    return classified_record(trial, result.region, [Classification.AXIAL_ONLY], inputs, notes=label,
                             check=through_centres)


@timer
@validate(
    Parameter(name='space', validators=[IsEnum(Space)]),
    Parameter(name='r', validators=[Min(0, include_boundary=False)]),
    Parameter(name='trials', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
)
def run_disk_pairs(space: Space, r: float, trials: int, seed: int, workers: int = 1) -> ExperimentReport:
    """
        Two disks of radius r at random overlapping placements meet in a lens that is centrally and axially
        symmetric. A companion pair with radii r and 1.3 r gives a lens that is only axially symmetric, about
        the geodesic through the two centres. Every trial writes one record per pair.
    """

    if space is Space.SPHERE and r > np.pi / 2:
        raise OutOfRange(msg=f'Spherical disks have radius at most pi/2, got {r}', parameter_name='r', value=r)

    companion = INCONGRUENT_RATIO * r

    def trial(index: int, rng: np.random.Generator) -> List[TrialRecord]:
        records = [_disk_pair(space, (r, r), index, rng)]

        if space is Space.SPHERE and companion > np.pi / 2:
            records.append(TrialRecord(trial=index, status=TrialStatus.SKIPPED,
                                       notes=f'incongruent; radius {companion:.3f} exceeds pi/2'))
        else:
            records.append(_disk_pair(space, (r, companion), index, rng))

        return records

    records = run_trials(trial, trials, seed, workers)
    return ExperimentReport(experiment=f'disk_pairs_{space.value}', seed=seed, records=tuple(records),
                            settings=get_settings().to_dict())


def run_disk_pair_suite(trials: int, seed: int, workers: int = 1) -> ExperimentReport:
    """ run_disk_pairs in all three spaces: radius 1 in E2 and H2, 0.8 on S2. """

    reports = [run_disk_pairs(space, r, trials, seed, workers)
               for space, r in ((Space.EUCLIDEAN, 1.0), (Space.HYPERBOLIC, 1.0), (Space.SPHERE, 0.8))]
    return merge_reports('disk_pairs', seed, reports)


def _paraball_pair(trial: int, rng: np.random.Generator) -> TrialRecord:
    """ Two congruent paraballs moved to share their centre at infinity: their intersection is one of them. """

    space = Space.HYPERBOLIC
    o = origin(space)
    angle = float(rng.uniform(-np.pi, np.pi))
    q = IdealPoint.at_angle(angle)
    body = paraball(space, q, through=o)
    towards = np.array([np.cos(angle), np.sin(angle), 0.0])
    phi = translation_along(o, towards, float(rng.uniform(-1.0, 1.0)))
    psi = ideal_rotation(q, float(rng.uniform(-2.0, 2.0)))
    inputs = {'ideal_angle': angle, 'phi': isometry_inputs(phi), 'psi': isometry_inputs(psi)}

    try:
        result = intersect_regions(moved(body, phi), moved(body, psi))
    except GeometryException as ex:
        return checked_record(trial, [f'{type(ex).__name__}: {ex}'], inputs, notes='paraballs')

    if result.status is not IntersectionStatus.UNBOUNDED:
        return checked_record(trial, [f'intersection is {result.status.value}'], inputs, notes='paraballs')

    count = ideal_point_count(result.region)
    problems = [
        '' if count == 1 else f'{count} ideal points',
        '' if not finite_vertices(result.region) else 'the intersection has corners',
    ]
    return checked_record(trial, problems, inputs, notes='paraballs; one ideal point, no centre of symmetry',
                          classification='no_central_symmetry')


@timer
@validate(
    Parameter(name='trials', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
    Parameter(name='r', validators=[Min(0, include_boundary=False)]),
)
def run_hyperbolic_pairs(trials: int, seed: int, workers: int = 1, r: float = 1.0) -> ExperimentReport:
    """
        The evident directions in H2: congruent disks classify central and axial; paraballs sharing their
        centre at infinity meet in a paraball with exactly one ideal point.
    """

    def trial(index: int, rng: np.random.Generator) -> List[TrialRecord]:
        return [_disk_pair(Space.HYPERBOLIC, (r, r), index, rng), _paraball_pair(index, rng)]

    records = run_trials(trial, trials, seed, workers)
    return ExperimentReport(experiment='hyperbolic_pairs', seed=seed, records=tuple(records),
                            settings=get_settings().to_dict())
