"""
    Intersections of line-bounded sets in H2 that cannot be centrally symmetric. Two diameters of the model disk
    K1, L1 crossing at its centre cut out a sector reaching the boundary circle: one corner and an arc of
    ideal points. A chord L2 parallel to L1 closes the sector to a triangle with a single ideal point, and a
    further chord K2 parallel to K1 closes it to a quadrangle whose opposite sides are parallel pairs.
"""

import logging
from enum import Enum
from itertools import combinations
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ccgeom.config import get_settings
from ccgeom.cycles import Cycle, geodesic_line, intersect_cycles
from ccgeom.decorators import retry_func, timer, validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import IsEnum, Min
from ccgeom.exceptions import AmbiguousNearTolerance, CaseNotRealized, GeometryException
from ccgeom.harness.placements import side_containing
from ccgeom.harness.report import ExperimentReport, TrialRecord, TrialStatus, checked_record
from ccgeom.harness.scene import Body, Scene, scene_intersection
from ccgeom.harness.trial_pool import run_trials, trial_rng
from ccgeom.regions import ConvexRegion, HalfDomain, IntersectionStatus, disk, finite_vertices, ideal_point_count, \
    intersect_regions, is_compact, region_from_halves
from ccgeom.space_kernel import IdealPoint, ModelKind, Point, Space, from_model_coordinates, origin
from ccgeom.symmetry import SymmetryReport, classify

logger = logging.getLogger(__name__)

H2 = Space.HYPERBOLIC
TRUNCATION_RADIUS = 3.0
PARALLEL_SLACK = 1e-9


class LineCase(Enum):
    SECTOR = 'sector'
    TRIANGLE_PARALLEL = 'triangle_parallel'
    QUADRANGLE_PARALLEL = 'quadrangle_parallel'


def ideal_chord(alpha: float, beta: float) -> Cycle:
    """
        The geodesic joining the ideal points at the angles alpha and beta.

        >>> chord = ideal_chord(-np.pi / 2, np.pi / 2)
        >>> np.allclose(np.abs(chord.c), [1.0, 0.0, 0.0])
        True
    """

    a, b = IdealPoint.at_angle(alpha).light_vector, IdealPoint.at_angle(beta).light_vector
    return geodesic_line(H2, H2.gram @ np.cross(a, b))


def polar(radius: float, angle: float) -> Point:
    """ The point of the collinear model at the given Euclidean polar coordinates. """

    u = radius * np.array([np.cos(angle), np.sin(angle)])
    return Point(v=from_model_coordinates(H2, ModelKind.COLLINEAR, u), space=H2)


def crossing(a: Cycle, b: Cycle) -> Point:
    found = intersect_cycles(a, b)

    if found.count != 1:
        raise CaseNotRealized(f'The chords meet in {found.count} points', attempts=1)

    return found.points[0]


def line_sets(case: LineCase, rng: np.random.Generator) -> Tuple[List[HalfDomain], List[HalfDomain], Dict[str, Any]]:
    """
        The constraints of K and L after a random rotation by omega. K1 and L1 are diameters turned by
        delta_K and delta_L in opposite senses; K2 and L2 leave from their lower endpoints, gamma further along.
    """

    omega = float(rng.uniform(-np.pi, np.pi))
    delta_k, delta_l = rng.uniform(0.05, 0.2, 2)
    gamma_k, gamma_l = rng.uniform(0.5, 1.2, 2)
    bottom_k, bottom_l = -np.pi / 2 - delta_k + omega, -np.pi / 2 + delta_l + omega

    k1 = ideal_chord(bottom_k, np.pi / 2 - delta_k + omega)
    l1 = ideal_chord(bottom_l, np.pi / 2 + delta_l + omega)
    first_k = side_containing(k1, polar(0.5, omega - delta_k))
    first_l = side_containing(l1, polar(0.5, np.pi + omega + delta_l))
    corner = crossing(first_k.effective, first_l.effective)
    k, l = [first_k], [first_l]

    if case is not LineCase.SECTOR:
        l.append(side_containing(ideal_chord(bottom_l - gamma_l, bottom_l), corner))

    if case is LineCase.QUADRANGLE_PARALLEL:
        k.append(side_containing(ideal_chord(bottom_k, bottom_k + gamma_k), corner))

    inputs = {'case': case.value, 'omega': omega, 'delta': [float(delta_k), float(delta_l)],
              'gamma': [float(gamma_k), float(gamma_l)]}
    return k, l, inputs


def _case_problems(case: LineCase, region: ConvexRegion, status: IntersectionStatus) -> List[str]:
    """ The obstruction each case stands for. """

    if case is LineCase.QUADRANGLE_PARALLEL:
        if status is not IntersectionStatus.COMPACT_LENS:
            return [f'intersection is {status.value}']

        corners = finite_vertices(region)
        normals = [cycle.c for cycle in region.active_cycles]
        products = [abs(float(H2.inner(a, b))) for a, b in combinations(normals, 2)]
        return [
            '' if len(corners) == 4 else f'{len(corners)} corners',
            '' if max(products) <= 1.0 + PARALLEL_SLACK else f'ultraparallel sides (|<n, m>| = {max(products):.9f})',
        ]

    if status is not IntersectionStatus.UNBOUNDED:
        return [f'intersection is {status.value}']

    corners, count = finite_vertices(region), ideal_point_count(region)

    if case is LineCase.SECTOR:
        return ['' if len(corners) == 1 else f'{len(corners)} corners',
                '' if np.isinf(count) else f'{count} ideal points, expected an arc']

    return ['' if len(corners) == 2 else f'{len(corners)} corners',
            '' if count == 1 else f'{count} ideal points']


def _truncated(region: ConvexRegion) -> ConvexRegion:
    """ A compact piece around the corners, classified in place of an unbounded intersection. """

    if is_compact(region):
        return region

    result = intersect_regions(region, disk(origin(H2), TRUNCATION_RADIUS))

    if result.status is not IntersectionStatus.COMPACT_LENS:
        raise CaseNotRealized(f'Truncation left a {result.status.value} set', attempts=1)

    return result.region


def realize_case(case: LineCase, rng: np.random.Generator) -> Tuple[Scene, ConvexRegion, Dict[str, Any]]:
    """ Draws rotations until K and L meet in the requested case, at most resample_limit times. """

    limit = get_settings().resample_limit

    def attempt() -> Tuple[Scene, ConvexRegion, Dict[str, Any]]:
        try:
            k, l, inputs = line_sets(case, rng)
            scene = Scene(space=H2, bodies=(Body(region=region_from_halves(H2, k)),
                                             Body(region=region_from_halves(H2, l))), name=case.value)
            result = scene_intersection(scene)
        except CaseNotRealized:
            raise
        except GeometryException as ex:
            raise CaseNotRealized(f'{type(ex).__name__}: {ex}', attempts=1)

        problems = [p for p in _case_problems(case, result.region, result.status) if p] if result.has_interior \
            else [f'intersection is {result.status.value}']

        if problems:
            raise CaseNotRealized(f'{case.value} missed: {"; ".join(problems)}', attempts=1)

        return scene, result.region, inputs

    try:
        return retry_func(attempt, attempts=limit, exceptions=CaseNotRealized, logger=logger)
    except CaseNotRealized as ex:
        raise CaseNotRealized(f'{case.value} not realized in {limit} attempts, last: {ex}', attempts=limit)


def line_case_record(trial: int, case: LineCase, rng: np.random.Generator) -> Tuple[Scene, TrialRecord]:
    try:
        scene, region, inputs = realize_case(case, rng)
    except CaseNotRealized as ex:
        return Scene(space=H2, bodies=()), checked_record(trial, [str(ex)], {'case': case.value}, notes=case.value)

    try:
        report: SymmetryReport = classify(_truncated(region))
    except AmbiguousNearTolerance as ex:
        return scene, TrialRecord(trial=trial, status=TrialStatus.AMBIGUOUS, inputs=inputs, notes=f'{case.value}; {ex}')
    except GeometryException as ex:
        return scene, checked_record(trial, [f'{type(ex).__name__}: {ex}'], inputs, notes=case.value)

    problems = ['centrally symmetric' if report.has_central_symmetry else '']
    record = checked_record(trial, problems, {**inputs, 'ideal_points': ideal_point_count(region)}, notes=case.value,
                            classification=report.classification.value, max_residual=report.max_residual,
                            diameter=report.diameter)
    return scene, record


@validate(
    Parameter(name='case', validators=[IsEnum(LineCase, to_upper_case=False)]),
    Parameter(name='seed', validators=[Min(0)]),
)
def build_line_pair_case(case: LineCase, seed: int) -> Tuple[Scene, ExperimentReport]:
    """
        Realizes one case and verifies its obstruction: the sector has exactly one corner, the triangle exactly
        one ideal point, the quadrangle no ultraparallel sides; none of them is centrally symmetric.
    """

    scene, record = line_case_record(0, case, trial_rng(seed, 0))
    report = ExperimentReport(experiment=f'line_pairs_{case.value}', seed=seed, records=(record,),
                              settings=get_settings().to_dict())
    return scene, report


@timer
@validate(
    Parameter(name='trials', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
)
def run_line_pairs(trials: int, seed: int, workers: int = 1,
                   cases: Sequence[LineCase] = tuple(LineCase)) -> ExperimentReport:
    """ One record per case and trial. """

    def trial(index: int, rng: np.random.Generator) -> List[TrialRecord]:
        return [line_case_record(index, case, rng)[1] for case in cases]

    records = run_trials(trial, trials, seed, workers)
    return ExperimentReport(experiment='line_pairs', seed=seed, records=tuple(records),
                            settings=get_settings().to_dict())
