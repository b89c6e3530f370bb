"""
    Numeric tables behind the geometry: angle distortion of the collinear model, the tangent law of image
    angles, the diameter of lenses over short chords and the curvature of the cycles.
"""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ccgeom.config import get_settings
from ccgeom.cycles import Cycle, CycleArc, circle, curvature_of, estimate_curvature, geodesic_from, hypercycle, \
    paracycle, perimeter as cycle_perimeter, sample_arc
from ccgeom.decorators import timer, validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import Composite, ForEach, IsEnum, IsFinite, Min, NotEmpty
from ccgeom.exceptions import GeometryException, OutOfRange, UnsupportedInSpace
from ccgeom.harness.placements import random_direct_isometry
from ccgeom.harness.report import ExperimentReport, TrialRecord, checked_record, merge_reports
from ccgeom.harness.trial_pool import run_trials
from ccgeom.regions import IntersectionStatus, diameter, disk, intersect_regions, moved, perimeter
from ccgeom.space_kernel import IdealPoint, ModelKind, Point, Space, angle_at, angle_distortion, direction_at, \
    distortion_bounds, exp_map, image_angle, log_direction, measured_angle_distortion, origin, rotate_tangent

logger = logging.getLogger(__name__)

DISTORTION_TOLERANCE = 1e-6
ENDPOINT_TOLERANCE = 1e-4
BOUND_SLACK = 1e-9
TANGENT_LAW_TOLERANCE = 1e-8
LENS_FACTOR = 1.05
CURVATURE_TOLERANCE = 1e-3
CURVATURE_SAMPLES = 201
DEFAULT_RADII = {Space.HYPERBOLIC: (0.2, 0.6, 1.0), Space.SPHERE: (0.3, np.pi / 4, 1.2)}
ANGLE_COUNT = 64


def _radius_record(space: Space, index: int, r: float, angles: np.ndarray) -> TrialRecord:
    low, high = distortion_bounds(space, r)
    closed = np.array([angle_distortion(space, r, float(phi)) for phi in angles])
    measured = np.array([measured_angle_distortion(space, r, float(phi)) for phi in angles])
    error = float(np.max(np.abs(measured - closed)))
    at_ends = sorted(measured_angle_distortion(space, r, phi) for phi in (0.0, np.pi / 2))
    missed = max(abs(at_ends[0] - low), abs(at_ends[1] - high))
    violation = float(max(np.max(low - measured), np.max(measured - high), 0.0))
    problems = [
        '' if error <= DISTORTION_TOLERANCE else f'measured differs from the closed form by {error:.3e}',
        '' if missed <= ENDPOINT_TOLERANCE else f'bounds missed at 0 and pi/2 by {missed:.3e}',
        '' if violation <= BOUND_SLACK else f'bounds exceeded by {violation:.3e}',
    ]
    inputs = {'space': space.value, 'r': r, 'bounds': [low, high],
              'min_measured': float(min(np.min(measured), at_ends[0])),
              'max_measured': float(max(np.max(measured), at_ends[1]))}
    return checked_record(index, problems, inputs, notes=f'distortion r={r:.6g}', max_residual=error)


@validate(
    Parameter(name='space', validators=[IsEnum(Space)]),
    Parameter(name='radii', validators=[NotEmpty(), ForEach(Composite([IsFinite(), Min(0)]))], required=False),
    Parameter(name='angles', validators=[NotEmpty(), ForEach(IsFinite())], required=False),
)
def run_distortion(space: Space, radii: Optional[Sequence[float]] = None,
                   angles: Optional[Sequence[float]] = None) -> ExperimentReport:
    """
        Tabulates the measured angle distortion of the collinear model against its closed form, one record per
        radius. The bounds must be attained at phi = 0 and phi = pi/2 and never be exceeded.

        >>> report = run_distortion(Space.SPHERE, radii=[np.pi / 3], angles=[0.0, np.pi / 2])
        >>> report.passed, round(report.records[0].inputs['max_measured'], 3)
        (True, 2.0)
    """

    if space is Space.EUCLIDEAN:
        raise UnsupportedInSpace('The plane is its own collinear model, there is no angle distortion')

    radii = list(DEFAULT_RADII[space] if radii is None else radii)
    angles = np.asarray(np.linspace(0.0, np.pi, ANGLE_COUNT) if angles is None else angles, dtype=float)

    if not radii or not angles.size:
        raise OutOfRange(msg='The radius and angle grids must not be empty', parameter_name='radii')

    records = [_radius_record(space, index, float(r), angles) for index, r in enumerate(radii)]
    return ExperimentReport(experiment=f'distortion_{space.value}', seed=0, records=tuple(records),
                            settings=get_settings().to_dict())


def _tangent_law_trial(index: int, rng: np.random.Generator) -> List[TrialRecord]:
    """ A triangle o p q with d(o, p) = r: the model angle at p satisfies tan phi' = tan phi cosh r. """

    space = Space.HYPERBOLIC
    o = origin(space)
    r = float(rng.uniform(0.1, 2.0))
    p = exp_map(o, direction_at(o, float(rng.uniform(-np.pi, np.pi))), r)
    turn = float(rng.uniform(0.2, np.pi / 2 - 0.2))
    turn = turn if rng.uniform() < 0.5 else np.pi - turn
    q = exp_map(p, rotate_tangent(p, log_direction(p, o), turn), float(rng.uniform(0.2, 1.5)))

    phi = angle_at(p, o, q)
    found = image_angle(p, o, q, ModelKind.COLLINEAR)
    expected = np.tan(phi) * np.cosh(r)
    error = float(abs(np.tan(found) - expected) / abs(expected))
    return [checked_record(index, ['' if error <= TANGENT_LAW_TOLERANCE else f'relative error {error:.3e}'],
                           {'r': r, 'phi': phi, 'model_angle': found}, notes='tangent_law', max_residual=error)]


@timer
@validate(
    Parameter(name='trials', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
)
def run_model_angles(trials: int, seed: int, workers: int = 1) -> ExperimentReport:
    records = run_trials(_tangent_law_trial, trials, seed, workers)
    return ExperimentReport(experiment='model_angles', seed=seed, records=tuple(records),
                            settings=get_settings().to_dict())


def run_angle_distortion_suite(trials: int, seed: int, workers: int = 1) -> ExperimentReport:
    """ The distortion tables of H2 and S2 on their default grids, then the tangent law on random triangles. """

    reports = [run_distortion(Space.HYPERBOLIC), run_distortion(Space.SPHERE), run_model_angles(trials, seed, workers)]
    return merge_reports('angle_distortion', seed, reports)


def centre_offset(space: Space, r: float, a: float) -> float:
    """
        The distance h from the midpoint of a chord of half-length a to the centre of a circle of radius r
        through its ends, by the right-angled triangle of sides h, a and hypotenuse r.

        >>> centre_offset(Space.EUCLIDEAN, 5.0, 3.0)
        4.0
    """

    if space is Space.HYPERBOLIC:
        return float(np.arccosh(np.cosh(r) / np.cosh(a)))

    if space is Space.SPHERE:
        return float(np.arccos(np.cos(r) / np.cos(a)))

    return float(np.sqrt(r ** 2 - a ** 2))


def chord_lens_record(space: Space, index: int, rng: np.random.Generator) -> TrialRecord:
    """ Two congruent disks through the ends of a chord of length epsilon: the lens is about as wide as the chord. """

    epsilon = float(10.0 ** rng.uniform(-4.0, -2.0))
    r = float(rng.uniform(0.05, 0.5))
    h = centre_offset(space, r, epsilon / 2.0)
    o = origin(space)
    normal = direction_at(o, np.pi / 2)
    iso = random_direct_isometry(space, rng, 1.0)
    inputs = {'space': space.value, 'epsilon': epsilon, 'r': r, 'h': h, 'matrix': iso.m.tolist()}

    try:
        result = intersect_regions(moved(disk(exp_map(o, normal, h), r), iso),
                                   moved(disk(exp_map(o, normal, -h), r), iso))

        if result.status is not IntersectionStatus.COMPACT_LENS:
            return checked_record(index, [f'intersection is {result.status.value}'], inputs, notes='chord_lens')

        size, length = diameter(result.region), perimeter(result.region)
    except GeometryException as ex:
        return checked_record(index, [f'{type(ex).__name__}: {ex}'], inputs, notes='chord_lens')

    problems = [
        '' if size <= LENS_FACTOR * epsilon else f'diameter {size:.6e} exceeds {LENS_FACTOR} epsilon',
        '' if size <= length / 2.0 * (1.0 + 1e-9) else f'diameter {size:.6e} exceeds half the perimeter',
    ]
    return checked_record(index, problems, {**inputs, 'perimeter': length}, notes=f'chord_lens {space.value}',
                          diameter=size)


@timer
@validate(
    Parameter(name='trials', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
)
def run_chord_lens(trials: int, seed: int, workers: int = 1) -> ExperimentReport:
    """ Per trial a random small-chord lens in each of the three spaces. """

    def trial(index: int, rng: np.random.Generator) -> List[TrialRecord]:
        return [chord_lens_record(space, index, rng) for space in (Space.SPHERE, Space.EUCLIDEAN, Space.HYPERBOLIC)]

    records = run_trials(trial, trials, seed, workers)
    return ExperimentReport(experiment='chord_lens', seed=seed, records=tuple(records),
                            settings=get_settings().to_dict())


def _random_point(space: Space, rng: np.random.Generator, reach: float) -> Point:
    o = origin(space)
    return exp_map(o, direction_at(o, float(rng.uniform(-np.pi, np.pi))), float(rng.uniform(0.0, reach)))


def _random_line(space: Space, rng: np.random.Generator) -> Cycle:
    p = _random_point(space, rng, 1.0)
    return geodesic_from(p, direction_at(p, float(rng.uniform(-np.pi, np.pi))))


CYCLE_DRAWS: Tuple[Tuple[str, Space, Callable[[np.random.Generator], Cycle]], ...] = (
    ('circle', Space.SPHERE, lambda rng: circle(_random_point(Space.SPHERE, rng, 1.0), float(rng.uniform(0.2, 1.4)))),
    ('circle', Space.EUCLIDEAN, lambda rng: circle(_random_point(Space.EUCLIDEAN, rng, 2.0),
                                                   float(rng.uniform(0.3, 3.0)))),
    ('circle', Space.HYPERBOLIC, lambda rng: circle(_random_point(Space.HYPERBOLIC, rng, 1.0),
                                                    float(rng.uniform(0.2, 2.0)))),
    ('paracycle', Space.HYPERBOLIC, lambda rng: paracycle(IdealPoint.at_angle(float(rng.uniform(-np.pi, np.pi))),
                                                          through=_random_point(Space.HYPERBOLIC, rng, 1.0))),
    ('hypercycle', Space.HYPERBOLIC, lambda rng: hypercycle(_random_line(Space.HYPERBOLIC, rng),
                                                            float(rng.uniform(0.1, 1.5) * rng.choice([-1.0, 1.0])))),
    ('geodesic', Space.SPHERE, lambda rng: _random_line(Space.SPHERE, rng)),
    ('geodesic', Space.EUCLIDEAN, lambda rng: _random_line(Space.EUCLIDEAN, rng)),
    ('geodesic', Space.HYPERBOLIC, lambda rng: _random_line(Space.HYPERBOLIC, rng)),
)


def curvature_record(index: int, label: str, space: Space, cycle: Cycle, rng: np.random.Generator) -> TrialRecord:
    """ The turning-angle estimate on a sampled arc of length at most 0.5 against the closed form. """

    length = 0.5 if not cycle.is_closed else min(0.5, 0.9 * cycle_perimeter(cycle))
    start = float(rng.uniform(-1.0, 1.0))
    points = sample_arc(CycleArc(cycle=cycle, start=start, end=start + length), CURVATURE_SAMPLES)
    expected, estimate = curvature_of(cycle), abs(estimate_curvature(points))
    error = abs(estimate - expected)
    inputs = {'space': space.value, 'kind': label, 'cycle': cycle.to_dict(), 'expected': expected,
              'estimate': estimate}
    return checked_record(index, ['' if error <= CURVATURE_TOLERANCE else f'estimate off by {error:.3e}'], inputs,
                          notes=f'curvature {label} {space.value}', max_residual=error)


@timer
@validate(
    Parameter(name='trials', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
)
def run_curvature(trials: int, seed: int, workers: int = 1) -> ExperimentReport:
    """ Per trial one random cycle of each kind and space. """

    def trial(index: int, rng: np.random.Generator) -> List[TrialRecord]:
        return [curvature_record(index, label, space, draw(rng), rng) for label, space, draw in CYCLE_DRAWS]

    records = run_trials(trial, trials, seed, workers)
    return ExperimentReport(experiment='curvature', seed=seed, records=tuple(records),
                            settings=get_settings().to_dict())
