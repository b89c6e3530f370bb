"""
    Regions bounded by congruent hypercycles. Such a region K is the set of points within distance l of its
    core K0, the region cut out by the base lines. Two copies placed so that the convex sides K1*, L1* of one
    boundary component each share exactly one ideal point meet in M = K1* n L1*, whose single ideal point
    rules out a centre of symmetry.
"""

import logging
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ccgeom.config import get_settings
from ccgeom.cycles import hypercycle
from ccgeom.decorators import timer, validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import Min
from ccgeom.exceptions import GeometryException, OutOfRange
from ccgeom.harness.line_pairs import ideal_chord, polar
from ccgeom.harness.placements import isometry_inputs, side_containing
from ccgeom.harness.report import ExperimentReport, TrialRecord, checked_record
from ccgeom.harness.scene import Body, Scene, scene_intersection
from ccgeom.harness.trial_pool import run_trials, trial_rng
from ccgeom.regions import ConvexRegion, HalfDomain, core, distances_to_region, ideal_point_count, moved, \
    random_interior_points, region_from_halves
from ccgeom.space_kernel import Space, origin, rotation_about

logger = logging.getLogger(__name__)

H2 = Space.HYPERBOLIC
SAMPLES = 10_000
SAMPLE_TOLERANCE = 1e-8
DISTANCES = (0.25, 0.5, 1.0)


def hypercycle_body(l: float, a: float, b: float) -> ConvexRegion:
    """
        The points within distance l of the band between the chords joining the ideal points at -a, a and
        at -b, b, for 0 < b < a < pi/2. Its first constraint is the component around the outer chord.
    """

    between = polar((np.cos(a) + np.cos(b)) / 2.0, 0.0)
    bases = [side_containing(ideal_chord(-angle, angle), between).effective for angle in (a, b)]
    return region_from_halves(H2, [HalfDomain(cycle=hypercycle(base, -l)) for base in bases])


def first_component(region: ConvexRegion) -> ConvexRegion:
    """ The closed convex set bounded by the first boundary component alone. """
    return region_from_halves(H2, region.placed_halves[:1])


def agreement(expected: np.ndarray, found: np.ndarray, slack: np.ndarray) -> Tuple[int, np.ndarray]:
    """ Samples where two memberships agree; a sample within the tolerance of a boundary agrees either way. """

    agrees = (expected == found) | (slack <= SAMPLE_TOLERANCE)
    return int(np.sum(agrees)), np.flatnonzero(~agrees)


def parallel_domain_record(trial: int, body: ConvexRegion, l: float, rng: np.random.Generator,
                           inputs: Dict[str, Any]) -> TrialRecord:
    """ Within distance l of the core exactly when inside the region. """

    x = random_interior_points(body, rng, SAMPLES, l + 2.0)
    gaps = distances_to_region(core(body), x)
    margins = body.margins(x)
    count, misses = agreement(gaps <= l, margins >= 0.0, np.minimum(np.abs(gaps - l), np.abs(margins)))

    if misses.size:
        logger.info(f'Parallel domain disagrees at {misses.size} samples, first {x[misses[0]].tolist()}')

    return checked_record(trial, ['' if count == SAMPLES else f'{SAMPLES - count} disagreeing samples'],
                          {**inputs, 'agreement': count, 'samples': SAMPLES}, notes='parallel_domain')


def intersection_identity_record(trial: int, scene: Scene, m: ConvexRegion, rng: np.random.Generator,
                                 inputs: Dict[str, Any]) -> TrialRecord:
    """ (phi K) n (psi L) and M have the same points. """

    placed = scene.placed_regions
    x = random_interior_points(m, rng, SAMPLES, 3.0)
    both = np.min([region.margins(x) for region in placed], axis=0)
    in_m = m.margins(x)
    count, misses = agreement(both >= 0.0, in_m >= 0.0, np.minimum(np.abs(both), np.abs(in_m)))

    if misses.size:
        logger.info(f'Intersection identity fails at {misses.size} samples, first {x[misses[0]].tolist()}')

    return checked_record(trial, ['' if count == SAMPLES else f'{SAMPLES - count} disagreeing samples'],
                          {**inputs, 'agreement': count, 'samples': SAMPLES}, notes='intersection_identity')


def single_ideal_point_record(trial: int, scene: Scene, m: ConvexRegion, inputs: Dict[str, Any]) -> TrialRecord:
    try:
        result = scene_intersection(scene)
        counts = [ideal_point_count(m), ideal_point_count(result.region) if result.has_interior else 0.0]
    except GeometryException as ex:
        return checked_record(trial, [f'{type(ex).__name__}: {ex}'], inputs, notes='ideal_point')

    problems = ['' if counts[0] == 1 else f'M has {counts[0]} ideal points',
                '' if counts[1] == 1 else f'the intersection has {counts[1]} ideal points']
    return checked_record(trial, problems, {**inputs, 'ideal_points': counts}, notes='ideal_point; no centre',
                          classification='no_central_symmetry')


def parallel_domain_trial(index: int, rng: np.random.Generator, l: float) -> Tuple[Scene, List[TrialRecord]]:
    if not l > 0.0:
        raise OutOfRange(msg=f'Hypercycles need a positive distance, got {l}', parameter_name='l', value=l)

    a = float(rng.uniform(0.6, 1.2))
    b = a * float(rng.uniform(0.3, 0.6))
    omega = float(rng.uniform(-np.pi, np.pi))
    o = origin(H2)
    phi, psi = rotation_about(o, omega), rotation_about(o, omega + 2.0 * a)
    body = hypercycle_body(l, a, b)
    scene = Scene(space=H2, bodies=(Body(region=body, placement=phi), Body(region=body, placement=psi)),
                  name=f'parallel_domains_{l}')
    inputs = {'l': l, 'a': a, 'b': b, 'phi': isometry_inputs(phi), 'psi': isometry_inputs(psi)}

    try:
        m = region_from_halves(H2, [*first_component(moved(body, phi)).halves,
                                    *first_component(moved(body, psi)).halves])
    except GeometryException as ex:
        return scene, [checked_record(index, [f'M: {type(ex).__name__}: {ex}'], inputs)]

    return scene, [
        parallel_domain_record(index, body, l, rng, inputs),
        intersection_identity_record(index, scene, m, rng, inputs),
        single_ideal_point_record(index, scene, m, inputs),
    ]


@validate(Parameter(name='seed', validators=[Min(0)]))
def build_parallel_domains(l: float, seed: int) -> Tuple[Scene, ExperimentReport]:
    """ One placed pair at distance l with its three checks. Raises OutOfRange unless l > 0. """

    scene, records = parallel_domain_trial(0, trial_rng(seed, 0), l)
    return scene, ExperimentReport(experiment='parallel_domains', seed=seed, records=tuple(records),
                                   settings=get_settings().to_dict())


@timer
@validate(
    Parameter(name='trials', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
)
def run_parallel_domains(trials: int, seed: int, workers: int = 1,
                         distances: Sequence[float] = DISTANCES) -> ExperimentReport:
    for l in distances:
        if not l > 0.0:
            raise OutOfRange(msg=f'Hypercycles need a positive distance, got {l}', parameter_name='l', value=l)

    def trial(index: int, rng: np.random.Generator) -> List[TrialRecord]:
        return [record for l in distances for record in parallel_domain_trial(index, rng, l)[1]]

    records = run_trials(trial, trials, seed, workers)
    return ExperimentReport(experiment='parallel_domains', seed=seed, records=tuple(records),
                            settings=get_settings().to_dict())
