"""
    The corner-analysis classifier against the brute-force oracle on a generated corpus of disks, lenses, boxes,
    triangles and thin quadrangles. Both must report the same classification.
"""

import logging
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from ccgeom.config import get_settings
from ccgeom.decorators import timer, validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import Min
from ccgeom.exceptions import AmbiguousNearTolerance, CaseNotRealized, GeometryException
from ccgeom.harness.report import ExperimentReport, TrialRecord, TrialStatus, checked_record
from ccgeom.harness.thin_quadrangle import base_corners, generic_corners, quadrangle_of, quadrangle_scene, rails
from ccgeom.harness.trial_pool import run_trials
from ccgeom.regions import ConvexRegion, IntersectionStatus, disk, intersect_regions, polygon, strip
from ccgeom.space_kernel import Point, Space, direction_at, exp_map, origin
from ccgeom.symmetry import classify, oracle_classify

logger = logging.getLogger(__name__)

CorpusEntry = Tuple[str, Dict[str, Any], ConvexRegion]


def _polar(space: Space, angle: float, radius: float) -> Point:
    o = origin(space)
    return exp_map(o, direction_at(o, angle), radius)


def random_disk(rng: np.random.Generator) -> CorpusEntry:
    space = Space(rng.choice([s.value for s in Space]))
    r = float(rng.uniform(0.3, 1.2))
    centre = _polar(space, float(rng.uniform(-np.pi, np.pi)), float(rng.uniform(0.0, 0.5)))
    return 'disk', {'space': space.value, 'r': r}, disk(centre, r)


def random_lens(rng: np.random.Generator) -> CorpusEntry:
    space = Space(rng.choice([Space.EUCLIDEAN.value, Space.HYPERBOLIC.value]))
    radii = (1.0, float(rng.uniform(0.6, 1.0)))
    gap = float(rng.uniform(0.5, 1.2))
    heading = float(rng.uniform(-np.pi, np.pi))
    result = intersect_regions(disk(_polar(space, heading, gap / 2.0), radii[0]),
                               disk(_polar(space, heading + np.pi, gap / 2.0), radii[1]))

    if result.status is not IntersectionStatus.COMPACT_LENS:
        raise CaseNotRealized(f'The disks meet in a {result.status.value} set', attempts=1)

    return 'lens', {'space': space.value, 'radii': list(radii), 'gap': gap}, result.region


def random_box(rng: np.random.Generator) -> CorpusEntry:
    """ A strip clipped by a perpendicular strip to a rectangle. """

    angle = float(rng.uniform(0.0, np.pi))
    widths = rng.uniform(0.5, 2.0, 2)
    direction = np.array([np.cos(angle), np.sin(angle)])
    result = intersect_regions(strip(Space.EUCLIDEAN, direction, 0.0, float(widths[0])),
                               strip(Space.EUCLIDEAN, [-direction[1], direction[0]], 0.0, float(widths[1])))
    return 'box', {'angle': angle, 'widths': widths.tolist()}, result.region


def random_triangle(rng: np.random.Generator) -> CorpusEntry:
    space = Space(rng.choice([Space.EUCLIDEAN.value, Space.HYPERBOLIC.value]))
    angles = float(rng.uniform(-np.pi, np.pi)) + np.arange(3) * 2.0 * np.pi / 3.0 + rng.uniform(-0.4, 0.4, 3)
    radius = float(rng.uniform(0.5, 1.5))
    vertices = [_polar(space, float(angle), radius) for angle in angles]
    return 'triangle', {'space': space.value, 'angles': angles.tolist(), 'radius': radius}, polygon(space, vertices)


def random_thin_quadrangle(rng: np.random.Generator) -> CorpusEntry:
    epsilon = 0.05
    corners = base_corners(epsilon, float(rng.uniform(-epsilon / 8.0, epsilon / 8.0)))
    perturbed = generic_corners(corners, epsilon, rng)
    region = quadrangle_of(quadrangle_scene(perturbed, rails(corners), 'oracle', 0))
    return 'thin_quadrangle', {'epsilon': epsilon, 'corners': perturbed.to_dict()}, region


CORPUS: Tuple[Callable[[np.random.Generator], CorpusEntry], ...] = (
    random_disk, random_lens, random_box, random_triangle, random_thin_quadrangle,
)


def agreement_record(index: int, label: str, inputs: Dict[str, Any], region: ConvexRegion) -> TrialRecord:
    inputs = {**inputs, 'shape': label}

    try:
        report = classify(region)
    except AmbiguousNearTolerance as ex:
        return TrialRecord(trial=index, status=TrialStatus.AMBIGUOUS, inputs=inputs, notes=f'{label}; {ex}')

    try:
        found = oracle_classify(region)
    except GeometryException as ex:
        return checked_record(index, [f'oracle failed: {type(ex).__name__}: {ex}'], inputs, notes=label,
                              classification=report.classification.value)

    problem = '' if found.classification is report.classification else f'oracle found {found.classification.value}'
    return checked_record(index, [problem], inputs, notes=label, classification=report.classification.value,
                          max_residual=report.max_residual, diameter=report.diameter)


def _oracle_trial(index: int, rng: np.random.Generator) -> List[TrialRecord]:
    records = []

    for draw in CORPUS:
        try:
            label, inputs, region = draw(rng)
        except GeometryException as ex:
            records.append(checked_record(index, [f'{type(ex).__name__}: {ex}'], {}, notes=draw.__name__))
            continue

        records.append(agreement_record(index, label, inputs, region))

    return records


@timer
@validate(
    Parameter(name='trials', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
)
def run_oracle_agreement(trials: int, seed: int, workers: int = 1) -> ExperimentReport:
    """ One shape of each corpus family per trial. """

    records = run_trials(_oracle_trial, trials, seed, workers)
    return ExperimentReport(experiment='oracle_agreement', seed=seed, records=tuple(records),
                            settings=get_settings().to_dict())
