"""
    Arbitrarily thin quadrangles without congruences. Two geodesics k1, k2 parallel at the ideal point Q
    carry the points x_i, y_i at distance epsilon / 2 apart; the lines x1 x2 and y1 y2 cut out a quadrangle of
    diameter at most epsilon that is symmetric in the axis through Q. Sliding the four points generically along
    k1, k2 destroys every congruence. Replacing k_i by hypercycles at small distances c_i from them gives
    the same conclusion for sides of curvature tanh c_i, which tends to zero.
"""

import logging
from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ccgeom.config import get_settings
from ccgeom.cycles import geodesic_from, geodesic_through, hypercycle
from ccgeom.decorators import frozen_dataclass, retry_func, timer, validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import IsEnum, Max, Min
from ccgeom.exceptions import CaseNotRealized, GeometryException
from ccgeom.harness.placements import side_containing
from ccgeom.harness.report import ExperimentReport, TrialRecord, checked_record, classified_record
from ccgeom.harness.scene import Body, Scene, scene_intersection
from ccgeom.harness.trial_pool import run_trials, trial_rng
from ccgeom.regions import ConvexRegion, HalfDomain, IntersectionStatus, diameter, hausdorff_distance, \
    region_from_halves
from ccgeom.space_kernel import IdealPoint, ModelKind, Point, Space, distance, exp_map, from_model_coordinates, \
    origin
from ccgeom.symmetry import Classification, SymmetryReport, oracle_classify

logger = logging.getLogger(__name__)

H2 = Space.HYPERBOLIC
Q = IdealPoint.at_angle(0.0)
MARGIN_FACTOR = 0.05
AXIS_RESIDUAL = 1e-6


class QuadrangleMode(Enum):
    TWO_ZERO_CURVATURES = 'two_zero_curvatures'
    INFIMUM_ZERO = 'infimum_zero'


@frozen_dataclass
class Corners:
    """ x1, x2 on the rails towards Q, y1, y2 behind them. """

    x1: Point
    x2: Point
    y1: Point
    y2: Point

    def side_lengths(self) -> Tuple[float, float]:
        return distance(self.x1, self.y1), distance(self.x2, self.y2)

    def to_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name).v.tolist() for name in ('x1', 'x2', 'y1', 'y2')}


def towards_ideal(p: Point, q: IdealPoint = Q) -> np.ndarray:
    """ The unit tangent at p of the ray running into q. """

    v = H2.tangent_part(p.v, q.light_vector)
    return v / H2.norm(v)


def base_corners(epsilon: float, s: float) -> Corners:
    """ x1, x2 mirror images in the x-axis of the collinear model, y_i at distance epsilon / 2 behind x_i. """

    h = epsilon / 4.0
    x1, x2 = (Point(v=from_model_coordinates(H2, ModelKind.COLLINEAR, np.array([s, y])), space=H2) for y in (h, -h))
    y1, y2 = (exp_map(x, towards_ideal(x), -epsilon / 2.0) for x in (x1, x2))
    return Corners(x1=x1, x2=x2, y1=y1, y2=y2)


def rails(corners: Corners) -> Tuple[HalfDomain, HalfDomain]:
    """ k1 and k2 with the side holding the model centre: the region between two parallel lines. """

    o = origin(H2)
    return tuple(side_containing(geodesic_from(x, towards_ideal(x)), o) for x in (corners.x1, corners.x2))


def hypercycle_rails(lines: Sequence[HalfDomain], distances: Sequence[float]) -> Tuple[HalfDomain, HalfDomain]:
    """ The distance lines at c_i outside the rails, with their convex side holding the rail. """
    return tuple(HalfDomain(cycle=hypercycle(line.effective, -c)) for line, c in zip(lines, distances))


def cross_lines(corners: Corners) -> Tuple[HalfDomain, HalfDomain]:
    """ The lines x1 x2 and y1 y2 with the side holding the centroid of the four corners. """

    centroid = Point.on(H2, sum(p.v for p in (corners.x1, corners.x2, corners.y1, corners.y2)))
    return side_containing(geodesic_through(corners.x1, corners.x2), centroid), \
        side_containing(geodesic_through(corners.y1, corners.y2), centroid)


def quadrangle_scene(corners: Corners, sides: Sequence[HalfDomain], name: str, seed: int) -> Scene:
    bodies = [Body(region=region_from_halves(H2, sides)), Body(region=region_from_halves(H2, cross_lines(corners)))]
    return Scene(space=H2, bodies=tuple(bodies), name=name, seed=seed)


def quadrangle_of(scene: Scene) -> ConvexRegion:
    result = scene_intersection(scene)

    if result.status is not IntersectionStatus.COMPACT_LENS:
        raise CaseNotRealized(f'The rails and cross lines meet in a {result.status.value} set', attempts=1)

    return result.region


def slide(corners: Corners, shifts: Sequence[float]) -> Corners:
    """ Moves each corner along its rail, towards Q for positive shifts. """

    moved = [exp_map(p, towards_ideal(p), t) for p, t in zip((corners.x1, corners.x2, corners.y1, corners.y2), shifts)]
    return Corners(x1=moved[0], x2=moved[1], y1=moved[2], y2=moved[3])


def generic_corners(corners: Corners, epsilon: float, rng: np.random.Generator) -> Corners:
    """ Slides the corners by up to epsilon / 8 until the rail sides differ in length by the margin. """

    margin = MARGIN_FACTOR * epsilon

    def attempt() -> Corners:
        candidate = slide(corners, rng.uniform(-epsilon / 8.0, epsilon / 8.0, 4))
        a, b = candidate.side_lengths()

        if abs(a - b) < margin:
            raise CaseNotRealized(f'Rail sides {a:.6f} and {b:.6f} differ by less than {margin:.2e}', attempts=1)

        return candidate

    limit = get_settings().resample_limit

    try:
        return retry_func(attempt, attempts=limit, exceptions=CaseNotRealized, logger=logger)
    except CaseNotRealized as ex:
        raise CaseNotRealized(f'No generic quadrangle in {limit} attempts, last: {ex}', attempts=limit)


def _axis_is_mirror_line(report: SymmetryReport) -> str:
    c = report.axes[0].c
    residual = min(np.max(np.abs(c - [0.0, 1.0, 0.0])), np.max(np.abs(c + [0.0, 1.0, 0.0])))
    residual = max(residual, abs(report.axes[0].k))
    return '' if residual <= AXIS_RESIDUAL else f'axis is off the symmetry line of the rails by {residual:.3e}'


def _oracle_agrees(region: ConvexRegion):
    def check(report: SymmetryReport) -> str:
        try:
            found = oracle_classify(region)
        except GeometryException as ex:
            return f'oracle failed: {type(ex).__name__}: {ex}'

        return '' if found.classification is report.classification else f'oracle found {found.classification.value}'

    return check


def _hypercycle_record(trial: int, lines: ConvexRegion, scene: Scene, epsilon: float,
                       inputs: Dict[str, Any]) -> TrialRecord:
    try:
        region = quadrangle_of(scene)
        gap, size = hausdorff_distance(lines, region), diameter(region)
    except GeometryException as ex:
        return checked_record(trial, [f'{type(ex).__name__}: {ex}'], inputs, notes='hypercycle')

    problems = [
        '' if gap <= 3.0 * epsilon else f'Hausdorff distance {gap:.3e} to the line quadrangle exceeds 3 epsilon',
        '' if size <= 3.0 * epsilon else f'diameter {size:.3e} exceeds 3 epsilon',
    ]

    if any(problems):
        return checked_record(trial, problems, inputs, notes='hypercycle', diameter=size)

    return classified_record(trial, region, [Classification.TRIVIAL], {**inputs, 'hausdorff': gap},
                             notes='hypercycle')


def quadrangle_trial(index: int, rng: np.random.Generator, mode: QuadrangleMode, epsilon: float,
                     confirm: bool = False) -> Tuple[Scene, List[TrialRecord]]:
    """ The symmetric base quadrangle, its generic perturbation and, for hypercycle rails, the arc version. """

    s = float(rng.uniform(-epsilon / 8.0, epsilon / 8.0))
    corners = base_corners(epsilon, s)
    lines = rails(corners)
    inputs: Dict[str, Any] = {'mode': mode.value, 'epsilon': epsilon, 's': s}

    try:
        base = quadrangle_of(quadrangle_scene(corners, lines, 'base', index))
        perturbed = generic_corners(corners, epsilon, rng)
        line_scene = quadrangle_scene(perturbed, lines, 'generic', index)
        generic = quadrangle_of(line_scene)
    except GeometryException as ex:
        return Scene(space=H2, bodies=()), [checked_record(index, [f'{type(ex).__name__}: {ex}'], inputs)]

    records = [
        classified_record(index, base, [Classification.AXIAL_ONLY], {**inputs, 'corners': corners.to_dict()},
                          notes='base', check=_axis_is_mirror_line),
        classified_record(index, generic, [Classification.TRIVIAL], {**inputs, 'corners': perturbed.to_dict(),
                                                                     'side_lengths': list(perturbed.side_lengths())},
                          notes='generic', check=_oracle_agrees(generic) if confirm else None),
    ]

    if mode is QuadrangleMode.TWO_ZERO_CURVATURES:
        return line_scene, records

    distances = rng.uniform(0.1, 0.2, 2) * epsilon
    arc_scene = quadrangle_scene(perturbed, hypercycle_rails(lines, distances), 'hypercycle', index)
    records.append(_hypercycle_record(index, generic, arc_scene, epsilon, {**inputs, 'c': distances.tolist()}))
    return arc_scene, records


@validate(
    Parameter(name='mode', validators=[IsEnum(QuadrangleMode, to_upper_case=False)]),
    Parameter(name='epsilon', validators=[Min(0, include_boundary=False), Max(0.1)]),
    Parameter(name='seed', validators=[Min(0)]),
)
def build_thin_quadrangle(mode: QuadrangleMode, epsilon: float, seed: int) -> Tuple[Scene, ExperimentReport]:
    """
        Builds one thin quadrangle and checks it: the base is axially symmetric in the line through Q,
        the generic perturbation has no congruence. Returns the scene of the last quadrangle built.
    """

    scene, records = quadrangle_trial(0, trial_rng(seed, 0), mode, epsilon, confirm=True)
    return scene, ExperimentReport(experiment=f'thin_quadrangle_{mode.value}', seed=seed, records=tuple(records),
                                   settings=get_settings().to_dict())


@timer
@validate(
    Parameter(name='trials', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
    Parameter(name='epsilon', validators=[Min(0, include_boundary=False), Max(0.1)]),
)
def run_thin_quadrangles(trials: int, seed: int, workers: int = 1, epsilon: float = 0.05,
                         confirm: bool = True) -> ExperimentReport:
    """ Line rails and hypercycle rails on alternating trials; the oracle confirms the generic classification. """

    def trial(index: int, rng: np.random.Generator) -> List[TrialRecord]:
        mode = QuadrangleMode.TWO_ZERO_CURVATURES if index % 2 == 0 else QuadrangleMode.INFIMUM_ZERO
        return quadrangle_trial(index, rng, mode, epsilon, confirm)[1]

    records = run_trials(trial, trials, seed, workers)
    return ExperimentReport(experiment='thin_quadrangles', seed=seed, records=tuple(records),
                            settings=get_settings().to_dict())
