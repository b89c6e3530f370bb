"""
    The Euclidean cases: strips, half-planes and disks. Unbounded intersections are never clipped for
    classification; their symmetries are checked on the constraints, with the parallelogram centre and the
    wedge bisector computed exactly.
"""

import logging
from typing import Any, Dict, List, Sequence

import numpy as np

from ccgeom.config import get_settings
from ccgeom.cycles import Cycle, geodesic_line, signed_distance
from ccgeom.decorators import timer, validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import Min
from ccgeom.harness.report import ExperimentReport, TrialRecord, checked_record, classified_record
from ccgeom.harness.trial_pool import run_trials
from ccgeom.regions import ConvexRegion, IntersectionStatus, disk, finite_vertices, half_plane, intersect_regions, \
    strip, vertices_of
from ccgeom.space_kernel import Isometry, Point, Space, point_reflection, reflection
from ccgeom.symmetry import Classification, SymmetryReport, constraint_symmetries

logger = logging.getLogger(__name__)

E2 = Space.EUCLIDEAN
GENERIC_MARGIN = 0.2
OUTER_ANGLE_GAP = 1e-3
AXIS_RESIDUAL = 1e-6


def _unit(angle: float) -> np.ndarray:
    return np.array([np.cos(angle), np.sin(angle)])


def _left_normal(angle: float) -> np.ndarray:
    return np.array([-np.sin(angle), np.cos(angle), 0.0])


def line_at(angle: float, offset: float) -> Cycle:
    """ The line with direction angle at signed distance offset from the origin, positive on its left. """
    return geodesic_line(E2, _left_normal(angle), offset)


def _mirror_in(normal: np.ndarray, through: np.ndarray) -> Isometry:
    normal = normal / np.linalg.norm(normal[:2])
    return reflection(E2, normal, float(normal[:2] @ through))


def strip_pair_record(trial: int, widths: Sequence[float], angles: Sequence[float],
                      offsets: Sequence[float]) -> TrialRecord:
    """ Two crossing strips: a parallelogram, centrally symmetric about the crossing of the midlines. """

    strips = [strip(E2, direction=_unit(a), offset=o, width=w) for w, a, o in zip(widths, angles, offsets)]
    inputs = {'case': 'strip_strip', 'widths': list(widths), 'angles': list(angles), 'offsets': list(offsets)}
    result = intersect_regions(*strips)

    if result.status is not IntersectionStatus.COMPACT_LENS:
        return checked_record(trial, [f'intersection is {result.status.value}'], inputs, notes='strip_strip')

    normals = np.array([_left_normal(a)[:2] for a in angles])
    centre = np.linalg.solve(normals, np.asarray(offsets, dtype=float))
    halves = strips[0].halves + strips[1].halves
    turn = point_reflection(Point.plane(*centre))

    def centre_is_exact(report: SymmetryReport) -> str:
        if not constraint_symmetries(halves, [turn]):
            return 'the midline crossing is no centre of the constraints'

        if np.max(np.abs(report.centre.v[:2] - centre)) > 1e-6 * report.diameter:
            return 'classifier centre differs from the midline crossing'

        return ''

    return classified_record(trial, result.region, [Classification.CENTRAL_ONLY, Classification.CENTRAL_AND_AXIAL,
                                                    Classification.ROTATIONAL],
                             inputs, notes='strip_strip', check=centre_is_exact)


def wedge_record(trial: int, angles: Sequence[float], apex: Sequence[float]) -> TrialRecord:
    """ Two half-planes whose lines cross at apex: a wedge, symmetric in its bisector. """

    p = np.asarray(apex, dtype=float)
    lines = [geodesic_line(E2, _left_normal(a), float(_left_normal(a)[:2] @ p)) for a in angles]
    inputs = {'case': 'wedge', 'angles': list(angles), 'apex': p.tolist()}
    first, second = (half_plane(line) for line in lines)
    result = intersect_regions(first, second)

    if result.status is not IntersectionStatus.UNBOUNDED:
        return checked_record(trial, [f'intersection is {result.status.value}'], inputs, notes='wedge')

    bisector = _mirror_in(lines[0].c - lines[1].c, p)
    corners = finite_vertices(result.region)
    problems = [
        '' if len(corners) == 1 else f'{len(corners)} corners',
        '' if constraint_symmetries(first.halves + second.halves, [bisector]) else 'bisector is no symmetry',
    ]

    if len(corners) == 1 and np.max(np.abs(corners[0].v[:2] - p)) > 1e-9:
        problems.append('corner is not the apex')

    return checked_record(trial, problems, inputs, notes='wedge', classification=Classification.AXIAL_ONLY.value)


def strip_half_plane_record(trial: int, width: float, angle: float, offset: float, crossing: float,
                            line_offset: float) -> TrialRecord:
    """
        A strip cut by a line crossing it at the angle crossing: a half-strip whose two corners have different
        angles unless the crossing is orthogonal, hence no nontrivial congruence.
    """

    band = strip(E2, direction=_unit(angle), offset=offset, width=width)
    cut = half_plane(line_at(angle + crossing, line_offset))
    inputs = {'case': 'strip_half_plane', 'width': width, 'angle': angle, 'offset': offset, 'crossing': crossing,
              'line_offset': line_offset}
    result = intersect_regions(band, cut)

    if result.status is not IntersectionStatus.UNBOUNDED:
        return checked_record(trial, [f'intersection is {result.status.value}'], inputs, notes='strip_half_plane')

    vertices = [v for v in vertices_of(result.region) if v.outer_angle > get_settings().angle_match_tolerance]

    if len(vertices) != 2:
        return checked_record(trial, [f'{len(vertices)} corners'], inputs, notes='strip_half_plane')

    a, b = (v.point.v[:2] for v in vertices)
    middle = (a + b) / 2.0
    chord = b - a
    candidates = [
        point_reflection(Point.plane(*middle)),
        _mirror_in(_left_normal(angle), offset * _left_normal(angle)[:2]),
        _mirror_in(np.array([chord[0], chord[1], 0.0]), middle),
        _mirror_in(cut.halves[0].cycle.c, a),
    ]
    kept = constraint_symmetries(band.halves + cut.halves, candidates)
    gap = abs(vertices[0].outer_angle - vertices[1].outer_angle)
    problems = [
        '' if gap > OUTER_ANGLE_GAP else f'corner angles differ only by {gap:.2e}',
        '' if not kept else f'{len(kept)} nontrivial constraint symmetries',
    ]
    return checked_record(trial, problems, inputs, notes='strip_half_plane',
                          classification=Classification.TRIVIAL.value)


def _axis_through(centre: Point):
    def check(report: SymmetryReport) -> str:
        residual = abs(signed_distance(report.axes[0], centre))
        return '' if residual <= AXIS_RESIDUAL * report.diameter else f'axis misses the centre by {residual:.3e}'

    return check


def disk_cut_record(trial: int, centre: Sequence[float], radius: float, cut: ConvexRegion, case: str,
                    inputs: Dict[str, Any]) -> TrialRecord:
    """ A disk cut off its centre by a strip or half-plane: only the perpendicular through the centre is an axis. """

    middle = Point.plane(*centre)
    result = intersect_regions(disk(middle, radius), cut)
    inputs = {'case': case, 'centre': list(centre), 'radius': radius, **inputs}

    if result.status is not IntersectionStatus.COMPACT_LENS:
        return checked_record(trial, [f'intersection is {result.status.value}'], inputs, notes=case)

    return classified_record(trial, result.region, [Classification.AXIAL_ONLY], inputs, notes=case,
                             check=_axis_through(middle))


def _generic_crossing(rng: np.random.Generator) -> float:
    """ A crossing angle away from 0, pi/2 and pi. """

    low, high = GENERIC_MARGIN + 0.1, np.pi / 2 - GENERIC_MARGIN
    value = float(rng.uniform(low, high))
    return value if rng.uniform() < 0.5 else np.pi - value


def _planar_trial(index: int, rng: np.random.Generator) -> List[TrialRecord]:
    turn = float(rng.uniform(-np.pi, np.pi))
    widths = rng.uniform(0.5, 2.0, 2)
    offsets = rng.uniform(-1.0, 1.0, 2)
    crossing = _generic_crossing(rng)
    records = [strip_pair_record(index, widths.tolist(), [turn, turn + crossing], offsets.tolist())]

    apex = rng.uniform(-2.0, 2.0, 2)
    records.append(wedge_record(index, [turn, turn + _generic_crossing(rng)], apex.tolist()))

    width, offset = float(rng.uniform(0.5, 2.0)), float(rng.uniform(-1.0, 1.0))
    records.append(strip_half_plane_record(index, width, turn, offset, _generic_crossing(rng),
                                           float(rng.uniform(-1.0, 1.0))))

    radius = float(rng.uniform(1.0, 2.0))
    centre, shift = rng.uniform(-1.0, 1.0, 2), float(rng.uniform(0.1, 0.4)) * rng.choice([-1.0, 1.0])
    band_width = float(rng.uniform(0.5, 1.0))
    band_offset = float(_left_normal(turn)[:2] @ centre) + shift
    band = strip(E2, direction=_unit(turn), offset=band_offset, width=band_width)
    records.append(disk_cut_record(index, centre.tolist(), radius, band, 'disk_strip',
                                   {'angle': turn, 'width': band_width, 'offset': band_offset}))

    line_offset = float(_left_normal(turn)[:2] @ centre) + float(rng.uniform(-0.8, 0.8)) * radius
    records.append(disk_cut_record(index, centre.tolist(), radius, half_plane(line_at(turn, line_offset)),
                                   'disk_half_plane', {'angle': turn, 'offset': line_offset}))
    return records


@timer
@validate(
    Parameter(name='trials', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
)
def run_planar_cases(trials: int, seed: int, workers: int = 1) -> ExperimentReport:
    """
        Per trial and with generic random parameters: strip and strip, half-plane and half-plane, strip and
        half-plane, disk and strip, disk and half-plane. Five records per trial.
    """

    records = run_trials(_planar_trial, trials, seed, workers)
    return ExperimentReport(experiment='planar_cases', seed=seed, records=tuple(records),
                            settings=get_settings().to_dict())
