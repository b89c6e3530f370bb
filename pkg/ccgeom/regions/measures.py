"""
    Metric quantities of regions: distances to regions, Hausdorff distance, diameter, perimeter and area,
    and the support and radial functions seen from a base point.
"""

import logging
import math
from typing import Sequence, Tuple

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from ccgeom.config import get_settings
from ccgeom.cycles import Cycle, CycleArc, CycleKind, parameters_of, perimeter as cycle_perimeter, points_at
from ccgeom.exceptions import BaseNotInterior, SpaceMismatch
from ccgeom.regions.boundary import ArcChain, boundary_chain, require_compact
from ccgeom.regions.region import ConvexRegion, contains
from ccgeom.space_kernel import Space, Point, ModelKind, distances, frame_at, log_vector, origin, transvection, \
    to_model_coordinates

logger = logging.getLogger(__name__)


def _arc_samples(chain: ArcChain, per_arc: int) -> Tuple[np.ndarray, list[Tuple[CycleArc, np.ndarray]]]:
    located = [(arc, arc.parameters(per_arc)) for arc in chain.arcs]
    vectors = np.concatenate([points_at(arc.cycle, s) for arc, s in located])
    return vectors, located


def boundary_samples(region: ConvexRegion, per_arc: int = None) -> np.ndarray:
    """ Embedding vectors of points spread along every arc of the closed boundary. """

    chain = require_compact(region, 'Boundary sampling')
    return _arc_samples(chain, per_arc or get_settings().boundary_samples_per_arc)[0]


def arc_distances(arc: CycleArc, x: np.ndarray) -> np.ndarray:
    """ Vectorised distance from points to a cycle arc. """

    x = np.asarray(x, dtype=float)
    cycle = arc.cycle
    foot = parameters_of(cycle, x)

    if cycle.is_closed:
        inside = np.mod(foot - arc.start, cycle_perimeter(cycle)) <= arc.length
    else:
        inside = (foot >= arc.start) & (foot <= arc.end)

    result = np.abs(cycle.signed_distances(x))
    ends = [s for s in (arc.start, arc.end) if math.isfinite(s)]

    if ends:
        to_ends = np.min([distances(arc.space, x, points_at(cycle, s)) for s in ends], axis=0)
        result = np.where(inside, result, to_ends)

    return result


def distances_to_region(region: ConvexRegion, x: np.ndarray) -> np.ndarray:
    """ Vectorised intrinsic distance from points to the region (zero inside). """

    x = np.asarray(x, dtype=float)
    arcs = [arc for chain in boundary_chain(region) for arc in chain.arcs]
    outside = np.min([arc_distances(arc, x) for arc in arcs], axis=0)
    return np.where(region.contains_vectors(x), 0.0, outside)


def distance_to_region(region: ConvexRegion, p: Point) -> float:
    if p.space is not region.space:
        raise SpaceMismatch(f'Point of {p.space.value} measured against a region of {region.space.value}')

    return float(distances_to_region(region, p.v))


def _refine_max(function, arc: CycleArc, s: float, step: float) -> float:
    """ Maximises a function of the arc parameter near s. """

    low, high = max(arc.start, s - step), min(arc.end, s + step)

    if high - low <= 0.0:
        return float(function(s))

    result = minimize_scalar(lambda t: -function(t), bounds=(low, high), method='bounded',
                             options={'xatol': 1e-12})
    return max(float(function(s)), -float(result.fun))


def _directed_hausdorff(a: ConvexRegion, b: ConvexRegion) -> float:
    chain = require_compact(a, 'The Hausdorff distance')
    per_arc = get_settings().boundary_samples_per_arc
    best = 0.0

    for arc in chain.arcs:
        s = arc.parameters(per_arc)
        values = distances_to_region(b, points_at(arc.cycle, s))
        index = int(np.argmax(values))
        step = arc.length / (per_arc - 1)
        refined = _refine_max(lambda t: float(distances_to_region(b, points_at(arc.cycle, t))), arc, s[index], step)
        best = max(best, refined)

    return best


def hausdorff_distance(a: ConvexRegion, b: ConvexRegion) -> float:
    """
        The intrinsic Hausdorff distance of two compact regions. For convex sets the distance from the points of
        one set to the other is largest on the boundary, so boundary samples with a local refinement suffice.
    """

    if a.space is not b.space:
        raise SpaceMismatch(f'Cannot compare a region of {a.space.value} with one of {b.space.value}')

    require_compact(b, 'The Hausdorff distance')
    return max(_directed_hausdorff(a, b), _directed_hausdorff(b, a))


def model_hausdorff_distance(a: ConvexRegion, b: ConvexRegion, base: Point,
                             model: ModelKind = ModelKind.COLLINEAR) -> float:
    """ Euclidean Hausdorff distance of the model images centred at base: the sup-norm of the support gap. """

    angles = _directions(get_settings().support_directions)
    return float(np.max(np.abs(support_profile(a, base, angles, model) - support_profile(b, base, angles, model))))


def diameter(region: ConvexRegion) -> float:
    """ The largest distance between two boundary points, refined from the best sampled pair. """

    chain = require_compact(region, 'The diameter')
    total = get_settings().diameter_samples
    per_arc = max(8, total // len(chain.arcs))
    vectors, located = _arc_samples(chain, per_arc)
    owners = [(arc, s) for arc, parameters in located for s in parameters]
    pairwise = distances(region.space, vectors[:, None, :], vectors[None, :, :])
    i, j = np.unravel_index(int(np.argmax(pairwise)), pairwise.shape)
    (arc_i, s_i), (arc_j, s_j) = owners[i], owners[j]

    def negative(y: np.ndarray) -> float:
        t_i = float(np.clip(y[0], arc_i.start, arc_i.end))
        t_j = float(np.clip(y[1], arc_j.start, arc_j.end))
        return -float(distances(region.space, points_at(arc_i.cycle, t_i), points_at(arc_j.cycle, t_j)))

    result = minimize(negative, x0=np.array([s_i, s_j]), method='Nelder-Mead',
                      options={'xatol': 1e-12, 'fatol': 1e-14})
    return max(float(pairwise[i, j]), -float(result.fun))


def perimeter(region: ConvexRegion) -> float:
    return require_compact(region, 'The perimeter').length


def _directions(count: int) -> np.ndarray:
    return np.linspace(-np.pi, np.pi, count, endpoint=False)


def _tangent_directions(base: Point, angles: np.ndarray) -> np.ndarray:
    e1, e2 = frame_at(base)
    angles = np.asarray(angles, dtype=float)
    return np.cos(angles)[..., None] * e1 + np.sin(angles)[..., None] * e2


def radial_profile(region: ConvexRegion, base: Point, angles: np.ndarray) -> np.ndarray:
    """
        Vectorised radial function: the distance from base to the boundary along the geodesic ray leaving base at
        each angle (measured in frame_at(base)). Infinite where the ray stays inside.
    """

    if base.space is not region.space:
        raise SpaceMismatch(f'Base point of {base.space.value} for a region of {region.space.value}')

    if contains(region, base).margin <= get_settings().membership_margin:
        raise BaseNotInterior('The radial function needs a base point in the interior')

    u = _tangent_directions(base, angles)
    return np.min([_exit_times(cycle, base.v, u) for cycle in region.active_cycles], axis=0)


def radial_function(region: ConvexRegion, base: Point, u: np.ndarray) -> float:
    e1, e2 = frame_at(base)
    space = region.space
    angle = math.atan2(float(space.inner(u, e2)), float(space.inner(u, e1)))
    return float(radial_profile(region, base, np.array([angle]))[0])


def _exit_times(cycle: Cycle, p: np.ndarray, u: np.ndarray) -> np.ndarray:
    """ First positive time at which the ray p + t u (geodesic in the space) leaves the convex side of cycle. """

    space = cycle.space

    if space is Space.EUCLIDEAN:
        planar = cycle.c[:2]
        level = float(cycle.levels(p))
        slope = u[..., :2] @ planar - cycle.c[2] * (u[..., :2] @ p[:2])

        if cycle.kind is CycleKind.GEODESIC:
            return np.where(slope < 0.0, -level / np.where(slope < 0.0, slope, -1.0), np.inf)

        c3 = cycle.c[2]
        return (slope + np.sqrt(slope ** 2 + 2.0 * c3 * level)) / c3

    a = float(space.inner(cycle.c, p))
    b = space.inner(cycle.c, u)
    k = cycle.k

    if space is Space.SPHERE:
        amplitude = np.hypot(a, b)
        phase = np.arctan2(b, a)
        reachable = amplitude > abs(k)
        ratio = np.clip(k / np.where(reachable, amplitude, 1.0), -1.0, 1.0)
        return np.where(reachable, phase + np.arccos(ratio), np.inf)

    # a cosh t + b sinh t = k becomes quadratic * z^2 - k * z + constant = 0 in z = exp(t)
    quadratic = (a + b) / 2.0
    constant = (a - b) / 2.0
    discriminant = k ** 2 - 4.0 * quadratic * constant
    root = np.sqrt(np.maximum(discriminant, 0.0))
    q = (k + np.where(k >= 0.0, 1.0, -1.0) * root) / 2.0

    with np.errstate(divide='ignore', invalid='ignore'):
        candidates = np.stack([q / quadratic, constant / q])

    valid = (discriminant >= 0.0) & np.isfinite(candidates) & (candidates > 1.0)
    z = np.min(np.where(valid, candidates, np.inf), axis=0)
    return np.log(z)


def _polar_weight(space: Space, rho: np.ndarray) -> np.ndarray:
    if space is Space.SPHERE:
        return 1.0 - np.cos(rho)

    if space is Space.HYPERBOLIC:
        return np.cosh(rho) - 1.0

    return rho ** 2 / 2.0


def _vertex_angles(region: ConvexRegion, base: Point) -> list[float]:
    e1, e2 = frame_at(base)
    space = region.space
    found = []

    for chain in boundary_chain(region):
        for arc in chain.arcs:
            w = log_vector(space, base.v, points_at(arc.cycle, arc.start))
            found.append(math.atan2(float(space.inner(w, e2)), float(space.inner(w, e1))))

    return found


def area(region: ConvexRegion, base: Point = None) -> float:
    """
        Area by polar integration around an interior point. The angular range is split at the directions of the
        arc junctions, and each smooth piece is integrated by Gauss-Legendre quadrature.
    """

    require_compact(region, 'The area')
    base = base or region.interior_point
    nodes, weights = np.polynomial.legendre.leggauss(24)
    pieces = max(8, get_settings().area_directions // 64)
    cuts = np.unique(np.concatenate([_directions(pieces), _vertex_angles(region, base), [np.pi]]))
    low, high = cuts[:-1], cuts[1:]
    half = (high - low) / 2.0
    angles = (low + high)[:, None] / 2.0 + half[:, None] * nodes[None, :]
    rho = radial_profile(region, base, angles)
    return float(np.sum(half[:, None] * weights[None, :] * _polar_weight(region.space, rho)))


def support_profile(region: ConvexRegion, base: Point, angles: np.ndarray,
                    model: ModelKind = ModelKind.COLLINEAR) -> np.ndarray:
    """
        Vectorised support function of the model image of the region, with the model centred at base and the
        directions given as angles in frame_at(base).
    """

    chain = require_compact(region, 'The support function')
    vectors, _ = _arc_samples(chain, get_settings().boundary_samples_per_arc)
    image = _centred_model(region.space, base, vectors, model)
    directions = _model_directions(region.space, base, np.asarray(angles, dtype=float))
    return np.max(image @ directions.T, axis=0)


def support_function(region: ConvexRegion, base: Point, u: np.ndarray,
                     model: ModelKind = ModelKind.COLLINEAR) -> float:
    """ Support function of the model image along the unit tangent u at base, refined on the best arc. """

    chain = require_compact(region, 'The support function')
    space = region.space
    e1, e2 = frame_at(base)
    angle = math.atan2(float(space.inner(u, e2)), float(space.inner(u, e1)))
    direction = _model_directions(space, base, np.array([angle]))[0]
    per_arc = get_settings().boundary_samples_per_arc
    best = -math.inf

    for arc in chain.arcs:
        s = arc.parameters(per_arc)

        def height(t):
            return _centred_model(space, base, points_at(arc.cycle, t), model) @ direction

        values = height(s)
        index = int(np.argmax(values))
        step = arc.length / (per_arc - 1)
        best = max(best, _refine_max(lambda t: float(height(t)), arc, float(s[index]), step))

    return best


def _centred_model(space: Space, base: Point, vectors: np.ndarray, model: ModelKind) -> np.ndarray:
    to_centre = transvection(base, origin(space))
    return to_model_coordinates(space, model, to_centre.apply_vectors(vectors))


def _model_directions(space: Space, base: Point, angles: np.ndarray) -> np.ndarray:
    """ Planar unit directions at the model centre matching the tangent angles at base. """

    to_centre = transvection(base, origin(space))
    tangents = to_centre.apply_tangent(_tangent_directions(base, angles))
    planar = tangents[..., :2]
    return planar / np.linalg.norm(planar, axis=-1, keepdims=True)


def support_gap(a: ConvexRegion, b: ConvexRegion, base: Point, angles: Sequence[float]) -> np.ndarray:
    return support_profile(a, base, np.asarray(angles)) - support_profile(b, base, np.asarray(angles))
