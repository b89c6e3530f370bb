"""
    Arclength parametrisations of cycles. The positive direction keeps the convex side on the left,
    so closed cycles run counterclockwise around what they bound.
    Parameter zero sits at a canonical anchor: the frame direction of a circle centre, and for unbounded
    cycles the point of the cycle (or of its base line) nearest to the model centre.
"""

from typing import Optional, Tuple

import numpy as np

from ccgeom.cycles.cycle import Cycle, CycleKind
from ccgeom.exceptions import UnsupportedCycle
from ccgeom.space_kernel import Space, Point, IdealPoint, origin, frame_at, oriented_angle, log_vector, \
    distances


def _circle_frame(cycle: Cycle) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    centre = cycle.centre
    e1, e2 = frame_at(centre)
    return centre.v, e1, e2


def _line_frame(space: Space, normal: np.ndarray, offset: float) -> Tuple[np.ndarray, np.ndarray]:
    """ Anchor point (nearest to o) and unit direction of the geodesic <normal, x> = offset, normal on its left. """

    if space is Space.EUCLIDEAN:
        anchor = np.array([offset * normal[0], offset * normal[1], 1.0])
        return anchor, np.array([normal[1], -normal[0], 0.0])

    o = origin(space).v
    anchor = o - float(space.inner(o, normal)) * normal

    if space is Space.SPHERE and np.linalg.norm(anchor) < 1e-9:
        anchor = np.cross(normal, [0.0, 1.0, 0.0] if abs(normal[1]) < 0.9 else [1.0, 0.0, 0.0])

    anchor = space.project(anchor)
    return anchor, -space.rot90(anchor, normal)


def _paracycle_orbit(cycle: Cycle) -> Tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    """ Start point x0 (on the ray from o to the centre) and first and second derivatives of the parabolic orbit. """

    space = Space.HYPERBOLIC
    light = cycle.c
    q = light[:2]
    h = cycle.horo_level
    t0 = -np.log(h)
    x0 = np.cosh(t0) * origin(space).v + np.sinh(t0) * np.array([q[0], q[1], 0.0])
    w = np.array([-q[1], q[0], 0.0])

    def generator(y: np.ndarray) -> np.ndarray:
        return w * space.inner(light, y) - light * space.inner(w, y)

    first = generator(x0)
    return x0, first, generator(first), h


def _trig(space: Space) -> Tuple:
    return (np.cos, np.sin) if space is Space.SPHERE else (np.cosh, np.sinh)


def speed(cycle: Cycle) -> float:
    """ Arclength per unit of the natural angle / distance parameter. """

    kind = cycle.kind

    if kind is CycleKind.CIRCLE:
        r = cycle.radius

        if cycle.space is Space.EUCLIDEAN:
            return r

        return float(np.sin(r) if cycle.space is Space.SPHERE else np.sinh(r))

    if kind is CycleKind.HYPERCYCLE:
        return float(np.cosh(cycle.distance))

    return 1.0


def perimeter(cycle: Cycle) -> float:
    if not cycle.is_closed:
        return float('inf')

    return 2.0 * np.pi * speed(cycle)


def points_at(cycle: Cycle, s: np.ndarray) -> np.ndarray:
    """ Vectorised arclength parametrisation, returning embedding vectors. """

    s = np.asarray(s, dtype=float)[..., None]
    space = cycle.space
    kind = cycle.kind
    cos, sin = _trig(space)

    if kind is CycleKind.CIRCLE:
        centre, e1, e2 = _circle_frame(cycle)
        theta = s / speed(cycle)

        if space is Space.EUCLIDEAN:
            return centre + cycle.radius * (np.cos(theta) * e1 + np.sin(theta) * e2)

        r = cycle.radius
        points = cos(r) * centre + sin(r) * (np.cos(theta) * e1 + np.sin(theta) * e2)
        return space.project(points)

    if kind is CycleKind.PARACYCLE:
        x0, first, second, h = _paracycle_orbit(cycle)
        sigma = s / h
        return space.project(x0 + sigma * first + 0.5 * sigma ** 2 * second)

    base = cycle.base_geodesic() if kind is CycleKind.HYPERCYCLE else cycle
    anchor, direction = _line_frame(space, base.c, base.k)

    if space is Space.EUCLIDEAN:
        return anchor + s * direction

    if kind is CycleKind.HYPERCYCLE:
        t = s / speed(cycle)
        along = np.cosh(t) * anchor + np.sinh(t) * direction
        return space.project(cycle.k * cycle.c + np.cosh(cycle.distance) * along)

    return space.project(cos(s) * anchor + sin(s) * direction)


def point_at(cycle: Cycle, s: float) -> Point:
    return Point(v=points_at(cycle, s), space=cycle.space)


def parameters_of(cycle: Cycle, x: np.ndarray) -> np.ndarray:
    """
        Vectorised inverse of points_at. A point off the cycle gets the parameter of its foot, the point of the
        cycle nearest to it.
    """

    x = np.asarray(x, dtype=float)
    space = cycle.space
    kind = cycle.kind

    if kind is CycleKind.CIRCLE:
        centre, e1, e2 = _circle_frame(cycle)
        offset = x - centre if space is Space.EUCLIDEAN else x
        theta = np.arctan2(space.inner(offset, e2), space.inner(offset, e1))
        return np.mod(theta, 2.0 * np.pi) * speed(cycle)

    if kind is CycleKind.PARACYCLE:
        q = cycle.c[:2]
        w = np.array([-q[1], q[0], 0.0])
        return cycle.horo_level * space.inner(x, w) / space.inner(x, cycle.c)

    base = cycle.base_geodesic() if kind is CycleKind.HYPERCYCLE else cycle
    anchor, direction = _line_frame(space, base.c, base.k)

    if space is Space.EUCLIDEAN:
        return (x[..., 0] - anchor[0]) * direction[0] + (x[..., 1] - anchor[1]) * direction[1]

    if space is Space.SPHERE:
        return np.mod(np.arctan2(space.inner(x, direction), space.inner(x, anchor)), 2.0 * np.pi)

    spread = np.sqrt(1.0 + space.inner(x, base.c) ** 2)
    return speed(cycle) * np.arcsinh(space.inner(x, direction) / spread)


def parameter_of(cycle: Cycle, p: Point) -> float:
    return float(parameters_of(cycle, p.v))


def inward_normals(cycle: Cycle, x: np.ndarray) -> np.ndarray:
    """ Unit tangent vectors at points x pointing into the convex side of the cycle through them. """

    x = np.asarray(x, dtype=float)
    space = cycle.space

    if space is Space.EUCLIDEAN:
        gradient = np.zeros(np.broadcast_shapes(x.shape, (3,)))
        gradient[..., 0] = cycle.c[0] - cycle.c[2] * x[..., 0]
        gradient[..., 1] = cycle.c[1] - cycle.c[2] * x[..., 1]
    else:
        gradient = space.tangent_part(x, np.broadcast_to(cycle.c, x.shape))

    return gradient / space.norm(gradient)[..., None]


def tangents_at(cycle: Cycle, x: np.ndarray) -> np.ndarray:
    """ Unit tangents in the positive direction (convex side on the left). """

    x = np.asarray(x, dtype=float)
    return -cycle.space.rot90(x, inward_normals(cycle, x))


def tangent_at(cycle: Cycle, p: Point) -> np.ndarray:
    return tangents_at(cycle, p.v)


def ideal_endpoints(cycle: Cycle) -> Tuple[Optional[IdealPoint], Optional[IdealPoint]]:
    """ The ideal points reached for s -> -inf and s -> +inf (H2); (None, None) for closed cycles and E2 lines. """

    if cycle.is_closed or cycle.space is not Space.HYPERBOLIC:
        return None, None

    if cycle.kind is CycleKind.PARACYCLE:
        return cycle.ideal_centre, cycle.ideal_centre

    base = cycle.base_geodesic()
    anchor, direction = _line_frame(cycle.space, base.c, 0.0)
    return IdealPoint.from_light_vector(anchor - direction), IdealPoint.from_light_vector(anchor + direction)


def turning_curvatures(space: Space, x: np.ndarray) -> np.ndarray:
    """ Discrete geodesic curvature at the interior vertices of a sampled curve: turning angle per arclength. """

    x = np.asarray(x, dtype=float)
    previous, middle, following = x[:-2], x[1:-1], x[2:]
    incoming = -log_vector(space, middle, previous)
    outgoing = log_vector(space, middle, following)
    turning = oriented_angle(space, middle, incoming, outgoing)
    step = (distances(space, previous, middle) + distances(space, middle, following)) / 2.0
    return turning / step


def estimate_curvature(points: list[Point]) -> float:
    """ Mean turning-angle curvature estimate of a densely sampled curve. """

    if len(points) < 3:
        raise UnsupportedCycle('The curvature estimator needs at least three samples')

    space = points[0].space
    return float(np.mean(turning_curvatures(space, np.array([p.v for p in points]))))
