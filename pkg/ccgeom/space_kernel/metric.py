from typing import Tuple

import numpy as np

from ccgeom.exceptions import DegenerateAngle, DegenerateGeodesic
from ccgeom.space_kernel.point import Point, origin
from ccgeom.space_kernel.space import Space

_ANTIPODAL_TOLERANCE = 1e-12
_ZERO_LEG = 1e-14


def distances(space: Space, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """ Vectorised intrinsic distance between embedding vectors along the last axis. """

    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)

    if space is Space.SPHERE:
        return np.arctan2(np.linalg.norm(np.cross(x, y), axis=-1), np.sum(x * y, axis=-1))

    if space is Space.HYPERBOLIC:
        diff = x - y
        return 2.0 * np.arcsinh(np.sqrt(np.maximum(space.inner(diff, diff), 0.0)) / 2.0)

    return np.hypot(x[..., 0] - y[..., 0], x[..., 1] - y[..., 1])


def distance(a: Point, b: Point) -> float:
    """
        >>> distance(Point.plane(0.0, 0.0), Point.plane(3.0, 4.0))
        5.0
    """

    a.check_space(b)
    return float(distances(a.space, a.v, b.v))


def exp_vectors(space: Space, p: np.ndarray, direction: np.ndarray, t: np.ndarray) -> np.ndarray:
    """ Points at signed distance t from p along the unit tangent direction. Broadcasts over t. """

    t = np.asarray(t, dtype=float)[..., None]
    p = np.asarray(p, dtype=float)
    direction = np.asarray(direction, dtype=float)

    if space is Space.SPHERE:
        return np.cos(t) * p + np.sin(t) * direction

    if space is Space.HYPERBOLIC:
        return np.cosh(t) * p + np.sinh(t) * direction

    return p + t * direction


def exp_map(p: Point, direction: np.ndarray, t: float) -> Point:
    v = exp_vectors(p.space, p.v, direction, t)
    return Point(v=p.space.project(v), space=p.space)


def log_vector(space: Space, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """ Unnormalised tangent at p pointing towards q (zero if they coincide). """
    return space.tangent_part(p, q)


def log_direction(p: Point, q: Point) -> np.ndarray:
    """ Unit tangent vector at p pointing towards q. """

    p.check_space(q)
    u = log_vector(p.space, p.v, q.v)
    length = float(p.space.norm(u))

    if length < _ZERO_LEG:
        raise DegenerateGeodesic(f'No direction from a point to itself (or to its antipode): {p.v}, {q.v}')

    return u / length


def geodesic_point(a: Point, b: Point, t: float) -> Point:
    """
        The point of the segment [a, b] at the fraction t of its length.

        >>> geodesic_point(Point.plane(0.0, 0.0), Point.plane(2.0, 0.0), 0.5).v
        array([1., 0., 1.])
    """

    a.check_space(b)
    space = a.space

    if space is Space.EUCLIDEAN:
        return Point.plane(*((1.0 - t) * a.v[:2] + t * b.v[:2]))

    if space is Space.SPHERE and float(a.v @ b.v) < -1.0 + _ANTIPODAL_TOLERANCE:
        raise DegenerateGeodesic('The segment between antipodal points is not unique')

    d = float(distances(space, a.v, b.v))

    if d == 0.0:
        return a

    if space is Space.SPHERE:
        weights = np.sin((1.0 - t) * d), np.sin(t * d)
        scale = np.sin(d)
    else:
        weights = np.sinh((1.0 - t) * d), np.sinh(t * d)
        scale = np.sinh(d)

    v = (weights[0] * a.v + weights[1] * b.v) / scale
    return Point(v=space.project(v), space=space)


def midpoint(a: Point, b: Point) -> Point:
    return geodesic_point(a, b, 0.5)


def unit_tangent_angle(space: Space, u: np.ndarray, w: np.ndarray) -> np.ndarray:
    """ Unsigned angle in [0, pi] between tangent vectors at the same point. """

    u = u / space.norm(u)[..., None]
    w = w / space.norm(w)[..., None]
    return 2.0 * np.arctan2(space.norm(u - w), space.norm(u + w))


def oriented_angle(space: Space, at: np.ndarray, u: np.ndarray, w: np.ndarray) -> np.ndarray:
    """ Signed angle in (-pi, pi] turning the tangent u into w at the point at (positive counterclockwise). """
    return np.arctan2(space.inner(space.rot90(at, u), w), space.inner(u, w))


def angle_at(apex: Point, p: Point, q: Point) -> float:
    """
        The angle of the triangle (p, apex, q) at apex.

        >>> import math
        >>> math.isclose(angle_at(Point.plane(0, 0), Point.plane(1, 0), Point.plane(0, 1)), math.pi / 2)
        True
    """

    apex.check_space(p)
    apex.check_space(q)
    space = apex.space
    u = log_vector(space, apex.v, p.v)
    w = log_vector(space, apex.v, q.v)

    if space.norm(u) < _ZERO_LEG or space.norm(w) < _ZERO_LEG:
        raise DegenerateAngle('Angle with a zero-length leg is undefined')

    return float(unit_tangent_angle(space, u, w))


def rotate_tangent(p: Point, v: np.ndarray, angle: float) -> np.ndarray:
    """ Rotates a tangent vector at p counterclockwise by angle. """
    return np.cos(angle) * np.asarray(v, dtype=float) + np.sin(angle) * p.space.rot90(p.v, v)


def transport_vectors(space: Space, a: np.ndarray, b: np.ndarray, v: np.ndarray) -> np.ndarray:
    """ Parallel transport of tangent vectors v at a along the geodesic to b. """

    if space is Space.EUCLIDEAN:
        return np.asarray(v, dtype=float)

    kappa = space.curvature
    denominator = 1.0 + kappa * space.inner(a, b)

    if np.any(np.abs(denominator) < _ANTIPODAL_TOLERANCE):
        raise DegenerateGeodesic('Parallel transport to the antipode is not unique')

    factor = kappa * space.inner(v, b) / denominator
    return v - factor[..., None] * (np.asarray(a) + np.asarray(b))


def tangent_frame(p: Point) -> Tuple[np.ndarray, np.ndarray]:
    """
        Positively oriented orthonormal frame at p, transported from the standard frame at the model centre.
        Undefined at the north pole of S2.
    """

    o = origin(p.space)
    e1 = transport_vectors(p.space, o.v, p.v, np.array([1.0, 0.0, 0.0]))
    return e1, p.space.rot90(p.v, e1)


def frame_at(p: Point) -> Tuple[np.ndarray, np.ndarray]:
    """ tangent_frame(p), with a fixed positive frame at the north pole of S2. """

    try:
        return tangent_frame(p)
    except DegenerateGeodesic:
        e1 = np.array([1.0, 0.0, 0.0])
        return e1, p.space.rot90(p.v, e1)


def direction_at(p: Point, angle: float) -> np.ndarray:
    """ Unit tangent at p making the given angle with the first vector of frame_at(p). """

    e1, e2 = frame_at(p)
    return np.cos(angle) * e1 + np.sin(angle) * e2


if __name__ == '__main__':
    import doctest
    doctest.testmod(verbose=False, optionflags=doctest.ELLIPSIS)
