"""
    Collinear (Beltrami-Klein / gnomonic) and conformal (Poincare / stereographic) models of S2 and H2.
    Both are centred at the model centre o, with unit scale there. On E2 both models are the plane itself.
"""

import numpy as np

from ccgeom.exceptions import OutsideModelDomain
from ccgeom.space_kernel.metric import distances, log_vector
from ccgeom.space_kernel.point import ModelKind, ModelPoint, Point
from ccgeom.space_kernel.space import Space


def to_model_coordinates(space: Space, model: ModelKind, v: np.ndarray) -> np.ndarray:
    """ Vectorised model coordinates of embedding vectors (last axis). """

    v = np.asarray(v, dtype=float)
    planar = v[..., :2]

    if space is Space.EUCLIDEAN:
        return planar.copy()

    if space is Space.HYPERBOLIC:
        denominator = v[..., 2:3] if model is ModelKind.COLLINEAR else 1.0 + v[..., 2:3]
        return planar / denominator

    if model is ModelKind.COLLINEAR:
        if np.any(v[..., 2] >= -1e-15):
            raise OutsideModelDomain('The collinear model of S2 only shows the open southern hemisphere')

        return -planar / v[..., 2:3]

    if np.any(v[..., 2] >= 1.0 - 1e-15):
        raise OutsideModelDomain('The north pole has no image in the conformal model of S2')

    return 2.0 * planar / (1.0 - v[..., 2:3])


def from_model_coordinates(space: Space, model: ModelKind, u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    squared = np.sum(u * u, axis=-1)[..., None]
    shape = u.shape[:-1] + (3,)
    v = np.empty(shape)

    if space is Space.EUCLIDEAN:
        v[..., :2] = u
        v[..., 2] = 1.0
        return v

    if space is Space.HYPERBOLIC:
        if np.any(squared >= 1.0):
            raise OutsideModelDomain('Model coordinates of H2 must lie in the open unit disk')

        if model is ModelKind.COLLINEAR:
            v[..., :2] = u
            v[..., 2:] = 1.0
            return v / np.sqrt(1.0 - squared)

        v[..., :2] = 2.0 * u
        v[..., 2:] = 1.0 + squared
        return v / (1.0 - squared)

    if model is ModelKind.COLLINEAR:
        v[..., :2] = u
        v[..., 2:] = -1.0
        return v / np.sqrt(1.0 + squared)

    t = 4.0 / (squared + 4.0)
    v[..., :2] = t * u
    v[..., 2:] = 1.0 - 2.0 * t
    return v


def to_model(p: Point, model: ModelKind) -> ModelPoint:
    """
        >>> import math
        >>> r = 1.0
        >>> p = Point(v=[math.sinh(r), 0.0, math.cosh(r)], space=Space.HYPERBOLIC)
        >>> math.isclose(to_model(p, ModelKind.COLLINEAR).u[0], math.tanh(r))
        True
        >>> math.isclose(to_model(p, ModelKind.CONFORMAL).u[0], math.tanh(r / 2))
        True
    """

    return ModelPoint(u=to_model_coordinates(p.space, model, p.v), model=model, space=p.space)


def from_model(mp: ModelPoint) -> Point:
    return Point(v=from_model_coordinates(mp.space, mp.model, mp.u), space=mp.space)


def model_differential(space: Space, model: ModelKind, p: np.ndarray, v: np.ndarray) -> np.ndarray:
    """ The exact pushforward of tangent vectors v at p into the model plane. """

    p = np.asarray(p, dtype=float)
    v = np.asarray(v, dtype=float)
    p12, v12 = p[..., :2], v[..., :2]
    p3, v3 = p[..., 2:3], v[..., 2:3]

    if space is Space.EUCLIDEAN:
        return v12.copy()

    if space is Space.HYPERBOLIC:
        if model is ModelKind.COLLINEAR:
            return (v12 * p3 - p12 * v3) / p3 ** 2

        return (v12 * (1.0 + p3) - p12 * v3) / (1.0 + p3) ** 2

    if model is ModelKind.COLLINEAR:
        return -(v12 * p3 - p12 * v3) / p3 ** 2

    return 2.0 * (v12 * (1.0 - p3) + p12 * v3) / (1.0 - p3) ** 2


def arc_element_ratio(mp: ModelPoint, direction: np.ndarray) -> float:
    """
        Ratio |du| / ds of the Euclidean length element of the model to the intrinsic one,
        at the model point mp in the model direction given.
    """

    d = np.asarray(direction, dtype=float)
    d = d / np.linalg.norm(d)
    squared = float(mp.u @ mp.u)
    radial = float(mp.u @ d)

    if mp.space is Space.EUCLIDEAN:
        return 1.0

    if mp.space is Space.HYPERBOLIC:
        if mp.model is ModelKind.CONFORMAL:
            return (1.0 - squared) / 2.0

        return (1.0 - squared) / np.sqrt(1.0 - squared + radial ** 2)

    if mp.model is ModelKind.CONFORMAL:
        return (4.0 + squared) / 4.0

    return (1.0 + squared) / np.sqrt(1.0 + squared - radial ** 2)


def measured_arc_ratio(a: Point, b: Point, model: ModelKind, samples: int = 16) -> float:
    """ Euclidean length of the model image of the segment [a, b], divided by its intrinsic length. """

    a.check_space(b)
    space = a.space
    d = float(distances(space, a.v, b.v))
    t = np.linspace(0.0, 1.0, samples + 1)

    if space is Space.EUCLIDEAN:
        return 1.0

    if space is Space.SPHERE:
        weights = np.sin(np.outer(1.0 - t, [d])) / np.sin(d), np.sin(np.outer(t, [d])) / np.sin(d)
    else:
        weights = np.sinh(np.outer(1.0 - t, [d])) / np.sinh(d), np.sinh(np.outer(t, [d])) / np.sinh(d)

    path = weights[0] * a.v + weights[1] * b.v
    image = to_model_coordinates(space, model, path)
    return float(np.sum(np.linalg.norm(np.diff(image, axis=0), axis=1)) / d)


def image_angle(apex: Point, p: Point, q: Point, model: ModelKind) -> float:
    """ Euclidean angle at the model image of apex between the images of the geodesics to p and q. """

    space = apex.space
    du = model_differential(space, model, apex.v, log_vector(space, apex.v, p.v))
    dw = model_differential(space, model, apex.v, log_vector(space, apex.v, q.v))
    du, dw = du / np.linalg.norm(du), dw / np.linalg.norm(dw)
    return float(2.0 * np.arctan2(np.linalg.norm(du - dw), np.linalg.norm(du + dw)))


if __name__ == '__main__':
    import doctest
    doctest.testmod(verbose=False, optionflags=doctest.ELLIPSIS)
