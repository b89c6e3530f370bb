"""
    How the collinear model distorts angles at a point p at distance r from the model centre.
    An intrinsic angle phi, measured at p from the outward radial direction, appears in the model as
    phi' with tan(phi') = tan(phi) * cosh(r) in H2 and tan(phi') = tan(phi) * cos(r) in S2.
"""

from typing import Tuple

import numpy as np

from ccgeom.decorators import validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import IsEnum, IsFinite, Min
from ccgeom.exceptions import OutOfRange, UnsupportedInSpace
from ccgeom.space_kernel.models import model_differential
from ccgeom.space_kernel.point import ModelKind, origin
from ccgeom.space_kernel.space import Space

_FIVE_POINT_WEIGHTS = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0


def _check_radius(space: Space, r: float) -> None:
    if space is Space.EUCLIDEAN:
        raise UnsupportedInSpace('The plane is its own collinear model, there is no angle distortion')

    if space is Space.SPHERE and r >= np.pi / 2:
        raise OutOfRange(msg=f'{r} is not < pi/2', parameter_name='r', value=r)


@validate(
    Parameter(name='space', validators=[IsEnum(Space)]),
    Parameter(name='r', validators=[IsFinite(), Min(0)]),
    Parameter(name='phi', validators=[IsFinite()]),
)
def angle_distortion(space: Space, r: float, phi: float) -> float:
    """
        The derivative d(phi')/d(phi) of the collinear image angle.

        >>> round(angle_distortion(Space.SPHERE, np.pi / 3, 0.0), 12)
        0.5
        >>> round(angle_distortion('H2', float(np.arccosh(2.0)), np.pi / 2), 12)
        0.5
    """

    _check_radius(space, r)
    sin_phi = np.sin(phi) ** 2

    if space is Space.SPHERE:
        return float(np.cos(r) / (1.0 - np.sin(r) ** 2 * sin_phi))

    return float(np.cosh(r) / (1.0 + np.sinh(r) ** 2 * sin_phi))


def distortion_bounds(space: Space, r: float) -> Tuple[float, float]:
    """ The sharp interval of angle_distortion(space, r, .), attained at phi = 0 and phi = pi/2. """

    _check_radius(space, r)

    if space is Space.SPHERE:
        return float(np.cos(r)), float(1.0 / np.cos(r))

    return float(1.0 / np.cosh(r)), float(np.cosh(r))


def _radial_frame(space: Space, r: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """ The point p = exp_o(r e1), its outward radial unit tangent and the positive normal to it. """

    o = origin(space).v
    e1 = np.array([1.0, 0.0, 0.0])

    if space is Space.SPHERE:
        p = np.cos(r) * o + np.sin(r) * e1
        radial = -np.sin(r) * o + np.cos(r) * e1
    else:
        p = np.cosh(r) * o + np.sinh(r) * e1
        radial = np.sinh(r) * o + np.cosh(r) * e1

    return p, radial, space.rot90(p, radial)


def model_angle(space: Space, r: float, phi: float | np.ndarray) -> float | np.ndarray:
    """
        The collinear-model image angle phi' of the intrinsic angle phi at p = exp_o(r e1),
        computed by pushing the tangent direction through the exact differential of the model map.
    """

    _check_radius(space, r)
    p, radial, normal = _radial_frame(space, r)
    phi = np.asarray(phi, dtype=float)
    directions = np.cos(phi)[..., None] * radial + np.sin(phi)[..., None] * normal
    image = model_differential(space, ModelKind.COLLINEAR, p, directions)
    result = np.arctan2(image[..., 1], image[..., 0])
    return float(result) if result.ndim == 0 else result


def measured_angle_distortion(space: Space, r: float, phi: float, step: float = 1e-3) -> float:
    """ Five-point central difference of model_angle in phi. """

    samples = phi + step * np.arange(-2, 3)
    angles = np.unwrap(model_angle(space, r, samples))
    return float(_FIVE_POINT_WEIGHTS @ angles / step)


if __name__ == '__main__':
    import doctest
    doctest.testmod(verbose=False, optionflags=doctest.ELLIPSIS)
