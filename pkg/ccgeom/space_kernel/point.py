from enum import Enum

import numpy as np

from ccgeom.config import get_settings
from ccgeom.decorators import frozen_dataclass
from ccgeom.exceptions import OutsideModelDomain, SpaceMismatch
from ccgeom.space_kernel.space import Space


class ModelKind(Enum):
    """ Planar models: geodesics are straight lines (collinear) or angles are preserved (conformal). """

    COLLINEAR = 'collinear'
    CONFORMAL = 'conformal'


@frozen_dataclass
class Point:
    """
        A point of S2, E2 or H2 given by its embedding vector.

        >>> Point(v=[0.0, 0.0, 1.0], space=Space.HYPERBOLIC)
        Point(v=array([0., 0., 1.]), space=<Space.HYPERBOLIC: 'H2'>)
        >>> Point(v=[0.0, 0.0, 2.0], space=Space.HYPERBOLIC)
        Traceback (most recent call last):
        ...
        ccgeom.exceptions.OutsideModelDomain: [0. 0. 2.] is not on the model of H2
    """

    v: np.ndarray
    space: Space

    def __post_init__(self) -> None:
        if self.v.shape != (3,):
            raise OutsideModelDomain(f'Expected an embedding vector of length 3, got shape {self.v.shape}')

        scale = max(1.0, float(self.v @ self.v))

        if self.space.quadric_residual(self.v) > get_settings().quadric_acceptance * scale:
            raise OutsideModelDomain(f'{self.v} is not on the model of {self.space.value}')

        if self.space is Space.HYPERBOLIC and self.v[2] <= 0:
            raise OutsideModelDomain(f'{self.v} is on the lower sheet')

    @classmethod
    def on(cls, space: Space, v: np.ndarray) -> 'Point':
        """ Builds a point from any nonzero representative, projecting it onto the quadric. """
        return cls(v=space.project(np.asarray(v, dtype=float)), space=space)

    @classmethod
    def plane(cls, x: float, y: float) -> 'Point':
        return cls(v=np.array([x, y, 1.0]), space=Space.EUCLIDEAN)

    def check_space(self, other: 'Point | IdealPoint') -> None:
        other_space = other.space if isinstance(other, Point) else Space.HYPERBOLIC

        if other_space is not self.space:
            raise SpaceMismatch(f'Cannot combine a point of {self.space.value} with one of {other_space.value}')


def origin(space: Space) -> Point:
    """ The model centre: the south pole (0, 0, -1) on S2, (0, 0, 1) on E2 and H2. """

    if space is Space.SPHERE:
        return Point(v=np.array([0.0, 0.0, -1.0]), space=space)

    return Point(v=np.array([0.0, 0.0, 1.0]), space=space)


@frozen_dataclass
class IdealPoint:
    """
        A point of the circle at infinity of H2, stored as a unit vector u of the plane.
        Its light-like representative is (u1, u2, 1).

        >>> IdealPoint.at_angle(0.0).light_vector
        array([1., 0., 1.])
    """

    u: np.ndarray

    def __post_init__(self) -> None:
        length = float(np.linalg.norm(self.u))

        if self.u.shape != (2,) or abs(length - 1.0) > 1e-9:
            raise OutsideModelDomain(f'{self.u} is not a unit vector of the plane')

    @property
    def space(self) -> Space:
        return Space.HYPERBOLIC

    @property
    def angle(self) -> float:
        return float(np.arctan2(self.u[1], self.u[0]))

    @property
    def light_vector(self) -> np.ndarray:
        return np.array([self.u[0], self.u[1], 1.0])

    @classmethod
    def at_angle(cls, angle: float) -> 'IdealPoint':
        return cls(u=np.array([np.cos(angle), np.sin(angle)]))

    @classmethod
    def from_light_vector(cls, v: np.ndarray) -> 'IdealPoint':
        v = np.asarray(v, dtype=float)

        if v[2] <= 0:
            raise OutsideModelDomain(f'{v} is not on the future light cone')

        u = v[:2] / v[2]
        return cls(u=u / np.linalg.norm(u))


@frozen_dataclass
class ModelPoint:
    """ Coordinates of a point in one of the planar models of S2 or H2. """

    u: np.ndarray
    model: ModelKind
    space: Space

    def __post_init__(self) -> None:
        if self.u.shape != (2,):
            raise OutsideModelDomain(f'Expected planar coordinates, got shape {self.u.shape}')
