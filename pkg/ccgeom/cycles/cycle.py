import logging
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np

from ccgeom.config import get_settings
from ccgeom.decorators import frozen_dataclass, validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import IsEnum, IsFinite, Min
from ccgeom.exceptions import UnsupportedCycle, OutOfRange, SpaceMismatch, InvalidRegion
from ccgeom.space_kernel import Space, Point, IdealPoint, Isometry, geodesic_normal

logger = logging.getLogger(__name__)


class CycleKind(Enum):
    CIRCLE = 'circle'
    PARACYCLE = 'paracycle'
    HYPERCYCLE = 'hypercycle'
    GEODESIC = 'geodesic'


@frozen_dataclass
class Cycle:
    """
        A curve of constant geodesic curvature: the level set <c, x> - k = 0 on the model quadric.
        On E2 the form is lifted to f(x) = c1 x1 + c2 x2 - c3 |x|^2 / 2, so circles (c3 = 1) are level sets too.
        The sign of (c, k) is normalised so that <c, x> - k >= 0 is the convex side; a geodesic keeps the
        side it was built with, both of its sides being convex.

        Use the constructors circle(), paracycle(), hypercycle(), geodesic_through() or from_level_set().
    """

    c: np.ndarray
    k: float
    space: Space

    def __post_init__(self) -> None:
        if self.c.shape != (3,):
            raise UnsupportedCycle(f'Cycle normal must have three coordinates, got shape {self.c.shape}')

        object.__setattr__(self, 'k', float(self.k))

    @classmethod
    def from_level_set(cls, space: Space, c: np.ndarray, k: float) -> 'Cycle':
        """ Normalises an arbitrary nonzero (c, k) describing a nonempty cycle. """

        c = np.asarray(c, dtype=float)
        k = float(k)
        tolerance = get_settings().form_tolerance

        if space is Space.EUCLIDEAN:
            if abs(c[2]) > tolerance:
                c, k = c / c[2], k / c[2]

                if float(c[:2] @ c[:2]) - 2.0 * k <= 0.0:
                    raise UnsupportedCycle('Level set of an empty or degenerate circle')
            else:
                length = float(np.linalg.norm(c[:2]))

                if length == 0.0:
                    raise UnsupportedCycle('Zero normal does not define a line')

                c, k = np.array([c[0], c[1], 0.0]) / length, k / length

            return cls(c=c, k=k, space=space)

        norm_squared = float(space.inner(c, c))
        scale = np.sqrt(abs(norm_squared))

        if space is Space.SPHERE:
            c, k = c / scale, k / scale

            if abs(k) >= 1.0:
                raise UnsupportedCycle(f'Plane at offset {k} misses the sphere or touches it in a point')

            if abs(k) <= tolerance:
                k = 0.0
            elif k < 0.0:
                c, k = -c, -k

            return cls(c=c, k=k, space=space)

        if norm_squared < -tolerance:
            c, k = c / scale, k / scale

            if c[2] < 0:
                c, k = -c, -k

            if k >= -1.0:
                raise UnsupportedCycle('Level set of an empty hyperbolic circle')

        elif norm_squared > tolerance:
            c, k = c / scale, k / scale

            if abs(k) <= tolerance:
                k = 0.0
            elif k > 0.0:
                c, k = -c, -k
        else:
            if c[2] == 0.0:
                raise UnsupportedCycle('Zero normal does not define a cycle')

            c, k = c / c[2], k / c[2]
            q = c[:2] / np.linalg.norm(c[:2])
            c = np.array([q[0], q[1], 1.0])

            if k >= 0.0:
                raise UnsupportedCycle('Level set of an empty paracycle')

        return cls(c=c, k=k, space=space)

    @property
    def kind(self) -> CycleKind:
        if self.space is Space.EUCLIDEAN:
            return CycleKind.CIRCLE if self.c[2] != 0.0 else CycleKind.GEODESIC

        if self.space is Space.SPHERE:
            return CycleKind.GEODESIC if self.k == 0.0 else CycleKind.CIRCLE

        norm_squared = float(self.space.inner(self.c, self.c))

        if norm_squared < -0.5:
            return CycleKind.CIRCLE

        if norm_squared > 0.5:
            return CycleKind.GEODESIC if self.k == 0.0 else CycleKind.HYPERCYCLE

        return CycleKind.PARACYCLE

    @property
    def is_closed(self) -> bool:
        return self.kind is CycleKind.CIRCLE or self.space is Space.SPHERE

    @property
    def radius(self) -> float:
        if self.kind is not CycleKind.CIRCLE:
            raise UnsupportedCycle(f'A {self.kind.value} has no radius')

        if self.space is Space.SPHERE:
            return float(np.arccos(self.k))

        if self.space is Space.HYPERBOLIC:
            return float(np.arccosh(-self.k))

        return float(np.sqrt(self.c[:2] @ self.c[:2] - 2.0 * self.k))

    @property
    def distance(self) -> float:
        """ The distance l of a hypercycle from its base line. """

        if self.kind is not CycleKind.HYPERCYCLE:
            raise UnsupportedCycle(f'A {self.kind.value} is not a distance line')

        return float(np.arcsinh(-self.k))

    @property
    def horo_level(self) -> float:
        """ h = -<l, x> on a paracycle with light-like normal l = (q, 1). """

        if self.kind is not CycleKind.PARACYCLE:
            raise UnsupportedCycle(f'A {self.kind.value} is not a paracycle')

        return -self.k

    @property
    def centre(self) -> Point:
        if self.kind is not CycleKind.CIRCLE:
            raise UnsupportedCycle(f'A {self.kind.value} has no finite centre')

        if self.space is Space.EUCLIDEAN:
            return Point.plane(self.c[0], self.c[1])

        return Point.on(self.space, self.c)

    @property
    def ideal_centre(self) -> IdealPoint:
        if self.kind is not CycleKind.PARACYCLE:
            raise UnsupportedCycle(f'A {self.kind.value} has no ideal centre')

        return IdealPoint(u=self.c[:2])

    def levels(self, x: np.ndarray) -> np.ndarray:
        """ Vectorised value of <c, x> - k; positive on the convex side. """

        x = np.asarray(x, dtype=float)

        if self.space is Space.EUCLIDEAN:
            planar = x[..., 0] * self.c[0] + x[..., 1] * self.c[1]
            squared = x[..., 0] ** 2 + x[..., 1] ** 2
            return planar - self.c[2] * squared / 2.0 - self.k

        return self.space.inner(self.c, x) - self.k

    def signed_distances(self, x: np.ndarray) -> np.ndarray:
        """ Vectorised intrinsic signed distance to the cycle, positive on the convex side. """

        x = np.asarray(x, dtype=float)
        kind = self.kind

        if self.space is Space.EUCLIDEAN:
            if kind is CycleKind.GEODESIC:
                return x[..., 0] * self.c[0] + x[..., 1] * self.c[1] - self.k

            return self.radius - np.hypot(x[..., 0] - self.c[0], x[..., 1] - self.c[1])

        level = self.space.inner(self.c, x)

        if self.space is Space.SPHERE:
            return np.arccos(self.k) - np.arccos(np.clip(level, -1.0, 1.0))

        if kind is CycleKind.CIRCLE:
            return self.radius - np.arccosh(np.maximum(-level, 1.0))

        if kind is CycleKind.PARACYCLE:
            return np.log(-self.k) - np.log(np.maximum(-level, 1e-300))

        return np.arcsinh(level) - np.arcsinh(self.k)

    def transformed(self, iso: Isometry) -> 'Cycle':
        if iso.space is not self.space:
            raise SpaceMismatch(f'Cannot move a cycle of {self.space.value} by an isometry of {iso.space.value}')

        if self.space is Space.EUCLIDEAN:
            linear, shift = iso.m[:2, :2], iso.m[:2, 2]
            rotated = linear @ self.c[:2]
            planar = rotated + self.c[2] * shift
            k = self.k + float(rotated @ shift) + self.c[2] * float(shift @ shift) / 2.0
            return Cycle(c=np.array([planar[0], planar[1], self.c[2]]), k=k, space=self.space)

        c = iso.m @ self.c

        if self.kind is CycleKind.PARACYCLE:
            scale = c[2]
            return Cycle(c=c / scale, k=self.k / scale, space=self.space)

        return Cycle(c=c, k=self.k, space=self.space)

    def flipped(self) -> 'Cycle':
        """ The same geodesic with the other side marked positive. """

        if self.kind is not CycleKind.GEODESIC:
            raise InvalidRegion(f'Only geodesics have two convex sides, not a {self.kind.value}')

        return Cycle(c=-self.c, k=-self.k, space=self.space)

    def base_geodesic(self) -> 'Cycle':
        """ The base line of a hypercycle, positive on the side of the hypercycle's convex side. """

        if self.kind is CycleKind.GEODESIC:
            return self

        if self.kind is not CycleKind.HYPERCYCLE:
            raise UnsupportedCycle(f'A {self.kind.value} has no base line')

        return Cycle(c=self.c, k=0.0, space=self.space)

    def same_as(self, other: 'Cycle', tolerance: float = 1e-9) -> bool:
        """ Equal as oriented cycles up to rounding. """

        return self.space is other.space and bool(np.max(np.abs(self.c - other.c)) <= tolerance) \
            and abs(self.k - other.k) <= tolerance * max(1.0, abs(self.k))

    def to_dict(self) -> Dict[str, Any]:
        return {'space': self.space.value, 'c': self.c.tolist(), 'k': self.k, 'kind': self.kind.value}


def signed_distance(cycle: Cycle, p: Point) -> float:
    _check_space(cycle, p)
    return float(cycle.signed_distances(p.v))


def side_of(cycle: Cycle, p: Point) -> float:
    """
        The level-set value <c, p> - k: positive on the convex side, zero on the cycle.

        >>> side_of(circle(Point.plane(0.0, 0.0), 2.0), Point.plane(0.0, 0.0)) > 0
        True
    """

    _check_space(cycle, p)
    value = float(cycle.levels(p.v))
    return 0.0 if abs(value) <= get_settings().membership_margin else value


def transform_cycle(cycle: Cycle, iso: Isometry) -> Cycle:
    return cycle.transformed(iso)


def flipped(cycle: Cycle) -> Cycle:
    return cycle.flipped()


def base_geodesic(cycle: Cycle) -> Cycle:
    return cycle.base_geodesic()


def _check_space(cycle: Cycle, p: Point) -> None:
    if cycle.space is not p.space:
        raise SpaceMismatch(f'Cycle of {cycle.space.value} tested against a point of {p.space.value}')


@validate(Parameter(name='r', validators=[IsFinite(), Min(0, include_boundary=False)]))
def circle(centre: Point, r: float) -> Cycle:
    """
        The circle of radius r about centre; on S2 the radius is at most pi/2, where it becomes a great circle.

        >>> circle(Point.plane(0.0, 0.0), 2.0).radius
        2.0
    """

    space = centre.space

    if space is Space.SPHERE:
        if r > np.pi / 2:
            raise OutOfRange(msg=f'Spherical circles have radius at most pi/2, got {r}', parameter_name='r', value=r)

        return Cycle(c=centre.v, k=0.0 if r == np.pi / 2 else np.cos(r), space=space)

    if space is Space.HYPERBOLIC:
        return Cycle(c=centre.v, k=-np.cosh(r), space=space)

    m = centre.v[:2]
    return Cycle(c=np.array([m[0], m[1], 1.0]), k=(float(m @ m) - r ** 2) / 2.0, space=space)


def paracycle(ideal: IdealPoint, through: Optional[Point] = None, level: Optional[float] = None) -> Cycle:
    """ The paracycle with ideal centre q passing through a point (or with h = -<l, x> = level). """

    light = ideal.light_vector

    if through is not None:
        if through.space is not Space.HYPERBOLIC:
            raise UnsupportedCycle(f'Paracycles exist only in H2, not in {through.space.value}')

        level = -float(Space.HYPERBOLIC.inner(light, through.v))

    if level is None or level <= 0.0:
        raise OutOfRange(msg=f'Paracycle level must be positive, got {level}', parameter_name='level', value=level)

    return Cycle(c=light, k=-level, space=Space.HYPERBOLIC)


def hypercycle(base: Cycle, l: float) -> Cycle:
    """ The distance line at signed distance l from the base geodesic (l > 0 on the base's positive side). """

    if base.space is not Space.HYPERBOLIC:
        raise UnsupportedCycle(f'Hypercycles exist only in H2, not in {base.space.value}')

    if base.kind is not CycleKind.GEODESIC:
        raise UnsupportedCycle(f'The base of a hypercycle must be a geodesic, not a {base.kind.value}')

    if not np.isfinite(l) or l == 0.0:
        raise OutOfRange(msg=f'Hypercycle distance must be nonzero, got {l}', parameter_name='l', value=l)

    return Cycle(c=-np.sign(l) * base.c, k=-np.sinh(abs(l)), space=Space.HYPERBOLIC)


def geodesic_through(a: Point, b: Point) -> Cycle:
    """ The geodesic through a and b, positive on the left of the direction a -> b. """

    normal, offset = geodesic_normal(a, b)
    return Cycle(c=normal, k=offset, space=a.space)


def geodesic_from(p: Point, direction: np.ndarray) -> Cycle:
    """ The geodesic through p with the given tangent direction, positive on its left. """

    space = p.space
    normal = space.rot90(p.v, direction)
    normal = normal / space.norm(normal)

    if space is Space.EUCLIDEAN:
        return Cycle(c=normal, k=float(normal[:2] @ p.v[:2]), space=space)

    return Cycle(c=normal, k=0.0, space=space)


def geodesic_line(space: Space, normal: np.ndarray, offset: float = 0.0) -> Cycle:
    """ A geodesic from its normal: <normal, x> >= offset is the positive side (offset only on E2). """

    if space is not Space.EUCLIDEAN and offset != 0.0:
        raise UnsupportedCycle('Geodesics of S2 and H2 pass through the origin of the embedding')

    return Cycle.from_level_set(space, np.asarray(normal, dtype=float), offset)


@validate(
    Parameter(name='space', validators=[IsEnum(Space)]),
    Parameter(name='kind', validators=[IsEnum(CycleKind, to_upper_case=False)]),
)
def make_cycle(space: Space, kind: CycleKind, params: Dict[str, Any]) -> Cycle:
    """
        Builds a cycle from kind-specific parameters:
        - circle: centre (Point), radius
        - paracycle: ideal (IdealPoint), through (Point) or level
        - hypercycle: base (geodesic Cycle), distance (signed)
        - geodesic: a and b (Points), or point and direction (unit tangent)
    """

    if kind in (CycleKind.PARACYCLE, CycleKind.HYPERCYCLE) and space is not Space.HYPERBOLIC:
        raise UnsupportedCycle(f'{kind.value}s exist only in H2, not in {space.value}')

    for value in params.values():
        if isinstance(value, (Point, Cycle)) and value.space is not space:
            raise SpaceMismatch(f'{kind.value} in {space.value} given data of {value.space.value}')

    if kind is CycleKind.CIRCLE:
        return circle(params['centre'], params['radius'])

    if kind is CycleKind.PARACYCLE:
        return paracycle(params['ideal'], through=params.get('through'), level=params.get('level'))

    if kind is CycleKind.HYPERCYCLE:
        return hypercycle(params['base'], params['distance'])

    if 'direction' in params:
        return geodesic_from(params['point'], params['direction'])

    return geodesic_through(params['a'], params['b'])
