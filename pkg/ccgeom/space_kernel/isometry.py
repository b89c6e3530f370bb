import logging
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np

from ccgeom.config import get_settings
from ccgeom.decorators import frozen_dataclass
from ccgeom.exceptions import DegenerateGeodesic, OutOfRange, SpaceMismatch, UnsupportedCongruence
from ccgeom.space_kernel.metric import direction_at, distance, exp_map, log_direction, midpoint
from ccgeom.space_kernel.point import IdealPoint, Point, origin
from ccgeom.space_kernel.space import Space

logger = logging.getLogger(__name__)


class CongruenceKind(Enum):
    ROTATION = 'rotation'
    IDEAL_ROTATION = 'ideal_rotation'
    TRANSLATION = 'translation'
    REFLECTION = 'reflection'
    POINT_REFLECTION = 'point_reflection'


class IsometryType(Enum):
    """ The congruence classes of the three planes. """

    IDENTITY = 'identity'
    ROTATION = 'rotation'
    POINT_REFLECTION = 'point_reflection'
    TRANSLATION = 'translation'
    IDEAL_ROTATION = 'ideal_rotation'
    REFLECTION = 'reflection'
    GLIDE_REFLECTION = 'glide_reflection'

    @property
    def is_direct(self) -> bool:
        return self not in (IsometryType.REFLECTION, IsometryType.GLIDE_REFLECTION)


@frozen_dataclass
class Isometry:
    """
        A congruence acting on embedding vectors by matrix multiplication.
        For E2 the matrix is affine with last row (0, 0, 1).

        >>> Isometry.identity(Space.EUCLIDEAN).orientation
        1
    """

    m: np.ndarray
    space: Space
    orientation: int

    def __post_init__(self) -> None:
        if self.m.shape != (3, 3):
            raise OutOfRange(f'Expected a 3x3 matrix, got shape {self.m.shape}')

        if self.space is Space.EUCLIDEAN:
            linear = self.m[:2, :2]
            residual = max(np.max(np.abs(self.m[2] - [0.0, 0.0, 1.0])),
                           np.max(np.abs(linear.T @ linear - np.eye(2))))
            det = np.linalg.det(linear)
        else:
            gram = self.space.gram
            scale = max(1.0, float(np.max(np.abs(self.m))) ** 2)
            residual = np.max(np.abs(self.m.T @ gram @ self.m - gram)) / scale
            det = np.linalg.det(self.m)

        if residual > get_settings().form_tolerance:
            raise OutOfRange(f'Matrix does not preserve the form of {self.space.value} (residual {residual:.3e})')

        if self.space is Space.HYPERBOLIC and self.m[2, 2] < 0:
            raise OutOfRange('Matrix swaps the sheets of the hyperboloid')

        if int(np.sign(det)) != self.orientation:
            raise OutOfRange(f'Orientation {self.orientation} does not match the determinant {det:.3f}')

    @classmethod
    def identity(cls, space: Space) -> 'Isometry':
        return cls(m=np.eye(3), space=space, orientation=1)

    @classmethod
    def of_matrix(cls, space: Space, m: np.ndarray) -> 'Isometry':
        """ Wraps a form-preserving matrix, deriving the orientation from its determinant. """

        m = np.asarray(m, dtype=float)
        det = np.linalg.det(m[:2, :2]) if space is Space.EUCLIDEAN else np.linalg.det(m)
        return cls(m=m, space=space, orientation=1 if det > 0 else -1)

    def compose(self, other: 'Isometry') -> 'Isometry':
        """ self after other. """

        if self.space is not other.space:
            raise SpaceMismatch(f'Cannot compose isometries of {self.space.value} and {other.space.value}')

        return Isometry(m=self.m @ other.m, space=self.space, orientation=self.orientation * other.orientation)

    def inverse(self) -> 'Isometry':
        if self.space is Space.EUCLIDEAN:
            linear = self.m[:2, :2].T
            m = np.eye(3)
            m[:2, :2] = linear
            m[:2, 2] = -linear @ self.m[:2, 2]
        else:
            gram = self.space.gram
            m = gram @ self.m.T @ gram

        return Isometry(m=m, space=self.space, orientation=self.orientation)

    def apply_vectors(self, v: np.ndarray) -> np.ndarray:
        """ Maps embedding vectors (last axis) and removes quadric drift. """

        image = np.asarray(v, dtype=float) @ self.m.T
        residual = self.space.quadric_residual(image)

        if self.space is Space.EUCLIDEAN or np.any(residual > get_settings().quadric_drift):
            image = self.space.project(image)

        return image

    def apply_tangent(self, v: np.ndarray) -> np.ndarray:
        """ Pushes tangent vectors forward; for E2 only the linear part acts. """

        v = np.asarray(v, dtype=float)

        if self.space is Space.EUCLIDEAN:
            result = np.zeros_like(v)
            result[..., :2] = v[..., :2] @ self.m[:2, :2].T
            return result

        return v @ self.m.T

    def apply_ideal(self, q: IdealPoint) -> IdealPoint:
        if self.space is not Space.HYPERBOLIC:
            raise SpaceMismatch('Ideal points exist only in H2')

        return IdealPoint.from_light_vector(self.m @ q.light_vector)

    def is_identity(self, tolerance: float = 1e-9) -> bool:
        return bool(np.max(np.abs(self.m - np.eye(3))) <= tolerance)


def apply(iso: Isometry, p: Point) -> Point:
    """
        >>> rotation = isometry_from(Space.EUCLIDEAN, CongruenceSpec(kind=CongruenceKind.ROTATION,
        ...                          centre=Point.plane(0.0, 0.0), angle=np.pi / 2))
        >>> np.round(apply(rotation, Point.plane(1.0, 0.0)).v, 12) + 0.0
        array([0., 1., 1.])
    """

    if iso.space is not p.space:
        raise SpaceMismatch(f'Cannot apply an isometry of {iso.space.value} to a point of {p.space.value}')

    return Point(v=iso.apply_vectors(p.v), space=p.space)


def apply_many(iso: Isometry, points: Sequence[Point]) -> list[Point]:
    return [apply(iso, p) for p in points]


def compose(*isometries: Isometry) -> Isometry:
    """ compose(f, g, h) = f after g after h. """

    result = isometries[-1]

    for iso in reversed(isometries[:-1]):
        result = iso.compose(result)

    return result


def point_reflection_matrix(space: Space, p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=float)

    if space is Space.EUCLIDEAN:
        return np.array([[-1.0, 0.0, 2.0 * p[0]], [0.0, -1.0, 2.0 * p[1]], [0.0, 0.0, 1.0]])

    return -np.eye(3) + 2.0 * space.curvature * np.outer(p, p) @ space.gram


def reflection_matrix(space: Space, normal: np.ndarray, offset: float = 0.0) -> np.ndarray:
    """
        Reflection in the geodesic {x : <normal, x> = offset}. The offset must vanish on S2 and H2,
        on E2 the geodesic is the line normal . x = offset with a unit normal.
    """

    n = np.asarray(normal, dtype=float)

    if space is Space.EUCLIDEAN:
        n = n[:2] / np.linalg.norm(n[:2])
        m = np.eye(3)
        m[:2, :2] -= 2.0 * np.outer(n, n)
        m[:2, 2] = 2.0 * offset * n
        return m

    if abs(offset) > 1e-12:
        raise UnsupportedCongruence('Reflections exist only in geodesics, whose offset is zero')

    n = n / np.sqrt(space.inner(n, n))
    return np.eye(3) - 2.0 * np.outer(n, n) @ space.gram


def point_reflection(p: Point) -> Isometry:
    return Isometry(m=point_reflection_matrix(p.space, p.v), space=p.space, orientation=1)


def reflection(space: Space, normal: np.ndarray, offset: float = 0.0) -> Isometry:
    return Isometry(m=reflection_matrix(space, normal, offset), space=space, orientation=-1)


def geodesic_normal(a: Point, b: Point) -> Tuple[np.ndarray, float]:
    """ The (normal, offset) of the geodesic through a and b whose positive side lies to the left of a -> b. """

    a.check_space(b)
    space = a.space

    if space is Space.EUCLIDEAN:
        d = b.v[:2] - a.v[:2]
        length = float(np.linalg.norm(d))

        if length == 0.0:
            raise DegenerateGeodesic('A line needs two distinct points')

        n = np.array([-d[1], d[0], 0.0]) / length
        return n, float(n[:2] @ a.v[:2])

    n = space.orientation * (space.gram @ np.cross(a.v, b.v))
    length = float(np.sqrt(max(space.inner(n, n), 0.0)))

    if length < 1e-14:
        raise DegenerateGeodesic('The geodesic through coincident or antipodal points is not unique')

    return n / length, 0.0


def transvection(a: Point, b: Point) -> Isometry:
    """ The translation along the geodesic through a and b which takes a to b. """

    if a == b:
        return Isometry.identity(a.space)

    return point_reflection(midpoint(a, b)).compose(point_reflection(a))


def isometry_taking(p: Point, q: Point) -> Isometry:
    return transvection(p, q)


def rotation_about(centre: Point, angle: float) -> Isometry:
    """ Counterclockwise rotation about a finite point. """

    space = centre.space
    c, s = np.cos(angle), np.sin(angle)
    standard = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])

    if space is Space.SPHERE:
        axis = -centre.v
        cross = np.array([[0.0, -axis[2], axis[1]], [axis[2], 0.0, -axis[0]], [-axis[1], axis[0], 0.0]])
        m = c * np.eye(3) + s * cross + (1.0 - c) * np.outer(axis, axis)
        return Isometry(m=m, space=space, orientation=1)

    to_centre = transvection(origin(space), centre)
    rotation = Isometry(m=standard, space=space, orientation=1)
    return compose(to_centre, rotation, to_centre.inverse())


def ideal_generator(q: IdealPoint) -> np.ndarray:
    """ The nilpotent generator of the rotations about q; its cube vanishes. """

    light = q.light_vector
    w = np.array([-q.u[1], q.u[0], 0.0])
    gram = Space.HYPERBOLIC.gram
    return np.outer(w, light) @ gram - np.outer(light, w) @ gram


def ideal_rotation(q: IdealPoint, shift: float) -> Isometry:
    """ The parabolic isometry of H2 fixing the ideal point q, moving points along its paracycles by shift. """

    generator = ideal_generator(q)
    m = np.eye(3) + shift * generator + 0.5 * shift ** 2 * generator @ generator
    return Isometry(m=m, space=Space.HYPERBOLIC, orientation=1)


def translation_along(start: Point, direction: np.ndarray, length: float) -> Isometry:
    """ Translates by the signed length along the geodesic leaving start in the given unit tangent direction. """

    if start.space is Space.EUCLIDEAN:
        m = np.eye(3)
        m[:2, 2] = length * np.asarray(direction)[:2]
        return Isometry(m=m, space=start.space, orientation=1)

    half_way = exp_map(start, direction, length / 2.0)
    return point_reflection(half_way).compose(point_reflection(start))


@frozen_dataclass
class CongruenceSpec:
    """
        Parameters of a congruence:
        - rotation: centre, angle
        - ideal_rotation (H2): ideal, shift
        - translation: start plus either towards or angle (direction in tangent_frame(start)), length
        - reflection: the geodesic through start and towards
        - point_reflection: centre
    """

    kind: CongruenceKind
    centre: Optional[Point] = None
    angle: float = 0.0
    ideal: Optional[IdealPoint] = None
    shift: float = 0.0
    start: Optional[Point] = None
    towards: Optional[Point] = None
    length: float = 0.0


def isometry_from(space: Space, spec: CongruenceSpec) -> Isometry:
    """
        >>> twice = isometry_from(Space.HYPERBOLIC, CongruenceSpec(kind=CongruenceKind.POINT_REFLECTION,
        ...                       centre=Point.on(Space.HYPERBOLIC, [0.3, 0.1, 1.0])))
        >>> twice.compose(twice).is_identity()
        True
    """

    for point in (spec.centre, spec.start, spec.towards):
        if point is not None and point.space is not space:
            raise SpaceMismatch(f'{spec.kind.value} in {space.value} given a point of {point.space.value}')

    if spec.kind is CongruenceKind.IDEAL_ROTATION:
        if space is not Space.HYPERBOLIC:
            raise UnsupportedCongruence(f'Rotations about an infinite point exist only in H2, not in {space.value}')

        if spec.ideal is None:
            raise UnsupportedCongruence('ideal_rotation needs an ideal point')

        return ideal_rotation(spec.ideal, spec.shift)

    if spec.kind in (CongruenceKind.ROTATION, CongruenceKind.POINT_REFLECTION):
        if spec.centre is None:
            raise UnsupportedCongruence(f'{spec.kind.value} needs a centre')

        if spec.kind is CongruenceKind.POINT_REFLECTION:
            return point_reflection(spec.centre)

        return rotation_about(spec.centre, spec.angle)

    if spec.start is None:
        raise UnsupportedCongruence(f'{spec.kind.value} needs a start point')

    if spec.kind is CongruenceKind.REFLECTION:
        if spec.towards is None:
            raise UnsupportedCongruence('reflection needs two points of its axis')

        normal, offset = geodesic_normal(spec.start, spec.towards)
        return reflection(space, normal, offset)

    if spec.towards is not None:
        direction = log_direction(spec.start, spec.towards)
    else:
        direction = direction_at(spec.start, spec.angle)

    return translation_along(spec.start, direction, spec.length)


def isometry_from_ideal_triples(source: Sequence[IdealPoint], target: Sequence[IdealPoint]) -> Isometry:
    """ The unique isometry of H2 taking three distinct ideal points to three given ones (in order). """

    gram = Space.HYPERBOLIC.gram
    lights = np.array([q.light_vector for q in source]).T
    images = np.array([q.light_vector for q in target]).T

    if abs(np.linalg.det(lights)) < 1e-12 or abs(np.linalg.det(images)) < 1e-12:
        raise DegenerateGeodesic('Ideal triples must consist of distinct points')

    # m l_i = lambda_i l'_i, and <l_i, l_j> = lambda_i lambda_j <l'_i, l'_j> fixes the lambdas
    form = lights.T @ gram @ lights
    image_form = images.T @ gram @ images
    r01, r02, r12 = (form[i, j] / image_form[i, j] for i, j in ((0, 1), (0, 2), (1, 2)))
    lambdas = np.sqrt(np.array([r01 * r02 / r12, r01 * r12 / r02, r02 * r12 / r01]))
    m = images @ np.diag(lambdas) @ np.linalg.inv(lights)
    return Isometry.of_matrix(Space.HYPERBOLIC, m)


def classify_isometry(iso: Isometry, tolerance: float = 1e-9) -> IsometryType:
    """
        >>> classify_isometry(point_reflection(Point.plane(1.0, 2.0)))
        <IsometryType.POINT_REFLECTION: 'point_reflection'>
    """

    m = iso.m
    square = m @ m
    scale = max(1.0, float(np.max(np.abs(m))))

    if iso.orientation < 0:
        is_involution = np.max(np.abs(square - np.eye(3))) <= tolerance * scale ** 2

        if iso.space is Space.SPHERE:
            is_involution = is_involution and abs(np.trace(m) - 1.0) <= tolerance

        return IsometryType.REFLECTION if is_involution else IsometryType.GLIDE_REFLECTION

    if iso.is_identity(tolerance * scale):
        return IsometryType.IDENTITY

    if iso.space is Space.EUCLIDEAN:
        linear = m[:2, :2]

        if np.max(np.abs(linear - np.eye(2))) <= tolerance:
            return IsometryType.TRANSLATION

        return IsometryType.POINT_REFLECTION if np.trace(linear) < -2.0 + tolerance else IsometryType.ROTATION

    trace = float(np.trace(m))

    if iso.space is Space.HYPERBOLIC:
        if trace > 3.0 + tolerance * scale:
            return IsometryType.TRANSLATION

        if trace >= 3.0 - tolerance * scale:
            return IsometryType.IDEAL_ROTATION

    return IsometryType.POINT_REFLECTION if trace < -1.0 + tolerance else IsometryType.ROTATION


def rotation_angle(iso: Isometry) -> float:
    """ Unsigned rotation angle in [0, pi] of a direct isometry with a finite fixed point. """

    trace = np.trace(iso.m[:2, :2]) + 1.0 if iso.space is Space.EUCLIDEAN else np.trace(iso.m)
    return float(np.arccos(np.clip((trace - 1.0) / 2.0, -1.0, 1.0)))


def fixed_point(iso: Isometry) -> Point:
    """
        The centre of a rotation or point reflection. On S2 the representative in the closed southern
        hemisphere is returned; its antipode is fixed as well.
    """

    kind = classify_isometry(iso)

    if kind not in (IsometryType.ROTATION, IsometryType.POINT_REFLECTION, IsometryType.IDENTITY):
        raise UnsupportedCongruence(f'A {kind.value} has no finite fixed point')

    space = iso.space

    if space is Space.EUCLIDEAN:
        linear = iso.m[:2, :2]
        centre = np.linalg.lstsq(np.eye(2) - linear, iso.m[:2, 2], rcond=None)[0]
        return Point.plane(*centre)

    _, _, vt = np.linalg.svd(iso.m - np.eye(3))
    v = vt[-1]

    if space is Space.SPHERE:
        return Point.on(space, -v if v[2] > 0 else v)

    return Point.on(space, v if v[2] > 0 else -v)


def mirror(iso: Isometry) -> Tuple[np.ndarray, float]:
    """ The (normal, offset) of the mirror geodesic of a reflection. """

    if classify_isometry(iso) is not IsometryType.REFLECTION:
        raise UnsupportedCongruence('Only reflections have a mirror')

    if iso.space is Space.EUCLIDEAN:
        values, vectors = np.linalg.eigh(iso.m[:2, :2])
        n = vectors[:, int(np.argmin(values))]
        return np.array([n[0], n[1], 0.0]), float(n @ iso.m[:2, 2]) / 2.0

    _, _, vt = np.linalg.svd(iso.m + np.eye(3))
    n = vt[-1]
    return n / np.sqrt(iso.space.inner(n, n)), 0.0


def _translation_start(iso: Isometry) -> Point:
    """ A point on the axis of a translation; in H2 the axis joins the ideal ends fixed by it. """

    if iso.space is Space.EUCLIDEAN:
        return origin(iso.space)

    values, vectors = np.linalg.eig(iso.m)
    order = np.argsort(values.real)
    ends = [np.real(vectors[:, i]) for i in (order[0], order[-1])]
    return Point.on(iso.space, sum(end / end[2] for end in ends))


def _mirror_points(iso: Isometry) -> Tuple[Point, Point]:
    """ Two points of the mirror of a reflection, the first one closest to the origin. """

    normal, offset = mirror(iso)
    space = iso.space

    if space is Space.EUCLIDEAN:
        foot = offset * normal[:2]
        return Point.plane(*foot), Point.plane(*(foot + np.array([-normal[1], normal[0]])))

    o = origin(space).v
    foot = o - space.inner(normal, o) / space.inner(normal, normal) * normal

    if np.linalg.norm(foot) < 1e-9:
        foot = np.cross(normal, [1.0, 0.0, 0.0] if abs(normal[0]) < 0.9 else [0.0, 1.0, 0.0])

    start = Point.on(space, foot)
    along = space.gram @ np.cross(start.v, normal)
    return start, exp_map(start, along / space.norm(along), 1.0)


def congruence_spec_of(iso: Isometry, tolerance: float = 1e-9) -> Optional[CongruenceSpec]:
    """
        The parameters isometry_from() rebuilds iso from, or None for a glide reflection.
        The identity is the rotation by 0 about the origin.

        >>> spec = congruence_spec_of(rotation_about(Point.plane(1.0, 2.0), -0.5))
        >>> spec.kind, round(spec.angle, 9), np.round(spec.centre.v, 9) + 0.0
        (<CongruenceKind.ROTATION: 'rotation'>, -0.5, array([1., 2., 1.]))
    """

    space = iso.space
    kind = classify_isometry(iso, tolerance)

    if kind is IsometryType.IDENTITY:
        return CongruenceSpec(kind=CongruenceKind.ROTATION, centre=origin(space), angle=0.0)

    if kind is IsometryType.POINT_REFLECTION:
        return CongruenceSpec(kind=CongruenceKind.POINT_REFLECTION, centre=fixed_point(iso))

    if kind is IsometryType.ROTATION:
        centre = fixed_point(iso)
        angle = rotation_angle(iso)
        angle = min((angle, -angle), key=lambda a: float(np.max(np.abs(rotation_about(centre, a).m - iso.m))))
        return CongruenceSpec(kind=CongruenceKind.ROTATION, centre=centre, angle=angle)

    if kind is IsometryType.IDEAL_ROTATION:
        _, _, vt = np.linalg.svd(iso.m - np.eye(3))
        q = IdealPoint.from_light_vector(vt[-1] if vt[-1][2] > 0 else -vt[-1])
        generator = ideal_generator(q)
        nilpotent = iso.m - np.eye(3)
        logarithm = nilpotent - nilpotent @ nilpotent / 2.0
        shift = float(np.sum(logarithm * generator) / np.sum(generator * generator))
        return CongruenceSpec(kind=CongruenceKind.IDEAL_ROTATION, ideal=q, shift=shift)

    if kind is IsometryType.TRANSLATION:
        start = _translation_start(iso)
        end = apply(iso, start)
        return CongruenceSpec(kind=CongruenceKind.TRANSLATION, start=start, towards=end,
                              length=distance(start, end))

    if kind is IsometryType.REFLECTION:
        start, towards = _mirror_points(iso)
        return CongruenceSpec(kind=CongruenceKind.REFLECTION, start=start, towards=towards)

    return None


if __name__ == '__main__':
    import doctest
    doctest.testmod(verbose=False, optionflags=doctest.ELLIPSIS)
