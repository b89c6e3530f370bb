import logging
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize

from ccgeom.config import get_settings
from ccgeom.cycles import Cycle, CycleKind, circle, paracycle, hypercycle, geodesic_through, geodesic_line, \
    points_at, inward_normals, perimeter, intersect_cycles
from ccgeom.decorators import frozen_dataclass, validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import IsEnum, IsFinite, Min
from ccgeom.exceptions import EmptyInterior, InvalidRegion, SpaceMismatch, UnsupportedInSpace
from ccgeom.regions.pieces import redundancy_flags, opposite_pairs
from ccgeom.space_kernel import Space, Point, IdealPoint, Isometry, origin, exp_vectors, frame_at, \
    direction_at, distances, midpoint

logger = logging.getLogger(__name__)


class Side(Enum):
    CONVEX = 'convex'
    CONCAVE = 'concave'


@frozen_dataclass
class HalfDomain:
    """ One side of a cycle. Only geodesics may keep their concave side, which is the convex side of the flip. """

    cycle: Cycle
    side: Side = Side.CONVEX

    def __post_init__(self) -> None:
        if self.side is Side.CONCAVE and self.cycle.kind is not CycleKind.GEODESIC:
            raise InvalidRegion(f'The concave side of a {self.cycle.kind.value} is not convex')

    @property
    def effective(self) -> Cycle:
        """ The cycle whose positive side is this half-domain. """
        return self.cycle if self.side is Side.CONVEX else self.cycle.flipped()

    def transformed(self, iso: Isometry) -> 'HalfDomain':
        return HalfDomain(cycle=self.cycle.transformed(iso), side=self.side)


@frozen_dataclass
class Membership:
    inside: bool
    margin: float


@frozen_dataclass
class ConvexRegion:
    """
        A proper closed convex set with interior: the intersection of finitely many cycle half-domains,
        moved by placement. The interior witness and the redundancy flags are found at construction
        and refer to the unplaced halves.

        >>> from ccgeom.space_kernel import Point
        >>> region = disk(Point.plane(0.0, 0.0), 1.0)
        >>> contains(region, Point.plane(0.5, 0.0)).inside, contains(region, Point.plane(2.0, 0.0)).inside
        (True, False)
    """

    space: Space
    halves: Tuple[HalfDomain, ...]
    placement: Optional[Isometry] = None
    witness: Optional[Point] = None
    redundant: Optional[Tuple[bool, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, 'halves', tuple(self.halves))

        if not self.halves:
            raise InvalidRegion('A region needs at least one constraint; the whole plane is not proper')

        if len(self.halves) > get_settings().max_constraints:
            raise InvalidRegion(f'{len(self.halves)} constraints exceed the cap of {get_settings().max_constraints}')

        for half in self.halves:
            if half.cycle.space is not self.space:
                raise SpaceMismatch(f'Constraint of {half.cycle.space.value} in a region of {self.space.value}')

        if self.placement is None:
            object.__setattr__(self, 'placement', Isometry.identity(self.space))

        local = [half.effective for half in self.halves]

        if self.witness is None:
            if opposite_pairs(local):
                raise EmptyInterior('Two constraints are opposite sides of one geodesic')

            witness, margin = find_witness(self.space, local)

            if margin <= get_settings().membership_margin:
                raise EmptyInterior(f'No interior point found (best margin {margin:.3e})')

            object.__setattr__(self, 'witness', witness)

        if self.redundant is None:
            object.__setattr__(self, 'redundant', redundancy_flags(local))

    @cached_property
    def cycles(self) -> Tuple[Cycle, ...]:
        """ The placed constraint cycles, each positive on the region's side. """
        return tuple(half.effective.transformed(self.placement) for half in self.halves)

    @cached_property
    def active_cycles(self) -> Tuple[Cycle, ...]:
        return tuple(cycle for cycle, flag in zip(self.cycles, self.redundant) if not flag)

    @property
    def placed_halves(self) -> Tuple[HalfDomain, ...]:
        return tuple(half.transformed(self.placement) for half in self.halves)

    @property
    def interior_point(self) -> Point:
        return Point(v=self.placement.apply_vectors(self.witness.v), space=self.space)

    def margins(self, x: np.ndarray) -> np.ndarray:
        """ Vectorised signed membership margin: the smallest signed distance to a constraint cycle. """

        x = np.asarray(x, dtype=float)
        return np.min([cycle.signed_distances(x) for cycle in self.active_cycles], axis=0)

    def contains_vectors(self, x: np.ndarray) -> np.ndarray:
        return self.margins(x) >= -get_settings().membership_margin

    def pruned(self) -> 'ConvexRegion':
        """ The same set without the redundant constraints. """

        halves = tuple(half for half, flag in zip(self.halves, self.redundant) if not flag)
        return ConvexRegion(space=self.space, halves=halves, placement=self.placement, witness=self.witness,
                            redundant=(False,) * len(halves))


def contains(region: ConvexRegion, p: Point) -> Membership:
    if p.space is not region.space:
        raise SpaceMismatch(f'Point of {p.space.value} tested against a region of {region.space.value}')

    margin = float(region.margins(p.v))
    return Membership(inside=margin >= -get_settings().membership_margin, margin=margin)


def moved(region: ConvexRegion, iso: Isometry) -> ConvexRegion:
    if iso.space is not region.space:
        raise SpaceMismatch(f'Cannot move a region of {region.space.value} by an isometry of {iso.space.value}')

    return region.copy_with(placement=iso.compose(region.placement))


def region_from_halves(space: Space, halves: Iterable[HalfDomain | Tuple[Cycle, Side | str]],
                       placement: Optional[Isometry] = None) -> ConvexRegion:
    converted = []

    for half in halves:
        if not isinstance(half, HalfDomain):
            cycle, side = half
            half = HalfDomain(cycle=cycle, side=Side(side))

        converted.append(half)

    return ConvexRegion(space=space, halves=tuple(converted), placement=placement)


def disk(centre: Point, r: float) -> ConvexRegion:
    """ The closed ball of radius r; on S2 the radius is at most pi/2. """
    return region_from_halves(centre.space, [HalfDomain(cycle=circle(centre, r))])


def half_plane(geodesic: Cycle, side: Side | str = Side.CONVEX) -> ConvexRegion:
    """ The side of a geodesic marked positive (convex) or the other one (concave). """

    if geodesic.kind is not CycleKind.GEODESIC:
        raise InvalidRegion(f'A half-plane is bounded by a geodesic, not by a {geodesic.kind.value}')

    return region_from_halves(geodesic.space, [HalfDomain(cycle=geodesic, side=Side(side))])


@validate(
    Parameter(name='space', validators=[IsEnum(Space)]),
    Parameter(name='width', validators=[IsFinite(), Min(0, include_boundary=False)]),
)
def strip(space: Space, direction: Sequence[float], offset: float, width: float) -> ConvexRegion:
    """
        The E2 parallel strip of the given width whose midline has the planar direction and lies at the signed
        distance offset from the origin (measured along the normal on the left of direction).
    """

    if space is not Space.EUCLIDEAN:
        raise UnsupportedInSpace(f'Parallel strips exist only in E2, not in {space.value}')

    d = np.asarray(direction, dtype=float)[:2]
    d = d / np.linalg.norm(d)
    normal = np.array([-d[1], d[0], 0.0])
    lower = geodesic_line(space, normal, offset - width / 2.0)
    upper = geodesic_line(space, -normal, -(offset + width / 2.0))
    return region_from_halves(space, [HalfDomain(cycle=lower), HalfDomain(cycle=upper)])


def paraball(space: Space, ideal: IdealPoint, through: Point) -> ConvexRegion:
    if space is not Space.HYPERBOLIC:
        raise UnsupportedInSpace(f'Paraballs exist only in H2, not in {space.value}')

    return region_from_halves(space, [HalfDomain(cycle=paracycle(ideal, through=through))])


def hypercycle_region(space: Space, base: Cycle, l: float) -> ConvexRegion:
    """ The convex side of the distance line at signed distance l from base (it contains the base line). """

    if space is not Space.HYPERBOLIC:
        raise UnsupportedInSpace(f'Hypercycle regions exist only in H2, not in {space.value}')

    return region_from_halves(space, [HalfDomain(cycle=hypercycle(base, l))])


def polygon(space: Space, vertices: Sequence[Point]) -> ConvexRegion:
    """ The geodesic polygon with counterclockwise vertices. """

    if len(vertices) < 3:
        raise InvalidRegion(f'A polygon needs three vertices, got {len(vertices)}')

    sides = [geodesic_through(a, b) for a, b in zip(vertices, list(vertices[1:]) + [vertices[0]])]
    return region_from_halves(space, [HalfDomain(cycle=side) for side in sides])


def core(region: ConvexRegion) -> ConvexRegion:
    """ The region with every hypercycle constraint replaced by its base line. """

    halves = [HalfDomain(cycle=cycle.base_geodesic()) if cycle.kind is CycleKind.HYPERCYCLE
              else HalfDomain(cycle=cycle) for cycle in region.cycles]
    return region_from_halves(region.space, halves)


def _search_radius(space: Space, cycles: Sequence[Cycle]) -> float:
    if space is Space.SPHERE:
        return 0.999 * np.pi

    if space is Space.HYPERBOLIC:
        return 5.0

    scale = 1.0

    for cycle in cycles:
        if cycle.kind is CycleKind.GEODESIC:
            scale = max(scale, abs(cycle.k))
        else:
            scale = max(scale, float(np.linalg.norm(cycle.c[:2])) + cycle.radius)

    return 2.0 * scale


def _seeds(space: Space, cycles: Sequence[Cycle]) -> np.ndarray:
    o = origin(space)
    e1, e2 = frame_at(o)
    radii = np.linspace(0.0, _search_radius(space, cycles), 24)
    angles = np.linspace(-np.pi, np.pi, 32, endpoint=False)
    directions = np.cos(angles)[:, None] * e1 + np.sin(angles)[:, None] * e2
    seeds = [exp_vectors(space, o.v, direction, radii) for direction in directions]

    for cycle in cycles:
        s = np.linspace(0.0, perimeter(cycle), 8, endpoint=False) if cycle.is_closed else np.linspace(-2.0, 2.0, 9)
        on_cycle = points_at(cycle, s)
        normals = inward_normals(cycle, on_cycle)

        for step in (1e-3, 0.05, 0.3, 1.0):
            seeds.append(exp_vectors(space, on_cycle, normals, np.full(len(s), step)))

    # thin lenses: the midpoint of a common chord lies deepest inside
    for i, first in enumerate(cycles):
        for second in cycles[i + 1:]:
            common = intersect_cycles(first, second).points

            if len(common) == 2 and float(distances(space, common[0].v, common[1].v)) < np.pi - 1e-6:
                seeds.append(midpoint(common[0], common[1]).v[None, :])

    points = np.concatenate(seeds)
    return points if space is Space.EUCLIDEAN else space.project(points)


def _margins(cycles: Sequence[Cycle], x: np.ndarray) -> np.ndarray:
    return np.min([cycle.signed_distances(x) for cycle in cycles], axis=0)


def find_witness(space: Space, cycles: Sequence[Cycle]) -> Tuple[Point, float]:
    """ A point deep inside the intersection: maximises the smallest signed distance to the cycles. """

    seeds = _seeds(space, cycles)
    margins = _margins(cycles, seeds)
    best = seeds[int(np.argmax(margins))]
    start = Point(v=space.project(best) if space is not Space.EUCLIDEAN else best, space=space)
    e1, e2 = frame_at(start)

    def local(y: np.ndarray) -> np.ndarray:
        step = y[0] * e1 + y[1] * e2
        length = float(space.norm(step))

        if length == 0.0:
            return start.v

        v = exp_vectors(space, start.v, step / length, length)
        return v if space is Space.EUCLIDEAN else space.project(v)

    result = minimize(lambda y: -float(_margins(cycles, local(y))), x0=np.zeros(2), method='Nelder-Mead',
                      options={'xatol': 1e-10, 'fatol': 1e-12, 'maxiter': 600})
    refined = local(result.x)
    margin = float(_margins(cycles, refined))

    if margin < float(np.max(margins)):
        refined, margin = start.v, float(np.max(margins))

    logger.debug('Interior witness with margin %.3e', margin)
    return Point(v=refined, space=space), margin


def random_interior_points(region: ConvexRegion, rng: np.random.Generator, count: int,
                           radius: float) -> np.ndarray:
    """ Uniformly spread sample vectors around the interior point, within the given distance. """

    centre = region.interior_point
    angles = rng.uniform(-np.pi, np.pi, count)
    lengths = radius * np.sqrt(rng.uniform(0.0, 1.0, count))
    directions = np.array([direction_at(centre, angle) for angle in angles])
    v = exp_vectors(region.space, centre.v, directions, lengths)
    return v if region.space is Space.EUCLIDEAN else region.space.project(v)
