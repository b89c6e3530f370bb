import logging
import math
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from ccgeom.config import Settings, get_settings
from ccgeom.cycles import CycleArc, point_on, tangent_at, curvature_of
from ccgeom.decorators import frozen_dataclass
from ccgeom.exceptions import NonCompact
from ccgeom.regions.pieces import boundary_pieces
from ccgeom.regions.region import ConvexRegion
from ccgeom.space_kernel import Space, Point, distance, oriented_angle

logger = logging.getLogger(__name__)


@frozen_dataclass
class Vertex:
    """ A junction of two boundary arcs and the turning of the tangent there. """

    point: Point
    outer_angle: float


@frozen_dataclass
class ArcChain:
    """
        One connected boundary component, traversed counterclockwise (interior on the left).
        vertices[i] joins arcs[i] to arcs[i + 1] (cyclically for closed chains).
    """

    arcs: Tuple[CycleArc, ...]
    closed: bool
    vertices: Tuple[Vertex, ...] = ()

    @property
    def space(self) -> Space:
        return self.arcs[0].space

    @property
    def is_bounded(self) -> bool:
        return all(arc.is_bounded for arc in self.arcs)

    @property
    def length(self) -> float:
        return sum(arc.length for arc in self.arcs)

    @property
    def total_turning(self) -> float:
        """ Sum of the outer angles plus the integrated geodesic curvature of the arcs. """
        return sum(v.outer_angle for v in self.vertices) + sum(curvature_of(a.cycle) * a.length for a in self.arcs)

    def closure_gap(self) -> float:
        """ Largest mismatch between consecutive arc endpoints. """

        pairs = list(zip(self.arcs, self.arcs[1:]))

        if self.closed:
            pairs.append((self.arcs[-1], self.arcs[0]))

        gaps = [distance(a.endpoints[1], b.endpoints[0]) for a, b in pairs]
        return max(gaps, default=0.0)


def _start(arc: CycleArc) -> Optional[Point]:
    return point_on(arc.cycle, arc.start) if math.isfinite(arc.start) else None


def _end(arc: CycleArc) -> Optional[Point]:
    return point_on(arc.cycle, arc.end) if math.isfinite(arc.end) else None


def _vertex(incoming: CycleArc, outgoing: CycleArc) -> Vertex:
    p = _end(incoming)
    space = p.space
    q = _start(outgoing)
    turn = float(oriented_angle(space, p.v, tangent_at(incoming.cycle, p), tangent_at(outgoing.cycle, q)))
    return Vertex(point=p, outer_angle=max(turn, 0.0))


def _chain(arcs: list[CycleArc], closed: bool) -> ArcChain:
    junctions = list(zip(arcs, arcs[1:]))

    if closed and len(arcs) > 1:
        junctions.append((arcs[-1], arcs[0]))

    return ArcChain(arcs=tuple(arcs), closed=closed, vertices=tuple(_vertex(a, b) for a, b in junctions))


def _nearest_start(point: Point, pending: list[CycleArc]) -> Tuple[float, int]:
    found = [(distance(point, _start(arc)), i) for i, arc in enumerate(pending) if math.isfinite(arc.start)]
    return min(found, default=(math.inf, -1))


def _follow(first: CycleArc, pending: list[CycleArc]) -> ArcChain:
    """ Walks from first along nearest end-to-start matches until an infinite end or back at first. """

    chain = [first]

    while math.isfinite(chain[-1].end):
        end = _end(chain[-1])
        gap, index = _nearest_start(end, pending)

        if math.isfinite(first.start) and distance(end, _start(first)) <= gap:
            return _chain(chain, closed=True)

        if index < 0:
            logger.warning('Boundary chain ends at a finite point without a following arc')
            return _chain(chain, closed=False)

        if gap > get_settings().chain_closure:
            logger.warning('Boundary arcs joined across a gap of %.3e', gap)

        chain.append(pending.pop(index))

    return _chain(chain, closed=False)


def link_arcs(arcs: list[CycleArc]) -> list[ArcChain]:
    """ Orders boundary arcs into chains by matching each end point to the nearest start point. """

    pending = [arc for arc in arcs if not arc.is_full]
    chains = [ArcChain(arcs=(arc,), closed=True) for arc in arcs if arc.is_full]

    while pending:
        unbounded = [i for i, arc in enumerate(pending) if not math.isfinite(arc.start)]
        chains.append(_follow(pending.pop(unbounded[0] if unbounded else 0), pending))

    return chains


def boundary_chain(region: ConvexRegion) -> Tuple[ArcChain, ...]:
    """ One chain per connected boundary component, each traversed with the region on its left. """
    return _boundary_chain(region, get_settings())


@lru_cache(maxsize=256)
def _boundary_chain(region: ConvexRegion, settings: Settings) -> Tuple[ArcChain, ...]:
    cycles = region.active_cycles
    arcs = [piece.arc(cycles) for piece in boundary_pieces(cycles)]
    chains = tuple(link_arcs(arcs))

    for chain in chains:
        if chain.closed and chain.closure_gap() > settings.chain_closure:
            logger.warning('Boundary chain closes only within %.3e', chain.closure_gap())

    return chains


def is_compact(region: ConvexRegion) -> bool:
    if region.space is Space.SPHERE:
        return True

    chains = boundary_chain(region)
    return len(chains) == 1 and chains[0].closed


def require_compact(region: ConvexRegion, operation: str) -> ArcChain:
    """ The single closed boundary chain of a compact region. """

    if not is_compact(region):
        raise NonCompact(f'{operation} needs a compact region')

    return boundary_chain(region)[0]


def vertices_of(region: ConvexRegion) -> Tuple[Vertex, ...]:
    return tuple(v for chain in boundary_chain(region) for v in chain.vertices)


def finite_vertices(region: ConvexRegion) -> Tuple[Point, ...]:
    """ The non-smooth boundary points. """

    tolerance = get_settings().angle_match_tolerance
    return tuple(v.point for v in vertices_of(region) if v.outer_angle > tolerance)


def gauss_bonnet_defect(region: ConvexRegion, area: float) -> float:
    """ Total turning of the closed boundary plus curvature times area, minus 2 pi. """

    chain = require_compact(region, 'The Gauss-Bonnet check')
    return chain.total_turning + region.space.curvature * area - 2.0 * np.pi
