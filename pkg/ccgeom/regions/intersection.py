import logging
from enum import Enum
from typing import Optional

from ccgeom.cycles import CycleArc
from ccgeom.decorators import frozen_dataclass
from ccgeom.exceptions import EmptyInterior, SpaceMismatch
from ccgeom.regions.boundary import ArcChain, boundary_chain, is_compact
from ccgeom.regions.pieces import opposite_pairs, cycle_pieces
from ccgeom.regions.region import ConvexRegion, HalfDomain

logger = logging.getLogger(__name__)


class IntersectionStatus(Enum):
    EMPTY_INTERIOR = 'empty_interior'
    COMPACT_LENS = 'compact_lens'
    UNBOUNDED = 'unbounded'
    DEGENERATE_CHORD = 'degenerate_chord'


@frozen_dataclass
class IntersectionResult:
    status: IntersectionStatus
    region: Optional[ConvexRegion] = None
    chain: Optional[ArcChain] = None
    description: str = ''
    segment: Optional[CycleArc] = None

    @property
    def has_interior(self) -> bool:
        return self.region is not None


def _degenerate(halves: list[HalfDomain], pairs: list[tuple[int, int]]) -> IntersectionResult:
    cycles = [half.effective for half in halves]
    index, partner = pairs[0]
    pieces = cycle_pieces(cycles, index, exclude=[partner])

    if not pieces:
        return IntersectionResult(status=IntersectionStatus.EMPTY_INTERIOR,
                                  description='The sets meet at most in isolated points of a common geodesic')

    segment = pieces[0].arc(cycles)
    logger.info('Intersection collapses to a geodesic piece of length %.6g', segment.length)
    return IntersectionResult(status=IntersectionStatus.DEGENERATE_CHORD, segment=segment,
                              description='The sets meet only along a common geodesic piece')


def intersect_regions(a: ConvexRegion, b: ConvexRegion) -> IntersectionResult:
    """
        The intersection of two regions: the union of their constraints, classified as empty, compact, unbounded
        or collapsed onto a common chord.
    """

    if a.space is not b.space:
        raise SpaceMismatch(f'Cannot intersect a region of {a.space.value} with one of {b.space.value}')

    halves = list(a.pruned().placed_halves) + list(b.pruned().placed_halves)
    pairs = opposite_pairs([half.effective for half in halves])

    if pairs:
        return _degenerate(halves, pairs)

    try:
        region = ConvexRegion(space=a.space, halves=tuple(halves))
    except EmptyInterior as ex:
        return IntersectionResult(status=IntersectionStatus.EMPTY_INTERIOR, description=str(ex))

    region = region.pruned()

    if is_compact(region):
        return IntersectionResult(status=IntersectionStatus.COMPACT_LENS, region=region,
                                  chain=boundary_chain(region)[0])

    chains = boundary_chain(region)
    return IntersectionResult(status=IntersectionStatus.UNBOUNDED, region=region,
                              description=f'Unbounded with {len(chains)} boundary component(s)')
