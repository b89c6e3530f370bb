"""
    Boundary pieces of an intersection of cycle half-domains: the parameter intervals of each cycle that survive
    all other constraints. Breakpoints come from exact pairwise cycle intersections.
"""

import logging
import math
from typing import Sequence, Tuple

import numpy as np

from ccgeom.config import get_settings
from ccgeom.cycles import Cycle, CycleArc, intersect_cycles, parameter_of, perimeter, points_at, \
    same_point_set
from ccgeom.decorators import frozen_dataclass

logger = logging.getLogger(__name__)

_SHORTEST_PIECE = 1e-12
_UNBOUNDED_STEP = 1.0


@frozen_dataclass
class Piece:
    """ The interval [start, end] of the arclength parameter of cycle number index that bounds the region. """

    index: int
    start: float
    end: float

    def arc(self, cycles: Sequence[Cycle]) -> CycleArc:
        return CycleArc(cycle=cycles[self.index], start=self.start, end=self.end)


def duplicates(cycles: Sequence[Cycle]) -> Tuple[bool, ...]:
    """ Flags every constraint equal (as an oriented cycle) to an earlier one. """

    return tuple(any(cycles[j].same_as(cycles[i]) for j in range(i)) for i in range(len(cycles)))


def opposite_pairs(cycles: Sequence[Cycle]) -> list[Tuple[int, int]]:
    """ Pairs of constraints on the same geodesic with opposite positive sides. """

    return [(i, j) for i in range(len(cycles)) for j in range(i + 1, len(cycles))
            if same_point_set(cycles[i], cycles[j]) and not cycles[i].same_as(cycles[j])]


def satisfies(cycles: Sequence[Cycle], x: np.ndarray, skip: Sequence[int] = ()) -> np.ndarray:
    """ Vectorised test that points satisfy every constraint except those in skip, up to the membership margin. """

    margin = get_settings().membership_margin
    ok = np.ones(np.asarray(x).shape[:-1], dtype=bool)

    for index, cycle in enumerate(cycles):
        if index not in skip:
            ok &= cycle.signed_distances(x) >= -margin

    return ok


def _breakpoints(cycles: Sequence[Cycle], index: int, ignored: Sequence[bool]) -> list[float]:
    cycle = cycles[index]
    found = []

    for other, flag in enumerate(ignored):
        if other == index or flag:
            continue

        result = intersect_cycles(cycle, cycles[other])

        if result.coincident:
            continue

        found.extend(parameter_of(cycle, p) for p in result.points)

    return sorted(found)


def _candidate_intervals(cycle: Cycle, breaks: list[float]) -> list[Tuple[float, float]]:
    if cycle.is_closed:
        length = perimeter(cycle)

        if not breaks:
            return [(0.0, length)]

        breaks = [b % length for b in breaks]
        breaks.sort()
        return list(zip(breaks, breaks[1:])) + [(breaks[-1], breaks[0] + length)]

    if not breaks:
        return [(-math.inf, math.inf)]

    return [(-math.inf, breaks[0])] + list(zip(breaks, breaks[1:])) + [(breaks[-1], math.inf)]


def _inner_parameter(start: float, end: float) -> float:
    if math.isinf(start) and math.isinf(end):
        return 0.0

    if math.isinf(start):
        return end - _UNBOUNDED_STEP

    if math.isinf(end):
        return start + _UNBOUNDED_STEP

    return (start + end) / 2.0


def cycle_pieces(cycles: Sequence[Cycle], index: int, ignored: Sequence[bool] = None,
                 exclude: Sequence[int] = ()) -> list[Piece]:
    """ The surviving intervals of cycle number index, in increasing parameter order. """

    ignored = ignored if ignored is not None else [False] * len(cycles)
    ignored = [flag or other in exclude for other, flag in enumerate(ignored)]
    cycle = cycles[index]
    pieces = []

    for start, end in _candidate_intervals(cycle, _breakpoints(cycles, index, ignored)):
        if end - start <= _SHORTEST_PIECE:
            continue

        inner = points_at(cycle, _inner_parameter(start, end))
        skip = [index] + [other for other, flag in enumerate(ignored) if flag]

        if satisfies(cycles, inner, skip):
            pieces.append(Piece(index=index, start=start, end=end))

    return _merge(cycle, pieces)


def _merge(cycle: Cycle, pieces: list[Piece]) -> list[Piece]:
    """ Joins neighbouring pieces split at a breakpoint that is not a corner (e.g. an outside tangency). """

    merged: list[Piece] = []

    for piece in pieces:
        if merged and abs(merged[-1].end - piece.start) <= _SHORTEST_PIECE:
            merged[-1] = merged[-1].copy_with(end=piece.end)
        else:
            merged.append(piece)

    if cycle.is_closed and len(merged) > 1:
        length = perimeter(cycle)
        first, last = merged[0], merged[-1]

        if abs(last.end - length - first.start) <= _SHORTEST_PIECE:
            merged = [last.copy_with(end=first.end + length)] + merged[1:-1]

    return merged


def boundary_pieces(cycles: Sequence[Cycle]) -> list[Piece]:
    ignored = duplicates(cycles)
    result = []

    for index, flag in enumerate(ignored):
        if not flag:
            result.extend(cycle_pieces(cycles, index, ignored))

    return result


def redundancy_flags(cycles: Sequence[Cycle]) -> Tuple[bool, ...]:
    """ A constraint is redundant if no piece of positive length of its cycle lies on the boundary. """

    ignored = duplicates(cycles)
    flags = []

    for index, flag in enumerate(ignored):
        redundant = flag or not cycle_pieces(cycles, index, ignored)

        if redundant:
            logger.debug('Constraint %d (%s) is redundant', index, cycles[index].kind.value)

        flags.append(redundant)

    return tuple(flags)