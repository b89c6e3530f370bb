import math
from typing import Optional, Union

import numpy as np

from ccgeom.cycles.cycle import Cycle
from ccgeom.cycles.parametrization import points_at, perimeter, ideal_endpoints, parameter_of
from ccgeom.decorators import frozen_dataclass, validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import Min
from ccgeom.exceptions import UnboundedArc, OutOfRange
from ccgeom.space_kernel import Point, IdealPoint, distance

Endpoint = Union[Point, IdealPoint, None]


@frozen_dataclass
class CycleArc:
    """
        The part of a cycle between the arclength parameters start < end, traversed in the positive direction
        (orientation +1) or backwards (orientation -1). Infinite parameters mark unbounded arcs.
    """

    cycle: Cycle
    start: float
    end: float
    orientation: int = 1

    def __post_init__(self) -> None:
        if not self.start < self.end:
            raise OutOfRange(msg=f'Arc parameters must increase: {self.start} >= {self.end}', parameter_name='end')

        if self.cycle.is_closed and self.end - self.start > perimeter(self.cycle) * (1.0 + 1e-12):
            raise OutOfRange(msg='Arc is longer than its closed cycle', parameter_name='end', value=self.end)

    @classmethod
    def full(cls, cycle: Cycle) -> 'CycleArc':
        if cycle.is_closed:
            return cls(cycle=cycle, start=0.0, end=perimeter(cycle))

        return cls(cycle=cycle, start=-math.inf, end=math.inf)

    @classmethod
    def between(cls, cycle: Cycle, a: Point, b: Point) -> 'CycleArc':
        """ The arc from a to b in the positive direction of the cycle. """

        start, end = parameter_of(cycle, a), parameter_of(cycle, b)

        if cycle.is_closed and end <= start:
            end += perimeter(cycle)

        return cls(cycle=cycle, start=start, end=end)

    @property
    def space(self):
        return self.cycle.space

    @property
    def is_bounded(self) -> bool:
        return math.isfinite(self.start) and math.isfinite(self.end)

    @property
    def is_full(self) -> bool:
        return self.cycle.is_closed and self.length >= perimeter(self.cycle) * (1.0 - 1e-12)

    @property
    def length(self) -> float:
        return self.end - self.start

    @property
    def endpoints(self) -> tuple[Endpoint, Endpoint]:
        """ (first, last) in traversal order; ideal points or None stand in for infinite parameters. """

        backward, forward = ideal_endpoints(self.cycle)
        first = point_on(self.cycle, self.start) if math.isfinite(self.start) else backward
        last = point_on(self.cycle, self.end) if math.isfinite(self.end) else forward
        return (first, last) if self.orientation > 0 else (last, first)

    def parameters(self, n: int, clip: Optional[float] = None) -> np.ndarray:
        start, end = self.start, self.end

        if not self.is_bounded:
            if clip is None:
                raise UnboundedArc('Sampling an unbounded arc needs a clip window')

            start, end = max(start, -clip), min(end, clip)

            if start >= end:
                return np.empty(0)

        s = np.linspace(start, end, n)
        return s if self.orientation > 0 else s[::-1]

    def reversed(self) -> 'CycleArc':
        return self.copy_with(orientation=-self.orientation)

    def midpoint(self) -> Point:
        if self.is_bounded:
            return point_on(self.cycle, (self.start + self.end) / 2.0)

        return point_on(self.cycle, float(np.clip(0.0, self.start + 1.0, self.end - 1.0)))


def point_on(cycle: Cycle, s: float) -> Point:
    return Point(v=points_at(cycle, s), space=cycle.space)


def sample_vectors(arc: CycleArc, n: int, clip: Optional[float] = None) -> np.ndarray:
    return points_at(arc.cycle, arc.parameters(n, clip))


@validate(Parameter(name='n', validators=[Min(2)]))
def sample_arc(arc: CycleArc, n: int, clip: Optional[float] = None) -> list[Point]:
    """
        n points of the arc with uniform arclength spacing, endpoints included. An unbounded arc is cut to the
        arclength window [-clip, clip] around the parameter origin of its cycle.
    """

    return [Point(v=v, space=arc.space) for v in sample_vectors(arc, n, clip)]


def chord_arc_ratio(arc: CycleArc) -> float:
    """ Distance between the endpoints divided by the arc length. """

    if not arc.is_bounded:
        raise UnboundedArc('An unbounded arc has no chord')

    first, last = arc.endpoints
    return distance(first, last) / arc.length
