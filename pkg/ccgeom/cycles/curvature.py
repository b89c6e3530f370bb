import numpy as np

from ccgeom.cycles.cycle import Cycle, CycleKind
from ccgeom.space_kernel import Space


def curvature_of(cycle: Cycle) -> float:
    """
        Geodesic curvature of a cycle:

        | space | circle  | paracycle | hypercycle | geodesic |
        |-------|---------|-----------|------------|----------|
        | S2    | cot r   |           |            | 0        |
        | E2    | 1 / r   |           |            | 0        |
        | H2    | coth r  | 1         | tanh l     | 0        |

        >>> from ccgeom.cycles.cycle import circle
        >>> from ccgeom.space_kernel import Point
        >>> round(curvature_of(circle(Point.plane(0.0, 0.0), 2.0)), 12)
        0.5
    """

    kind = cycle.kind

    if kind is CycleKind.GEODESIC:
        return 0.0

    if kind is CycleKind.PARACYCLE:
        return 1.0

    if kind is CycleKind.HYPERCYCLE:
        return float(np.tanh(cycle.distance))

    r = cycle.radius

    if cycle.space is Space.SPHERE:
        return float(np.cos(r) / np.sin(r))

    if cycle.space is Space.HYPERBOLIC:
        return float(1.0 / np.tanh(r))

    return 1.0 / r


if __name__ == '__main__':
    import doctest
    doctest.testmod(verbose=False, optionflags=doctest.ELLIPSIS)
