from enum import Enum
from typing import Any, Dict, Optional, Tuple

from ccgeom.cycles import Cycle
from ccgeom.decorators import frozen_dataclass
from ccgeom.space_kernel import Isometry, IsometryType, Point


class Classification(Enum):
    TRIVIAL = 'trivial'
    CENTRAL_ONLY = 'central_only'
    AXIAL_ONLY = 'axial_only'
    CENTRAL_AND_AXIAL = 'central_and_axial'
    ROTATIONAL = 'rotational'
    FULL_DISK_GROUP = 'full_disk_group'


@frozen_dataclass
class Witness:
    """ A verified congruence of a region onto itself and its Hausdorff residual. """

    isometry: Isometry
    residual: float
    kind: IsometryType

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind.value,
            'residual': self.residual,
            'matrix': self.isometry.m.tolist(),
        }


@frozen_dataclass
class SymmetryReport:
    """
        The congruence group of a compact region.
        rotation_order is 1 without rotational symmetry and None for the continuous group of a disk.
    """

    classification: Classification
    witnesses: Tuple[Witness, ...]
    axes: Tuple[Cycle, ...] = ()
    centre: Optional[Point] = None
    rotation_order: Optional[int] = 1
    tolerance: float = 0.0
    diameter: float = 0.0

    @property
    def has_central_symmetry(self) -> bool:
        return self.rotation_order is None or self.rotation_order % 2 == 0

    @property
    def max_residual(self) -> float:
        return max((w.residual for w in self.witnesses), default=0.0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'classification': self.classification.value,
            'rotation_order': self.rotation_order,
            'centre': None if self.centre is None else self.centre.v.tolist(),
            'axes': [axis.to_dict() for axis in self.axes],
            'witnesses': [w.to_dict() for w in self.witnesses],
            'tolerance': self.tolerance,
            'diameter': self.diameter,
        }
