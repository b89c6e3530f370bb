import threading
from contextlib import contextmanager
from dataclasses import fields, asdict
from typing import Any, Dict, Iterator, List, Optional

from ccgeom import constants
from ccgeom.decorators.cls_deco_frozen_dataclass import frozen_dataclass
from ccgeom.decorators.fn_deco_validate.parameters import EnvironmentVariableParameter
from ccgeom.decorators.fn_deco_validate.validators import Min


@frozen_dataclass
class Settings:
    """
        Tolerances and sampling densities used across the kernel.
        Every field can be overridden by an environment variable CCGEOM_<FIELD NAME IN UPPER CASE>.

        >>> Settings().symmetry_tolerance
        1e-06
        >>> Settings().copy_with(symmetry_tolerance=1e-4).symmetry_tolerance
        0.0001
    """

    form_tolerance: float = constants.FORM_TOLERANCE
    quadric_drift: float = constants.QUADRIC_DRIFT
    quadric_acceptance: float = constants.QUADRIC_ACCEPTANCE
    membership_margin: float = constants.MEMBERSHIP_MARGIN
    tangency_window: float = constants.TANGENCY_WINDOW
    chain_closure: float = constants.CHAIN_CLOSURE
    symmetry_tolerance: float = constants.SYMMETRY_TOLERANCE
    angle_match_tolerance: float = constants.ANGLE_MATCH_TOLERANCE
    oracle_tolerance: float = constants.ORACLE_TOLERANCE
    redundancy_samples: int = constants.REDUNDANCY_SAMPLES
    support_directions: int = constants.SUPPORT_DIRECTIONS
    boundary_samples_per_arc: int = constants.BOUNDARY_SAMPLES_PER_ARC
    diameter_samples: int = constants.DIAMETER_SAMPLES
    area_directions: int = constants.AREA_DIRECTIONS
    oracle_grid: int = constants.ORACLE_GRID
    oracle_angles: int = constants.ORACLE_ANGLES
    oracle_screen_samples: int = constants.ORACLE_SCREEN_SAMPLES
    max_constraints: int = constants.MAX_CONSTRAINTS
    resample_limit: int = constants.RESAMPLE_LIMIT
    default_clip: float = constants.DEFAULT_CLIP

    @classmethod
    def from_environment(cls) -> 'Settings':
        values = {}

        for field in fields(cls):
            value_type = int if field.type in (int, 'int') else float
            parameter = EnvironmentVariableParameter(
                name=field.name,
                env_var_name=constants.ENV_PREFIX + field.name.upper(),
                value_type=value_type,
                validators=[Min(0, include_boundary=False)],
                required=False,
                default=field.default,
            )

            if parameter.has_value():
                values[field.name] = parameter.validate(value=parameter.load_value())

        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


_lock = threading.Lock()
_environment: Optional[Settings] = None
_overrides = threading.local()


def _stack() -> List[Settings]:
    if not hasattr(_overrides, 'stack'):
        _overrides.stack = []

    return _overrides.stack


def get_settings() -> Settings:
    """ The innermost override of the calling thread, else the settings read once from the environment. """

    global _environment

    stack = _stack()

    if stack:
        return stack[-1]

    with _lock:
        if _environment is None:
            _environment = Settings.from_environment()

        return _environment


@contextmanager
def override_settings(settings: Optional[Settings] = None, **changes: Any) -> Iterator[Settings]:
    """ Temporarily replaces the settings of the calling thread, e.g. inside a worker process or a test. """

    new = (settings or get_settings()).copy_with(**changes)
    stack = _stack()
    stack.append(new)

    try:
        yield new
    finally:
        stack.pop()
