from typing import TypeVar, Callable

ReturnType = TypeVar('ReturnType')
F = Callable[..., ReturnType]
C = TypeVar('C', bound=Callable)

# numerical tolerances
FORM_TOLERANCE = 1e-10
QUADRIC_DRIFT = 1e-12
QUADRIC_ACCEPTANCE = 1e-9
MEMBERSHIP_MARGIN = 1e-10
TANGENCY_WINDOW = 1e-8
CHAIN_CLOSURE = 1e-9
SYMMETRY_TOLERANCE = 1e-6
ANGLE_MATCH_TOLERANCE = 1e-6
ORACLE_TOLERANCE = 1e-5

# sampling densities
REDUNDANCY_SAMPLES = 1000
SUPPORT_DIRECTIONS = 720
BOUNDARY_SAMPLES_PER_ARC = 512
DIAMETER_SAMPLES = 384
AREA_DIRECTIONS = 2048
ORACLE_GRID = 9
ORACLE_ANGLES = 24
ORACLE_SCREEN_SAMPLES = 192

# limits
MAX_CONSTRAINTS = 64
RESAMPLE_LIMIT = 100
DEFAULT_CLIP = 6.0

ENV_PREFIX = 'CCGEOM_'
