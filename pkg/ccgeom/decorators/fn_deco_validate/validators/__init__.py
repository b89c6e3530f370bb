from .abstract_validator import Validator
from .composite_validator import Composite
from .enum import IsEnum
from .for_each import ForEach
from .is_finite import IsFinite
from .max import Max
from .min import Min
from .not_empty import NotEmpty
