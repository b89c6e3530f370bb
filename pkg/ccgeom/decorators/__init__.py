from .cls_deco_frozen_dataclass import frozen_dataclass
from .fn_deco_retry import retry, retry_func
from .fn_deco_timer import timer
from .fn_deco_validate import validate, Parameter, EnvironmentVariableParameter, Deserializable
