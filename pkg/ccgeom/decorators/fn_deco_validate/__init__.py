from .fn_deco_validate import validate
from .parameters import Parameter, NoValue, ExternalParameter, Deserializable, EnvironmentVariableParameter
from .validators import Validator, Composite, IsEnum, ForEach, IsFinite, Max, Min, NotEmpty
