from .abstract_parameter import Parameter, NoValue
from .abstract_external_parameter import ExternalParameter
from .deserializable import Deserializable
from .environment_variable_parameter import EnvironmentVariableParameter
