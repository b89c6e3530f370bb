import inspect
from functools import wraps
from typing import Any, Callable

from ccgeom.decorators.fn_deco_validate.parameters import Parameter, ExternalParameter
from ccgeom.env_var_logic import is_validation_enabled
from ccgeom.exceptions import ValidateException, TooManyArguments


def validate(*parameters: Parameter, strict: bool = False) -> Callable:
    """
        Validates the values that are passed to the function by using the validators in the given parameters.
        Violations raise the Parameter's exception type, which is OutOfRange for plain parameters.
        External parameters without an explicit argument are loaded from their source.
        The whole layer is skipped when validation is disabled (see env_var_logic).

        Args:
            parameters (multiple Parameter): The parameters that will be validated.
            strict (bool): If strict is true, you have to define a Parameter for each of the
                arguments the decorated function takes.

        Returns:
            Callable: The decorated function.

        Example:
            >>> from ccgeom.decorators.fn_deco_validate.validators import Min
            >>> @validate(Parameter(name='radius', validators=[Min(0, include_boundary=False)]))
            ... def circumference(radius: float) -> float:
            ...     return 2 * radius
            >>> circumference(radius=1.5)
            3.0
            >>> circumference(radius=-1)
            Traceback (most recent call last):
            ...
            ccgeom.exceptions.OutOfRange: {'VALUE': '-1', 'MESSAGE': 'smaller than allowed: -1 is not > 0', 'VALIDATOR': 'Min', 'PARAMETER': 'radius'}
    """

    def validator(func: Callable) -> Callable:
        signature = inspect.signature(func)
        parameter_dict = {parameter.name: parameter for parameter in parameters}

        for name in parameter_dict:
            if name not in signature.parameters:
                raise ValidateException(f'Function {func.__name__} has no argument named {name}.')

        if strict:
            unchecked = [name for name in signature.parameters if name not in parameter_dict and name != 'self']

            if unchecked:
                raise TooManyArguments(f'No parameter found for arguments {unchecked} of {func.__name__}')

        @wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            if not is_validation_enabled():
                return func(*args, **kwargs)

            try:
                bound = signature.bind(*args, **kwargs)
            except TypeError as ex:
                raise ValidateException(str(ex))

            for name, parameter in parameter_dict.items():
                if name in bound.arguments:
                    bound.arguments[name] = parameter.validate(value=bound.arguments[name])
                elif isinstance(parameter, ExternalParameter) and parameter.has_value():
                    bound.arguments[name] = parameter.validate(value=parameter.load_value())

            return func(*bound.args, **bound.kwargs)

        return wrapper
    return validator
