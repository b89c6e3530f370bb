from typing import Type, Any, Union

from ccgeom.exceptions import ConversionError

T = Union[bool, int, float, str]


def convert_value(value: Any, target_type: Type[T]) -> T:
    if isinstance(value, target_type) and not (target_type is int and isinstance(value, bool)):
        return value

    if target_type == float and isinstance(value, int) and not isinstance(value, bool):
        return float(value)

    value = str(value).strip().lower()

    if target_type == bool:
        if value in ['true', '1']:
            return True
        elif value in ['false', '0']:
            return False

        raise ConversionError(f'Value {value} cannot be converted to bool.')

    try:
        return target_type(value)
    except ValueError:
        raise ConversionError(f'Value {value} cannot be converted to {target_type.__name__}.')
