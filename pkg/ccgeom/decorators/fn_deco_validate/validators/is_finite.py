import math
from numbers import Real

from ccgeom.decorators.fn_deco_validate.validators.abstract_validator import Validator


class IsFinite(Validator):
    """
        Accepts finite real numbers only.

        >>> IsFinite().validate(0.5)
        0.5
    """

    def validate(self, value: Real) -> float:
        if isinstance(value, bool) or not isinstance(value, Real) or not math.isfinite(value):
            self.raise_exception(msg=f'{value} is not a finite real number.', value=value)

        return float(value)
