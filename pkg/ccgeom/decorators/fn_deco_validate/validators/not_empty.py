import collections
from typing import Sequence

from ccgeom.decorators.fn_deco_validate.validators.abstract_validator import Validator


class NotEmpty(Validator):
    def validate(self, value: Sequence) -> Sequence:
        """ Throws a ValidatorException if the sequence is empty. """

        if isinstance(value, collections.abc.Sized) and not isinstance(value, str):
            if len(value) == 0:
                self.raise_exception(msg=f'Got an empty collection which is invalid.', value=value)

            return value

        self.raise_exception(msg=f'Got {type(value)} which is not a collection.', value=value)
