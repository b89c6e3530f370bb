import logging
from datetime import datetime
from functools import wraps
from typing import Any

from ccgeom.constants import F, ReturnType

logger = logging.getLogger(__name__)


def timer(func: F) -> F:
    """
        Logs how long the execution of the decorated function takes (INFO level).

        Example:

        >>> @timer
        ... def long_taking_calculation():
        ...     return 42
        >>> long_taking_calculation()
        42
    """

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> ReturnType:
        start_time: datetime = datetime.now()
        value = func(*args, **kwargs)
        run_time = datetime.now() - start_time
        logger.info(f'Timer: Finished function "{func.__name__}" in {run_time}.')
        return value

    return wrapper


if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=False, optionflags=doctest.ELLIPSIS)
