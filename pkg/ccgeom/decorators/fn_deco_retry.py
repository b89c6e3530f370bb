import logging
from functools import wraps
from logging import Logger
from typing import Callable, TypeVar, Any, Optional, ParamSpec

C = TypeVar('C', bound=Callable)
P = ParamSpec('P')
R = TypeVar('R')

Exceptions = type[Exception] | tuple[type[Exception], ...]


def retry(
    *,
    attempts: Optional[int] = None,
    exceptions: Exceptions = Exception,
    logger: Logger = None,
) -> Callable[[C], C]:
    """
    Calls the wrapped function again while it raises one of [exceptions], at most `attempts` times in total.
    Random constructions use this to resample until a configuration with the wanted property is drawn.

    Parameters:
        attempts: The number of calls; the resample_limit of the current settings if omitted.
        exceptions: The exceptions that trigger another draw. Everything else propagates at once.
        logger: Receives one warning per failed attempt.

    Example:
        >>> draws = iter([0.3, 0.01, 0.7])
        >>> @retry(attempts=3, exceptions=ValueError)
        ... def draw_large():
        ...     x = next(draws)
        ...     if x < 0.5:
        ...         raise ValueError(f'{x} is too small')
        ...     return x
        >>> draw_large()
        0.7
    """

    def decorator(func: C) -> C:
        @wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            return retry_func(func, *args, attempts=attempts, exceptions=exceptions, logger=logger, **kwargs)
        return wrapper
    return decorator


def retry_func(
    func: Callable[P, R],
    *args: P.args,
    attempts: Optional[int] = None,
    exceptions: Exceptions = Exception,
    logger: Logger = None,
    **kwargs: P.kwargs,
) -> R:
    """ The function form of [retry]. The last attempt is not caught, so its exception reaches the caller. """

    if attempts is None:
        from ccgeom.config import get_settings
        attempts = get_settings().resample_limit

    if logger is None:
        logger = logging.getLogger(__name__)

    for attempt in range(1, attempts):
        try:
            return func(*args, **kwargs)
        except exceptions as ex:
            logger.warning(f'{func.__name__}: draw {attempt} of {attempts} rejected, {type(ex).__name__}: {ex}')

    return func(*args, **kwargs)
