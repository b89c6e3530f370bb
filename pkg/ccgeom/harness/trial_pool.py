import logging
from typing import Any, Callable, List, Sequence, Tuple

import numpy as np

try:
    from multiprocess import Pool
except ImportError:  # pragma: no cover
    Pool = None

from ccgeom.config import Settings, get_settings, override_settings
from ccgeom.decorators import validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import Min
from ccgeom.harness.report import TrialRecord

logger = logging.getLogger(__name__)

TrialFunction = Callable[[int, np.random.Generator], Sequence[TrialRecord]]


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """ The random stream of one trial: seed xor index, so trials do not depend on each other or on scheduling. """
    return np.random.default_rng(seed ^ index)


def _run_one(job: Tuple[TrialFunction, int, int, Settings]) -> List[TrialRecord]:
    """ This runs in a worker process. """

    fn, index, seed, settings = job

    with override_settings(settings):
        return list(fn(index, trial_rng(seed, index)))


@validate(
    Parameter(name='count', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
    Parameter(name='workers', validators=[Min(1)]),
)
def run_trials(fn: TrialFunction, count: int, seed: int, workers: int = 1) -> List[TrialRecord]:
    """
        Runs fn(index, rng) for every trial index and concatenates the returned records in index order.
        With more than one worker the trials are spread over a multiprocess pool; the settings of the calling
        process are handed to every worker.

        Example:
            >>> from ccgeom.harness.report import TrialStatus
            >>> def coin(index, rng):
            ...     return [TrialRecord(trial=index, status=TrialStatus.PASS, notes=f'{rng.integers(2)}')]
            >>> [r.notes for r in run_trials(coin, count=4, seed=7)] == [r.notes for r in run_trials(coin, 4, 7)]
            True
    """

    settings = get_settings()
    jobs = [(fn, index, seed, settings) for index in range(count)]

    if workers > 1 and count > 1:
        if Pool is None:
            raise ImportError('You need to install the multiprocess package to use workers: pip install multiprocess')

        logger.debug(f'Running {count} trials on {workers} workers')

        with Pool(processes=min(workers, count)) as pool:
            results: List[Any] = pool.map(_run_one, jobs)
    else:
        results = [_run_one(job) for job in jobs]

    return [record for records in results for record in records]
