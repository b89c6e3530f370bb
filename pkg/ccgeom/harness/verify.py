import logging
from enum import Enum
from typing import Callable, Dict

from ccgeom.decorators import validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import IsEnum, Min
from ccgeom.harness.congruent_pairs import run_disk_pair_suite, run_hyperbolic_pairs
from ccgeom.harness.line_pairs import run_line_pairs
from ccgeom.harness.numerics import run_angle_distortion_suite, run_chord_lens, run_curvature
from ccgeom.harness.oracle_agreement import run_oracle_agreement
from ccgeom.harness.parallel_domains import run_parallel_domains
from ccgeom.harness.planar_cases import run_planar_cases
from ccgeom.harness.report import ExperimentReport
from ccgeom.harness.thin_quadrangle import run_thin_quadrangles

logger = logging.getLogger(__name__)

Runner = Callable[[int, int, int], ExperimentReport]


class Experiment(Enum):
    DISK_PAIRS = 'disk_pairs'
    PLANAR_CASES = 'planar_cases'
    HYPERBOLIC_PAIRS = 'hyperbolic_pairs'
    ANGLE_DISTORTION = 'angle_distortion'
    THIN_QUADRANGLES = 'thin_quadrangles'
    LINE_PAIRS = 'line_pairs'
    PARALLEL_DOMAINS = 'parallel_domains'
    CHORD_LENS = 'chord_lens'
    CURVATURE = 'curvature'
    ORACLE = 'oracle'

    @classmethod
    def _missing_(cls, value: object) -> 'Experiment | None':
        return SHORT_IDS.get(value) if isinstance(value, str) else None


# short ids accepted in place of the enum values
SHORT_IDS: Dict[str, Experiment] = {
    'thm2': Experiment.DISK_PAIRS,
    'thm3': Experiment.PLANAR_CASES,
    'thm4': Experiment.HYPERBOLIC_PAIRS,
    'lemma1.1': Experiment.ANGLE_DISTORTION,
    'lemma1.9': Experiment.THIN_QUADRANGLES,
    'lemma4.1': Experiment.LINE_PAIRS,
    'lemma4.2': Experiment.PARALLEL_DOMAINS,
}


def _positional(runner: Callable[..., ExperimentReport]) -> Runner:
    return lambda trials, seed, workers: runner(trials, seed, workers)


EXPERIMENTS: Dict[Experiment, Runner] = {
    Experiment.DISK_PAIRS: _positional(run_disk_pair_suite),
    Experiment.PLANAR_CASES: _positional(run_planar_cases),
    Experiment.HYPERBOLIC_PAIRS: _positional(run_hyperbolic_pairs),
    Experiment.ANGLE_DISTORTION: _positional(run_angle_distortion_suite),
    Experiment.THIN_QUADRANGLES: _positional(run_thin_quadrangles),
    Experiment.LINE_PAIRS: _positional(run_line_pairs),
    Experiment.PARALLEL_DOMAINS: _positional(run_parallel_domains),
    Experiment.CHORD_LENS: _positional(run_chord_lens),
    Experiment.CURVATURE: _positional(run_curvature),
    Experiment.ORACLE: _positional(run_oracle_agreement),
}

DEFAULT_TRIALS: Dict[Experiment, int] = {
    Experiment.DISK_PAIRS: 100,
    Experiment.PLANAR_CASES: 50,
    Experiment.HYPERBOLIC_PAIRS: 100,
    Experiment.ANGLE_DISTORTION: 50,
    Experiment.THIN_QUADRANGLES: 50,
    Experiment.LINE_PAIRS: 20,
    Experiment.PARALLEL_DOMAINS: 3,
    Experiment.CHORD_LENS: 100,
    Experiment.CURVATURE: 20,
    Experiment.ORACLE: 100,
}


@validate(
    Parameter(name='experiment', validators=[IsEnum(Experiment, to_upper_case=False)]),
    Parameter(name='trials', validators=[Min(1)]),
    Parameter(name='seed', validators=[Min(0)]),
    Parameter(name='workers', validators=[Min(1)]),
)
def run_experiment(experiment: Experiment, trials: int, seed: int, workers: int = 1) -> ExperimentReport:
    """
        Runs one registered experiment. The same experiment and seed give the same report.

        >>> report = run_experiment(Experiment.ANGLE_DISTORTION, trials=2, seed=1)
        >>> report.experiment, report.passed
        ('angle_distortion', True)
    """

    report = EXPERIMENTS[experiment](trials, seed, workers)
    logger.info(f'{experiment.value}: {len(report.records)} records, {len(report.failures)} failures')
    return report
