import csv
import json
import logging
from collections import Counter
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, Optional, Sequence, Tuple

from ccgeom.decorators import frozen_dataclass
from ccgeom.exceptions import AmbiguousNearTolerance, GeometryException
from ccgeom.regions import ConvexRegion
from ccgeom.symmetry import Classification, SymmetryReport, classify

logger = logging.getLogger(__name__)

CSV_COLUMNS = ('trial', 'status', 'classification', 'max_residual', 'diameter', 'notes')


class TrialStatus(Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'
    AMBIGUOUS = 'ambiguous'


@frozen_dataclass
class TrialRecord:
    """ One row of an experiment: what was built (inputs), what was found and whether it matches the claim. """

    trial: int
    status: TrialStatus
    classification: str = ''
    max_residual: float = 0.0
    diameter: float = 0.0
    notes: str = ''
    inputs: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.status in (TrialStatus.PASS, TrialStatus.SKIPPED)

    def to_row(self) -> Dict[str, Any]:
        return {
            'trial': self.trial,
            'status': self.status.value,
            'classification': self.classification,
            'max_residual': repr(self.max_residual),
            'diameter': repr(self.diameter),
            'notes': self.notes,
        }

    def to_dict(self) -> Dict[str, Any]:
        return {**self.to_row(), 'max_residual': self.max_residual, 'diameter': self.diameter,
                'inputs': self.inputs or {}}


@frozen_dataclass
class ExperimentReport:
    experiment: str
    seed: int
    records: Tuple[TrialRecord, ...]
    settings: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    @property
    def failures(self) -> Tuple[TrialRecord, ...]:
        return tuple(record for record in self.records if not record.passed)

    def summary(self) -> Dict[str, Any]:
        statuses = Counter(record.status.value for record in self.records)
        classes = Counter(record.classification for record in self.records if record.classification)
        return {
            'trials': len(self.records),
            'statuses': dict(sorted(statuses.items())),
            'classifications': dict(sorted(classes.items())),
            'max_residual': max((record.max_residual for record in self.records), default=0.0),
            'passed': self.passed,
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            'experiment': self.experiment,
            'seed': self.seed,
            'verdict': 'pass' if self.passed else 'fail',
            'summary': self.summary(),
            'settings': self.settings or {},
            'records': [record.to_dict() for record in self.records],
        }


def merge_reports(experiment: str, seed: int, reports: Sequence[ExperimentReport]) -> ExperimentReport:
    """ Concatenates the records of several reports, renumbering the trials. """

    records = [record for report in reports for record in report.records]
    settings = reports[0].settings if reports else None
    return ExperimentReport(experiment=experiment, seed=seed, settings=settings,
                            records=tuple(record.copy_with(trial=i) for i, record in enumerate(records)))


def write_csv(report: ExperimentReport, path: str | Path) -> None:
    with open(path, 'w', newline='', encoding='utf-8') as file:
        writer = csv.DictWriter(file, fieldnames=CSV_COLUMNS)
        writer.writeheader()

        for record in report.records:
            writer.writerow(record.to_row())

    logger.info(f'Wrote {len(report.records)} rows to {path}')


def write_json(report: ExperimentReport, path: str | Path) -> None:
    with open(path, 'w', encoding='utf-8') as file:
        json.dump(report.to_dict(), file, indent=2)

    logger.info(f'Wrote the {report.experiment} summary to {path}')


def classified_record(
        trial: int,
        region: ConvexRegion,
        expected: Iterable[Classification],
        inputs: Dict[str, Any],
        notes: str = '',
        check: Optional[Callable[[SymmetryReport], str]] = None,
        tol: Optional[float] = None,
) -> TrialRecord:
    """
        Classifies region and compares with the expected classifications. check may inspect the report
        further and returns a failure note, or '' when satisfied.
    """

    expected = tuple(expected)

    try:
        report = classify(region, tol=tol)
    except AmbiguousNearTolerance as ex:
        partial = ex.report
        return TrialRecord(trial=trial, status=TrialStatus.AMBIGUOUS, inputs=inputs,
                           classification=partial.classification.value if partial else '',
                           max_residual=partial.max_residual if partial else 0.0,
                           diameter=partial.diameter if partial else 0.0, notes=_joined(notes, str(ex)))
    except GeometryException as ex:
        return TrialRecord(trial=trial, status=TrialStatus.FAIL, inputs=inputs,
                           notes=_joined(notes, f'{type(ex).__name__}: {ex}'))

    problem = ''

    if report.classification not in expected:
        problem = f'expected {"/".join(c.value for c in expected)}'
    elif check is not None:
        problem = check(report)

    if problem:
        logger.info(f'Trial {trial} failed: {problem}')

    return TrialRecord(trial=trial, status=TrialStatus.FAIL if problem else TrialStatus.PASS,
                       classification=report.classification.value, max_residual=report.max_residual,
                       diameter=report.diameter, notes=_joined(notes, problem), inputs=inputs)


def checked_record(trial: int, problems: Iterable[str], inputs: Dict[str, Any], notes: str = '',
                   classification: str = '', max_residual: float = 0.0, diameter: float = 0.0) -> TrialRecord:
    """ A record of a bespoke check: it passes when there are no problems. """

    problems = [p for p in problems if p]
    return TrialRecord(trial=trial, status=TrialStatus.FAIL if problems else TrialStatus.PASS,
                       classification=classification, max_residual=max_residual, diameter=diameter,
                       notes=_joined(notes, *problems), inputs=inputs)


def _joined(*notes: str) -> str:
    return '; '.join(note for note in notes if note)
