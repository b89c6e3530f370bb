"""
    The ccgeom command line: intersect, symmetry, verify and render. Exit code 0 means every verdict passed,
    1 that some verdict failed and 2 a usage or input error.
"""

import argparse
import inspect
import json
import logging
import math
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence

from docstring_parser import parse

from ccgeom.exceptions import GeometryException, OutsideModelDomain, ParseError, ValidateException
from ccgeom.harness.render import render as render_scene
from ccgeom.harness.report import write_csv, write_json
from ccgeom.harness.scene import parse_scene, scene_intersection
from ccgeom.harness.verify import DEFAULT_TRIALS, SHORT_IDS, Experiment, run_experiment
from ccgeom.regions import ArcChain, boundary_chain
from ccgeom.space_kernel import ModelKind
from ccgeom.symmetry import classify

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
MODELS = {'klein': ModelKind.COLLINEAR, 'poincare': ModelKind.CONFORMAL}


def _finite(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


def _chain_document(chain: ArcChain) -> Dict[str, Any]:
    return {
        'closed': chain.closed,
        'arcs': [{'cycle': arc.cycle.to_dict(), 'start': _finite(arc.start), 'end': _finite(arc.end)}
                 for arc in chain.arcs],
        'vertices': [{'point': vertex.point.v.tolist(), 'outer_angle': vertex.outer_angle}
                     for vertex in chain.vertices],
    }


def _emit(document: Dict[str, Any], path: Optional[Path]) -> None:
    text = json.dumps(document, indent=2)

    if path is None:
        print(text)
    else:
        path.write_text(text, encoding='utf-8')


def intersect(scene: Path, out: Optional[Path] = None) -> int:
    """
        Intersects the placed bodies of a scene and writes the status and boundary chains as JSON.

        Args:
            scene: the scene file (JSON)
            out: where to write the result; printed when omitted
    """

    result = scene_intersection(parse_scene(scene))
    document = {'status': result.status.value, 'description': result.description,
                'chains': [_chain_document(chain) for chain in boundary_chain(result.region)]
                if result.has_interior else []}
    _emit(document, out)
    return EXIT_PASS


def symmetry(scene: Path, tol: Optional[float] = None, report: Optional[Path] = None) -> int:
    """
        Classifies the congruences of the intersection of a scene.

        Args:
            scene: the scene file (JSON)
            tol: residual tolerance for accepting a congruence
            report: where to write the symmetry report; printed when omitted
    """

    result = scene_intersection(parse_scene(scene))

    if not result.has_interior:
        logger.error(f'The intersection is {result.status.value}, nothing to classify')
        return EXIT_FAIL

    found = classify(result.region, tol=tol)
    _emit(found.to_dict(), report)
    return EXIT_PASS


def verify(experiment: str, trials: Optional[int] = None, seed: int = 0, workers: int = 1,
           csv: Optional[Path] = None, json: Optional[Path] = None) -> int:
    """
        Runs a registered experiment and writes its report.

        Args:
            experiment: the experiment id, or one of thm2, thm3, thm4, lemma1.1, lemma1.9, lemma4.1, lemma4.2
            trials: number of trials, a per-experiment default when omitted
            seed: 64-bit seed; trial i draws from the stream seed xor i
            workers: processes running the trials
            csv: where to write one row per trial record
            json: where to write the summary document
    """

    chosen = Experiment(experiment)
    report = run_experiment(chosen, DEFAULT_TRIALS[chosen] if trials is None else trials, seed, workers)

    if csv is not None:
        write_csv(report, csv)

    if json is not None:
        write_json(report, json)

    summary = report.summary()
    verdict = 'pass' if report.passed else 'fail'
    print(f'{chosen.value}: {summary["trials"]} records {summary["statuses"]} -> {verdict}')
    return EXIT_PASS if report.passed else EXIT_FAIL


def render(scene: Path, model: str = 'klein', svg: Path = Path('scene.svg')) -> int:
    """
        Draws a scene, its intersection and the detected symmetries as SVG.

        Args:
            scene: the scene file (JSON)
            model: klein (collinear) or poincare (conformal)
            svg: the output file
    """

    render_scene(parse_scene(scene), MODELS[model], svg)
    return EXIT_PASS


COMMANDS: Dict[str, Callable[..., int]] = {
    'intersect': intersect,
    'symmetry': symmetry,
    'verify': verify,
    'render': render,
}

CHOICES = {
    'experiment': [e.value for e in Experiment] + list(SHORT_IDS),
    'model': list(MODELS),
}

TYPES = {'scene': Path, 'out': Path, 'report': Path, 'csv': Path, 'json': Path, 'svg': Path, 'tol': float,
         'trials': int, 'seed': int, 'workers': int, 'experiment': str, 'model': str}


def build_parser() -> argparse.ArgumentParser:
    """ One subcommand per command function; help texts come from their docstrings. """

    parser = argparse.ArgumentParser(prog='ccgeom', description=__doc__.strip())
    parser.add_argument('--verbose', action='store_true', help='log at DEBUG level')
    parser.add_argument('--quiet', action='store_true', help='log warnings and errors only')
    commands = parser.add_subparsers(dest='command', required=True)

    for name, fn in COMMANDS.items():
        doc = parse(fn.__doc__)
        helps = {param.arg_name: param.description for param in doc.params}
        sub = commands.add_parser(name, help=doc.short_description, description=doc.short_description)

        for param in inspect.signature(fn).parameters.values():
            required = param.default is inspect.Parameter.empty
            sub.add_argument(f'--{param.name}', type=TYPES[param.name], required=required,
                             default=None if required else param.default, choices=CHOICES.get(param.name),
                             help=helps.get(param.name))

    return parser


def _configure_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_PASS if ex.code == 0 else EXIT_USAGE

    _configure_logging(args.verbose, args.quiet)
    fn = COMMANDS[args.command]
    kwargs = {name: getattr(args, name) for name in inspect.signature(fn).parameters}

    try:
        return fn(**kwargs)
    except ParseError as ex:
        logger.error(f'Cannot read the scene: {ex}')
        return EXIT_USAGE
    except (ValidateException, OutsideModelDomain) as ex:
        logger.error(f'{type(ex).__name__}: {ex}')
        return EXIT_USAGE
    except OSError as ex:
        logger.error(str(ex))
        return EXIT_USAGE
    except GeometryException as ex:
        logger.error(f'{type(ex).__name__}: {ex}')
        return EXIT_FAIL


if __name__ == '__main__':
    sys.exit(main())
