import csv
import json
import os
import tempfile
import unittest

import numpy as np

from ccgeom.exceptions import CaseNotRealized, OutOfRange, ParseError, SpaceMismatch, UnsupportedInSpace
from ccgeom.harness.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main
from ccgeom.harness.congruent_pairs import run_disk_pairs, run_hyperbolic_pairs
from ccgeom.harness.line_pairs import LineCase, build_line_pair_case, ideal_chord, line_sets
from ccgeom.harness.numerics import centre_offset, chord_lens_record, run_chord_lens, run_curvature, \
    run_distortion, run_model_angles
from ccgeom.harness.oracle_agreement import CORPUS, random_box, random_triangle
from ccgeom.harness.parallel_domains import build_parallel_domains, hypercycle_body
from ccgeom.harness.planar_cases import disk_cut_record, half_plane, line_at, run_planar_cases, \
    strip_half_plane_record, strip_pair_record, wedge_record
from ccgeom.harness.report import CSV_COLUMNS, ExperimentReport, TrialRecord, TrialStatus, merge_reports, write_csv, \
    write_json
from ccgeom.harness.scene import Body, Scene, loads_scene, parse_scene, serialize_scene, scene_intersection
from ccgeom.harness.thin_quadrangle import QuadrangleMode, base_corners, build_thin_quadrangle
from ccgeom.harness.trial_pool import run_trials, trial_rng
from ccgeom.harness.verify import DEFAULT_TRIALS, EXPERIMENTS, SHORT_IDS, Experiment
from ccgeom.regions import IntersectionStatus, disk, ideal_point_count, is_compact
from ccgeom.space_kernel import Point, Space, geodesic_normal, origin, reflection, rotation_about, transvection
from ccgeom.symmetry import Classification

H2 = Space.HYPERBOLIC

DISK_SCENE = '''{
  "space": "H2",
  "seed": 3,
  "bodies": [
    {"halves": [{"cycle": {"kind": "circle", "centre": [0.0, 0.0], "radius": 1.0}}]},
    {"halves": [{"cycle": {"kind": "circle", "centre": [0.3, 0.0], "radius": 1.0}}],
     "placement": {"type": "rotation", "centre": [0.0, 0.0], "angle": 0.5}}
  ]
}'''


def _coin(index: int, rng: np.random.Generator):
    return [TrialRecord(trial=index, status=TrialStatus.PASS, notes=str(rng.integers(1 << 30)))]


class TestScene(unittest.TestCase):
    def test_parse_document(self):
        scene = loads_scene(DISK_SCENE)

        self.assertIs(H2, scene.space)
        self.assertEqual(3, scene.seed)
        self.assertEqual(2, len(scene.bodies))
        self.assertFalse(scene.bodies[1].placement.is_identity(1e-12))

    def test_round_trip(self):
        scene = loads_scene(DISK_SCENE)
        again = loads_scene(serialize_scene(scene))

        self.assertEqual(scene.space, again.space)
        self.assertEqual(scene.seed, again.seed)

        for a, b in zip(scene.bodies, again.bodies):
            self.assertTrue(np.allclose(a.placement.m, b.placement.m, atol=1e-12))

        for a, b in zip(scene.placed_regions, again.placed_regions):
            self.assertTrue(np.allclose(a.placed_halves[0].cycle.c, b.placed_halves[0].cycle.c))

    def test_placements_written_by_type(self):
        placements = {
            'rotation': '{"type": "rotation", "centre": [0.1, 0.2], "angle": -0.7}',
            'point_reflection': '{"type": "point_reflection", "centre": [0.1, -0.2]}',
            'translation': '{"type": "translation", "start": [0.0, 0.1], "towards": [0.3, 0.2], "length": 0.6}',
            'reflection': '{"type": "reflection", "start": [0.1, 0.0], "towards": [0.2, 0.5]}',
            'ideal_rotation': '{"type": "ideal_rotation", "ideal": 0.4, "shift": 0.9}',
        }

        for kind, placement in placements.items():
            text = DISK_SCENE.replace('{"type": "rotation", "centre": [0.0, 0.0], "angle": 0.5}', placement)
            scene = loads_scene(text)
            written = json.loads(serialize_scene(scene))
            again = loads_scene(serialize_scene(scene))

            self.assertEqual(kind, written['bodies'][1]['placement']['type'])
            self.assertEqual('rotation', written['bodies'][0]['placement']['type'])
            self.assertTrue(np.allclose(scene.bodies[1].placement.m, again.bodies[1].placement.m, atol=1e-9))

    def test_glide_reflection_written_as_matrix(self):
        a, b = Point.on(H2, [0.1, 0.0, 1.0]), Point.on(H2, [0.3, 0.4, 1.0])
        glide = reflection(H2, *geodesic_normal(a, b)).compose(transvection(a, b))
        scene = Scene(space=H2, bodies=[Body(region=disk(origin(H2), 1.0), placement=glide)])

        written = json.loads(serialize_scene(scene))['bodies'][0]['placement']

        self.assertEqual('matrix', written['type'])
        self.assertTrue(np.allclose(glide.m, loads_scene(serialize_scene(scene)).bodies[0].placement.m))

    def test_zero_level_set_vector(self):
        text = '{"space": "H2", "bodies": [{"halves": [{"cycle": {"c": [0, 0, 0], "k": 1}}]}]}'

        with self.assertRaises(expected_exception=ParseError) as context:
            loads_scene(text)

        self.assertEqual((1, 51), (context.exception.line, context.exception.column))

    def test_invalid_utf8(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'latin.json')

            with open(path, 'wb') as file:
                file.write(b'{"space": "E2",\n "name": "caf\xe9", "bodies": []}')

            with self.assertRaises(expected_exception=ParseError) as context:
                parse_scene(path)

        self.assertEqual((2, 14), (context.exception.line, context.exception.column))

    def test_intersection_of_parsed_scene(self):
        result = scene_intersection(loads_scene(DISK_SCENE))

        self.assertIs(IntersectionStatus.COMPACT_LENS, result.status)

    def test_json_syntax_error_position(self):
        text = '{\n  "space": "E2",\n  "bodies": [}\n}'

        with self.assertRaises(expected_exception=ParseError) as context:
            loads_scene(text)

        self.assertEqual(3, context.exception.line)
        self.assertEqual(14, context.exception.column)

    def test_schema_error_position(self):
        text = '{\n  "space": "H2",\n  "bodies": [{"halves": [{"cycle": {"kind": "ellipse"}}]}]\n}'

        with self.assertRaises(expected_exception=ParseError) as context:
            loads_scene(text)

        self.assertEqual(3, context.exception.line)
        self.assertIn('ellipse', str(context.exception))

    def test_unknown_space(self):
        with self.assertRaises(expected_exception=ParseError) as context:
            loads_scene('{"space": "X2", "bodies": []}')

        self.assertEqual((1, 2), (context.exception.line, context.exception.column))

    def test_bad_seed(self):
        for seed in ['-1', '1.5', 'true', str(2 ** 64)]:
            with self.assertRaises(expected_exception=ParseError):
                loads_scene(f'{{"space": "E2", "seed": {seed}, "bodies": []}}')

    def test_bad_radius(self):
        text = '{"space": "E2", "bodies": [{"halves": [{"cycle": ' \
               '{"kind": "circle", "centre": [0, 0], "radius": -1}}]}]}'

        with self.assertRaises(expected_exception=ParseError):
            loads_scene(text)

    def test_mixed_spaces(self):
        with self.assertRaises(expected_exception=SpaceMismatch):
            Scene(space=H2, bodies=[Body(region=disk(Point.plane(0.0, 0.0), 1.0))])

    def test_body_unfolds_placement(self):
        region = disk(origin(H2), 1.0)
        turn = rotation_about(Point.on(H2, [0.3, 0.0, 1.0]), 0.4)
        body = Body(region=region.copy_with(placement=turn))

        self.assertTrue(body.region.placement.is_identity(0.0))
        self.assertTrue(np.allclose(turn.m, body.placement.m))

    def test_empty_scene_has_no_intersection(self):
        with self.assertRaises(expected_exception=ParseError):
            scene_intersection(Scene(space=H2, bodies=()))


class TestTrialPool(unittest.TestCase):
    def test_trial_streams(self):
        self.assertEqual(trial_rng(7, 3).integers(1000), np.random.default_rng(7 ^ 3).integers(1000))

    def test_deterministic(self):
        first = [r.notes for r in run_trials(_coin, count=6, seed=11)]
        second = [r.notes for r in run_trials(_coin, count=6, seed=11)]

        self.assertEqual(first, second)
        self.assertEqual(list(range(6)), [r.trial for r in run_trials(_coin, count=6, seed=11)])

    def test_workers_do_not_change_results(self):
        inline = run_trials(_coin, count=4, seed=5)
        pooled = run_trials(_coin, count=4, seed=5, workers=2)

        self.assertEqual([r.notes for r in inline], [r.notes for r in pooled])

    def test_invalid_count(self):
        with self.assertRaises(expected_exception=OutOfRange):
            run_trials(_coin, count=0, seed=1)


class TestReport(unittest.TestCase):
    def setUp(self) -> None:
        self.report = ExperimentReport(experiment='demo', seed=4, records=(
            TrialRecord(trial=0, status=TrialStatus.PASS, classification='trivial', max_residual=1e-9),
            TrialRecord(trial=1, status=TrialStatus.FAIL, notes='expected axial_only'),
        ))

    def test_verdict(self):
        self.assertFalse(self.report.passed)
        self.assertEqual(1, len(self.report.failures))
        self.assertEqual({'fail': 1, 'pass': 1}, self.report.summary()['statuses'])

    def test_skipped_trials_pass(self):
        report = ExperimentReport(experiment='demo', seed=0,
                                  records=(TrialRecord(trial=0, status=TrialStatus.SKIPPED),))
        self.assertTrue(report.passed)

    def test_merge_renumbers(self):
        merged = merge_reports('both', 4, [self.report, self.report])

        self.assertEqual([0, 1, 2, 3], [r.trial for r in merged.records])

    def test_csv_and_json(self):
        with tempfile.TemporaryDirectory() as folder:
            csv_path, json_path = os.path.join(folder, 'r.csv'), os.path.join(folder, 'r.json')
            write_csv(self.report, csv_path)
            write_json(self.report, json_path)

            with open(csv_path, encoding='utf-8') as file:
                rows = list(csv.reader(file))

            with open(json_path, encoding='utf-8') as file:
                document = json.load(file)

        self.assertEqual(list(CSV_COLUMNS), rows[0])
        self.assertEqual(3, len(rows))
        self.assertEqual('fail', document['verdict'])
        self.assertEqual(2, len(document['records']))


class TestPlanarCases(unittest.TestCase):
    def test_strips_make_centrally_symmetric_parallelogram(self):
        record = strip_pair_record(0, [1.0, 2.0], [0.0, np.pi / 3], [0.0, 0.0])

        self.assertIs(TrialStatus.PASS, record.status, record.notes)
        self.assertIn(record.classification, ['central_only', 'central_and_axial', 'rotational'])

    def test_wedge_symmetric_in_bisector(self):
        record = wedge_record(0, [0.0, 1.0], [0.5, -0.5])

        self.assertIs(TrialStatus.PASS, record.status, record.notes)

    def test_strip_and_half_plane_trivial(self):
        record = strip_half_plane_record(0, width=1.0, angle=0.3, offset=0.2, crossing=1.0, line_offset=0.1)

        self.assertIs(TrialStatus.PASS, record.status, record.notes)

    def test_disk_and_half_plane_axial(self):
        cut = half_plane(line_at(0.0, 0.4))
        record = disk_cut_record(0, [0.0, 0.0], 1.0, cut, 'disk_half_plane', {})

        self.assertIs(TrialStatus.PASS, record.status, record.notes)
        self.assertEqual(Classification.AXIAL_ONLY.value, record.classification)

    def test_run(self):
        report = run_planar_cases(trials=3, seed=2)

        self.assertTrue(report.passed, [r.notes for r in report.failures])
        self.assertEqual(15, len(report.records))


class TestCongruentPairs(unittest.TestCase):
    def test_hyperbolic_disks(self):
        report = run_disk_pairs(H2, 1.0, trials=3, seed=1)

        self.assertTrue(report.passed, [r.notes for r in report.failures])
        self.assertEqual(['central_and_axial', 'axial_only'] * 3, [r.classification for r in report.records])

    def test_spherical_radius_limit(self):
        with self.assertRaises(expected_exception=OutOfRange):
            run_disk_pairs(Space.SPHERE, 2.0, trials=1, seed=1)

    def test_paraballs_have_one_ideal_point(self):
        report = run_hyperbolic_pairs(trials=2, seed=9)

        self.assertTrue(report.passed, [r.notes for r in report.failures])


class TestNumerics(unittest.TestCase):
    def test_spherical_upper_bound(self):
        report = run_distortion(Space.SPHERE, radii=[np.pi / 3])

        self.assertTrue(report.passed, [r.notes for r in report.failures])
        self.assertAlmostEqual(2.0, report.records[0].inputs['max_measured'], delta=1e-4)

    def test_no_distortion_at_centre(self):
        report = run_distortion(H2, radii=[0.0])

        self.assertTrue(report.passed)
        self.assertAlmostEqual(1.0, report.records[0].inputs['min_measured'], delta=1e-9)
        self.assertAlmostEqual(1.0, report.records[0].inputs['max_measured'], delta=1e-9)

    def test_default_grids(self):
        self.assertTrue(run_distortion(H2).passed)
        self.assertEqual(3, len(run_distortion(Space.SPHERE).records))

    def test_empty_grid(self):
        with self.assertRaises(expected_exception=OutOfRange):
            run_distortion(H2, radii=[])

    def test_plane_has_no_distortion_table(self):
        with self.assertRaises(expected_exception=UnsupportedInSpace):
            run_distortion(Space.EUCLIDEAN)

    def test_tangent_law(self):
        report = run_model_angles(trials=10, seed=3)

        self.assertTrue(report.passed, [r.notes for r in report.failures])

    def test_centre_offset(self):
        for space in Space:
            h = centre_offset(space, 0.4, 0.1)
            self.assertGreater(h, 0.0)
            self.assertLess(h, 0.4)

    def test_chord_lens(self):
        for space in Space:
            record = chord_lens_record(space, 0, trial_rng(5, 0))
            self.assertIs(TrialStatus.PASS, record.status, record.notes)

        self.assertTrue(run_chord_lens(trials=2, seed=8).passed)

    def test_curvature(self):
        report = run_curvature(trials=2, seed=4)

        self.assertTrue(report.passed, [r.notes for r in report.failures])
        self.assertEqual(16, len(report.records))


class TestThinQuadrangle(unittest.TestCase):
    def test_base_corners(self):
        corners = base_corners(0.05, 0.0)
        a, b = corners.side_lengths()

        self.assertAlmostEqual(0.025, a, delta=1e-12)
        self.assertAlmostEqual(a, b, delta=1e-12)

    def test_lines(self):
        scene, report = build_thin_quadrangle(QuadrangleMode.TWO_ZERO_CURVATURES, 0.05, seed=1)

        self.assertTrue(report.passed, [r.notes for r in report.failures])
        self.assertEqual(['axial_only', 'trivial'], [r.classification for r in report.records])
        self.assertEqual(2, len(scene.bodies))

    def test_hypercycles(self):
        scene, report = build_thin_quadrangle('infimum_zero', 0.05, seed=2)

        self.assertTrue(report.passed, [r.notes for r in report.failures])
        self.assertEqual(3, len(report.records))
        self.assertLessEqual(report.records[2].diameter, 3 * 0.05)

    def test_epsilon_range(self):
        for epsilon in [0.0, -0.01, 0.2]:
            with self.assertRaises(expected_exception=OutOfRange):
                build_thin_quadrangle(QuadrangleMode.TWO_ZERO_CURVATURES, epsilon, seed=1)


class TestLinePairs(unittest.TestCase):
    def test_ideal_chord_is_diameter(self):
        chord = ideal_chord(0.0, np.pi)

        self.assertAlmostEqual(0.0, chord.k, delta=1e-12)
        self.assertTrue(np.allclose(np.abs(chord.c), [0.0, 1.0, 0.0]))

    def test_line_sets(self):
        k, l, inputs = line_sets(LineCase.QUADRANGLE_PARALLEL, trial_rng(1, 0))

        self.assertEqual((2, 2), (len(k), len(l)))
        self.assertEqual('quadrangle_parallel', inputs['case'])

    def test_cases(self):
        for case in LineCase:
            scene, report = build_line_pair_case(case, seed=6)
            self.assertTrue(report.passed, f'{case.value}: {[r.notes for r in report.failures]}')
            self.assertEqual(2, len(scene.bodies))

    def test_triangle_has_one_ideal_point(self):
        scene, _ = build_line_pair_case(LineCase.TRIANGLE_PARALLEL, seed=6)
        result = scene_intersection(scene)

        self.assertIs(IntersectionStatus.UNBOUNDED, result.status)
        self.assertEqual(1, ideal_point_count(result.region))


class TestParallelDomains(unittest.TestCase):
    def test_body(self):
        body = hypercycle_body(0.5, 1.0, 0.4)

        self.assertEqual(2, len(body.halves))
        self.assertFalse(is_compact(body))

    def test_half(self):
        scene, report = build_parallel_domains(0.5, seed=1)

        self.assertTrue(report.passed, [r.notes for r in report.failures])
        self.assertEqual(3, len(report.records))
        self.assertEqual(10_000, report.records[0].inputs['agreement'])

    def test_zero_distance(self):
        with self.assertRaises(expected_exception=OutOfRange):
            build_parallel_domains(0.0, seed=1)


class TestOracleCorpus(unittest.TestCase):
    def test_shapes(self):
        rng = trial_rng(2, 0)
        label, _, box = random_box(rng)

        self.assertEqual('box', label)
        self.assertTrue(is_compact(box))

        label, inputs, triangle = random_triangle(rng)
        self.assertEqual('triangle', label)
        self.assertEqual(3, len(triangle.halves))


class TestVerifyAndCli(unittest.TestCase):
    def test_registry_is_complete(self):
        self.assertEqual(set(Experiment), set(EXPERIMENTS))

    def test_short_experiment_ids(self):
        self.assertIs(Experiment.DISK_PAIRS, Experiment('thm2'))
        self.assertIs(Experiment.PARALLEL_DOMAINS, Experiment('lemma4.2'))
        self.assertEqual(set(SHORT_IDS.values()), set(Experiment) - {Experiment.CHORD_LENS, Experiment.CURVATURE,
                                                                       Experiment.ORACLE})

        with self.assertRaises(expected_exception=ValueError):
            Experiment('thm9')

        self.assertEqual(EXIT_PASS, main(['--quiet', 'verify', '--experiment', 'lemma1.1', '--trials', '2',
                                          '--seed', '1']))

    def test_default_trial_counts(self):
        self.assertGreaterEqual(DEFAULT_TRIALS[Experiment.ORACLE] * len(CORPUS), 500)
        self.assertGreaterEqual(DEFAULT_TRIALS[Experiment.CHORD_LENS], 100)

        for experiment, count in [(Experiment.DISK_PAIRS, 100), (Experiment.PLANAR_CASES, 50),
                                  (Experiment.THIN_QUADRANGLES, 50), (Experiment.LINE_PAIRS, 20),
                                  (Experiment.ANGLE_DISTORTION, 50), (Experiment.CURVATURE, 20)]:
            self.assertGreaterEqual(DEFAULT_TRIALS[experiment], count)

    def test_verify_passes(self):
        with tempfile.TemporaryDirectory() as folder:
            csv_path = os.path.join(folder, 'out.csv')
            code = main(['--quiet', 'verify', '--experiment', 'angle_distortion', '--trials', '3', '--seed', '1',
                         '--csv', csv_path])

            self.assertEqual(EXIT_PASS, code)
            self.assertTrue(os.path.exists(csv_path))

    def test_usage_errors(self):
        self.assertEqual(EXIT_USAGE, main(['verify', '--experiment', 'nonsense']))
        self.assertEqual(EXIT_USAGE, main(['--quiet', 'verify', '--experiment', 'curvature', '--trials', '0']))
        self.assertEqual(EXIT_USAGE, main([]))

    def test_parse_error(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'broken.json')

            with open(path, 'w', encoding='utf-8') as file:
                file.write('{"space": "E2", "bodies": [}')

            self.assertEqual(EXIT_USAGE, main(['--quiet', 'intersect', '--scene', path]))
            self.assertEqual(EXIT_USAGE, main(['--quiet', 'intersect', '--scene', os.path.join(folder, 'missing')]))

    def test_unreadable_scenes_are_usage_errors(self):
        documents = {
            'latin.json': b'{"space": "E2", "name": "caf\xe9", "bodies": []}',
            'zero.json': b'{"space": "H2", "bodies": [{"halves": [{"cycle": {"c": [0, 0, 0], "k": 1}}]}]}',
        }

        with tempfile.TemporaryDirectory() as folder:
            for name, document in documents.items():
                path = os.path.join(folder, name)

                with open(path, 'wb') as file:
                    file.write(document)

                self.assertEqual(EXIT_USAGE, main(['--quiet', 'intersect', '--scene', path]))

    def test_intersect_symmetry_render(self):
        with tempfile.TemporaryDirectory() as folder:
            scene = os.path.join(folder, 'disks.json')
            out, report, svg = (os.path.join(folder, name) for name in ('out.json', 'report.json', 'disks.svg'))

            with open(scene, 'w', encoding='utf-8') as file:
                file.write(DISK_SCENE)

            self.assertEqual(EXIT_PASS, main(['--quiet', 'intersect', '--scene', scene, '--out', out]))
            self.assertEqual(EXIT_PASS, main(['--quiet', 'symmetry', '--scene', scene, '--report', report]))
            self.assertEqual(EXIT_PASS, main(['--quiet', 'render', '--scene', scene, '--model', 'poincare',
                                              '--svg', svg]))

            with open(out, encoding='utf-8') as file:
                self.assertEqual('compact_lens', json.load(file)['status'])

            with open(report, encoding='utf-8') as file:
                self.assertEqual('central_and_axial', json.load(file)['classification'])

            with open(svg, encoding='utf-8') as file:
                self.assertIn('<svg', file.read())

    def test_empty_intersection_fails(self):
        far = DISK_SCENE.replace('[0.3, 0.0], "radius": 1.0', '[0.99, 0.0], "radius": 0.1')

        with tempfile.TemporaryDirectory() as folder:
            scene = os.path.join(folder, 'far.json')

            with open(scene, 'w', encoding='utf-8') as file:
                file.write(far)

            self.assertEqual(EXIT_FAIL, main(['--quiet', 'symmetry', '--scene', scene]))

    def test_render_outside_sphere_model(self):
        scene = '{"space": "S2", "bodies": [{"halves": [{"cycle": {"kind": "circle", ' \
                '"centre": [1.0, 0.0], "radius": 1.2}}]}]}'

        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'cap.json')

            with open(path, 'w', encoding='utf-8') as file:
                file.write(scene)

            self.assertEqual(EXIT_USAGE, main(['--quiet', 'render', '--scene', path, '--svg',
                                               os.path.join(folder, 'cap.svg')]))
