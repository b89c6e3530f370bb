from ccgeom.harness.report import TrialStatus, TrialRecord, ExperimentReport, merge_reports, write_csv, write_json, \
    classified_record, checked_record, CSV_COLUMNS
from ccgeom.harness.trial_pool import run_trials, trial_rng
from ccgeom.harness.scene import Body, Scene, loads_scene, parse_scene, serialize_scene, write_scene, \
    scene_intersection
from ccgeom.harness.placements import random_direct_isometry, place_pair, side_containing
from ccgeom.harness.congruent_pairs import run_disk_pairs, run_disk_pair_suite, run_hyperbolic_pairs
from ccgeom.harness.planar_cases import run_planar_cases
from ccgeom.harness.thin_quadrangle import QuadrangleMode, build_thin_quadrangle, run_thin_quadrangles
from ccgeom.harness.line_pairs import LineCase, build_line_pair_case, run_line_pairs
from ccgeom.harness.parallel_domains import build_parallel_domains, run_parallel_domains
from ccgeom.harness.numerics import run_distortion, run_model_angles, run_angle_distortion_suite, run_chord_lens, \
    run_curvature
from ccgeom.harness.oracle_agreement import run_oracle_agreement
from ccgeom.harness.verify import Experiment, EXPERIMENTS, SHORT_IDS, DEFAULT_TRIALS, run_experiment
from ccgeom.harness.render import render
