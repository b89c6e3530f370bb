from ccgeom.space_kernel import Space, ModelKind, Point, ModelPoint, IdealPoint, origin, distance, angle_at, \
    exp_map, log_direction, direction_at, Isometry, IsometryType, CongruenceKind, CongruenceSpec, isometry_from, \
    apply, compose, classify_isometry, rotation_about, reflection, point_reflection, ideal_rotation, \
    translation_along, to_model, from_model, image_angle, angle_distortion, distortion_bounds

from ccgeom.cycles import Cycle, CycleKind, CycleArc, make_cycle, circle, paracycle, hypercycle, geodesic_through, \
    geodesic_from, geodesic_line, signed_distance, curvature_of, sample_arc, intersect_cycles, \
    perimeter as cycle_perimeter

from ccgeom.regions import ConvexRegion, HalfDomain, Side, region_from_halves, disk, half_plane, strip, paraball, \
    hypercycle_region, polygon, moved, core, boundary_chain, is_compact, IntersectionStatus, IntersectionResult, \
    intersect_regions, hausdorff_distance, diameter, perimeter, area, ideal_point_count

from ccgeom.symmetry import Classification, SymmetryReport, classify, oracle_classify

from ccgeom.harness import Scene, Body, parse_scene, serialize_scene, ExperimentReport, TrialRecord, TrialStatus, \
    Experiment, run_experiment, render

from ccgeom.config import Settings, get_settings, override_settings

from ccgeom.env_var_logic import enable_validation, disable_validation, is_validation_enabled

from ccgeom.exceptions import *
