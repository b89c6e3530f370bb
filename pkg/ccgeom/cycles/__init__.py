from ccgeom.cycles.cycle import Cycle, CycleKind, make_cycle, circle, paracycle, hypercycle, geodesic_through, \
    geodesic_from, geodesic_line, side_of, signed_distance, transform_cycle, flipped, base_geodesic
from ccgeom.cycles.curvature import curvature_of
from ccgeom.cycles.parametrization import speed, perimeter, points_at, point_at, parameters_of, parameter_of, \
    inward_normals, tangents_at, tangent_at, ideal_endpoints, turning_curvatures, estimate_curvature
from ccgeom.cycles.arc import CycleArc, sample_arc, sample_vectors, chord_arc_ratio, point_on
from ccgeom.cycles.intersection import CycleIntersection, intersect_cycles, same_point_set
