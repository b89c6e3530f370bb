from ccgeom.space_kernel.space import Space
from ccgeom.space_kernel.point import ModelKind, Point, ModelPoint, IdealPoint, origin
from ccgeom.space_kernel.metric import distance, distances, geodesic_point, midpoint, angle_at, exp_map, \
    exp_vectors, log_direction, log_vector, tangent_frame, frame_at, direction_at, rotate_tangent, oriented_angle, \
    transport_vectors, unit_tangent_angle
from ccgeom.space_kernel.isometry import Isometry, IsometryType, CongruenceKind, CongruenceSpec, isometry_from, \
    apply, apply_many, compose, classify_isometry, fixed_point, mirror, rotation_angle, point_reflection, \
    reflection, rotation_about, ideal_rotation, translation_along, transvection, isometry_taking, \
    isometry_from_ideal_triples, geodesic_normal, congruence_spec_of, ideal_generator
from ccgeom.space_kernel.models import to_model, from_model, to_model_coordinates, from_model_coordinates, \
    model_differential, arc_element_ratio, measured_arc_ratio, image_angle
from ccgeom.space_kernel.distortion import angle_distortion, distortion_bounds, model_angle, \
    measured_angle_distortion
