from ccgeom.regions.region import ConvexRegion, HalfDomain, Side, Membership, contains, moved, region_from_halves, \
    disk, half_plane, strip, paraball, hypercycle_region, polygon, core, find_witness, random_interior_points
from ccgeom.regions.pieces import Piece, boundary_pieces, cycle_pieces, redundancy_flags, opposite_pairs
from ccgeom.regions.boundary import ArcChain, Vertex, boundary_chain, link_arcs, is_compact, require_compact, \
    vertices_of, finite_vertices, gauss_bonnet_defect
from ccgeom.regions.intersection import IntersectionStatus, IntersectionResult, intersect_regions
from ccgeom.regions.measures import boundary_samples, arc_distances, distances_to_region, distance_to_region, \
    hausdorff_distance, model_hausdorff_distance, diameter, perimeter, area, radial_function, radial_profile, \
    support_function, support_profile, support_gap
from ccgeom.regions.ideal import IdealBoundary, ideal_boundary, ideal_point_count
