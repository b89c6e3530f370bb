from ccgeom.symmetry.report import Classification, Witness, SymmetryReport
from ccgeom.symmetry.candidates import candidate_congruences, circumcentre, corners, reflection_in, \
    bisector_reflection, chord_reflection, axis_reflections, boundary_cycles, GENERIC_ANGLE
from ccgeom.symmetry.classify import classify, residual_of, summarize, verify
from ccgeom.symmetry.oracle import oracle_classify
from ccgeom.symmetry.axes import axis_for_cycle_pair, constraint_symmetries
