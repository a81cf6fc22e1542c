"""Exact cohomology and quantum cohomology rings of smooth complete toric varieties."""
from .cohomology_rings import (QuantumContext, RingPresentation, a_ring_equality_check,
                               flop_compare, homogenized_quantum_generators, limit_check,
                               linear_ideal, make_context, ordinary_ring, quantum_generators,
                               quantum_relation_check, quantum_ring, quantum_ring_z0_laurent,
                               quantum_ring_z0_polynomial, restriction_image_ring,
                               stanley_reisner_ideal, zr_grading_check)
from .errors import *  # noqa: F401,F403
from .fanfile import load_fan_file, parse_fan_text, serialize
from .lattice_fan import (Fan, PrimitiveCollection, RelationLattice, locate_cone, make_fan,
                          minimal_cone_decomposition, primitive_collections, relation_lattice,
                          virtual_dimension)
from .mirror_jacobian import (log_jacobian_ideal, mirror_limit_check, mirror_map_check,
                              mirror_polynomial, rf_ring)
from .pl_support import (PLFunction, anticanonical_pl, chern_divisibility, degree,
                         dual_polytope, evaluate, is_convex, is_strictly_convex, lattice_points,
                         polytope_delta)
