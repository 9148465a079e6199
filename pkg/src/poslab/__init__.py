"""Exact computation of Littlewood-Richardson, Kronecker and plethysm multiplicities.

Also: hive polytopes, exact LP, Smith normal forms, stretching
quasi-polynomials, and a saturated integer-programming decision procedure.
"""

__version__ = "0.1.0"

from .combinatorics import (Numbering, Partition, SkewShape, conjugate, contains,
                            enumerate_ssyt, enumerate_standard, is_lr_tableau,
                            is_semistandard, lr_coefficient, partitions_of,
                            reading_word)
from .characters import character, class_size, kronecker, kronecker_stretching_values
from .hive import (HiveBoundary, hive_polytope, lr_nonvanishing, lr_stretching_values,
                   lr_via_hive)
from .lattice import IntegerMatrix, smith_normal_form, solve_integer
from .plethysm import (SymmetricFunction, plethysm, plethysm_constant,
                       plethysm_nonvanishing, plethysm_stretching_values,
                       schur_in_monomials, to_schur_basis)
from .polyhedra import (LpOutcome, RationalPolytope, affine_hull, count_lattice_points,
                        dilate, ehrhart_values, is_feasible, lp_optimize)
from .quasipoly import QuasiPolynomial, detect, evaluate, fit, is_positive, is_saturated
from .repmodules import (highest_weight_check, specht_span_dimension, specht_vector,
                         weyl_span_dimension, weyl_vector)
from .satip import decide_saturated_ip, find_integer_point
