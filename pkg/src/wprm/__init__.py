"""Weighted projective Reed-Muller codes over small finite fields."""
from .errors import (
    BudgetError,
    ConsistencyError,
    DomainError,
    LambdaFieldError,
    PreconditionError,
    StructureError,
)
from .field import GF, FieldElement, field
from .space import canonical_points, count_points, enumerate_points, structured_representatives
from .monomials import denumerant, enumerate_monomials, reduced_monomials
from .codes import LinearCode, dual, ghw, hull, min_distance, schur_product, weight_hierarchy
from .construct import build_wprm, build_wrm, build_wrm_congruence, recursive_decomposition, dual_recursive
from .bounds import best_over_orderings, lower_bound, lower_bound_hierarchy
from .duals import dual_monomial_description, find_dstar, hull_check, prm_dual_structure
from .lattice import idp_check, idp_pair_check, schur_check, sumset

__version__ = "0.1.0"
