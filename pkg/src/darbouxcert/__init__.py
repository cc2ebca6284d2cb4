"""Exact Darboux-polynomial machinery for monomial derivations."""

from .autom import (
    DiagonalAutomorphism,
    apply_auto,
    averaged_cofactor,
    conjugate,
    generic_cofactor_vanishes,
    orbit_product,
    product_rule_check,
    reference_automorphism,
)
from .darboux import (
    Certificate,
    Verdict,
    certify_darboux_free,
    constants_basis,
    constants_basis_inhomogeneous,
    darboux_basis_fixed_cofactor,
    eliminate_cofactors,
)
from .derivation import (
    DarbouxPair,
    Derivation,
    ExponentMatrix,
    apply,
    from_exponent_matrix,
    is_darboux_pair,
    is_normal,
    jouanolou_derivation,
    paper_derivation,
    wd,
)
from .exactnum import ZETA, Cyc8, parse_cyc8, root_of_unity_sum, zeta_pow
from .grading import (
    SymmetrySolution,
    WeightVector,
    derivation_homogeneity,
    find_symmetry_weights,
    homogeneous_components,
    weighted_degree,
)
from .multipoly import NEG_INFINITY, QQ, QZ8, Poly, VarContext, format_poly, parse_poly

__version__ = "0.1.0"
