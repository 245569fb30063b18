"""Exact tools for lifted linear codes over finite fields.

Finite-field arithmetic, matrices over GF(q), linear codes with exhaustive
weight enumeration and the MacWilliams transform, the classical families,
lifting to extension fields, closed-form weight distributions, and
exhaustive t-design verification of codeword supports.
"""

from .closed_forms import (
    hamming_wd_formula,
    lifted_hamming_wd_formula,
    lifted_rm1_wd_formula,
    lifted_rm_m2_wd_formula,
    lifted_simplex_wd_formula,
    rank_count,
    rank_count_table,
    two_three_weight_report,
)
from .code import (
    LinearCode,
    WeightDistribution,
    code_from_generator,
    codewords,
    dual,
    macwilliams,
    min_distance,
    weight_distribution,
)
from .designs import (
    DesignCertificate,
    SupportDesign,
    assmus_mattson,
    conjecture_rm1,
    max_strength,
    open_lambda_table,
    supports,
    verify_design,
)
from .errors import (
    BudgetExceeded,
    DegenerateCodeError,
    DimensionError,
    EmptyDesignError,
    FieldError,
    LiftlabError,
)
from .families import family_code, hamming, prm, prm_dimension, projective_points, rm2, simplex, simplex_trace
from .field import FieldElement, FieldSpec, FieldTower, field_of_order, make_field, make_tower, rel_trace
from .lifting import LiftedCode, check_ad_relation, lift, rank_spectrum_wd, selector_weight
from .matrix import MatrixOverField, kernel_basis, rank, rref

__version__ = "0.1.0"
