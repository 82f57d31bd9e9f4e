"""Exact Drazin inverses over Q and GF(p), and verification of product/sum
formulas for pairs with a^2 b = aba and b^2 a = bab."""

from .drazin import (
    CoreNilpotentDecomposition,
    DrazinResult,
    core_nilpotent,
    drazin,
    drazin_inverse,
    group_inverse,
    index_of,
    is_drazin_of,
    spectral_idempotent,
)
from .identities import (
    ConditionPair,
    VerificationReport,
    XiContext,
    build_xi,
    check_conditions,
    commuting_sum_formula,
    commuting_sum_formula_alt,
    lemma_suite,
    product_drazin_formula,
    product_order_asymmetry,
    sum_drazin_formula,
    verify_pair,
    xi_drazin_relation,
)
from .matrix import Matrix, RrefResult, inverse, is_nilpotent, mat_mul, mat_pow, nullspace_basis, rank, rref
from .scalar import QQ, FieldTag, Scalar, field_arith, field_inverse, normalize_rational
from .witness import SearchSpec, enumerate_pairs, oracle_drazin_bruteforce, sample_pairs

__version__ = "0.1.0"
