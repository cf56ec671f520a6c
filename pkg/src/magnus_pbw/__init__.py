"""Exact Dynkin-Magnus commutators, symmetric PBW maps and BCH lifts over the rationals."""
from .free import LiePermutation, LiePolynomial, NCPolynomial, SymTensor, commutator_evaluate
from .mu import (
    CONSTRUCTIONS,
    MuResult,
    alpha_coefficients,
    beta_coefficients,
    compute_mu,
    mu_ass_dynkin,
    mu_ass_logexp_oracle,
    mu_dynkin,
    mu_lieperm,
    mu_magnus,
)
from .pbw import (
    NilpotentAlgebra,
    associativity_check,
    bch_series,
    build_free_nilpotent,
    denominator_audit,
    mu_sigma,
    u_dir_multiply,
)

__version__ = "0.1.0"

__all__ = [
    "CONSTRUCTIONS",
    "LiePermutation",
    "LiePolynomial",
    "MuResult",
    "NCPolynomial",
    "NilpotentAlgebra",
    "SymTensor",
    "alpha_coefficients",
    "associativity_check",
    "bch_series",
    "beta_coefficients",
    "build_free_nilpotent",
    "commutator_evaluate",
    "compute_mu",
    "denominator_audit",
    "mu_ass_dynkin",
    "mu_ass_logexp_oracle",
    "mu_dynkin",
    "mu_lieperm",
    "mu_magnus",
    "mu_sigma",
    "u_dir_multiply",
]
