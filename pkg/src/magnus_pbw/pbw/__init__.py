"""Symmetric PBW maps, BCH lift and the direct product on nilpotent algebras."""
from .audit import bch_lie, denominator_audit
from .bch import bch_series, bch_term
from .nilpotent import NilpotentAlgebra, build_free_nilpotent
from .sigma import Report, mu_sigma, mu_sigma_descent_check, pbw_roundtrip
from .udir import EnvelopingElement, associativity_check, bch_pair, u_dir_multiply

__all__ = [
    "EnvelopingElement",
    "NilpotentAlgebra",
    "Report",
    "associativity_check",
    "bch_lie",
    "bch_pair",
    "bch_series",
    "bch_term",
    "build_free_nilpotent",
    "denominator_audit",
    "mu_sigma",
    "mu_sigma_descent_check",
    "pbw_roundtrip",
    "u_dir_multiply",
]
