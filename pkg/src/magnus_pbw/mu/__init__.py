"""Dynkin-Magnus commutators by four independent constructions."""
from __future__ import annotations

from .coshuffle import coshuffle, coshuffle_projection
from .dynkin import dynkin_coefficient, mu_ass_dynkin, mu_dynkin
from .lieperm import decompose_linear, decompose_rewrite, mu_lieperm
from .magnus import mu_magnus
from .oracle import log_exp_xy, mu_ass_logexp_oracle
from .result import CONSTRUCTIONS, MuResult
from .series import CoeffSeries, alpha_coefficients, beta_coefficients, beta_tilde_coefficients


def compute_mu(n: int, construction: str = "dynkin") -> MuResult:
    """Dispatch by construction name (``magnus_L``/``magnus-L`` style both accepted)."""
    name = construction.replace("-", "_")
    if name.startswith("magnus_"):
        return mu_magnus(n, name.split("_", 1)[1])
    if name == "lieperm":
        return mu_lieperm(n)
    if name == "dynkin":
        return mu_dynkin(n)
    raise ValueError(f"unknown construction {construction!r}; expected one of {CONSTRUCTIONS}")


__all__ = [
    "CONSTRUCTIONS",
    "CoeffSeries",
    "MuResult",
    "alpha_coefficients",
    "beta_coefficients",
    "beta_tilde_coefficients",
    "compute_mu",
    "coshuffle",
    "coshuffle_projection",
    "decompose_linear",
    "decompose_rewrite",
    "dynkin_coefficient",
    "log_exp_xy",
    "mu_ass_dynkin",
    "mu_ass_logexp_oracle",
    "mu_dynkin",
    "mu_lieperm",
    "mu_magnus",
]
