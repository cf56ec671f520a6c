"""Closed-form Dynkin coefficients and their Lie lifts."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..free.lie import LiePolynomial, left_normed, lie_normalize
from ..free.ncpoly import NCPolynomial
from ..free.perms import all_permutations, ascents, descents
from .result import MuResult, check_n


def dynkin_coefficient(sigma: tuple) -> Fraction:
    """(-1)^des * des! * asc! / n!"""
    d, a = descents(sigma), ascents(sigma)
    return Fraction((-1) ** d * factorial(d) * factorial(a), factorial(len(sigma)))


@lru_cache(maxsize=None)
def mu_ass_dynkin(n: int) -> NCPolynomial:
    check_n(n)
    return NCPolynomial({sigma: dynkin_coefficient(sigma) for sigma in all_permutations(n)})


@lru_cache(maxsize=None)
def _mu_pivot(n: int, pivot: int) -> LiePolynomial:
    raw: dict = {}
    for sigma in all_permutations(n):
        if sigma[-1] == pivot:
            raw[left_normed(sigma)] = dynkin_coefficient(sigma)
    return lie_normalize(raw)


@lru_cache(maxsize=None)
def _mu_averaged(n: int) -> LiePolynomial:
    raw = {left_normed(s): dynkin_coefficient(s) / n for s in all_permutations(n)}
    return lie_normalize(raw)


def mu_dynkin(n: int, pivot: int | str | None = None) -> MuResult:
    """Lie lift of the Dynkin coefficients.

    ``pivot`` selects the last letter of the left-normed monomials (default
    ``n``); ``"averaged"`` spreads the sum over all permutations with weight 1/n.
    """
    check_n(n)
    if pivot == "averaged":
        return MuResult(n, "dynkin", _mu_averaged(n))
    k = n if pivot is None else pivot
    if not isinstance(k, int) or not 1 <= k <= n:
        raise ValueError(f"pivot must be in 1..{n} or 'averaged', got {pivot!r}")
    return MuResult(n, "dynkin", _mu_pivot(n, k))
