"""BCH terms as Lie polynomials in X = X_1 and Y = X_2."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..free.lie import LiePolynomial
from ..mu import compute_mu

X, Y = 1, 2


def bch_term(n: int, construction: str = "dynkin") -> LiePolynomial:
    """sum_r 1/(r! (n-r)!) mu_n(X, ..., X, Y, ..., Y) with r copies of X."""
    mu_n = compute_mu(n, construction).value
    acc = LiePolynomial.zero()
    for r in range(n + 1):
        mapping = {i: (X if i <= r else Y) for i in range(1, n + 1)}
        acc = acc + mu_n.relabel(mapping).scale(Fraction(1, factorial(r) * factorial(n - r)))
    return acc


def bch_series(order: int, construction: str = "dynkin") -> list[LiePolynomial]:
    if order < 1:
        raise ValueError("order must be >= 1")
    return [bch_term(n, construction) for n in range(1, order + 1)]
