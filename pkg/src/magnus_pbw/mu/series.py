"""Coefficient tables from the generating functions x/(e^x - 1) and alpha(x, y).

Everything is dense truncated power-series arithmetic over Fraction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


@dataclass(frozen=True)
class CoeffSeries:
    kind: str  # "beta", "beta_tilde" or "alpha"
    values: dict = field(compare=True)
    computed_through: object = None

    def __getitem__(self, index):
        return self.values[index]

    def as_list(self) -> list:
        if self.kind == "alpha":
            raise TypeError("alpha is indexed by pairs; use as_matrix()")
        return [self.values[s] for s in range(self.computed_through + 1)]

    def as_matrix(self) -> list[list[Fraction]]:
        max_s, max_r = self.computed_through
        return [[self.values[s, r] for r in range(max_r + 1)] for s in range(max_s + 1)]


def _series_inverse(coeffs: list[Fraction], order: int) -> list[Fraction]:
    """Reciprocal of a power series with nonzero constant term, through x^order."""
    if not coeffs or coeffs[0] == 0:
        raise ZeroDivisionError("series has zero constant term")
    out = [Fraction(1) / coeffs[0]]
    for k in range(1, order + 1):
        acc = sum(
            (coeffs[j] * out[k - j] for j in range(1, min(k, len(coeffs) - 1) + 1)),
            Fraction(0),
        )
        out.append(-acc / coeffs[0])
    return out


@lru_cache(maxsize=None)
def _beta_list(order: int) -> tuple:
    # (e^x - 1)/x = sum x^k/(k+1)!
    shifted_exp = [Fraction(1, factorial(k + 1)) for k in range(order + 1)]
    return tuple(_series_inverse(shifted_exp, order))


def beta_coefficients(max_s: int) -> CoeffSeries:
    """Taylor coefficients of x/(e^x - 1); ``s! * beta_s`` are Bernoulli numbers."""
    if max_s < 0:
        raise ValueError("max_s must be >= 0")
    values = dict(enumerate(_beta_list(max_s)))
    return CoeffSeries("beta", values, max_s)


def beta_tilde_coefficients(max_r: int) -> CoeffSeries:
    """Coefficients of beta(-x)."""
    if max_r < 0:
        raise ValueError("max_r must be >= 0")
    values = {r: (-1) ** r * b for r, b in enumerate(_beta_list(max_r))}
    return CoeffSeries("beta_tilde", values, max_r)


def _truncate(table: dict, max_s: int, max_r: int) -> dict:
    return {(s, r): table.get((s, r), Fraction(0)) for s in range(max_s + 1) for r in range(max_r + 1)}


def _convolve(table: dict, univariate: list, axis: int, bound: int) -> dict:
    """Multiply a bivariate series by a univariate one in variable ``axis``."""
    out: dict = {}
    for key, c in table.items():
        for j, u in enumerate(univariate):
            if key[axis] + j > bound:
                break
            if u:
                k = (key[0] + j, key[1]) if axis == 0 else (key[0], key[1] + j)
                out[k] = out.get(k, Fraction(0)) + c * u
    return out


def alpha_first_form(max_s: int, max_r: int) -> dict:
    """(beta(-x-y) - beta(-y)) / x * beta(x), truncated to s <= max_s, r <= max_r."""
    order = max_s + max_r + 1
    beta = _beta_list(order)
    numer: dict = {}
    for k in range(order + 1):
        for a in range(k + 1):
            numer[a, k - a] = (-1) ** k * beta[k] * comb(k, a)
    # subtracting beta(-y) removes exactly the x^0 column
    if any(numer.pop((0, k)) != (-1) ** k * beta[k] for k in range(order + 1)):
        raise AssertionError("x^0 column does not match beta(-y)")
    shifted = {(a - 1, b): c for (a, b), c in numer.items() if a - 1 <= max_s and b <= max_r}
    return _truncate(_convolve(shifted, list(beta[: max_s + 1]), 0, max_s), max_s, max_r)


def alpha_second_form(max_s: int, max_r: int) -> dict:
    """-(beta(x+y) - beta(x)) / y * beta(-y), truncated the same way."""
    order = max_s + max_r + 1
    beta = _beta_list(order)
    numer: dict = {}
    for k in range(order + 1):
        for b in range(k + 1):
            numer[k - b, b] = beta[k] * comb(k, b)
    if any(numer.pop((k, 0)) != beta[k] for k in range(order + 1)):
        raise AssertionError("y^0 row does not match beta(x)")
    shifted = {(a, b - 1): -c for (a, b), c in numer.items() if a <= max_s and b - 1 <= max_r}
    tilde = [(-1) ** r * beta[r] for r in range(max_r + 1)]
    return _truncate(_convolve(shifted, tilde, 1, max_r), max_s, max_r)


def alpha_coefficients(max_s: int, max_r: int) -> CoeffSeries:
    if max_s < 0 or max_r < 0:
        raise ValueError("max_s and max_r must be >= 0")
    return CoeffSeries("alpha", alpha_first_form(max_s, max_r), (max_s, max_r))


def beta(s: int) -> Fraction:
    return _beta_list(max(s, 8))[s]


def beta_tilde(r: int) -> Fraction:
    return (-1) ** r * beta(r)


@lru_cache(maxsize=None)
def alpha(s: int, r: int) -> Fraction:
    return alpha_first_form(s, r)[s, r]
