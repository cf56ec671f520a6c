from fractions import Fraction
from math import factorial

import pytest
import sympy

from magnus_pbw.mu.series import (
    alpha,
    alpha_coefficients,
    alpha_first_form,
    alpha_second_form,
    beta,
    beta_coefficients,
    beta_tilde,
    beta_tilde_coefficients,
)


def sympy_series_coeffs(expr, var, order):
    ser = sympy.series(expr, var, 0, order + 1).removeO()
    return [Fraction(str(ser.coeff(var, i))) for i in range(order + 1)]


def test_beta_matches_sympy_expansion():
    x = sympy.Symbol("x")
    assert beta_coefficients(12).as_list() == sympy_series_coeffs(x / (sympy.exp(x) - 1), x, 12)


def test_beta_tilde_matches_sympy_expansion():
    x = sympy.Symbol("x")
    assert beta_tilde_coefficients(10).as_list() == sympy_series_coeffs(x / (1 - sympy.exp(-x)), x, 10)


@pytest.mark.parametrize("s", range(2, 16))
def test_beta_is_bernoulli_over_factorial(s):
    b = sympy.bernoulli(s)
    assert beta(s) * factorial(s) == Fraction(int(b.p), int(b.q))


def test_beta_recursion():
    values = beta_coefficients(15).as_list()
    for s in range(1, 16):
        assert sum(values[j] / factorial(s + 1 - j) for j in range(s + 1)) == 0


def test_beta_tilde_sign_flip():
    for r in range(12):
        assert beta_tilde(r) == (-1) ** r * beta(r)


def test_alpha_matches_bernoulli_polynomial_expansion():
    x, y = sympy.symbols("x y")
    order = 10

    def b(z):
        # truncated z/(e^z - 1) from sympy's Bernoulli numbers (B_1 = -1/2 convention)
        return sum(sympy.Rational(-1, 2) * z if k == 1 else sympy.bernoulli(k) / sympy.factorial(k) * z ** k
                   for k in range(order + 1))

    numer = sympy.Poly(sympy.expand(b(-x - y) - b(-y)), x, y)
    quotient, rem = sympy.div(numer, sympy.Poly(x, x, y))
    assert rem.is_zero
    product = sympy.Poly(sympy.expand(quotient.as_expr() * b(x)), x, y)
    table = alpha_coefficients(4, 4).as_matrix()
    for s in range(5):
        for r in range(5):
            want = Fraction(str(product.coeff_monomial(x ** s * y ** r)))
            assert table[s][r] == want
            assert alpha(s, r) == want


def test_alpha_forms_agree():
    assert alpha_first_form(10, 10) == alpha_second_form(10, 10)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        beta_coefficients(-1)
