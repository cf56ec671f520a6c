from fractions import Fraction

import pytest

from magnus_pbw.free import LiePolynomial, lie_bracket
from magnus_pbw.mu.oracle import log_exp_xy
from magnus_pbw.pbw import bch_series, bch_term

X, Y = LiePolynomial.generator(1), LiePolynomial.generator(2)


def br(a, b):
    return lie_bracket(a, b)


def test_low_order_terms():
    assert bch_term(1) == X + Y
    assert bch_term(2) == br(X, Y).scale(Fraction(1, 2))
    assert bch_term(3) == (br(X, br(X, Y)) + br(br(X, Y), Y)).scale(Fraction(1, 12))


def test_degree_four_term():
    # the classical -1/24 [Y, [X, [X, Y]]]
    assert bch_term(4) == br(Y, br(X, br(X, Y))).scale(Fraction(-1, 24))


@pytest.mark.parametrize("n", range(1, 6))
def test_matches_log_exp(n):
    assert bch_term(n).evaluate() == log_exp_xy(n).homogeneous_part(n)


def test_series_is_list_of_terms():
    assert bch_series(3) == [bch_term(1), bch_term(2), bch_term(3)]


@pytest.mark.parametrize("construction", ["magnus_L", "lieperm"])
def test_construction_independent(construction):
    assert bch_term(4, construction) == bch_term(4)


def test_bad_order():
    with pytest.raises(ValueError):
        bch_term(0)
