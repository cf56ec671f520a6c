from fractions import Fraction

import pytest

from magnus_pbw.free import LiePolynomial, lie_bracket
from magnus_pbw.pbw import build_free_nilpotent
from test_lie import witt


def witt_total(d, k):
    return sum(witt(d, n) for n in range(1, k + 1))


@pytest.mark.parametrize("d,k", [(1, 3), (2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (2, 5)])
def test_dimension_matches_witt(d, k):
    alg = build_free_nilpotent(d, k)
    assert alg.dim == witt_total(d, k)
    assert sorted(alg.grading) == alg.grading


@pytest.mark.parametrize("d,k", [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3)])
def test_structure_constants_are_lie(d, k):
    alg = build_free_nilpotent(d, k)
    assert alg.jacobi_violations() == []
    assert alg.antisymmetry_violations() == []


def test_heisenberg():
    alg = build_free_nilpotent(2, 2)
    assert alg.basis == (1, 2, (1, 2))
    assert alg.bracket(alg.generator(1), alg.generator(2)) == {2: Fraction(1)}
    assert alg.bracket(alg.generator(2), alg.generator(1)) == {2: Fraction(-1)}
    assert alg.bracket_basis(0, 2) == {}


def test_brackets_vanish_past_nilpotency():
    alg = build_free_nilpotent(2, 3)
    top = alg.index((1, (1, 2)))
    for i in range(alg.dim):
        assert alg.bracket(alg.basis_vector(top), alg.basis_vector(i)) == {}


def test_from_lie_truncates():
    alg = build_free_nilpotent(2, 2)
    X = LiePolynomial.generator
    p = lie_bracket(X(1), X(2)) + lie_bracket(X(1), lie_bracket(X(1), X(2)))
    assert alg.from_lie(p) == {2: Fraction(1)}


def test_json_export():
    data = build_free_nilpotent(2, 3).to_json()
    assert data["dim"] == 5
    assert data["grading"] == [1, 1, 2, 3, 3]
    assert {"i": 0, "j": 1, "value": [["1/1", 2]]} in data["brackets"]


def test_bad_parameters():
    with pytest.raises(ValueError):
        build_free_nilpotent(0, 2)
    with pytest.raises(ValueError):
        build_free_nilpotent(2, 0)
