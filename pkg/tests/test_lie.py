from collections import Counter
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given

from magnus_pbw.free import (
    LiePolynomial,
    NCPolynomial,
    canonical_basis,
    commutator_evaluate,
    is_canonical,
    is_lyndon,
    left_normed,
    lie_bracket,
    lie_normalize,
    lyndon_tree,
    lyndon_words,
)
from magnus_pbw.free.lie import eval_tree
from strategies import trees


def mobius(n):
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def witt(d, n):
    """Number of Lyndon words of length n over d letters (necklace formula)."""
    return sum(mobius(n // e) * d ** e for e in range(1, n + 1) if n % e == 0) // n


def multinomial_witt(md):
    """Dimension of the free Lie algebra in multidegree ``md`` (Witt's formula)."""
    from math import factorial

    n = sum(md)
    g = 0
    for v in md:
        g = gcd(g, v)
    total = 0
    for e in range(1, g + 1):
        if g % e == 0:
            coeff = factorial(n // e)
            for v in md:
                coeff //= factorial(v // e)
            total += mobius(e) * coeff
    return total // n


def X(i):
    return LiePolynomial.generator(i)


def br(a, b):
    return lie_bracket(a, b)


def test_antisymmetry_normalizes():
    assert br(X(2), X(1)) == -br(X(1), X(2))
    assert br(X(1), X(1)) == LiePolynomial.zero()


def test_jacobi_vanishes():
    a, b, c = X(1), X(2), X(3)
    total = br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))
    assert total == LiePolynomial.zero()


def test_canonical_form_of_degree_three_multilinear():
    # basis: [X1,[X2,X3]], [X2,[X1,X3]]; Jacobi expresses the third bracket
    assert canonical_basis({1: 1, 2: 1, 3: 1}) == [(1, (2, 3)), (2, (1, 3))]
    p = lie_normalize(((1, 2), 3))
    assert p.terms == {(1, (2, 3)): Fraction(1), (2, (1, 3)): Fraction(-1)}


def test_evaluate_bracket():
    assert br(X(1), X(2)).evaluate() == NCPolynomial({(1, 2): 1, (2, 1): -1})


def test_left_normed():
    assert left_normed([1, 2, 3]) == (1, (2, 3))
    assert left_normed([4]) == 4


def test_lyndon_words_and_trees():
    assert lyndon_words(2, 3) == [(1,), (2,), (1, 2), (1, 1, 2), (1, 2, 2)]
    assert is_lyndon((1, 1, 2)) and not is_lyndon((2, 1))
    assert lyndon_tree((1, 1, 2)) == (1, (1, 2))
    assert lyndon_tree((1, 2, 2)) == ((1, 2), 2)


@pytest.mark.parametrize("d,n", [(2, 1), (2, 4), (2, 6), (3, 3), (3, 5), (4, 4)])
def test_lyndon_counts_match_witt(d, n):
    assert sum(1 for w in lyndon_words(d, n) if len(w) == n) == witt(d, n)


@pytest.mark.parametrize(
    "md", [(1, 1), (2, 1), (1, 1, 1), (2, 2), (3, 2), (1, 1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 1, 1, 1, 1)]
)
def test_canonical_basis_dimension(md):
    basis = canonical_basis({i + 1: v for i, v in enumerate(md)})
    assert len(basis) == multinomial_witt(md)
    assert all(is_canonical(t) for t in basis)


@pytest.mark.parametrize("md", [(2, 2), (1, 1, 1, 1), (2, 1, 1)])
def test_canonical_basis_is_linearly_independent(md):
    basis = canonical_basis({i + 1: v for i, v in enumerate(md)})
    rows = [dict(eval_tree(t)) for t in basis]
    # rank by exact elimination over the words
    pivots = []
    for row in rows:
        row = {w: Fraction(c) for w, c in row.items()}
        for w, p in pivots:
            if row.get(w):
                f = row[w] / p[w]
                for ww, cc in p.items():
                    row[ww] = row.get(ww, 0) - f * cc
                row = {k: v for k, v in row.items() if v}
        assert row, "dependent basis element"
        pivots.append((next(iter(row)), row))


@given(trees())
def test_normalization_preserves_evaluation(tree):
    assert lie_normalize(tree).evaluate() == NCPolynomial(eval_tree(tree))


@given(trees())
def test_normal_form_is_canonical_and_idempotent(tree):
    p = lie_normalize(tree)
    assert all(is_canonical(t) for t in p.terms)
    assert lie_normalize(p.terms) == p


@given(trees(max_leaves=3), trees(max_leaves=3))
def test_bracket_antisymmetric(a, b):
    pa, pb = lie_normalize(a), lie_normalize(b)
    assert lie_bracket(pa, pb) == -lie_bracket(pb, pa)


@given(trees(letters=3, max_leaves=4))
def test_commutator_evaluate_is_evaluate(tree):
    p = lie_normalize(tree)
    assert commutator_evaluate(p) == p.evaluate()


def test_relabel_and_substitute():
    p = br(X(1), X(2))
    assert p.relabel({1: 2, 2: 1}) == -p
    q = p.substitute({2: X(2) + X(3)})
    assert q == br(X(1), X(2)) + br(X(1), X(3))


def test_variables_and_degrees():
    p = br(X(1), br(X(2), X(3))) + X(4).scale(2)
    assert p.variables() == {1, 2, 3, 4}
    assert sorted(p.degrees().values()) == [1, 3]


def test_bad_tree_rejected():
    with pytest.raises((TypeError, ValueError)):
        lie_normalize((1, 2, 3))
    with pytest.raises((TypeError, ValueError)):
        lie_normalize(0)
