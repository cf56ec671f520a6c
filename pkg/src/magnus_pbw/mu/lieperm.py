"""Construction through the symmetric decomposition of X_1 ... X_n.

The monomial is rewritten as a combination of symmetrized products of
left-normed commutators ``[X_a, ..., X_max]_L``, one factor per block of a
Lie-permutation. The one-block coefficients give mu_n.

Two solvers are provided. ``decompose_rewrite`` symmetrizes the top product
length and pushes the commutator remainders one length down, repeatedly.
``decompose_linear`` solves the n! x n! linear system over word coefficients.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..free.lie import (
    LiePolynomial,
    _bracket_monomials,
    eval_tree,
    leaves,
    left_normed,
)
from ..free.ncpoly import NCPolynomial, _add_into, symmetrized_product
from ..free.perms import LiePermutation, all_permutations, enumerate_lie_permutations
from ..free.symtensor import multiset_key
from .result import MuResult, check_n


@lru_cache(maxsize=None)
def _swap_events(s: int) -> tuple:
    """Adjacent swaps, summed over all orderings, that bubble-sort back to identity.

    Returns ``((U, j), count)`` pairs: ``U`` is an index sequence whose entries
    at ``j, j+1`` are out of order and get swapped. Telescoping gives
    ``T_pi - T = sum over the chain of (..., [T_U[j], T_U[j+1]], ...)``.
    """
    events: Counter = Counter()
    for pi in all_permutations(s):
        u = list(pi)
        swapped = True
        while swapped:
            swapped = False
            for j in range(s - 1):
                if u[j] > u[j + 1]:
                    events[tuple(u), j] += 1
                    u[j], u[j + 1] = u[j + 1], u[j]
                    swapped = True
    return tuple(events.items())


def _tree_to_lieperm_block(tree) -> tuple:
    return leaves(tree)


def multiset_to_lieperm(key: tuple) -> LiePermutation:
    blocks = sorted((_tree_to_lieperm_block(t) for t in key), key=max)
    return LiePermutation(tuple(blocks))


def lieperm_factors(lp: LiePermutation) -> list:
    return [left_normed(block) for block in lp.blocks]


@lru_cache(maxsize=None)
def decompose_rewrite(n: int) -> dict:
    """Coefficients ``{LiePermutation: Fraction}`` of X_1...X_n by rewriting."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return {LiePermutation(()): Fraction(1)}
    # level s holds ordered products of s canonical commutator monomials
    level: dict = {tuple(range(1, n + 1)): Fraction(1)}
    result: dict = {}
    for s in range(n, 0, -1):
        lower: dict = {}
        events = _swap_events(s)
        norm = Fraction(1, factorial(s))
        for factors, c in level.items():
            _add_into(result, multiset_key(factors), c)
            if s == 1:
                continue
            # T - sym(T) = -(1/s!) sum_pi (T_pi - T)
            weight = -c * norm
            for (u, j), count in events:
                a, b = factors[u[j] - 1], factors[u[j + 1] - 1]
                head = tuple(factors[i - 1] for i in u[:j])
                tail = tuple(factors[i - 1] for i in u[j + 2:])
                for t, ct in _bracket_monomials(a, b).items():
                    _add_into(lower, head + (t,) + tail, weight * count * ct)
        level = lower
    return {multiset_to_lieperm(k): v for k, v in result.items()}


@lru_cache(maxsize=None)
def decoe_basis_vector(lp: LiePermutation) -> NCPolynomial:
    factors = [NCPolynomial(eval_tree(t)) for t in lieperm_factors(lp)]
    return symmetrized_product(factors)


def _solve_exact(columns: list[dict], target: dict, rows: list) -> list[Fraction]:
    """Solve ``sum_j x_j columns[j] = target``; raise if the system is singular."""
    index = {r: i for i, r in enumerate(rows)}
    m = len(columns)
    if len(rows) != m:
        raise ValueError("system is not square")
    mat = [[Fraction(0)] * (m + 1) for _ in range(m)]
    for j, col in enumerate(columns):
        for r, v in col.items():
            mat[index[r]][j] = Fraction(v)
    for r, v in target.items():
        mat[index[r]][m] = Fraction(v)
    for col in range(m):
        pivot = next((r for r in range(col, m) if mat[r][col]), None)
        if pivot is None:
            raise ArithmeticError("decomposition basis is singular")
        mat[col], mat[pivot] = mat[pivot], mat[col]
        prow = mat[col]
        inv = 1 / prow[col]
        for k in range(col, m + 1):
            prow[k] *= inv
        for r in range(m):
            if r != col and mat[r][col]:
                f = mat[r][col]
                row = mat[r]
                for k in range(col, m + 1):
                    if prow[k]:
                        row[k] -= f * prow[k]
    return [mat[i][m] for i in range(m)]


def decompose_linear(n: int, word: tuple | None = None) -> dict:
    """Same coefficients from the full linear system (verification path)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    word = tuple(range(1, n + 1)) if word is None else tuple(word)
    basis = enumerate_lie_permutations(n)
    columns = [dict(decoe_basis_vector(lp).items()) for lp in basis]
    rows = list(all_permutations(n))
    solution = _solve_exact(columns, {word: 1}, rows)
    return {lp: x for lp, x in zip(basis, solution) if x}


def mu_lieperm(n: int) -> MuResult:
    check_n(n)
    acc: dict = {}
    for lp, c in decompose_rewrite(n).items():
        if len(lp.blocks) == 1:
            acc[left_normed(lp.blocks[0])] = c
    return MuResult(n, "lieperm", LiePolynomial(acc))
