"""Co-shuffle maps F_p = m^(p-1) . Delta^(p-1) on noncommutative polynomials."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from ..free.ncpoly import NCPolynomial, _add_into


@lru_cache(maxsize=None)
def _coshuffle_word(word: tuple, fold: int) -> dict:
    """Sum over the fold**len(word) routings of letters into ordered slots."""
    if fold == 0:
        return {(): 1} if not word else {}
    if fold == 1:
        return {word: 1}
    n = len(word)
    out: dict = {}
    # first slot takes the subsequence at ``chosen``, the rest is routed recursively
    for size in range(n + 1):
        for chosen in combinations(range(n), size):
            head = tuple(word[i] for i in chosen)
            tail = tuple(word[i] for i in range(n) if i not in chosen)
            for w, c in _coshuffle_word(tail, fold - 1).items():
                _add_into(out, head + w, c)
    return out


def coshuffle(p: NCPolynomial, fold: int) -> NCPolynomial:
    if fold < 0:
        raise ValueError("fold must be >= 0")
    acc: dict = {}
    for word, c in p.items():
        for w, k in _coshuffle_word(word, fold).items():
            _add_into(acc, w, c * k)
    return NCPolynomial(acc)


def projection_weights(p: int) -> list[Fraction]:
    """Weights of F_1..F_p in the projection onto the first eigenspace."""
    return [Fraction((-1) ** (i - 1), i) * comb(p, i) for i in range(1, p + 1)]


def coshuffle_projection(word, p: int) -> NCPolynomial:
    """sum_{i=1}^{p} (-1)^(i-1)/i * C(p, i) * F_i(word), for len(word) <= p."""
    word = tuple(word)
    if p < 1:
        raise ValueError("p must be >= 1")
    if len(word) > p:
        raise ValueError(f"word length {len(word)} exceeds p = {p}")
    poly = NCPolynomial.monomial(word)
    acc = NCPolynomial.zero()
    for i, w in enumerate(projection_weights(p), start=1):
        acc = acc + coshuffle(poly, i).scale(w)
    return acc
