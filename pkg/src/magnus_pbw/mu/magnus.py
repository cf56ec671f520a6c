"""Magnus-type recursions for the Dynkin-Magnus commutators.

Three recursions build mu_n from lower mu_p:

* ``L``: bracket stacks ending in X_1 over ordered block lists of {2..n},
  weighted by the Taylor coefficients of x/(e^x - 1);
* ``R``: the mirror image ending in X_n over {1..n-1}, weights from beta(-x);
* ``C``: a bracket of an X_1-stack and an X_n-stack over {2..n-1}, weighted
  by the bivariate alpha table.

Blocks are increasing sequences and the block lists are ordered.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..free.lie import LiePolynomial, lie_bracket
from ..free.perms import ordered_set_partitions
from .result import MuResult, check_n
from .series import alpha, beta, beta_tilde

VARIANTS = ("L", "R", "C")


def _block_mu(variant: str, block: tuple) -> LiePolynomial:
    base = _mu(variant, len(block))
    if block == tuple(range(1, len(block) + 1)):
        return base
    return base.relabel({j + 1: i for j, i in enumerate(block)})


def _stack(variant: str, blocks, last: int) -> LiePolynomial:
    """[mu(B_1), ..., mu(B_s), X_last]_L"""
    out = LiePolynomial.generator(last)
    for block in reversed(blocks):
        out = lie_bracket(_block_mu(variant, block), out)
    return out


@lru_cache(maxsize=None)
def _mu(variant: str, n: int) -> LiePolynomial:
    if n == 1:
        return LiePolynomial.generator(1)
    acc = LiePolynomial.zero()
    if variant == "L":
        for blocks in ordered_set_partitions(range(2, n + 1)):
            w = beta(len(blocks))
            if w:
                acc = acc + _stack(variant, blocks, 1).scale(w)
    elif variant == "R":
        for blocks in ordered_set_partitions(range(1, n)):
            w = beta_tilde(len(blocks))
            if w:
                acc = acc + _stack(variant, blocks, n).scale(w)
    elif variant == "C":
        inner = tuple(range(2, n))
        for size in range(len(inner) + 1):
            for left in combinations(inner, size):
                right = tuple(i for i in inner if i not in left)
                for left_blocks in ordered_set_partitions(left):
                    for right_blocks in ordered_set_partitions(right):
                        w = alpha(len(left_blocks), len(right_blocks))
                        if not w:
                            continue
                        term = lie_bracket(
                            _stack(variant, left_blocks, 1),
                            _stack(variant, right_blocks, n),
                        )
                        acc = acc + term.scale(w)
    else:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return acc


def mu_magnus(n: int, variant: str = "C") -> MuResult:
    check_n(n)
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return MuResult(n, f"magnus_{variant}", _mu(variant, n))
