"""Checks of the defining identities of mu_n on the free Lie algebra."""
from __future__ import annotations

from ..free.lie import LiePolynomial, lie_bracket
from ..free.perms import all_permutations


def swap_identity_residual(mu_n: LiePolynomial, mu_prev: LiePolynomial, n: int, k: int) -> LiePolynomial:
    """mu_n(.., X_{k-1}, X_k, ..) - mu_n(.., X_k, X_{k-1}, ..) - mu_{n-1}(.., [X_{k-1}, X_k], ..)"""
    if not 1 < k <= n:
        raise ValueError(f"need 1 < k <= n, got k={k}, n={n}")
    swapped = mu_n.relabel({k - 1: k, k: k - 1})
    merged = lie_bracket(LiePolynomial.generator(k - 1), LiePolynomial.generator(k))
    mapping = {}
    for j in range(1, n):
        if j < k - 1:
            mapping[j] = LiePolynomial.generator(j)
        elif j == k - 1:
            mapping[j] = merged
        else:
            mapping[j] = LiePolynomial.generator(j + 1)
    return mu_n - swapped - mu_prev.substitute(mapping)


def symmetrized_sum(mu_n: LiePolynomial, n: int) -> LiePolynomial:
    """sum over sigma of mu_n(X_sigma(1), ..., X_sigma(n))."""
    acc = LiePolynomial.zero()
    for sigma in all_permutations(n):
        acc = acc + mu_n.relabel({i + 1: s for i, s in enumerate(sigma)})
    return acc
