"""Exact free-algebra substrate: words, Lie elements, symmetric tensors."""
from .lie import (
    LieMonomial,
    LiePolynomial,
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
from .ncpoly import NCPolynomial, nc_multiply, symmetrized_product
from .perms import (
    LiePermutation,
    ascents,
    descents,
    enumerate_lie_permutations,
    ordered_set_partitions,
    set_partitions,
)
from .symtensor import SymTensor

__all__ = [
    "LieMonomial",
    "LiePermutation",
    "LiePolynomial",
    "NCPolynomial",
    "SymTensor",
    "ascents",
    "canonical_basis",
    "commutator_evaluate",
    "descents",
    "enumerate_lie_permutations",
    "is_canonical",
    "is_lyndon",
    "left_normed",
    "lie_bracket",
    "lie_normalize",
    "lyndon_tree",
    "lyndon_words",
    "nc_multiply",
    "ordered_set_partitions",
    "set_partitions",
    "symmetrized_product",
]
