"""The symmetric PBW maps on a nilpotent algebra.

``mu_sigma`` sends a pure tensor x_1 (x) ... (x) x_n to
sum over set partitions of ``mu_{p_1}(block 1) . ... . mu_{p_s}(block s)``,
each block read in increasing position order; this equals the weighted sum
over ordered block lists with weight 1/s!.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import factorial

from ..free.ncpoly import _add_into
from ..free.perms import set_partitions
from ..free.symtensor import SymTensor
from ..mu import compute_mu
from .nilpotent import NilpotentAlgebra, vec_add

MU_CONSTRUCTION = "dynkin"


@dataclass
class Report:
    name: str
    passed: bool = True
    checked: int = 0
    failures: int = 0
    witness: object = None
    details: dict = field(default_factory=dict)

    def record(self, ok: bool, witness=None) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            self.passed = False
            if self.witness is None:
                self.witness = witness

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "witness": self.witness,
            **({"details": self.details} if self.details else {}),
        }


def _eval_tree(alg: NilpotentAlgebra, tree, args: tuple) -> dict:
    if isinstance(tree, int):
        return {args[tree - 1]: Fraction(1)}
    return alg.bracket(_eval_tree(alg, tree[0], args), _eval_tree(alg, tree[1], args))


@lru_cache(maxsize=None)
def mu_on_basis(alg: NilpotentAlgebra, args: tuple) -> dict:
    """mu_n(b_{args[0]}, ..., b_{args[-1]}) as a vector; zero beyond degree k."""
    n = len(args)
    if n == 0:
        raise ValueError("mu needs at least one argument")
    grading = alg.grading
    if sum(grading[i] for i in args) > alg.nilpotency:
        return {}
    if n == 1:
        return {args[0]: Fraction(1)}
    acc: dict = {}
    for tree, c in compute_mu(n, MU_CONSTRUCTION).value.items():
        for i, v in _eval_tree(alg, tree, args).items():
            _add_into(acc, i, c * v)
    return acc


def _expand(vectors) -> list[tuple[tuple, Fraction]]:
    """Multilinear expansion of a list of vectors into basis-index tuples."""
    out = []
    for choice in product(*(list(v.items()) for v in vectors)):
        coeff = Fraction(1)
        for _, c in choice:
            coeff *= c
        if coeff:
            out.append((tuple(i for i, _ in choice), coeff))
    return out


def mu_apply(alg: NilpotentAlgebra, vectors) -> dict:
    acc: dict = {}
    for idxs, c in _expand(vectors):
        for i, v in mu_on_basis(alg, idxs).items():
            _add_into(acc, i, c * v)
    return acc


@lru_cache(maxsize=None)
def _mu_sigma_basis(alg: NilpotentAlgebra, args: tuple) -> SymTensor:
    if not args:
        return SymTensor.one()
    acc = SymTensor.zero()
    for part in set_partitions(range(len(args))):
        values = [mu_on_basis(alg, tuple(args[i] for i in block)) for block in part]
        if all(values):
            acc = acc + SymTensor.odot(values)
    return acc


def mu_sigma(alg: NilpotentAlgebra, tensor) -> SymTensor:
    """Image of the pure tensor ``tensor[0] (x) tensor[1] (x) ...`` (vectors)."""
    acc = SymTensor.zero()
    for idxs, c in _expand(tensor):
        acc = acc + _mu_sigma_basis(alg, idxs).scale(c)
    return acc


def symmetrize_to_tensors(key: tuple) -> list[tuple[tuple, Fraction]]:
    """Resolve a basis multiset a_1 . ... . a_n to (1/n!) sum of ordered tensors."""
    n = len(key)
    w = Fraction(1, factorial(n))
    return [(p, w) for p in permutations(key)]


def mu_sigma_descent_check(alg: NilpotentAlgebra, degree: int) -> Report:
    """mu_sigma kills t (x) a (x) b (x) t' - t (x) b (x) a (x) t' - t (x) [a, b] (x) t'."""
    report = Report(f"descent d={alg.generators} k={alg.nilpotency} degree={degree}")
    if degree < 2:
        return report
    for args in product(range(alg.dim), repeat=degree):
        for j in range(degree - 1):
            a, b = args[j], args[j + 1]
            swapped = args[:j] + (b, a) + args[j + 2:]
            vecs = [{i: Fraction(1)} for i in args]
            merged = vecs[:j] + [alg.bracket_basis(a, b)] + vecs[j + 2:]
            residual = (
                _mu_sigma_basis(alg, args)
                - _mu_sigma_basis(alg, swapped)
                - (mu_sigma(alg, merged) if alg.bracket_basis(a, b) else SymTensor.zero())
            )
            report.record(not residual, {"tensor": list(args), "position": j})
    return report


def pbw_roundtrip(alg: NilpotentAlgebra, degree: int) -> Report:
    """mu_sigma(m_sigma(a_1 . ... . a_n)) == a_1 . ... . a_n on every basis multiset."""
    report = Report(f"roundtrip d={alg.generators} k={alg.nilpotency} degree={degree}")
    for key in combinations_with_replacement(range(alg.dim), degree):
        image = SymTensor.zero()
        for args, w in symmetrize_to_tensors(key):
            image = image + _mu_sigma_basis(alg, args).scale(w)
        report.record(image == SymTensor.monomial(key), {"multiset": list(key)})
    return report
