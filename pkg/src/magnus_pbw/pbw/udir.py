"""Direct product on symmetric tensors of a nilpotent Lie algebra."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import factorial

from ..free.ncpoly import _add_into
from ..free.perms import bounded_set_partitions
from ..free.symtensor import SymTensor, multiset_key
from .nilpotent import NilpotentAlgebra
from .sigma import Report, _expand, mu_on_basis

# elements of the enveloping algebra are symmetric tensors over the algebra basis
EnvelopingElement = SymTensor


@lru_cache(maxsize=None)
def _bch_basis(alg: NilpotentAlgebra, a: tuple, b: tuple) -> dict:
    n, m = len(a), len(b)
    if n + m == 0:
        raise ValueError("bch needs n + m >= 1")
    grading = alg.grading
    if n + m > alg.nilpotency or sum(grading[i] for i in a + b) > alg.nilpotency:
        return {}
    acc: dict = {}
    w = Fraction(1, factorial(n) * factorial(m))
    for pa in permutations(a):
        for pb in permutations(b):
            for i, v in mu_on_basis(alg, pa + pb).items():
                _add_into(acc, i, w * v)
    return acc


def bch_pair(alg: NilpotentAlgebra, a_list, b_list) -> dict:
    """(1/(n! m!)) sum over orderings of mu_{n+m}(a..., b...); 0 once n + m > k."""
    a_list, b_list = list(a_list), list(b_list)
    if not a_list and not b_list:
        raise ValueError("bch needs n + m >= 1")
    acc: dict = {}
    n = len(a_list)
    for idxs, c in _expand(a_list + b_list):
        key_a, key_b = tuple(sorted(idxs[:n])), tuple(sorted(idxs[n:]))
        for i, v in _bch_basis(alg, key_a, key_b).items():
            _add_into(acc, i, c * v)
    return acc


@lru_cache(maxsize=None)
def _product_basis(alg: NilpotentAlgebra, x: tuple, y: tuple) -> SymTensor:
    n = len(x)
    slots = x + y
    acc = SymTensor.zero()
    # blocks wider than k evaluate to zero, so they are never generated
    for part in bounded_set_partitions(range(len(slots)), alg.nilpotency):
        values = []
        for block in part:
            a = tuple(sorted(slots[i] for i in block if i < n))
            b = tuple(sorted(slots[i] for i in block if i >= n))
            v = _bch_basis(alg, a, b)
            if not v:
                break
            values.append(v)
        else:
            acc = acc + SymTensor.odot(values)
    return acc


def u_dir_multiply(x: SymTensor, y: SymTensor, alg: NilpotentAlgebra) -> SymTensor:
    acc = SymTensor.zero()
    for kx, cx in x.items():
        for ky, cy in y.items():
            acc = acc + _product_basis(alg, kx, ky).scale(cx * cy)
    return acc


def basis_multisets(alg: NilpotentAlgebra, max_degree: int, min_degree: int = 1) -> list[tuple]:
    out = []
    for deg in range(min_degree, max_degree + 1):
        out.extend(combinations_with_replacement(range(alg.dim), deg))
    return out


def associativity_check(alg: NilpotentAlgebra, degree: int) -> Report:
    """(x y) z == x (y z) over basis multisets with |x| + |y| + |z| <= degree, each nonempty."""
    report = Report(f"associativity d={alg.generators} k={alg.nilpotency} degree={degree}")
    pool = basis_multisets(alg, max(degree - 2, 0))
    for x in pool:
        for y in pool:
            if len(x) + len(y) > degree - 1:
                continue
            xy = _product_basis(alg, x, y)
            for z in pool:
                if len(x) + len(y) + len(z) > degree:
                    continue
                left = SymTensor.zero()
                for key, c in xy.items():
                    left = left + _product_basis(alg, key, z).scale(c)
                right = SymTensor.zero()
                for key, c in _product_basis(alg, y, z).items():
                    right = right + _product_basis(alg, x, key).scale(c)
                report.record(left == right, {"x": list(x), "y": list(y), "z": list(z)})
    return report
