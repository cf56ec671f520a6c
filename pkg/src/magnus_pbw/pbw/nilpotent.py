"""Free k-nilpotent Lie algebras as structure-constant tables.

Elements are sparse vectors ``{basis index: Fraction}``. The basis is the
free-algebra canonical basis truncated at degree k, so brackets are computed
in the free Lie algebra and anything above degree k is dropped.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from ..free.lie import (
    LieMonomial,
    _bracket_monomials,
    canonical_basis,
    degree,
    lyndon_words,
    tree_key,
)
from ..free.ncpoly import _add_into


def vec_add(*vectors: dict) -> dict:
    acc: dict = {}
    for v in vectors:
        for i, c in v.items():
            _add_into(acc, i, c)
    return acc


def vec_scale(v: dict, factor) -> dict:
    factor = Fraction(factor)
    if not factor:
        return {}
    return {i: c * factor for i, c in v.items()}


@dataclass(frozen=True, eq=False)
class NilpotentAlgebra:
    generators: int
    nilpotency: int
    basis: tuple
    brackets: dict = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def grading(self) -> list[int]:
        return [degree(t) for t in self.basis]

    def index(self, tree: LieMonomial) -> int:
        return self._index[tree]

    def generator(self, i: int) -> dict:
        return {self._index[i]: Fraction(1)}

    def basis_vector(self, idx: int) -> dict:
        return {idx: Fraction(1)}

    def bracket_basis(self, i: int, j: int) -> dict:
        return self.brackets.get((i, j), {})

    def bracket(self, x: dict, y: dict) -> dict:
        acc: dict = {}
        for i, ci in x.items():
            for j, cj in y.items():
                for l, c in self.brackets.get((i, j), {}).items():
                    _add_into(acc, l, ci * cj * c)
        return acc

    def from_lie(self, poly) -> dict:
        """Image of a free Lie polynomial in generators 1..d (truncated)."""
        acc: dict = {}
        for t, c in poly.items():
            if degree(t) <= self.nilpotency:
                _add_into(acc, self._index[t], c)
        return acc

    def jacobi_violations(self) -> list[tuple]:
        bad = []
        for a, b, c in product(range(self.dim), repeat=3):
            x, y, z = ({a: Fraction(1)}, {b: Fraction(1)}, {c: Fraction(1)})
            total = vec_add(
                self.bracket(x, self.bracket(y, z)),
                self.bracket(y, self.bracket(z, x)),
                self.bracket(z, self.bracket(x, y)),
            )
            if total:
                bad.append((a, b, c))
        return bad

    def antisymmetry_violations(self) -> list[tuple]:
        return [
            (i, j)
            for i in range(self.dim)
            for j in range(self.dim)
            if vec_add(self.bracket_basis(i, j), self.bracket_basis(j, i))
        ]

    def to_json(self) -> dict:
        from ..free.serialize import fraction_to_str, tree_to_json

        entries = []
        for (i, j), value in sorted(self.brackets.items()):
            entries.append({
                "i": i,
                "j": j,
                "value": [[fraction_to_str(c), l] for l, c in sorted(value.items())],
            })
        return {
            "dim": self.dim,
            "generators": self.generators,
            "nilpotency": self.nilpotency,
            "grading": self.grading,
            "basis": [tree_to_json(t) for t in self.basis],
            "brackets": entries,
        }

    def __hash__(self) -> int:
        return hash((self.generators, self.nilpotency))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NilpotentAlgebra)
            and (self.generators, self.nilpotency) == (other.generators, other.nilpotency)
        )


def _free_basis(d: int, k: int) -> list:
    multidegrees = {tuple(sorted(Counter(w).items())) for w in lyndon_words(d, k)}
    out = []
    for md in multidegrees:
        out.extend(canonical_basis(dict(md)))
    return sorted(out, key=tree_key)


@lru_cache(maxsize=None)
def build_free_nilpotent(d: int, k: int) -> NilpotentAlgebra:
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 generators and nilpotency k >= 1")
    basis = tuple(_free_basis(d, k))
    index = {t: i for i, t in enumerate(basis)}
    brackets: dict = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if degree(a) + degree(b) > k:
                continue
            value = {}
            for t, c in _bracket_monomials(a, b).items():
                if c:
                    value[index[t]] = Fraction(c)
            if value:
                brackets[i, j] = value
    alg = NilpotentAlgebra(d, k, basis, brackets)
    object.__setattr__(alg, "_index", index)
    return alg
