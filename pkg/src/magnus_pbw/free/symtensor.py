"""Symmetric tensors: rational combinations of multisets of basis items.

Items are bracket monomials (or, inside a nilpotent algebra, basis indices).
A key is the sorted tuple of its items; the empty tuple is the unit.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping

from .lie import tree_key
from .ncpoly import _add_into


def multiset_key(items: Iterable) -> tuple:
    return tuple(sorted(items, key=tree_key))


def _key_order(key: tuple) -> tuple:
    return (len(key), tuple(tree_key(x) for x in key))


class SymTensor:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        acc: dict = {}
        if terms:
            for key, coeff in terms.items():
                _add_into(acc, multiset_key(key), Fraction(coeff))
        self._terms = acc

    @classmethod
    def _from_clean(cls, terms: dict) -> "SymTensor":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def one(cls) -> "SymTensor":
        return cls._from_clean({(): Fraction(1)})

    @classmethod
    def zero(cls) -> "SymTensor":
        return cls._from_clean({})

    @classmethod
    def monomial(cls, items: Iterable, coeff=1) -> "SymTensor":
        return cls({tuple(items): coeff})

    @classmethod
    def odot(cls, factors: Iterable[Mapping]) -> "SymTensor":
        """Symmetric product of linear combinations ``{item: coeff}``."""
        acc: dict = {}
        factors = [list(f.items()) for f in factors]
        for choice in product(*factors):
            coeff = Fraction(1)
            for _, c in choice:
                coeff *= c
            if coeff:
                _add_into(acc, multiset_key(item for item, _ in choice), coeff)
        return cls._from_clean(acc)

    @property
    def terms(self) -> dict:
        return {k: self._terms[k] for k in sorted(self._terms, key=_key_order)}

    def items(self) -> Iterator[tuple[tuple, Fraction]]:
        for k in sorted(self._terms, key=_key_order):
            yield k, self._terms[k]

    def coeff(self, items: Iterable) -> Fraction:
        return self._terms.get(multiset_key(items), Fraction(0))

    def degree_part(self, degree: int) -> "SymTensor":
        return SymTensor._from_clean({k: c for k, c in self._terms.items() if len(k) == degree})

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SymTensor):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SymTensor") -> "SymTensor":
        if not isinstance(other, SymTensor):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(acc, k, c)
        return SymTensor._from_clean(acc)

    def __neg__(self) -> "SymTensor":
        return SymTensor._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "SymTensor") -> "SymTensor":
        return self + (-other)

    def scale(self, factor) -> "SymTensor":
        factor = Fraction(factor)
        if not factor:
            return SymTensor.zero()
        return SymTensor._from_clean({k: c * factor for k, c in self._terms.items()})

    def __mul__(self, factor):
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"SymTensor({self.terms!r})"
