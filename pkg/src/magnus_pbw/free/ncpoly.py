"""Noncommutative polynomials with exact rational coefficients.

A word is a tuple of 1-based variable indices; the empty tuple is the unit
monomial. Coefficients are :class:`fractions.Fraction` and zero terms are
pruned after every operation, so equality is plain mapping equality.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Mapping

Word = tuple


def word_key(word: Word) -> tuple:
    """Length-first, then lexicographic."""
    return (len(word), word)


def check_word(word: Iterable[int]) -> Word:
    word = tuple(word)
    for letter in word:
        if not isinstance(letter, int) or letter < 1:
            raise ValueError(f"variable indices must be positive integers, got {letter!r}")
    return word


def _add_into(acc: dict, key, coeff) -> None:
    value = acc.get(key, 0) + coeff
    if value:
        acc[key] = value
    else:
        acc.pop(key, None)


class NCPolynomial:
    """Finite rational combination of words."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        clean: dict = {}
        if terms:
            for word, coeff in terms.items():
                _add_into(clean, check_word(word), Fraction(coeff))
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: dict) -> "NCPolynomial":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def one(cls) -> "NCPolynomial":
        return cls._from_clean({(): Fraction(1)})

    @classmethod
    def zero(cls) -> "NCPolynomial":
        return cls._from_clean({})

    @classmethod
    def monomial(cls, word: Iterable[int], coeff=1) -> "NCPolynomial":
        return cls({tuple(word): coeff})

    @classmethod
    def generator(cls, index: int) -> "NCPolynomial":
        return cls.monomial((index,))

    @property
    def terms(self) -> dict:
        """Copy of the word -> coefficient map in canonical order."""
        return {w: self._terms[w] for w in sorted(self._terms, key=word_key)}

    def items(self) -> Iterator[tuple[Word, Fraction]]:
        for w in sorted(self._terms, key=word_key):
            yield w, self._terms[w]

    def coeff(self, word: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, NCPolynomial):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            _add_into(acc, w, c)
        return NCPolynomial._from_clean(acc)

    def __neg__(self) -> "NCPolynomial":
        return NCPolynomial._from_clean({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "NCPolynomial") -> "NCPolynomial":
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "NCPolynomial":
        factor = Fraction(factor)
        if not factor:
            return NCPolynomial.zero()
        return NCPolynomial._from_clean({w: c * factor for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPolynomial):
            return nc_multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def homogeneous_part(self, degree: int) -> "NCPolynomial":
        return NCPolynomial._from_clean({w: c for w, c in self._terms.items() if len(w) == degree})

    def substitute(self, mapping: Mapping[int, "NCPolynomial"]) -> "NCPolynomial":
        """Replace each variable by a polynomial; unmapped variables stay."""
        out = NCPolynomial.zero()
        for word, c in self._terms.items():
            prod = NCPolynomial.one().scale(c)
            for letter in word:
                prod = prod * mapping.get(letter, NCPolynomial.generator(letter))
            out = out + prod
        return out

    def __repr__(self) -> str:
        from ..render import nc_to_text

        return f"NCPolynomial({nc_to_text(self)})"


def nc_multiply(a: NCPolynomial, b: NCPolynomial) -> NCPolynomial:
    """Concatenation product, extended bilinearly."""
    acc: dict = {}
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            _add_into(acc, wa + wb, ca * cb)
    return NCPolynomial._from_clean(acc)


def symmetrized_product(factors: list[NCPolynomial]) -> NCPolynomial:
    """Average of the products of ``factors`` over all orderings.

    The empty list gives the unit.
    """
    s = len(factors)
    acc = NCPolynomial.zero()
    for order in permutations(range(s)):
        prod = NCPolynomial.one()
        for i in order:
            prod = prod * factors[i]
        acc = acc + prod
    return acc.scale(Fraction(1, factorial(s)))
