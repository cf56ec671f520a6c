"""Free Lie algebra elements over the rationals.

Bracket monomials are binary trees: a leaf is a positive ``int`` (the
variable index) and an inner node is a 2-tuple ``(left, right)`` meaning
``[left, right]``.

Every :class:`LiePolynomial` is stored in a fixed normal form, chosen per
multidegree component of the free Lie algebra:

* components where each variable occurs at most once use left-normed
  monomials ``[X_a, [X_b, ..., [X_y, X_m]...]]`` that end in the largest
  variable ``m``;
* all other components use Lyndon words with their standard bracketing.

Rewriting into the first basis uses antisymmetry plus the fact that ``ad``
is a homomorphism (Jacobi); rewriting into the second uses the classical
Lyndon bracket reduction.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Union

from .ncpoly import NCPolynomial, _add_into

LieMonomial = Union[int, tuple]


# -- trees -------------------------------------------------------------------

def check_tree(tree) -> LieMonomial:
    """Validate a bracket tree (lists are accepted and converted)."""
    if isinstance(tree, bool):
        raise ValueError("booleans are not variable indices")
    if isinstance(tree, int):
        if tree < 1:
            raise ValueError(f"variable indices must be >= 1, got {tree}")
        return tree
    if isinstance(tree, (tuple, list)) and len(tree) == 2:
        return (check_tree(tree[0]), check_tree(tree[1]))
    raise ValueError(f"not a binary bracket tree: {tree!r}")


@lru_cache(maxsize=None)
def leaves(tree: LieMonomial) -> tuple:
    if isinstance(tree, int):
        return (tree,)
    return leaves(tree[0]) + leaves(tree[1])


def degree(tree: LieMonomial) -> int:
    return len(leaves(tree))


def tree_key(tree: LieMonomial) -> tuple:
    """Sort key: degree first, then the leaf word, then shape."""
    lv = leaves(tree)
    return (len(lv), lv, repr(tree))


def left_normed(items: Iterable[LieMonomial]) -> LieMonomial:
    """``[a1, [a2, ..., [a_{n-1}, a_n]...]]`` from a nonempty sequence."""
    items = tuple(items)
    if not items:
        raise ValueError("left_normed needs at least one entry")
    out = items[-1]
    for item in reversed(items[:-1]):
        out = (item, out)
    return out


def relabel_tree(tree: LieMonomial, mapping: Mapping[int, int]) -> LieMonomial:
    if isinstance(tree, int):
        return mapping.get(tree, tree)
    return (relabel_tree(tree[0], mapping), relabel_tree(tree[1], mapping))


@lru_cache(maxsize=None)
def eval_tree(tree: LieMonomial) -> dict:
    """Commutator expansion of one bracket monomial as ``{word: int}``."""
    if isinstance(tree, int):
        return {(tree,): 1}
    left, right = eval_tree(tree[0]), eval_tree(tree[1])
    acc: dict = {}
    for wa, ca in left.items():
        for wb, cb in right.items():
            _add_into(acc, wa + wb, ca * cb)
            _add_into(acc, wb + wa, -ca * cb)
    return acc


def _squarefree(word: tuple) -> bool:
    return len(set(word)) == len(word)


# -- Lyndon words ------------------------------------------------------------

def is_lyndon(word: tuple) -> bool:
    """Strictly smaller than each of its proper rotations."""
    n = len(word)
    if n == 0:
        return False
    return all(word < word[i:] + word[:i] for i in range(1, n))


@lru_cache(maxsize=None)
def standard_factorization(word: tuple) -> tuple[tuple, tuple]:
    """Split a Lyndon word ``w = uv`` with ``v`` its longest proper Lyndon suffix."""
    if len(word) < 2:
        raise ValueError("standard factorization needs length >= 2")
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise AssertionError("unreachable for Lyndon input")


@lru_cache(maxsize=None)
def lyndon_tree(word: tuple) -> LieMonomial:
    """Standard bracketing of a Lyndon word."""
    if len(word) == 1:
        return word[0]
    u, v = standard_factorization(word)
    return (lyndon_tree(u), lyndon_tree(v))


def lyndon_words(alphabet_size: int, max_length: int) -> list[tuple]:
    """All Lyndon words over ``1..alphabet_size`` of length <= max_length (Duval)."""
    out = []
    if alphabet_size < 1 or max_length < 1:
        return out
    w = [1]
    while w:
        out.append(tuple(w))
        while len(w) < max_length:
            w.append(w[len(w) - len(out[-1])])  # periodic extension
        while w and w[-1] == alphabet_size:
            w.pop()
        if w:
            w[-1] += 1
    return sorted(out, key=lambda x: (len(x), x))


@lru_cache(maxsize=None)
def _lyndon_bracket(u: tuple, v: tuple) -> dict:
    """``[P_u, P_v]`` in the Lyndon basis, as ``{lyndon word: int}``."""
    if u == v:
        return {}
    if u > v:
        return {w: -c for w, c in _lyndon_bracket(v, u).items()}
    if len(u) == 1 or standard_factorization(u)[1] >= v:
        return {u + v: 1}
    u1, u2 = standard_factorization(u)
    # [[u1, u2], v] = [u1, [u2, v]] - [u2, [u1, v]]
    acc: dict = {}
    for w, c in _lyndon_bracket(u2, v).items():
        for w2, c2 in _lyndon_bracket(u1, w).items():
            _add_into(acc, w2, c * c2)
    for w, c in _lyndon_bracket(u1, v).items():
        for w2, c2 in _lyndon_bracket(u2, w).items():
            _add_into(acc, w2, -c * c2)
    return acc


@lru_cache(maxsize=None)
def _lyndon_expand(tree: LieMonomial) -> dict:
    if isinstance(tree, int):
        return {(tree,): 1}
    left, right = _lyndon_expand(tree[0]), _lyndon_expand(tree[1])
    acc: dict = {}
    for u, cu in left.items():
        for v, cv in right.items():
            for w, c in _lyndon_bracket(u, v).items():
                _add_into(acc, w, cu * cv * c)
    return acc


# -- multilinear (left-normed, max last) basis -------------------------------

@lru_cache(maxsize=None)
def _multilinear_normal(tree: LieMonomial) -> dict:
    if isinstance(tree, int):
        return {tree: 1}
    a, b = tree
    top = max(leaves(tree))
    if top not in leaves(b):
        return {t: -c for t, c in _multilinear_normal((b, a)).items()}
    acc: dict = {}
    right = _multilinear_normal(b)
    for ta, ca in _multilinear_normal(a).items():
        # [ta, x] = ad(ta) x, and ad(ta) is ta's commutator expansion in ad's
        expansion = eval_tree(ta)
        for tb, cb in right.items():
            spine = leaves(tb)
            for word, cw in expansion.items():
                _add_into(acc, left_normed(word + spine), ca * cb * cw)
    return acc


@lru_cache(maxsize=None)
def normalize_tree(tree: LieMonomial) -> dict:
    """Canonical-basis expansion ``{canonical tree: int}`` of a raw bracket tree."""
    if _squarefree(leaves(tree)):
        return _multilinear_normal(tree)
    return {lyndon_tree(w): c for w, c in _lyndon_expand(tree).items()}


def is_canonical(tree: LieMonomial) -> bool:
    lv = leaves(tree)
    if _squarefree(lv):
        return lv[-1] == max(lv) and tree == left_normed(lv)
    return is_lyndon(lv) and tree == lyndon_tree(lv)


def canonical_basis(multidegree: Mapping[int, int]) -> list[LieMonomial]:
    """Basis monomials of one multidegree component, in canonical order."""
    from itertools import permutations

    letters = sorted(v for v, k in multidegree.items() for _ in range(k))
    if not letters:
        return []
    if _squarefree(tuple(letters)):
        top = letters[-1]
        rest = letters[:-1]
        return sorted((left_normed(p + (top,)) for p in permutations(rest)), key=tree_key)
    words = {p for p in permutations(letters) if is_lyndon(p)}
    return sorted((lyndon_tree(w) for w in words), key=tree_key)


# -- Lie polynomials ---------------------------------------------------------

class LiePolynomial:
    """Rational combination of canonical bracket monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[LieMonomial, object] | None = None):
        acc: dict = {}
        if terms:
            for tree, coeff in terms.items():
                coeff = Fraction(coeff)
                if not coeff:
                    continue
                for t, c in normalize_tree(check_tree(tree)).items():
                    _add_into(acc, t, coeff * c)
        self._terms = acc

    @classmethod
    def _from_clean(cls, terms: dict) -> "LiePolynomial":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "LiePolynomial":
        return cls._from_clean({})

    @classmethod
    def generator(cls, index: int) -> "LiePolynomial":
        return cls._from_clean({check_tree(index): Fraction(1)})

    @classmethod
    def from_tree(cls, tree, coeff=1) -> "LiePolynomial":
        return cls({check_tree(tree): coeff})

    @property
    def terms(self) -> dict:
        return {t: self._terms[t] for t in sorted(self._terms, key=tree_key)}

    def items(self) -> Iterator[tuple[LieMonomial, Fraction]]:
        for t in sorted(self._terms, key=tree_key):
            yield t, self._terms[t]

    def coeff(self, tree) -> Fraction:
        return self._terms.get(check_tree(tree), Fraction(0))

    def degrees(self) -> dict:
        """Per-term degree metadata."""
        return {t: degree(t) for t in self._terms}

    def variables(self) -> set:
        return {v for t in self._terms for v in leaves(t)}

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LiePolynomial):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LiePolynomial") -> "LiePolynomial":
        if not isinstance(other, LiePolynomial):
            return NotImplemented
        acc = dict(self._terms)
        for t, c in other._terms.items():
            _add_into(acc, t, c)
        return LiePolynomial._from_clean(acc)

    def __neg__(self) -> "LiePolynomial":
        return LiePolynomial._from_clean({t: -c for t, c in self._terms.items()})

    def __sub__(self, other: "LiePolynomial") -> "LiePolynomial":
        if not isinstance(other, LiePolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "LiePolynomial":
        factor = Fraction(factor)
        if not factor:
            return LiePolynomial.zero()
        return LiePolynomial._from_clean({t: c * factor for t, c in self._terms.items()})

    def __mul__(self, factor):
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__

    def bracket(self, other: "LiePolynomial") -> "LiePolynomial":
        return lie_bracket(self, other)

    def evaluate(self) -> NCPolynomial:
        return commutator_evaluate(self)

    def relabel(self, mapping: Mapping[int, int]) -> "LiePolynomial":
        """Rename variables, then renormalize."""
        acc: dict = {}
        for t, c in self._terms.items():
            for t2, c2 in normalize_tree(relabel_tree(t, mapping)).items():
                _add_into(acc, t2, c * c2)
        return LiePolynomial._from_clean(acc)

    def substitute(self, mapping: Mapping[int, "LiePolynomial"]) -> "LiePolynomial":
        """Replace variables by Lie polynomials; unmapped variables stay."""
        return fold_tree_terms(
            self,
            lambda v: mapping[v] if v in mapping else LiePolynomial.generator(v),
            lie_bracket,
            LiePolynomial.zero(),
        )

    def __repr__(self) -> str:
        from ..render import lie_to_text

        return f"LiePolynomial({lie_to_text(self)})"


def fold_tree_terms(poly: LiePolynomial, leaf: Callable, bracket: Callable, zero):
    """Evaluate each bracket monomial in another Lie algebra, summed linearly.

    ``leaf`` maps a variable index to a value, ``bracket`` combines two values
    and the values must support ``+`` and ``.scale``.
    """
    cache: dict = {}

    def walk(tree):
        if tree in cache:
            return cache[tree]
        if isinstance(tree, int):
            value = leaf(tree)
        else:
            value = bracket(walk(tree[0]), walk(tree[1]))
        cache[tree] = value
        return value

    out = zero
    for t, c in poly.items():
        out = out + walk(t).scale(c)
    return out


def lie_normalize(raw) -> LiePolynomial:
    """Bring a raw bracket expression into the canonical basis.

    ``raw`` is a single tree, a ``{tree: coeff}`` mapping or a
    :class:`LiePolynomial` (which is returned renormalized).
    """
    if isinstance(raw, LiePolynomial):
        return LiePolynomial(raw._terms)
    if isinstance(raw, Mapping):
        return LiePolynomial(raw)
    return LiePolynomial({check_tree(raw): 1})


@lru_cache(maxsize=None)
def _bracket_monomials(a: LieMonomial, b: LieMonomial) -> dict:
    return normalize_tree((a, b))


def lie_bracket(p: LiePolynomial, q: LiePolynomial) -> LiePolynomial:
    acc: dict = {}
    for ta, ca in p._terms.items():
        for tb, cb in q._terms.items():
            for t, c in _bracket_monomials(ta, tb).items():
                _add_into(acc, t, ca * cb * c)
    return LiePolynomial._from_clean(acc)


def commutator_evaluate(p: LiePolynomial) -> NCPolynomial:
    """Map ``[a, b]`` to ``ab - ba`` recursively, linearly."""
    acc: dict = {}
    for t, c in p._terms.items():
        for w, cw in eval_tree(t).items():
            _add_into(acc, w, c * cw)
    return NCPolynomial._from_clean(acc)
