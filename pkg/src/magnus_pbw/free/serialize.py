"""JSON forms of polynomials and symmetric tensors.

A polynomial is a list of ``{"coeff": "p/q", "term": ...}`` entries. Words are
integer lists, bracket monomials nested two-element lists (``[1, [2, 3]]``)
and symmetric-tensor terms lists of bracket monomials.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .lie import LiePolynomial, check_tree
from .ncpoly import NCPolynomial
from .symtensor import SymTensor


def fraction_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fraction_from_str(text: str) -> Fraction:
    num, _, den = str(text).partition("/")
    return Fraction(int(num), int(den) if den else 1)


def tree_to_json(tree):
    if isinstance(tree, int):
        return tree
    return [tree_to_json(tree[0]), tree_to_json(tree[1])]


def nc_to_json(p: NCPolynomial) -> list:
    return [{"coeff": fraction_to_str(c), "term": list(w)} for w, c in p.items()]


def nc_from_json(data: list) -> NCPolynomial:
    return NCPolynomial({tuple(d["term"]): fraction_from_str(d["coeff"]) for d in data})


def lie_to_json(p: LiePolynomial) -> list:
    return [{"coeff": fraction_to_str(c), "term": tree_to_json(t)} for t, c in p.items()]


def lie_from_json(data: list) -> LiePolynomial:
    acc: dict = {}
    for d in data:
        tree = check_tree(d["term"])
        acc[tree] = acc.get(tree, 0) + fraction_from_str(d["coeff"])
    return LiePolynomial(acc)


def sym_to_json(t: SymTensor) -> list:
    return [
        {"coeff": fraction_to_str(c), "term": [tree_to_json(x) for x in key]}
        for key, c in t.items()
    ]


def sym_from_json(data: list) -> SymTensor:
    acc: dict = {}
    for d in data:
        key = tuple(check_tree(x) for x in d["term"])
        acc[key] = acc.get(key, 0) + fraction_from_str(d["coeff"])
    return SymTensor(acc)


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True)
