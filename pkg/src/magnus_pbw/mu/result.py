from __future__ import annotations

from dataclasses import dataclass

from ..free.lie import LiePolynomial, leaves

CONSTRUCTIONS = ("magnus_L", "magnus_R", "magnus_C", "lieperm", "dynkin")


@dataclass(frozen=True)
class MuResult:
    n: int
    construction: str
    value: LiePolynomial

    def __post_init__(self):
        if self.construction not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction {self.construction!r}")
        want = tuple(range(1, self.n + 1))
        for tree in self.value.terms:
            if tuple(sorted(leaves(tree))) != want:
                raise ValueError(f"term {tree} is not multilinear in X1..X{self.n}")


def check_n(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return n
