"""Permutations, ordered set partitions and Lie-permutations."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence


def check_permutation(images: Sequence[int]) -> tuple:
    images = tuple(images)
    if sorted(images) != list(range(1, len(images) + 1)):
        raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
    return images


def descents(sigma: Sequence[int]) -> int:
    return sum(1 for a, b in zip(sigma, sigma[1:]) if a > b)


def ascents(sigma: Sequence[int]) -> int:
    return sum(1 for a, b in zip(sigma, sigma[1:]) if a < b)


def all_permutations(n: int) -> Iterator[tuple]:
    return permutations(range(1, n + 1))


def set_partitions(items: Sequence) -> Iterator[list[tuple]]:
    """Unordered set partitions; blocks keep the input order internally.

    Blocks are listed by their first element, i.e. by increasing minimum
    position in ``items``.
    """
    items = tuple(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [(first,)] + part
        for i in range(len(part)):
            yield part[:i] + [(first,) + part[i]] + part[i + 1:]


def ordered_set_partitions(items: Sequence) -> Iterator[list[tuple]]:
    """Ordered lists of disjoint nonempty blocks covering ``items``.

    Each block keeps the input order, so for sorted input every block is an
    increasing sequence. The count is the Fubini number of ``len(items)``.
    """
    for part in set_partitions(items):
        for order in permutations(part):
            yield list(order)


def bounded_set_partitions(items: Sequence, max_block: int) -> Iterator[list[tuple]]:
    """Set partitions whose blocks have at most ``max_block`` elements."""
    items = tuple(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in bounded_set_partitions(rest, max_block):
        yield [(first,)] + part
        for i in range(len(part)):
            if len(part[i]) < max_block:
                yield part[:i] + [(first,) + part[i]] + part[i + 1:]


@dataclass(frozen=True)
class LiePermutation:
    """Blocks ``(i_{k,1}, ..., i_{k,p_k})`` partitioning ``{1..n}``.

    Each block ends in its maximum and block maxima increase.
    """

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        flat = [i for b in blocks for i in b]
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(f"blocks do not partition 1..{len(flat)}: {blocks}")
        maxima = []
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if b[-1] != max(b):
                raise ValueError(f"block {b} does not end in its maximum")
            maxima.append(b[-1])
        if any(x >= y for x, y in zip(maxima, maxima[1:])):
            raise ValueError(f"block maxima must increase: {blocks}")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def to_permutation(self) -> tuple:
        """The sequence I_s, ..., I_1 written out, last block first."""
        return tuple(i for b in reversed(self.blocks) for i in b)

    @classmethod
    def from_permutation(cls, sigma: Sequence[int]) -> "LiePermutation":
        """Inverse of :meth:`to_permutation`: peel blocks up to each running maximum."""
        rest = list(check_permutation(sigma))
        blocks = []
        while rest:
            top = max(rest)
            cut = rest.index(top) + 1
            blocks.append(tuple(rest[:cut]))
            rest = rest[cut:]
        return cls(tuple(reversed(blocks)))


def enumerate_lie_permutations(n: int) -> list[LiePermutation]:
    """All Lie-permutations of ``{1..n}`` via the bijection with permutations."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return [LiePermutation.from_permutation(s) for s in all_permutations(n)]


def lie_permutations_direct(n: int) -> list[LiePermutation]:
    """Independent enumeration from set partitions; used to cross-check."""
    out = []
    for part in set_partitions(range(1, n + 1)):
        part = sorted(part, key=max)
        choices = [
            [p + (max(b),) for p in permutations(sorted(set(b) - {max(b)}))]
            for b in part
        ]
        for combo in product(*choices):
            out.append(LiePermutation(tuple(combo)))
    return out

