"""Shapes, Young subgroups and the counting primitives shared by the engines."""

from __future__ import annotations

import collections
import functools
import itertools
import logging
import math
from typing import Iterator

from glpoly.config import DEFAULT_ENUMERATION_THRESHOLD
from glpoly.exception import WeightMismatchError
from glpoly.types import Composition, Partition, Permutation, SkewTuple, YoungSubgroup

LOGGER = logging.getLogger(__name__)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def generate(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in generate(remaining - first, first):
                yield (first,) + rest

    if n < 0:
        raise ValueError(f"Negative weight {n}")
    return [Partition(parts) for parts in generate(n, n)]


def compositions_of(n: int) -> list[Composition]:
    """All compositions of ``n``, ordered by their cut points."""
    if n == 0:
        return [Composition(())]
    result = []
    for k in range(n):
        for cuts in itertools.combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            result.append(Composition(tuple(b - a for a, b in zip(bounds, bounds[1:]))))
    return result


def partition_tuples(mu: Composition) -> list[SkewTuple]:
    """Every (λ_1|…|λ_n) with λ_i a partition of μ_i."""
    return [
        SkewTuple(blocks)
        for blocks in itertools.product(*(partitions_of(m) for m in mu.parts))
    ]


def skew_tuples_of(d: int) -> list[SkewTuple]:
    """Every tuple of nonempty partitions of total weight ``d``."""
    return [t for c in compositions_of(d) for t in partition_tuples(c)]


def conjugate(partition: Partition) -> Partition:
    return partition.conjugate()


def row_group(shape: SkewTuple) -> YoungSubgroup:
    """Permutations preserving every row of the numbered boxes."""
    return YoungSubgroup(shape.weight, shape.box_rows())


def column_group(shape: SkewTuple) -> YoungSubgroup:
    """Permutations preserving every column of the numbered boxes.

    The shape is the blockwise conjugate of ``shape``; row and column groups
    of the same tuple meet trivially. The blocks are the actual columns, so
    for ``(2,1)`` numbered ``0 1 / 2`` they are ``{0, 2}, {1}`` and not the
    consecutive blocks ``{0, 1}, {2}`` of the conjugate composition.
    """
    return YoungSubgroup(shape.weight, shape.box_columns())


def _multiset_permutations(word: list[int]) -> Iterator[tuple[int, ...]]:
    word = sorted(word)
    n = len(word)
    while True:
        yield tuple(word)
        i = n - 2
        while i >= 0 and word[i] >= word[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while word[j] <= word[i]:
            j -= 1
        word[i], word[j] = word[j], word[i]
        word[i + 1 :] = reversed(word[i + 1 :])


def coset_words(gamma: Composition) -> list[tuple[int, ...]]:
    """Left cosets τ𝔖_γ as block label words ``w`` with ``w[τ(j)] = block(j)``."""
    labels = [idx for idx, part in enumerate(gamma.parts) for _ in range(part)]
    return list(_multiset_permutations(labels))


def _fixed_cosets_by_enumeration(g: Permutation, gamma: Composition) -> int:
    return sum(
        all(word[g(i)] == word[i] for i in range(g.degree))
        for word in coset_words(gamma)
    )


def _fixed_cosets_by_cycles(g: Permutation, gamma: Composition) -> int:
    lengths = tuple(len(c) for c in g.cycles())

    @functools.lru_cache(maxsize=None)
    def distribute(idx: int, remaining: tuple[int, ...]) -> int:
        if idx == len(lengths):
            return int(not any(remaining))
        total = 0
        for block, room in enumerate(remaining):
            if room >= lengths[idx]:
                total += distribute(
                    idx + 1,
                    remaining[:block] + (room - lengths[idx],) + remaining[block + 1 :],
                )
        return total

    return distribute(0, gamma.parts)


def fixed_cosets(
    g: Permutation,
    gamma: Composition,
    threshold: int = DEFAULT_ENUMERATION_THRESHOLD,
) -> int:
    """Number of cosets τ𝔖_γ fixed by left multiplication with ``g``."""
    if gamma.weight != g.degree:
        raise WeightMismatchError(
            f"Composition {gamma} does not have weight {g.degree}"
        )
    if g.degree <= threshold:
        return _fixed_cosets_by_enumeration(g, gamma)
    return _fixed_cosets_by_cycles(g, gamma)


def centralizer_order(g: Permutation) -> int:
    return z_order(g.cycle_type())


def z_order(cycle_type: tuple[int, ...]) -> int:
    """Π i^{a_i}·a_i! for a cycle type with a_i cycles of length i."""
    return math.prod(
        length**count * math.factorial(count)
        for length, count in collections.Counter(cycle_type).items()
    )


def conjugacy_classes(mu: Composition) -> list[tuple[Permutation, int]]:
    """Class representatives of 𝔖_μ with the size of each class."""
    classes = []
    for types in itertools.product(*(partitions_of(m) for m in mu.parts)):
        cycles = []
        size = 1
        for block, cycle_type, m in zip(mu.intervals(), types, mu.parts):
            start = 0
            for length in cycle_type.parts:
                cycles.append(block[start : start + length])
                start += length
            size *= math.factorial(m) // z_order(cycle_type.parts)
        classes.append((Permutation.from_cycles(mu.weight, cycles), size))
    return classes


def class_size(g: Permutation) -> int:
    """Size of the conjugacy class of ``g`` in 𝔖_d."""
    return math.factorial(g.degree) // centralizer_order(g)
