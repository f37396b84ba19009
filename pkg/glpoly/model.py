"""Graded bimodule model of the cohomology of the d-th tensor power of gl, twisted r times.

The cohomology is ⊕_σ E_r^{⊗d} with E_r one dimensional in the even degrees
0..2p^r−2. A basis tensor is a degree function f: {1..d} → {0..p^r−1};
grouping the basis by the multiset of values of f gives one elementary
bimodule k𝔖_d/𝔖_γ ⊗ k𝔖_d per multiset, γ the multiplicities of its values.
"""

from __future__ import annotations

import collections
import dataclasses
import functools
import itertools
import logging
import math

from glpoly.combinatorics import coset_words
from glpoly.config import DEFAULT_MAX_SUMMANDS
from glpoly.exception import OddShiftError, ScaleGuardError, WeightMismatchError
from glpoly.series import PoincareSeries, check_prime
from glpoly.types import Composition, Permutation

LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class BimoduleBasis:
    """Index tables for the basis ([τ], σ) ↦ coset·d! + perm."""

    d: int
    words: tuple[tuple[int, ...], ...]
    perms: tuple[tuple[int, ...], ...]
    word_index: dict
    perm_index: dict

    @property
    def size(self) -> int:
        return len(self.words) * len(self.perms)

    def index(self, coset: int, perm: int) -> int:
        return coset * len(self.perms) + perm

    def split(self, idx: int) -> tuple[int, int]:
        return divmod(idx, len(self.perms))

    def _word_map(self, g: tuple[int, ...]) -> list[int]:
        result = []
        for word in self.words:
            moved = [0] * self.d
            for i, label in enumerate(word):
                moved[g[i]] = label
            result.append(self.word_index[tuple(moved)])
        return result

    def _perm_map(self, left: tuple[int, ...], right: tuple[int, ...]) -> list[int]:
        # σ ↦ left·σ·right
        return [
            self.perm_index[tuple(left[s[right[i]]] for i in range(self.d))]
            for s in self.perms
        ]

    def _combine(self, word_map: list[int], perm_map: list[int]) -> list[int]:
        n = len(self.perms)
        return [c * n + s for c in word_map for s in perm_map]

    def left(self, g: Permutation) -> list[int]:
        """λ·(e_[τ] ⊗ e_σ) = e_[λτ] ⊗ e_{λσ}."""
        identity = tuple(range(self.d))
        return self._combine(
            self._word_map(g.images), self._perm_map(g.images, identity)
        )

    def right(self, h: Permutation) -> list[int]:
        """(e_[τ] ⊗ e_σ)·μ = e_[τ] ⊗ e_{σμ}."""
        identity = tuple(range(self.d))
        return self._combine(
            list(range(len(self.words))), self._perm_map(identity, h.images)
        )

    def diagonal(self, g: Permutation) -> list[int]:
        """g·x·g⁻¹, the restriction along σ ↦ (σ, σ⁻¹)."""
        return self._combine(
            self._word_map(g.images),
            self._perm_map(g.images, g.inverse().images),
        )


@functools.lru_cache(maxsize=32)
def bimodule_basis(gamma: Composition) -> BimoduleBasis:
    d = gamma.weight
    words = tuple(coset_words(gamma))
    perms = tuple(itertools.permutations(range(d)))
    LOGGER.debug("Built basis for gamma=%s: %d elements", gamma, len(words) * len(perms))
    return BimoduleBasis(
        d=d,
        words=words,
        perms=perms,
        word_index={w: i for i, w in enumerate(words)},
        perm_index={s: i for i, s in enumerate(perms)},
    )


@dataclasses.dataclass(frozen=True)
class ElementaryBimodule:
    """k𝔖_d/𝔖_γ ⊗ k𝔖_d concentrated in one even cohomological degree.

    With ``swapped`` set, the left action is x ↦ x·g⁻¹ and the right action is
    x ↦ g⁻¹·x of the unswapped module.
    """

    d: int
    gamma: Composition
    cohomological_degree: int = 0
    swapped: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.gamma, Composition):
            object.__setattr__(self, "gamma", Composition(tuple(self.gamma)))
        if self.gamma.weight != self.d:
            raise WeightMismatchError(
                f"gamma {self.gamma} does not have weight {self.d}"
            )
        if self.cohomological_degree < 0 or self.cohomological_degree % 2:
            raise OddShiftError(f"Degree {self.cohomological_degree} is not even")

    @property
    def dimension(self) -> int:
        return (
            math.factorial(self.d) // self.gamma.stabilizer_order()
        ) * math.factorial(self.d)

    def basis(self) -> BimoduleBasis:
        return bimodule_basis(self.gamma)

    def left_action(self, g: Permutation) -> list[int]:
        if self.swapped:
            return self.basis().right(g.inverse())
        return self.basis().left(g)

    def right_action(self, h: Permutation) -> list[int]:
        if self.swapped:
            return self.basis().left(h.inverse())
        return self.basis().right(h)

    def diagonal_action(self, g: Permutation) -> list[int]:
        return self.basis().diagonal(g)

    def normalized(self) -> ElementaryBimodule:
        """Isomorphic module with γ sorted into a partition, in degree 0."""
        return ElementaryBimodule(
            self.d, Composition(self.gamma.sorted().parts), 0, self.swapped
        )

    def with_swapped_actions(self) -> ElementaryBimodule:
        return dataclasses.replace(self, swapped=not self.swapped)


@dataclasses.dataclass(frozen=True)
class Summand:
    multiset: tuple[int, ...]
    module: ElementaryBimodule


@dataclasses.dataclass(frozen=True)
class TensorGlCohomology:
    d: int
    p: int
    r: int
    summands: tuple[Summand, ...]

    def graded_shapes(self) -> collections.Counter:
        """Multiplicity of each (sorted γ, degree) among the summands."""
        return collections.Counter(
            (s.module.normalized().gamma, s.module.cohomological_degree)
            for s in self.summands
        )


def gamma_of_multiset(multiset) -> Composition:
    """Multiplicities of the distinct values, in increasing value order."""
    counts = collections.Counter(multiset)
    if not counts:
        raise ValueError("Empty multiset")
    return Composition(tuple(counts[v] for v in sorted(counts)))


def multisets(d: int, p: int, r: int):
    return itertools.combinations_with_replacement(range(p**r), d)


def build_tensor_cohomology(
    d: int, p: int, r: int, max_summands: int = DEFAULT_MAX_SUMMANDS
) -> TensorGlCohomology:
    check_prime(p)
    if d < 1:
        raise ValueError(f"Degree must be positive, got {d}")
    if r < 0:
        raise ValueError(f"Negative twist {r}")
    count = math.comb(p**r + d - 1, d)
    if count > max_summands:
        raise ScaleGuardError(
            f"The tensor model for d={d} p={p} r={r} has {count} summands, "
            f"over the limit {max_summands}"
        )
    summands = tuple(
        Summand(m, ElementaryBimodule(d, gamma_of_multiset(m), 2 * sum(m)))
        for m in multisets(d, p, r)
    )
    LOGGER.debug("Tensor cohomology d=%d p=%d r=%d: %d summands", d, p, r, len(summands))
    return TensorGlCohomology(d, p, r, summands)


def total_series(tensor: TensorGlCohomology) -> PoincareSeries:
    return PoincareSeries.from_terms(
        (s.module.cohomological_degree, s.module.dimension) for s in tensor.summands
    )


@functools.lru_cache(maxsize=64)
def graded_shape_counts(
    d: int, p: int, r: int
) -> tuple[tuple[Composition, int, int], ...]:
    """(sorted γ, degree, multiplicity) over the summands, by degree then γ."""
    counts = build_tensor_cohomology(d, p, r).graded_shapes()
    return tuple(
        (gamma, degree, multiplicity)
        for (gamma, degree), multiplicity in sorted(
            counts.items(), key=lambda item: (item[0][1], item[0][0].parts)
        )
    )
