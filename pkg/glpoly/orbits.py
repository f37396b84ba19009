"""Coinvariants of the diagonal action, counted as orbits."""

from __future__ import annotations

import dataclasses
import functools
import logging

from glpoly.combinatorics import centralizer_order, conjugacy_classes, fixed_cosets
from glpoly.config import DEFAULT_ENUMERATION_THRESHOLD, DEFAULT_MAX_NAIVE_DEGREE
from glpoly.exception import ScaleGuardError, WeightMismatchError
from glpoly.model import ElementaryBimodule, graded_shape_counts
from glpoly.series import PoincareSeries
from glpoly.types import Composition, YoungSubgroup

LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class DiagonalAction:
    """𝔖_μ acting on an elementary bimodule by g·([τ], σ) = ([gτ], gσg⁻¹)."""

    module: ElementaryBimodule
    subgroup: YoungSubgroup

    def generator_maps(self) -> list[list[int]]:
        return [self.module.diagonal_action(g) for g in self.subgroup.generators()]

    def orbits(self) -> list[int]:
        """Orbit label of every basis element."""
        size = self.module.basis().size
        maps = self.generator_maps()
        labels = [-1] * size
        count = 0
        for start in range(size):
            if labels[start] != -1:
                continue
            labels[start] = count
            stack = [start]
            while stack:
                x = stack.pop()
                for action in maps:
                    y = action[x]
                    if labels[y] == -1:
                        labels[y] = count
                        stack.append(y)
            count += 1
        return labels


def _check_weights(gamma: Composition, mu: Composition) -> None:
    if gamma.weight != mu.weight:
        raise WeightMismatchError(
            f"gamma {gamma} and mu {mu} have different weights"
        )


@functools.lru_cache(maxsize=4096)
def _burnside(gamma: Composition, mu: Composition, threshold: int) -> int:
    total = 0
    for g, size in conjugacy_classes(mu):
        total += size * fixed_cosets(g, gamma, threshold) * centralizer_order(g)
    orbits, remainder = divmod(total, mu.stabilizer_order())
    assert remainder == 0, f"Burnside sum {total} not divisible for {gamma}, {mu}"
    LOGGER.debug("orbit_count(%s, %s) = %d", gamma, mu, orbits)
    return orbits


def orbit_count(
    gamma: Composition,
    mu: Composition,
    threshold: int = DEFAULT_ENUMERATION_THRESHOLD,
) -> int:
    """Number of 𝔖_μ-orbits on the basis of k𝔖_d/𝔖_γ ⊗ k𝔖_d under Δ*.

    (1/|𝔖_μ|)·Σ_g fixed_cosets(g, γ)·|C(g)|, summed over the classes of 𝔖_μ.
    """
    _check_weights(gamma, mu)
    return _burnside(Composition(gamma.sorted().parts), Composition(mu.parts), threshold)


def naive_orbit_count(
    gamma: Composition,
    mu: Composition,
    max_degree: int = DEFAULT_MAX_NAIVE_DEGREE,
) -> int:
    """Orbit count by walking the whole basis."""
    _check_weights(gamma, mu)
    if gamma.weight > max_degree:
        raise ScaleGuardError(
            f"Enumerating orbits in degree {gamma.weight} exceeds the limit {max_degree}"
        )
    action = DiagonalAction(
        ElementaryBimodule(gamma.weight, Composition(gamma.parts)),
        YoungSubgroup.from_composition(mu),
    )
    labels = action.orbits()
    return max(labels) + 1 if labels else 0


def orbit_series(
    mu: Composition,
    p: int,
    r: int,
    threshold: int = DEFAULT_ENUMERATION_THRESHOLD,
) -> PoincareSeries:
    """Σ_m orbit_count(γ(m), μ)·t^{2|m|} over the summands of the tensor model."""
    shapes = graded_shape_counts(mu.weight, p, r)
    terms = [
        (degree, multiplicity * orbit_count(gamma, mu, threshold))
        for gamma, degree, multiplicity in shapes
    ]
    LOGGER.debug("orbit_series(%s, p=%d, r=%d) from %d shapes", mu, p, r, len(terms))
    return PoincareSeries.from_terms(terms)
