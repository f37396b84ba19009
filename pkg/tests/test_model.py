import itertools
import math

import pytest

from glpoly.exception import (
    InvalidPrimeError,
    OddShiftError,
    ScaleGuardError,
    WeightMismatchError,
)
import glpoly.model as m
from glpoly.series import PoincareSeries
from glpoly.types import Composition, Permutation

GAMMAS = [Composition(g) for g in [(2,), (1, 1), (3,), (2, 1), (1, 2), (1, 1, 1)]]


def test_dimension():
    assert m.ElementaryBimodule(2, Composition((2,))).dimension == 2
    assert m.ElementaryBimodule(2, Composition((1, 1))).dimension == 4
    assert m.ElementaryBimodule(3, Composition((2, 1))).dimension == 18


def test_invalid_module():
    with pytest.raises(WeightMismatchError):
        m.ElementaryBimodule(3, Composition((2,)))

    with pytest.raises(OddShiftError):
        m.ElementaryBimodule(2, Composition((2,)), 3)


@pytest.mark.parametrize("gamma", GAMMAS)
def test_basis_size(gamma):
    module = m.ElementaryBimodule(gamma.weight, gamma)
    assert module.basis().size == module.dimension
    for g in Permutation.all_of(gamma.weight):
        assert sorted(module.left_action(g)) == list(range(module.dimension))
        assert sorted(module.right_action(g)) == list(range(module.dimension))


@pytest.mark.parametrize("gamma", GAMMAS)
@pytest.mark.parametrize("swapped", [False, True])
def test_actions(gamma, swapped):
    module = m.ElementaryBimodule(gamma.weight, gamma, swapped=swapped)
    elements = list(Permutation.all_of(gamma.weight))
    for g, h in itertools.product(elements, repeat=2):
        left_g, left_h = module.left_action(g), module.left_action(h)
        right_g, right_h = module.right_action(g), module.right_action(h)
        left_gh, right_gh = module.left_action(g * h), module.right_action(g * h)
        for x in range(module.dimension):
            # left and right actions, commuting
            assert left_gh[x] == left_g[left_h[x]]
            assert right_gh[x] == right_h[right_g[x]]
            assert left_g[right_h[x]] == right_h[left_g[x]]


@pytest.mark.parametrize("gamma", GAMMAS)
def test_diagonal(gamma):
    module = m.ElementaryBimodule(gamma.weight, gamma)
    for g in Permutation.all_of(gamma.weight):
        left = module.left_action(g)
        right = module.right_action(g.inverse())
        diagonal = module.diagonal_action(g)
        assert all(diagonal[x] == right[left[x]] for x in range(module.dimension))


def test_left_action_on_basis():
    module = m.ElementaryBimodule(2, Composition((1, 1)))
    basis = module.basis()
    s = Permutation.transposition(2, 0, 1)
    assert basis.words == ((0, 1), (1, 0))
    assert module.left_action(s)[basis.index(0, 0)] == basis.index(1, 1)
    assert module.right_action(s)[basis.index(0, 0)] == basis.index(0, 1)
    assert basis.split(basis.index(1, 0)) == (1, 0)


def test_normalized_and_swapped():
    module = m.ElementaryBimodule(3, Composition((1, 2)), 4)
    assert module.normalized() == m.ElementaryBimodule(3, Composition((2, 1)))
    assert module.with_swapped_actions().swapped
    assert module.with_swapped_actions().with_swapped_actions() == module


def test_gamma_of_multiset():
    assert m.gamma_of_multiset((0, 0, 2)) == Composition((2, 1))
    assert m.gamma_of_multiset((0, 1, 1)) == Composition((1, 2))

    with pytest.raises(ValueError):
        m.gamma_of_multiset(())


def test_build_tensor_cohomology():
    tensor = m.build_tensor_cohomology(2, 2, 1)
    assert [s.multiset for s in tensor.summands] == [(0, 0), (0, 1), (1, 1)]
    assert [s.module.cohomological_degree for s in tensor.summands] == [0, 2, 4]
    assert m.total_series(tensor) == PoincareSeries((2, 0, 4, 0, 2))


def test_build_tensor_cohomology_invalid():
    with pytest.raises(InvalidPrimeError):
        m.build_tensor_cohomology(2, 4, 1)

    with pytest.raises(ValueError):
        m.build_tensor_cohomology(0, 2, 1)

    with pytest.raises(ScaleGuardError, match="summands"):
        m.build_tensor_cohomology(20, 7, 3)

    tensor = m.build_tensor_cohomology(3, 2, 1, max_summands=4)
    assert len(tensor.summands) == 4
    with pytest.raises(ScaleGuardError):
        m.build_tensor_cohomology(3, 2, 1, max_summands=3)


@pytest.mark.parametrize("d, p, r", [(1, 2, 1), (2, 3, 1), (3, 2, 1), (2, 2, 2)])
def test_total_dimension(d, p, r):
    series = m.total_series(m.build_tensor_cohomology(d, p, r))
    assert series.evaluate(1) == math.factorial(d) * p ** (r * d)
    assert series.odd_part_vanishes()


def test_graded_shape_counts():
    two, pair = Composition((2,)), Composition((1, 1))
    assert m.graded_shape_counts(2, 3, 1) == (
        (two, 0, 1),
        (pair, 2, 1),
        (pair, 4, 1),
        (two, 4, 1),
        (pair, 6, 1),
        (two, 8, 1),
    )
