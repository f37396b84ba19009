import itertools
import math

import pytest

import glpoly.combinatorics as comb
from glpoly.exception import WeightMismatchError
from glpoly.types import Composition, Partition, Permutation, SkewTuple


def test_partitions_of():
    assert comb.partitions_of(4) == [
        Partition(p) for p in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    ]
    assert comb.partitions_of(0) == [Partition(())]
    assert [len(comb.partitions_of(n)) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


def test_partitions_of_negative():
    with pytest.raises(ValueError):
        comb.partitions_of(-1)


def test_compositions_of():
    assert comb.compositions_of(3) == [
        Composition(c) for c in [(3,), (1, 2), (2, 1), (1, 1, 1)]
    ]
    assert [len(comb.compositions_of(n)) for n in range(1, 7)] == [1, 2, 4, 8, 16, 32]


def test_partition_tuples():
    assert comb.partition_tuples(Composition((2, 1))) == [
        SkewTuple.parse("2|1"),
        SkewTuple.parse("1,1|1"),
    ]


def test_skew_tuples_of():
    assert comb.skew_tuples_of(2) == [
        SkewTuple.parse("2"),
        SkewTuple.parse("1,1"),
        SkewTuple.parse("1|1"),
    ]
    assert len(comb.skew_tuples_of(4)) == 22


def test_row_and_column_group():
    shape = SkewTuple.parse("2,1")
    assert comb.row_group(shape).blocks == ((0, 1), (2,))
    assert comb.column_group(shape).blocks == ((0, 2), (1,))


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_row_column_trivial_intersection(d):
    for shape in comb.skew_tuples_of(d):
        rows = comb.row_group(shape)
        columns = comb.column_group(shape)
        assert rows.intersection_order(columns) == 1
        assert sorted(columns.shape.parts) == sorted(
            part for block in shape.conjugate().blocks for part in block.parts
        )


def test_coset_words():
    assert comb.coset_words(Composition((2, 1))) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert len(comb.coset_words(Composition((1, 1, 1)))) == 6


def test_fixed_cosets():
    gamma = Composition((2, 1))
    assert comb.fixed_cosets(Permutation.identity(3), gamma) == 3
    assert comb.fixed_cosets(Permutation.transposition(3, 0, 1), gamma) == 1
    assert comb.fixed_cosets(Permutation.from_cycles(3, [(0, 1, 2)]), gamma) == 0


@pytest.mark.parametrize("d", [2, 3, 4])
def test_fixed_cosets_methods_agree(d):
    for g, gamma in itertools.product(Permutation.all_of(d), comb.compositions_of(d)):
        by_words = comb.fixed_cosets(g, gamma, threshold=10)
        by_cycles = comb.fixed_cosets(g, gamma, threshold=0)
        assert by_words == by_cycles


@pytest.mark.parametrize("d", [5, 6])
def test_fixed_cosets_methods_agree_on_classes(d):
    # fixed points only depend on the cycle type
    classes = comb.conjugacy_classes(Composition((d,)))
    for (g, _), gamma in itertools.product(classes, comb.compositions_of(d)):
        by_words = comb.fixed_cosets(g, gamma, threshold=10)
        by_cycles = comb.fixed_cosets(g, gamma, threshold=0)
        assert by_words == by_cycles, (g, gamma)


def test_fixed_cosets_weight_mismatch():
    with pytest.raises(WeightMismatchError):
        comb.fixed_cosets(Permutation.identity(3), Composition((2,)))


def test_centralizer_order():
    assert comb.centralizer_order(Permutation.identity(3)) == 6
    assert comb.centralizer_order(Permutation.from_cycles(3, [(0, 1, 2)])) == 3
    assert comb.centralizer_order(Permutation.transposition(4, 0, 1)) == 4
    assert comb.class_size(Permutation.transposition(4, 0, 1)) == 6
    assert comb.z_order((2, 2)) == 8


@pytest.mark.parametrize(
    "parts, classes",
    [((3,), 3), ((2, 2), 4), ((2, 1), 2), ((1, 1, 1), 1), ((4,), 5)],
)
def test_conjugacy_classes(parts, classes):
    mu = Composition(parts)
    result = comb.conjugacy_classes(mu)
    assert len(result) == classes
    assert sum(size for _, size in result) == mu.stabilizer_order()
    group_elements = [
        g for g in Permutation.all_of(mu.weight) if all(
            set(g(i) for i in block) == set(block) for block in mu.intervals()
        )
    ]
    for rep, _ in result:
        assert rep in group_elements


@pytest.mark.parametrize("d", range(1, 7))
def test_class_sizes_fill_the_group(d):
    order = math.factorial(d)
    classes = comb.conjugacy_classes(Composition((d,)))
    assert len(classes) == len(comb.partitions_of(d))
    for g, size in classes:
        assert comb.centralizer_order(g) * comb.class_size(g) == order
        assert size == comb.class_size(g)
    assert sum(size for _, size in classes) == order


@pytest.mark.parametrize("d", range(1, 11))
def test_conjugate_is_an_involution(d):
    shapes = list(comb.partitions_of(d))
    conjugates = [comb.conjugate(shape) for shape in shapes]
    assert sorted(c.parts for c in conjugates) == sorted(s.parts for s in shapes)
    for shape, conjugate in zip(shapes, conjugates):
        assert conjugate.weight == d
        assert comb.conjugate(conjugate) == shape
