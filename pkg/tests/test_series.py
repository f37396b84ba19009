import pytest

from glpoly.exception import InvalidPrimeError, OddShiftError
import glpoly.series as s
from glpoly.series import PoincareSeries


def test_trailing_zeros():
    assert PoincareSeries((1, 0, 0)) == PoincareSeries((1,))
    assert PoincareSeries((0, 0)) == PoincareSeries.zero()
    assert not PoincareSeries.zero()


def test_from_terms():
    series = PoincareSeries.from_terms([(4, 1), (0, 2), (4, 1)])
    assert series == PoincareSeries((2, 0, 0, 0, 2))
    assert series[4] == 2
    assert series[7] == 0
    assert PoincareSeries.from_terms([]) == PoincareSeries.zero()

    with pytest.raises(ValueError):
        PoincareSeries.from_terms([(-2, 1)])


def test_add():
    a = PoincareSeries((1, 0, 2))
    b = PoincareSeries((0, 0, 1, 0, 5))
    c = PoincareSeries((3,))
    assert s.add(a, b) == s.add(b, a) == PoincareSeries((1, 0, 3, 0, 5))
    assert s.add(s.add(a, b), c) == s.add(a, s.add(b, c))
    assert a - a == PoincareSeries.zero()


def test_shift():
    a = PoincareSeries((1, 0, 2))
    assert s.shift(a, 2) == PoincareSeries((0, 0, 1, 0, 2))
    assert s.shift(s.shift(a, 2), 4) == s.shift(a, 6)
    assert s.shift(PoincareSeries.zero(), 4) == PoincareSeries.zero()


@pytest.mark.parametrize("k", [1, 3, -2])
def test_shift_rejects(k):
    with pytest.raises(OddShiftError):
        PoincareSeries((1,)).shift(k)


def test_multiply():
    correction = PoincareSeries((-1, 0, 1))
    assert correction * PoincareSeries((1, 0, 0, 0, 1)) == PoincareSeries(
        (-1, 0, 1, 0, -1, 0, 1)
    )
    assert correction * PoincareSeries.zero() == PoincareSeries.zero()


def test_euler_and_top_degree():
    series = PoincareSeries((1, 0, 3, 0, 1, 0, 1))
    assert s.euler_characteristic(series) == 6
    assert s.top_degree(series) == 6
    assert s.top_degree(PoincareSeries.zero()) is None
    assert series.evaluate(1) == 6
    assert series.odd_part_vanishes()
    assert not PoincareSeries((0, 1)).odd_part_vanishes()


def test_nonnegative_and_dominated():
    assert PoincareSeries((1, 0, 2)).is_nonnegative()
    assert not PoincareSeries((1, 0, -2)).is_nonnegative()
    assert PoincareSeries((1, 0, 2)).dominated_by(PoincareSeries((1, 0, 2, 0, 1)))
    assert not PoincareSeries((2,)).dominated_by(PoincareSeries((1, 0, 2)))


def test_pairs_and_str():
    series = PoincareSeries((1, 0, 3, 0, 1, 0, 1))
    assert series.to_pairs() == [[0, 1], [2, 3], [4, 1], [6, 1]]
    assert PoincareSeries.from_pairs(series.to_pairs()) == series
    assert str(series) == "1 + 3t^2 + t^4 + t^6"
    assert str(PoincareSeries((1, 0, -1))) == "1 - t^2"
    assert str(PoincareSeries.from_terms([(2, 1), (0, -1)])) == "-1 + t^2"
    assert str(PoincareSeries.zero()) == "0"


@pytest.mark.parametrize(
    "p, r, coefficients",
    [
        (2, 0, (1,)),
        (2, 1, (1, 0, 1)),
        (3, 1, (1, 0, 1, 0, 1)),
        (2, 2, (1, 0, 1, 0, 1, 0, 1)),
    ],
)
def test_e_r_series(p, r, coefficients):
    series = s.e_r_series(p, r)
    assert series == PoincareSeries(coefficients)
    assert series.evaluate(1) == p**r
    assert series.top_degree() == 2 * p**r - 2


def test_e_r_series_invalid():
    with pytest.raises(InvalidPrimeError):
        s.e_r_series(4, 1)

    with pytest.raises(ValueError):
        s.e_r_series(2, -1)
