"""Integer polynomials in t recording graded dimensions."""

from __future__ import annotations

import dataclasses
from typing import Iterable, Iterator

from glpoly.exception import InvalidPrimeError, OddShiftError
from glpoly.types import is_prime


@dataclasses.dataclass(frozen=True)
class PoincareSeries:
    """Σ coefficients[i]·t^i with trailing zeros removed.

    Coefficients may be negative for intermediate terms; cohomology results
    are checked with :meth:`is_nonnegative`.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coefficients = [int(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def zero(cls) -> PoincareSeries:
        return cls(())

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> PoincareSeries:
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> PoincareSeries:
        """Sum of ``coefficient·t^degree`` over ``(degree, coefficient)`` terms."""
        coefficients: dict[int, int] = {}
        for degree, coefficient in terms:
            if degree < 0:
                raise ValueError(f"Negative degree {degree}")
            coefficients[degree] = coefficients.get(degree, 0) + coefficient
        if not coefficients:
            return cls.zero()
        return cls(
            tuple(coefficients.get(i, 0) for i in range(max(coefficients) + 1))
        )

    from_pairs = from_terms

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def add(self, other: PoincareSeries) -> PoincareSeries:
        n = max(len(self.coefficients), len(other.coefficients))
        return PoincareSeries(tuple(self[i] + other[i] for i in range(n)))

    __add__ = add

    def __neg__(self) -> PoincareSeries:
        return PoincareSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: PoincareSeries) -> PoincareSeries:
        return self + (-other)

    def __mul__(self, other: PoincareSeries) -> PoincareSeries:
        if not self or not other:
            return PoincareSeries.zero()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return PoincareSeries(tuple(product))

    def scale(self, factor: int) -> PoincareSeries:
        return PoincareSeries(tuple(factor * c for c in self.coefficients))

    def shift(self, k: int) -> PoincareSeries:
        """Multiply by t^k; cohomological shifts are always even."""
        if k < 0 or k % 2:
            raise OddShiftError(f"Shift must be a nonnegative even integer, got {k}")
        if not self:
            return self
        return PoincareSeries((0,) * k + self.coefficients)

    def evaluate(self, t: int) -> int:
        result = 0
        for coefficient in reversed(self.coefficients):
            result = result * t + coefficient
        return result

    def euler_characteristic(self) -> int:
        return self.evaluate(-1)

    def top_degree(self) -> int | None:
        if not self:
            return None
        return len(self.coefficients) - 1

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def odd_part_vanishes(self) -> bool:
        return not any(self.coefficients[1::2])

    def dominated_by(self, other: PoincareSeries) -> bool:
        """Coefficientwise ≤."""
        n = max(len(self.coefficients), len(other.coefficients))
        return all(self[i] <= other[i] for i in range(n))

    def to_pairs(self) -> list[list[int]]:
        """Sparse ``[degree, coefficient]`` pairs, degrees increasing."""
        return [[i, c] for i, c in enumerate(self.coefficients) if c]

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        for degree, coefficient in self.to_pairs():
            if degree == 0:
                terms.append(str(coefficient))
                continue
            power = "t" if degree == 1 else f"t^{degree}"
            if coefficient == 1:
                terms.append(power)
            elif coefficient == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{coefficient}{power}")
        return " + ".join(terms).replace("+ -", "- ")


def add(a: PoincareSeries, b: PoincareSeries) -> PoincareSeries:
    return a.add(b)


def shift(a: PoincareSeries, k: int) -> PoincareSeries:
    return a.shift(k)


def euler_characteristic(a: PoincareSeries) -> int:
    return a.euler_characteristic()


def top_degree(a: PoincareSeries) -> int | None:
    return a.top_degree()


def check_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidPrimeError(f"{p} is not a prime")


def e_r_series(p: int, r: int) -> PoincareSeries:
    """One dimension in each even degree 0, 2, …, 2p^r − 2."""
    check_prime(p)
    if r < 0:
        raise ValueError(f"Negative twist {r}")
    return PoincareSeries.from_terms((2 * i, 1) for i in range(p**r))
