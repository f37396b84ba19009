"""Closed formulas around the divided power Γ^{p(r)}gl."""

from __future__ import annotations

import dataclasses
import logging

from glpoly.config import DEFAULT_ENUMERATION_THRESHOLD
from glpoly.exception import NegativeCoefficientError
from glpoly.orbits import orbit_series
from glpoly.series import PoincareSeries, check_prime
from glpoly.types import Composition

LOGGER = logging.getLogger(__name__)


def _check_twist(r: int) -> None:
    if r < 1:
        raise ValueError(f"Twist must be positive, got {r}")


@dataclasses.dataclass(frozen=True)
class GammaCorrection:
    """(t^{2p−2} − 1)·Σ_{i<p^r} t^{2pi}, the difference between Γ^{p(r)} and S^{p(r)}."""

    p: int
    r: int

    def __post_init__(self) -> None:
        check_prime(self.p)
        _check_twist(self.r)

    @property
    def polynomial(self) -> PoincareSeries:
        geometric = PoincareSeries.from_terms(
            (2 * self.p * i, 1) for i in range(self.p**self.r)
        )
        factor = PoincareSeries.from_terms([(2 * self.p - 2, 1), (0, -1)])
        return factor * geometric


def gamma_p_series(
    p: int, r: int, threshold: int = DEFAULT_ENUMERATION_THRESHOLD
) -> PoincareSeries:
    """Poincaré series of H*_P(GL, Γ^{p(r)}gl)."""
    correction = GammaCorrection(p, r)
    series = orbit_series(Composition((p,)), p, r, threshold) + correction.polynomial
    if not series.is_nonnegative():
        raise NegativeCoefficientError(
            f"Negative coefficient in the Gamma series for p={p}, r={r}: {series}"
        )
    return series


def gamma_top_degree(k: int, p: int, r: int) -> int:
    """Top cohomological degree for Γ^{p^k(r)}gl: p^k(2p^r − 2) + 2p^k − 2."""
    check_prime(p)
    _check_twist(r)
    if k < 0:
        raise ValueError(f"Exponent must be nonnegative, got {k}")
    return p**k * (2 * p**r - 2) + 2 * p**k - 2


@dataclasses.dataclass(frozen=True)
class DualityReport:
    p: int
    r: int
    symmetric: int
    divided: int

    @property
    def agree(self) -> bool:
        return self.symmetric == self.divided

    def __bool__(self) -> bool:
        return self.agree


def euler_duality_check(
    p: int, r: int, threshold: int = DEFAULT_ENUMERATION_THRESHOLD
) -> DualityReport:
    """Compare the Euler characteristics of S^{p(r)}gl and Γ^{p(r)}gl."""
    report = DualityReport(
        p,
        r,
        orbit_series(Composition((p,)), p, r, threshold).euler_characteristic(),
        gamma_p_series(p, r, threshold).euler_characteristic(),
    )
    LOGGER.debug("Euler characteristics for p=%d r=%d: %s", p, r, report)
    return report
