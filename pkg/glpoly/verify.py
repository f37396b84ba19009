"""Cross checks between the orbit and sandwich computations on a bounded grid."""

from __future__ import annotations

import dataclasses
import itertools
import logging
import math
from typing import Callable, Iterator

import numpy as np

from glpoly.combinatorics import compositions_of, partitions_of, skew_tuples_of
import glpoly.config as conf
from glpoly.exception import ScaleGuardError, VerificationError
from glpoly.formulas import (
    GammaCorrection,
    euler_duality_check,
    gamma_p_series,
    gamma_top_degree,
)
from glpoly.linalg import FieldSpec
from glpoly.model import ElementaryBimodule, build_tensor_cohomology, total_series
from glpoly.orbits import naive_orbit_count, orbit_count, orbit_series
from glpoly.sandwich import (
    SandwichQuery,
    coinvariants_commute,
    invariants_commute,
    iterated_sandwich_dim,
    sandwich_dim,
    sandwich_dim_for_groups,
    sandwich_rank,
    sandwich_series,
)
from glpoly.series import e_r_series
from glpoly.types import Composition, Convention, Permutation, SkewTuple

LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass
class CheckResult:
    name: str
    passed: bool = True
    cases: int = 0
    counterexample: str | None = None
    note: str | None = None

    def record(self, ok: bool, description: Callable[[], str] | str) -> bool:
        self.cases += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = description() if callable(description) else description
            LOGGER.warning("%s failed: %s", self.name, self.counterexample)
        return ok

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass
class VerificationReport:
    checks: list[CheckResult]
    grid: dict

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def raise_for_failures(self) -> None:
        failures = self.failures()
        if failures:
            raise VerificationError(
                "; ".join(f"{c.name}: {c.counterexample}" for c in failures)
            )

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "grid": {k: list(v) if isinstance(v, tuple) else v for k, v in self.grid.items()},
            "checks": [c.as_dict() for c in self.checks],
        }


@dataclasses.dataclass(frozen=True)
class Context:
    grid: dict
    config: dict

    @property
    def primes(self) -> tuple[int, ...]:
        return self.grid[conf.CONF_PRIMES]

    @property
    def twists(self) -> range:
        return range(1, max(1, self.grid[conf.CONF_RMAX]) + 1)

    @property
    def degrees(self) -> range:
        return range(1, self.grid[conf.CONF_DMAX] + 1)

    @property
    def convention(self) -> Convention:
        return self.config[conf.CONF_CONVENTION]

    @property
    def sandwich_limit(self) -> int:
        return self.config[conf.CONF_MAX_SANDWICH_DEGREE]

    @property
    def threshold(self) -> int:
        return self.config[conf.CONF_ENUMERATION_THRESHOLD]

    def queries(self) -> Iterator[tuple[ElementaryBimodule, SkewTuple, SkewTuple]]:
        """Every elementary bimodule and pair of tuples up to the grid degree."""
        for d in self.degrees:
            tuples = skew_tuples_of(d)
            for gamma in partitions_of(d):
                module = ElementaryBimodule(d, Composition(gamma.parts))
                for left, right in itertools.product(tuples, repeat=2):
                    yield module, left, right


CHECKS: dict[str, Callable[[Context, CheckResult], None]] = {}


def check(name: str):
    def register(func):
        CHECKS[name] = func
        return func

    return register


@check("d1_identity")
def _d1_identity(ctx: Context, result: CheckResult) -> None:
    one = Composition((1,))
    for p in ctx.primes:
        for r in range(ctx.grid[conf.CONF_RMAX] + 1):
            expected = e_r_series(p, r)
            got = orbit_series(one, p, r, ctx.threshold)
            result.record(got == expected, lambda: f"p={p} r={r}: {got} != {expected}")
            got = sandwich_series(one, p, r, ctx.convention, ctx.sandwich_limit)
            result.record(
                got == expected, lambda: f"sandwich p={p} r={r}: {got} != {expected}"
            )


@check("odd_vanishing")
def _odd_vanishing(ctx: Context, result: CheckResult) -> None:
    for p, r in itertools.product(ctx.primes, ctx.twists):
        for d in ctx.degrees:
            for mu in partitions_of(d):
                series = orbit_series(mu, p, r, ctx.threshold)
                result.record(
                    series.odd_part_vanishes(), lambda: f"mu={mu} p={p} r={r}: {series}"
                )
        series = gamma_p_series(p, r, ctx.threshold)
        result.record(series.odd_part_vanishes(), lambda: f"gamma p={p} r={r}: {series}")


def _path_equivalence(ctx: Context, result: CheckResult, convention: Convention) -> None:
    for d in ctx.degrees:
        for mu in partitions_of(d):
            for p, r in itertools.product(ctx.primes, ctx.twists):
                orbits = orbit_series(mu, p, r, ctx.threshold)
                sandwich = sandwich_series(mu, p, r, convention, ctx.sandwich_limit)
                result.record(
                    orbits == sandwich,
                    lambda: f"mu={mu} p={p} r={r}: orbit {orbits} != sandwich {sandwich}",
                )


@check("path_equivalence")
def _path_equivalence_check(ctx: Context, result: CheckResult) -> None:
    _path_equivalence(ctx, result, ctx.convention)


@check("gamma_top_degree")
def _gamma_top_degree(ctx: Context, result: CheckResult) -> None:
    for p, r in itertools.product(ctx.primes, ctx.twists):
        top = gamma_p_series(p, r, ctx.threshold).top_degree()
        expected = gamma_top_degree(1, p, r)
        result.record(top == expected, lambda: f"p={p} r={r}: top {top} != {expected}")
        correction = GammaCorrection(p, r).polynomial
        result.record(
            correction.euler_characteristic() == 0,
            lambda: f"p={p} r={r}: correction {correction} does not vanish at -1",
        )


@check("euler_duality")
def _euler_duality(ctx: Context, result: CheckResult) -> None:
    for p, r in itertools.product(ctx.primes, ctx.twists):
        report = euler_duality_check(p, r, ctx.threshold)
        result.record(
            report.agree, lambda: f"p={p} r={r}: {report.symmetric} != {report.divided}"
        )


@check("burnside_vs_naive")
def _burnside_vs_naive(ctx: Context, result: CheckResult) -> None:
    naive_limit = ctx.config[conf.CONF_MAX_NAIVE_DEGREE]
    dmax = min(ctx.grid[conf.CONF_NAIVE_DMAX], naive_limit)
    for d in range(1, dmax + 1):
        compositions = compositions_of(d)
        for gamma, mu in itertools.product(compositions, repeat=2):
            slow = naive_orbit_count(gamma, mu, naive_limit)
            # threshold 0 forces the cycle formula for every fixed point count
            for threshold in sorted({ctx.threshold, 0}):
                fast = orbit_count(gamma, mu, threshold)
                result.record(
                    fast == slow,
                    lambda: f"gamma={gamma} mu={mu} threshold={threshold}: "
                    f"{fast} != {slow}",
                )

    d = dmax + 1
    if d > naive_limit or not ctx.grid[conf.CONF_SAMPLES]:
        return
    rng = np.random.default_rng(ctx.grid[conf.CONF_SEED])
    compositions = compositions_of(d)
    for _ in range(ctx.grid[conf.CONF_SAMPLES]):
        gamma, mu = (compositions[i] for i in rng.integers(len(compositions), size=2))
        fast = orbit_count(gamma, mu, ctx.threshold)
        slow = naive_orbit_count(gamma, mu, naive_limit)
        result.record(fast == slow, lambda: f"gamma={gamma} mu={mu}: {fast} != {slow}")


@check("characteristic_independence")
def _characteristic_independence(ctx: Context, result: CheckResult) -> None:
    primes = ctx.grid[conf.CONF_INDEPENDENCE_PRIMES]
    for module, left, right in ctx.queries():
        dims = [
            sandwich_dim(
                SandwichQuery(module, left, right, FieldSpec(p)),
                ctx.convention,
                ctx.sandwich_limit,
            )
            for p in primes
        ]
        result.record(
            len(set(dims)) == 1,
            lambda: f"gamma={module.gamma} {left} {right}: {dict(zip(primes, dims))}",
        )


@check("base_change")
def _base_change(ctx: Context, result: CheckResult) -> None:
    for module, left, right in ctx.queries():
        rational = sandwich_rank(
            SandwichQuery(module, left, right, FieldSpec.rational()),
            ctx.convention,
            ctx.sandwich_limit,
        )
        for p in ctx.primes:
            modular = sandwich_dim(
                SandwichQuery(module, left, right, FieldSpec(p)),
                ctx.convention,
                ctx.sandwich_limit,
            )
            ok = modular <= rational and (p <= module.d or modular == rational)
            result.record(
                ok,
                lambda: f"gamma={module.gamma} {left} {right} p={p}: "
                f"{modular} vs rational {rational}",
            )


@check("one_sided_isomorphisms")
def _one_sided_isomorphisms(ctx: Context, result: CheckResult) -> None:
    for p in ctx.primes:
        for module, left, right in ctx.queries():
            query = SandwichQuery(module, left, right, FieldSpec(p))
            quotient = coinvariants_commute(query, ctx.convention, ctx.sandwich_limit)
            result.record(
                quotient[0] == quotient[1],
                lambda: f"coinvariants gamma={module.gamma} {left} {right} p={p}: "
                f"{quotient}",
            )
            invariant = invariants_commute(query, ctx.convention, ctx.sandwich_limit)
            result.record(
                invariant[0] == invariant[1],
                lambda: f"invariants gamma={module.gamma} {left} {right} p={p}: "
                f"{invariant}",
            )


@check("iterated_sandwich")
def _iterated_sandwich(ctx: Context, result: CheckResult) -> None:
    for p in ctx.primes:
        for module, left, right in ctx.queries():
            query = SandwichQuery(module, left, right, FieldSpec(p))
            once = sandwich_dim(query, ctx.convention, ctx.sandwich_limit)
            twice = iterated_sandwich_dim(query, ctx.convention, ctx.sandwich_limit)
            result.record(
                once == twice,
                lambda: f"gamma={module.gamma} {left} {right} p={p}: {once} != {twice}",
            )


@check("side_swap")
def _side_swap(ctx: Context, result: CheckResult) -> None:
    for p in ctx.primes:
        field = FieldSpec(p)
        for module, left, right in ctx.queries():
            plain = sandwich_dim(
                SandwichQuery(module, left, right, field),
                ctx.convention,
                ctx.sandwich_limit,
            )
            swapped = sandwich_dim(
                SandwichQuery(module.with_swapped_actions(), left, right, field),
                ctx.convention,
                ctx.sandwich_limit,
            )
            result.record(
                plain == swapped,
                lambda: f"gamma={module.gamma} {left} {right} p={p}: "
                f"{plain} != {swapped}",
            )


@check("model_sanity")
def _model_sanity(ctx: Context, result: CheckResult) -> None:
    for d, p in itertools.product(ctx.degrees, ctx.primes):
        for r in range(ctx.grid[conf.CONF_RMAX] + 1):
            total = total_series(build_tensor_cohomology(d, p, r))
            expected = math.factorial(d) * p ** (r * d)
            result.record(
                total.evaluate(1) == expected,
                lambda: f"d={d} p={p} r={r}: total {total.evaluate(1)} != {expected}",
            )
            for mu in partitions_of(d):
                series = orbit_series(mu, p, r, ctx.threshold)
                result.record(
                    series.is_nonnegative() and series.dominated_by(total),
                    lambda: f"mu={mu} p={p} r={r}: {series} not below {total}",
                )


@check("composition_reordering")
def _composition_reordering(ctx: Context, result: CheckResult) -> None:
    for d in range(1, ctx.grid[conf.CONF_NAIVE_DMAX] + 1):
        for mu in compositions_of(d):
            for p, r in itertools.product(ctx.primes, ctx.twists):
                got = orbit_series(mu, p, r, ctx.threshold)
                sorted_mu = mu.sorted()
                expected = orbit_series(sorted_mu, p, r, ctx.threshold)
                result.record(
                    got == expected,
                    lambda: f"mu={mu} p={p} r={r}: {got} != {expected} for {sorted_mu}",
                )


@check("renumbering_invariance")
def _renumbering_invariance(ctx: Context, result: CheckResult) -> None:
    for p in ctx.primes:
        field = FieldSpec(p)
        for module, left, right in ctx.queries():
            # a d-cycle moves every box
            w = Permutation.from_cycles(module.d, [range(module.d)])
            groups = SandwichQuery(module, left, right, field).groups(ctx.convention)
            plain = sandwich_dim_for_groups(module, groups, field)
            moved = sandwich_dim_for_groups(module, groups.conjugated(w), field)
            result.record(
                plain == moved,
                lambda: f"gamma={module.gamma} {left} {right} p={p} w={w}: "
                f"{plain} != {moved}",
            )


@check("convention_ambiguity")
def _convention_ambiguity(ctx: Context, result: CheckResult) -> None:
    passing = []
    for convention in (Convention.ROW_ALT, Convention.COLUMN_ALT):
        trial = CheckResult(f"path_equivalence[{convention}]")
        _path_equivalence(ctx, trial, convention)
        result.cases += trial.cases
        if trial.passed:
            passing.append(str(convention))
    if len(passing) == 2:
        result.note = "row_alt and column_alt both pass path equivalence; immaterial on this grid"
    elif passing:
        result.note = f"only {passing[0]} passes path equivalence"
    else:
        result.note = "neither convention passes path equivalence"
    result.passed = bool(passing)


def run_grid(
    grid: dict | None = None,
    config: dict | None = None,
    only: list[str] | None = None,
) -> VerificationReport:
    """Run the named checks (all by default) and collect a report."""
    grid = conf.GRID_SCHEMA(grid or {})
    config = conf.CONFIG_SCHEMA(config or {})
    ctx = Context(grid, config)
    if grid[conf.CONF_DMAX] > ctx.sandwich_limit:
        raise ScaleGuardError(
            f"Verifying up to degree {grid[conf.CONF_DMAX]} exceeds the sandwich limit "
            f"{ctx.sandwich_limit}; pass --allow-large to raise it"
        )
    names = list(CHECKS) if only is None else only
    checks = []
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"Unknown check {name!r}")
        result = CheckResult(name)
        LOGGER.info("Running %s", name)
        CHECKS[name](ctx, result)
        LOGGER.info("%s: %s after %d cases", name, "ok" if result.passed else "FAILED", result.cases)
        checks.append(result)
    return VerificationReport(checks, dict(grid))
