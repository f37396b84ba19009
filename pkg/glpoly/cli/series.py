import logging

import click

from glpoly.combinatorics import partitions_of
import glpoly.config as conf
from glpoly.formulas import gamma_p_series
from glpoly.model import build_tensor_cohomology, total_series
from glpoly.orbits import orbit_series
from glpoly.sandwich import ext_series, sandwich_series
from glpoly.types import ComputationPath, SeriesKind

from . import opts, util
from .main import main

LOGGER = logging.getLogger(__name__)


def _emit(document, fmt, stopwatch, timing):
    click.echo(document.render(fmt, stopwatch.elapsed if timing else None))


def _symmetric(mu, p, r, path, threshold, limit):
    """Series by the requested path; both paths land in ``alternatives``."""
    path = ComputationPath(path)
    if path is ComputationPath.ORBIT:
        return orbit_series(mu, p, r, threshold), {}
    if path is ComputationPath.SANDWICH:
        return sandwich_series(mu, p, r, max_degree=limit), {}
    orbits = orbit_series(mu, p, r, threshold)
    sandwich = sandwich_series(mu, p, r, max_degree=limit)
    if orbits != sandwich:
        LOGGER.warning("Paths disagree for mu=%s p=%d r=%d", mu, p, r)
    return orbits, {"orbit": orbits, "sandwich": sandwich}


@main.command()
@opts.mu
@opts.prime
@opts.twist
@opts.path
@opts.output_format
@opts.timing
@opts.allow_large
@click.pass_context
@util.guarded
def sym(ctx, mu, p, r, path, fmt, timing, allow_large):
    """Poincaré series of the cohomology of S^{mu(r)}gl"""
    stopwatch = util.Stopwatch()
    series, alternatives = _symmetric(
        mu,
        p,
        r,
        path,
        ctx.obj["enumeration_threshold"],
        util.sandwich_limit(allow_large),
    )
    document = util.ResultDocument(
        SeriesKind.SYM.value,
        {"mu": ",".join(map(str, mu)), "p": p, "r": r, "path": path},
        series,
        alternatives,
    )
    _emit(document, fmt, stopwatch, timing)


@main.command()
@opts.prime
@opts.positive_twist
@opts.output_format
@opts.timing
@click.pass_context
@util.guarded
def gamma(ctx, p, r, fmt, timing):
    """Poincaré series of the cohomology of Gamma^{p(r)}gl"""
    stopwatch = util.Stopwatch()
    series = gamma_p_series(p, r, ctx.obj["enumeration_threshold"])
    document = util.ResultDocument(
        SeriesKind.GAMMA.value, {"k": 1, "p": p, "r": r, "path": "orbit"}, series
    )
    _emit(document, fmt, stopwatch, timing)


@main.command()
@opts.degree
@opts.prime
@opts.twist
@opts.output_format
@opts.timing
@click.pass_context
@util.guarded
def tensor(ctx, d, p, r, fmt, timing):
    """Poincaré series of the cohomology of the d-th tensor power of gl"""
    stopwatch = util.Stopwatch()
    series = total_series(build_tensor_cohomology(d, p, r))
    document = util.ResultDocument(
        SeriesKind.TENSOR.value, {"d": d, "p": p, "r": r, "path": "model"}, series
    )
    _emit(document, fmt, stopwatch, timing)


@main.command()
@opts.left
@opts.right
@opts.prime
@opts.twist
@opts.output_format
@opts.timing
@opts.allow_large
@opts.convention
@click.pass_context
@util.guarded
def ext(ctx, left, right, p, r, fmt, timing, allow_large, convention):
    """Sandwich dimensions s_LEFT B s_RIGHT summed over the tensor model"""
    stopwatch = util.Stopwatch()
    config = util.engine_config(
        ctx,
        **{
            conf.CONF_CONVENTION: convention,
            conf.CONF_MAX_SANDWICH_DEGREE: util.sandwich_limit(allow_large),
        },
    )
    series = ext_series(
        left,
        right,
        p,
        r,
        config[conf.CONF_CONVENTION],
        config[conf.CONF_MAX_SANDWICH_DEGREE],
    )
    document = util.ResultDocument(
        SeriesKind.EXT.value,
        {"left": str(left), "right": str(right), "p": p, "r": r, "path": "sandwich"},
        series,
    )
    _emit(document, fmt, stopwatch, timing)


@main.command()
@click.option("--dmax", type=click.IntRange(1, 8), default=3, show_default=True)
@opts.primes
@click.option("--rmax", type=click.IntRange(0, 3), default=1, show_default=True)
@opts.path
@opts.allow_large
@click.pass_context
@util.guarded
def table(ctx, dmax, primes, rmax, path, allow_large):
    """Symmetric power series for every partition up to DMAX, as CSV"""
    primes = util.validate_primes(ctx, primes)
    limit = util.sandwich_limit(allow_large)
    lines = ["mu,p,r,degree,dimension"]
    for d in range(1, dmax + 1):
        for mu in partitions_of(d):
            for p in primes:
                for r in range(rmax + 1):
                    LOGGER.info("Computing mu=%s p=%d r=%d", mu, p, r)
                    series, alternatives = _symmetric(
                        mu, p, r, path, ctx.obj["enumeration_threshold"], limit
                    )
                    if alternatives and len(set(alternatives.values())) != 1:
                        raise click.ClickException(
                            f"Paths disagree for mu={mu} p={p} r={r}"
                        )
                    body = util.series_csv(series, prefix=(str(mu), p, r), header=None)
                    lines.extend(body.splitlines())
    click.echo("\n".join(lines))
