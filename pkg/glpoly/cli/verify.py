import json
import logging

import click
import voluptuous as vol

import glpoly.config as conf
from glpoly.exception import VerificationError
from glpoly.types import Convention
from glpoly.verify import CHECKS, run_grid

from . import opts, util
from .main import main

LOGGER = logging.getLogger(__name__)


def _pretty(report):
    lines = []
    for result in report.checks:
        status = "ok" if result.passed else "FAIL"
        lines.append(f"{status:4} {result.name} ({result.cases} cases)")
        if result.counterexample:
            lines.append(f"     counterexample: {result.counterexample}")
        if result.note:
            lines.append(f"     {result.note}")
    lines.append("all checks passed" if report.passed else "verification FAILED")
    return "\n".join(lines)


@main.command()
@click.option("--dmax", type=click.INT, default=4, show_default=True)
@opts.primes
@click.option("--rmax", type=click.INT, default=2, show_default=True)
@click.option("--naive-dmax", type=click.INT, default=5, show_default=True)
@click.option("--samples", type=click.INT, default=100, show_default=True)
@click.option("--seed", type=click.INT, default=0, show_default=True)
@click.option(
    "--independence-primes",
    type=util.CSVParamType(2),
    metavar="PRIMES",
    default="2,3,5,7",
    show_default=True,
)
@click.option(
    "-c",
    "--check",
    "checks",
    type=click.Choice(sorted(CHECKS)),
    multiple=True,
    help="run only the named checks",
)
@click.option(
    "-f",
    "--format",
    "fmt",
    type=click.Choice(["json", "pretty"]),
    default="pretty",
    show_default=True,
)
@opts.convention
@opts.allow_large
@click.pass_context
@util.guarded
def verify(
    ctx,
    dmax,
    primes,
    rmax,
    naive_dmax,
    samples,
    seed,
    independence_primes,
    checks,
    fmt,
    convention,
    allow_large,
):
    """Run the cross checks on a grid and report per check"""
    try:
        grid = conf.GRID_SCHEMA(
            {
                conf.CONF_DMAX: dmax,
                conf.CONF_PRIMES: primes,
                conf.CONF_RMAX: rmax,
                conf.CONF_NAIVE_DMAX: naive_dmax,
                conf.CONF_SAMPLES: samples,
                conf.CONF_SEED: seed,
                conf.CONF_INDEPENDENCE_PRIMES: independence_primes,
            }
        )
    except vol.Invalid as exc:
        raise click.BadParameter(str(exc), ctx=ctx) from exc
    config = util.engine_config(
        ctx,
        **{
            conf.CONF_CONVENTION: convention,
            conf.CONF_MAX_SANDWICH_DEGREE: util.sandwich_limit(allow_large),
            conf.CONF_ENUMERATION_THRESHOLD: ctx.obj["enumeration_threshold"],
        },
    )
    if config[conf.CONF_CONVENTION] is not Convention.ROW_ALT:
        LOGGER.warning("Verifying with the %s convention", config[conf.CONF_CONVENTION])

    report = run_grid(grid, config, list(checks) or None)
    if fmt == "json":
        click.echo(json.dumps(report.as_dict(), sort_keys=True))
    else:
        click.echo(_pretty(report))

    try:
        report.raise_for_failures()
    except VerificationError as exc:
        click.echo(str(exc), err=True)
        ctx.exit(util.EXIT_VERIFY_FAILED)
