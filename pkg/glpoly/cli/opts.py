import click

from glpoly.config import DEFAULT_ENUMERATION_THRESHOLD
from glpoly.types import ComputationPath, Convention, OutputFormat

from . import util

mu = click.option(
    "--mu",
    type=util.ShapeParamType(),
    required=True,
    metavar="PARTITION",
    help="partition such as 2,1",
)

prime = click.option("--p", "p", type=util.PrimeParamType(), required=True)

twist = click.option(
    "--r", "r", type=click.IntRange(min=0), default=1, show_default=True
)

positive_twist = click.option(
    "--r", "r", type=click.IntRange(min=1), default=1, show_default=True
)

degree = click.option("--d", "d", type=click.IntRange(min=1), required=True)

path = click.option(
    "--path",
    type=click.Choice([p.value for p in ComputationPath]),
    default=ComputationPath.ORBIT.value,
    show_default=True,
    help="engine computing the coefficients",
)

output_format = click.option(
    "-f",
    "--format",
    "fmt",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.PRETTY.value,
    show_default=True,
)

timing = click.option(
    "--timing", is_flag=True, default=False, help="record elapsed time in the output"
)

allow_large = click.option(
    "--allow-large",
    is_flag=True,
    default=False,
    help="raise the degree limit of the sandwich engine",
)

convention = click.option(
    "--convention",
    type=click.Choice([c.value for c in Convention]),
    default=Convention.ROW_ALT.value,
    hidden=True,
)

left = click.option("--left", type=util.SkewTupleParamType(), required=True)

right = click.option("--right", type=util.SkewTupleParamType(), required=True)

enumeration_threshold = click.option(
    "--enumeration-threshold",
    type=click.IntRange(min=0),
    default=DEFAULT_ENUMERATION_THRESHOLD,
    show_default=True,
    hidden=True,
)

primes = click.option(
    "--primes",
    type=util.CSVParamType(2),
    metavar="PRIMES",
    default="2,3,5",
    show_default=True,
)
