from __future__ import annotations

import contextlib
import csv
import dataclasses
import functools
import importlib.metadata
import io
import json
import logging
import time

import click
import voluptuous as vol

import glpoly.config as conf
from glpoly.exception import InvalidShapeError, ScaleGuardError, WeightMismatchError
from glpoly.series import PoincareSeries
from glpoly.types import Composition, Partition, SkewTuple

LOGGER = logging.getLogger(__name__)

EXIT_VERIFY_FAILED = 1
EXIT_SCALE_GUARD = 3


class ScaleGuardExit(click.ClickException):
    exit_code = EXIT_SCALE_GUARD


class CSVParamType(click.ParamType):
    name = "comma separated integers"

    def __init__(self, min=None, max=None):
        self.intrange = click.IntRange(min, max)

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return list(value)
        values = [self.intrange.convert(v, param, ctx) for v in value.split(",")]
        return values


class PrimeParamType(click.ParamType):
    name = "prime"

    def convert(self, value, param, ctx):
        try:
            return conf.cv_prime(value)
        except (vol.Invalid, ValueError) as exc:
            self.fail(f"{value!r} is not a prime: {exc}", param, ctx)


class ShapeParamType(click.ParamType):
    """Comma separated parts of a partition, ``2,1``."""

    name = "partition"

    def convert(self, value, param, ctx):
        if isinstance(value, Composition):
            return value
        try:
            shape = Partition.parse(value)
        except InvalidShapeError as exc:
            self.fail(str(exc), param, ctx)
        if not shape.parts:
            self.fail("Shape must have at least one part", param, ctx)
        return shape


class SkewTupleParamType(click.ParamType):
    name = "partition tuple"

    def convert(self, value, param, ctx):
        if isinstance(value, SkewTuple):
            return value
        try:
            shape = SkewTuple.parse(value)
        except InvalidShapeError as exc:
            self.fail(f"{exc}; expected blocks like '2,1|1'", param, ctx)
        if any(not block.parts for block in shape.blocks):
            self.fail("Every block must be a nonempty partition", param, ctx)
        return shape


def engine_config(ctx, **values):
    """Validate engine settings taken from flags."""
    try:
        return conf.CONFIG_SCHEMA({k: v for k, v in values.items() if v is not None})
    except vol.Invalid as exc:
        raise click.BadParameter(str(exc), ctx=ctx) from exc


def sandwich_limit(allow_large):
    if allow_large:
        LOGGER.warning(
            "Raising the sandwich degree limit to %d", conf.LARGE_MAX_SANDWICH_DEGREE
        )
        return conf.LARGE_MAX_SANDWICH_DEGREE
    return conf.DEFAULT_MAX_SANDWICH_DEGREE


def guarded(f):
    """Translate engine refusals into exit codes."""

    @functools.wraps(f)
    def inner(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ScaleGuardError as exc:
            raise ScaleGuardExit(str(exc)) from exc
        except WeightMismatchError as exc:
            raise click.UsageError(str(exc)) from exc

    return inner


def package_version():
    with contextlib.suppress(importlib.metadata.PackageNotFoundError):
        return importlib.metadata.version("glpoly")
    return "0+unknown"


class Stopwatch:
    def __init__(self):
        self.start = time.perf_counter()

    @property
    def elapsed(self):
        return round(time.perf_counter() - self.start, 6)


@dataclasses.dataclass
class ResultDocument:
    kind: str
    params: dict
    series: PoincareSeries
    alternatives: dict = dataclasses.field(default_factory=dict)

    @property
    def agree(self):
        if not self.alternatives:
            return None
        return len(set(self.alternatives.values())) == 1

    def as_dict(self, elapsed=None):
        doc = {
            "kind": self.kind,
            "params": self.params,
            "series": self.series.to_pairs(),
            "euler_char": self.series.euler_characteristic(),
            "top_degree": self.series.top_degree(),
            "meta": {"version": package_version()},
        }
        if self.alternatives:
            for name, series in self.alternatives.items():
                doc[f"series_{name}"] = series.to_pairs()
            doc["agree"] = self.agree
        if elapsed is not None:
            doc["meta"]["elapsed_s"] = elapsed
        return doc

    def to_json(self, elapsed=None):
        return json.dumps(self.as_dict(elapsed), sort_keys=True)

    def to_csv(self):
        return series_csv(self.series)

    def to_pretty(self, elapsed=None):
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{self.kind} {params}", f"  {self.series}"]
        for name, series in self.alternatives.items():
            lines.append(f"  {name}: {series}")
        if self.alternatives:
            lines.append(f"  agree: {self.agree}")
        lines.append(f"  euler characteristic: {self.series.euler_characteristic()}")
        lines.append(f"  top degree: {self.series.top_degree()}")
        if elapsed is not None:
            lines.append(f"  elapsed: {elapsed:.3f}s")
        return "\n".join(lines)

    def render(self, fmt, elapsed=None):
        if fmt == "json":
            return self.to_json(elapsed)
        if fmt == "csv":
            return self.to_csv().rstrip("\n")
        return self.to_pretty(elapsed)


def series_csv(series, prefix=(), header=("degree", "dimension")):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if header:
        writer.writerow(header)
    for degree, dimension in series.to_pairs():
        writer.writerow([*prefix, degree, dimension])
    return buffer.getvalue()


def validate_primes(ctx, primes):
    try:
        return conf.cv_primes(primes)
    except (vol.Invalid, ValueError) as exc:
        raise click.BadParameter(str(exc), ctx=ctx, param_hint="--primes") from exc
