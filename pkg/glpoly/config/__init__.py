from __future__ import annotations

import voluptuous as vol

from glpoly.types import Convention, is_prime

CONF_MAX_SANDWICH_DEGREE = "max_sandwich_degree"
CONF_MAX_NAIVE_DEGREE = "max_naive_degree"
CONF_ENUMERATION_THRESHOLD = "enumeration_threshold"
CONF_CONVENTION = "convention"

CONF_DMAX = "dmax"
CONF_PRIMES = "primes"
CONF_RMAX = "rmax"
CONF_NAIVE_DMAX = "naive_dmax"
CONF_SAMPLES = "samples"
CONF_SEED = "seed"
CONF_INDEPENDENCE_PRIMES = "independence_primes"

# Dense elimination grows with (d!)^2 sized bases; d = 5 means at most 14400.
DEFAULT_MAX_SANDWICH_DEGREE = 5
DEFAULT_MAX_NAIVE_DEGREE = 6
DEFAULT_ENUMERATION_THRESHOLD = 6
LARGE_MAX_SANDWICH_DEGREE = 7
DEFAULT_MAX_SUMMANDS = 500_000


def cv_prime(value) -> int:
    """Voluptuous validator for a prime number."""

    value = int(value)
    if not is_prime(value):
        raise vol.Invalid(f"{value} is not a prime")
    return value


def cv_primes(value) -> tuple[int, ...]:
    """Comma separated string or sequence of primes, deduplicated in order."""

    if isinstance(value, str):
        value = [v for v in value.split(",") if v.strip()]
    primes = tuple(dict.fromkeys(cv_prime(v) for v in value))
    if not primes:
        raise vol.Invalid("at least one prime is required")
    return primes


cv_nonnegative = vol.All(vol.Coerce(int), vol.Range(min=0))
cv_positive = vol.All(vol.Coerce(int), vol.Range(min=1))


CONFIG_SCHEMA = vol.Schema(
    {
        vol.Optional(
            CONF_MAX_SANDWICH_DEGREE, default=DEFAULT_MAX_SANDWICH_DEGREE
        ): cv_positive,
        vol.Optional(CONF_MAX_NAIVE_DEGREE, default=DEFAULT_MAX_NAIVE_DEGREE): cv_positive,
        vol.Optional(
            CONF_ENUMERATION_THRESHOLD, default=DEFAULT_ENUMERATION_THRESHOLD
        ): cv_nonnegative,
        vol.Optional(CONF_CONVENTION, default=Convention.ROW_ALT.value): vol.Coerce(
            Convention
        ),
    }
)

GRID_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_DMAX, default=4): cv_positive,
        vol.Optional(CONF_PRIMES, default="2,3,5"): cv_primes,
        vol.Optional(CONF_RMAX, default=2): vol.All(cv_nonnegative, vol.Range(max=3)),
        vol.Optional(CONF_NAIVE_DMAX, default=5): vol.All(cv_positive, vol.Range(max=6)),
        vol.Optional(CONF_SAMPLES, default=100): cv_nonnegative,
        vol.Optional(CONF_SEED, default=0): vol.Coerce(int),
        vol.Optional(CONF_INDEPENDENCE_PRIMES, default="2,3,5,7"): cv_primes,
    },
    extra=vol.REMOVE_EXTRA,
)
