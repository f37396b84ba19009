# flake8: noqa
from . import series, verify
