"""Acceptance sampling plans for exponential lifetimes under Type I hybrid censoring."""

from ._core import *  # noqa: F401,F403
from ._core import InvalidArgument, NumericFailure  # noqa: F401

__version__ = "0.1.0"
