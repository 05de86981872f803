"""Exception hierarchy shared by every module in the package.

Errors are typed so callers (and the CLI exit-code mapping) can distinguish
bad parameters from degenerate data from unreadable input files.
"""

from __future__ import annotations


class TverskyCIError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(TverskyCIError, ValueError):
    """A numeric argument is outside its domain (weights, levels, seeds, ...)."""


class DegenerateSampleError(TverskyCIError):
    """The data cannot support the requested estimate.

    Raised when a sample has no true positives (the index is 0/0 and the
    variance formula divides by the true-positive rate), when a metric's
    denominator is empty, or when a resampling run is dominated by
    degenerate draws.
    """


class DataError(TverskyCIError):
    """An input file is missing, empty, malformed, or mixes record modes.

    Parse failures carry the offending 1-based line number in the message;
    rows are never skipped silently.
    """


class UsageError(TverskyCIError):
    """Command-line flags conflict or a required flag is missing."""
