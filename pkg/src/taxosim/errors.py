"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: parse/config/data problems
exit 2, unknown words exit 3, degenerate statistics exit 4.
"""

from __future__ import annotations


class TaxosimError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TaxosimError):
    """An input file (taxonomy, frequency list, pairs CSV) is malformed."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        prefix = ""
        if source is not None:
            prefix += f"{source}: "
        if line is not None:
            prefix += f"line {line}: "
        super().__init__(prefix + message)


class ConfigError(TaxosimError):
    """A parameter value or combination of flags is invalid."""


class DataError(TaxosimError):
    """Structurally valid input that cannot be processed (e.g. no word entries)."""


class UnknownWordError(TaxosimError):
    """A queried word has no senses in the loaded taxonomy."""

    def __init__(self, word: str):
        self.word = word
        super().__init__(f"unknown word: {word!r}")


class LengthMismatchError(TaxosimError):
    """Paired sequences of different lengths were passed to a statistic."""


class DegenerateDataError(TaxosimError):
    """A statistic is undefined for the given data (zero variance, too few points)."""
