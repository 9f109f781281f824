"""
Error types for Latin square and Latinon analysis.

All errors derive from ValueError so callers that only care about
"bad input" can keep catching ValueError.
"""

from typing import Optional, Tuple


class LatinQError(ValueError):
    """Base class for every domain error raised by this package."""


class ConfigError(LatinQError):
    """An environment setting could not be parsed."""


class ParseError(LatinQError):
    """A square or pattern file is malformed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotSquare(LatinQError):
    """The grid is empty or its rows do not all have length n."""


class SymbolOutOfRange(LatinQError):
    def __init__(self, cell: Tuple[int, int], value: object, order: int):
        self.cell = cell
        self.value = value
        super().__init__(
            f"symbol {value!r} at cell {cell} is not in 1..{order}"
        )


class DuplicateInRow(LatinQError):
    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row} repeats a symbol")


class DuplicateInColumn(LatinQError):
    def __init__(self, col: int):
        self.col = col
        super().__init__(f"column {col} repeats a symbol")


class InvalidPattern(LatinQError):
    """Pattern entries are not a valid (generalized) rank grid."""


class TooLarge(LatinQError):
    """k·ℓ is above the enumeration ceiling."""


class IdOutOfRange(LatinQError):
    def __init__(self, pattern_id: int, limit: int):
        self.pattern_id = pattern_id
        super().__init__(f"pattern id {pattern_id} is outside 0..{limit - 1}")


class ZeroSamples(LatinQError):
    def __init__(self):
        super().__init__("Monte Carlo estimation needs at least one sample")


class UnbalancedClassVector(LatinQError):
    """A blow-up class vector does not split positions half and half."""


class QuadrantLengthNotDivisibleBy4(LatinQError):
    """Quadrant classes need an output length divisible by 4."""


class InvalidOrder(LatinQError):
    """A generator was asked for an order, kind or walk length it cannot build."""


class GenerationError(LatinQError):
    """A generator produced no valid square."""


class LatinonFormatError(LatinQError):
    """A Latinon description is structurally invalid."""


class EnumerationBoundExceeded(LatinQError):
    """Exact Latinon enumeration was asked for more than the desk-scale bounds."""


class MissingPattern(LatinQError):
    def __init__(self, pattern_id: int):
        self.pattern_id = pattern_id
        super().__init__(f"no density supplied for pattern id {pattern_id}")


class NotEliminable(LatinQError):
    """The eliminable-pattern check was requested for a non-eliminable pattern."""
