"""
Shared domain types: Latin squares, patterns, rationals, file formats.
"""

from src.core.patterns import (
    GeneralizedPattern,
    Pattern,
    complement,
    enumerate_patterns,
    hflip,
    pattern_from_id,
    pattern_id,
    transpose,
    vflip,
)
from src.core.rational import derive_seed, format_rational, parse_rational
from src.core.squares import LatinSquare, validate_latin

__all__ = [
    "GeneralizedPattern",
    "LatinSquare",
    "Pattern",
    "complement",
    "derive_seed",
    "enumerate_patterns",
    "format_rational",
    "hflip",
    "parse_rational",
    "pattern_from_id",
    "pattern_id",
    "transpose",
    "validate_latin",
    "vflip",
]
