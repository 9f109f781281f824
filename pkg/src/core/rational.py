"""
Exact rational helpers and seed derivation.

Densities are carried as fractions.Fraction everywhere on exact paths and
serialized as "p/q" strings so they survive JSON.
"""

import hashlib
from fractions import Fraction
from typing import Dict, Union

Rational = Fraction
Number = Union[int, Fraction]


def format_rational(value: Number) -> str:
    """Render as "p/q" (always with a denominator, e.g. "0/1", "1/24")."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" or an integer string.

    Raises:
        ValueError: if the text is not a rational or the denominator is zero
    """
    text = str(text).strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational: {text!r}") from e


def rational_record(value: Number) -> Dict[str, object]:
    """JSON record with the exact value and a float for convenience."""
    value = Fraction(value)
    return {"value": format_rational(value), "float": float(value)}


def derive_seed(seed: int, label: str) -> int:
    """
    Derive a labeled 64-bit sub-seed from a master seed.

    The same (seed, label) pair always yields the same sub-seed, so one
    --seed flag fixes every random stream of an experiment.
    """
    digest = hashlib.blake2b(
        f"{int(seed)}:{label}".encode("utf-8"), digest_size=8
    ).digest()
    return int.from_bytes(digest, "little")
