"""
Cyclic Latin squares (the addition table of Z_n).
"""

from src.core.errors import InvalidOrder
from src.core.squares import LatinSquare


def gen_cyclic(n: int) -> LatinSquare:
    """L[i][j] = ((i + j - 2) mod n) + 1 with 1-based i, j."""
    if n < 1:
        raise InvalidOrder(f"order must be positive, got {n}")
    return LatinSquare(n, tuple(tuple((i + j) % n + 1 for j in range(n)) for i in range(n)))
