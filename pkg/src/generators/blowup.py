"""
Two-class blow-ups of a Latin square.

Positions 0..2m-1 carry a class in {0, 1}, half of each. Entry (p, q) of the
blow-up copies the inner square at the within-class ranks of p and q, and
is shifted into the upper half m+1..2m exactly when the classes differ.
Parity classes discretize the 2-to-1 position map of the first
counterexample Latinon; quadrant classes discretize the identity-map one,
where the first and last quarters share a class.
"""

from typing import Sequence, Tuple

from src.core.errors import QuadrantLengthNotDivisibleBy4, UnbalancedClassVector
from src.core.squares import LatinSquare

ClassVector = Tuple[int, ...]


def check_classes(classes: Sequence[int]) -> ClassVector:
    classes = tuple(int(c) for c in classes)
    if any(c not in (0, 1) for c in classes):
        raise UnbalancedClassVector("class labels must be 0 or 1")
    zeros = classes.count(0)
    if len(classes) == 0 or zeros * 2 != len(classes):
        raise UnbalancedClassVector(
            f"need equally many 0s and 1s, got {zeros} zeros of {len(classes)}"
        )
    return classes


def parity_classes(m: int) -> ClassVector:
    """(0, 1, 0, 1, ...) of length 2m."""
    if m < 1:
        raise UnbalancedClassVector(f"m must be positive, got {m}")
    return tuple(p % 2 for p in range(2 * m))


def quadrant_classes(m: int) -> ClassVector:
    """Length 2m: zeros on the first and last quarters, ones in the middle half."""
    length = 2 * m
    if m < 1 or length % 4:
        raise QuadrantLengthNotDivisibleBy4(f"output length {length} is not divisible by 4")
    quarter = length // 4
    return tuple(0 if p < quarter or p >= length - quarter else 1 for p in range(length))


def blowup(inner: LatinSquare, classes: Sequence[int]) -> LatinSquare:
    """
    Order-2m blow-up of an order-m square.

    L[p][q] = M[a][b] + m·[c_p != c_q], where a (resp. b) is the rank of p
    (resp. q) among the positions of its own class.

    Raises:
        UnbalancedClassVector: if classes is not a balanced 0/1 vector of length 2m
    """
    classes = check_classes(classes)
    m = inner.order
    if len(classes) != 2 * m:
        raise UnbalancedClassVector(
            f"class vector has length {len(classes)}, expected {2 * m}"
        )
    seen = [0, 0]
    rank = []
    for c in classes:
        rank.append(seen[c])
        seen[c] += 1
    cells = inner.cells
    grid = tuple(
        tuple(
            cells[rank[p]][rank[q]] + (m if classes[p] != classes[q] else 0)
            for q in range(2 * m)
        )
        for p in range(2 * m)
    )
    return LatinSquare(2 * m, grid)
