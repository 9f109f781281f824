"""
Latin squares: the finite object whose pattern densities we measure.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Tuple

import numpy as np

from src.core.errors import (
    DuplicateInColumn,
    DuplicateInRow,
    NotSquare,
    SymbolOutOfRange,
)

Grid = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class LatinSquare:
    """
    An order-n Latin square with symbols 1..n, stored row-major.

    Build instances through validate_latin(); the constructor itself
    does not re-check the Latin property.
    """
    order: int
    cells: Grid

    @cached_property
    def array(self) -> np.ndarray:
        """Read-only int64 numpy view of the cells."""
        arr = np.array(self.cells, dtype=np.int64).reshape(self.order, self.order)
        arr.flags.writeable = False
        return arr

    def transpose(self) -> "LatinSquare":
        return LatinSquare(self.order, tuple(zip(*self.cells)))

    def reverse_rows(self) -> "LatinSquare":
        return LatinSquare(self.order, tuple(reversed(self.cells)))

    def reverse_columns(self) -> "LatinSquare":
        return LatinSquare(self.order, tuple(tuple(reversed(r)) for r in self.cells))

    def complement(self) -> "LatinSquare":
        """Replace every symbol s by n+1-s."""
        n = self.order
        return LatinSquare(n, tuple(tuple(n + 1 - s for s in r) for r in self.cells))

    def __str__(self) -> str:
        width = len(str(self.order))
        return "\n".join(" ".join(f"{s:>{width}}" for s in row) for row in self.cells)


def validate_latin(grid: Sequence[Sequence[int]]) -> LatinSquare:
    """
    Check that grid is an n×n Latin square over 1..n.

    Checks run in order: shape, symbol range (row-major), rows, columns,
    so the error always names the first offender. Indices are 1-based.

    Args:
        grid: n×n nested sequence of integers

    Returns:
        The validated LatinSquare

    Raises:
        NotSquare, SymbolOutOfRange, DuplicateInRow, DuplicateInColumn
    """
    rows = [list(r) for r in grid]
    n = len(rows)
    if n == 0:
        raise NotSquare("grid is empty")
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            raise NotSquare(f"row {i} has {len(row)} entries, expected {n}")

    for i, row in enumerate(rows, start=1):
        for j, value in enumerate(row, start=1):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise SymbolOutOfRange((i, j), value, n)
            if not 1 <= value <= n:
                raise SymbolOutOfRange((i, j), value, n)

    for i, row in enumerate(rows, start=1):
        if len(set(row)) != n:
            raise DuplicateInRow(i)
    for j in range(n):
        if len({rows[i][j] for i in range(n)}) != n:
            raise DuplicateInColumn(j + 1)

    return LatinSquare(n, tuple(tuple(int(v) for v in row) for row in rows))


def is_latin(grid: Sequence[Sequence[int]]) -> bool:
    try:
        validate_latin(grid)
    except ValueError:
        return False
    return True
