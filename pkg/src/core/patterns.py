"""
Patterns and generalized patterns: k×ℓ rank grids used as density queries.

A k×ℓ pattern holds each of 1..kℓ once. A generalized pattern may hold
holes (None, written `*` in files); its other entries are 1..m once each.
Pattern ids are the 0-based lexicographic rank of the row-major entries.
"""

from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from src.core.errors import IdOutOfRange, InvalidPattern, TooLarge

MAX_CELLS = 10

HOLE = None


def _as_grid(rows: Sequence[Sequence[Optional[int]]]) -> Tuple[Tuple[Optional[int], ...], ...]:
    grid = tuple(tuple(None if v is None else int(v) for v in r) for r in rows)
    if not grid or not grid[0]:
        raise InvalidPattern("pattern must have at least one row and one column")
    width = len(grid[0])
    if any(len(r) != width for r in grid):
        raise InvalidPattern("pattern rows have different lengths")
    return grid


@dataclass(frozen=True)
class Pattern:
    """A k×ℓ grid containing each of 1..kℓ exactly once."""
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        grid = _as_grid(self.entries)
        flat = [v for r in grid for v in r]
        if None in flat or sorted(flat) != list(range(1, len(flat) + 1)):
            raise InvalidPattern(f"entries must be 1..{len(flat)} each once: {grid}")
        object.__setattr__(self, "entries", grid)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Pattern":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def l(self) -> int:
        return len(self.entries[0])

    @property
    def flat(self) -> Tuple[int, ...]:
        return tuple(v for r in self.entries for v in r)

    def to_generalized(self) -> "GeneralizedPattern":
        return GeneralizedPattern(self.entries)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in r) for r in self.entries)


@dataclass(frozen=True)
class GeneralizedPattern:
    """
    A k×ℓ grid over 1..m and holes; no row or column may be all holes.
    """
    entries: Tuple[Tuple[Optional[int], ...], ...]

    def __post_init__(self):
        grid = _as_grid(self.entries)
        values = [v for r in grid for v in r if v is not None]
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidPattern(f"non-hole entries must be 1..{len(values)} each once")
        for i, row in enumerate(grid, start=1):
            if all(v is None for v in row):
                raise InvalidPattern(f"row {i} consists only of holes")
        for j in range(len(grid[0])):
            if all(r[j] is None for r in grid):
                raise InvalidPattern(f"column {j + 1} consists only of holes")
        object.__setattr__(self, "entries", grid)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Optional[int]]]) -> "GeneralizedPattern":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def l(self) -> int:
        return len(self.entries[0])

    @property
    def m(self) -> int:
        """Number of non-hole entries."""
        return sum(v is not None for r in self.entries for v in r)

    @property
    def is_full(self) -> bool:
        return self.m == self.k * self.l

    def chain(self) -> List[int]:
        """Row-major cell indices of the non-hole entries, sorted by rank."""
        cells = [
            (v, i * self.l + j)
            for i, r in enumerate(self.entries)
            for j, v in enumerate(r)
            if v is not None
        ]
        return [idx for _, idx in sorted(cells)]

    def to_pattern(self) -> Pattern:
        if not self.is_full:
            raise InvalidPattern("pattern has holes")
        return Pattern(self.entries)

    def __str__(self) -> str:
        return "\n".join(
            " ".join("*" if v is None else str(v) for v in r) for r in self.entries
        )


AnyPattern = Union[Pattern, GeneralizedPattern]


def as_generalized(pattern: AnyPattern) -> GeneralizedPattern:
    if isinstance(pattern, Pattern):
        return pattern.to_generalized()
    return pattern


def check_enumerable(k: int, l: int) -> None:
    if k < 1 or l < 1:
        raise InvalidPattern(f"pattern dimensions must be positive, got {k}x{l}")
    if k * l > MAX_CELLS:
        raise TooLarge(f"{k}x{l} patterns exceed the {MAX_CELLS}-cell enumeration ceiling")


def rank_of_permutation(values: Sequence[int]) -> int:
    """Lexicographic rank of a sequence of distinct values among its orderings."""
    m = len(values)
    rank = 0
    for i, v in enumerate(values):
        smaller_later = sum(1 for w in values[i + 1:] if w < v)
        rank += smaller_later * factorial(m - 1 - i)
    return rank


def pattern_id(pattern: Pattern) -> int:
    return rank_of_permutation(pattern.flat)


def pattern_from_id(k: int, l: int, pid: int) -> Pattern:
    """
    Inverse of pattern_id for k×ℓ patterns.

    Raises:
        IdOutOfRange: unless 0 <= pid < (kℓ)!
    """
    if k < 1 or l < 1:
        raise InvalidPattern(f"pattern dimensions must be positive, got {k}x{l}")
    m = k * l
    limit = factorial(m)
    if not 0 <= pid < limit:
        raise IdOutOfRange(pid, limit)
    pool = list(range(1, m + 1))
    flat = []
    for i in range(m):
        block = factorial(m - 1 - i)
        digit, pid = divmod(pid, block)
        flat.append(pool.pop(digit))
    return Pattern(tuple(tuple(flat[r * l:(r + 1) * l]) for r in range(k)))


def iter_patterns(k: int, l: int) -> Iterator[Pattern]:
    check_enumerable(k, l)
    for perm in permutations(range(1, k * l + 1)):
        yield Pattern(tuple(tuple(perm[r * l:(r + 1) * l]) for r in range(k)))


def enumerate_patterns(k: int, l: int) -> List[Pattern]:
    """All (kℓ)! k×ℓ patterns, in pattern-id order."""
    return list(iter_patterns(k, l))


def transpose(pattern: Pattern) -> Pattern:
    return Pattern(tuple(zip(*pattern.entries)))


def vflip(pattern: Pattern) -> Pattern:
    """Reverse the row order."""
    return Pattern(tuple(reversed(pattern.entries)))


def hflip(pattern: Pattern) -> Pattern:
    """Reverse the column order."""
    return Pattern(tuple(tuple(reversed(r)) for r in pattern.entries))


def complement(pattern: Pattern) -> Pattern:
    """Map every entry a to kℓ+1-a."""
    top = pattern.k * pattern.l + 1
    return Pattern(tuple(tuple(top - v for v in r) for r in pattern.entries))


TRANSFORMS = {
    "transpose": transpose,
    "vflip": vflip,
    "hflip": hflip,
    "complement": complement,
}
