"""
The 72 generalized 2×3 patterns and eliminable-pattern density checks.

Each suite member has 5 directly above the hole in one of the three
columns, and the other four cells hold 1..4 in one of the 24 orders. A
Latinon where all 72 have density 1/120 already satisfies the 2×3
criterion.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import List, Optional, Tuple

from src.core.errors import NotEliminable
from src.core.patterns import AnyPattern, GeneralizedPattern, as_generalized
from src.analysis.eliminability import is_eliminable
from src.latinon.exact import exact_density
from src.latinon.model import StepLatinon, doubling

SUITE_TARGET = Fraction(1, 120)


def suite_72() -> List[GeneralizedPattern]:
    """Shapes in order: 5 over the hole in column 3, then column 2, then column 1."""
    members = []
    for column in (2, 1, 0):
        slots = [(i, j) for i in range(2) for j in range(3) if j != column]
        for order in permutations(range(1, 5)):
            grid: List[List[Optional[int]]] = [[None] * 3 for _ in range(2)]
            grid[0][column] = 5
            for (i, j), v in zip(slots, order):
                grid[i][j] = v
            members.append(GeneralizedPattern.from_rows(grid))
    return members


@dataclass(frozen=True)
class SuiteReport:
    latinon: str
    densities: Tuple[Tuple[GeneralizedPattern, Fraction], ...]

    @property
    def deviating(self) -> List[Tuple[GeneralizedPattern, Fraction]]:
        return [(g, d) for g, d in self.densities if d != SUITE_TARGET]

    @property
    def passed(self) -> bool:
        return not self.deviating


def suite_72_report(latinon: StepLatinon) -> SuiteReport:
    """Exact density of every suite member on a Latinon."""
    return SuiteReport(
        latinon.name,
        tuple((g, exact_density(latinon, g)) for g in suite_72()),
    )


def eliminable_density_check(
    pattern: AnyPattern, latinon: Optional[StepLatinon] = None
) -> Fraction:
    """
    Exact density of an eliminable pattern, to compare against 1/m!.

    Defaults to the doubling Latinon, which is not quasirandom.

    Raises:
        NotEliminable: if the pattern is not eliminable
    """
    gp = as_generalized(pattern)
    if not is_eliminable(gp).eliminable:
        raise NotEliminable(f"pattern is not eliminable:\n{gp}")
    return exact_density(latinon or doubling(), gp)


def expected_eliminable_density(pattern: AnyPattern) -> Fraction:
    """1/m! for m non-hole entries."""
    return Fraction(1, factorial(as_generalized(pattern).m))
