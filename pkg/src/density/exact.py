"""
Exact pattern densities in a Latin square.

Every k-subset of rows is paired with every ℓ-subset of columns; the
resulting submatrices are classified in vectorized chunks and the
per-chunk integer histograms are summed, so the result does not depend
on chunking or on the number of worker threads.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, TypeVar

import numpy as np
from scipy.special import comb
from tqdm import tqdm

from src.core.config import get_settings
from src.core.patterns import (
    AnyPattern,
    GeneralizedPattern,
    Pattern,
    as_generalized,
    check_enumerable,
    pattern_id,
)
from src.core.squares import LatinSquare
from src.density.ranking import TIE, chain_mask, rank_codes

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class DensityProfile:
    """
    Exact counts of every k×ℓ pattern in one square.

    counts[pid] is the number of (row subset, column subset) selections whose
    submatrix has rank pattern pid; ties counts selections with a repeated value.
    """
    k: int
    l: int
    n: int
    total: int
    counts: Dict[int, int]
    ties: int

    def __post_init__(self):
        if sum(self.counts.values()) + self.ties != self.total:
            raise ValueError("profile counts and ties do not add up to the total")

    def density(self, pattern) -> Fraction:
        pid = pattern if isinstance(pattern, int) else pattern_id(pattern)
        if self.total == 0:
            return Fraction(0)
        return Fraction(self.counts.get(pid, 0), self.total)

    def densities(self) -> Dict[int, Fraction]:
        return {pid: self.density(pid) for pid in sorted(self.counts)}

    @property
    def tie_fraction(self) -> Fraction:
        if self.total == 0:
            return Fraction(0)
        return Fraction(self.ties, self.total)


def selection_count(n: int, k: int, l: int) -> int:
    """C(n,k)·C(n,ℓ); zero when k>n or ℓ>n."""
    return int(comb(n, k, exact=True)) * int(comb(n, l, exact=True))


def _row_blocks(n: int, k: int, rows_per_block: int) -> Iterator[np.ndarray]:
    subsets = combinations(range(n), k)
    while True:
        block = list(islice(subsets, rows_per_block))
        if not block:
            return
        yield np.array(block, dtype=np.intp)


def _submatrix_values(arr: np.ndarray, rows: np.ndarray, col_sets: np.ndarray) -> np.ndarray:
    """(R·C, kℓ) array of row-major submatrix values for R row sets × C column sets."""
    k = rows.shape[1]
    l = col_sets.shape[1]
    sub = arr[rows][:, :, col_sets]          # (R, k, C, l)
    return sub.transpose(0, 2, 1, 3).reshape(-1, k * l)


def _sweep(
    square: LatinSquare,
    k: int,
    l: int,
    reducer: Callable[[np.ndarray], T],
    threads: Optional[int] = None,
    progress: bool = False,
) -> List[T]:
    """Apply reducer to every chunk of submatrix values; results in chunk order."""
    settings = get_settings()
    threads = threads or settings.threads
    n = square.order
    arr = square.array
    col_sets = np.array(list(combinations(range(n), l)), dtype=np.intp).reshape(-1, l)
    n_row_sets = int(comb(n, k, exact=True))
    rows_per_block = max(1, settings.chunk_cells // max(1, len(col_sets)))
    n_blocks = -(-n_row_sets // rows_per_block)
    logger.debug(
        "sweeping %d row sets x %d column sets in %d chunks on %d threads",
        n_row_sets, len(col_sets), n_blocks, threads,
    )

    def run(rows: np.ndarray) -> T:
        return reducer(_submatrix_values(arr, rows, col_sets))

    blocks = _row_blocks(n, k, rows_per_block)
    bar = tqdm(total=n_blocks, desc=f"{k}x{l} n={n}", disable=not progress)
    results = []
    with bar:
        if threads == 1:
            for rows in blocks:
                results.append(run(rows))
                bar.update()
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for res in pool.map(run, blocks):
                    results.append(res)
                    bar.update()
    return results


def exact_profile(
    square: LatinSquare,
    k: int,
    l: int,
    threads: Optional[int] = None,
    progress: bool = False,
) -> DensityProfile:
    """
    Counts of all (kℓ)! k×ℓ patterns plus ties, in a single sweep.

    Raises:
        TooLarge: if kℓ is above the enumeration ceiling
    """
    check_enumerable(k, l)
    n = square.order
    n_patterns = factorial(k * l)
    total = selection_count(n, k, l)
    hist = np.zeros(n_patterns, dtype=np.int64)
    ties = 0
    if total:
        def reducer(values: np.ndarray):
            codes = rank_codes(values)
            tied = int((codes == TIE).sum())
            return np.bincount(codes[codes != TIE], minlength=n_patterns), tied

        for part, tied in _sweep(square, k, l, reducer, threads, progress):
            hist += part
            ties += tied
    counts = {pid: int(c) for pid, c in enumerate(hist)}
    return DensityProfile(k=k, l=l, n=n, total=total, counts=counts, ties=ties)


def exact_density(square: LatinSquare, pattern: Pattern, threads: Optional[int] = None) -> Fraction:
    """t(A, L) as an exact fraction; 0 when the pattern does not fit."""
    total = selection_count(square.order, pattern.k, pattern.l)
    if total == 0:
        return Fraction(0)
    target = pattern_id(pattern)
    hits = _sweep(
        square, pattern.k, pattern.l,
        lambda values: int((rank_codes(values) == target).sum()),
        threads,
    )
    return Fraction(sum(hits), total)


def generalized_exact_density(
    square: LatinSquare,
    pattern: AnyPattern,
    threads: Optional[int] = None,
) -> Fraction:
    """
    Probability that a uniform selection respects every constrained pair.

    Only pairs of non-hole cells are constrained, strictly; cells under
    holes may take any value.
    """
    gp: GeneralizedPattern = as_generalized(pattern)
    total = selection_count(square.order, gp.k, gp.l)
    if total == 0:
        return Fraction(0)
    chain = gp.chain()
    hits = _sweep(
        square, gp.k, gp.l,
        lambda values: int(chain_mask(values, chain).sum()),
        threads,
    )
    return Fraction(sum(hits), total)
