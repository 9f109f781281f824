"""
Seeded Monte Carlo estimation of pattern densities in a Latin square.

Samples are drawn in fixed-size blocks. Block b gets its own counter-based
Philox stream keyed by (seed, b), so the summed hit counts are identical
for a fixed (seed, N) whatever the number of threads.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial, sqrt
from typing import Callable, Dict, List, Optional, TypeVar

import numpy as np
from tqdm import tqdm

from src.core.config import get_settings
from src.core.errors import ZeroSamples
from src.core.patterns import AnyPattern, Pattern, as_generalized, check_enumerable, pattern_id
from src.core.squares import LatinSquare
from src.density.ranking import TIE, chain_mask, rank_codes

logger = logging.getLogger(__name__)

MC_BLOCK_SIZE = 1 << 16

T = TypeVar("T")


@dataclass(frozen=True)
class McEstimate:
    """
    A Monte Carlo density estimate.

    hits is None for Rao-Blackwellized estimates, whose per-sample
    contributions are conditional probabilities rather than 0/1 outcomes.
    """
    estimate: float
    samples: int
    hits: Optional[int]
    std_error: float
    seed: int

    @classmethod
    def from_hits(cls, hits: int, samples: int, seed: int) -> "McEstimate":
        p = hits / samples
        return cls(
            estimate=p,
            samples=samples,
            hits=hits,
            std_error=sqrt(p * (1.0 - p) / samples),
            seed=seed,
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            "estimate": self.estimate,
            "samples": self.samples,
            "hits": self.hits,
            "std_error": self.std_error,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class McProfile:
    """Estimates of every k×ℓ pattern and of the tie mass from one sample stream."""
    k: int
    l: int
    n: int
    samples: int
    seed: int
    estimates: Dict[int, McEstimate]
    ties: McEstimate


def block_rng(seed: int, block: int) -> np.random.Generator:
    """Counter-based generator for one block of samples."""
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(entropy=int(seed), spawn_key=(int(block),)))
    )


def sample_sorted_subsets(rng: np.random.Generator, n: int, k: int, size: int) -> np.ndarray:
    """
    `size` uniform k-subsets of range(n), each sorted ascending.

    Small n uses random-key sorting; otherwise k iid draws are rejected and
    redrawn until distinct, which is uniform over subsets.
    """
    if n <= 4 * k:
        keys = rng.random((size, n))
        picks = np.argsort(keys, axis=1)[:, :k]
        return np.sort(picks, axis=1)
    out = np.sort(rng.integers(0, n, size=(size, k)), axis=1)
    bad = (np.diff(out, axis=1) == 0).any(axis=1)
    while bad.any():
        redraw = np.sort(rng.integers(0, n, size=(int(bad.sum()), k)), axis=1)
        out[bad] = redraw
        bad = (np.diff(out, axis=1) == 0).any(axis=1)
    return out


def run_blocks(
    samples: int,
    seed: int,
    block_fn: Callable[[np.random.Generator, int], T],
    threads: Optional[int] = None,
    progress: bool = False,
    desc: str = "mc",
) -> List[T]:
    """
    Evaluate block_fn(rng, size) on every block; results are in block order.

    Raises:
        ZeroSamples: if samples < 1
    """
    if samples < 1:
        raise ZeroSamples()
    threads = threads or get_settings().threads
    sizes = [
        min(MC_BLOCK_SIZE, samples - start)
        for start in range(0, samples, MC_BLOCK_SIZE)
    ]

    def run(block: int) -> T:
        return block_fn(block_rng(seed, block), sizes[block])

    logger.debug("%d samples in %d blocks, seed=%d", samples, len(sizes), seed)
    with tqdm(total=len(sizes), desc=desc, disable=not progress) as bar:
        if threads == 1:
            out = []
            for b in range(len(sizes)):
                out.append(run(b))
                bar.update()
            return out
        with ThreadPoolExecutor(max_workers=threads) as pool:
            out = []
            for res in pool.map(run, range(len(sizes))):
                out.append(res)
                bar.update()
            return out


def sample_submatrix_values(
    rng: np.random.Generator, square: LatinSquare, k: int, l: int, size: int
) -> np.ndarray:
    """(size, kℓ) row-major values of uniformly sampled k×ℓ submatrices."""
    n = square.order
    rows = sample_sorted_subsets(rng, n, k, size)
    cols = sample_sorted_subsets(rng, n, l, size)
    values = square.array[rows[:, :, None], cols[:, None, :]]
    return values.reshape(size, k * l)


def mc_density(
    square: LatinSquare,
    pattern: AnyPattern,
    samples: int,
    seed: int,
    threads: Optional[int] = None,
    progress: bool = False,
) -> McEstimate:
    """
    Estimate t(A, L) from `samples` independent uniform selections.

    Plain patterns are matched by order type; generalized patterns by
    their constrained pairs only.
    """
    if samples < 1:
        raise ZeroSamples()
    k, l = pattern.k, pattern.l
    if k > square.order or l > square.order:
        return McEstimate(0.0, samples, 0, 0.0, seed)

    if isinstance(pattern, Pattern):
        target = pattern_id(pattern)

        def block_fn(rng, size):
            values = sample_submatrix_values(rng, square, k, l, size)
            return int((rank_codes(values) == target).sum())
    else:
        chain = as_generalized(pattern).chain()

        def block_fn(rng, size):
            values = sample_submatrix_values(rng, square, k, l, size)
            return int(chain_mask(values, chain).sum())

    hits = sum(run_blocks(samples, seed, block_fn, threads, progress))
    return McEstimate.from_hits(hits, samples, seed)


def mc_profile(
    square: LatinSquare,
    k: int,
    l: int,
    samples: int,
    seed: int,
    threads: Optional[int] = None,
    progress: bool = False,
) -> McProfile:
    """Estimate every k×ℓ pattern density and the tie mass from shared samples."""
    check_enumerable(k, l)
    if samples < 1:
        raise ZeroSamples()
    n_patterns = factorial(k * l)
    hist = np.zeros(n_patterns, dtype=np.int64)
    ties = 0
    if k <= square.order and l <= square.order:
        def block_fn(rng, size):
            codes = rank_codes(sample_submatrix_values(rng, square, k, l, size))
            return np.bincount(codes[codes != TIE], minlength=n_patterns), int((codes == TIE).sum())

        for part, tied in run_blocks(samples, seed, block_fn, threads, progress, f"mc {k}x{l}"):
            hist += part
            ties += tied
    estimates = {
        pid: McEstimate.from_hits(int(c), samples, seed) for pid, c in enumerate(hist)
    }
    return McProfile(
        k=k, l=l, n=square.order, samples=samples, seed=seed,
        estimates=estimates, ties=McEstimate.from_hits(ties, samples, seed),
    )
