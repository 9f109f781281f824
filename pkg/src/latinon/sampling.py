"""
Rao-Blackwellized Monte Carlo for step Latinons.

Each sample draws k sorted row positions and ℓ sorted column positions,
then the class of every point. Instead of drawing values and testing the
pattern, the sample contributes the exact probability of the pattern given
those classes, so only the position and class randomness is left in the
estimate. Blocks follow the same seeded contract as square estimation.
"""

import logging
from collections import Counter
from fractions import Fraction
from math import sqrt
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.core.errors import ZeroSamples
from src.core.patterns import AnyPattern
from src.density.montecarlo import McEstimate, run_blocks
from src.latinon.exact import check_bounds, conditional_probability, support_matrices
from src.latinon.model import AxisModel, StepLatinon

logger = logging.getLogger(__name__)


def _intervals(axis: AxisModel, positions: np.ndarray) -> np.ndarray:
    inner = np.array([float(b) for b in axis.breakpoints[1:-1]])
    return np.searchsorted(inner, positions, side="right")


def _class_table(axis: AxisModel) -> Tuple[List[str], np.ndarray]:
    """Labels and per-interval cumulative weights, last column pinned to +inf."""
    labels = axis.labels()
    cum = np.array(
        [np.cumsum([float(dist.get(label, 0)) for label in labels]) for dist in axis.classes]
    )
    cum[:, -1] = np.inf
    return labels, cum


def _sample_classes(
    rng: np.random.Generator, axis: AxisModel, cum: np.ndarray, k: int, size: int
) -> np.ndarray:
    positions = np.sort(rng.random((size, k)), axis=1)
    intervals = _intervals(axis, positions)
    u = rng.random((size, k))
    return (cum[intervals] <= u[..., None]).sum(axis=-1)


def _encode(classes: np.ndarray, base: int) -> np.ndarray:
    weights = base ** np.arange(classes.shape[1] - 1, -1, -1, dtype=np.int64)
    return classes.astype(np.int64) @ weights


def _decode(code: int, base: int, length: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(length):
        code, d = divmod(code, base)
        digits.append(d)
    return tuple(reversed(digits))


def rb_mc_density(
    latinon: StepLatinon,
    pattern: AnyPattern,
    samples: int,
    seed: int,
    threads: Optional[int] = None,
    progress: bool = False,
) -> McEstimate:
    """
    Estimate t(A, S) with exact conditional contributions.

    The estimate and its sample variance are accumulated as fractions, so
    a model where every class configuration gives the same conditional
    probability (e.g. uniform()) returns that value with zero std_error.

    Raises:
        ZeroSamples: if samples < 1
        EnumerationBoundExceeded: outside the desk-scale bounds
    """
    if samples < 1:
        raise ZeroSamples()
    k, l = pattern.k, pattern.l
    check_bounds(latinon, k, l)
    row_labels, row_cum = _class_table(latinon.row_axis)
    col_labels, col_cum = _class_table(latinon.col_axis)
    col_span = len(col_labels) ** l

    def block_fn(rng, size):
        rows = _sample_classes(rng, latinon.row_axis, row_cum, k, size)
        cols = _sample_classes(rng, latinon.col_axis, col_cum, l, size)
        codes = _encode(rows, len(row_labels)) * col_span + _encode(cols, len(col_labels))
        found, counts = np.unique(codes, return_counts=True)
        return Counter(dict(zip(found.tolist(), counts.tolist())))

    tally: Counter = Counter()
    for part in run_blocks(samples, seed, block_fn, threads, progress, "rb-mc"):
        tally.update(part)

    values: Dict[int, Fraction] = {}
    for code in tally:
        row_code, col_code = divmod(code, col_span)
        rc = [row_labels[i] for i in _decode(row_code, len(row_labels), k)]
        cc = [col_labels[i] for i in _decode(col_code, len(col_labels), l)]
        values[code] = sum(
            (w * conditional_probability(pattern, b) for b, w in support_matrices(latinon, rc, cc)),
            start=Fraction(0),
        )
    logger.debug("rb-mc: %d distinct class configurations", len(values))

    mean = sum((c * values[code] for code, c in tally.items()), start=Fraction(0)) / samples
    if samples > 1:
        var = sum(
            (c * (values[code] - mean) ** 2 for code, c in tally.items()), start=Fraction(0)
        ) / (samples - 1)
    else:
        var = Fraction(0)
    return McEstimate(
        estimate=float(mean),
        samples=samples,
        hits=None,
        std_error=sqrt(float(var) / samples),
        seed=seed,
    )


def sample_interval_frequencies(
    axis: AxisModel,
    k: int,
    samples: int,
    seed: int,
    threads: Optional[int] = None,
) -> Dict[Tuple[int, ...], McEstimate]:
    """
    Empirical frequencies of the sorted interval memberships of k points.

    The Monte Carlo counterpart of interval_sequence_distribution, e.g. two
    points of the quadrant model land in (Q, upper P) about a quarter of
    the time.
    """
    if samples < 1:
        raise ZeroSamples()
    p = len(axis.lengths)

    def block_fn(rng, size):
        positions = np.sort(rng.random((size, k)), axis=1)
        found, counts = np.unique(_encode(_intervals(axis, positions), p), return_counts=True)
        return Counter(dict(zip(found.tolist(), counts.tolist())))

    tally: Counter = Counter()
    for part in run_blocks(samples, seed, block_fn, threads):
        tally.update(part)
    return {
        _decode(code, p, k): McEstimate.from_hits(int(c), samples, seed)
        for code, c in sorted(tally.items())
    }
