"""
Exact rational pattern densities in step Latinons.

Sampling k row points and ℓ column points and sorting them by position
gives, per axis, a distribution over sorted interval memberships (a
multinomial over interval lengths) and then over class sequences. Each
cell then draws a value part from its mixture; the resulting k×ℓ matrix
of parts is the support matrix B. Given B, the entries of a part are iid
uniform on that part, so the probability of a pattern is zero unless its
rank order never goes down a part, and otherwise the product over parts
of 1/(constrained cells in the part)!.
"""

import logging
from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import factorial, prod
from typing import Dict, Iterator, Sequence, Tuple

import numpy as np

from src.core.errors import EnumerationBoundExceeded
from src.core.patterns import AnyPattern, as_generalized, check_enumerable
from src.density.ranking import rank_codes
from src.latinon.model import AxisModel, StepLatinon

logger = logging.getLogger(__name__)

MAX_SIDE = 4
MAX_PARTS = 4
MAX_CLASSES = 4

SupportMatrix = Tuple[Tuple[int, ...], ...]


def check_bounds(latinon: StepLatinon, k: int, l: int) -> None:
    """
    Raises:
        EnumerationBoundExceeded: above 4 rows/columns, parts, or classes per axis
    """
    if k > MAX_SIDE or l > MAX_SIDE:
        raise EnumerationBoundExceeded(f"{k}x{l} exceeds the {MAX_SIDE}x{MAX_SIDE} bound")
    if latinon.values.parts > MAX_PARTS:
        raise EnumerationBoundExceeded(f"{latinon.values.parts} value parts exceed {MAX_PARTS}")
    for side, axis in (("row", latinon.row_axis), ("column", latinon.col_axis)):
        if len(axis.labels()) > MAX_CLASSES:
            raise EnumerationBoundExceeded(f"{side} axis has more than {MAX_CLASSES} classes")


def interval_sequence_distribution(axis: AxisModel, k: int) -> Dict[Tuple[int, ...], Fraction]:
    """
    Distribution of the interval indices of k sorted uniform points.

    A non-decreasing sequence with interval counts c_j has probability
    k!/∏c_j! · ∏ λ_j^{c_j}.
    """
    lengths = axis.lengths
    dist = {}
    for seq in combinations_with_replacement(range(len(lengths)), k):
        counts = Counter(seq)
        p = Fraction(factorial(k), prod(factorial(c) for c in counts.values()))
        for interval, c in counts.items():
            p *= lengths[interval] ** c
        dist[seq] = p
    return dist


def class_sequence_distribution(axis: AxisModel, k: int) -> Dict[Tuple[str, ...], Fraction]:
    """Distribution of the class labels of k sorted points."""
    dist: Dict[Tuple[str, ...], Fraction] = defaultdict(Fraction)
    for seq, p in interval_sequence_distribution(axis, k).items():
        for choice in product(*(axis.support(i) for i in seq)):
            labels = tuple(label for label, _ in choice)
            dist[labels] += p * prod((w for _, w in choice), start=Fraction(1))
    return dict(dist)


def support_matrices(
    latinon: StepLatinon, row_classes: Sequence[str], col_classes: Sequence[str]
) -> Iterator[Tuple[SupportMatrix, Fraction]]:
    """Support matrices reachable from fixed row/column classes, with their weights."""
    k, l = len(row_classes), len(col_classes)
    options = [
        [(j, w) for j, w in enumerate(latinon.mixture(rc, cc)) if w]
        for rc in row_classes
        for cc in col_classes
    ]
    for combo in product(*options):
        flat = [j for j, _ in combo]
        yield (
            tuple(tuple(flat[a * l:(a + 1) * l]) for a in range(k)),
            prod((w for _, w in combo), start=Fraction(1)),
        )


@lru_cache(maxsize=64)
def block_matrix_distribution(latinon: StepLatinon, k: int, l: int) -> Dict[SupportMatrix, Fraction]:
    """
    Exact distribution of the k×ℓ support matrix B (value part of every cell).
    """
    check_bounds(latinon, k, l)
    rows = class_sequence_distribution(latinon.row_axis, k)
    cols = class_sequence_distribution(latinon.col_axis, l)
    dist: Dict[SupportMatrix, Fraction] = defaultdict(Fraction)
    for rc, pr in rows.items():
        for cc, pc in cols.items():
            for support, w in support_matrices(latinon, rc, cc):
                dist[support] += pr * pc * w
    logger.debug("%s %dx%d: %d support matrices", latinon.name, k, l, len(dist))
    return dict(dist)


def conditional_probability(pattern: AnyPattern, support: SupportMatrix) -> Fraction:
    """
    Probability of the pattern given the support matrix.

    Constrained cells must never step down a value part along the rank
    order; inside one part all orders of its constrained cells are equally
    likely. Holes are unconstrained.
    """
    gp = as_generalized(pattern)
    return _chain_probability(gp.chain(), gp.l, support)


def _chain_probability(chain: Sequence[int], l: int, support: SupportMatrix) -> Fraction:
    parts = [support[i // l][i % l] for i in chain]
    if any(a > b for a, b in zip(parts, parts[1:])):
        return Fraction(0)
    return Fraction(1, prod(factorial(c) for c in Counter(parts).values()))


def exact_density(latinon: StepLatinon, pattern: AnyPattern) -> Fraction:
    """
    t(A, S) for a pattern or generalized pattern, as an exact fraction.

    Raises:
        EnumerationBoundExceeded: outside the desk-scale bounds
    """
    gp = as_generalized(pattern)
    chain = gp.chain()
    blocks = block_matrix_distribution(latinon, gp.k, gp.l)
    return sum(
        (p * _chain_probability(chain, gp.l, b) for b, p in blocks.items()),
        start=Fraction(0),
    )


def _consistent_rank_rows(support: SupportMatrix) -> np.ndarray:
    """All row-major rank vectors whose order never steps down a part."""
    flat = [j for row in support for j in row]
    groups = [[i for i, j in enumerate(flat) if j == part] for part in sorted(set(flat))]
    rows = []
    for orders in product(*(permutations(g) for g in groups)):
        ranks = [0] * len(flat)
        r = 1
        for order in orders:
            for cell in order:
                ranks[cell] = r
                r += 1
        rows.append(ranks)
    return np.array(rows, dtype=np.int64)


def exact_profile(latinon: StepLatinon, k: int, l: int) -> Dict[int, Fraction]:
    """
    Exact densities of all (kℓ)! k×ℓ patterns, keyed by pattern id.

    Every support matrix spreads its probability evenly over the patterns
    consistent with it, so the profile is built without testing patterns
    one by one.
    """
    check_enumerable(k, l)
    n_patterns = factorial(k * l)
    by_weight: Dict[Fraction, np.ndarray] = {}
    for support, p in block_matrix_distribution(latinon, k, l).items():
        counts = Counter(j for row in support for j in row)
        weight = p / prod(factorial(c) for c in counts.values())
        codes = rank_codes(_consistent_rank_rows(support))
        acc = by_weight.setdefault(weight, np.zeros(n_patterns, dtype=np.int64))
        acc[codes] += 1
    out = {pid: Fraction(0) for pid in range(n_patterns)}
    for w, acc in by_weight.items():
        for pid in np.flatnonzero(acc).tolist():
            out[pid] += w * int(acc[pid])
    return out
