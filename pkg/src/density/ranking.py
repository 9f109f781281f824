"""
Order-type classification of submatrices.

rank_codes() is the vectorized workhorse shared by the exact and Monte
Carlo engines: it maps every row of an (N, kℓ) value array to the pattern
id of its rank pattern, or TIE when some value repeats.
"""

from math import factorial
from typing import Sequence, Union

import numpy as np

from src.core.patterns import GeneralizedPattern, rank_of_permutation

TIE = -1


def order_class(values: Sequence[Sequence[int]]) -> int:
    """
    Pattern id of the rank pattern of a k×ℓ value grid, or TIE.

    >>> order_class([[5, 1], [2, 9]]) == rank_of_permutation([3, 1, 2, 4])
    True
    """
    flat = [v for row in values for v in row]
    if len(set(flat)) != len(flat):
        return TIE
    return rank_of_permutation(flat)


def _weights(m: int) -> np.ndarray:
    return np.array([factorial(m - 1 - i) for i in range(m)], dtype=np.int64)


def rank_codes(values: np.ndarray) -> np.ndarray:
    """
    Vectorized order_class over the rows of an (N, m) integer array.

    Returns:
        int64 array of length N with pattern ids, TIE where a row has a repeat
    """
    values = np.asarray(values)
    n_rows, m = values.shape
    if m == 1:
        return np.zeros(n_rows, dtype=np.int64)
    upper = np.triu(np.ones((m, m), dtype=bool), 1)
    # later[c, i, j] is True when value j comes after i and is smaller
    later = (values[:, None, :] < values[:, :, None]) & upper
    codes = later.sum(axis=2, dtype=np.int64) @ _weights(m)
    ties = ((values[:, None, :] == values[:, :, None]) & upper).any(axis=(1, 2))
    codes[ties] = TIE
    return codes


def chain_mask(values: np.ndarray, pattern: Union[GeneralizedPattern, Sequence[int]]) -> np.ndarray:
    """
    Rows of values that satisfy a generalized pattern.

    Non-hole cells must be strictly increasing in rank order; a tie between
    two constrained cells fails, cells under holes are ignored.
    """
    chain = pattern.chain() if isinstance(pattern, GeneralizedPattern) else list(pattern)
    values = np.asarray(values)
    if len(chain) < 2:
        return np.ones(values.shape[0], dtype=bool)
    lo = values[:, chain[:-1]]
    hi = values[:, chain[1:]]
    return (lo < hi).all(axis=1)
