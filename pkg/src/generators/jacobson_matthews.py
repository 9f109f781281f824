"""
Random Latin squares via the Jacobson–Matthews Markov chain.

The square is held as an n×n×n incidence cube M[r, c, s] in {-1, 0, 1}.
Proper states are Latin squares; improper states have exactly one -1 cell.
Each move adds +1 on four cells and -1 on four cells of a 2×2×2 sub-cube.
The walk starts from the cyclic square and only stops in a proper state.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from tqdm import tqdm

from src.core.errors import GenerationError, InvalidOrder
from src.core.squares import LatinSquare, validate_latin

logger = logging.getLogger(__name__)

BURN_IN_FACTOR = 5


class _Draws:
    """Buffered integer and bit draws; consumption order fixes the stream."""

    def __init__(self, rng: np.random.Generator, n: int, batch: int = 1 << 14):
        self.rng = rng
        self.n = n
        self.batch = batch
        self._ints = np.empty(0, dtype=np.int64)
        self._bits = np.empty(0, dtype=np.int64)
        self._i = 0
        self._b = 0

    def index(self) -> int:
        if self._i == len(self._ints):
            self._ints = self.rng.integers(0, self.n, size=self.batch)
            self._i = 0
        v = int(self._ints[self._i])
        self._i += 1
        return v

    def bit(self) -> int:
        if self._b == len(self._bits):
            self._bits = self.rng.integers(0, 2, size=self.batch)
            self._b = 0
        v = int(self._bits[self._b])
        self._b += 1
        return v


def _cyclic_cube(n: int) -> np.ndarray:
    cube = np.zeros((n, n, n), dtype=np.int8)
    idx = np.arange(n)
    cube[idx[:, None], idx[None, :], (idx[:, None] + idx[None, :]) % n] = 1
    return cube


def _move(cube: np.ndarray, r: int, c: int, s: int, r1: int, c1: int, s1: int) -> None:
    cube[r, c, s] += 1
    cube[r, c1, s1] += 1
    cube[r1, c, s1] += 1
    cube[r1, c1, s] += 1
    cube[r, c, s1] -= 1
    cube[r, c1, s] -= 1
    cube[r1, c, s] -= 1
    cube[r1, c1, s1] -= 1


def _one(line: np.ndarray) -> int:
    return int(np.flatnonzero(line == 1)[0])


def _pick(line: np.ndarray, draws: _Draws) -> int:
    both = np.flatnonzero(line == 1)
    return int(both[draws.bit()])


def jm_walk(
    n: int,
    seed: int,
    steps: Optional[int] = None,
    progress: bool = False,
) -> Tuple[np.ndarray, int]:
    """
    Run the chain for at least `steps` moves, then until proper.

    Returns:
        (cube, moves actually made)
    """
    steps = BURN_IN_FACTOR * n ** 3 if steps is None else steps
    if steps < 1:
        raise InvalidOrder(f"steps must be at least 1, got {steps}")
    draws = _Draws(np.random.default_rng(seed), n)
    cube = _cyclic_cube(n)
    improper: Optional[Tuple[int, int, int]] = None
    moves = 0
    with tqdm(total=steps, desc=f"jm n={n}", disable=not progress) as bar:
        while moves < steps or improper is not None:
            if improper is None:
                while True:
                    r, c, s = draws.index(), draws.index(), draws.index()
                    if cube[r, c, s] == 0:
                        break
                r1 = _one(cube[:, c, s])
                c1 = _one(cube[r, :, s])
                s1 = _one(cube[r, c, :])
            else:
                r, c, s = improper
                r1 = _pick(cube[:, c, s], draws)
                c1 = _pick(cube[r, :, s], draws)
                s1 = _pick(cube[r, c, :], draws)
            _move(cube, r, c, s, r1, c1, s1)
            improper = (r1, c1, s1) if cube[r1, c1, s1] < 0 else None
            moves += 1
            if moves <= steps:
                bar.update()
    logger.debug("jm walk n=%d seed=%d finished after %d moves", n, seed, moves)
    return cube, moves


def gen_jm(n: int, seed: int, steps: Optional[int] = None, progress: bool = False) -> LatinSquare:
    """
    Random order-n Latin square from a seeded Jacobson–Matthews walk.

    Args:
        n: order, at least 2
        seed: master seed; (n, seed, steps) fixes the output
        steps: number of moves, default 5·n³

    Raises:
        InvalidOrder: if n < 2 or steps < 1
        GenerationError: if the final cube is not Latin
    """
    if n < 2:
        raise InvalidOrder(f"Jacobson-Matthews needs n >= 2, got {n}")
    cube, _ = jm_walk(n, seed, steps, progress)
    if not ((cube == 0) | (cube == 1)).all():
        raise GenerationError("walk ended in an improper state")
    grid = np.argmax(cube, axis=2) + 1
    try:
        return validate_latin(grid.tolist())
    except ValueError as e:
        raise GenerationError(f"walk produced an invalid square: {e}") from e
