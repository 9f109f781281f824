"""
Latin square generators: cyclic, Jacobson–Matthews random, two-class blow-ups.
"""

from typing import Optional

from src.core.errors import InvalidOrder
from src.core.rational import derive_seed
from src.core.squares import LatinSquare
from src.generators.blowup import blowup, parity_classes, quadrant_classes
from src.generators.cyclic import gen_cyclic
from src.generators.jacobson_matthews import gen_jm

KINDS = ("cyclic", "jm", "parity-blowup", "quadrant-blowup")


def default_inner(m: int, seed: int, steps: Optional[int] = None) -> LatinSquare:
    """Random inner square for a blow-up; order 1 has only the trivial square."""
    if m == 1:
        return gen_cyclic(1)
    return gen_jm(m, derive_seed(seed, "inner"), steps)


def generate(
    kind: str,
    order: int,
    seed: int = 0,
    steps: Optional[int] = None,
    inner: Optional[LatinSquare] = None,
    progress: bool = False,
) -> LatinSquare:
    """
    Build a square of the named kind.

    Blow-up kinds need an even order (parity) or an order divisible by 4
    (quadrant); without `inner` they use a jm square of half the order.
    """
    if kind == "cyclic":
        return gen_cyclic(order)
    if kind == "jm":
        return gen_jm(order, seed, steps, progress)
    if kind in ("parity-blowup", "quadrant-blowup"):
        if order < 2 or order % 2:
            raise InvalidOrder(f"{kind} needs an even order, got {order}")
        m = order // 2
        classes = parity_classes(m) if kind == "parity-blowup" else quadrant_classes(m)
        if inner is None:
            inner = default_inner(m, seed, steps)
        elif inner.order != m:
            raise InvalidOrder(f"inner square has order {inner.order}, expected {m}")
        return blowup(inner, classes)
    raise InvalidOrder(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


__all__ = [
    "KINDS",
    "blowup",
    "default_inner",
    "gen_cyclic",
    "gen_jm",
    "generate",
    "parity_classes",
    "quadrant_classes",
]
