"""
Convergence sweeps over generated squares.

One row per (kind, order, seed, statistic), written as CSV for external
plotting. Exact sweeps carry numerator/denominator columns; Monte Carlo
sweeps leave them empty and fill value_float only.
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

import pandas as pd

from src.analysis.certification import certify
from src.core.patterns import Pattern, pattern_id
from src.core.rational import derive_seed
from src.density.exact import exact_profile
from src.density.montecarlo import mc_profile
from src.generators import generate

logger = logging.getLogger(__name__)

COLUMNS = ["kind", "order", "seed", "stat", "pattern_id", "value_num", "value_den", "value_float"]
STATS = ("max_dev", "l1_dev", "corner", "corner_untied", "tie_fraction")

Value = Union[Fraction, float]


def _row(kind: str, order: int, seed: int, stat: str, value: Value, pid: Optional[int] = None) -> dict:
    exact = isinstance(value, Fraction)
    return {
        "kind": kind,
        "order": order,
        "seed": seed,
        "stat": stat,
        "pattern_id": pid,
        "value_num": value.numerator if exact else None,
        "value_den": value.denominator if exact else None,
        "value_float": float(value),
    }


def sweep(
    kinds: Iterable[str],
    orders: Iterable[int],
    seeds: Iterable[int],
    targets: Sequence[Pattern] = (),
    method: str = "exact",
    samples: int = 10 ** 6,
    threads: Optional[int] = None,
    progress: bool = False,
) -> pd.DataFrame:
    """
    Certify every generated square and tabulate deviations and densities.

    Args:
        kinds: generator kinds (see src.generators.KINDS)
        orders: square orders, each valid for every kind
        seeds: master seeds; generation and sampling derive from them
        targets: 2×3 patterns whose densities get their own rows
        method: "exact" (full enumeration) or "mc" (samples per square)
    """
    if method not in ("exact", "mc"):
        raise ValueError(f"method must be 'exact' or 'mc', got {method!r}")
    target_ids = [pattern_id(p) for p in targets]
    seeds = list(seeds)
    orders = list(orders)
    rows: List[dict] = []
    for kind in kinds:
        for order in orders:
            for seed in seeds:
                square = generate(kind, order, seed)
                if method == "exact":
                    profile = exact_profile(square, 2, 3, threads, progress)
                else:
                    profile = mc_profile(
                        square, 2, 3, samples, derive_seed(seed, "sweep-mc"), threads, progress
                    )
                report = certify(profile, 0)
                for stat in STATS:
                    rows.append(_row(kind, order, seed, stat, getattr(report, stat)))
                for pid in target_ids:
                    v = report.densities[pid]
                    rows.append(_row(kind, order, seed, "density", getattr(v, "estimate", v), pid))
                logger.info("%s n=%d seed=%d max_dev=%.3g", kind, order, seed, float(report.max_dev))
    frame = pd.DataFrame(rows, columns=COLUMNS)
    return frame.astype({"pattern_id": "Int64", "value_num": "Int64", "value_den": "Int64"})


def seed_average(frame: pd.DataFrame) -> pd.DataFrame:
    """Mean and spread of value_float over seeds, per kind/order/stat/pattern."""
    keys = ["kind", "order", "stat", "pattern_id"]
    return (
        frame.groupby(keys, dropna=False)["value_float"]
        .agg(["mean", "std", "count"])
        .reset_index()
    )


def write_sweep_csv(frame: pd.DataFrame, path: Union[str, Path]) -> None:
    frame.to_csv(path, index=False)
