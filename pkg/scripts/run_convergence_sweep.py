"""
CONVERGENCE SWEEP

Certifies random (Jacobson-Matthews) squares and parity blow-ups of
growing order over several seeds, then summarizes the seed-averaged
deviations. Random squares should drift toward the quasirandom point;
parity blow-ups should settle at the doubling Latinon's densities instead
(identity 2x3 pattern at 11/5760 rather than 1/720).

Usage:
    python3 scripts/run_convergence_sweep.py [--orders 20 40 80] [--seeds 10] [--method exact]
"""

import argparse
import os
import sys
from datetime import datetime

import pandas as pd
from scipy import stats

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.analysis.sweep import seed_average, sweep, write_sweep_csv
from src.core.patterns import Pattern

IDENTITY_2X3 = Pattern.from_rows([[1, 2, 3], [4, 5, 6]])
OUTPUT_DIR = os.path.join(os.path.dirname(__file__), '..', 'data', 'analysis')


def trend(summary: pd.DataFrame, kind: str, stat: str) -> pd.Series:
    rows = summary[(summary["kind"] == kind) & (summary["stat"] == stat)]
    return rows.set_index("order")["mean"].sort_index()


def report_kind(summary: pd.DataFrame, kind: str, lines: list) -> None:
    lines.append(f"{kind.upper()}")
    lines.append("-" * 70)
    for stat in ("max_dev", "l1_dev", "corner", "corner_untied", "tie_fraction", "density"):
        series = trend(summary, kind, stat)
        if series.empty:
            continue
        values = "  ".join(f"n={n}: {v:.6g}" for n, v in series.items())
        lines.append(f"  {stat:<13} {values}")

    max_dev = trend(summary, kind, "max_dev")
    if len(max_dev) >= 3:
        rho, p = stats.spearmanr(max_dev.index, max_dev.values)
        lines.append(f"  Spearman(order, max_dev): rho={rho:.3f}, p={p:.3f}")
    if max_dev.is_monotonic_decreasing:
        lines.append("  ✓ max_dev decreases with the order")
    else:
        lines.append("  ✗ max_dev does not decrease monotonically")

    density = trend(summary, kind, "density")
    if not density.empty:
        gap = (density - 11 / 5760).abs()
        lines.append(f"  gap to 11/5760 at the largest order: {gap.iloc[-1]:.3g}")
    lines.append("")


def main():
    parser = argparse.ArgumentParser(description="Seed-averaged certification sweep")
    parser.add_argument("--kinds", nargs="+", default=["jm", "parity-blowup"])
    parser.add_argument("--orders", nargs="+", type=int, default=[20, 40, 80])
    parser.add_argument("--seeds", type=int, default=10, help="number of seeds (0..seeds-1)")
    parser.add_argument("--method", choices=("exact", "mc"), default="exact")
    parser.add_argument("--samples", type=int, default=10 ** 6)
    args = parser.parse_args()

    print("\n" + "=" * 70)
    print("CONVERGENCE SWEEP")
    print(f"kinds={args.kinds} orders={args.orders} seeds={args.seeds} method={args.method}")
    print("=" * 70 + "\n")

    frame = sweep(
        args.kinds, args.orders, range(args.seeds), [IDENTITY_2X3],
        method=args.method, samples=args.samples, progress=True,
    )
    summary = seed_average(frame)

    lines = [
        "=" * 70,
        "CONVERGENCE SWEEP SUMMARY",
        "=" * 70,
        "",
        f"Seeds per (kind, order): {args.seeds}",
        f"Method: {args.method}",
        "",
    ]
    for kind in args.kinds:
        report_kind(summary, kind, lines)
    text = "\n".join(lines)
    print(text)

    os.makedirs(OUTPUT_DIR, exist_ok=True)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    csv_path = os.path.join(OUTPUT_DIR, f"convergence_sweep_{timestamp}.csv")
    report_path = os.path.join(OUTPUT_DIR, f"convergence_sweep_{timestamp}.txt")
    write_sweep_csv(frame, csv_path)
    with open(report_path, 'w') as f:
        f.write(text + "\n")

    print("=" * 70)
    print(f"Rows saved to: {csv_path}")
    print(f"Report saved to: {report_path}")
    print("=" * 70 + "\n")


if __name__ == "__main__":
    main()
