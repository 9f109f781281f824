"""
ESTIMATOR CONSISTENCY

Checks the Monte Carlo estimators against exact values:
1. mc_density on an order-30 random square vs exact enumeration,
   for randomly chosen 2x3 patterns
2. rb_mc_density on the doubling Latinon vs exact Latinon densities,
   for all 2x2 patterns

Reports how often the exact value falls within 4 standard errors, and a
binomial test of that coverage against the nominal normal coverage.

Usage:
    python3 scripts/estimator_consistency.py [--patterns 50] [--samples 1000000]
"""

import argparse
import os
import random
import sys
from typing import List, Tuple

from scipy import stats

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.core.patterns import enumerate_patterns, pattern_from_id, pattern_id
from src.density.exact import exact_profile
from src.density.montecarlo import mc_density
from src.generators import gen_jm
from src.latinon import doubling, exact_density, rb_mc_density

Z = 4.0


def coverage_line(label: str, hits: List[bool]) -> None:
    covered = sum(hits)
    nominal = 1 - 2 * stats.norm.sf(Z)
    test = stats.binomtest(covered, len(hits), nominal, alternative="less")
    mark = "✓" if covered >= 0.95 * len(hits) else "✗"
    print(f"  {mark} {label}: {covered}/{len(hits)} within {Z:g} SE "
          f"(nominal {nominal:.5f}, p={test.pvalue:.3g})")


def square_consistency(order: int, n_patterns: int, samples: int, seed: int) -> List[bool]:
    print(f"mc_density vs exact, jm order {order} (seed {seed})")
    square = gen_jm(order, seed)
    profile = exact_profile(square, 2, 3, progress=True)
    ids = random.Random(seed).sample(range(720), n_patterns)
    hits = []
    worst: Tuple[float, int] = (0.0, -1)
    for pid in ids:
        est = mc_density(square, pattern_from_id(2, 3, pid), samples, seed=pid)
        z = abs(est.estimate - float(profile.density(pid))) / est.std_error if est.std_error else 0.0
        hits.append(z <= Z)
        worst = max(worst, (z, pid))
    print(f"    largest |z| = {worst[0]:.2f} (pattern {worst[1]})")
    return hits


def latinon_consistency(samples: int) -> List[bool]:
    print("rb_mc_density vs exact, doubling Latinon, all 2x2 patterns")
    latinon = doubling()
    hits = []
    for p in enumerate_patterns(2, 2):
        exact = float(exact_density(latinon, p))
        est = rb_mc_density(latinon, p, samples, seed=pattern_id(p))
        hits.append(abs(est.estimate - exact) <= Z * est.std_error + 1e-12)
    return hits


def main():
    parser = argparse.ArgumentParser(description="Monte Carlo vs exact coverage")
    parser.add_argument("--order", type=int, default=30)
    parser.add_argument("--patterns", type=int, default=50)
    parser.add_argument("--samples", type=int, default=10 ** 6)
    parser.add_argument("--latinon-samples", type=int, default=10 ** 5)
    parser.add_argument("--seed", type=int, default=5)
    args = parser.parse_args()

    print("=" * 70)
    print("ESTIMATOR CONSISTENCY")
    print("=" * 70)
    print()

    hits = square_consistency(args.order, args.patterns, args.samples, args.seed)
    coverage_line("plain Monte Carlo", hits)
    print()

    hits = latinon_consistency(args.latinon_samples)
    coverage_line("Rao-Blackwellized Monte Carlo", hits)
    print()
    print("=" * 70)


if __name__ == "__main__":
    main()
