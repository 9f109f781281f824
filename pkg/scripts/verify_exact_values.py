"""
VERIFY EXACT VALUES

Recomputes every closed-form density and count the library is expected to
reproduce and prints a ✓/✗ line for each.

Usage:
    python3 scripts/verify_exact_values.py
"""

import os
import sys
from fractions import Fraction
from math import factorial
from typing import List

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.analysis.certification import classify_56, corner_statistic
from src.analysis.eliminability import enumerate_small_generalized_patterns, is_eliminable
from src.analysis.suite import SUITE_TARGET, suite_72_report
from src.core.patterns import GeneralizedPattern, Pattern, enumerate_patterns
from src.density.exact import exact_profile as square_profile
from src.generators import gen_cyclic
from src.latinon import (
    block_matrix_distribution,
    check_axioms,
    doubling,
    exact_density,
    exact_profile,
    quadrant,
    uniform,
)


def check(label: str, actual, expected) -> bool:
    ok = actual == expected
    mark = "✓" if ok else "✗"
    print(f"  {mark} {label}: {actual}" + ("" if ok else f" (expected {expected})"))
    return ok


def latinon_checks() -> List[bool]:
    print("Step Latinons")
    results = []
    for make in (uniform, doubling, quadrant):
        results.append(check(f"{make.__name__} satisfies the marginal identities", check_axioms(make()).passed, True))
    for make in (doubling, quadrant):
        blocks = block_matrix_distribution(make(), 2, 2)
        results.append(check(f"{make.__name__}: 2x2 support matrices", len(blocks), 8))
        results.append(check(f"{make.__name__}: each with probability", set(blocks.values()), {Fraction(1, 8)}))
        results.append(check(
            f"{make.__name__}: every 2x2 density",
            set(exact_profile(make(), 2, 2).values()),
            {Fraction(1, 24)},
        ))
    for n in range(1, 5):
        values = {exact_density(doubling(), p) for p in enumerate_patterns(1, n)}
        results.append(check(f"doubling: 1x{n} densities", values, {Fraction(1, factorial(n))}))
    identity = Pattern.from_rows([[1, 2, 3], [4, 5, 6]])
    results.append(check("doubling: identity 2x3 density", exact_density(doubling(), identity), Fraction(11, 5760)))
    for make in (uniform, doubling, quadrant):
        corner = corner_statistic(exact_profile(make(), 2, 3))
        expected = "= 1/5" if make is uniform else "> 1/5"
        actual = "= 1/5" if corner == Fraction(1, 5) else ("> 1/5" if corner > Fraction(1, 5) else "< 1/5")
        results.append(check(f"{make.__name__}: corner statistic {corner}", actual, expected))
    print()
    return results


def square_checks() -> List[bool]:
    print("Latin squares")
    results = []
    profile = square_profile(gen_cyclic(3), 2, 2)
    results.append(check("cyclic 3: 2x2 (total, ties)", (profile.total, profile.ties), (9, 9)))
    same, rest = classify_56()
    results.append(check("2x3 patterns split by the column of 5 and 6", (len(same), len(rest)), (144, 576)))
    print()
    return results


def eliminability_checks() -> List[bool]:
    print("Eliminability")
    results = []
    example = GeneralizedPattern.from_rows([[2, 3, None], [None, 4, 1]])
    results.append(check("[[2,3,*],[*,4,1]] eliminable", is_eliminable(example).eliminable, True))
    blocked = [g for g in enumerate_small_generalized_patterns(4, 4) if not is_eliminable(g).eliminable]
    results.append(check("non-eliminable patterns with at most 4 entries", len(blocked), 24))
    results.append(check(
        "all of them full 2x2",
        all(g.is_full and (g.k, g.l) == (2, 2) for g in blocked),
        True,
    ))
    report = suite_72_report(uniform())
    results.append(check(
        "72-pattern suite on uniform",
        {d for _, d in report.densities},
        {SUITE_TARGET},
    ))
    doubling_report = suite_72_report(doubling())
    print(f"    doubling: {len(doubling_report.deviating)} of 72 suite members deviate from {SUITE_TARGET}")
    print()
    return results


def main():
    print("=" * 70)
    print("EXACT VALUE VERIFICATION")
    print("=" * 70)
    print()

    results: List[bool] = []
    for section in (latinon_checks, square_checks, eliminability_checks):
        results.extend(section())

    passed = sum(results)
    print("=" * 70)
    if passed == len(results):
        print(f"✅ ALL {len(results)} CHECKS PASSED")
    else:
        print(f"❌ {len(results) - passed} OF {len(results)} CHECKS FAILED")
    print("=" * 70)
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
