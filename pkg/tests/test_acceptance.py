"""
Long-running statistical checks on generated squares and Latinons.

Deselected by default; run with `pytest -m slow`.
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from src.analysis.certification import certify
from src.analysis.sweep import seed_average, sweep
from src.core.patterns import Pattern, enumerate_patterns, pattern_from_id, pattern_id
from src.density.exact import exact_profile
from src.density.montecarlo import mc_density, mc_profile
from src.generators import gen_jm, generate
from src.latinon import doubling, exact_density as latinon_density, rb_mc_density

pytestmark = pytest.mark.slow

IDENTITY_2X3 = Pattern.from_rows([[1, 2, 3], [4, 5, 6]])
DOUBLING_IDENTITY = 11 / 5760


def test_parity_blowup_approaches_doubling_densities():
    identity, two_by_two = [], []
    for seed in range(5):
        square = generate("parity-blowup", 120, seed)
        identity.append(mc_density(square, IDENTITY_2X3, 10 ** 7, seed=seed).estimate)
        profile = mc_profile(square, 2, 2, 10 ** 7, seed=seed)
        two_by_two.append([e.estimate for _, e in sorted(profile.estimates.items())])

    mean_identity = float(np.mean(identity))
    assert abs(mean_identity - DOUBLING_IDENTITY) <= 2.5e-4
    assert abs(mean_identity - 1 / 720) >= 2.5e-4
    assert np.all(np.abs(np.mean(two_by_two, axis=0) - 1 / 24) <= 0.01)


def test_random_squares_become_quasirandom():
    frame = sweep(["jm"], [20, 40, 80], range(10))
    summary = seed_average(frame).set_index(["stat", "order"])["mean"]

    max_dev = [summary[("max_dev", n)] for n in (20, 40, 80)]
    assert max_dev[0] > max_dev[1] > max_dev[2]

    assert abs(summary[("corner_untied", 80)] - 0.2) <= 1e-3
    assert summary[("corner", 80)] < summary[("corner_untied", 80)]


@pytest.mark.parametrize("seed", [0, 1])
def test_order_100_random_square_certifies(seed):
    report = certify(exact_profile(gen_jm(100, seed), 2, 3), Fraction(3, 720))
    assert report.passed
    assert abs(report.corner_untied - Fraction(1, 5)) <= Fraction(1, 1000)


def test_parity_blowups_track_the_doubling_identity_density():
    frame = sweep(["parity-blowup"], [40, 80, 160], range(3), [IDENTITY_2X3], method="mc", samples=10 ** 6)
    density = seed_average(frame[frame["stat"] == "density"]).set_index("order")["mean"]
    gaps = [abs(density[n] - DOUBLING_IDENTITY) for n in (40, 80, 160)]
    assert gaps[2] < gaps[0]
    assert gaps[2] <= 2.5e-4


def test_mc_agrees_with_exact_on_order_30():
    square = gen_jm(30, seed=5)
    profile = exact_profile(square, 2, 3)
    rng = random.Random(30)
    ids = rng.sample(range(720), 50)
    covered = 0
    for pid in ids:
        est = mc_density(square, pattern_from_id(2, 3, pid), 10 ** 6, seed=pid)
        if abs(est.estimate - float(profile.density(pid))) <= 4 * est.std_error:
            covered += 1
    assert covered >= 48


def test_rb_mc_agrees_with_exact_on_doubling():
    latinon = doubling()
    covered = 0
    patterns = enumerate_patterns(2, 2)
    for p in patterns:
        exact = latinon_density(latinon, p)
        assert exact == Fraction(1, 24)
        est = rb_mc_density(latinon, p, 10 ** 5, seed=pattern_id(p))
        if abs(est.estimate - float(exact)) <= 4 * est.std_error + 1e-12:
            covered += 1
    assert covered >= 23
