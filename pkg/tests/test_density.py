from fractions import Fraction

import numpy as np
import pytest

from src.core.errors import TooLarge, ZeroSamples
from src.core.patterns import (
    GeneralizedPattern,
    Pattern,
    complement,
    enumerate_patterns,
    hflip,
    pattern_id,
    transpose,
    vflip,
)
from src.density.exact import (
    exact_density,
    exact_profile,
    generalized_exact_density,
    selection_count,
)
from src.density.montecarlo import MC_BLOCK_SIZE, mc_density, mc_profile
from src.density.ranking import TIE, chain_mask, order_class, rank_codes
from src.generators import gen_cyclic, gen_jm

IDENTITY_2X2 = Pattern.from_rows([[1, 2], [3, 4]])


@pytest.fixture(scope="module")
def cyclic3():
    return gen_cyclic(3)


@pytest.fixture(scope="module")
def jm7():
    return gen_jm(7, seed=11)


# ---------------------------------------------------------------------------
# Ranking
# ---------------------------------------------------------------------------

def test_order_class_examples():
    assert order_class([[1, 2], [2, 3]]) == TIE
    assert order_class([[10, 20], [30, 40]]) == pattern_id(IDENTITY_2X2)
    assert order_class([[5, 1], [2, 9]]) == pattern_id(Pattern.from_rows([[3, 1], [2, 4]]))


def test_rank_codes_matches_order_class():
    rng = np.random.default_rng(3)
    values = rng.integers(1, 9, size=(500, 6))
    codes = rank_codes(values)
    for row, code in zip(values, codes):
        assert code == order_class([row.tolist()])


def test_chain_mask_ignores_holes():
    g = GeneralizedPattern.from_rows([[1, None], [None, 2]])
    values = np.array([[1, 9, 9, 2], [2, 0, 0, 1], [3, 5, 5, 3]])
    assert chain_mask(values, g).tolist() == [True, False, False]


# ---------------------------------------------------------------------------
# Exact enumeration
# ---------------------------------------------------------------------------

def test_cyclic3_2x2_is_all_ties(cyclic3):
    profile = exact_profile(cyclic3, 2, 2)
    assert profile.total == 9
    assert profile.ties == 9
    assert sum(profile.counts.values()) == 0
    assert exact_density(cyclic3, IDENTITY_2X2) == 0
    assert profile.tie_fraction == 1


def test_cyclic3_2x3_is_all_ties(cyclic3):
    profile = exact_profile(cyclic3, 2, 3)
    assert (profile.total, profile.ties) == (3, 3)


def test_singleton_profile(jm7):
    profile = exact_profile(jm7, 1, 1)
    assert profile.counts == {0: 49}
    assert profile.ties == 0
    assert exact_density(jm7, Pattern.from_rows([[1]])) == 1


def test_pattern_larger_than_square():
    sq = gen_cyclic(2)
    assert exact_density(sq, Pattern.from_rows([[1, 2, 3], [4, 5, 6]])) == 0
    assert generalized_exact_density(sq, GeneralizedPattern.from_rows([[1, 2, 3]])) == 0
    assert exact_profile(sq, 2, 3).total == 0


def test_selection_counts():
    assert selection_count(10, 2, 3) == 45 * 120
    assert selection_count(12, 2, 3) == 66 * 220
    assert selection_count(2, 3, 1) == 0


def test_generalized_density_by_hand(cyclic3):
    g = GeneralizedPattern.from_rows([[1, None], [None, 2]])
    assert generalized_exact_density(cyclic3, g) == Fraction(2, 9)
    assert generalized_exact_density(cyclic3, GeneralizedPattern.from_rows([[1]])) == 1


def test_full_generalized_pattern_matches_exact(jm7):
    for p in enumerate_patterns(2, 2):
        assert generalized_exact_density(jm7, p.to_generalized()) == exact_density(jm7, p)


def test_profile_matches_single_densities(jm7):
    profile = exact_profile(jm7, 2, 2)
    for p in enumerate_patterns(2, 2):
        assert profile.density(p) == exact_density(jm7, p)


def test_profile_too_large(jm7):
    with pytest.raises(TooLarge):
        exact_profile(jm7, 3, 4)


@pytest.mark.parametrize("seed", range(20))
def test_mass_conservation(seed):
    profile = exact_profile(gen_jm(12, seed), 2, 3)
    assert sum(profile.counts.values()) + profile.ties == 66 * 220


def test_thread_count_does_not_change_profile(jm7, monkeypatch):
    monkeypatch.setenv("LATINQ_CHUNK_CELLS", "64")
    one = exact_profile(jm7, 2, 3, threads=1)
    four = exact_profile(jm7, 2, 3, threads=4)
    assert one == four


def test_symmetries(jm7):
    base = exact_profile(jm7, 2, 3)
    flipped = exact_profile(jm7.transpose(), 3, 2)
    comp = exact_profile(jm7.complement(), 2, 3)
    rows = exact_profile(jm7.reverse_rows(), 2, 3)
    cols = exact_profile(jm7.reverse_columns(), 2, 3)
    for p in enumerate_patterns(2, 3):
        t = base.density(p)
        assert flipped.density(transpose(p)) == t
        assert comp.density(complement(p)) == t
        assert rows.density(vflip(p)) == t
        assert cols.density(hflip(p)) == t


# ---------------------------------------------------------------------------
# Monte Carlo
# ---------------------------------------------------------------------------

def test_mc_is_reproducible(jm7):
    a = mc_density(jm7, IDENTITY_2X2, 20000, seed=5)
    b = mc_density(jm7, IDENTITY_2X2, 20000, seed=5)
    assert a == b
    assert a.hits == round(a.estimate * a.samples)


def test_mc_independent_of_threads(jm7):
    samples = 2 * MC_BLOCK_SIZE + 17
    one = mc_density(jm7, IDENTITY_2X2, samples, seed=9, threads=1)
    four = mc_density(jm7, IDENTITY_2X2, samples, seed=9, threads=4)
    assert one.hits == four.hits


def test_mc_singleton_always_hits(jm7):
    est = mc_density(jm7, Pattern.from_rows([[1]]), 1000, seed=1)
    assert est.estimate == 1.0
    assert est.std_error == 0.0


def test_mc_zero_samples(jm7):
    with pytest.raises(ZeroSamples):
        mc_density(jm7, IDENTITY_2X2, 0, seed=1)
    with pytest.raises(ZeroSamples):
        mc_profile(jm7, 2, 2, 0, seed=1)


def test_mc_agrees_with_exact():
    sq = gen_jm(8, seed=2)
    profile = exact_profile(sq, 2, 2)
    for p in enumerate_patterns(2, 2)[:6]:
        est = mc_density(sq, p, 200000, seed=pattern_id(p))
        assert abs(est.estimate - float(profile.density(p))) <= 4 * est.std_error + 1e-9


def test_mc_seed_average_is_unbiased():
    sq = gen_jm(8, seed=2)
    exact = float(exact_density(sq, IDENTITY_2X2))
    runs = [mc_density(sq, IDENTITY_2X2, 50000, seed=s) for s in range(8)]
    mean = np.mean([r.estimate for r in runs])
    pooled_se = np.sqrt(np.mean([r.std_error ** 2 for r in runs]) / len(runs))
    assert abs(mean - exact) <= 4 * pooled_se


def test_mc_generalized_pattern(cyclic3):
    g = GeneralizedPattern.from_rows([[1, None], [None, 2]])
    est = mc_density(cyclic3, g, 90000, seed=4)
    assert abs(est.estimate - 2 / 9) <= 4 * est.std_error


def test_mc_profile_accounts_for_every_sample(jm7):
    mc = mc_profile(jm7, 2, 3, 30000, seed=3)
    assert sum(e.hits for e in mc.estimates.values()) + mc.ties.hits == 30000
    assert len(mc.estimates) == 720
