import json
from fractions import Fraction
from math import factorial
from pathlib import Path

import pytest

from src.core.errors import EnumerationBoundExceeded, LatinonFormatError, ZeroSamples
from src.core.patterns import GeneralizedPattern, Pattern, enumerate_patterns, pattern_from_id, transpose
from src.latinon import (
    AxisModel,
    StepLatinon,
    ValuePartition,
    block_matrix_distribution,
    check_axioms,
    class_sequence_distribution,
    conditional_probability,
    doubling,
    exact_density,
    exact_profile,
    interval_sequence_distribution,
    latinon_from_dict,
    latinon_to_dict,
    load_latinon,
    prop41,
    prop42,
    quadrant,
    rb_mc_density,
    sample_interval_frequencies,
    uniform,
)

DATA = Path(__file__).resolve().parent.parent / "data" / "latinons"
IDENTITY_2X3 = Pattern.from_rows([[1, 2, 3], [4, 5, 6]])
BUILTINS = [uniform, doubling, quadrant]


def skewed() -> StepLatinon:
    """Row and column axes differ, so transposition is not a symmetry."""
    rows = AxisModel((0, Fraction(1, 3), 1), ({"X": 1}, {"Y": 1}))
    cols = AxisModel((0, 1), ({"U": 1},))
    table = {
        "X": {"U": (Fraction(1, 2), Fraction(1, 2))},
        "Y": {"U": (Fraction(1, 4), Fraction(3, 4))},
    }
    return StepLatinon(rows, cols, ValuePartition((0, Fraction(1, 2), 1)), table, "skewed")


# ---------------------------------------------------------------------------
# Model and axioms
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("make", BUILTINS)
def test_builtins_satisfy_axioms(make):
    report = check_axioms(make())
    assert report.passed
    assert report.violation is None
    assert report.checked > 0


def test_perturbed_mixture_fails_with_named_equation():
    broken = doubling().with_mixture("A", "A", (Fraction(9, 10), Fraction(1, 10)))
    report = check_axioms(broken)
    assert not report.passed
    v = report.violation
    assert (v.side, v.class_label, v.part) == ("row", "A", 0)
    assert v.expected == Fraction(1, 2)
    assert v.actual == Fraction(9, 20)
    assert "row class 'A'" in str(v)


@pytest.mark.parametrize(
    "build",
    [
        lambda: ValuePartition((0, Fraction(1, 2))),
        lambda: ValuePartition((0, Fraction(1, 2), Fraction(1, 2), 1)),
        lambda: AxisModel((0, 1), ({"A": Fraction(1, 2)},)),
        lambda: AxisModel((0, Fraction(1, 2), 1), ({"A": 1},)),
        lambda: StepLatinon(
            AxisModel((0, 1), ({"A": 1},)),
            AxisModel((0, 1), ({"A": 1},)),
            ValuePartition((0, 1)),
            {},
        ),
    ],
)
def test_malformed_models(build):
    with pytest.raises(LatinonFormatError):
        build()


def test_builtins_are_hashable_and_equal_by_content():
    assert doubling() == doubling()
    assert hash(doubling()) == hash(doubling())
    assert doubling() != quadrant()


# ---------------------------------------------------------------------------
# Position, class and support distributions
# ---------------------------------------------------------------------------

def test_interval_sequences_of_quadrant():
    dist = interval_sequence_distribution(quadrant().row_axis, 2)
    assert sum(dist.values()) == 1
    assert dist[(1, 2)] == Fraction(1, 4)
    assert dist[(0, 0)] == Fraction(1, 16)


def test_class_sequences_of_quadrant_are_uniform():
    dist = class_sequence_distribution(quadrant().row_axis, 2)
    assert dist == {
        ("P", "P"): Fraction(1, 4),
        ("P", "Q"): Fraction(1, 4),
        ("Q", "P"): Fraction(1, 4),
        ("Q", "Q"): Fraction(1, 4),
    }


@pytest.mark.parametrize("make", [doubling, quadrant])
def test_eight_support_matrices(make):
    dist = block_matrix_distribution(make(), 2, 2)
    assert len(dist) == 8
    assert set(dist.values()) == {Fraction(1, 8)}


def test_uniform_support_matrix():
    assert block_matrix_distribution(uniform(), 3, 2) == {((0, 0), (0, 0), (0, 0)): Fraction(1)}


def test_conditional_probability_cases():
    a = Pattern.from_rows([[1, 2], [3, 4]])
    assert conditional_probability(a, ((0, 0), (0, 0))) == Fraction(1, 24)
    assert conditional_probability(a, ((0, 0), (1, 1))) == Fraction(1, 4)
    assert conditional_probability(a, ((0, 1), (1, 0))) == 0


def test_conditional_probability_ignores_holes():
    g = GeneralizedPattern.from_rows([[1, None], [None, 2]])
    assert conditional_probability(g, ((1, 0), (0, 1))) == Fraction(1, 2)
    assert conditional_probability(g, ((1, 0), (0, 0))) == 0


# ---------------------------------------------------------------------------
# Exact densities
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("k, l", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3)])
def test_uniform_is_quasirandom(k, l):
    target = Fraction(1, factorial(k * l))
    step = max(1, factorial(k * l) // 40)
    for pid in range(0, factorial(k * l), step):
        assert exact_density(uniform(), pattern_from_id(k, l, pid)) == target


@pytest.mark.parametrize("make", [doubling, quadrant])
def test_every_2x2_pattern_has_density_one_24th(make):
    profile = exact_profile(make(), 2, 2)
    assert set(profile.values()) == {Fraction(1, 24)}
    for p in enumerate_patterns(2, 2):
        assert exact_density(make(), p) == Fraction(1, 24)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_doubling_rows_are_quasirandom(n):
    for p in enumerate_patterns(1, n):
        assert exact_density(doubling(), p) == Fraction(1, factorial(n))


def test_doubling_identity_2x3():
    assert exact_density(doubling(), IDENTITY_2X3) == Fraction(11, 5760)


def test_quadrant_is_not_quasirandom_on_2x3():
    profile = exact_profile(quadrant(), 2, 3)
    off = [pid for pid, v in profile.items() if v != Fraction(1, 720)]
    assert off


@pytest.mark.parametrize("make", BUILTINS + [skewed])
@pytest.mark.parametrize("k, l", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_profiles_sum_to_one(make, k, l):
    profile = exact_profile(make(), k, l)
    assert sum(profile.values()) == 1


def test_profile_matches_single_densities():
    profile = exact_profile(doubling(), 2, 3)
    for pid in (0, 1, 100, 359, 719):
        assert profile[pid] == exact_density(doubling(), pattern_from_id(2, 3, pid))


def test_transpose_symmetry():
    s = skewed()
    st = s.transpose()
    assert check_axioms(st).passed == check_axioms(s).passed
    for p in enumerate_patterns(2, 3):
        assert exact_density(st, transpose(p)) == exact_density(s, p)


def test_enumeration_bounds():
    with pytest.raises(EnumerationBoundExceeded):
        exact_density(doubling(), Pattern.from_rows([[1, 2, 3, 4, 5]]))
    many = AxisModel((0, 1), ({c: Fraction(1, 5) for c in "ABCDE"},))
    table = {r: {c: (Fraction(1),) for c in "ABCDE"} for r in "ABCDE"}
    wide = StepLatinon(many, many, ValuePartition((0, 1)), table)
    with pytest.raises(EnumerationBoundExceeded):
        block_matrix_distribution(wide, 1, 1)


# ---------------------------------------------------------------------------
# Rao-Blackwellized sampling
# ---------------------------------------------------------------------------

def test_rb_mc_on_uniform_has_no_variance():
    est = rb_mc_density(uniform(), Pattern.from_rows([[1, 2], [3, 4]]), 5000, seed=1)
    assert est.estimate == pytest.approx(1 / 24, abs=1e-15)
    assert est.std_error == 0.0
    assert est.hits is None


def test_rb_mc_agrees_with_exact_on_doubling():
    for p in enumerate_patterns(2, 2):
        est = rb_mc_density(doubling(), p, 20000, seed=7)
        assert abs(est.estimate - 1 / 24) <= 4 * est.std_error + 1e-12


def test_rb_mc_identity_2x3_on_doubling():
    est = rb_mc_density(doubling(), IDENTITY_2X3, 50000, seed=3)
    assert abs(est.estimate - 11 / 5760) <= 4 * est.std_error + 1e-12


def test_rb_mc_is_reproducible():
    a = rb_mc_density(quadrant(), IDENTITY_2X3, 10000, seed=5)
    assert a == rb_mc_density(quadrant(), IDENTITY_2X3, 10000, seed=5, threads=3)


def test_rb_mc_zero_samples():
    with pytest.raises(ZeroSamples):
        rb_mc_density(doubling(), IDENTITY_2X3, 0, seed=0)


def test_sampled_interval_frequencies_of_quadrant():
    freqs = sample_interval_frequencies(quadrant().row_axis, 2, 100000, seed=2)
    upper = freqs[(1, 2)]
    assert abs(upper.estimate - 0.25) <= 4 * upper.std_error
    assert sum(e.hits for e in freqs.values()) == 100000


# ---------------------------------------------------------------------------
# JSON files
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("name, make", [("uniform", uniform), ("doubling", doubling), ("quadrant", quadrant)])
def test_shipped_files_match_builtins(name, make):
    assert load_latinon(str(DATA / f"{name}.json")) == make()


def test_builtin_names_and_aliases():
    assert load_latinon("prop41") == doubling()
    assert load_latinon("prop42") == quadrant()
    assert load_latinon("uniform") == uniform()
    assert prop41() == doubling()
    assert prop42() == quadrant()
    assert prop41().name == "doubling"


def test_dict_round_trip_keeps_exact_values():
    data = latinon_to_dict(quadrant())
    assert data["row_axis"]["breakpoints"] == ["0/1", "1/4", "3/4", "1/1"]
    assert latinon_from_dict(json.loads(json.dumps(data))) == quadrant()


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"row_axis": {}}',
        '{"row_axis": {"breakpoints": ["0", "1"], "classes": [{"A": "1"}]},'
        ' "col_axis": {"breakpoints": ["0", "1"], "classes": [{"A": "1"}]},'
        ' "value_breakpoints": ["0", "1"], "table": {"A": {"A": {"0": "1/2"}}}}',
        '{"row_axis": {"breakpoints": ["0", "1"], "classes": [{"A": "x"}]},'
        ' "col_axis": {"breakpoints": ["0", "1"], "classes": [{"A": "1"}]},'
        ' "value_breakpoints": ["0", "1"], "table": {"A": {"A": {"0": "1"}}}}',
    ],
)
def test_malformed_files(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    with pytest.raises(LatinonFormatError):
        load_latinon(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(LatinonFormatError):
        load_latinon(str(tmp_path / "absent.json"))
