"""
Quasirandomness certification from 2×3 pattern densities.

A square sequence is quasirandom exactly when every 2×3 density tends to
1/720. The report measures how far a single square (or Latinon) is from
that, and adds the corner statistic: the weighted sum with weight 1/3 on
patterns whose ranks 5 and 6 share a column and 1/6 elsewhere, which is
exactly 1/5 at the quasirandom point. The tie-conditioned corner divides
out the tied mass so finite squares can be compared with 1/5 directly.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from src.core.errors import InvalidPattern, MissingPattern
from src.core.patterns import Pattern, enumerate_patterns, pattern_from_id
from src.core.rational import format_rational, rational_record
from src.density.exact import DensityProfile
from src.density.montecarlo import McEstimate, McProfile

N_PATTERNS = 720
TARGET = Fraction(1, N_PATTERNS)
CORNER_TARGET = Fraction(1, 5)

Number = Union[Fraction, int, float]


def _column_of(pattern: Pattern, value: int) -> int:
    for row in pattern.entries:
        if value in row:
            return row.index(value)
    raise InvalidPattern(f"{value} does not occur in the pattern")


def five_six_same_column(pattern: Pattern) -> bool:
    return _column_of(pattern, 5) == _column_of(pattern, 6)


def classify_56(patterns: Optional[Iterable[Pattern]] = None) -> Tuple[List[Pattern], List[Pattern]]:
    """
    Split 2×3 patterns by whether ranks 5 and 6 occupy the same column.

    Returns:
        (same_column, rest); 144 and 576 patterns for the full list
    """
    if patterns is None:
        patterns = enumerate_patterns(2, 3)
    same, rest = [], []
    for p in patterns:
        if (p.k, p.l) != (2, 3):
            raise InvalidPattern(f"expected a 2x3 pattern, got {p.k}x{p.l}")
        (same if five_six_same_column(p) else rest).append(p)
    return same, rest


@lru_cache(maxsize=1)
def corner_weights() -> Tuple[Fraction, ...]:
    """α by pattern id: 1/3 when 5 and 6 share a column, else 1/6."""
    return tuple(
        Fraction(1, 3) if five_six_same_column(pattern_from_id(2, 3, pid)) else Fraction(1, 6)
        for pid in range(N_PATTERNS)
    )


def _complete(densities: Mapping[int, Number]) -> None:
    for pid in range(N_PATTERNS):
        if pid not in densities:
            raise MissingPattern(pid)


def corner_statistic(densities: Mapping[int, Number]) -> Number:
    """
    Σ α_A · t(A) over all 720 patterns, keyed by pattern id.

    Exact inputs give an exact Fraction; any float input gives a float.

    Raises:
        MissingPattern: if some pattern id has no density
    """
    _complete(densities)
    alphas = corner_weights()
    if any(isinstance(densities[pid], float) for pid in range(N_PATTERNS)):
        return sum(float(alphas[pid]) * float(densities[pid]) for pid in range(N_PATTERNS))
    return sum((alphas[pid] * densities[pid] for pid in range(N_PATTERNS)), start=Fraction(0))


def untied_corner(corner: Number, tie_fraction: Number) -> Number:
    """
    The corner statistic conditioned on the sampled cells being tie-free.

    Tied selections stay in the density denominator, so the raw corner of
    a finite square sits below 1/5 by about the tie mass. A square whose
    selections all tie keeps the raw value 0.
    """
    if tie_fraction >= 1:
        return corner
    return corner / (1 - tie_fraction)


@dataclass(frozen=True)
class CertReport:
    """
    Outcome of a 2×3 certification.

    densities holds exact fractions for exact profiles and McEstimates
    for Monte Carlo ones; passed is max_dev <= threshold.
    """
    n: Optional[int]
    method: str
    samples: Optional[int]
    seed: Optional[int]
    densities: Dict[int, Union[Fraction, McEstimate]]
    max_dev: Number
    l1_dev: Number
    tie_fraction: Number
    corner: Number
    corner_untied: Number
    threshold: Fraction
    passed: bool

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def worst_patterns(self, count: int = 5) -> List[int]:
        """Pattern ids with the largest deviation from 1/720."""
        values = self._values()
        return sorted(values, key=lambda pid: (-abs(values[pid] - self._target()), pid))[:count]

    def _target(self) -> Number:
        return TARGET if self.method == "exact" else float(TARGET)

    def _values(self) -> Dict[int, Number]:
        return {
            pid: v.estimate if isinstance(v, McEstimate) else v
            for pid, v in self.densities.items()
        }

    def to_dict(self) -> Dict[str, object]:
        def record(value: Number) -> object:
            return rational_record(value) if isinstance(value, (Fraction, int)) else value

        densities = {}
        for pid, v in sorted(self.densities.items()):
            entry = {"pattern": [list(r) for r in pattern_from_id(2, 3, pid).entries]}
            if isinstance(v, McEstimate):
                entry.update(v.to_dict())
            else:
                entry.update(rational_record(v))
            densities[str(pid)] = entry
        return {
            "schema": 1,
            "n": self.n,
            "method": self.method,
            "samples": self.samples,
            "seed": self.seed,
            "threshold": format_rational(self.threshold),
            "verdict": self.verdict,
            "max_dev": record(self.max_dev),
            "l1_dev": record(self.l1_dev),
            "tie_fraction": record(self.tie_fraction),
            "corner": record(self.corner),
            "corner_dev": record(self.corner - (CORNER_TARGET if self.method == "exact" else 0.2)),
            "corner_untied": record(self.corner_untied),
            "corner_untied_dev": record(
                self.corner_untied - (CORNER_TARGET if self.method == "exact" else 0.2)
            ),
            "worst_patterns": self.worst_patterns(),
            "densities": densities,
        }


Certifiable = Union[DensityProfile, McProfile, Mapping[int, Number]]


def certify(profile: Certifiable, threshold: Number) -> CertReport:
    """
    Compare all 720 2×3 densities with 1/720.

    Accepts an exact DensityProfile, an McProfile, or a plain mapping from
    pattern id to density (e.g. Latinon densities).

    Raises:
        MissingPattern: if some pattern id has no density
        InvalidPattern: if the profile is not a 2×3 profile
    """
    threshold = Fraction(threshold)
    n = samples = seed = None
    if isinstance(profile, (DensityProfile, McProfile)) and (profile.k, profile.l) != (2, 3):
        raise InvalidPattern(f"certification needs a 2x3 profile, got {profile.k}x{profile.l}")

    if isinstance(profile, McProfile):
        method = "mc"
        n, samples, seed = profile.n, profile.samples, profile.seed
        estimates: Dict[int, Union[Fraction, McEstimate]] = dict(profile.estimates)
        _complete(estimates)
        values: Dict[int, Number] = {pid: e.estimate for pid, e in profile.estimates.items()}
        tie_fraction: Number = profile.ties.estimate
        target: Number = float(TARGET)
    else:
        method = "exact"
        if isinstance(profile, DensityProfile):
            n = profile.n
            values = dict(profile.densities())
            tie_fraction = profile.tie_fraction
        else:
            values = dict(profile)
            tie_fraction = Fraction(0)
        _complete(values)
        if any(isinstance(v, float) for v in values.values()):
            raise InvalidPattern("exact certification needs exact densities")
        values = {pid: Fraction(v) for pid, v in values.items()}
        estimates = dict(values)
        target = TARGET

    devs = [abs(values[pid] - target) for pid in range(N_PATTERNS)]
    max_dev = max(devs)
    l1_dev = sum(devs, start=Fraction(0)) if method == "exact" else float(sum(devs))
    corner = corner_statistic(values)
    return CertReport(
        n=n,
        method=method,
        samples=samples,
        seed=seed,
        densities={pid: estimates[pid] for pid in range(N_PATTERNS)},
        max_dev=max_dev,
        l1_dev=l1_dev,
        tie_fraction=tie_fraction,
        corner=corner,
        corner_untied=untied_corner(corner, tie_fraction),
        threshold=threshold,
        passed=max_dev <= threshold,
    )

