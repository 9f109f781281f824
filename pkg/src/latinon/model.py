"""
Step Latinons: piecewise limit objects of Latin square sequences.

A step Latinon is described in position space. Each axis is cut into
intervals; a point falling in an interval draws a class label from that
interval's distribution, independently of other points. The value axis
[0, 1] is cut into ordered parts, and the entry measure at a (row class,
column class) pair is a mixture of the uniform measures on the parts.

Both counterexample Latinons fit this form: the 2-to-1 doubling position
map becomes a single interval with a fair coin over two classes, the
identity map becomes deterministic classes per interval.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.core.errors import LatinonFormatError

Mixture = Tuple[Fraction, ...]
Table = Dict[str, Dict[str, Mixture]]


def _breakpoints(points: Sequence, what: str) -> Tuple[Fraction, ...]:
    pts = tuple(Fraction(p) for p in points)
    if len(pts) < 2 or pts[0] != 0 or pts[-1] != 1:
        raise LatinonFormatError(f"{what} must start at 0 and end at 1: {pts}")
    if any(a >= b for a, b in zip(pts, pts[1:])):
        raise LatinonFormatError(f"{what} must be strictly increasing: {pts}")
    return pts


@dataclass(frozen=True)
class ValuePartition:
    """Breakpoints 0 = v0 < v1 < ... < vr = 1 cutting [0,1] into r parts."""
    breakpoints: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "breakpoints", _breakpoints(self.breakpoints, "value breakpoints"))

    @property
    def parts(self) -> int:
        return len(self.breakpoints) - 1

    @property
    def lengths(self) -> Tuple[Fraction, ...]:
        return tuple(b - a for a, b in zip(self.breakpoints, self.breakpoints[1:]))


@dataclass(frozen=True)
class AxisModel:
    """
    Position intervals of one axis and, per interval, a distribution
    over class labels.
    """
    breakpoints: Tuple[Fraction, ...]
    classes: Tuple[Dict[str, Fraction], ...]

    def __post_init__(self):
        pts = _breakpoints(self.breakpoints, "axis breakpoints")
        dists = tuple(
            {str(label): Fraction(w) for label, w in dict(d).items()} for d in self.classes
        )
        if len(dists) != len(pts) - 1:
            raise LatinonFormatError(
                f"{len(pts) - 1} intervals but {len(dists)} class distributions"
            )
        for i, dist in enumerate(dists):
            if not dist or any(w < 0 for w in dist.values()) or sum(dist.values()) != 1:
                raise LatinonFormatError(f"class weights of interval {i} must be >= 0 and sum to 1")
        object.__setattr__(self, "breakpoints", pts)
        object.__setattr__(self, "classes", dists)

    @property
    def lengths(self) -> Tuple[Fraction, ...]:
        return tuple(b - a for a, b in zip(self.breakpoints, self.breakpoints[1:]))

    def labels(self) -> List[str]:
        """Class labels with positive weight somewhere, in first-seen order."""
        seen: List[str] = []
        for dist in self.classes:
            for label, w in dist.items():
                if w > 0 and label not in seen:
                    seen.append(label)
        return seen

    def support(self, interval: int) -> List[Tuple[str, Fraction]]:
        return [(label, w) for label, w in self.classes[interval].items() if w > 0]

    def key(self) -> tuple:
        return (
            self.breakpoints,
            tuple(tuple(sorted(d.items())) for d in self.classes),
        )


@dataclass(frozen=True)
class StepLatinon:
    """
    row_axis / col_axis: positions and classes of rows and columns
    values: ordered parts of the value axis
    table[row_class][col_class]: mixture weights over the value parts
    """
    row_axis: AxisModel
    col_axis: AxisModel
    values: ValuePartition
    table: Table
    name: str = field(default="custom", compare=False)

    def __post_init__(self):
        r = self.values.parts
        table: Table = {}
        for rc, row in dict(self.table).items():
            table[str(rc)] = {}
            for cc, mixture in dict(row).items():
                mix = tuple(Fraction(w) for w in mixture)
                if len(mix) != r:
                    raise LatinonFormatError(
                        f"mixture ({rc}, {cc}) has {len(mix)} weights, expected {r}"
                    )
                if any(w < 0 for w in mix) or sum(mix) != 1:
                    raise LatinonFormatError(f"mixture ({rc}, {cc}) must be >= 0 and sum to 1")
                table[str(rc)][str(cc)] = mix
        for rc in self.row_axis.labels():
            for cc in self.col_axis.labels():
                if cc not in table.get(rc, {}):
                    raise LatinonFormatError(f"table has no mixture for ({rc}, {cc})")
        object.__setattr__(self, "table", table)

    def __hash__(self) -> int:
        return hash(self.key())

    def key(self) -> tuple:
        return (
            self.row_axis.key(),
            self.col_axis.key(),
            self.values.breakpoints,
            tuple(sorted((rc, tuple(sorted(row.items()))) for rc, row in self.table.items())),
        )

    def mixture(self, row_class: str, col_class: str) -> Mixture:
        return self.table[row_class][col_class]

    def transpose(self) -> "StepLatinon":
        """Swap the axes; densities map A -> Aᵀ."""
        flipped: Table = {}
        for rc, row in self.table.items():
            for cc, mix in row.items():
                flipped.setdefault(cc, {})[rc] = mix
        return StepLatinon(self.col_axis, self.row_axis, self.values, flipped, f"{self.name}^T")

    def with_mixture(self, row_class: str, col_class: str, mixture: Sequence) -> "StepLatinon":
        """Copy with one table entry replaced (used to build perturbed models)."""
        table = {rc: dict(row) for rc, row in self.table.items()}
        table.setdefault(row_class, {})[col_class] = tuple(Fraction(w) for w in mixture)
        return replace(self, table=table, name=f"{self.name}*")


@dataclass(frozen=True)
class AxiomViolation:
    side: str
    class_label: str
    part: int
    expected: Fraction
    actual: Fraction

    def __str__(self) -> str:
        other = "column" if self.side == "row" else "row"
        return (
            f"{self.side} class {self.class_label!r}, value part {self.part}: "
            f"mass integrated over {other}s is {self.actual}, expected {self.expected}"
        )


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    checked: int
    violation: Optional[AxiomViolation] = None


def _side_masses(
    own: AxisModel, other: AxisModel, mixture_of, parts: int
) -> Mapping[str, List[Fraction]]:
    masses = {}
    for label in own.labels():
        acc = [Fraction(0)] * parts
        for length, dist in zip(other.lengths, other.classes):
            for other_label, w in dist.items():
                if w == 0:
                    continue
                mix = mixture_of(label, other_label)
                for j in range(parts):
                    acc[j] += length * w * mix[j]
        masses[label] = acc
    return masses


def check_axioms(latinon: StepLatinon) -> AxiomReport:
    """
    Verify the uniform-marginal identities exactly.

    For every row class c and value part j, the mass that c puts on part j,
    integrated over all column positions, must equal the length of part j;
    symmetrically for every column class. The first failing identity is
    reported; violations are report content, not exceptions.
    """
    parts = latinon.values.parts
    expected = latinon.values.lengths
    checked = 0
    sides = (
        ("row", _side_masses(latinon.row_axis, latinon.col_axis,
                             lambda rc, cc: latinon.mixture(rc, cc), parts)),
        ("column", _side_masses(latinon.col_axis, latinon.row_axis,
                                lambda cc, rc: latinon.mixture(rc, cc), parts)),
    )
    for side, masses in sides:
        for label, acc in masses.items():
            for j in range(parts):
                checked += 1
                if acc[j] != expected[j]:
                    return AxiomReport(
                        False, checked, AxiomViolation(side, label, j, expected[j], acc[j])
                    )
    return AxiomReport(True, checked)


HALF = Fraction(1, 2)
LOW = (Fraction(1), Fraction(0))
HIGH = (Fraction(0), Fraction(1))


def uniform() -> StepLatinon:
    """Every entry uniform on [0, 1]: the quasirandom Latinon."""
    axis = AxisModel((0, 1), ({"U": Fraction(1)},))
    return StepLatinon(axis, axis, ValuePartition((0, 1)), {"U": {"U": (Fraction(1),)}}, "uniform")


def doubling() -> StepLatinon:
    """
    Position map x -> 2x mod 1: every point is an independent fair coin
    between two classes. Entries live in [0, 1/2] when the row and column
    classes agree and in [1/2, 1] otherwise.
    """
    axis = AxisModel((0, 1), ({"A": HALF, "B": HALF},))
    table = {"A": {"A": LOW, "B": HIGH}, "B": {"A": HIGH, "B": LOW}}
    return StepLatinon(axis, axis, ValuePartition((0, HALF, 1)), table, "doubling")


def quadrant() -> StepLatinon:
    """
    Identity position map with P = [0,1/4] ∪ (3/4,1] and Q = (1/4,3/4];
    entries live in [0, 1/2] on P² ∪ Q² and in [1/2, 1] elsewhere.
    """
    q = Fraction(1, 4)
    axis = AxisModel((0, q, 3 * q, 1), ({"P": Fraction(1)}, {"Q": Fraction(1)}, {"P": Fraction(1)}))
    table = {"P": {"P": LOW, "Q": HIGH}, "Q": {"P": HIGH, "Q": LOW}}
    return StepLatinon(axis, axis, ValuePartition((0, HALF, 1)), table, "quadrant")


# Published names of the two counterexamples.
prop41 = doubling
prop42 = quadrant

BUILTINS = {
    "uniform": uniform,
    "prop41": prop41,
    "prop42": prop42,
    "doubling": doubling,
    "quadrant": quadrant,
}
