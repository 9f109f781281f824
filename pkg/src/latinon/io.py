"""
Latinon JSON files.

    {
      "name": "doubling",
      "row_axis": {"breakpoints": ["0", "1"], "classes": [{"A": "1/2", "B": "1/2"}]},
      "col_axis": {...},
      "value_breakpoints": ["0", "1/2", "1"],
      "table": {"A": {"A": {"0": "1"}, "B": {"1": "1"}}, ...}
    }

Mixtures list only their nonzero parts by index; all numbers are "p/q"
strings so the model stays exact.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

from src.core.errors import LatinonFormatError
from src.core.rational import format_rational, parse_rational
from src.latinon.model import BUILTINS, AxisModel, StepLatinon, ValuePartition

PathLike = Union[str, Path]


def _rational(value: Any, where: str) -> Fraction:
    try:
        return parse_rational(value)
    except ValueError as e:
        raise LatinonFormatError(f"{where}: {e}") from None


def _axis_from_dict(data: Dict[str, Any], where: str) -> AxisModel:
    try:
        points = [_rational(b, f"{where}.breakpoints") for b in data["breakpoints"]]
        classes = [
            {str(label): _rational(w, f"{where}.classes") for label, w in dist.items()}
            for dist in data["classes"]
        ]
    except (KeyError, TypeError, AttributeError) as e:
        raise LatinonFormatError(f"{where} is malformed: {e!r}") from None
    return AxisModel(tuple(points), tuple(classes))


def latinon_from_dict(data: Dict[str, Any]) -> StepLatinon:
    """
    Raises:
        LatinonFormatError: missing keys, bad rationals, or an invalid model
    """
    if not isinstance(data, dict):
        raise LatinonFormatError("latinon file must hold a JSON object")
    for key in ("row_axis", "col_axis", "value_breakpoints", "table"):
        if key not in data:
            raise LatinonFormatError(f"missing key {key!r}")
    values = ValuePartition(
        tuple(_rational(b, "value_breakpoints") for b in data["value_breakpoints"])
    )
    table = {}
    try:
        for rc, row in data["table"].items():
            table[str(rc)] = {}
            for cc, parts in row.items():
                mix = [Fraction(0)] * values.parts
                for index, w in parts.items():
                    j = int(index)
                    if not 0 <= j < values.parts:
                        raise LatinonFormatError(f"table[{rc}][{cc}] names part {j}")
                    mix[j] = _rational(w, f"table[{rc}][{cc}]")
                table[str(rc)][str(cc)] = tuple(mix)
    except (TypeError, AttributeError, ValueError) as e:
        if isinstance(e, LatinonFormatError):
            raise
        raise LatinonFormatError(f"table is malformed: {e!r}") from None
    return StepLatinon(
        _axis_from_dict(data["row_axis"], "row_axis"),
        _axis_from_dict(data["col_axis"], "col_axis"),
        values,
        table,
        str(data.get("name", "custom")),
    )


def _axis_to_dict(axis: AxisModel) -> Dict[str, Any]:
    return {
        "breakpoints": [format_rational(b) for b in axis.breakpoints],
        "classes": [
            {label: format_rational(w) for label, w in dist.items()} for dist in axis.classes
        ],
    }


def latinon_to_dict(latinon: StepLatinon) -> Dict[str, Any]:
    return {
        "name": latinon.name,
        "row_axis": _axis_to_dict(latinon.row_axis),
        "col_axis": _axis_to_dict(latinon.col_axis),
        "value_breakpoints": [format_rational(b) for b in latinon.values.breakpoints],
        "table": {
            rc: {
                cc: {str(j): format_rational(w) for j, w in enumerate(mix) if w}
                for cc, mix in row.items()
            }
            for rc, row in latinon.table.items()
        },
    }


def read_latinon(path: PathLike) -> StepLatinon:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise LatinonFormatError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise LatinonFormatError(f"{path}: invalid JSON ({e})") from None
    return latinon_from_dict(data)


def write_latinon(latinon: StepLatinon, path: PathLike) -> None:
    Path(path).write_text(json.dumps(latinon_to_dict(latinon), indent=2) + "\n", encoding="utf-8")


def load_latinon(name_or_path: str) -> StepLatinon:
    """A built-in by name (uniform, prop41, prop42, doubling, quadrant) or a JSON file."""
    if name_or_path in BUILTINS:
        return BUILTINS[name_or_path]()
    return read_latinon(name_or_path)
