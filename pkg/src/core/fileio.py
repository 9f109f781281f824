"""
Plain-text square and pattern files.

Square file: optional `#` comment lines, then `n`, then n rows of n integers.
Pattern file: optional `#` comment lines, then `k l`, then k rows of l tokens,
each an integer or `*` (hole).
"""

from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

from src.core.errors import InvalidPattern, ParseError
from src.core.patterns import AnyPattern, GeneralizedPattern, Pattern
from src.core.squares import LatinSquare, validate_latin

PathLike = Union[str, Path]


def _data_lines(text: str) -> List[Tuple[int, List[str]]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((number, stripped.split()))
    return lines


def _int_token(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line) from None


def parse_square(text: str) -> LatinSquare:
    """Parse and validate a square file's contents."""
    lines = _data_lines(text)
    if not lines:
        raise ParseError("no data lines")
    header_line, header = lines[0]
    if len(header) != 1:
        raise ParseError("first data line must hold the order n", header_line)
    n = _int_token(header[0], header_line)
    if n < 1:
        raise ParseError(f"order must be positive, got {n}", header_line)
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} rows, found {len(body)}")
    grid = []
    for number, tokens in body:
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, found {len(tokens)}", number)
        grid.append([_int_token(t, number) for t in tokens])
    return validate_latin(grid)


def format_square(square: LatinSquare, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(str(square.order))
    out.extend(" ".join(str(v) for v in row) for row in square.cells)
    return "\n".join(out) + "\n"


def read_square(path: PathLike) -> LatinSquare:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    return parse_square(text)


def write_square(square: LatinSquare, path: PathLike, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_square(square, comments))


def parse_pattern(text: str) -> AnyPattern:
    """
    Parse a pattern file; returns a Pattern when no entry is a hole,
    otherwise a GeneralizedPattern.
    """
    lines = _data_lines(text)
    if not lines:
        raise ParseError("no data lines")
    header_line, header = lines[0]
    if len(header) != 2:
        raise ParseError("first data line must be `k l`", header_line)
    k, l = (_int_token(t, header_line) for t in header)
    body = lines[1:]
    if len(body) != k:
        raise ParseError(f"expected {k} rows, found {len(body)}")
    rows: List[List[Optional[int]]] = []
    for number, tokens in body:
        if len(tokens) != l:
            raise ParseError(f"expected {l} entries, found {len(tokens)}", number)
        rows.append([None if t == "*" else _int_token(t, number) for t in tokens])
    try:
        if any(v is None for r in rows for v in r):
            return GeneralizedPattern.from_rows(rows)
        return Pattern.from_rows(rows)
    except InvalidPattern as e:
        raise ParseError(str(e)) from e


def format_pattern(pattern: AnyPattern) -> str:
    return f"{pattern.k} {pattern.l}\n{pattern}\n"


def read_pattern(path: PathLike) -> AnyPattern:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    return parse_pattern(text)
