"""Text formats: the matrix file and inline vector literals.

Matrix file::

    r=3 s=4
    1 1 0 | 0 u u u
    0 1 1 | 1 1+u u 0

Binary tokens are 0/1; ring tokens are 0, 1, u, w or 1+u.  Blank lines and
lines starting with '#' are ignored.
"""

from __future__ import annotations

import re
from pathlib import Path

from .code import GeneratorMatrix
from .ring import RingElement, parse_token
from .vector import MixedVector, parse_vector

__all__ = ["MatrixParseError", "parse_matrix", "read_matrix", "format_matrix", "parse_rows"]

_HEADER = re.compile(r"^\s*r\s*=\s*(\d+)\s+s\s*=\s*(\d+)\s*$")


class MatrixParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int) -> None:
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


def _tokens(text: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]


def parse_matrix(text: str) -> GeneratorMatrix:
    lines = text.splitlines()
    header = None
    rows: list[MixedVector] = []
    for lineno, raw in enumerate(lines, 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        if header is None:
            m = _HEADER.match(raw)
            if not m:
                raise MatrixParseError("expected header 'r=<int> s=<int>'", lineno, 1)
            header = (int(m.group(1)), int(m.group(2)))
            continue
        r, s = header
        toks = _tokens(raw)
        bars = [i for i, (t, _) in enumerate(toks) if t == "|"]
        if len(bars) != 1:
            raise MatrixParseError("expected exactly one '|' separator", lineno, 1)
        left, right = toks[: bars[0]], toks[bars[0] + 1 :]
        if len(left) != r:
            raise MatrixParseError(f"expected {r} binary tokens, got {len(left)}", lineno, 1)
        if len(right) != s:
            raise MatrixParseError(f"expected {s} ring tokens, got {len(right)}", lineno, toks[bars[0]][1])
        bits = []
        for tok, col in left:
            if tok not in ("0", "1"):
                raise MatrixParseError(f"invalid binary token {tok!r}", lineno, col)
            bits.append(int(tok))
        ring: list[RingElement] = []
        for tok, col in right:
            try:
                ring.append(parse_token(tok))
            except ValueError:
                raise MatrixParseError(f"invalid ring token {tok!r}", lineno, col) from None
        rows.append(MixedVector.from_lists(bits, ring))
    if header is None:
        raise MatrixParseError("missing header 'r=<int> s=<int>'", 1, 1)
    return GeneratorMatrix(header[0], header[1], tuple(rows))


def read_matrix(path: str | Path) -> GeneratorMatrix:
    return parse_matrix(Path(path).read_text())


def format_matrix(gm: GeneratorMatrix) -> str:
    lines = [f"r={gm.r} s={gm.s}"]
    for v in gm.rows:
        left = " ".join(str(b) for b in v.bits)
        right = " ".join(str(e) for e in v.ring)
        lines.append(" ".join(x for x in (left, "|", right) if x))
    return "\n".join(lines) + "\n"


def parse_rows(literals: list[str]) -> GeneratorMatrix:
    """Inline rows such as "(1,1|1+u,1+u)"; every row must share one shape."""
    rows = [parse_vector(t) for t in literals]
    if not rows:
        raise ValueError("no rows given")
    return GeneratorMatrix.of(rows)
