"""Parsing and formatting of rationals, matrices and vectors.

Rationals serialize as "p/q", or just "p" when the denominator is 1.  The
parser additionally accepts terminating decimals ("0.25"), which convert
exactly.  Pretty matrix output marks structural zeros (entries with
x + z < n - 1, where the defining interval is empty) with a middle dot.
"""

from __future__ import annotations

import io
import json
from fractions import Fraction

from .errors import OutOfRange

DOT = "·"


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise OutOfRange(f"cannot parse rational from {text!r}") from exc


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma-separated list like '1,1/2,0.25'."""
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise OutOfRange("empty rational list")
    return [parse_rational(t) for t in items]


def format_vector(v) -> list[str]:
    return [format_rational(x) for x in v]


def matrix_to_csv(rows, header: bool = True) -> str:
    out = io.StringIO()
    n_cols = len(rows[0]) if rows else 0
    if header:
        out.write(",".join(f"c{j}" for j in range(n_cols)) + "\n")
    for row in rows:
        out.write(",".join(format_rational(x) for x in row) + "\n")
    return out.getvalue()


def matrix_from_csv(text: str):
    """Read a matrix of 'p/q' entries; a non-numeric first row is a header."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        cells = [c.strip() for c in line.split(",")]
        try:
            rows.append([parse_rational(c) for c in cells])
        except OutOfRange:
            if rows:
                raise
            # tolerate a single header line
    if not rows:
        raise OutOfRange("no matrix rows found")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise OutOfRange("ragged matrix rows")
    return rows


def matrix_to_json(rows, **extra) -> str:
    payload = {"n": len(rows), "entries": [[format_rational(x) for x in row] for row in rows]}
    payload.update(extra)
    return json.dumps(payload)


def matrix_to_pretty(rows, structural_dots: bool = True) -> str:
    """Align columns; structural zeros print as a dot, true zeros as 0."""
    n = len(rows)
    cells = []
    for x, row in enumerate(rows):
        line = []
        for z, value in enumerate(row):
            if structural_dots and value == 0 and x + z < n - 1 and len(row) == n:
                line.append(DOT)
            else:
                line.append(format_rational(value))
        cells.append(line)
    widths = [max(len(cells[i][j]) for i in range(len(cells))) for j in range(len(cells[0]))]
    lines = []
    for line in cells:
        lines.append("  ".join(s.rjust(w) for s, w in zip(line, widths)))
    return "\n".join(lines)
