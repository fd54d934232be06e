"""Parsing of the neartrig CSV curve contract.

A curve file is one comment line
``# fn=<id> params=<k=v,...> generated-by=neartrig``, a header row that is
either ``x,value`` or ``t,cos,sin``, and numeric rows with LF endings.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass

_COMMENT_RE = re.compile(r"^# fn=(\S+) params=(\S*) generated-by=neartrig$")

HEADERS = (("x", "value"), ("t", "cos", "sin"))


class CurveParseError(ValueError):
    """The file does not satisfy the CSV curve contract."""


@dataclass
class ParsedCurve:
    label: str            # file stem, e.g. "fig2a_cos_m0.5"
    fn_id: str
    params: str
    columns: tuple
    rows: list            # list of float tuples, one per grid point

    @property
    def panel(self) -> str:
        """Panel letter encoded in the label ('' for single-panel figures)."""
        head = self.label.split("_")[0]
        m = re.match(r"fig\d+([a-z]?)$", head)
        return m.group(1) if m else ""


def parse_curve(path: str) -> ParsedCurve:
    if not os.path.exists(path):
        raise CurveParseError(f"no such curve file: {path}")
    with open(path, "r", newline="") as fh:
        text = fh.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 3:
        raise CurveParseError(f"{path}: need a comment, a header and data rows")
    m = _COMMENT_RE.match(lines[0])
    if not m:
        raise CurveParseError(f"{path}: malformed comment line {lines[0]!r}")
    fn_id, params = m.group(1), m.group(2)
    columns = tuple(lines[1].split(","))
    if columns not in HEADERS:
        raise CurveParseError(f"{path}: unknown header {lines[1]!r}")
    rows = []
    for i, line in enumerate(lines[2:], start=3):
        parts = line.split(",")
        if len(parts) != len(columns):
            raise CurveParseError(f"{path}:{i}: expected {len(columns)} fields")
        try:
            row = tuple(float(p) for p in parts)
        except ValueError as exc:
            raise CurveParseError(f"{path}:{i}: non-numeric field ({exc})") from None
        rows.append(row)
    for (a, *_), (b, *_) in zip(rows, rows[1:]):
        if not b > a:
            raise CurveParseError(f"{path}: grid not strictly increasing")
    label = os.path.splitext(os.path.basename(path))[0]
    return ParsedCurve(label, fn_id, params, columns, rows)
