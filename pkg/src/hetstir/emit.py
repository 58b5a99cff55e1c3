"""CSV / JSON / plain-text serialisation of triangles.

Symbolic cells use the polynomial text of :func:`hetstir.ring.format_lampoly`;
cells at a fixed lambda use rational text ``p/q``. JSON cells are always the
list of coefficient strings ascending in lambda-degree (``[]`` for zero), so
a fixed-lambda cell is ``["p/q"]``.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .ring import LamPoly, format_lampoly, format_rat, parse_lampoly, parse_rat
from .triangles import Triangle

SYMBOLIC = "symbolic"


def _prepare(tri: Triangle, lam: Fraction | None) -> Triangle:
    return tri if lam is None else tri.evaluate(lam)


def lambda_label(lam: Fraction | None) -> str:
    return SYMBOLIC if lam is None else format_rat(lam)


def cell_text(v: LamPoly, fixed: bool) -> str:
    return format_rat(v.constant()) if fixed else format_lampoly(v)


def triangle_to_json(tri: Triangle, lam: Fraction | None = None) -> str:
    tri = _prepare(tri, lam)
    head = [("family", tri.family), ("order", tri.order)]
    if tri.r is not None:
        head.append(("r", tri.r))
    head.append(("lambda", lambda_label(lam)))
    lines = ["{"]
    for key, value in head:
        lines.append(f"  {json.dumps(key)}: {json.dumps(value)},")
    lines.append('  "entries": [')
    rows = []
    for row in tri.rows:
        cells = [[format_rat(c) for c in v.coeffs] for v in row]
        rows.append("    " + json.dumps(cells, separators=(", ", ": ")))
    lines.append(",\n".join(rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def triangle_from_json(text: str) -> tuple[Triangle, Fraction | None]:
    obj = json.loads(text)
    entries = obj["entries"]
    rows = tuple(tuple(LamPoly(parse_rat(c) for c in cell) for cell in row) for row in entries)
    lam = None if obj["lambda"] == SYMBOLIC else parse_rat(obj["lambda"])
    tri = Triangle(obj["family"], int(obj["order"]), rows, obj.get("r"))
    return tri, lam


def triangle_to_csv(tri: Triangle, lam: Fraction | None = None) -> str:
    tri = _prepare(tri, lam)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n"] + [f"k={k}" for k in range(tri.order + 1)])
    for n, row in enumerate(tri.rows):
        cells = [cell_text(v, lam is not None) for v in row]
        w.writerow([n] + cells + [""] * (tri.order - n))
    return buf.getvalue()


def triangle_from_csv(text: str) -> list[list[LamPoly]]:
    """Rows of cells from :func:`triangle_to_csv` output (either lambda mode)."""
    reader = csv.reader(io.StringIO(text))
    next(reader)
    rows = []
    for rec in reader:
        n = int(rec[0])
        rows.append([parse_lampoly(c) for c in rec[1 : n + 2]])
    return rows


def triangle_to_text(tri: Triangle, lam: Fraction | None = None) -> str:
    tri = _prepare(tri, lam)
    fixed = lam is not None
    table = [["n\\k"] + [str(k) for k in range(tri.order + 1)]]
    for n, row in enumerate(tri.rows):
        table.append([str(n)] + [cell_text(v, fixed) for v in row] + [""] * (tri.order - n))
    widths = [max(len(r[i]) for r in table) for i in range(len(table[0]))]
    out = []
    for r in table:
        out.append("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(out) + "\n"


WRITERS = {"csv": triangle_to_csv, "json": triangle_to_json, "text": triangle_to_text}
