"""Table emitters for text, JSON lines, CSV and LaTeX."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction as Q
from typing import Any, Mapping, Sequence

FORMATS = ("text", "json", "csv", "latex")


class EmitError(ValueError):
    pass


def cell_text(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Q):
        return str(v)
    if isinstance(v, (list, tuple)):
        return "{" + ",".join(cell_text(x) for x in v) + "}"
    if isinstance(v, Mapping):
        return "{" + ", ".join(f"{k}: {cell_text(x)}" for k, x in v.items()) + "}"
    if v is None:
        return ""
    return str(v)


def _jsonable(v: Any):
    if isinstance(v, Q):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, Mapping):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def _schema(rows: Sequence[Mapping], columns: Sequence[str] | None) -> list[str]:
    if columns is None:
        if not rows:
            raise EmitError("an empty table needs explicit columns")
        columns = list(rows[0])
    cols = list(columns)
    for n, r in enumerate(rows):
        if list(r) != cols:
            raise EmitError(f"row {n} has columns {list(r)}, expected {cols}")
    return cols


_LATEX = {"\\": r"\backslash ", "&": r"\&", "_": r"\_", "#": r"\#", "{": r"\{", "}": r"\}", "%": r"\%"}


def _latex_escape(s: str) -> str:
    return "".join(_LATEX.get(ch, ch) for ch in s)


def emit_table(rows: Sequence[Mapping], fmt: str = "text", columns: Sequence[str] | None = None) -> bytes:
    """Render homogeneous rows; the caller is responsible for their order."""
    cols = _schema(rows, columns)
    if fmt == "json":
        out = "".join(json.dumps(_jsonable(dict(r)), ensure_ascii=False) + "\n" for r in rows)
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([cell_text(r[c]) for c in cols])
        out = buf.getvalue()
    elif fmt == "text":
        cells = [cols] + [[cell_text(r[c]) for c in cols] for r in rows]
        widths = [max(len(line[k]) for line in cells) for k in range(len(cols))]
        out = "".join("  ".join(x.ljust(wd) for x, wd in zip(line, widths)).rstrip() + "\n" for line in cells)
    elif fmt == "latex":
        spec = "|" + "|".join("c" for _ in cols) + "|"
        lines = [f"\\begin{{tabular}}{{{spec}}}", "\\hline"]
        lines.append(" & ".join(f"\\texttt{{{_latex_escape(c)}}}" for c in cols) + " \\\\")
        lines.append("\\hline")
        for r in rows:
            lines.append(" & ".join(f"${_latex_escape(cell_text(r[c]))}$" for c in cols) + " \\\\")
        lines += ["\\hline", "\\end{tabular}"]
        out = "\n".join(lines) + "\n"
    else:
        raise EmitError(f"unknown format {fmt!r}")
    return out.encode("utf-8")


def emit_report(pairs: Sequence[tuple[str, Any]], fmt: str = "text") -> bytes:
    """A single key/value record."""
    if fmt == "json":
        return (json.dumps({k: _jsonable(v) for k, v in pairs}, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "text":
        return "".join(f"{k}: {cell_text(v)}\n" for k, v in pairs).encode("utf-8")
    return emit_table([{"key": k, "value": v} for k, v in pairs], fmt, ["key", "value"])
