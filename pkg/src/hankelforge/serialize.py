"""JSON and CSV encodings that never lose exactness."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, List

from .algebra import LaurentPoly, Rational, exact
from .hankel import OperatorWindow

__all__ = [
    "rational_json",
    "rational_from_json",
    "rational_str",
    "poly_json",
    "dumps",
    "window_to_csv",
    "window_from_csv",
    "window_json",
]


def rational_json(q: Rational) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj: dict) -> Rational:
    return exact(Fraction(int(obj["num"]), int(obj["den"])))


def rational_str(q: Rational) -> str:
    return str(Fraction(q))


def poly_json(p: LaurentPoly) -> List[dict]:
    return [{"exp": e, "coeff": rational_json(c)} for e, c in sorted(p.items())]


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _grid(window: OperatorWindow, paper_orientation: bool):
    return window.paper_orientation() if paper_orientation else window.entries


def window_to_csv(window: OperatorWindow, paper_orientation: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in _grid(window, paper_orientation):
        writer.writerow([rational_str(v) for v in row])
    return buf.getvalue()


def window_from_csv(text: str, s: int, paper_orientation: bool = False) -> OperatorWindow:
    rows = [tuple(exact(Fraction(cell)) for cell in row) for row in csv.reader(io.StringIO(text)) if row]
    if paper_orientation:
        rows.reverse()
    cols = len(rows[0]) if rows else 0
    return OperatorWindow(s, len(rows), cols, tuple(rows))


def window_json(window: OperatorWindow, paper_orientation: bool = False) -> dict:
    return {
        "s": window.s,
        "kind": "matrix",
        "orientation": "paper" if paper_orientation else "row0-first",
        "entries": [[rational_json(v) for v in row] for row in _grid(window, paper_orientation)],
    }


def tensor_entries(items: Iterable) -> List[dict]:
    return [{"key": list(k), "value": rational_json(v)} for k, v in sorted(items, key=lambda kv: tuple(-x for x in kv[0]))]
