"""JSON document formats shared by the library and the CLI.

Cycle sets travel as {"kind": "cycle_set", "n": N, "table": [[...]]} with
0-based entries, solutions as {"kind": "solution", "n": N, "lam": [[...]],
"rho": [[...]]}, brace dumps as {"kind": "perm_brace", ...}, and family
parameters as the dicts produced by params_to_dict.
"""

from __future__ import annotations

import json
import sys

from .brace import PermBrace
from .counting import CountReport
from .cycleset import CycleSet
from .errors import InvariantViolation
from .families import FamilyParams, params_from_dict, params_to_dict
from .solutions import Solution

Document = CycleSet | Solution | FamilyParams


def cycle_set_to_dict(cs: CycleSet) -> dict:
    return {"kind": "cycle_set", "n": cs.n, "table": [list(row) for row in cs.table]}


def solution_to_dict(sol: Solution) -> dict:
    return {
        "kind": "solution",
        "n": sol.n,
        "lam": [list(row) for row in sol.lam],
        "rho": [list(row) for row in sol.rho],
    }


def brace_to_dict(brace: PermBrace, max_order: int = 512) -> dict:
    """Full-table dump for regression snapshots; refuses huge braces."""
    return {
        "kind": "perm_brace",
        "n_points": brace.n_points,
        "order": brace.order,
        "circ": brace.circ_table(max_order=max_order).tolist(),
        "add": brace.add_table(max_order=max_order).tolist(),
    }


def count_report_to_dict(report: CountReport) -> dict:
    return {
        "p": report.p,
        "n_cyclic": report.n_cyclic,
        "n_mpl2": report.n_mpl2,
        "n_irr_even": report.n_irr_even,
        "n_irr_zero": report.n_irr_zero,
        "n_irr": report.n_irr,
        "total": report.total,
    }


def _int_rows(doc: dict, key: str) -> tuple[tuple[int, ...], ...]:
    rows = doc.get(key)
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InvariantViolation(f"field {key!r} must be a list of rows")
    try:
        return tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise InvariantViolation(f"field {key!r} holds a non-integer entry") from exc


def document_from_dict(doc: dict) -> Document:
    """Dispatch a parsed JSON object on its "kind" (or "family") tag."""
    if not isinstance(doc, dict):
        raise InvariantViolation("expected a JSON object")
    if "family" in doc:
        return params_from_dict(doc)
    kind = doc.get("kind")
    if kind == "cycle_set":
        return CycleSet(_int_rows(doc, "table"))
    if kind == "solution":
        return Solution(_int_rows(doc, "lam"), _int_rows(doc, "rho"))
    raise InvariantViolation(f"unsupported document kind: {kind!r}")


def document_to_dict(obj) -> dict:
    if isinstance(obj, CycleSet):
        return cycle_set_to_dict(obj)
    if isinstance(obj, Solution):
        return solution_to_dict(obj)
    return params_to_dict(obj)


def load_document(path: str) -> Document:
    if path == "-":
        return document_from_dict(json.load(sys.stdin))
    with open(path, encoding="utf-8") as fh:
        return document_from_dict(json.load(fh))


def dump_line(doc: dict, stream) -> None:
    stream.write(json.dumps(doc, sort_keys=True))
    stream.write("\n")
