"""JSON file formats: polynomials, lattices, symmetry descriptors and reports."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .exact import format_fraction, parse_fraction
from .lattice import IntegralLattice
from .poly import Polynomial
from .symmetry import SymmetryType

REPORT_SCHEMA = "symcubic.report/1"


def polynomial_to_json(F: Polynomial) -> dict:
    terms = [{"coef": format_fraction(c), "exps": list(m)} for m, c in sorted(F.terms.items(), reverse=True)]
    return {"vars": F.nvars, "degree": F.degree, "terms": terms}


def polynomial_from_json(data: dict) -> Polynomial:
    try:
        nvars, degree = int(data["vars"]), int(data["degree"])
        terms = {}
        for t in data["terms"]:
            exps = tuple(int(e) for e in t["exps"])
            terms[exps] = terms.get(exps, Fraction(0)) + parse_fraction(t["coef"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed polynomial JSON: {exc}") from exc
    return Polynomial(nvars, degree, terms)


def lattice_from_json(data: dict) -> tuple[IntegralLattice, Any, list]:
    """Returns (lattice, isometry or None, arrangement normal vectors)."""
    try:
        L = IntegralLattice(tuple(tuple(int(x) for x in row) for row in data["gram"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed lattice JSON: {exc}") from exc
    g = data.get("isometry")
    if g is not None:
        g = [[int(x) for x in row] for row in g]
    arrangement = [[int(x) for x in r] for r in data.get("arrangement") or []]
    return L, g, arrangement


def symmetry_from_json(data: dict) -> SymmetryType:
    return SymmetryType.from_json(data)


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc


def jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def dumps_report(report: dict) -> str:
    """Canonical, byte-stable serialization."""
    return json.dumps(jsonable(report), sort_keys=True, indent=2) + "\n"
