"""JSON encodings for matrices, automorphisms, and class labels."""
from __future__ import annotations

import json

from .errors import DimensionMismatch, FieldMismatch, ParseError
from .fields import parse_field
from .involutions import INNER, OUTER, Automorphism, LType, OuterAlternate, OuterDiagonal, PType
from .matrix import Matrix


def element_from_json(field, v):
    if isinstance(v, bool):
        raise ParseError(f"boolean {v!r} is not a field element")
    if isinstance(v, int):
        return field(v) if field.is_finite else field.coerce(v)
    if isinstance(v, str):
        return field.parse_element(v)
    raise ParseError(f"cannot read {v!r} as a field element")


def matrix_to_json(M: Matrix) -> dict:
    return {"field": M.field.descriptor, "n": M.n, "rows": M.to_lists()}


def matrix_from_json(obj, field=None, n: int | None = None) -> Matrix:
    """Accepts Matrix JSON or a bare list of rows (then ``field`` is required)."""
    if isinstance(obj, list):
        rows = obj
    elif isinstance(obj, dict) and "rows" in obj:
        rows = obj["rows"]
        if "field" in obj:
            f = parse_field(obj["field"])
            if field is not None and f != field:
                raise FieldMismatch(f"matrix field {f.descriptor} differs from {field.descriptor}")
            field = f
        if "n" in obj:
            if n is not None and obj["n"] != n:
                raise DimensionMismatch(f"matrix has n={obj['n']}, expected {n}")
            n = obj["n"]
    else:
        raise ParseError("expected a matrix object with 'rows' or a list of rows")
    if field is None:
        raise ParseError("matrix field is not given")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("rows must be a list of lists")
    M = Matrix(field, [[element_from_json(field, v) for v in r] for r in rows])
    if M.nrows != M.ncols or (n is not None and M.nrows != n):
        raise DimensionMismatch(f"expected a square {n or M.nrows}x{n or M.nrows} matrix")
    return M


def automorphism_to_json(phi: Automorphism) -> dict:
    return {"parity": phi.parity, "A": matrix_to_json(phi.mat)}


def automorphism_from_json(obj, field=None, n: int | None = None) -> Automorphism:
    if not isinstance(obj, dict):
        raise ParseError("expected an automorphism object")
    parity = obj.get("parity", INNER)
    if parity not in (INNER, OUTER):
        raise ParseError(f"parity must be 'inner' or 'outer', not {parity!r}")
    if "A" not in obj:
        raise ParseError("automorphism object lacks 'A'")
    return Automorphism(parity, matrix_from_json(obj["A"], field, n))


def label_to_json(label) -> dict:
    return label.to_json()


def label_from_json(obj, field):
    kind = obj.get("type") if isinstance(obj, dict) else None
    if kind == "L":
        return LType(int(obj["m"]))
    if kind == "P":
        return PType(element_from_json(field, obj["p"]))
    if kind == "outer-diag":
        return OuterDiagonal(tuple(element_from_json(field, c) for c in obj["classes"]))
    if kind == "outer-alt":
        return OuterAlternate()
    raise ParseError(f"unknown label {obj!r}")


def dumps(obj) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2)
