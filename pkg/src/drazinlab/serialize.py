"""JSON wire formats: matrices, Drazin results, pair batches and reports.

Scalars are always written as decimal strings (``"p/q"`` or ``"p"``);
shape fields and the index are plain JSON integers.
"""

from __future__ import annotations

from .drazin import DrazinResult
from .errors import ParseError
from .identities import ConditionPair, VerificationReport, check_conditions
from .matrix import Matrix
from .scalar import FieldTag


def matrix_to_json(M: Matrix) -> dict:
    return {"field": str(M.field), "rows": M.rows, "cols": M.cols, "entries": M.tolist()}


def _as_int(value, what):
    try:
        if isinstance(value, bool):
            raise TypeError
        return int(value)
    except (TypeError, ValueError):
        raise ParseError(f"{what} must be an integer, got {value!r}") from None


def matrix_from_json(obj) -> Matrix:
    if not isinstance(obj, dict):
        raise ParseError("matrix must be a JSON object")
    try:
        field = FieldTag.parse(str(obj["field"]))
        entries = obj["entries"]
    except KeyError as exc:
        raise ParseError(f"matrix is missing {exc.args[0]!r}") from None
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise ParseError("entries must be a nested array")
    rows = _as_int(obj.get("rows", len(entries)), "rows")
    cols = _as_int(obj.get("cols", len(entries[0]) if entries else 0), "cols")
    if rows < 1 or cols < 1 or len(entries) != rows or any(len(r) != cols for r in entries):
        raise ParseError(f"entries do not form a {rows}x{cols} matrix")
    return Matrix([[field.parse_value(x) for x in r] for r in entries], field)


def drazin_result_to_json(res: DrazinResult) -> dict:
    return {
        "dinv": matrix_to_json(res.dinv),
        "index": res.index,
        "spectral_idempotent": matrix_to_json(res.spectral_idempotent),
    }


def drazin_result_from_json(obj) -> DrazinResult:
    try:
        return DrazinResult(
            matrix_from_json(obj["dinv"]),
            _as_int(obj["index"], "index"),
            matrix_from_json(obj["spectral_idempotent"]),
        )
    except (KeyError, TypeError):
        raise ParseError("malformed Drazin result") from None


def pair_to_json(pair: ConditionPair) -> dict:
    return {"a": matrix_to_json(pair.a), "b": matrix_to_json(pair.b), "flags": pair.flags}


def pairs_from_json(obj) -> list[ConditionPair]:
    """Accept a pair batch array, an object with ``"pairs"``, or a single pair object.

    Flags present in the input are ignored and recomputed exactly.
    """
    if isinstance(obj, dict) and "pairs" in obj:
        obj = obj["pairs"]
    if isinstance(obj, dict):
        obj = [obj]
    if not isinstance(obj, list) or not obj:
        raise ParseError("expected a non-empty pair batch")
    out = []
    for item in obj:
        if not isinstance(item, dict) or "a" not in item or "b" not in item:
            raise ParseError("each pair needs 'a' and 'b'")
        out.append(check_conditions(matrix_from_json(item["a"]), matrix_from_json(item["b"])))
    return out


def report_to_json(rep: VerificationReport) -> dict:
    return {
        "identity": rep.identity_name,
        "holds": rep.holds,
        "lhs": matrix_to_json(rep.lhs),
        "rhs": matrix_to_json(rep.rhs),
        "notes": rep.notes,
    }


def report_from_json(obj, pair: ConditionPair | None = None) -> VerificationReport:
    try:
        return VerificationReport(
            obj["identity"], bool(obj["holds"]), matrix_from_json(obj["lhs"]),
            matrix_from_json(obj["rhs"]), pair, obj.get("notes", ""),
        )
    except (KeyError, TypeError):
        raise ParseError("malformed report") from None
