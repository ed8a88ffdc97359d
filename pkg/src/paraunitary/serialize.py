"""Canonical JSON forms for matrices, idempotent sets, and group tables.

Output is deterministic (sorted keys, fixed entry ordering) so that files
are diff-able and serialize -> parse -> serialize is the identity.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .groups import GroupTable
from .idempotents import IdempotentSet
from .laurent import LaurentPoly, poly_from_text, poly_to_text
from .polymatrix import PolyMatrix
from .scalars import (
    ExactScalar,
    RingDescriptor,
    scalar_from_json,
    scalar_to_json,
)


def dumps(obj) -> str:
    """Canonical JSON text for any to_json-style payload."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def matrix_to_json(m: PolyMatrix) -> dict:
    return {
        "ring": m.ring.to_json(),
        "vars": list(m.vars),
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[poly_to_text(e) for e in row] for row in m.entries],
    }


def matrix_from_json(obj: dict) -> PolyMatrix:
    try:
        ring = RingDescriptor.from_json(obj["ring"])
        entries = [
            [poly_from_text(text, ring) for text in row] for row in obj["entries"]
        ]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad matrix JSON: {exc}") from exc
    m = PolyMatrix(ring, entries)
    if m.rows != obj.get("rows", m.rows) or m.cols != obj.get("cols", m.cols):
        raise ParseError("declared matrix shape does not match the entries")
    return m


def poly_to_json(f: LaurentPoly) -> dict:
    return {"ring": f.ring.to_json(), "poly": poly_to_text(f)}


def poly_from_json(obj: dict) -> LaurentPoly:
    ring = RingDescriptor.from_json(obj["ring"])
    return poly_from_text(obj["poly"], ring)


def scalar_payload(a: ExactScalar) -> dict:
    return {"ring": a.ring.to_json(), "value": scalar_to_json(a)}


def scalar_from_payload(obj: dict) -> ExactScalar:
    ring = RingDescriptor.from_json(obj["ring"])
    return scalar_from_json(obj["value"], ring)


def idemset_to_json(s: IdempotentSet) -> dict:
    return {
        "ring": s.ring.to_json(),
        "n": s.n,
        "members": [matrix_to_json(m) for m in s.members],
        "labels": list(s.labels),
    }


def idemset_from_json(obj: dict, check: bool = True) -> IdempotentSet:
    try:
        members = [matrix_from_json(m) for m in obj["members"]]
        labels = obj.get("labels")
        return IdempotentSet(members, labels, check=check)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad idempotent-set JSON: {exc}") from exc


def grouptable_to_json(t: GroupTable) -> dict:
    return t.to_json()


def grouptable_from_json(obj: dict) -> GroupTable:
    try:
        return GroupTable.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad group-table JSON: {exc}") from exc


def object_to_json(value):
    """Serialize any pipeline output by shape."""
    from .constructors import ClearedMatrix
    from .hadamard import HadamardReport
    from .polymatrix import VerificationReport

    if isinstance(value, PolyMatrix):
        return {"type": "matrix", **matrix_to_json(value)}
    if isinstance(value, IdempotentSet):
        return {"type": "idempotent_set", **idemset_to_json(value)}
    if isinstance(value, LaurentPoly):
        return {"type": "poly", **poly_to_json(value)}
    if isinstance(value, ExactScalar):
        return {"type": "scalar", **scalar_payload(value)}
    if isinstance(value, GroupTable):
        return {"type": "group_table", **grouptable_to_json(value)}
    if isinstance(value, VerificationReport):
        return {
            "type": "report",
            "kind": value.kind,
            "ok": value.ok,
            "failures": list(value.failures),
        }
    if isinstance(value, HadamardReport):
        return {
            "type": "hadamard_report",
            "ok": value.ok,
            "clearing_factor": str(value.clearing_factor),
            "gram_constant": (
                scalar_to_json(value.gram_constant)
                if value.gram_constant is not None
                else None
            ),
            "is_hadamard": value.is_hadamard,
            "butson_q": value.butson_q,
            "scaled": matrix_to_json(value.scaled),
            "cleared": matrix_to_json(value.cleared),
        }
    if isinstance(value, ClearedMatrix):
        return {
            "type": "cleared_matrix",
            "matrix": matrix_to_json(value.matrix),
            "clearing_monomial": poly_to_text(value.clearing_monomial),
            "product_monomial": poly_to_text(value.product_monomial),
        }
    if isinstance(value, (int, bool, str)) or value is None:
        return value
    raise ParseError(f"cannot serialize {type(value).__name__}")
