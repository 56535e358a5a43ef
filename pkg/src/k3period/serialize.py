"""JSON documents for matrices, planes, verdicts and certificates.

Integer matrices are nested arrays. Rational entries are strings ``"p/q"``
with ``q > 0`` in lowest terms; plain integers and ``"p"`` are accepted on
input.
"""
import json
from fractions import Fraction
from pathlib import Path

import jsonschema

from . import linalg
from .errors import ExactnessError, K3Error
from .grassmann import plane_from_basis

_INT_MATRIX = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
_RATIONAL = {
    "anyOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
        {"type": "number"},
    ]
}

SCHEMAS = {
    "gram": {
        "type": "object",
        "properties": {"gram": _INT_MATRIX},
        "required": ["gram"],
    },
    "isometry": {
        "type": "object",
        "properties": {"matrix": _INT_MATRIX},
        "required": ["matrix"],
    },
    "plane": {
        "type": "object",
        "properties": {
            "basis": {"type": "array", "items": {"type": "array", "items": _RATIONAL}},
            "oriented": {"type": "boolean"},
        },
        "required": ["basis"],
    },
    "vector": {
        "anyOf": [
            {"type": "array", "items": {"type": "integer"}},
            {
                "type": "object",
                "properties": {"vector": {"type": "array", "items": {"type": "integer"}}},
                "required": ["vector"],
            },
        ]
    },
}


class SchemaError(K3Error):
    code = "invalid-input"


def validate(doc, kind):
    try:
        jsonschema.validate(doc, SCHEMAS[kind])
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"{kind} document: {exc.message}") from None
    return doc


def load_json(source):
    """Parse ``source`` as inline JSON, falling back to reading it as a path."""
    text = source.strip()
    if text[:1] in "[{" or text[:1].isdigit() or text[:1] == "-":
        try:
            return json.loads(text)
        except json.JSONDecodeError:
            pass
    path = Path(source)
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        raise SchemaError(f"no such file: {source}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{source}: invalid JSON ({exc})") from None


def dumps(doc):
    return json.dumps(doc, sort_keys=False)


def int_matrix_to_json(M):
    return [[int(x) for x in row] for row in M]


def rat_matrix_to_json(M):
    return [[linalg.fmt_rational(x) for x in row] for row in M]


def plane_to_json(P):
    return {"basis": rat_matrix_to_json(P.basis), "oriented": bool(P.oriented)}


def plane_from_json(doc, lattice, heuristic_denominator=None):
    """Build a plane from a plane document (or a certificate holding one).

    Float entries are only accepted when ``heuristic_denominator`` is given;
    they are then replaced by their best rational approximation with that
    denominator bound. Returns ``(plane, heuristic)``.
    """
    if isinstance(doc, dict) and "plane" in doc and "basis" not in doc:
        doc = doc["plane"]
    validate(doc, "plane")
    rows = []
    heuristic = False
    for row in doc["basis"]:
        out = []
        for x in row:
            if isinstance(x, float):
                if heuristic_denominator is None:
                    raise ExactnessError(
                        "plane has floating-point entries; pass --heuristic-denominator to round them"
                    )
                out.append(Fraction(x).limit_denominator(heuristic_denominator))
                heuristic = True
            else:
                out.append(linalg.parse_rational(x))
        rows.append(out)
    return plane_from_basis(rows, lattice, doc.get("oriented", True)), heuristic


def vector_from_json(doc):
    validate(doc, "vector")
    return doc["vector"] if isinstance(doc, dict) else doc


def isometry_to_json(g):
    return {"matrix": int_matrix_to_json(g.matrix)}


def distance_to_json(d):
    return {"value": d.value, "angles": list(d.hyperbolic_angles)}


def ade_to_json(ade):
    return [{"type": c.type, "rank": c.rank} for c in ade]


def certificate_to_json(cert):
    return {
        "root": list(cert.root.coords),
        "plane": plane_to_json(cert.plane),
        "residual": cert.residual,
    }


def verdict_to_json(v):
    return {
        "in_T": v.in_T,
        "root_count": v.root_count,
        "roots": [list(r.coords) for r in v.roots],
        "ade": ade_to_json(v.ade),
        "stats": v.stats.as_dict(),
    }
