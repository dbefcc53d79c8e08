"""JSON and text rendering of results.

Scalars are written as strings (``"3"``, ``"-1/2"``) so that no float ever
appears; keys are sorted so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from importlib import resources

from .algebra import BracketWitness, NLieAlgebra, ValidationReport
from .catalog import AuditReport
from .linalg import Field, Subspace

SCHEMA_VERSION = "nlie-report/1"


def scalar(field: Field, c) -> str:
    return field.render(c)


def vector_json(field: Field, v) -> list[str]:
    return [scalar(field, c) for c in v]


def subspace_json(s: Subspace | None):
    if s is None:
        return None
    return {"dim": s.dim, "basis": [vector_json(s.field, b) for b in s.basis]}


def subspace_from_json(field: Field, ambient_dim: int, obj) -> Subspace:
    return Subspace.span(field, ambient_dim, [[field.parse(c) for c in row] for row in obj["basis"]])


def witness_json(field: Field, w):
    if isinstance(w, Subspace):
        return {"kind": "subspace", "subspace": subspace_json(w)}
    if isinstance(w, BracketWitness):
        return {
            "kind": "bracket",
            "args": [vector_json(field, x) for x in w.args],
            "value": vector_json(field, w.value),
        }
    raise TypeError(f"no JSON form for witness {w!r}")


def header(command: str, a: NLieAlgebra, source: str) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "source": source,
        "field": a.field.spec,
        "arity": a.arity,
        "dim": a.dim,
    }


def validation_json(a: NLieAlgebra, rep: ValidationReport) -> dict:
    return {
        "ok": rep.ok,
        "violation_count": len(rep.violations),
        "violations": [
            {"xs": list(v.xs), "ys": list(v.ys), "residual": vector_json(a.field, v.residual)}
            for v in rep.violations
        ],
    }


def audit_json(rep: AuditReport) -> list[dict]:
    out = []
    for r in rep.results:
        out.append(
            {
                "key": r.key,
                "description": r.description,
                "source": r.source,
                "expected": _claim_value(r.expected),
                "computed": _claim_value(r.computed),
                "status": r.status,
            }
        )
    return out


def _claim_value(v):
    """Claims hold booleans, ints, index tuples, or subspace row tuples."""
    if v is None or isinstance(v, (bool, int)):
        return v
    if isinstance(v, (tuple, list)):
        return [_claim_value(x) if isinstance(x, (tuple, list)) else str(x) for x in v]
    return str(v)


def series_json(series) -> dict:
    return {
        "dims": series.dims,
        "nilpotent": series.nilpotent,
        "index": series.index,
        "terms": [subspace_json(t) for t in series.terms],
    }


def frattini_series_json(fs) -> dict | None:
    if fs is None:
        return None
    return {"index": fs.index, "dims": [t.dim for t in fs.terms], "terms": [subspace_json(t) for t in fs.terms]}


def analysis_json(rep) -> dict:
    a = rep.algebra
    f = a.field
    return {
        "validation": validation_json(a, rep.validation),
        "derived": subspace_json(rep.derived),
        "ideal_series": series_json(rep.ideal_series),
        "F": subspace_json(rep.F),
        "phi": subspace_json(rep.phi),
        "frattini_method": rep.frattini_method,
        "frattini_series": frattini_series_json(rep.frattini_series),
        "E": subspace_json(rep.E),
        "S": subspace_json(rep.S),
        "quotient_elementary": rep.quotient_elementary,
        "verdicts": dict(rep.verdicts),
        "witnesses": {k: witness_json(f, w) for k, w in rep.witnesses.items()},
        "decomposition": None if rep.decomposition is None else [subspace_json(s) for s in rep.decomposition],
        "claim_audit": None if rep.claim_audit is None else audit_json(rep.claim_audit),
        "notes": list(rep.notes),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_schema() -> dict:
    return json.loads(resources.files("nlie").joinpath("report_schema.json").read_text(encoding="utf-8"))


def validate_document(doc: dict) -> None:
    """Raise ``jsonschema.ValidationError`` if ``doc`` does not fit the shipped schema."""
    import jsonschema

    jsonschema.validate(doc, load_schema())


# -- text ------------------------------------------------------------------------


def to_text(doc: dict, indent: int = 0) -> str:
    """Readable rendering of a report document, subspaces shown as spans."""
    pad = "  " * indent
    lines = []
    for key in sorted(doc):
        val = doc[key]
        if isinstance(val, dict) and set(val) == {"dim", "basis"}:
            lines.append(f"{pad}{key}: {_span_text(val)}")
        elif isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            if val:
                lines.append(to_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                if set(item) == {"dim", "basis"}:
                    lines.append(f"{pad}  - {_span_text(item)}")
                else:
                    body = to_text(item, indent + 2).lstrip()
                    lines.append(f"{pad}  - {body}")
        elif isinstance(val, list) and any(isinstance(v, str) and " " in v for v in val):
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  - {v}" for v in val)
        elif isinstance(val, list):
            lines.append(f"{pad}{key}: " + (", ".join(_plain(v) for v in val) if val else "[]"))
        else:
            lines.append(f"{pad}{key}: {_plain(val)}")
    return "\n".join(lines)


def _span_text(obj) -> str:
    if obj["dim"] == 0:
        return "0"
    return "span[" + ", ".join("(" + " ".join(r) + ")" for r in obj["basis"]) + f"] (dim {obj['dim']})"


def _plain(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_plain(x) for x in v) + "]"
    return str(v)
