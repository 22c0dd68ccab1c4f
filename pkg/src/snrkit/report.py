"""Deterministic text and JSON rendering of analysis results."""
from __future__ import annotations

import json
from typing import Any

from .core import FLAGS, Classification, FiniteSeminearring
from .decompose import FLAG_ORDER, Component
from .greens import RELATIONS, GreensData
from .theorems import TheoremReport

SECTIONS = ("classification", "greens", "components", "theorems")


def _ints(xs) -> list[int] | None:
    return None if xs is None else [int(x) for x in xs]


def classification_json(c: Classification) -> dict:
    out: dict[str, Any] = dict(c.flags())
    out["witnesses"] = {f: _ints(c.witnesses[f]) for f in FLAGS if f in c.witnesses}
    return out


def greens_json(g: GreensData, relation: str | None = None) -> dict:
    rels = (relation,) if relation else RELATIONS
    out: dict[str, Any] = {"order": g.order}
    for r in rels:
        out[f"{r.lower()}_class"] = list(g.class_map(r))
    out["classes"] = {r: [list(c) for c in g.classes[r]] for r in rels}
    return out


def component_json(c: Component, S: FiniteSeminearring | None = None) -> dict:
    out: dict[str, Any] = {"elements": list(c.elements)}
    if S is not None and S.names:
        out["names"] = [S.name(i) for i in c.elements]
    out["is_near_ring"] = c.is_near_ring
    out["zero"] = None if c.zero is None else c.elements[c.zero]
    out["flags"] = None if c.flags is None else c.flags.as_dict()
    out["flag_witnesses"] = (
        None if c.flags is None
        else {f: _ints(c.flags.witnesses[f]) for f in FLAG_ORDER if f in c.flags.witnesses}
    )
    out["failure_witness"] = _ints(c.failure_witness)
    if S is not None and S.names and c.failure_witness is not None:
        out["failure_witness_names"] = [S.name(i) for i in c.failure_witness]
    return out


def theorem_json(r: TheoremReport) -> dict:
    return {
        "theorem_id": r.theorem_id,
        "statements": [
            {"label": s.label, "holds": s.holds, "witness": _ints(s.witness)} for s in r.statements
        ],
        "equivalent": r.equivalent,
    }


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _names(S: FiniteSeminearring | None, xs) -> str:
    if S is None:
        return " ".join(str(x) for x in xs)
    return " ".join(S.name(x) for x in xs)


def _text(section: str, value, S: FiniteSeminearring | None, relation: str | None) -> list[str]:
    if section == "classification":
        lines = ["classification:"]
        for f, v in value.flags().items():
            extra = f"  (witness: {_names(S, value.witnesses[f])})" if f in value.witnesses else ""
            lines.append(f"  {f}: {_bool(v)}{extra}")
        return lines
    if section == "greens":
        lines = ["greens (additive reduct):"]
        for r in (relation,) if relation else RELATIONS:
            blocks = " ".join("{" + _names(S, c) + "}" for c in value.classes[r])
            lines.append(f"  {r}+: {blocks}")
        return lines
    if section == "components":
        lines = [f"components: {len(value)}"]
        for k, c in enumerate(value):
            head = f"  [{k}] size {len(c.elements)} {{{_names(S, c.elements)}}}"
            if not c.is_near_ring:
                lines.append(f"{head} not a near-ring (witness: {_names(S, c.failure_witness)})")
                continue
            flags = " ".join(f"{f}={_bool(v)}" for f, v in c.flags.as_dict().items())
            zero = c.elements[c.zero]
            tail = f" (witness: {_names(S, c.failure_witness)})" if c.failure_witness else ""
            lines.append(f"{head} near-ring zero={_names(S, [zero])} {flags}{tail}")
        return lines
    if section == "theorems":
        lines = []
        for r in value:
            stm = " ".join(f"({i}) {_bool(s.holds)}" for i, s in enumerate(r.statements, start=1))
            verdict = "EQUIVALENT" if r.equivalent else "NOT EQUIVALENT"
            lines.append(f"{r.theorem_id}: {stm} {verdict}")
        return lines
    raise ValueError(f"unknown section {section!r}")


def _json(section: str, value, S, relation) -> Any:
    if section == "classification":
        return classification_json(value)
    if section == "greens":
        return greens_json(value, relation)
    if section == "components":
        return [component_json(c, S) for c in value]
    if section == "theorems":
        return [theorem_json(r) for r in value]
    raise ValueError(f"unknown section {section!r}")


def emit_report(
    result: dict,
    format: str = "text",
    S: FiniteSeminearring | None = None,
    relation: str | None = None,
) -> bytes:
    """Serialize ``{section: value}``; sections appear in the fixed order of SECTIONS."""
    unknown = set(result) - set(SECTIONS)
    if unknown:
        raise ValueError(f"unknown report sections: {sorted(unknown)}")
    keys = [k for k in SECTIONS if k in result]
    if format == "json":
        payload = {k: _json(k, result[k], S, relation) for k in keys}
        return (json.dumps(payload, indent=2) + "\n").encode()
    if format == "text":
        lines: list[str] = []
        for k in keys:
            lines.extend(_text(k, result[k], S, relation))
        return ("\n".join(lines) + "\n").encode() if lines else b""
    raise ValueError(f"unknown format {format!r}")
