"""JSON input documents for groups and actions, and the report schema."""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import numpy as np

from . import constructors as C
from .action import ActionSpec, Automorphism, full_aut, inner_action, overgroup_action
from .errors import InputError
from .group import FiniteGroup

FAMILIES = {
    "cyclic": (C.cyclic, ("n",)),
    "elementary_abelian": (C.elementary_abelian, ("p", "k")),
    "dihedral": (C.dihedral, ("order",)),
    "quaternion8": (C.quaternion8, ()),
    "sym": (C.sym, ("n",)),
    "alt": (C.alt, ("n",)),
    "sl2": (C.sl2, ("q",)),
    "psl2": (C.psl2, ("q",)),
    "extraspecial_p3_exp_p": (C.extraspecial_p3_exp_p, ("p",)),
}

_int_rows = {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}}

GROUP_SCHEMA = {
    "oneOf": [
        {
            "type": "object",
            "required": ["kind"],
            "properties": {
                "kind": {"enum": sorted(FAMILIES)},
                "params": {"type": "object", "additionalProperties": {"type": "integer"}},
                "name": {"type": "string"},
            },
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["generators"],
            "properties": {
                "generators": {
                    "type": "array",
                    "minItems": 1,
                    "items": {"oneOf": [{"type": "array", "items": {"type": "integer", "minimum": 0}}, _int_rows]},
                },
                "field": {"type": "integer", "minimum": 2},
                "name": {"type": "string"},
            },
            "additionalProperties": False,
        },
    ]
}

ACTION_SCHEMA = {
    "type": "object",
    "minProperties": 1,
    "maxProperties": 2,
    "properties": {
        "inner": {"const": True},
        "full_aut": {"const": True},
        "overgroup": {"type": "array", "minItems": 1, "items": _int_rows},
        "maps": {"type": "array", "minItems": 1, "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
        "name": {"type": "string"},
    },
    "additionalProperties": False,
}

INPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "orbitgraph input",
    "type": "object",
    "required": ["group"],
    "properties": {
        "group": {"$ref": "#/$defs/group"},
        "actions": {"type": "object", "additionalProperties": {"$ref": "#/$defs/action"}},
    },
    "additionalProperties": False,
    "$defs": {"group": GROUP_SCHEMA, "action": ACTION_SCHEMA},
}

_check = {"type": "object", "required": ["status"],
          "properties": {"status": {"enum": ["pass", "fail", "n/a", "sampled"]}, "witness": {}}}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "orbitgraph analysis report",
    "type": "object",
    "required": ["group", "action", "orbit_sizes", "orbit_reps", "rep_orders", "graph", "shape",
                 "singular", "structure", "theorem_case", "checklist", "expected"],
    "properties": {
        "group": {"type": "object", "required": ["name", "order"]},
        "action": {"type": "object", "required": ["name", "provenance", "generators"]},
        "orbit_sizes": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "orbit_reps": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "rep_orders": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "graph": {
            "type": "object",
            "required": ["vertices", "edges", "source"],
            "properties": {
                "vertices": {"type": "array", "items": {"type": "object", "required": ["id", "rep", "size"]}},
                "edges": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2}},
            },
        },
        "shape": {"type": "object", "required": ["kind", "params", "text"]},
        "singular": {"oneOf": [{"type": "null"}, {"type": "object", "required": ["id", "rep", "size", "order"]}]},
        "structure": {"type": "object"},
        "theorem_case": {"type": "object", "required": ["tag", "witnesses", "flags"]},
        "checklist": {"type": "object", "additionalProperties": _check},
        "expected": {"type": "object"},
    },
}


def _validate(doc, schema, what: str) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        raise InputError(f"invalid {what}: {exc.message}") from None


def validate_input(doc: dict) -> None:
    _validate(doc, INPUT_SCHEMA, "input document")


def validate_report(doc: dict) -> None:
    jsonschema.validate(doc, REPORT_SCHEMA)


def group_from_spec(spec: dict) -> FiniteGroup:
    _validate(spec, GROUP_SCHEMA, "group spec")
    if "kind" in spec:
        fn, names = FAMILIES[spec["kind"]]
        params = spec.get("params", {})
        missing = [n for n in names if n not in params]
        if missing or set(params) - set(names):
            raise InputError(f"{spec['kind']} takes parameters {list(names)}")
        G = fn(*(params[n] for n in names))
    else:
        gens = [np.asarray(g, dtype=np.int64) for g in spec["generators"]]
        if "field" in spec:
            G = C.matrix_group(spec["field"], gens)
        else:
            if any(g.ndim != 1 for g in gens):
                raise InputError("permutation generators must be flat image arrays (or give a field for matrices)")
            G = C.permutation_group(len(gens[0]), gens)
    if "name" in spec:
        G.name = spec["name"]
    return G


def action_from_spec(G: FiniteGroup, spec: dict, *, budget: int | None = None) -> ActionSpec:
    _validate(spec, ACTION_SCHEMA, "action spec")
    name = spec.get("name", "")
    if spec.get("inner"):
        A = inner_action(G)
    elif spec.get("full_aut"):
        A = full_aut(G) if budget is None else full_aut(G, budget)
    elif "overgroup" in spec:
        A = overgroup_action([np.asarray(h, dtype=np.int64) for h in spec["overgroup"]], G)
    elif "maps" in spec:
        A = ActionSpec([Automorphism(np.asarray(m, dtype=np.int64)) for m in spec["maps"]], provenance="maps")
        A.validate(G)
    else:
        raise InputError("action needs one of inner, full_aut, overgroup, maps")
    if name:
        A.name = name
    return A


def load_document(path: str | Path) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    validate_input(doc)
    return doc


def write_schemas(directory: str | Path) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    out = []
    for fname, schema in (("input.schema.json", INPUT_SCHEMA), ("report.schema.json", REPORT_SCHEMA)):
        p = d / fname
        p.write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n")
        out.append(p)
    return out
