"""Versioned JSON schemas and the canonical serializer.

The CLI and the HTTP service emit byte-identical documents for identical
requests, so there is exactly one serializer; every emitted document
carries "schema": "v1" and re-validates against its published schema.
"""

from __future__ import annotations

import json

import jsonschema

SCHEMA_VERSION = "v1"

_QUIVER = {
    "type": "object",
    "required": ["vertices", "arrows"],
    "properties": {
        "vertices": {"type": "array", "items": {"type": "string"}},
        "arrows": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0},
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
}

_LIMITS = {
    "type": "object",
    "required": ["max_depth", "max_nodes"],
    "properties": {
        "max_depth": {"type": "integer", "minimum": 1},
        "max_nodes": {"type": "integer", "minimum": 1},
    },
}

_WORD = {"type": "array", "items": {"type": "integer", "minimum": 0}}

SCHEMAS: dict[str, dict] = {
    "quiver": {
        "type": "object",
        "required": ["schema", "quiver", "admissible", "acyclic"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "quiver": _QUIVER,
            "admissible": {"type": "boolean"},
            "acyclic": {"type": "boolean"},
        },
    },
    "mutation-class": {
        "type": "object",
        "required": ["schema", "class_size", "truncated", "limits"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "class_size": {"type": "integer", "minimum": 1},
            "truncated": {"type": "boolean"},
            "limits": _LIMITS,
        },
    },
    "find-acyclic": {
        "type": "object",
        "required": ["schema", "found", "truncated", "class_size", "verdict", "limits"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "found": {"type": "boolean"},
            "witness_word": {"oneOf": [_WORD, {"type": "null"}]},
            "truncated": {"type": "boolean"},
            "class_size": {"type": "integer", "minimum": 1},
            "verdict": {"type": "string"},
            "limits": _LIMITS,
        },
    },
    "model": {
        "type": "object",
        "required": ["schema", "quiver", "auto", "objects", "hom", "suspension"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "name": {"type": "string"},
            "quiver": _QUIVER,
            "auto": {
                "type": "object",
                "required": ["tau", "s"],
                "properties": {"tau": {"type": "integer"}, "s": {"type": "integer"}},
            },
            "objects": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["root", "shift", "label"],
                    "properties": {
                        "root": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                        "shift": {"type": "integer"},
                        "label": {"type": "string"},
                    },
                },
            },
            "hom": {"type": "array",
                    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
            "suspension": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
    },
    "cy-check": {
        "type": "object",
        "required": ["schema", "d", "holds"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "d": {"type": "integer"},
            "holds": {"type": "boolean"},
            "counterexample": {
                "oneOf": [
                    {"type": "null"},
                    {"type": "object",
                     "required": ["source", "target"],
                     "properties": {"source": {"type": "string"},
                                    "target": {"type": "string"}}},
                ]
            },
        },
    },
    "cluster-tilting": {
        "type": "object",
        "required": ["schema", "d", "mode"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "d": {"type": "integer"},
            "mode": {"enum": ["check", "enumerate"]},
            "summands": {"type": "array", "items": {"type": "string"}},
            "holds": {"type": "boolean"},
            "reason": {"oneOf": [{"type": "string"}, {"type": "null"}]},
            "count": {"type": "integer"},
            "candidates": {"type": "array",
                           "items": {"type": "array", "items": {"type": "string"}}},
        },
    },
    "negative-ext": {
        "type": "object",
        "required": ["schema", "d", "holds"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "d": {"type": "integer"},
            "holds": {"type": "boolean"},
            "witness": {
                "oneOf": [
                    {"type": "null"},
                    {"type": "object",
                     "required": ["source", "degree", "target"],
                     "properties": {"source": {"type": "string"},
                                    "degree": {"type": "integer"},
                                    "target": {"type": "string"}}},
                ]
            },
            "reason": {"oneOf": [{"type": "string"}, {"type": "null"}]},
        },
    },
    "endo-quiver": {
        "type": "object",
        "required": ["schema", "quiver", "opposite_quiver", "convention"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "quiver": _QUIVER,
            "opposite_quiver": _QUIVER,
            "convention": {"type": "string"},
        },
    },
    "recognize": {
        "type": "object",
        "required": ["schema", "verdict"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "verdict": {"enum": ["accepted", "rejected"]},
            "failed_hypothesis": {"oneOf": [{"type": "string"}, {"type": "null"}]},
            "detail": {"oneOf": [{"type": "string"}, {"type": "null"}]},
            "witness": {},
            "quiver": {"oneOf": [_QUIVER, {"type": "null"}]},
            "bijection": {
                "oneOf": [
                    {"type": "null"},
                    {"type": "array",
                     "items": {"type": "array", "items": {"type": "string"},
                               "minItems": 2, "maxItems": 2}},
                ]
            },
        },
    },
    "kronecker-survey": {
        "type": "object",
        "required": ["schema", "quiver", "depth", "all_rigid", "entries"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "quiver": _QUIVER,
            "depth": {"type": "integer", "minimum": 1},
            "all_rigid": {"type": "boolean"},
            "entries": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["kind", "vertex", "power", "self_ext_in_quotient", "rigid"],
                },
            },
        },
    },
    "ar-window": {
        "type": "object",
        "required": ["schema", "vertices", "arrows", "translations"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "vertices": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["row", "slice", "root", "shift", "label"],
                },
            },
            "arrows": {"type": "array"},
            "translations": {"type": "array"},
        },
    },
    "error": {
        "type": "object",
        "required": ["schema", "error"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "error": {"type": "string"},
        },
    },
}


def canonical_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def validate_document(kind: str, document: dict) -> dict:
    jsonschema.validate(document, SCHEMAS[kind])
    return document
