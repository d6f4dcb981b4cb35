"""JSON Schemas (draft 2020-12) for every ``--json`` output of the CLI."""

_INT_LIST = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_EDGE = {"type": "array", "items": {"type": "integer", "minimum": 0},
         "minItems": 2, "maxItems": 2}

NOT_FOUND = {
    "type": "object",
    "properties": {"found": {"const": False}},
    "required": ["found"],
    "additionalProperties": False,
}

RAINBOW_CERTIFICATE = {
    "type": "object",
    "properties": {
        "found": {"const": True},
        "size": {"type": "integer", "minimum": 0},
        "edges": {"type": "array", "items": _EDGE},
        "colors": {"type": "array", "items": {"type": "integer"}},
    },
    "required": ["size", "edges", "colors"],
    "additionalProperties": False,
}

RAINBOW_DECISION = {"oneOf": [NOT_FOUND, {**RAINBOW_CERTIFICATE,
                                          "required": ["found", "size", "edges", "colors"]}]}

BERGE_WITNESS = {
    "type": "object",
    "properties": {
        "T": _INT_LIST,
        "odd_components": {"type": "array", "items": {**_INT_LIST, "minItems": 1}},
        "nu": {"type": "integer", "minimum": 0},
    },
    "required": ["T", "odd_components", "nu"],
    "additionalProperties": False,
}

MONO_CERTIFICATE = {
    "oneOf": [
        NOT_FOUND,
        {
            "type": "object",
            "properties": {"found": {"const": True}, "kind": {"const": "clique"},
                           "color": {"type": "integer"}, "clique_vertices": _INT_LIST},
            "required": ["found", "kind", "color", "clique_vertices"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"found": {"const": True}, "kind": {"const": "join"},
                           "color": {"type": "integer"}, "A_set": _INT_LIST, "B_set": _INT_LIST},
            "required": ["found", "kind", "color", "A_set", "B_set"],
            "additionalProperties": False,
        },
    ]
}

VERDICT = {
    "type": "object",
    "properties": {
        "n": {"type": "integer"},
        "s": {"type": "integer"},
        "color_count": {"type": "integer", "minimum": 0},
        "g": {"type": "integer"},
        "in_range": {"type": "boolean"},
        "hypothesis_colors": {"type": "boolean"},
        "hypothesis_rainbow": {"type": ["boolean", "null"]},
        "conclusion_clique": {"type": "boolean"},
        "conclusion_join": {"type": "boolean"},
        "verdict": {"enum": ["counterexample", "out-of-range-violation", "hypothesis-not-met",
                             "consistent", "inconclusive"]},
        "rainbow_certificate": {"oneOf": [NOT_FOUND, RAINBOW_CERTIFICATE]},
        "clique_certificate": MONO_CERTIFICATE,
        "join_certificate": MONO_CERTIFICATE,
    },
    "required": ["n", "s", "color_count", "g", "in_range", "hypothesis_colors",
                 "hypothesis_rainbow", "conclusion_clique", "conclusion_join", "verdict",
                 "rainbow_certificate", "clique_certificate", "join_certificate"],
    "additionalProperties": False,
}

_CHECK_RECORD = {
    "type": "object",
    "properties": {
        "check": {"type": "string"}, "n": {"type": "integer"}, "s": {"type": "integer"},
        "param": {"type": ["integer", "null"]}, "lhs": {"type": "integer"},
        "relation": {"enum": ["<", "<=", "==", ">", ">="]}, "rhs": {"type": "integer"},
        "passed": {"type": "boolean"}, "margin": {"type": "integer"},
    },
    "required": ["check", "n", "s", "param", "lhs", "relation", "rhs", "passed", "margin"],
    "additionalProperties": False,
}

AUDIT = {
    "type": "object",
    "properties": {
        "grid": {
            "type": "object",
            "properties": {"s_min": {"type": "integer"}, "s_max": {"type": "integer"},
                           "n_min_rule": {"type": "string"}, "n_cap": {"type": "integer"},
                           "cells": {"type": "integer", "minimum": 0}},
            "required": ["s_min", "s_max", "n_min_rule", "n_cap", "cells"],
        },
        "checked": {"type": "object", "additionalProperties": {"type": "integer"}},
        "violations": {"type": "array", "items": _CHECK_RECORD},
        "tightest": {"type": "object", "additionalProperties": _CHECK_RECORD},
        "passed": {"type": "boolean"},
        "records": {"type": "array", "items": _CHECK_RECORD},
    },
    "required": ["grid", "checked", "violations", "tightest", "passed"],
    "additionalProperties": False,
}

PROBE = {
    "type": "object",
    "properties": {
        "instance": {"type": "object"},
        "trials": {"type": "integer", "minimum": 0},
        "outcomes": {"type": "array", "items": {"type": "object"}},
        "counterexamples": {"type": "array", "items": {"type": "object"}},
        "observations": {"type": "array", "items": {"type": "object"}},
        "inconclusive": {"type": "integer", "minimum": 0},
        "base": {"type": ["object", "null"]},
    },
    "required": ["instance", "trials", "outcomes", "counterexamples", "observations",
                 "inconclusive", "base"],
    "additionalProperties": False,
}

THRESHOLD = {
    "type": "object",
    "properties": {"g1": {"type": "integer"}, "g2": {"type": "integer"},
                   "g": {"type": "integer"}, "regime": {"type": "string"},
                   "in_range": {"type": "boolean"}},
    "required": ["g1", "g2", "g", "regime", "in_range"],
    "additionalProperties": False,
}

EX_VALUE = {
    "type": "object",
    "properties": {"n": {"type": "integer"}, "k": {"type": "integer"},
                   "ex": {"type": "integer", "minimum": 0}},
    "required": ["n", "k", "ex"],
    "additionalProperties": False,
}

AR_VALUE = {
    "type": "object",
    "properties": {"n": {"type": "integer"}, "s": {"type": "integer"},
                   "ar": {"type": "integer", "minimum": 0}},
    "required": ["n", "s", "ar"],
    "additionalProperties": False,
}

# subcommand (and variant) -> schema of its --json output
BY_COMMAND = {
    ("formula", "g"): THRESHOLD,
    ("formula", "ex"): EX_VALUE,
    ("formula", "ar"): AR_VALUE,
    ("oracle", "ex"): EX_VALUE,
    ("oracle", "ar"): AR_VALUE,
    ("rainbow", "max"): RAINBOW_CERTIFICATE,
    ("rainbow", "decide"): RAINBOW_DECISION,
    ("decompose", None): BERGE_WITNESS,
    ("detect", "mono-clique"): MONO_CERTIFICATE,
    ("detect", "mono-join"): MONO_CERTIFICATE,
    ("detect", "verdict"): VERDICT,
    ("audit", None): AUDIT,
    ("probe", "boundary"): PROBE,
    ("probe", "random"): PROBE,
}
