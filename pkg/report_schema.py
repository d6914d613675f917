from typing import Any, Dict

from jsonschema import ValidationError, validate

from ed_logger import get_logger

PROBE_CONDITIONS = ["unimodular", "sr1", "sr2", "simple2", "nsimple", "unit-product",
                    "construction", "from-reduction", "komarnytsky"]
PROBE_STATUSES = ["found", "exhausted", "hypothesis_failed", "counterexample"]
FORMS = ["smith", "hermite", "dk2x2"]


def _ring_schema() -> Dict[str, Any]:
    return {
        "type": "object",
        "properties": {
            "kind": {"type": "string", "enum": ["Int", "IntMod", "PolyRat", "PolyFp", "SkewPolyFq", "QuatPoly"]},
            "params": {"type": "object", "additionalProperties": {"type": "integer"}},
        },
        "required": ["kind"],
        "additionalProperties": False,
    }


def _grid_schema() -> Dict[str, Any]:
    return {
        "type": "array",
        "minItems": 1,
        "items": {"type": "array", "minItems": 1, "items": {"type": "string"}},
    }


def _tool_schema() -> Dict[str, Any]:
    return {
        "type": "object",
        "properties": {"name": {"type": "string"}, "version": {"type": "string"}},
        "required": ["name", "version"],
    }


def matrix_file_schema() -> Dict[str, Any]:
    """A matrix file: ring spec plus entries written in the element grammar."""
    return {
        "type": "object",
        "properties": {
            "ring": _ring_schema(),
            "rows": {"type": "integer", "minimum": 1},
            "cols": {"type": "integer", "minimum": 1},
            "entries": _grid_schema(),
        },
        "required": ["ring", "rows", "cols", "entries"],
    }


def reduction_report_schema() -> Dict[str, Any]:
    return {
        "type": "object",
        "properties": {
            "tool": _tool_schema(),
            "options": {"type": "object"},
            "ring": _ring_schema(),
            "form": {"type": "string", "enum": FORMS},
            "D": _grid_schema(),
            "P": _grid_schema(),
            "Pinv": _grid_schema(),
            "Q": _grid_schema(),
            "Qinv": _grid_schema(),
            "chain": {"type": "array", "items": {"type": "boolean"}},
            "invariant": {"type": "array", "items": {"type": "boolean"}},
            "verified": {"type": "boolean"},
        },
        "required": ["tool", "options", "ring", "form", "D", "P", "Pinv", "Q", "Qinv",
                     "chain", "invariant", "verified"],
    }


def probe_report_schema() -> Dict[str, Any]:
    return {
        "type": "object",
        "properties": {
            "tool": _tool_schema(),
            "options": {"type": "object"},
            "ring": _ring_schema(),
            "condition": {"type": "string", "enum": PROBE_CONDITIONS},
            "inputs": {"type": "array", "items": {"type": "string"}},
            "witness": {
                "oneOf": [
                    {"type": "null"},
                    {"type": "object", "additionalProperties": {"type": ["string", "boolean", "integer", "array"]}},
                ]
            },
            "bound": {"type": "integer", "minimum": 1},
            "status": {"type": "string", "enum": PROBE_STATUSES},
        },
        "required": ["tool", "options", "ring", "condition", "inputs", "witness", "bound", "status"],
    }


def validate_json_output(json_data: Dict[str, Any], schema: Dict[str, Any]) -> bool:
    """
    Validates JSON data against the provided schema, logging the failing path.
    """
    try:
        validate(instance=json_data, schema=schema)
        return True
    except ValidationError as e:
        logger = get_logger()
        logger.error(f"JSON validation error: {e.message}")
        logger.error(f"Path: {' -> '.join(map(str, e.path))}")
        logger.debug(f"Schema path: {' -> '.join(map(str, e.schema_path))}")
        return False
