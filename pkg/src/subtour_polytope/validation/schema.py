from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict


@lru_cache(maxsize=None)
def _load_schema(schema_path: Path) -> Dict[str, Any]:
    return json.loads(schema_path.read_text(encoding="utf-8"))


def validate_json_schema(instance: Dict[str, Any], schema_path: Path) -> None:
    """Validate an instance dict against a JSON Schema file.

    If `jsonschema` is unavailable, the function becomes a no-op so documents
    are still emitted in minimal environments.
    """
    try:
        from jsonschema import Draft7Validator  # type: ignore
    except Exception:
        return  # No-op when validator is not installed

    validator = Draft7Validator(_load_schema(schema_path))
    errors = sorted(validator.iter_errors(instance), key=lambda e: list(e.path))
    if errors:
        first = errors[0]
        raise ValueError(f"Schema validation error at {list(first.path)}: {first.message}")


def schema_path_for(instance: Dict[str, Any], schemas_dir: Path) -> Path:
    """Map "subtour-polytope/<name>@<version>" to `<schemas_dir>/<name>.schema.json`."""
    sid = instance.get("schema")
    if not isinstance(sid, str) or "/" not in sid or "@" not in sid:
        raise ValueError(f"document has no valid schema id: {sid!r}")
    name = sid.split("/", 1)[1].split("@", 1)[0]
    return schemas_dir / f"{name}.schema.json"


def validate_document(instance: Dict[str, Any], schemas_dir: Path) -> None:
    """Validate a document against the schema named by its "schema" field, if present on disk."""
    path = schema_path_for(instance, schemas_dir)
    if not path.exists():
        return
    validate_json_schema(instance, path)
