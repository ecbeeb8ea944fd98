"""JSON report envelope.

Reports contain only strings, integers, booleans, null, lists and objects.
Rationals are written as ``"p"`` or ``"p/q"``; floats are rejected outright so
two runs with the same inputs give byte-identical files.
"""

from __future__ import annotations

import enum
import json
from fractions import Fraction
from importlib import resources
from typing import Any, Iterable, List

from .polyring import format_coefficient

ARTIFACT_VERSION = "0.1.0"
SCHEMA_VERSION = "1.0"


def jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return format_coefficient(obj)
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "as_dict"):
        return jsonable(obj.as_dict())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def build_report(command: str, parameters: dict, sections: Iterable) -> dict:
    sections = list(sections)
    checks = [(name, ok) for sec in sections for name, ok in sec.checks]
    failures: List[str] = [name for name, ok in checks if not ok]
    return {
        "artifact_version": ARTIFACT_VERSION,
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": jsonable(parameters),
        "results": {sec.name: jsonable(sec.data) for sec in sections},
        "summary": {
            "checks": len(checks),
            "passed": len(checks) - len(failures),
            "failed": len(failures),
            "ok": not failures,
            "failures": failures,
        },
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_schema() -> dict:
    text = resources.files("polyvf").joinpath("schemas/report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
