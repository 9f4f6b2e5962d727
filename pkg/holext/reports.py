"""Deterministic report writers.

JSON keeps model field order and Python's shortest round-trip float repr,
so identical runs give byte-identical files. CSV has one row per detail
record, ready for plotting.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd
from pydantic import BaseModel

from .models import format_complex


def _plain(value: Any) -> Any:
    if isinstance(value, complex):
        return format_complex(value)
    if isinstance(value, dict):
        return {key: _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if hasattr(value, "item"):
        return value.item()
    return value


def to_data(report: BaseModel) -> Dict[str, Any]:
    return _plain(report.model_dump(mode="json"))


def dump_json(report: BaseModel) -> str:
    return json.dumps(to_data(report), indent=2, allow_nan=True) + "\n"


def _rows(data: Dict[str, Any]) -> List[Dict[str, Any]]:
    for key in ("details", "counterexamples", "entries"):
        rows = data.get(key)
        if rows:
            return rows
    return [data]


def _cell(value: Any) -> Any:
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    return value


def dump_csv(report: BaseModel) -> str:
    """One row per detail record, headed by the report subject."""
    data = to_data(report)
    rows = [
        {key: _cell(value) for key, value in row.items()}
        for row in _rows(data)
    ]
    frame = pd.DataFrame(rows)
    if "subject" in data and "subject" not in frame.columns:
        frame.insert(0, "subject", data["subject"])
    if "verdict" in data and "report_verdict" not in frame.columns:
        frame["report_verdict"] = data["verdict"]
    return frame.to_csv(index=False)


def render(report: BaseModel, format: str = "json") -> str:
    if format == "json":
        return dump_json(report)
    if format == "csv":
        return dump_csv(report)
    raise ValueError(f"unknown report format '{format}'")


def write_report(
    report: BaseModel,
    out: Optional[Union[str, Path]] = None,
    format: str = "json",
) -> str:
    """Render a report and write it to ``out`` when a path is given."""
    text = render(report, format)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
    return text
