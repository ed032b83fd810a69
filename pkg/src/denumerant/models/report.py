"""Result models and rendering for command and suite output."""
import csv
import io
import json
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

import yaml
from pydantic import BaseModel, Field

from .certificates import VerificationStep
from .config import OutputFormat


class CheckStatus(str, Enum):
    """Outcome of one verification check."""
    PASS = "pass"
    FAIL = "fail"
    BOUNDED = "bounded"  # only inconclusive, bound-limited evidence


class CheckResult(BaseModel):
    key: str = Field(..., description="Stable check identifier")
    topic: str = Field(..., description="Selection tag the check belongs to")
    description: str = Field(..., description="What is being checked")
    status: CheckStatus
    checked: int = Field(0, description="Number of instances verified")
    informational: bool = Field(False, description="Excluded from the exit status")
    errata: List[str] = Field(default_factory=list, description="Printed formulas that failed exact checks")
    notes: List[str] = Field(default_factory=list)
    transcript: List[VerificationStep] = Field(default_factory=list)


class SuiteReport(BaseModel):
    selection: List[str] = Field(default_factory=list, description="Selected topics")
    results: List[CheckResult] = Field(default_factory=list)

    @property
    def exit_code(self) -> int:
        """0 if everything passed, 1 on any failure, 2 if only bounded items remain."""
        counted = [r for r in self.results if not r.informational]
        if any(r.status == CheckStatus.FAIL for r in counted):
            return 1
        if any(r.status == CheckStatus.BOUNDED for r in counted):
            return 2
        return 0

    def matrix(self) -> List[Dict[str, Any]]:
        return [
            {
                "topic": r.topic,
                "check": r.key,
                "status": r.status.value,
                "checked": r.checked,
                "errata": len(r.errata),
            }
            for r in self.results
        ]


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

class _LiteralBlockDumper(yaml.SafeDumper):
    """YAML Dumper that uses literal block style (|) for multiline strings."""

    def choose_scalar_style(self):  # type: ignore[no-untyped-def]
        if self.event.value and "\n" in self.event.value:
            return "|"
        return super().choose_scalar_style()


def _str_representer(dumper, data):  # type: ignore[no-untyped-def]
    if "\n" in data:
        return dumper.represent_scalar("tag:yaml.org,2002:str", data, style="|")
    return dumper.represent_scalar("tag:yaml.org,2002:str", data)


def _enum_representer(dumper, data):  # type: ignore[no-untyped-def]
    return dumper.represent_scalar("tag:yaml.org,2002:str", data.value)


_LiteralBlockDumper.add_representer(str, _str_representer)
_LiteralBlockDumper.add_multi_representer(Enum, _enum_representer)


def format_response_as_markdown(title: str, data: Any) -> str:
    """Markdown heading followed by a YAML code block."""
    yaml_content = yaml.dump(
        data,
        Dumper=_LiteralBlockDumper,
        allow_unicode=True,
        default_flow_style=False,
        sort_keys=False,
        width=10000,
    )
    return f"### {title}\n\n```yaml\n{yaml_content}```"


def format_rows_as_csv(rows: Sequence[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    if not rows:
        return ""
    columns = columns or list(rows[0].keys())
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_cell(row.get(k)) for k in columns})
    return buffer.getvalue()


def _csv_cell(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return value


def render(
    title: str,
    payload: Any,
    fmt: OutputFormat,
    rows: Optional[Sequence[Dict[str, Any]]] = None,
) -> str:
    """Render a model (or JSON-ready data) in the requested format.

    CSV needs ``rows``; commands without a tabular view fall back to JSON.
    """
    data = payload.model_dump(mode="json", exclude_none=True) if isinstance(payload, BaseModel) else payload
    if fmt == OutputFormat.CSV and rows is not None:
        return format_rows_as_csv(rows)
    if fmt == OutputFormat.TEXT:
        return format_response_as_markdown(title, data)
    return json.dumps(data, indent=4)
