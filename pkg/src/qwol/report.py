"""Batch reports and their text / CSV / JSON-lines encodings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .verifier import CongruenceVerdict

FORMATS = ("text", "csv", "json")


@dataclass
class CheckReport:
    tool_version: str
    claim: str
    parameters_run: list = field(default_factory=list)
    verdicts: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def header(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "claim": self.claim,
            "parameters_run": [_param_json(p) for p in self.parameters_run],
            "elapsed_ms": self.elapsed_ms,
            "all_hold": self.all_hold,
            "count": len(self.verdicts),
        }

    def __eq__(self, other):
        if not isinstance(other, CheckReport):
            return NotImplemented
        return self.header() == other.header() and self.verdicts == other.verdicts


def _param_json(p):
    return list(p) if isinstance(p, tuple) else p


def _param_text(p) -> str:
    return ";".join(str(x) for x in p) if isinstance(p, tuple) else str(p)


def _format_text(report: CheckReport) -> str:
    status = "all hold" if report.all_hold else "FAILURES"
    lines = [f"# {report.claim}: {len(report.verdicts)} case(s), {status}"]
    if report.elapsed_ms:
        lines[0] += f", {report.elapsed_ms} ms"
    width = max([len(_param_text(v.parameter)) for v in report.verdicts] + [9])
    notes_width = max([len(v.notes) for v in report.verdicts] + [5])
    for v in report.verdicts:
        lines.append(
            f"{_param_text(v.parameter):>{width}}  {v.notes:<{notes_width}}  {'OK' if v.holds else 'FAIL'}"
        )
    return "\n".join(lines) + "\n"


def _format_csv(report: CheckReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["claim", "parameter", "holds", "notes"])
    for v in report.verdicts:
        writer.writerow([v.claim, _param_text(v.parameter), str(v.holds).lower(), v.notes.replace(",", ";")])
    return buf.getvalue()


def _format_json(report: CheckReport) -> str:
    lines = [json.dumps(report.header())]
    lines.extend(json.dumps(v.to_dict()) for v in report.verdicts)
    return "\n".join(lines) + "\n"


def format_report(report: CheckReport, fmt: str = "text") -> bytes:
    try:
        encoder = {"text": _format_text, "csv": _format_csv, "json": _format_json}[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}") from None
    return encoder(report).encode("utf-8")


def parse_json_reports(data) -> list:
    """Inverse of the JSON encoding; accepts several concatenated reports."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    reports = []
    for line in data.splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        if "tool_version" in obj:
            reports.append(
                CheckReport(
                    tool_version=obj["tool_version"],
                    claim=obj["claim"],
                    parameters_run=[tuple(p) if isinstance(p, list) else p for p in obj["parameters_run"]],
                    elapsed_ms=obj["elapsed_ms"],
                )
            )
        else:
            if not reports:
                raise ValueError("verdict line before any report header")
            reports[-1].verdicts.append(CongruenceVerdict.from_dict(obj))
    return reports
