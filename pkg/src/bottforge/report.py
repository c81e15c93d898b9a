"""Verification report structure and renderers.

A report records one machine-checked claim: the scan box, one status line
per case, any exceptional entries found, tail certificates for infinite
quantifiers, and the rank hints used.  A report with any FAIL or
UNVERIFIED case makes the CLI exit nonzero.  JSON output is canonical
(sorted keys, no wall time) so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA_VERSION = 1


@dataclass
class Case:
    name: str
    status: str  # PASS | FAIL | UNVERIFIED
    detail: str = ""


@dataclass
class VerificationReport:
    target: str
    claim: str
    box: dict[str, str] = field(default_factory=dict)
    cases: list[Case] = field(default_factory=list)
    exceptional: list[dict[str, Any]] = field(default_factory=list)
    tail_certificates: dict[str, int] = field(default_factory=dict)
    hints_used: list[str] = field(default_factory=list)
    tables: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.cases.append(Case(name, "PASS" if ok else "FAIL", detail))

    def add_unverified(self, name: str, detail: str = "") -> None:
        self.cases.append(Case(name, "UNVERIFIED", detail))

    @property
    def passed(self) -> bool:
        return all(c.status == "PASS" for c in self.cases)

    def counts(self) -> dict[str, int]:
        out = {"PASS": 0, "FAIL": 0, "UNVERIFIED": 0}
        for c in self.cases:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    # -- renderers ---------------------------------------------------------

    def to_json_dict(self) -> dict[str, Any]:
        # wall time is deliberately omitted: JSON output is byte-stable
        return {
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "target": self.target,
            "claim": self.claim,
            "box": dict(sorted(self.box.items())),
            "result": "PASS" if self.passed else "FAIL",
            "counts": self.counts(),
            "cases": [
                {"name": c.name, "status": c.status, "detail": c.detail}
                for c in self.cases
            ],
            "exceptional": self.exceptional,
            "tail_certificates": dict(sorted(self.tail_certificates.items())),
            "hints_used": sorted(self.hints_used),
            "tables": self.tables,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    def render_text(self) -> str:
        lines = [f"target: {self.target}", f"claim: {self.claim}"]
        if self.box:
            lines.append(
                "box: " + " ".join(f"{k}={v}" for k, v in sorted(self.box.items()))
            )
        counts = self.counts()
        lines.append(
            f"cases: {counts['PASS']} PASS, {counts['FAIL']} FAIL, "
            f"{counts['UNVERIFIED']} UNVERIFIED"
        )
        for c in self.cases:
            if c.status != "PASS":
                lines.append(f"  {c.status}: {c.name}" + (f" ({c.detail})" if c.detail else ""))
        if self.exceptional:
            lines.append("exceptional entries:")
            for e in self.exceptional:
                lines.append("  " + ", ".join(f"{k}={v}" for k, v in e.items()))
        if self.tail_certificates:
            worst = max(self.tail_certificates.values())
            lines.append(
                f"tail certificates: {len(self.tail_certificates)} families, "
                f"all dominant from k = {worst} on"
            )
        for h in self.hints_used:
            lines.append(f"hint: {h}")
        lines.append(f"wall time: {self.wall_time:.2f}s")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def render_md(self) -> str:
        lines = [f"# verify {self.target}", "", self.claim, ""]
        if self.box:
            lines.append(
                "scan box: " + ", ".join(f"{k} = {v}" for k, v in sorted(self.box.items()))
            )
            lines.append("")
        counts = self.counts()
        lines.append("| status | count |")
        lines.append("| --- | --- |")
        for key in ("PASS", "FAIL", "UNVERIFIED"):
            lines.append(f"| {key} | {counts[key]} |")
        lines.append("")
        bad = [c for c in self.cases if c.status != "PASS"]
        if bad:
            lines.append("| case | status | detail |")
            lines.append("| --- | --- | --- |")
            for c in bad:
                lines.append(f"| {c.name} | {c.status} | {c.detail} |")
            lines.append("")
        if self.exceptional:
            keys = sorted({k for e in self.exceptional for k in e})
            lines.append("| " + " | ".join(keys) + " |")
            lines.append("|" + " --- |" * len(keys))
            for e in self.exceptional:
                lines.append("| " + " | ".join(str(e.get(k, "")) for k in keys) + " |")
            lines.append("")
        for title, table in self.tables.items():
            lines.append(f"## {title}")
            lines.append("")
            lines.extend(_render_md_table(table))
            lines.append("")
        if self.hints_used:
            lines.append("hints used: " + "; ".join(self.hints_used))
            lines.append("")
        lines.append(f"result: **{'PASS' if self.passed else 'FAIL'}**")
        return "\n".join(lines) + "\n"


def _render_md_table(table: Any) -> list[str]:
    # dict of row-label -> dict of column-label -> value
    if isinstance(table, dict) and table and all(isinstance(v, dict) for v in table.values()):
        columns = sorted({c for row in table.values() for c in row})
        lines = ["| | " + " | ".join(str(c) for c in columns) + " |"]
        lines.append("|" + " --- |" * (len(columns) + 1))
        for label, row in table.items():
            cells = [str(row.get(c, "")) for c in columns]
            lines.append(f"| {label} | " + " | ".join(cells) + " |")
        return lines
    if isinstance(table, dict):
        return [f"- {k}: {v}" for k, v in table.items()]
    return [str(table)]
