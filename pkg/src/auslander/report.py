"""Check reports with text and structured (JSON) renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    detail: Any = None


@dataclass
class Report:
    task: str
    checks: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: Any = None) -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail))
        for k, v in other.tables.items():
            self.tables[prefix + k] = v
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "task": self.task,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": _plain(c.detail)} for c in self.checks],
            "tables": _plain(self.tables),
            "notes": list(self.notes),
            "summary": {"total": len(self.checks), "failed": len(self.failures)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"task: {self.task}"]
        for name, tab in self.tables.items():
            lines.append("")
            lines.append(f"[{name}]")
            lines.extend(_render_table(tab))
        if self.notes:
            lines.append("")
            for n in self.notes:
                lines.append(f"note: {n}")
        lines.append("")
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            extra = "" if c.detail in (None, "", {}) else f"  {_short(c.detail)}"
            lines.append(f"{mark}  {c.name}{extra}")
        lines.append("")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'} "
                     f"({len(self.checks) - len(self.failures)}/{len(self.checks)} checks)")
        return "\n".join(lines) + "\n"


def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "rows") and hasattr(x, "ncols"):
        return [[str(a) for a in r] for r in x.rows]
    return x


def _short(detail) -> str:
    if isinstance(detail, str):
        return detail
    return json.dumps(_plain(detail), sort_keys=True)


def _render_table(tab) -> list:
    if isinstance(tab, dict) and "header" in tab and "rows" in tab:
        rows = [list(map(str, tab["header"]))] + [[str(c) for c in r] for r in tab["rows"]]
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        out = []
        for k, r in enumerate(rows):
            out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
            if k == 0:
                out.append("  ".join("-" * w for w in widths))
        return out
    return [_short(tab)]
