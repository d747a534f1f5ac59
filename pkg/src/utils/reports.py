from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Iterable

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

EXACT = "exact"


def precision_mode(precision: int) -> str:
    return f"precision({precision})"


@dataclass(frozen=True)
class IdentityReport:
    name: str
    status: str
    mode: str
    elapsed_ms: float = 0.0
    witness: str | None = None
    note: str | None = None
    remark: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        entry = {"name": self.name, "status": self.status, "mode": self.mode, "ms": round(self.elapsed_ms, 1)}
        if self.witness is not None:
            entry["witness"] = self.witness
        if self.note is not None:
            entry["note"] = self.note
        if self.remark is not None:
            entry["remark"] = self.remark
        return entry


def all_passed(reports: Iterable[IdentityReport]) -> bool:
    return all(report.passed for report in reports)


def render_text(suite: str, precision: int, reports: list[IdentityReport], show_notes: bool = True) -> str:
    lines = [f"suite {suite} at precision {precision}"]
    width = max((len(report.name) for report in reports), default=0)
    for report in reports:
        line = f"  {report.name.ljust(width)}  {report.status.upper():<12} {report.mode:<14} {report.elapsed_ms:9.1f} ms"
        lines.append(line)
        if report.witness is not None:
            lines.append(f"      witness: {report.witness}")
        if report.remark is not None:
            lines.append(f"      remark: {report.remark}")
        if show_notes and report.note is not None:
            lines.append(f"      note: {report.note}")
    passed = sum(report.passed for report in reports)
    lines.append(f"{passed}/{len(reports)} passed")
    return "\n".join(lines)


def render_json(suite: str, precision: int, reports: list[IdentityReport]) -> str:
    document = {
        "suite": suite,
        "precision": precision,
        "results": [report.to_dict() for report in reports],
    }
    return json.dumps(document, indent=2, ensure_ascii=False)


def save_report(run_dir: Path, label: str, content: str, suffix: str = "txt") -> Path:
    safe_label = "".join(ch if ch.isalnum() or ch in {"-", "_"} else "_" for ch in label)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    path = run_dir / "reports" / f"{timestamp}_{safe_label}.{suffix}"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content + "\n", encoding="utf-8")
    return path
