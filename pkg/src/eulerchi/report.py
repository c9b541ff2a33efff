"""Machine-readable run reports.

Reports are JSON-first with a plain-text renderer.  They are deterministic:
no timestamps, no absolute paths, inputs identified by content digest, keys
sorted on output.  A report's assertions all passing is equivalent to the
CLI exiting 0.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any


@dataclass
class Assertion:
    name: str
    lhs: Any
    rhs: Any
    passed: bool


@dataclass
class Report:
    command: str
    inputs: dict[str, dict] = field(default_factory=dict)
    result: Any = None
    breakdown: Any = None
    assertions: list[Assertion] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def add_input_file(self, label: str, path: str | Path) -> None:
        digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
        self.inputs[label] = {"path": str(path), "sha256": digest}

    def add_input_text(self, label: str, text: str) -> None:
        digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
        self.inputs[label] = {"inline": text, "sha256": digest}

    def check(self, name: str, lhs: Any, rhs: Any) -> bool:
        ok = lhs == rhs
        self.assertions.append(Assertion(name, lhs, rhs, ok))
        return ok

    def all_pass(self) -> bool:
        return all(a.passed for a in self.assertions)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "breakdown": self.breakdown,
            "assertions": [
                {"name": a.name, "lhs": a.lhs, "rhs": a.rhs, "pass": a.passed}
                for a in self.assertions
            ],
            "warnings": self.warnings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for label, info in self.inputs.items():
            where = info.get("path", "<inline>")
            lines.append(f"input {label}: {where} sha256={info['sha256'][:12]}")
        lines.append(f"result: {json.dumps(self.result, sort_keys=True, ensure_ascii=False)}")
        if self.breakdown is not None:
            lines.append(
                "breakdown: "
                + json.dumps(self.breakdown, sort_keys=True, ensure_ascii=False)
            )
        for a in self.assertions:
            status = "ok" if a.passed else "FAIL"
            lines.append(f"assert {a.name}: {a.lhs} == {a.rhs} .. {status}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        lines.append("status: " + ("pass" if self.all_pass() else "FAIL"))
        return "\n".join(lines) + "\n"
