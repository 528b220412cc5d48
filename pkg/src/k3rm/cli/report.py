"""Line-oriented ``key: value`` reports."""
from __future__ import annotations

import sys


class Report:
    def __init__(self, command: str):
        self.lines: list[tuple[str, str]] = [("command", command)]
        self.failed = False

    def add(self, key: str, value) -> None:
        self.lines.append((key, str(value)))

    def check(self, name: str, ok: bool, detail=None) -> bool:
        self.lines.append((f"check.{name}", "PASS" if ok else "FAIL"))
        if detail is not None:
            self.lines.append((f"detail.{name}", str(detail)))
        if not ok:
            self.failed = True
        return ok

    def text(self) -> str:
        return "".join(f"{k}: {v}\n" for k, v in self.lines)

    def emit(self, stream=None) -> int:
        (stream or sys.stdout).write(self.text())
        return 1 if self.failed else 0
