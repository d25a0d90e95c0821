"""Small pass/fail/skip report containers shared by verification code and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    """One named check: passed is True, False, or None for skipped."""

    name: str
    passed: bool | None
    detail: str = ""

    @property
    def status(self) -> str:
        if self.passed is None:
            return "skip"
        return "pass" if self.passed else "fail"

    def to_obj(self):
        obj = {"name": self.name, "status": self.status}
        if self.detail:
            obj["detail"] = self.detail
        return obj


@dataclass
class Report:
    """Ordered list of checks plus free-form payload for extra data."""

    title: str
    checks: list[CheckResult] = field(default_factory=list)
    payload: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool | None, detail: str = "") -> CheckResult:
        result = CheckResult(name, passed, detail)
        self.checks.append(result)
        return result

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def to_obj(self):
        obj = {"title": self.title, "ok": self.ok,
               "checks": [c.to_obj() for c in self.checks]}
        if self.payload:
            obj["payload"] = self.payload
        return obj

    def render_text(self) -> str:
        lines = [self.title]
        for c in self.checks:
            line = f"  [{c.status.upper():4}] {c.name}"
            if c.detail:
                line += f" ({c.detail})"
            lines.append(line)
        lines.append(f"  => {'OK' if self.ok else 'FAILED'}")
        return "\n".join(lines)
