from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field


class VerificationReport(BaseModel):
    """Outcome of one verification run; exact unless ``approx`` is set."""

    name: str
    passed: bool
    checks: int = 0
    failures: list[str] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)
    approx: bool = False
    conclusion: str = ""

    def summary_row(self) -> list[Any]:
        return [self.name, "PASS" if self.passed else "FAIL", self.checks, len(self.failures), "approx" if self.approx else "exact"]
