"""
kb_app/commands/schemas.py — Pydantic modeli izlaza komandi (presude i provjere).
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from kb_core.translate.verification import WitnessReport, check_line


class CheckResult(BaseModel):
    """One named check; `counterexample` is a formatted point or a short reason."""
    name: str = Field(..., min_length=1)
    passed: bool
    counterexample: Optional[str] = None

    def machine_line(self) -> str:
        return check_line(self.name, self.passed, self.counterexample)


class VerdictReport(BaseModel):
    checks: List[CheckResult] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def machine_lines(self) -> List[str]:
        return [c.machine_line() for c in self.checks]

    @classmethod
    def single(cls, name: str, passed: bool, counterexample: Optional[str] = None) -> "VerdictReport":
        return cls(checks=[CheckResult(name=name, passed=passed, counterexample=counterexample)])

    @classmethod
    def from_witness_report(cls, report: WitnessReport) -> "VerdictReport":
        return cls(
            checks=[CheckResult(name=c.name, passed=c.passed, counterexample=c.counterexample) for c in report.checks],
            warnings=list(report.warnings),
        )
