"""Report models returned by the non-raising checks, plus their line format."""

from enum import Enum
from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

from core.masks import SubsetMask, indices_of


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NA = "na"


def format_witness(mask: Optional[SubsetMask]) -> str:
    """Comma-joined indices, or '-' when there is no witness."""
    if mask is None:
        return "-"
    return ",".join(str(i) for i in indices_of(mask)) or "{}"


class PropertyReport(BaseModel):
    """Outcome of has_property."""

    holds: bool
    failing_subset: Optional[SubsetMask] = None
    missing_kind: Optional[Literal["circuit", "cocircuit"]] = None

    def to_line(self) -> str:
        if self.holds:
            return "property=holds"
        return f"property=fails kind={self.missing_kind} witness={format_witness(self.failing_subset)}"


class CheckResult(BaseModel):
    name: str
    status: CheckStatus
    witness: Optional[SubsetMask] = None
    details: dict[str, Union[int, str]] = Field(default_factory=dict)

    def to_line(self) -> str:
        parts = [f"check={self.name}", f"status={self.status.value}", f"witness={format_witness(self.witness)}"]
        parts.extend(f"{key}={value}" for key, value in self.details.items())
        return " ".join(parts)


class StructureReport(BaseModel):
    """Named checks, each pass, fail or not applicable."""

    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.status != CheckStatus.FAIL for check in self.checks)

    def get(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def add(
        self,
        name: str,
        ok: Optional[bool],
        witness: Optional[SubsetMask] = None,
        **details: Union[int, str],
    ) -> CheckResult:
        """Append a check; ok=None records it as not applicable."""
        if ok is None:
            status = CheckStatus.NA
        else:
            status = CheckStatus.PASS if ok else CheckStatus.FAIL
        result = CheckResult(name=name, status=status, witness=witness, details=details)
        self.checks.append(result)
        return result

    def to_text(self) -> str:
        return "\n".join(check.to_line() for check in self.checks) + "\n"
