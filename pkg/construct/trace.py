"""
Build traces.

    build s=<s> t=<t> m=<m>
    step <k> op=<quotient|lift> s=<s'> t=<t'> rank=<r> blocker=<free|custom>

The blocker of a lift is the one used for the quotient of the dual.
"""

from enum import Enum
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from common.errors import MatroidFormatError


class StepOp(str, Enum):
    QUOTIENT = "quotient"
    LIFT = "lift"


class BuildStep(BaseModel):
    model_config = ConfigDict(extra="forbid")

    k: int = Field(ge=1)
    op: StepOp
    s: int = Field(ge=1, description="s of the spike after this step")
    t: int = Field(ge=1, description="t of the spike after this step")
    rank: int = Field(ge=0)
    blocker: Literal["free", "custom"] = "free"

    def to_line(self) -> str:
        return f"step {self.k} op={self.op.value} s={self.s} t={self.t} rank={self.rank} blocker={self.blocker}"


class BuildTrace(BaseModel):
    """The (1,1)-spike start and every quotient or lift applied after it."""

    model_config = ConfigDict(extra="forbid")

    s: int = Field(ge=1)
    t: int = Field(ge=1)
    m: int = Field(ge=1)
    steps: list[BuildStep] = Field(default_factory=list)

    @model_validator(mode="after")
    def _steps_numbered(self) -> "BuildTrace":
        for expected, step in enumerate(self.steps, start=1):
            if step.k != expected:
                raise ValueError(f"step {step.k} out of sequence, expected {expected}")
        return self

    @property
    def complete(self) -> bool:
        return len(self.steps) == (self.s - 1) + (self.t - 1)

    def record(
        self, op: StepOp, s: int, t: int, rank: int, blocker: Literal["free", "custom"] = "free"
    ) -> BuildStep:
        step = BuildStep(k=len(self.steps) + 1, op=op, s=s, t=t, rank=rank, blocker=blocker)
        self.steps.append(step)
        return step

    def to_text(self) -> str:
        lines = [f"build s={self.s} t={self.t} m={self.m}"]
        lines.extend(step.to_line() for step in self.steps)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BuildTrace":
        """
        Parse trace text.

        Raises:
            MatroidFormatError: malformed header or step lines
        """
        lines = text.strip().split("\n")
        header = lines[0].split()
        if not header or header[0] != "build":
            raise MatroidFormatError("expected 'build s=<s> t=<t> m=<m>'", 1)
        fields = _fields(header[1:], 1)
        steps = []
        for number, line in enumerate(lines[1:], start=2):
            tokens = line.split()
            if len(tokens) < 2 or tokens[0] != "step":
                raise MatroidFormatError(f"expected a step line, got {line!r}", number)
            values = _fields(tokens[2:], number)
            try:
                steps.append(BuildStep(k=int(tokens[1]), **values))
            except ValueError as exc:
                raise MatroidFormatError(f"invalid step: {exc}", number) from exc
        try:
            return cls(steps=steps, **fields)
        except ValueError as exc:
            raise MatroidFormatError(f"invalid trace: {exc}") from exc


def _fields(tokens: list[str], line: int) -> dict[str, str]:
    out = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep:
            raise MatroidFormatError(f"expected key=value, got {token!r}", line)
        out[key] = value
    return out


def write_trace(trace: BuildTrace, path: Path) -> Path:
    path = Path(path)
    path.write_text(trace.to_text(), encoding="utf-8")
    return path
