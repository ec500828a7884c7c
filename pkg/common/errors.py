"""Exception hierarchy shared by every package."""

from pathlib import Path
from typing import Optional, Sequence


class SpikesError(Exception):
    """Base class for every error raised by this project."""


class ParameterError(SpikesError, ValueError):
    """A plain argument violates an operation's precondition."""


class InvalidCircuitsError(SpikesError, ValueError):
    """A circuit list does not describe a matroid."""

    def __init__(self, message: str, witness: Sequence[int] = ()):
        super().__init__(message)
        self.witness = tuple(witness)


class MatroidFormatError(SpikesError, ValueError):
    """Malformed matroid, certificate or trace text."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class HypothesisError(SpikesError):
    """A hypothesis of a lemma or construction does not hold."""

    def __init__(self, hypothesis: str, detail: str = "", witness: Optional[int] = None):
        message = f"hypothesis failed: {hypothesis}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.hypothesis = hypothesis
        self.witness = witness


class InvalidCertificateError(SpikesError):
    """A certificate does not certify the matroid it was paired with."""

    def __init__(self, check: str, detail: str = "", witness: Optional[int] = None):
        message = f"certificate check {check!r} failed"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.check = check
        self.detail = detail
        self.witness = witness


class NotAFlatError(SpikesError, ValueError):
    """A modular-cut member is not closed."""

    def __init__(self, mask: int):
        super().__init__(f"set {mask:#x} is not a flat")
        self.mask = mask


class CounterexampleError(SpikesError):
    """A verifier contradicted a proved statement; the instance was saved."""

    def __init__(self, statement: str, artifact: Optional[Path] = None):
        message = f"counterexample to {statement}"
        if artifact is not None:
            message += f" saved to {artifact}"
        super().__init__(message)
        self.statement = statement
        self.artifact = artifact
