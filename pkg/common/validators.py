"""Common argument guards for reuse across the codebase"""

from common.config import get_settings
from common.errors import ParameterError


def require_cap(n: int, what: str = "ground set") -> None:
    """
    Reject ground sets that are negative or exceed the configured cap.

    Args:
        n: Number of elements the caller is about to tabulate
        what: Label used in the error message
    """
    cap = get_settings().cap
    if n < 0:
        raise ParameterError(f"{what} size must be non-negative, got {n}")
    if n > cap:
        raise ParameterError(
            f"{what} of {n} elements exceeds the cap of {cap} "
            f"(a rank table needs 2^{n} bytes); raise it with --cap"
        )


def require_mask(mask: int, n: int, what: str = "subset") -> None:
    """Reject masks with bits outside the low n bits."""
    if mask < 0 or mask >> n:
        raise ParameterError(f"{what} {mask:#x} is not a subset of a {n}-element set")


def require_positive(**values: int) -> None:
    """Reject any named value below 1, e.g. require_positive(s=s, t=t)."""
    for name, value in values.items():
        if value < 1:
            raise ParameterError(f"{name} must be a positive integer, got {value}")
