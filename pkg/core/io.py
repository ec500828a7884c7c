"""
The `matroid v1` text format.

    matroid v1
    n <int>
    rank <int>          (optional, cross-checked)
    circuits
    <i j k ...>         (one circuit per line, strictly increasing 0-based indices)
    end

Element indices are 0-based; element i here is element i+1 in 1-based notation.
"""

from pathlib import Path

from common.errors import InvalidCircuitsError, MatroidFormatError
from common.logger import get_logger
from core.masks import format_mask, lex_key, mask_of
from core.matroid import Matroid, circuits_of, from_circuits

logger = get_logger("spikes.core.io")

HEADER = "matroid v1"


def dumps_matroid(M: Matroid) -> str:
    """Serialize with circuits sorted by (size, lexicographic)."""
    lines = [HEADER, f"n {M.n}", f"rank {M.rank}", "circuits"]
    ordered = sorted(circuits_of(M), key=lambda mask: (mask.bit_count(), lex_key(mask)))
    lines.extend(format_mask(circuit) for circuit in ordered)
    lines.append("end")
    return "\n".join(lines) + "\n"


def _parse_int_field(line: str, key: str, number: int) -> int:
    parts = line.split(" ")
    if len(parts) != 2 or parts[0] != key:
        raise MatroidFormatError(f"expected '{key} <int>', got {line!r}", number)
    try:
        value = int(parts[1])
    except ValueError:
        raise MatroidFormatError(f"{key} must be an integer, got {parts[1]!r}", number) from None
    if value < 0:
        raise MatroidFormatError(f"{key} must be non-negative", number)
    return value


def _parse_circuit(line: str, n: int, number: int) -> int:
    try:
        indices = [int(token) for token in line.split(" ")]
    except ValueError:
        raise MatroidFormatError(f"circuit line must hold integers, got {line!r}", number) from None
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise MatroidFormatError("circuit indices must be strictly increasing", number)
    if indices[0] < 0 or indices[-1] >= n:
        raise MatroidFormatError(f"circuit index outside 0..{n - 1}", number)
    return mask_of(indices)


def loads_matroid(text: str) -> Matroid:
    """
    Parse `matroid v1` text.

    Raises:
        MatroidFormatError: malformed text, duplicate or comparable circuits,
            a rank line that disagrees, or a family that is not a matroid's
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise MatroidFormatError(f"first line must be {HEADER!r}", 1)
    if len(lines) < 4:
        raise MatroidFormatError("truncated matroid text", len(lines))

    n = _parse_int_field(lines[1], "n", 2)
    cursor = 2
    declared_rank = None
    if lines[cursor].startswith("rank"):
        declared_rank = _parse_int_field(lines[cursor], "rank", cursor + 1)
        cursor += 1
    if cursor >= len(lines) or lines[cursor] != "circuits":
        raise MatroidFormatError("expected 'circuits'", cursor + 1)
    cursor += 1

    circuits: list[int] = []
    seen: set[int] = set()
    while True:
        if cursor >= len(lines):
            raise MatroidFormatError("missing 'end'", cursor)
        line = lines[cursor]
        if line == "end":
            break
        circuit = _parse_circuit(line, n, cursor + 1)
        if circuit in seen:
            raise MatroidFormatError("duplicate circuit", cursor + 1)
        for other in circuits:
            if circuit & other in (circuit, other):
                raise MatroidFormatError(
                    f"circuit {format_mask(circuit)!r} is comparable with {format_mask(other)!r}",
                    cursor + 1,
                )
        seen.add(circuit)
        circuits.append(circuit)
        cursor += 1
    if cursor != len(lines) - 1:
        raise MatroidFormatError("text after 'end'", cursor + 2)

    try:
        matroid = from_circuits(n, circuits)
    except InvalidCircuitsError as exc:
        raise MatroidFormatError(f"not a matroid: {exc}") from exc
    if declared_rank is not None and declared_rank != matroid.rank:
        raise MatroidFormatError(
            f"declared rank {declared_rank} but the circuits give rank {matroid.rank}", 3
        )
    return matroid


def write_matroid(M: Matroid, path: Path) -> Path:
    path = Path(path)
    path.write_text(dumps_matroid(M), encoding="utf-8")
    logger.debug("Matroid written", path=str(path), n=M.n)
    return path


def read_matroid(path: Path) -> Matroid:
    return loads_matroid(Path(path).read_text(encoding="utf-8"))
