"""Counterexample artifacts: a matroid and its parameters saved before a verifier fails."""

import hashlib
from pathlib import Path
from typing import Optional

from common.config import get_settings
from common.errors import CounterexampleError
from common.logger import get_logger
from core.io import dumps_matroid
from core.matroid import Matroid
from spikes.partition import PairPartition

logger = get_logger("spikes.spikes.artifacts")


def save_counterexample(
    M: Matroid,
    statement: str,
    partition: Optional[PairPartition] = None,
    **params: int,
) -> Path:
    """
    Write `<slug>-<digest>.mtx` and a matching `.params` file to the artifact dir.

    Returns:
        Path of the `.mtx` file
    """
    directory = Path(get_settings().artifact_dir)
    directory.mkdir(parents=True, exist_ok=True)
    digest = hashlib.sha256(M.table.tobytes()).hexdigest()[:12]
    slug = "".join(ch if ch.isalnum() else "-" for ch in statement).strip("-")
    stem = directory / f"{slug}-{digest}"

    matroid_path = stem.with_suffix(".mtx")
    matroid_path.write_text(dumps_matroid(M), encoding="utf-8")
    lines = [f"statement={statement}"]
    lines.extend(f"{key}={value}" for key, value in params.items())
    if partition is not None:
        lines.extend(f"pair={a},{b}" for a, b in partition.index_pairs())
    stem.with_suffix(".params").write_text("\n".join(lines) + "\n", encoding="utf-8")

    logger.error("Counterexample saved", statement=statement, path=str(matroid_path), **params)
    return matroid_path


def counterexample(
    M: Matroid,
    statement: str,
    partition: Optional[PairPartition] = None,
    **params: int,
) -> CounterexampleError:
    """Save the instance and return the error for the caller to raise."""
    path = save_counterexample(M, statement, partition, **params)
    return CounterexampleError(statement, path)
