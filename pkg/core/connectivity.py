"""Connectivity function and Tutte k-connectivity."""

from typing import NamedTuple, Optional

import numpy as np

from common.errors import ParameterError
from common.logger import get_logger
from common.validators import require_mask
from core.masks import SubsetMask, popcount_table
from core.matroid import Matroid

logger = get_logger("spikes.core.connectivity")


class Separation(NamedTuple):
    """A j-separation (side, E - side) with lambda(side) < j."""

    side: SubsetMask
    order: int


def lambda_(M: Matroid, X: SubsetMask) -> int:
    """lambda(X) = r(X) + r(E - X) - r(M)."""
    require_mask(X, M.n)
    return M.r(X) + M.r(M.ground ^ X) - M.rank


def connectivity_table(M: Matroid) -> np.ndarray:
    """lambda for every mask, as int16."""
    signed = M.signed()
    return signed + signed[::-1] - M.rank


def is_k_connected(M: Matroid, k: int) -> tuple[bool, Optional[Separation]]:
    """
    Tutte k-connectivity by exhaustive scan.

    Returns (True, None) when no j-separation exists for j < k, otherwise
    (False, witness) for the smallest such j and, within it, the smallest side.
    """
    if k < 2:
        raise ParameterError(f"connectivity order must be at least 2, got {k}")
    lam = connectivity_table(M)
    sizes = popcount_table(M.n).astype(np.int16)
    other = M.n - sizes
    for j in range(1, k):
        candidates = np.flatnonzero((lam < j) & (sizes >= j) & (other >= j))
        if candidates.size:
            witness = Separation(int(candidates[0]), j)
            logger.debug("Separation found", k=k, side=witness.side, order=j)
            return False, witness
    return True, None
