"""Duality, deletion, contraction and direct sums on rank tables."""

from typing import NamedTuple

import numpy as np

from common.logger import get_logger
from common.validators import require_cap, require_mask
from core.masks import SubsetMask, indices_of, spread_table
from core.matroid import Matroid, dual_table

logger = get_logger("spikes.core.minors")


class Minor(NamedTuple):
    """A minor together with the old -> new index map of its surviving elements."""

    matroid: Matroid
    index_map: dict[int, int]


def dual(M: Matroid) -> Matroid:
    """M* with r*(X) = |X| + r(E - X) - r(E); an involution bit for bit."""
    return Matroid(M.n, dual_table(M))


def _kept(M: Matroid, removed: SubsetMask) -> list[int]:
    return [i for i in range(M.n) if not removed >> i & 1]


def delete(M: Matroid, D: SubsetMask) -> Minor:
    """M \\ D, surviving elements renumbered in increasing order."""
    require_mask(D, M.n, "deletion set")
    kept = _kept(M, D)
    table = M.table[spread_table(kept)]
    logger.debug("Deleted elements", removed=indices_of(D), n=len(kept))
    return Minor(Matroid(len(kept), table), {old: new for new, old in enumerate(kept)})


def restrict(M: Matroid, X: SubsetMask) -> Minor:
    """M | X = M \\ (E - X)."""
    require_mask(X, M.n)
    return delete(M, M.ground ^ X)


def contract(M: Matroid, T: SubsetMask) -> Minor:
    """M / T with r'(X) = r(X u T) - r(T), surviving elements renumbered."""
    require_mask(T, M.n, "contraction set")
    kept = _kept(M, T)
    spread = spread_table(kept) | T
    table = M.signed()[spread] - M.r(T)
    logger.debug("Contracted elements", removed=indices_of(T), n=len(kept))
    return Minor(
        Matroid(len(kept), table.astype(np.uint8)),
        {old: new for new, old in enumerate(kept)},
    )


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """M1 (+) M2 with the elements of M2 renumbered above those of M1."""
    n = M1.n + M2.n
    require_cap(n, "direct sum")
    # slot hi * 2^n1 + lo holds r2(hi) + r1(lo)
    table = np.add.outer(M2.table, M1.table).ravel()
    return Matroid(n, table)
