"""
The (s,u,t,v)-property and the low-rank consequences of the (s,2s,t,2t)-property.

Both are whole-table scans: circuits of size u are marked, pushed down to
all their subsets, and every s-subset left unmarked is a failure.
"""

from typing import Optional

import numpy as np

from common.errors import HypothesisError, ParameterError
from common.logger import get_logger
from core.masks import SubsetMask, lex_key, popcount_table, upward_closure, downward_closure
from core.matroid import Matroid, circuit_indicator, cocircuit_indicator
from spikes.artifacts import save_counterexample
from spikes.reports import PropertyReport

logger = get_logger("spikes.spikes.property")


def _first_uncovered(family: np.ndarray, n: int, small: int, large: int) -> Optional[SubsetMask]:
    """Lexicographically first small-set lying in no marked set of size large."""
    sizes = popcount_table(n)
    covered = downward_closure(family & (sizes == large), n)
    failing = np.flatnonzero((sizes == small) & ~covered)
    if not failing.size:
        return None
    return min((int(mask) for mask in failing), key=lex_key)


def has_property(M: Matroid, s: int, u: int, t: int, v: int) -> PropertyReport:
    """
    Every s-subset lies in a u-element circuit and every t-subset in a v-element cocircuit.

    Raises:
        ParameterError: unless 1 <= s <= u, 1 <= t <= v and s, t <= n
    """
    if not (1 <= s <= u and 1 <= t <= v):
        raise ParameterError(f"property needs 1 <= s <= u and 1 <= t <= v, got {(s, u, t, v)}")
    if s > M.n or t > M.n:
        raise ParameterError(f"s={s} and t={t} must not exceed n={M.n}")
    logger.debug("Checking property", n=M.n, s=s, u=u, t=t, v=v)

    missing = _first_uncovered(circuit_indicator(M), M.n, s, u)
    if missing is not None:
        return PropertyReport(holds=False, failing_subset=missing, missing_kind="circuit")
    missing = _first_uncovered(cocircuit_indicator(M), M.n, t, v)
    if missing is not None:
        return PropertyReport(holds=False, failing_subset=missing, missing_kind="cocircuit")
    return PropertyReport(holds=True)


def require_spike_property(M: Matroid, s: int, t: int) -> None:
    """Raise HypothesisError unless M has the (s,2s,t,2t)-property."""
    if s > M.n or t > M.n:
        raise HypothesisError(f"({s},{2 * s},{t},{2 * t})-property", f"ground set of {M.n} elements is too small")
    report = has_property(M, s, 2 * s, t, 2 * t)
    if not report.holds:
        raise HypothesisError(
            f"({s},{2 * s},{t},{2 * t})-property",
            f"no {report.missing_kind} of the required size contains the witness",
            report.failing_subset,
        )


def check_low_rank_property(M: Matroid, s: int, t: int) -> bool:
    """
    Under the (s,2s,t,2t)-property confirm, for every X:
    r(X) < s forces X independent, and r(X) = s makes M|X uniform of rank s on fewer than s+2t elements.

    A False result is saved as a counterexample artifact.

    Raises:
        HypothesisError: M lacks the (s,2s,t,2t)-property
    """
    require_spike_property(M, s, t)
    sizes = popcount_table(M.n)
    table = M.table

    small_dependent = (table < s) & (table != sizes)
    if small_dependent.any():
        witness = int(np.flatnonzero(small_dependent)[0])
        save_counterexample(M, "low-rank independence", s=s, t=t, witness=witness)
        return False

    # M|X is U_{s,|X|} iff every subset Y has r(Y) = min(|Y|, s)
    not_uniform = upward_closure(table != np.minimum(sizes, s), M.n)
    at_rank_s = table == s
    bad = at_rank_s & (not_uniform | (sizes >= s + 2 * t))
    if bad.any():
        witness = int(np.flatnonzero(bad)[0])
        save_counterexample(M, "rank-s restriction uniform", s=s, t=t, witness=witness)
        return False
    return True
