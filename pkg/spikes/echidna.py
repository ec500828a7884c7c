"""
Echidnas, coechidnas and the lemmas that grow them into spikes.

An s-echidna is a sequence of disjoint pairs (spines) whose every s-fold
union is a circuit; a t-coechidna asks the same of cocircuits.
"""

from itertools import combinations
from typing import Optional

import numpy as np

from common.errors import HypothesisError, InvalidCertificateError, ParameterError
from common.logger import get_logger
from common.validators import require_mask
from core.masks import SubsetMask, downward_closure, indices_of, popcount_table
from core.matroid import Matroid, circuit_indicator, cocircuit_indicator, is_circuit, is_cocircuit
from spikes.artifacts import counterexample, save_counterexample
from spikes.partition import PairPartition, SpikeCertificate
from spikes.property import require_spike_property

logger = get_logger("spikes.spikes.echidna")


def failing_union(M: Matroid, partition: PairPartition, k: int, co: bool = False) -> Optional[SubsetMask]:
    """First k-fold union of pairs that is not a circuit (cocircuit when co is set)."""
    require_mask(partition.covered, M.n, "partition")
    if not 1 <= k <= len(partition):
        raise ParameterError(f"k must lie in 1..{len(partition)}, got {k}")
    test = is_cocircuit if co else is_circuit
    for _, union in partition.unions(k):
        if not test(M, union):
            return union
    return None


def is_echidna(M: Matroid, partition: PairPartition, k: int, co: bool = False) -> bool:
    """True iff the union of every k pairs is a circuit of M (of M* when co is set)."""
    return failing_union(M, partition, k, co) is None


def is_maximal_echidna(M: Matroid, partition: PairPartition, k: int, co: bool = False) -> bool:
    """A k-echidna that no disjoint pair of uncovered elements extends."""
    if not is_echidna(M, partition, k, co):
        return False
    free = indices_of(M.ground ^ partition.covered)
    for a, b in combinations(free, 2):
        if is_echidna(M, partition.extended((1 << a) | (1 << b)), k, co):
            return False
    return True


def require_certificate(M: Matroid, cert: SpikeCertificate) -> None:
    """
    Check the defining invariants of a certificate against M.

    Raises:
        InvalidCertificateError: naming the failed check and a witness
    """
    partition = cert.partition
    if partition.covered != M.ground:
        stray = partition.covered & ~M.ground
        raise InvalidCertificateError(
            "certificate",
            "arms reference elements outside the ground set" if stray else "arms do not cover the ground set",
            stray or (M.ground ^ partition.covered),
        )
    if cert.order < max(cert.s, cert.t):
        raise InvalidCertificateError("certificate", f"order {cert.order} is below max(s, t)")
    witness = failing_union(M, partition, cert.s)
    if witness is not None:
        raise InvalidCertificateError("certificate", f"a union of {cert.s} arms is not a circuit", witness)
    witness = failing_union(M, partition, cert.t, co=True)
    if witness is not None:
        raise InvalidCertificateError("certificate", f"a union of {cert.t} arms is not a cocircuit", witness)


def _require_echidna(M: Matroid, partition: PairPartition, s: int, minimum: int) -> None:
    if len(partition) < minimum:
        raise HypothesisError(f"echidna order >= {minimum}", f"order is {len(partition)}")
    witness = failing_union(M, partition, s)
    if witness is not None:
        raise HypothesisError(f"{s}-echidna", "a union of spines is not a circuit", witness)


def verify_coechidna_implication(M: Matroid, partition: PairPartition, s: int, t: int) -> bool:
    """
    An s-echidna of order >= s+2t-1 under the (s,2s,t,2t)-property must be a t-coechidna.

    A False result is saved as a counterexample artifact.

    Raises:
        HypothesisError: the property, the echidna or the order bound fails
    """
    require_spike_property(M, s, t)
    _require_echidna(M, partition, s, s + 2 * t - 1)
    witness = failing_union(M, partition, t, co=True)
    if witness is not None:
        save_counterexample(M, "s-echidna is a t-coechidna", partition, s=s, t=t, witness=witness)
        return False
    return True


def _spine_unions_covered(M: Matroid, partition: PairPartition, k: int, family: np.ndarray) -> Optional[SubsetMask]:
    """First {z} plus k-1 spines lying in no 2k-element member of family."""
    covered = downward_closure(family & (popcount_table(M.n) == 2 * k), M.n)
    for _, base in partition.unions(k - 1):
        for z in indices_of(M.ground ^ base):
            if not covered[base | (1 << z)]:
                return base | (1 << z)
    return None


def verify_spine_circuits(M: Matroid, partition: PairPartition, s: int, t: int) -> bool:
    """
    For every s-1 spines and z outside them some 2s-element circuit contains both,
    and dually for t-1 spines with 2t-element cocircuits.

    A False result is saved as a counterexample artifact.

    Raises:
        HypothesisError: the property, the echidna or the order bound fails
    """
    require_spike_property(M, s, t)
    _require_echidna(M, partition, s, max(s + 2 * t, 2 * s + t) - 1)
    witness = _spine_unions_covered(M, partition, s, circuit_indicator(M))
    if witness is None:
        witness = _spine_unions_covered(M, partition, t, cocircuit_indicator(M))
    if witness is not None:
        save_counterexample(M, "spines lie in small circuits", partition, s=s, t=t, witness=witness)
        return False
    return True


def extend_echidna(M: Matroid, partial: PairPartition, s: int, t: int) -> SpikeCertificate:
    """
    Grow an s-echidna into a partition of E that is an s-echidna and a t-coechidna.

    The spine circuits are checked first, so for the smallest uncovered z a
    2s-element circuit through z and the first s-1 spines exists; z is paired
    with its remaining element, and the search repeats.

    Raises:
        HypothesisError: the property, the echidna or the order bound fails
        CounterexampleError: the spine circuits are missing, no partner exists,
            or the result is not a spike
    """
    minimum = max(s + 2 * t - 1, 2 * s + t - 1, 3 * s + t - 3)
    require_spike_property(M, s, t)
    _require_echidna(M, partial, s, minimum)
    if not verify_spine_circuits(M, partial, s, t):
        raise counterexample(M, "spines lie in small circuits", partial, s=s, t=t)
    logger.debug("Extending echidna", n=M.n, order=len(partial), s=s, t=t)

    partition = partial
    base = partial.union(range(s - 1))
    while partition.covered != M.ground:
        z = indices_of(M.ground ^ partition.covered)[0]
        anchor = base | (1 << z)
        partner = next(
            (w for w in indices_of(M.ground ^ anchor) if is_circuit(M, anchor | (1 << w))),
            None,
        )
        if partner is None:
            raise counterexample(M, "2s-circuit through s-1 spines", partition, s=s, t=t, z=z)
        if partition.covered >> partner & 1:
            raise counterexample(M, "partner lies outside the echidna", partition, s=s, t=t, z=z)
        partition = partition.extended((1 << z) | (1 << partner))

    cert = SpikeCertificate(s=s, t=t, partition=partition)
    if not is_echidna(M, partition, s) or not is_echidna(M, partition, t, co=True):
        raise counterexample(M, "extended echidna is a spike", partition, s=s, t=t)
    logger.info("Echidna extended", added=len(partition) - len(partial), order=len(partition))
    return cert
