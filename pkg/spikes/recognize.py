"""
Spike recognition.

Partitions are generated in canonical order: the lowest unused element is
paired with each remaining element in increasing order, then the rest is
partitioned recursively. The recognizer walks that order with pruning, the
oracle walks all of it, so both report the same first certificate.
"""

from itertools import combinations
from typing import Iterator, Optional

from common.config import get_settings
from common.errors import HypothesisError, ParameterError
from common.logger import get_logger
from common.validators import require_positive
from core.masks import SubsetMask, indices_of
from core.matroid import Matroid, corank, is_circuit, is_cocircuit
from core.minors import dual
from spikes.artifacts import counterexample
from spikes.echidna import is_echidna
from spikes.partition import PairPartition, SpikeCertificate
from spikes.property import has_property

logger = get_logger("spikes.spikes.recognize")


def pair_partitions(mask: SubsetMask) -> Iterator[tuple[SubsetMask, ...]]:
    """Every partition of mask into pairs, in canonical order."""
    if mask == 0:
        yield ()
        return
    low = mask & -mask
    rest = mask ^ low
    for partner in indices_of(rest):
        bit = 1 << partner
        for tail in pair_partitions(rest ^ bit):
            yield (low | bit,) + tail


class _Search:
    """Depth-first canonical search with circuit and cocircuit pruning."""

    def __init__(self, M: Matroid, s: int, t: int):
        self.M = M
        self.s = s
        self.t = t
        self.chosen: list[SubsetMask] = []
        self._circuit: dict[SubsetMask, bool] = {}
        self._cocircuit: dict[SubsetMask, bool] = {}

    def circuit(self, mask: SubsetMask) -> bool:
        if mask not in self._circuit:
            self._circuit[mask] = is_circuit(self.M, mask)
        return self._circuit[mask]

    def cocircuit(self, mask: SubsetMask) -> bool:
        if mask not in self._cocircuit:
            self._cocircuit[mask] = is_cocircuit(self.M, mask)
        return self._cocircuit[mask]

    def admits(self, pair: SubsetMask) -> bool:
        """Every union of the new pair with s-1 (t-1) chosen pairs is a circuit (cocircuit)."""
        # a pair inside a larger circuit is independent, inside a larger cocircuit coindependent
        if self.s >= 2 and self.M.r(pair) != 2:
            return False
        if self.t >= 2 and corank(self.M, pair) != 2:
            return False
        for others in combinations(self.chosen, self.s - 1):
            if not self.circuit(pair | sum(others)):
                return False
        for others in combinations(self.chosen, self.t - 1):
            if not self.cocircuit(pair | sum(others)):
                return False
        return True

    def run(self, remaining: SubsetMask) -> bool:
        if remaining == 0:
            return True
        low = remaining & -remaining
        rest = remaining ^ low
        for partner in indices_of(rest):
            pair = low | (1 << partner)
            if not self.admits(pair):
                continue
            self.chosen.append(pair)
            if self.run(rest ^ (1 << partner)):
                return True
            self.chosen.pop()
        return False


def recognize_spike(M: Matroid, s: int, t: int) -> Optional[SpikeCertificate]:
    """
    The canonically least (s,t)-spike certificate of M, or None.

    The search is complete: None means no pair partition of E is both an
    s-echidna and a t-coechidna.
    """
    require_positive(s=s, t=t)
    if M.n % 2 or M.n < 2 * max(s, t):
        return None
    logger.debug("Recognizing spike", n=M.n, s=s, t=t)
    search = _Search(M, s, t)
    if not search.run(M.ground):
        return None
    cert = SpikeCertificate(s=s, t=t, partition=PairPartition(pairs=tuple(search.chosen)))
    logger.debug("Spike recognized", order=cert.order, circuits_tested=len(search._circuit))
    return cert


def spike_oracle(M: Matroid, s: int, t: int) -> list[SpikeCertificate]:
    """
    Every (s,t)-spike certificate of M, by brute force over all pair partitions.

    Raises:
        ParameterError: n exceeds the configured oracle limit
    """
    require_positive(s=s, t=t)
    limit = get_settings().oracle_limit
    if M.n > limit:
        raise ParameterError(f"oracle accepts at most {limit} elements, got {M.n}")
    if M.n % 2 or M.n < 2 * max(s, t):
        return []
    found = []
    for pairs in pair_partitions(M.ground):
        partition = PairPartition(pairs=pairs)
        if is_echidna(M, partition, s) and is_echidna(M, partition, t, co=True):
            found.append(SpikeCertificate(s=s, t=t, partition=partition))
    logger.debug("Oracle finished", n=M.n, s=s, t=t, certificates=len(found))
    return found


def accept_one_t_spike(M: Matroid, t: int) -> SpikeCertificate:
    """
    Certify M as a (1,t)-spike from its parallel classes.

    Under the (1,2,t,2t)-property every element has exactly one parallel
    partner, unless M is U_{1,2t} and all elements are parallel.

    Raises:
        HypothesisError: M lacks the property or has fewer than t elements
        CounterexampleError: the parallel classes do not certify a spike
    """
    require_positive(t=t)
    if M.n < t:
        raise HypothesisError(f"at least {t} elements", f"ground set has {M.n}")
    report = has_property(M, 1, 2, t, 2 * t)
    if not report.holds:
        raise HypothesisError(f"(1,2,{t},{2 * t})-property", f"{report.missing_kind} missing", report.failing_subset)

    classes: list[SubsetMask] = []
    for element in range(M.n):
        if any(cls >> element & 1 for cls in classes):
            continue
        bit = 1 << element
        # parallel partners: y with r({x, y}) = 1
        cls = bit | sum(1 << y for y in range(element + 1, M.n) if M.r(bit | (1 << y)) == 1)
        classes.append(cls)

    if all(cls.bit_count() == 2 for cls in classes):
        pairs = tuple(classes)
    elif len(classes) == 1 and M.n % 2 == 0:
        members = indices_of(classes[0])
        pairs = tuple((1 << a) | (1 << b) for a, b in zip(members[::2], members[1::2]))
    else:
        raise counterexample(M, "parallel classes are pairs", t=t)

    partition = PairPartition(pairs=pairs)
    if len(partition) < t or not (is_echidna(M, partition, 1) and is_echidna(M, partition, t, co=True)):
        raise counterexample(M, "parallel classes certify a (1,t)-spike", partition, t=t)
    return SpikeCertificate(s=1, t=t, partition=partition)


def accept_s_one_spike(M: Matroid, s: int) -> SpikeCertificate:
    """Dual form: certify M as an (s,1)-spike through M*."""
    return accept_one_t_spike(dual(M), s).dual()
