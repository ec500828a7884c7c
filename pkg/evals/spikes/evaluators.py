"""Independent spike checkers: list-based pair partitions and hand-built perturbations."""

from itertools import combinations
from typing import Iterator, Optional

import numpy as np

from core import Matroid
from evals.core.evaluators import brute_circuits, brute_cocircuits
from spikes import recognize_spike, spike_oracle


def canonical_pairings(elements: list[int]) -> Iterator[list[tuple[int, int]]]:
    """Pair the first element with each later one in turn, then recurse."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for i, partner in enumerate(rest):
        for tail in canonical_pairings(rest[:i] + rest[i + 1 :]):
            yield [(first, partner)] + tail


def brute_certificates(M: Matroid, s: int, t: int) -> list[tuple[int, ...]]:
    """Every pair partition whose s-unions are circuits and t-unions cocircuits."""
    if M.n % 2 or M.n < 2 * max(s, t):
        return []
    circuits = brute_circuits(M)
    cocircuits = brute_cocircuits(M)
    found = []
    for pairing in canonical_pairings(list(range(M.n))):
        masks = [(1 << a) | (1 << b) for a, b in pairing]
        if all(sum(chosen) in circuits for chosen in combinations(masks, s)) and all(
            sum(chosen) in cocircuits for chosen in combinations(masks, t)
        ):
            found.append(tuple(masks))
    return found


def relax(M: Matroid, X: int) -> Matroid:
    """Raise r(X) by one; a matroid again whenever X is a circuit-hyperplane."""
    table = M.table.astype(np.int64)
    table[X] += 1
    return Matroid(M.n, table)


class OracleAgreementEvaluator:
    """Checks the pruned recognizer, the library oracle and the list-based oracle agree"""

    def __init__(self, threshold: float = 1.0):
        self.threshold = threshold
        self.score = 0.0
        self.success = False
        self.reason: Optional[str] = None

    def measure(self, M: Matroid, s: int, t: int) -> float:
        expected = brute_certificates(M, s, t)
        listed = [cert.partition.pairs for cert in spike_oracle(M, s, t)]
        recognized = recognize_spike(M, s, t)
        first = recognized.partition.pairs if recognized is not None else None

        self.reason = None
        if listed != expected:
            self.reason = f"oracle listed {len(listed)} certificates, brute force {len(expected)}"
        elif first != (expected[0] if expected else None):
            self.reason = f"recognizer returned {first}, first brute-force certificate is {expected[:1]}"
        self.score = 0.0 if self.reason else 1.0
        self.success = self.score >= self.threshold
        return self.score
