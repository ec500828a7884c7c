"""
Brute-force checkers that recompute matroid data from first principles,
without the vectorized table scans the library uses.
"""

from itertools import combinations
from typing import Iterator, Optional

from core import Matroid, mask_of
from core.masks import indices_of


def subsets_by_size(n: int) -> Iterator[int]:
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            yield mask_of(combo)


def brute_circuits(M: Matroid) -> set[int]:
    """Dependent sets containing no smaller dependent set found earlier."""
    found: list[int] = []
    for X in subsets_by_size(M.n):
        if M.r(X) < X.bit_count() and not any(C & X == C for C in found):
            found.append(X)
    return set(found)


def brute_bases(M: Matroid) -> list[int]:
    return [
        mask_of(combo)
        for combo in combinations(range(M.n), M.rank)
        if M.r(mask_of(combo)) == M.rank
    ]


def brute_hyperplanes(M: Matroid) -> set[int]:
    out = set()
    for X in range(1 << M.n):
        if M.r(X) != M.rank - 1:
            continue
        if all(M.r(X | (1 << e)) == M.rank for e in range(M.n) if not X >> e & 1):
            out.add(X)
    return out


def brute_cocircuits(M: Matroid) -> set[int]:
    return {M.ground ^ H for H in brute_hyperplanes(M)}


def rank_from_circuits(n: int, circuits: set[int], X: int) -> int:
    """Largest subset of X containing no circuit."""
    members = indices_of(X)
    for size in range(len(members), -1, -1):
        for combo in combinations(members, size):
            Y = mask_of(combo)
            if not any(C & Y == C for C in circuits):
                return size
    return 0


def corank_from_bases(bases: list[int], n: int, X: int) -> int:
    """Dual rank: the most elements of X some basis complement can hold."""
    ground = (1 << n) - 1
    return max((X & (ground ^ B)).bit_count() for B in bases)


def brute_closure(M: Matroid, X: int) -> int:
    out = X
    for e in range(M.n):
        if M.r(X | (1 << e)) == M.r(X):
            out |= 1 << e
    return out


class RankAgreementEvaluator:
    """Compares every rank-table entry with the rank recomputed from the circuit family"""

    def __init__(self, threshold: float = 1.0):
        self.threshold = threshold
        self.score = 0.0
        self.success = False
        self.reason: Optional[str] = None

    def measure(self, M: Matroid) -> float:
        circuits = brute_circuits(M)
        mismatches = [X for X in range(1 << M.n) if rank_from_circuits(M.n, circuits, X) != M.r(X)]
        self.score = 1.0 - len(mismatches) / (1 << M.n)
        self.success = self.score >= self.threshold
        self.reason = f"first mismatch at {mismatches[0]:#x}" if mismatches else None
        return self.score


class DualAgreementEvaluator:
    """Compares a dual's rank table with coranks computed from the bases of the original"""

    def __init__(self, threshold: float = 1.0):
        self.threshold = threshold
        self.score = 0.0
        self.success = False
        self.reason: Optional[str] = None

    def measure(self, M: Matroid, M_dual: Matroid) -> float:
        bases = brute_bases(M)
        mismatches = [
            X for X in range(1 << M.n) if corank_from_bases(bases, M.n, X) != M_dual.r(X)
        ]
        self.score = 1.0 - len(mismatches) / (1 << M.n)
        self.success = self.score >= self.threshold
        self.reason = f"first mismatch at {mismatches[0]:#x}" if mismatches else None
        return self.score
