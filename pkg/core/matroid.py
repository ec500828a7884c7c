"""
Exact small-matroid engine.

A Matroid is its ground-set size plus the full rank table: one byte per
subset mask. Every other query (closure, circuits, flats, duality, minors,
connectivity) is a lookup or a vectorized scan over that table.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np
from pydantic import BaseModel, Field

from common.errors import InvalidCircuitsError, ParameterError
from common.logger import get_logger
from common.validators import require_cap, require_mask
from core.masks import (
    SubsetMask,
    halves,
    indicator_of,
    indices_of,
    mask_range,
    pair_quarters,
    popcount_table,
    sort_by_size,
    upward_closure,
)

logger = get_logger("spikes.core.matroid")


@dataclass(frozen=True, eq=False)
class Matroid:
    """Ground set {0..n-1} with rank table indexed by subset mask."""

    n: int
    table: np.ndarray

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError(f"ground set size must be non-negative, got {self.n}")
        table = np.ascontiguousarray(self.table, dtype=np.uint8)
        if table.shape != (1 << self.n,):
            raise ParameterError(
                f"rank table for n={self.n} needs {1 << self.n} entries, got {table.shape}"
            )
        if table is self.table:
            table = table.copy()
        table.flags.writeable = False
        object.__setattr__(self, "table", table)

    @property
    def ground(self) -> SubsetMask:
        return (1 << self.n) - 1

    @property
    def rank(self) -> int:
        return int(self.table[-1])

    @property
    def size(self) -> int:
        return self.n

    def r(self, mask: SubsetMask) -> int:
        return int(self.table[mask])

    def signed(self) -> np.ndarray:
        """The rank table as int16, safe for differences."""
        return self.table.astype(np.int16)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.n, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank})"


@dataclass(frozen=True)
class CircuitFamily:
    """Circuits (or cocircuits) sorted by (popcount, numeric value)."""

    members: tuple[SubsetMask, ...]

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: SubsetMask) -> bool:
        return mask in self.members

    def of_size(self, size: int) -> list[SubsetMask]:
        return [mask for mask in self.members if mask.bit_count() == size]


class Violation(BaseModel):
    axiom: str = Field(description="normalization | cardinality | unit-increase | submodularity")
    witness: list[int] = Field(description="Masks exhibiting the failure")


class ValidationReport(BaseModel):
    """Outcome of the exhaustive rank-axiom scan."""

    passed: bool
    violations: list[Violation] = Field(default_factory=list)


# Constructors


def uniform(r: int, n: int) -> Matroid:
    """U_{r,n}: every r-subset is a basis."""
    require_cap(n)
    if not 0 <= r <= n:
        raise ParameterError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    table = np.minimum(popcount_table(n), r)
    return Matroid(n, table)


def free_matroid(n: int) -> Matroid:
    return uniform(n, n)


def from_circuits(n: int, circuits: Iterable[SubsetMask]) -> Matroid:
    """
    Build the matroid whose circuits are exactly the given family.

    Rank of X is the size of the greedy maximal subset of X containing no
    listed circuit; greedy is exact when the family is a matroid's circuit
    family, and validation catches it when it is not.

    Raises:
        InvalidCircuitsError: the family is not a circuit family
    """
    require_cap(n)
    family = sort_by_size(set(circuits))
    for circuit in family:
        if circuit == 0:
            raise InvalidCircuitsError("the empty set cannot be a circuit", [0])
        require_mask(circuit, n, "circuit")
    for i, small in enumerate(family):
        for big in family[i + 1 :]:
            if small & big == small:
                raise InvalidCircuitsError(
                    "circuits must be pairwise incomparable", [small, big]
                )

    dependent = upward_closure(indicator_of(family, n), n)
    # greedy[X] = greedy independent subset of X, elements taken in increasing order
    greedy = np.zeros(1 << n, dtype=np.int64)
    for bit in range(n):
        width = 1 << bit
        grown = greedy[:width] | width
        greedy[width : 2 * width] = np.where(dependent[grown], greedy[:width], grown)
    matroid = Matroid(n, popcount_table(n)[greedy])

    report = validate(matroid)
    if not report.passed:
        violation = report.violations[0]
        raise InvalidCircuitsError(
            f"circuits violate the circuit axioms ({violation.axiom})", violation.witness
        )
    rebuilt = circuits_of(matroid).members
    if list(rebuilt) != family:
        stray = sorted(set(rebuilt).symmetric_difference(family))
        raise InvalidCircuitsError("circuit elimination forces a different family", stray[:1])
    logger.debug("Matroid built from circuits", n=n, circuits=len(family), rank=matroid.rank)
    return matroid


# Axioms


def validate(M: Matroid) -> ValidationReport:
    """Exhaustively check normalization, cardinality, unit increase and local submodularity."""
    table = M.signed()
    sizes = popcount_table(M.n).astype(np.int16)
    violations: list[Violation] = []

    if table[0] != 0:
        violations.append(Violation(axiom="normalization", witness=[0]))

    too_big = np.flatnonzero(table > sizes)
    if too_big.size:
        violations.append(Violation(axiom="cardinality", witness=[int(too_big[0])]))

    masks = mask_range(M.n)
    for bit in range(M.n):
        without, with_ = halves(table, bit)
        step = with_ - without
        bad = (step < 0) | (step > 1)
        if bad.any():
            base = int(halves(masks, bit)[0][bad][0])
            violations.append(Violation(axiom="unit-increase", witness=[base, base | (1 << bit)]))
            break

    found = False
    for f in range(M.n):
        for e in range(f):
            x, xe, xf, xef = pair_quarters(table, e, f)
            bad = xe + xf < xef + x
            if bad.any():
                base = int(pair_quarters(masks, e, f)[0][bad][0])
                violations.append(
                    Violation(
                        axiom="submodularity",
                        witness=[base, base | (1 << e), base | (1 << f)],
                    )
                )
                found = True
                break
        if found:
            break

    if violations:
        logger.debug("Rank table failed validation", n=M.n, axioms=[v.axiom for v in violations])
    return ValidationReport(passed=not violations, violations=violations)


# Point queries


def rank(M: Matroid, X: SubsetMask) -> int:
    require_mask(X, M.n)
    return M.r(X)


def corank(M: Matroid, X: SubsetMask) -> int:
    """Rank of X in the dual: |X| + r(E - X) - r(E)."""
    require_mask(X, M.n)
    return X.bit_count() + M.r(M.ground ^ X) - M.rank


def closure(M: Matroid, X: SubsetMask) -> SubsetMask:
    require_mask(X, M.n)
    base = M.r(X)
    out = X
    for element in range(M.n):
        bit = 1 << element
        if not X & bit and M.r(X | bit) == base:
            out |= bit
    return out


def is_independent(M: Matroid, X: SubsetMask) -> bool:
    require_mask(X, M.n)
    return M.r(X) == X.bit_count()


def is_flat(M: Matroid, X: SubsetMask) -> bool:
    return closure(M, X) == X


def is_circuit(M: Matroid, X: SubsetMask) -> bool:
    """Minimal dependent: r(X) = |X| - 1 and every one-element deletion is independent."""
    require_mask(X, M.n)
    size = X.bit_count()
    if size == 0 or M.r(X) != size - 1:
        return False
    return all(M.r(X ^ (1 << i)) == size - 1 for i in indices_of(X))


def is_cocircuit(M: Matroid, X: SubsetMask) -> bool:
    """X is a cocircuit iff E - X is a hyperplane."""
    require_mask(X, M.n)
    if X == 0:
        return False
    complement = M.ground ^ X
    if M.r(complement) != M.rank - 1:
        return False
    return all(M.r(complement | (1 << i)) == M.rank for i in indices_of(X))


# Whole-table scans


def _circuit_indicator(table: np.ndarray, n: int) -> np.ndarray:
    sizes = popcount_table(n)
    independent = table == sizes
    circuit = ~independent
    for bit in range(n):
        without, with_ = halves(circuit, bit)
        with_ &= halves(independent, bit)[0]
    return circuit


def _family(indicator: np.ndarray, n: int) -> CircuitFamily:
    members = np.flatnonzero(indicator)
    sizes = popcount_table(n)[members]
    order = np.lexsort((members, sizes))
    return CircuitFamily(tuple(int(mask) for mask in members[order]))


def circuit_indicator(M: Matroid) -> np.ndarray:
    """Boolean array marking every circuit."""
    return _circuit_indicator(M.table, M.n)


def circuits_of(M: Matroid) -> CircuitFamily:
    """All minimal dependent sets."""
    return _family(_circuit_indicator(M.table, M.n), M.n)


def dual_table(M: Matroid) -> np.ndarray:
    """r*(X) = |X| + r(E - X) - r(E) for every mask X."""
    # reversing the table maps X to the rank of its complement
    signed = popcount_table(M.n).astype(np.int16) + M.signed()[::-1] - M.rank
    return signed.astype(np.uint8)


def cocircuit_indicator(M: Matroid) -> np.ndarray:
    """Boolean array marking every cocircuit."""
    return _circuit_indicator(dual_table(M), M.n)


def cocircuits_of(M: Matroid) -> CircuitFamily:
    """All circuits of the dual."""
    return _family(cocircuit_indicator(M), M.n)


def flat_indicator(M: Matroid) -> np.ndarray:
    """Boolean array marking every flat."""
    flat = np.ones(1 << M.n, dtype=bool)
    for bit in range(M.n):
        without, with_ = halves(M.table, bit)
        halves(flat, bit)[0][...] &= with_ > without
    return flat


def flats(M: Matroid) -> list[SubsetMask]:
    return [int(mask) for mask in np.flatnonzero(flat_indicator(M))]


def hyperplanes(M: Matroid) -> list[SubsetMask]:
    indicator = flat_indicator(M) & (M.table == M.rank - 1)
    return [int(mask) for mask in np.flatnonzero(indicator)]


def bases(M: Matroid) -> list[SubsetMask]:
    indicator = (M.table == popcount_table(M.n)) & (popcount_table(M.n) == M.rank)
    return [int(mask) for mask in np.flatnonzero(indicator)]


def closure_table(M: Matroid) -> np.ndarray:
    """cl(X) for every mask X."""
    closed = np.array(mask_range(M.n), copy=True)
    for bit in range(M.n):
        without, with_ = halves(M.table, bit)
        target = halves(closed, bit)[0]
        target[with_ == without] |= 1 << bit
    return closed


def check_orthogonality(M: Matroid) -> Optional[tuple[SubsetMask, SubsetMask]]:
    """First (circuit, cocircuit) pair meeting in exactly one element, if any."""
    cocircuits = cocircuits_of(M).members
    for circuit in circuits_of(M):
        for cocircuit in cocircuits:
            if (circuit & cocircuit).bit_count() == 1:
                return circuit, cocircuit
    return None
