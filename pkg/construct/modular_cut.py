"""
Modular cuts and the single-element extensions they determine.

For a modular cut of M the extension M+e has
    r'(X)     = r(X)
    r'(X + e) = r(X)      if cl(X) is in the cut
              = r(X) + 1  otherwise
and the new element e takes index n.
"""

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
from pydantic import BaseModel, Field

from common.config import get_settings
from common.errors import HypothesisError, NotAFlatError, ParameterError
from common.logger import get_logger
from common.validators import require_cap, require_mask
from core.masks import SubsetMask, indicator_of, popcount_table, sort_by_size, upward_closure
from core.matroid import Matroid, closure_table, flat_indicator, validate
from spikes.artifacts import counterexample

logger = get_logger("spikes.construct.modular_cut")


class CutCheck(BaseModel):
    """Outcome of is_modular_cut."""

    ok: bool
    reason: Optional[str] = Field(default=None, description="upward-closure | modular-intersection")
    witness: list[SubsetMask] = Field(default_factory=list)


def _minimal(masks: Iterable[SubsetMask]) -> tuple[SubsetMask, ...]:
    kept: list[SubsetMask] = []
    for mask in sort_by_size(set(masks)):
        if not any(mask & small == small for small in kept):
            kept.append(mask)
    return tuple(kept)


@dataclass(frozen=True)
class ModularCut:
    """A modular cut stored by its minimal flats, tied to a host of size n and rank."""

    generators: tuple[SubsetMask, ...]
    n: int
    rank: int

    @classmethod
    def generated_by(cls, M: Matroid, flats: Iterable[SubsetMask]) -> "ModularCut":
        """
        The cut of all flats of M containing one of the given flats.

        Raises:
            NotAFlatError: a generator is not closed in M
        """
        flats = list(flats)
        is_flat = flat_indicator(M)
        for mask in flats:
            require_mask(mask, M.n, "generator")
            if not is_flat[mask]:
                raise NotAFlatError(mask)
        return cls(_minimal(flats), M.n, M.rank)

    def fits(self, M: Matroid) -> None:
        if (self.n, self.rank) != (M.n, M.rank):
            raise ParameterError(
                f"modular cut belongs to a host with n={self.n}, rank={self.rank}; "
                f"got n={M.n}, rank={M.rank}"
            )

    def indicator(self, M: Matroid) -> np.ndarray:
        """Every flat of M containing a generator."""
        self.fits(M)
        return upward_closure(indicator_of(self.generators, M.n), M.n) & flat_indicator(M)

    def members(self, M: Matroid) -> list[SubsetMask]:
        return [int(mask) for mask in np.flatnonzero(self.indicator(M))]


def is_modular_cut(M: Matroid, flats: Iterable[SubsetMask]) -> CutCheck:
    """
    Check the listed family literally: upward closed among flats, and closed
    under intersections of modular pairs.

    Raises:
        NotAFlatError: a listed set is not closed
    """
    listed = sorted(set(flats))
    is_flat = flat_indicator(M)
    for mask in listed:
        require_mask(mask, M.n, "cut member")
        if not is_flat[mask]:
            raise NotAFlatError(mask)

    marked = indicator_of(listed, M.n)
    missing = np.flatnonzero(upward_closure(marked, M.n) & is_flat & ~marked)
    if missing.size:
        return CutCheck(ok=False, reason="upward-closure", witness=[int(missing[0])])

    members = np.asarray(listed, dtype=np.int64)
    table = M.signed()
    for first in listed:
        meet = members & first
        join = members | first
        modular = table[first] + table[members] == table[join] + table[meet]
        bad = np.flatnonzero(modular & ~marked[meet])
        if bad.size:
            second = int(members[bad[0]])
            return CutCheck(ok=False, reason="modular-intersection", witness=[first, second])
    return CutCheck(ok=True)


def extend_by_modular_cut(M: Matroid, cut: ModularCut) -> Matroid:
    """
    The single-element extension of M by the cut; the new element is n.

    Raises:
        ParameterError: the cut belongs to another host, or n+1 exceeds the cap
        HypothesisError: the cut is not a modular cut
    """
    require_cap(M.n + 1, "extension")
    members = cut.indicator(M)
    check = is_modular_cut(M, np.flatnonzero(members).tolist())
    if not check.ok:
        raise HypothesisError("modular cut", check.reason or "", check.witness[0])

    in_cut = members[closure_table(M)]
    upper = M.table + (~in_cut).astype(np.uint8)
    extended = Matroid(M.n + 1, np.concatenate([M.table, upper]))

    report = validate(extended)
    if not report.passed:
        raise counterexample(M, "modular cut extension is a matroid", n=M.n)
    logger.debug("Extended by modular cut", n=M.n, generators=len(cut.generators), rank=extended.rank)
    return extended


def free_extension(M: Matroid) -> Matroid:
    """Extension by the cut {E}: the new element is only spanned by spanning sets."""
    return extend_by_modular_cut(M, ModularCut.generated_by(M, [M.ground]))


def in_extension_closure(M_plus: Matroid, X: SubsetMask) -> bool:
    """Whether the highest-index element lies in the closure of X."""
    e = 1 << (M_plus.n - 1)
    require_mask(X, M_plus.n - 1)
    return M_plus.r(X | e) == M_plus.r(X)


def blocks_cocircuit(M_plus: Matroid, cocircuit: SubsetMask) -> bool:
    """e blocks C* when it is not spanned by the complement of C* in the original ground set."""
    original = (1 << (M_plus.n - 1)) - 1
    return not in_extension_closure(M_plus, original ^ cocircuit)


def enumerate_modular_cuts(M: Matroid) -> list[ModularCut]:
    """
    Every modular cut of a small matroid, the empty cut included.

    Flats are decided in decreasing rank, so when a flat comes up every
    flat strictly above it and every modular pair meeting in it is settled.

    Raises:
        ParameterError: n exceeds the configured oracle limit
    """
    limit = get_settings().oracle_limit
    if M.n > limit:
        raise ParameterError(f"modular cut enumeration accepts at most {limit} elements, got {M.n}")

    all_flats = sorted(
        (int(mask) for mask in np.flatnonzero(flat_indicator(M))),
        key=lambda mask: (-M.r(mask), mask),
    )
    above = {
        flat: [other for other in all_flats if other != flat and other & flat == flat]
        for flat in all_flats
    }
    forcing: dict[SubsetMask, list[tuple[SubsetMask, SubsetMask]]] = {flat: [] for flat in all_flats}
    for i, first in enumerate(all_flats):
        for second in all_flats[i + 1 :]:
            meet = first & second
            if meet in (first, second):
                continue
            if M.r(first) + M.r(second) == M.r(first | second) + M.r(meet):
                forcing[meet].append((first, second))

    cuts: list[ModularCut] = []
    chosen: set[SubsetMask] = set()

    def decide(position: int) -> None:
        if position == len(all_flats):
            cuts.append(ModularCut(_minimal(chosen), M.n, M.rank))
            return
        flat = all_flats[position]
        can_include = all(other in chosen for other in above[flat])
        forced = any(a in chosen and b in chosen for a, b in forcing[flat])
        if can_include:
            chosen.add(flat)
            decide(position + 1)
            chosen.discard(flat)
        if not forced:
            decide(position + 1)

    decide(0)
    logger.debug("Modular cuts enumerated", n=M.n, flats=len(all_flats), cuts=len(cuts))
    return cuts
