"""
Subset masks: bit i set means element i belongs to the subset.

Whole-table helpers work on numpy arrays indexed by mask (length 2^n). The
reshape trick used throughout views such an array as [high, bit, low] so the
halves "without element e" and "with element e" line up element-wise.
"""

from functools import lru_cache
from typing import Iterable

import numpy as np

SubsetMask = int


def mask_of(indices: Iterable[int]) -> SubsetMask:
    """Mask of a collection of element indices."""
    mask = 0
    for index in indices:
        if index < 0:
            raise ValueError(f"element index must be non-negative, got {index}")
        mask |= 1 << index
    return mask


def indices_of(mask: SubsetMask) -> tuple[int, ...]:
    """Sorted element indices of a mask."""
    out = []
    index = 0
    while mask:
        if mask & 1:
            out.append(index)
        mask >>= 1
        index += 1
    return tuple(out)


def lex_key(mask: SubsetMask) -> tuple[int, ...]:
    """Sort key placing masks in lexicographic order of their index tuples."""
    return indices_of(mask)


def format_mask(mask: SubsetMask) -> str:
    """Space separated indices, the way circuit lines are written."""
    return " ".join(str(i) for i in indices_of(mask))


def union_of(masks: Iterable[SubsetMask]) -> SubsetMask:
    out = 0
    for mask in masks:
        out |= mask
    return out


@lru_cache(maxsize=32)
def popcount_table(n: int) -> np.ndarray:
    """popcount of every mask below 2^n (read-only uint8 array)."""
    table = np.zeros(1 << n, dtype=np.uint8)
    for bit in range(n):
        width = 1 << bit
        table[width : 2 * width] = table[:width] + 1
    table.flags.writeable = False
    return table


@lru_cache(maxsize=8)
def mask_range(n: int) -> np.ndarray:
    """np.arange(2^n) as read-only int64, the mask of every table slot."""
    masks = np.arange(1 << n, dtype=np.int64)
    masks.flags.writeable = False
    return masks


def halves(array: np.ndarray, bit: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Views of a mask-indexed array split on one element.

    Returns (without, with): without[k] is the slot of some X lacking the
    element and with[k] is the slot of X plus the element.
    """
    view = array.reshape(-1, 2, 1 << bit)
    return view[:, 0, :], view[:, 1, :]


def pair_quarters(array: np.ndarray, e: int, f: int):
    """
    Views of a mask-indexed array split on two elements e < f.

    Returns (X, X+e, X+f, X+e+f) aligned element-wise over every X avoiding both.
    """
    if not e < f:
        raise ValueError("pair_quarters expects e < f")
    view = array.reshape(-1, 2, 1 << (f - e - 1), 2, 1 << e)
    return view[:, 0, :, 0, :], view[:, 0, :, 1, :], view[:, 1, :, 0, :], view[:, 1, :, 1, :]


def upward_closure(indicator: np.ndarray, n: int) -> np.ndarray:
    """Indicator of every superset of a marked mask (superset zeta transform)."""
    out = indicator.astype(bool, copy=True)
    for bit in range(n):
        without, with_ = halves(out, bit)
        with_ |= without
    return out


def downward_closure(indicator: np.ndarray, n: int) -> np.ndarray:
    """Indicator of every subset of a marked mask (subset zeta transform)."""
    out = indicator.astype(bool, copy=True)
    for bit in range(n):
        without, with_ = halves(out, bit)
        without |= with_
    return out


def spread_table(positions: list[int]) -> np.ndarray:
    """
    Map each mask over len(positions) compact elements to the original mask.

    Compact element j stands for original element positions[j].
    """
    out = np.zeros(1 << len(positions), dtype=np.int64)
    for j, position in enumerate(positions):
        width = 1 << j
        out[width : 2 * width] = out[:width] | (1 << position)
    return out


def indicator_of(masks: Iterable[SubsetMask], n: int) -> np.ndarray:
    """Boolean mask-indexed array marking the given masks."""
    out = np.zeros(1 << n, dtype=bool)
    members = list(masks)
    if members:
        out[np.asarray(members, dtype=np.int64)] = True
    return out


def sort_by_size(masks: Iterable[SubsetMask]) -> list[SubsetMask]:
    """Sort by (popcount, numeric value)."""
    return sorted(masks, key=lambda mask: (mask.bit_count(), mask))
