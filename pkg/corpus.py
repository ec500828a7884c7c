"""
Built-in seed instances, addressable by name from the CLI and the tests.

    u<r>-<n>            uniform matroid U_{r,n}
    k4                  graphic matroid of K4 on edges 12 13 14 23 24 34
    two-lines           rank 3, two disjoint four-point lines {0..3} and {4..7}
    spike11-<m>         direct sum of m copies of U_{1,2}
    spike-<s>-<t>-<m>   built (s,t)-spike of order m
"""

import re
from typing import NamedTuple, Optional

import numpy as np

from common.errors import ParameterError
from construct.pipeline import build_spike, spike_11
from core.masks import mask_of, mask_range, popcount_table
from core.matroid import Matroid, from_circuits, uniform
from spikes.partition import PairPartition, SpikeCertificate

K4_TRIANGLES = [(0, 1, 3), (0, 2, 4), (1, 2, 5), (3, 4, 5)]
K4_SQUARES = [(0, 2, 3, 5), (0, 1, 4, 5), (1, 2, 3, 4)]
# the perfect matchings {12,34} {13,24} {14,23}
K4_MATCHINGS = [(0, 5), (1, 4), (2, 3)]

LINE_A = mask_of(range(4))
LINE_B = mask_of(range(4, 8))


class Seed(NamedTuple):
    matroid: Matroid
    certificate: Optional[SpikeCertificate] = None


def k4() -> Matroid:
    return from_circuits(6, [mask_of(c) for c in K4_TRIANGLES + K4_SQUARES])


def k4_certificate() -> SpikeCertificate:
    return SpikeCertificate(s=2, t=2, partition=PairPartition.from_indices(K4_MATCHINGS))


def two_lines() -> Matroid:
    """Rank 3 with two disjoint four-point lines."""
    masks = mask_range(8)
    sizes = popcount_table(8)
    on_a_line = ((masks & ~LINE_A) == 0) | ((masks & ~LINE_B) == 0)
    return Matroid(8, np.where(on_a_line, np.minimum(sizes, 2), np.minimum(sizes, 3)))


_PATTERNS = [
    (re.compile(r"u(\d+)-(\d+)"), lambda r, n: Seed(uniform(r, n))),
    (re.compile(r"k4"), lambda: Seed(k4(), k4_certificate())),
    (re.compile(r"two-lines"), lambda: Seed(two_lines())),
    (re.compile(r"spike11-(\d+)"), lambda m: Seed(*spike_11(m))),
    (re.compile(r"spike-(\d+)-(\d+)-(\d+)"), lambda s, t, m: Seed(*build_spike(s, t, m)[:2])),
]


def load_seed(name: str) -> Seed:
    """
    Resolve a seed name.

    Raises:
        ParameterError: unknown name
    """
    for pattern, make in _PATTERNS:
        match = pattern.fullmatch(name)
        if match:
            return make(*(int(group) for group in match.groups()))
    raise ParameterError(
        f"unknown seed {name!r}; expected u<r>-<n>, k4, two-lines, spike11-<m> or spike-<s>-<t>-<m>"
    )


def seed_matroid(name: str) -> Matroid:
    return load_seed(name).matroid
