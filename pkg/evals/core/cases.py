from dataclasses import dataclass, field

from construct import spike_11
from core import Matroid, direct_sum, free_matroid, uniform
from corpus import k4, two_lines

# Small named matroids for the core checks, with counts worked out by hand


@dataclass(frozen=True)
class MatroidCase:
    name: str
    matroid: Matroid
    metadata: dict = field(default_factory=dict)


u02 = MatroidCase(
    name="u02",
    matroid=uniform(0, 2),
    metadata={"rank": 0, "circuits": 2, "bases": 1, "flats": 1},
)

u13 = MatroidCase(
    name="u13",
    matroid=uniform(1, 3),
    metadata={"rank": 1, "circuits": 3, "bases": 3, "flats": 2},
)

u24 = MatroidCase(
    name="u24",
    matroid=uniform(2, 4),
    metadata={"rank": 2, "circuits": 4, "bases": 6, "flats": 6},
)

u36 = MatroidCase(
    name="u36",
    matroid=uniform(3, 6),
    metadata={"rank": 3, "circuits": 15, "bases": 20, "flats": 23},
)

free4 = MatroidCase(
    name="free4",
    matroid=free_matroid(4),
    metadata={"rank": 4, "circuits": 0, "bases": 1, "flats": 16},
)

graphic_k4 = MatroidCase(
    name="k4",
    matroid=k4(),
    metadata={"rank": 3, "circuits": 7, "bases": 16, "flats": 15},
)

lines = MatroidCase(
    name="two-lines",
    matroid=two_lines(),
    metadata={"rank": 3, "circuits": 44, "bases": 48, "flats": 28},
)

three_arms = MatroidCase(
    name="spike11-3",
    matroid=spike_11(3)[0],
    metadata={"rank": 3, "circuits": 3, "bases": 8, "flats": 8},
)

mixed_sum = MatroidCase(
    name="u12+u24",
    matroid=direct_sum(uniform(1, 2), uniform(2, 4)),
    metadata={"rank": 3, "circuits": 5, "bases": 12, "flats": 12},
)

dataset = [u02, u13, u24, u36, free4, graphic_k4, lines, three_arms, mixed_sum]
