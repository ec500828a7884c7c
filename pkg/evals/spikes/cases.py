from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from construct import build_spike, spike_11
from core import Matroid, direct_sum, uniform
from corpus import k4, k4_certificate, two_lines
from evals.spikes.evaluators import relax
from spikes import SpikeCertificate

# Named spike instances; metadata records the parameters each one is checked against


@lru_cache(maxsize=None)
def built(s: int, t: int, m: int) -> tuple[Matroid, SpikeCertificate]:
    M, cert, _ = build_spike(s, t, m)
    return M, cert


@dataclass(frozen=True)
class SpikeCase:
    name: str
    matroid: Matroid
    certificate: Optional[SpikeCertificate] = None
    metadata: dict = field(default_factory=dict)


def built_case(s: int, t: int, m: int) -> SpikeCase:
    M, cert = built(s, t, m)
    return SpikeCase(
        name=f"spike-{s}-{t}-{m}",
        matroid=M,
        certificate=cert,
        metadata={"s": s, "t": t, "m": m, "rank": m + s - t},
    )


def relaxed_case(s: int, t: int, m: int) -> SpikeCase:
    """Relax the first union of s arms; with m = s+t it is a circuit-hyperplane."""
    M, cert = built(s, t, m)
    union = cert.partition.union(range(s))
    return SpikeCase(
        name=f"relaxed-{s}-{t}-{m}",
        matroid=relax(M, union),
        certificate=cert,
        metadata={"s": s, "t": t, "m": m, "relaxed": union},
    )


graphic_k4 = SpikeCase(
    name="k4",
    matroid=k4(),
    certificate=k4_certificate(),
    metadata={"s": 2, "t": 2, "m": 3, "rank": 3},
)

# Spike families whose structure checks must all pass
structure_dataset = [
    graphic_k4,
    built_case(1, 1, 3),
    built_case(1, 2, 4),
    built_case(2, 1, 4),
    built_case(2, 2, 4),
    built_case(2, 2, 6),
    built_case(2, 3, 7),
    built_case(3, 2, 7),
]

perturbed_dataset = [
    relaxed_case(1, 1, 2),
    relaxed_case(1, 2, 3),
    relaxed_case(2, 1, 3),
    relaxed_case(2, 2, 4),
    relaxed_case(2, 3, 5),
]

# Matroids on at most 10 elements for the oracle comparison
oracle_dataset = [
    SpikeCase(name="u12", matroid=uniform(1, 2)),
    SpikeCase(name="u14", matroid=uniform(1, 4)),
    SpikeCase(name="u24", matroid=uniform(2, 4)),
    SpikeCase(name="u34", matroid=uniform(3, 4)),
    SpikeCase(name="u26", matroid=uniform(2, 6)),
    SpikeCase(name="u36", matroid=uniform(3, 6)),
    SpikeCase(name="u46", matroid=uniform(4, 6)),
    SpikeCase(name="u38", matroid=uniform(3, 8)),
    SpikeCase(name="two-lines", matroid=two_lines()),
    SpikeCase(name="u12+u24", matroid=direct_sum(uniform(1, 2), uniform(2, 4))),
    SpikeCase(name="spike11-4", matroid=spike_11(4)[0], metadata={"s": 1, "t": 1}),
    SpikeCase(name="spike11-5", matroid=spike_11(5)[0], metadata={"s": 1, "t": 1}),
    graphic_k4,
    built_case(1, 2, 3),
    built_case(2, 1, 3),
    built_case(1, 2, 4),
    built_case(2, 2, 4),
    built_case(1, 3, 4),
    built_case(3, 1, 4),
    built_case(2, 2, 5),
    built_case(2, 3, 5),
    built_case(3, 2, 5),
    *perturbed_dataset,
]
