"""
Pair partitions and spike certificates.

A certificate serializes as

    spike s=<s> t=<t>
    <i> <j>            (one arm per line, 0-based indices)
"""

from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

from pydantic import BaseModel, ConfigDict, Field, field_validator

from common.errors import MatroidFormatError
from core.masks import SubsetMask, format_mask, indices_of, mask_of, union_of


class PairPartition(BaseModel):
    """Ordered, pairwise disjoint 2-element masks."""

    model_config = ConfigDict(frozen=True)

    pairs: tuple[SubsetMask, ...] = Field(description="Arm or spine masks in order")

    @field_validator("pairs")
    @classmethod
    def _disjoint_pairs(cls, pairs: tuple[SubsetMask, ...]) -> tuple[SubsetMask, ...]:
        seen = 0
        for pair in pairs:
            if pair < 0 or pair.bit_count() != 2:
                raise ValueError(f"pair {pair:#x} does not have exactly two elements")
            if seen & pair:
                raise ValueError(f"pair {format_mask(pair)!r} overlaps an earlier pair")
            seen |= pair
        return pairs

    @classmethod
    def from_indices(cls, pairs: Iterable[tuple[int, int]]) -> "PairPartition":
        return cls(pairs=tuple(mask_of(pair) for pair in pairs))

    @property
    def covered(self) -> SubsetMask:
        return union_of(self.pairs)

    @property
    def order(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def union(self, chosen: Iterable[int]) -> SubsetMask:
        """Union of the pairs at the given positions."""
        return union_of(self.pairs[i] for i in chosen)

    def union_of_index_mask(self, index_mask: int) -> SubsetMask:
        """Union of the pairs whose positions are the bits of index_mask."""
        return self.union(indices_of(index_mask))

    def unions(self, k: int) -> Iterator[tuple[tuple[int, ...], SubsetMask]]:
        """Every k-combination of positions with the union of its pairs."""
        for chosen in combinations(range(len(self.pairs)), k):
            yield chosen, self.union(chosen)

    def extended(self, pair: SubsetMask) -> "PairPartition":
        return PairPartition(pairs=self.pairs + (pair,))

    def index_pairs(self) -> list[tuple[int, ...]]:
        return [indices_of(pair) for pair in self.pairs]


class SpikeCertificate(BaseModel):
    """An (s,t)-spike claim: the arm partition plus its parameters."""

    model_config = ConfigDict(frozen=True)

    s: int = Field(ge=1)
    t: int = Field(ge=1)
    partition: PairPartition

    @property
    def order(self) -> int:
        return len(self.partition)

    @property
    def m(self) -> int:
        return len(self.partition)

    @property
    def arms(self) -> tuple[SubsetMask, ...]:
        return self.partition.pairs

    def dual(self) -> "SpikeCertificate":
        """The same arms certify the dual as a (t,s)-spike."""
        return SpikeCertificate(s=self.t, t=self.s, partition=self.partition)

    def relabel(self, s: int, t: int) -> "SpikeCertificate":
        return SpikeCertificate(s=s, t=t, partition=self.partition)

    def to_text(self) -> str:
        lines = [f"spike s={self.s} t={self.t}"]
        lines.extend(format_mask(arm) for arm in self.arms)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SpikeCertificate":
        """
        Parse certificate text.

        Raises:
            MatroidFormatError: malformed header or arm lines, overlapping arms
        """
        lines = [line.strip() for line in text.strip().split("\n")]
        if not lines or not lines[0].startswith("spike "):
            raise MatroidFormatError("expected 'spike s=<s> t=<t>'", 1)
        fields = dict(_key_value(token, 1) for token in lines[0].split()[1:])
        if set(fields) != {"s", "t"}:
            raise MatroidFormatError("header needs exactly the keys s and t", 1)

        arms: list[tuple[int, int]] = []
        for number, line in enumerate(lines[1:], start=2):
            tokens = line.split()
            if len(tokens) != 2:
                raise MatroidFormatError(f"arm line needs two indices, got {line!r}", number)
            try:
                first, second = (int(token) for token in tokens)
            except ValueError:
                raise MatroidFormatError(f"arm indices must be integers, got {line!r}", number) from None
            if first < 0 or second <= first:
                raise MatroidFormatError("arm indices must be non-negative and increasing", number)
            arms.append((first, second))

        try:
            return cls(s=fields["s"], t=fields["t"], partition=PairPartition.from_indices(arms))
        except ValueError as exc:
            raise MatroidFormatError(f"invalid certificate: {exc}") from exc


def _key_value(token: str, line: int) -> tuple[str, int]:
    key, sep, value = token.partition("=")
    if not sep:
        raise MatroidFormatError(f"expected key=value, got {token!r}", line)
    try:
        return key, int(value)
    except ValueError:
        raise MatroidFormatError(f"{key} must be an integer, got {value!r}", line) from None


def write_certificate(certificate: SpikeCertificate, path: Path) -> Path:
    path = Path(path)
    path.write_text(certificate.to_text(), encoding="utf-8")
    return path


def read_certificate(path: Path) -> SpikeCertificate:
    return SpikeCertificate.from_text(Path(path).read_text(encoding="utf-8"))
