"""Integer partitions, parity classes, Jordan matrices and the Kronecker rank identity."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Literal

import numpy as np

__all__ = [
    "Partition",
    "PartitionClass",
    "dual",
    "enumerate_partitions",
    "is_very_even",
    "jordan_matrix",
    "min_sum",
    "kron_jordan_rank",
    "parse_partition",
]


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Indexing via :meth:`part` is 1-based and returns 0 past the last part,
    so formulas like ``sum(mu.part(i) * nu.part(i))`` need no padding.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def dual(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1)))

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def is_very_even(self) -> bool:
        return all(p % 2 == 0 and c % 2 == 0 for p, c in self.multiplicities().items())

    def is_zero_orbit(self) -> bool:
        """All parts equal to 1, i.e. the zero nilpotent."""
        return all(p == 1 for p in self.parts)

    def __str__(self) -> str:
        return format_partition(self)


class PartitionClass(Enum):
    ALL = "all"
    B_D = "b_d"  # even parts occur with even multiplicity
    C = "c"  # odd parts occur with even multiplicity

    def contains(self, mu: Partition) -> bool:
        if self is PartitionClass.ALL:
            return True
        parity = 0 if self is PartitionClass.B_D else 1
        return all(c % 2 == 0 for p, c in mu.multiplicities().items() if p % 2 == parity)


def _partitions(m: int, largest: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def enumerate_partitions(m: int, cls: PartitionClass = PartitionClass.ALL) -> list[Partition]:
    """All partitions of ``m`` in ``cls``, in reverse-lexicographic order."""
    if m < 0:
        raise ValueError("weight must be nonnegative")
    return [mu for mu in map(Partition, _partitions(m, m)) if cls.contains(mu)]


def dual(mu: Partition) -> Partition:
    return mu.dual()


def is_very_even(mu: Partition) -> bool:
    return mu.is_very_even()


def jordan_matrix(
    mu: Partition, placement: Literal["above", "below"] = "above"
) -> np.ndarray:
    """Nilpotent 0/1 matrix with Jordan blocks of sizes ``mu`` in decreasing order."""
    if placement not in ("above", "below"):
        raise ValueError("placement must be 'above' or 'below'")
    m = mu.weight
    out = np.zeros((m, m), dtype=np.int64)
    start = 0
    for d in mu:
        for i in range(start, start + d - 1):
            if placement == "above":
                out[i, i + 1] = 1
            else:
                out[i + 1, i] = 1
        start += d
    return out


def min_sum(mu: Partition, nu: Partition) -> int:
    """sum_i mu'_i nu'_i, which equals sum_{j,k} min(mu_j, nu_k)."""
    a, b = mu.dual(), nu.dual()
    return sum(x * y for x, y in zip(a.parts, b.parts))


def kron_jordan_rank(mu: Partition, nu: Partition) -> int:
    """Rank of J_mu (x) I + I (x) J_nu by the closed form mn - sum mu'_i nu'_i."""
    return mu.weight * nu.weight - min_sum(mu, nu)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"2^2,1^3"`` style text; brackets and whitespace are ignored."""
    cleaned = re.sub(r"[\s()\[\]]", "", text)
    if cleaned in ("", "0", "-"):
        return Partition(())
    parts: list[int] = []
    for token in cleaned.split(","):
        match = _TOKEN.match(token)
        if not match:
            raise ValueError(f"cannot parse partition token {token!r} in {text!r}")
        part, mult = int(match.group(1)), int(match.group(2) or 1)
        if part <= 0:
            raise ValueError(f"partition parts must be positive: {text!r}")
        parts.extend([part] * mult)
    return Partition.of(*parts)


def format_partition(mu: Partition | Iterable[int]) -> str:
    """Compact text form, e.g. ``(2,2,1,1,1)`` becomes ``2^2,1^3``."""
    parts = tuple(mu)
    if not parts:
        return "0"
    chunks = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        chunks.append(str(parts[i]) if j - i == 1 else f"{parts[i]}^{j - i}")
        i = j
    return ",".join(chunks)
