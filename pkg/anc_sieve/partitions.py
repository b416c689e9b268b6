"""Integer partitions: generation, conjugation, the tau statistic and
divisibility by d.

A `Partition` is stored as its weakly decreasing parts; multiplicities are
derived. The empty partition is an ordinary value (weight 0, length 0).
"""
import functools
import json
import math
import re
from collections import Counter
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from .errors import PartitionError


class Partition(BaseModel):
    """Integer partition with part-multiplicity view.

    Attributes:
        parts: weakly decreasing positive integers
    """
    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...] = ()

    @field_validator("parts")
    @classmethod
    def check_parts(cls, parts: tuple[int, ...]) -> tuple[int, ...]:
        """Parts must be positive and weakly decreasing."""
        if any(p <= 0 for p in parts):
            raise ValueError(f"Partition parts must be positive; got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"Partition parts must be weakly decreasing; got {parts}")
        return parts

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Builds a partition from parts in any order."""
        try:
            return cls(parts=tuple(sorted(parts, reverse=True)))
        except ValidationError as e:
            raise PartitionError(str(e)) from e

    @classmethod
    def from_multiplicities(cls, multiplicities: Mapping[int, int]) -> "Partition":
        """Builds (1^{m_1}, 2^{m_2}, ...) from a part -> multiplicity mapping."""
        parts: list[int] = []
        for part in sorted(multiplicities, reverse=True):
            count = multiplicities[part]
            if count < 0:
                raise PartitionError(f"Negative multiplicity {count} for part {part}")
            parts.extend([part] * count)
        return cls.from_parts(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        """Part size -> multiplicity, ascending by part size."""
        return dict(sorted(Counter(self.parts).items()))

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY_PARTITION = Partition()


def _decreasing_partitions(n: int, k: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        if n == 0:
            yield ()
        return
    if n < k:
        return
    # largest part first, so output is lexicographically decreasing
    largest = min(max_part, n - (k - 1))
    smallest = -(-n // k)
    for first in range(largest, smallest - 1, -1):
        for rest in _decreasing_partitions(n - first, k - 1, first):
            yield (first,) + rest


@functools.lru_cache(maxsize=None)
def par_set(n: int, k: int) -> tuple[Partition, ...]:
    """Par(n, k): partitions of n into exactly k parts, lexicographically decreasing.

    Example:
        ```python
        [str(p) for p in par_set(4, 2)]   # ['(3,1)', '(2,2)']
        ```
    """
    if n < 0 or k < 0:
        return ()
    return tuple(
        Partition.model_construct(parts=parts)
        for parts in _decreasing_partitions(n, k, n)
    )


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, grouped by number of parts."""
    return tuple(p for k in range(n + 1) for p in par_set(n, k))


def conjugate(lam: Partition) -> Partition:
    """The transpose lam' with lam'_i = #{j : lam_j >= i}."""
    if not lam.parts:
        return EMPTY_PARTITION
    parts = tuple(
        sum(1 for p in lam.parts if p >= i) for i in range(1, lam.parts[0] + 1)
    )
    return Partition.model_construct(parts=parts)


def tau(lam: Partition) -> int:
    """tau(lam) = sum_i lam'_i * lam'_{i+1}."""
    conj = conjugate(lam).parts
    return sum(conj[i] * conj[i + 1] for i in range(len(conj) - 1))


def is_divisible(lam: Partition, d: int) -> bool:
    """True when every multiplicity of lam is divisible by d."""
    if d < 1:
        raise PartitionError(f"Divisor must be positive; got {d}")
    return all(count % d == 0 for count in lam.multiplicities.values())


def divide(lam: Partition, d: int) -> Partition:
    """lam/d: every multiplicity divided by d; part sizes are unchanged.

    Raises:
        PartitionError: if lam is not divisible by d
    """
    if not is_divisible(lam, d):
        raise PartitionError(f"Partition {lam} is not divisible by {d}")
    return Partition.from_multiplicities(
        {part: count // d for part, count in lam.multiplicities.items()}
    )


def multiply_multiplicities(lam: Partition, d: int) -> Partition:
    """Inverse of `divide`: every multiplicity multiplied by d."""
    if d < 1:
        raise PartitionError(f"Multiplier must be positive; got {d}")
    return Partition.from_multiplicities(
        {part: count * d for part, count in lam.multiplicities.items()}
    )


def scale_parts(lam: Partition, t: int) -> Partition:
    """Multiplies every part by t."""
    if t < 1:
        raise PartitionError(f"Scale must be positive; got {t}")
    return Partition.model_construct(parts=tuple(p * t for p in lam.parts))


def rearrangement_count(lam: Partition) -> int:
    """Number of distinct orderings of the parts: k!/prod(m_i!)."""
    total = math.factorial(lam.length)
    for count in lam.multiplicities.values():
        total //= math.factorial(count)
    return total


def is_rearrangement(sequence: Iterable[int], lam: Partition) -> bool:
    """True if sequence lists the parts of lam in some order."""
    return tuple(sorted(sequence, reverse=True)) == lam.parts


_PARTITION_TEXT = re.compile(r"^\s*[\(\[]?\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)[\)\]]?\s*$")


def parse_partition(text: str) -> Partition:
    """Parses "(3,1)", "[3,1]", "3,1" or "()" into a Partition.

    Raises:
        PartitionError: on malformed text or non-decreasing parts
    """
    match = _PARTITION_TEXT.match(text)
    if match is None:
        raise PartitionError(f"Cannot parse partition from '{text}'")
    body = match.group(1).strip()
    parts = tuple(int(x) for x in body.split(",")) if body else ()
    try:
        return Partition(parts=parts)
    except ValidationError as e:
        raise PartitionError(f"Invalid partition '{text}': {e.errors()[0]['msg']}") from e


def partition_from_json(data: str) -> Partition:
    """Reads the JSON array form, e.g. ``[3,1]``."""
    try:
        return Partition(parts=tuple(json.loads(data)))
    except (ValueError, TypeError) as e:
        raise PartitionError(f"Invalid partition JSON '{data}'") from e
