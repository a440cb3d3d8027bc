from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(part <= 0 for part in self.parts):
            raise ValueError(f"Partition parts must be positive, got {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"Partition parts must be weakly decreasing, got {self.parts}")

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.parts) + ")" if self.parts else "()"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, index: int) -> int:
        """``lambda_index`` with 1-based indexing, zero past the length."""
        if index < 1:
            raise IndexError(f"Partition index starts at 1, got {index}")
        return self.parts[index - 1] if index <= len(self.parts) else 0


EMPTY = Partition()

PartitionTuple = Tuple[Partition, ...]


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    found = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            found.append((first,) + rest)
    return tuple(found)


def partitions_of(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError(f"Cannot partition a negative number, got {n}")
    for parts in _partitions(n, n):
        yield Partition(parts)


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    for n in range(max_size + 1):
        yield from partitions_of(n)


def _tuples_of_size(total: int, count: int) -> Iterator[PartitionTuple]:
    if count == 1:
        for partition in partitions_of(total):
            yield (partition,)
        return
    for first in range(total, -1, -1):
        for head in partitions_of(first):
            for tail in _tuples_of_size(total - first, count - 1):
                yield (head,) + tail


def partition_tuples(N: int, max_boxes: int) -> Iterator[PartitionTuple]:
    """
    Every ``N``-tuple of partitions with at most ``max_boxes`` boxes in total,
    by increasing total size.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    for total in range(max_boxes + 1):
        yield from _tuples_of_size(total, N)


def tuple_size(tup: PartitionTuple) -> int:
    return sum(partition.size for partition in tup)
