"""Integer partitions: conjugation, hooks, prefix sums and the two orders we need.

A :class:`Partition` is an immutable tuple in canonical form (weakly
decreasing, trailing zeros removed), so ``Partition([2, 1, 0]) == (2, 1)``.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "as_partition",
    "size",
    "conjugate",
    "is_hook",
    "row_prefix_sums",
    "col_prefix_sums",
    "contains",
    "dominates",
    "partitions_of",
    "partitions_up_to",
    "hook_instances",
]


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers without trailing zeros."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts are not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part, 1-based, with 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def to_json(self) -> str:
        return json.dumps(list(self))

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("a partition serializes as a JSON array")
        return cls(data)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated command-line form; ``""`` is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))


def as_partition(lam: Sequence[int]) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def is_hook(lam: Sequence[int], k: int, l: int) -> bool:
    """True iff the (k+1)-th part of ``lam`` is at most ``l``."""
    return as_partition(lam).part(k + 1) <= l


def _padded_prefix_sums(parts: Sequence[int], n: int) -> tuple[int, ...]:
    padded = list(parts[:n]) + [0] * max(0, n - len(parts))
    return tuple(itertools.accumulate(padded))


def row_prefix_sums(lam: Sequence[int], k: int) -> tuple[int, ...]:
    """``(L_1, ..., L_k)`` where ``L_r`` is the number of boxes in the first r rows."""
    return _padded_prefix_sums(as_partition(lam), k)


def col_prefix_sums(lam: Sequence[int], l: int) -> tuple[int, ...]:
    """``(C_1, ..., C_l)`` where ``C_s`` is the number of boxes in the first s columns."""
    return _padded_prefix_sums(conjugate(lam), l)


def contains(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Componentwise containment of Young diagrams, ``mu ⊆ lam``."""
    mu, lam = as_partition(mu), as_partition(lam)
    return len(mu) <= len(lam) and all(m <= p for m, p in zip(mu, lam))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Partial-sum dominance of ``mu`` by ``lam``; sizes are not compared."""
    lam, mu = as_partition(lam), as_partition(mu)
    n = max(len(lam), len(mu))
    return all(m <= p for m, p in zip(_padded_prefix_sums(mu, n), _padded_prefix_sums(lam, n)))


def partitions_of(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(rest: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p, slots - 1):
                yield (p,) + tail

    for parts in rec(n, max_part, max_length):
        yield Partition(parts)


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    for n in range(max_size + 1):
        yield from partitions_of(n)


def hook_instances(max_size: int, max_k: int, max_l: int, *, min_k: int = 0, min_l: int = 0) -> Iterator[tuple[Partition, int, int]]:
    """All ``(lam, k, l)`` with ``lam`` in H(k, l), ``|lam| <= max_size``.

    Ordered by ``lam`` (size, then reverse lex), then ``k``, then ``l``.
    The degenerate pair ``k = l = 0`` is skipped.
    """
    for lam in partitions_up_to(max_size):
        for k in range(min_k, max_k + 1):
            for l in range(min_l, max_l + 1):
                if k + l and is_hook(lam, k, l):
                    yield lam, k, l
