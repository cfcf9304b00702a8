"""(k, l)-semistandard tableaux over the super-alphabet t1 < ... < tk < u1 < ... < ul.

A t-letter may repeat along a row but not down a column; a u-letter may
repeat down a column but not along a row.  Internally letters are coded as
integers ``0 .. k+l-1`` with codes below ``k`` being t-letters, which turns
both neighbour constraints into a single lower bound per cell.
"""

from __future__ import annotations

import bisect
import json
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ContractError, NoWitnessError, NotHookError, ShapeMismatchError
from .partitions import Partition, as_partition, col_prefix_sums, is_hook, row_prefix_sums, size

__all__ = [
    "SuperLetter",
    "SuperTableau",
    "Content",
    "is_valid",
    "content",
    "enumerate_tableaux",
    "content_counts",
    "satisfies_hook",
    "hook_word",
    "mixed_insert",
    "construct_witness",
]

log = logging.getLogger(__name__)


class SuperLetter(NamedTuple):
    kind: str  # "T" or "U"
    index: int

    @classmethod
    def parse(cls, text: str) -> "SuperLetter":
        kind, idx = text[:1].upper(), text[1:]
        if kind not in ("T", "U") or not idx.isdigit() or int(idx) < 1:
            raise ValueError(f"not a super-letter: {text!r}")
        return cls(kind, int(idx))

    def __str__(self) -> str:
        return f"{self.kind.lower()}{self.index}"

    def code(self, k: int) -> int:
        return self.index - 1 if self.kind == "T" else k + self.index - 1

    @classmethod
    def from_code(cls, code: int, k: int) -> "SuperLetter":
        return cls("T", code + 1) if code < k else cls("U", code - k + 1)


def t(i: int) -> SuperLetter:
    return SuperLetter("T", i)


def u(j: int) -> SuperLetter:
    return SuperLetter("U", j)


@dataclass(frozen=True)
class SuperTableau:
    shape: Partition
    rows: tuple[tuple[SuperLetter, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[SuperLetter | str]]) -> "SuperTableau":
        rows = tuple(
            tuple(SuperLetter.parse(z) if isinstance(z, str) else SuperLetter(*z) for z in row)
            for row in rows
        )
        # Partition() rejects non-decreasing row lengths; keep those as a ragged shape
        # so is_valid can report the mismatch instead of failing here.
        lengths = [len(r) for r in rows]
        try:
            shape = Partition(lengths)
        except ValueError:
            shape = Partition(sorted(lengths, reverse=True))
        return cls(shape, rows)

    @classmethod
    def from_codes(cls, code_rows: Sequence[Sequence[int]], k: int) -> "SuperTableau":
        rows = tuple(tuple(SuperLetter.from_code(c, k) for c in row) for row in code_rows)
        return cls(Partition(len(r) for r in rows), rows)

    def codes(self, k: int) -> list[list[int]]:
        return [[z.code(k) for z in row] for row in self.rows]

    def to_json(self) -> str:
        return json.dumps([[str(z) for z in row] for row in self.rows])

    @classmethod
    def from_json(cls, text: str) -> "SuperTableau":
        return cls.from_rows(json.loads(text))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(z) for z in row) for row in self.rows)


@dataclass(frozen=True)
class Content:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.a + self.b):
            raise ValueError("content entries must be nonnegative")

    @classmethod
    def from_vector(cls, vec: Sequence[int], k: int) -> "Content":
        vec = tuple(int(x) for x in vec)
        return cls(vec[:k], vec[k:])

    @property
    def vector(self) -> tuple[int, ...]:
        return self.a + self.b

    @property
    def total(self) -> int:
        return sum(self.a) + sum(self.b)


def _check_structure(tab: SuperTableau) -> None:
    if len(tab.rows) != len(tab.shape) or any(len(r) != p for r, p in zip(tab.rows, tab.shape)):
        raise ShapeMismatchError(
            f"row lengths {[len(r) for r in tab.rows]} do not match shape {list(tab.shape)}"
        )


def _codes_valid(rows: Sequence[Sequence[int]], k: int) -> bool:
    for i, row in enumerate(rows):
        for j, z in enumerate(row):
            if j and z < row[j - 1] + (row[j - 1] >= k):
                return False
            if i and z < rows[i - 1][j] + (rows[i - 1][j] < k):
                return False
    return True


def is_valid(tab: SuperTableau, k: int, l: int) -> bool:
    """Check the four semistandard conditions and the letter bounds.

    Raises :class:`ShapeMismatchError` when the rows do not fit the shape;
    that is a structural defect, distinct from an invalid filling.
    """
    _check_structure(tab)
    for row in tab.rows:
        for z in row:
            if z.kind not in ("T", "U") or z.index < 1 or z.index > (k if z.kind == "T" else l):
                return False
    return _codes_valid(tab.codes(k), k)


def content(tab: SuperTableau, k: int, l: int) -> Content:
    a, b = [0] * k, [0] * l
    for row in tab.rows:
        for z in row:
            if z.kind == "T":
                a[z.index - 1] += 1
            else:
                b[z.index - 1] += 1
    return Content(tuple(a), tuple(b))


def _fillings(lam: Partition, k: int, l: int, target: Sequence[int] | None = None) -> Iterator[tuple[list[list[int]], list[int]]]:
    """Backtracking over row-major cells.

    Yields the shared ``(grid, counts)`` buffers; callers must copy what they keep.
    With ``target`` set, only fillings of that exact content are produced.
    """
    n = k + l
    cells = [(i, j) for i, p in enumerate(lam) for j in range(p)]
    grid = [[0] * p for p in lam]
    counts = [0] * n
    if not cells:
        yield grid, counts
        return
    if n == 0:
        return
    last = len(cells)

    def rec(c: int) -> Iterator[tuple[list[list[int]], list[int]]]:
        i, j = cells[c]
        lo = 0
        if j:
            y = grid[i][j - 1]
            lo = y + (y >= k)
        if i:
            y = grid[i - 1][j]
            lo = max(lo, y + (y < k))
        for z in range(lo, n):
            if target is not None and counts[z] >= target[z]:
                continue
            grid[i][j] = z
            counts[z] += 1
            if c + 1 == last:
                yield grid, counts
            else:
                yield from rec(c + 1)
            counts[z] -= 1

    yield from rec(0)


def enumerate_tableaux(lam: Sequence[int], k: int, l: int) -> Iterator[SuperTableau]:
    """Every (k, l)-semistandard tableau of shape ``lam``, each exactly once."""
    lam = as_partition(lam)
    for grid, _ in _fillings(lam, k, l):
        yield SuperTableau.from_codes(grid, k)


def content_counts(lam: Sequence[int], k: int, l: int) -> Counter:
    """Map content vector -> number of tableaux of shape ``lam`` with that content."""
    lam = as_partition(lam)
    out: Counter = Counter()
    for _, counts in _fillings(lam, k, l):
        out[tuple(counts)] += 1
    return out


def _as_vector(c: Content | Sequence[int], k: int, l: int) -> tuple[int, ...]:
    vec = c.vector if isinstance(c, Content) else tuple(int(x) for x in c)
    if len(vec) != k + l:
        raise ValueError(f"content has length {len(vec)}, expected {k + l}")
    return vec


def satisfies_hook(c: Content | Sequence[int], lam: Sequence[int], k: int, l: int) -> bool:
    """Row prefix bounds on the t-counts, column prefix bounds on the u-counts, and size."""
    lam = as_partition(lam)
    if not is_hook(lam, k, l):
        raise NotHookError(lam, k, l)
    vec = _as_vector(c, k, l)
    if any(x < 0 for x in vec):
        return False
    a, b = vec[:k], vec[k:]
    if sum(vec) != size(lam):
        return False
    acc = 0
    for x, bound in zip(a, row_prefix_sums(lam, k)):
        acc += x
        if acc > bound:
            return False
    acc = 0
    for x, bound in zip(b, col_prefix_sums(lam, l)):
        acc += x
        if acc > bound:
            return False
    return True


def hook_word(c: Content | Sequence[int], k: int, l: int) -> list[SuperLetter]:
    """The word t1^a1 ... tk^ak ul^bl ... u1^b1."""
    vec = _as_vector(c, k, l)
    word = [t(i + 1) for i in range(k) for _ in range(vec[i])]
    word += [u(j + 1) for j in reversed(range(l)) for _ in range(vec[k + j])]
    return word


def mixed_insert(word: Iterable[SuperLetter | str], k: int, l: int) -> SuperTableau:
    """Insertion tableau of ``word`` under super row bumping.

    A t-letter bumps the leftmost strictly larger entry, a u-letter the leftmost
    entry that is at least as large; the bumped letter moves to the next row.
    """
    rows: list[list[int]] = []
    for z in word:
        z = SuperLetter.parse(z) if isinstance(z, str) else z
        code = z.code(k)
        if not 0 <= code < k + l or (z.kind == "T") != (code < k):
            raise ValueError(f"letter {z} outside the ({k},{l}) alphabet")
        r = 0
        while True:
            if r == len(rows):
                rows.append([code])
                break
            row = rows[r]
            pos = bisect.bisect_right(row, code) if code < k else bisect.bisect_left(row, code)
            if pos == len(row):
                row.append(code)
                break
            row[pos], code = code, row[pos]
            r += 1
    return SuperTableau.from_codes(rows, k)


def construct_witness(c: Content | Sequence[int], lam: Sequence[int], k: int, l: int) -> SuperTableau:
    """A (k, l)-semistandard tableau of shape ``lam`` and content ``c``.

    The hook word is inserted first.  Its insertion tableau only has shape
    ``lam`` in special cases, so when it does not, a content-constrained
    search over fillings of ``lam`` takes over.  Raises
    :class:`ContractError` when ``c`` violates the hook inequalities and
    :class:`NoWitnessError` when they hold but no such tableau exists.
    """
    lam = as_partition(lam)
    vec = _as_vector(c, k, l)
    if not satisfies_hook(vec, lam, k, l):
        raise ContractError(f"content {list(vec)} violates the hook inequalities for {list(lam)}")
    tab = mixed_insert(hook_word(vec, k, l), k, l)
    if tab.shape == lam:
        return tab
    log.debug("insertion of the hook word gave shape %s, searching shape %s", list(tab.shape), list(lam))
    for grid, _ in _fillings(lam, k, l, target=vec):
        return SuperTableau.from_codes([row[:] for row in grid], k)
    raise NoWitnessError(
        f"no ({k},{l})-semistandard tableau of shape {list(lam)} has content {list(vec)}"
    )
