"""Partitions, Young diagrams, tableaux and the Littlewood-Richardson rule."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition([2, 1, 0])``
    equals ``Partition([2, 1])``. The empty partition is ``Partition()``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part in partition {parts}")
            if p == 0:
                raise ValueError(f"zero part before nonzero part in {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def bitlength(self) -> int:
        return sum(p.bit_length() for p in self)

    def part(self, i: int) -> int:
        """Part ``i`` (0-based), zero beyond the length."""
        return self[i] if i < len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"partition {list(self)} longer than {n}")
        return tuple(self) + (0,) * (n - len(self))

    def scaled(self, k: int) -> "Partition":
        return Partition(k * p for p in self)

    def to_json(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def partitions_of(n: int, max_length: Optional[int] = None,
                  max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(remaining, cap, room):
        if remaining == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, room - 1):
                yield (first,) + rest

    room = n if max_length is None else max_length
    for parts in rec(n, max_part, room):
        yield Partition(parts)


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > c) for c in range(lam[0]))


def contains(gamma, alpha) -> bool:
    """True iff the diagram of ``alpha`` fits inside the diagram of ``gamma``."""
    gamma, alpha = as_partition(gamma), as_partition(alpha)
    if len(alpha) > len(gamma):
        return False
    return all(a <= g for a, g in zip(alpha, gamma))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(
                f"inner {list(self.inner)} does not fit in outer {list(self.outer)}")

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    def row_range(self, r: int) -> range:
        """Column indices (1-based) of the cells in row ``r`` (0-based)."""
        return range(self.inner.part(r) + 1, self.outer[r] + 1)

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(self.outer[r] - self.inner.part(r) for r in range(self.num_rows))

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r in range(self.num_rows) for c in self.row_range(r)]

    def size(self) -> int:
        return self.outer.size() - self.inner.size()


@dataclass(frozen=True)
class Numbering:
    """A filling of a skew shape.

    ``rows[r]`` lists the entries of the skew cells of row ``r`` from left to
    right; inner cells are not stored.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = self.shape
        if not isinstance(shape, SkewShape):
            shape = SkewShape(as_partition(shape))
            object.__setattr__(self, "shape", shape)
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if shape.row_lengths() != tuple(len(row) for row in rows):
            raise ValueError(f"entries {rows} not congruent to shape {shape}")
        if any(v < 1 for row in rows for v in row):
            raise ValueError("numbering entries must be positive")

    @classmethod
    def straight(cls, rows: Sequence[Sequence[int]]) -> "Numbering":
        return cls(SkewShape(Partition(len(r) for r in rows)), tuple(map(tuple, rows)))

    def entry(self, r: int, c: int) -> int:
        """Entry at row ``r`` (0-based) and column ``c`` (1-based)."""
        return self.rows[r][c - self.shape.inner.part(r) - 1]

    def columns(self) -> list[list[int]]:
        """Entries of each column, top to bottom (skew cells only)."""
        width = self.shape.outer[0] if self.shape.outer else 0
        cols: list[list[int]] = [[] for _ in range(width)]
        for r in range(self.shape.num_rows):
            for c in self.shape.row_range(r):
                cols[c - 1].append(self.entry(r, c))
        return cols

    def content(self) -> Counter:
        return Counter(v for row in self.rows for v in row)

    def to_json(self) -> list[list[Optional[int]]]:
        out = []
        for r, row in enumerate(self.rows):
            out.append([None] * self.shape.inner.part(r) + list(row))
        return out

    @classmethod
    def from_json(cls, data: Sequence[Sequence[Optional[int]]]) -> "Numbering":
        outer, inner, rows = [], [], []
        for row in data:
            skip = 0
            while skip < len(row) and row[skip] is None:
                skip += 1
            if any(v is None for v in row[skip:]):
                raise ValueError("null entries must precede filled cells")
            outer.append(len(row))
            inner.append(skip)
            rows.append(tuple(row[skip:]))
        return cls(SkewShape(Partition(outer), Partition(inner)), tuple(rows))


def is_semistandard(T: Numbering) -> bool:
    shape = T.shape
    for r, row in enumerate(T.rows):
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if r == 0:
            continue
        for c in shape.row_range(r):
            if c in shape.row_range(r - 1) and T.entry(r - 1, c) >= T.entry(r, c):
                return False
    return True


def reading_word(T: Numbering) -> tuple[int, ...]:
    """Rows top to bottom, each read right to left."""
    return tuple(v for row in T.rows for v in reversed(row))


def is_lattice_word(word: Sequence[int]) -> bool:
    counts: Counter = Counter()
    for v in word:
        counts[v] += 1
        if v > 1 and counts[v] > counts[v - 1]:
            return False
    return True


def is_lr_tableau(T: Numbering, content) -> bool:
    content = as_partition(content)
    if not is_semistandard(T):
        return False
    expected = Counter({i + 1: m for i, m in enumerate(content)})
    if T.content() != expected:
        return False
    return is_lattice_word(reading_word(T))


def _fill_in_reading_order(shape: SkewShape, max_entry: int, accept=None):
    """Yield semistandard fillings, cell by cell in reading order.

    Cells are visited row by row, right to left, and candidate values tried
    in increasing order, so the output is lexicographic in the reading word.
    ``accept(value, state)`` may veto a value; ``state`` is the running
    content Counter.
    """
    cells = [(r, c) for r in range(shape.num_rows) for c in reversed(shape.row_range(r))]
    grid: dict[tuple[int, int], int] = {}
    counts: Counter = Counter()

    def rec(idx):
        if idx == len(cells):
            rows = tuple(tuple(grid[(r, c)] for c in shape.row_range(r))
                         for r in range(shape.num_rows))
            yield Numbering(shape, rows)
            return
        r, c = cells[idx]
        hi = grid.get((r, c + 1), max_entry)
        above = grid.get((r - 1, c))
        lo = above + 1 if above is not None else 1
        for v in range(lo, hi + 1):
            if accept is not None and not accept(v, counts):
                continue
            grid[(r, c)] = v
            counts[v] += 1
            yield from rec(idx + 1)
            counts[v] -= 1
            del grid[(r, c)]

    yield from rec(0)


def enumerate_ssyt(shape, max_entry: int) -> list[Numbering]:
    """All semistandard fillings of ``shape`` with entries in ``1..max_entry``.

    Ordered lexicographically by reading word.
    """
    if not isinstance(shape, SkewShape):
        shape = SkewShape(as_partition(shape))
    return list(_fill_in_reading_order(shape, max_entry))


@lru_cache(maxsize=None)
def count_ssyt(lam: Partition, max_entry: int) -> int:
    """Number of SSYT of straight shape ``lam`` over ``[max_entry]`` (hook-content formula)."""
    lam = as_partition(lam)
    if len(lam) > max_entry:
        return 0
    conj = conjugate(lam)
    num, den = 1, 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= max_entry + j - i
            den *= row - j + conj[j] - i - 1
    return num // den


def enumerate_standard(lam) -> list[Numbering]:
    """Standard tableaux of shape ``lam``, lexicographic by reading word."""
    lam = as_partition(lam)
    n = lam.size()
    shape = SkewShape(lam)
    out = []
    for T in _fill_in_reading_order(shape, n, accept=lambda v, counts: counts[v] == 0):
        if all(a < b for row in T.rows for a, b in zip(row, row[1:])):
            out.append(T)
    return out


def lr_tableaux(alpha, beta, gamma) -> Iterator[Numbering]:
    """LR tableaux of shape ``gamma / alpha`` with content ``beta``."""
    alpha, beta, gamma = map(as_partition, (alpha, beta, gamma))
    if gamma.size() != alpha.size() + beta.size() or not contains(gamma, alpha):
        return iter(())
    shape = SkewShape(gamma, alpha)

    # Cells are filled in reading order, so ballot pruning applies to each prefix.
    def accept(v, counts):
        if counts[v] >= beta.part(v - 1):
            return False
        return v == 1 or counts[v] < counts[v - 1]

    return _fill_in_reading_order(shape, len(beta), accept=accept)


@lru_cache(maxsize=None)
def _lr_cached(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    return sum(1 for _ in lr_tableaux(alpha, beta, gamma))


def lr_coefficient(alpha, beta, gamma) -> int:
    """Littlewood-Richardson coefficient by counting LR tableaux."""
    return _lr_cached(as_partition(alpha), as_partition(beta), as_partition(gamma))


def hook_length_dimension(lam) -> int:
    """Number of standard tableaux of shape ``lam``."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    fact = 1
    for k in range(2, lam.size() + 1):
        fact *= k
    return fact // hooks


def parse_partition(text: str) -> Partition:
    """Parse ``[4,2,1]``, ``4,2,1`` or ``[]``."""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(tok) for tok in text.split(","))
