"""Partitions, multipartitions, skew shapes and tableaux.

Partitions are plain tuples of positive integers in weakly decreasing order,
stored without trailing zeros.  A d-partition is a tuple of d partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]
DPartition = tuple[Partition, ...]


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical partition tuple."""
    out = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {parts!r}")
    if any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts!r}")
    return out


def part(lam: Partition, i: int) -> int:
    """0-indexed part of ``lam``, zero beyond its length."""
    return lam[i] if i < len(lam) else 0


def size(lam: Partition) -> int:
    return sum(lam)


def d_size(lam: DPartition) -> int:
    return sum(sum(c) for c in lam)


def first_row_total(lam: DPartition) -> int:
    """Total number of columns of a Young d-diagram, i.e. the sum of first parts."""
    return sum(part(c, 0) for c in lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions(n, n))


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``k`` parts, lexicographically decreasing."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def enumerate_d_partitions(d: int, n: int) -> list[DPartition]:
    """All d-tuples of partitions with total size ``n``.

    Ordered by the composition of sizes (decreasing lexicographic), then by
    each component in decreasing lexicographic order.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if n < 0:
        raise ValueError("n must be non-negative")
    out: list[DPartition] = []
    for sizes in compositions(n, d):
        out.extend(_product_of_partitions(sizes))
    return out


def _product_of_partitions(sizes: Sequence[int]) -> Iterator[DPartition]:
    if not sizes:
        yield ()
        return
    for head in _partitions(sizes[0], sizes[0]):
        for tail in _product_of_partitions(sizes[1:]):
            yield (head,) + tail


# --- skew shapes and tableaux ------------------------------------------------


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", make_partition(self.outer))
        object.__setattr__(self, "inner", make_partition(self.inner))
        if not is_skew(self.outer, self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return size(self.outer) - size(self.inner)

    def row_range(self, r: int) -> range:
        """0-indexed columns occupied by the shape in 0-indexed row ``r``."""
        return range(part(self.inner, r), part(self.outer, r))

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r in range(len(self.outer)) for c in self.row_range(r)]


def is_skew(outer: Partition, inner: Partition) -> bool:
    """True when Y(inner) is contained in Y(outer)."""
    return len(inner) <= len(outer) and all(a <= b for a, b in zip(inner, outer))


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew shape.

    ``rows[r]`` lists the entries of row ``r`` (0-indexed) from left to right;
    rows lying entirely inside the inner shape are empty tuples.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def entry(self, r: int, c: int) -> int | None:
        lo = part(self.shape.inner, r)
        if r >= len(self.rows) or not lo <= c < lo + len(self.rows[r]):
            return None
        return self.rows[r][c - lo]

    def weight(self) -> tuple[int, ...]:
        """Vector whose i-th entry (0-indexed) counts the entries equal to i+1."""
        top = max((max(row) for row in self.rows if row), default=0)
        counts = [0] * top
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def is_semistandard(self) -> bool:
        for r, row in enumerate(self.rows):
            if len(row) != len(self.shape.row_range(r)):
                return False
            if any(x < 1 for x in row):
                return False
            if any(a > b for a, b in zip(row, row[1:])):
                return False
            for c in self.shape.row_range(r):
                above = self.entry(r - 1, c) if r else None
                if above is not None and above >= self.entry(r, c):
                    return False
        return len(self.rows) == len(self.shape.outer)


def tableau_from_rows(outer: Sequence[int], inner: Sequence[int], rows) -> SkewTableau:
    shape = SkewShape(tuple(outer), tuple(inner))
    return SkewTableau(shape, tuple(tuple(r) for r in rows))


def _fill_rows(shape: SkewShape, remaining: list[int], prev: tuple[int, ...],
               r: int, acc: list, prune=None) -> Iterator[tuple[tuple[int, ...], ...]]:
    if r == len(shape.outer):
        if not any(remaining):
            yield tuple(acc)
        return
    cols = shape.row_range(r)
    prev_lo = part(shape.inner, r - 1) if r else 0

    def above(c):
        if r == 0:
            return 0
        j = c - prev_lo
        return prev[j] if 0 <= j < len(prev) else 0

    row: list[int] = []

    def fill(pos: int, floor: int):
        if pos == len(cols):
            t = tuple(row)
            if prune is not None and not prune(acc, t):
                return
            acc.append(t)
            yield from _fill_rows(shape, remaining, t, r + 1, acc, prune)
            acc.pop()
            return
        c = cols[pos]
        lo = max(floor, above(c) + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            row.append(v)
            yield from fill(pos + 1, v)
            row.pop()
            remaining[v - 1] += 1

    yield from fill(0, 1)


def enumerate_skew_semistandard(shape: SkewShape, weight: Sequence[int]) -> list[SkewTableau]:
    """All semistandard fillings of ``shape`` whose entry counts are ``weight``."""
    weight = tuple(weight)
    if shape.size != sum(weight):
        raise ValueError(f"shape size {shape.size} differs from weight size {sum(weight)}")
    return [SkewTableau(shape, rows)
            for rows in _fill_rows(shape, list(weight), (), 0, [])]


# --- standard tableaux -------------------------------------------------------


@lru_cache(maxsize=None)
def hook_length_count(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook-length formula."""
    n = sum(lam)
    if n == 0:
        return 1
    conj = conjugate(lam)
    hooks = prod(lam[i] - j + conj[j] - i - 1
                 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(n) // hooks


def multinomial(counts: Sequence[int]) -> int:
    return factorial(sum(counts)) // prod(factorial(k) for k in counts)


def standard_d_tableaux_count(lam: DPartition) -> int:
    """Number of standard d-tableaux of shape ``lam``, i.e. dim E^lam."""
    return multinomial([size(c) for c in lam]) * prod(hook_length_count(c) for c in lam)


def standard_tableaux_brute_force(lam: DPartition) -> int:
    """Count standard fillings by peeling off the box holding the largest entry.

    Independent of the hook-length formula; intended for small shapes.
    """

    @lru_cache(maxsize=None)
    def count(shape: DPartition) -> int:
        if all(not c for c in shape):
            return 1
        total = 0
        for i, comp in enumerate(shape):
            for r in range(len(comp)):
                if part(comp, r + 1) < comp[r]:
                    smaller = list(comp)
                    smaller[r] -= 1
                    new = shape[:i] + (make_partition(smaller),) + shape[i + 1:]
                    total += count(new)
        return total

    return count(tuple(lam))
