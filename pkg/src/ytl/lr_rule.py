"""Littlewood-Richardson tableaux and coefficients, restriction from G(d,1,n)
to the symmetric group, and Pieri's rule for d-partitions."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .combinatorics import (
    DPartition,
    Partition,
    SkewShape,
    SkewTableau,
    _fill_rows,
    enumerate_partitions,
    is_skew,
    make_partition,
    part,
    size,
)


@dataclass(frozen=True)
class LRQuery:
    lam: Partition
    mu: Partition
    nu: Partition

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            object.__setattr__(self, name, make_partition(getattr(self, name)))


def row_counts(T: SkewTableau) -> dict[tuple[int, int], int]:
    """Map ``(k, l) -> T^l_k``: the number of entries ``l`` in row ``k`` (1-indexed)."""
    table: dict[tuple[int, int], int] = {}
    for k, row in enumerate(T.rows, start=1):
        for l, c in Counter(row).items():
            table[(k, l)] = c
    return table


def companion_rows(T: SkewTableau) -> list[tuple[int, ...]]:
    """Rows of the candidate straight-shape companion of ``T``.

    Row ``l`` holds ``T^l_k`` copies of ``k`` for every ``k``, sorted.
    """
    counts = row_counts(T)
    top = max((l for _, l in counts), default=0)
    rows: list[list[int]] = [[] for _ in range(top)]
    for (k, l), c in sorted(counts.items()):
        rows[l - 1].extend([k] * c)
    return [tuple(sorted(r)) for r in rows]


def is_littlewood_richardson(T: SkewTableau) -> bool:
    """True iff ``T`` has a semistandard companion tableau of straight shape."""
    rows = companion_rows(T)
    lengths = [len(r) for r in rows]
    if any(a < b for a, b in zip(lengths, lengths[1:])) or (lengths and lengths[-1] == 0):
        return False
    for upper, lower in zip(rows, rows[1:]):
        if any(a >= b for a, b in zip(upper, lower)):
            return False
    return True


def _lattice_prefix_ok(acc: list, new_row: tuple[int, ...]) -> bool:
    # Companion column-strictness, checked after each completed row of T:
    # #{entries <= k in companion row l+1} <= #{entries <= k-1 in companion row l}.
    # Entry k in companion row l is an l in row k of T, so with k = current row
    # this compares cumulative counts of l+1 (through row k) and of l (through k-1).
    rows = acc + [new_row]
    k = len(rows)
    through_k: Counter = Counter()
    for r in rows:
        through_k.update(r)
    through_prev = through_k.copy()
    through_prev.subtract(new_row)
    for l in range(1, max(new_row, default=0)):
        if through_k[l + 1] > through_prev[l]:
            return False
    # entries of row k must not exceed k
    return all(x <= k for x in new_row)


def enumerate_lr_tableaux(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> Iterator[SkewTableau]:
    """LR tableaux of shape nu/lam and weight mu, by pruned backtracking."""
    lam, mu, nu = make_partition(lam), make_partition(mu), make_partition(nu)
    if not is_skew(nu, lam) or size(nu) - size(lam) != size(mu):
        return
    shape = SkewShape(nu, lam)
    for rows in _fill_rows(shape, list(mu), (), 0, [], prune=_lattice_prefix_ok):
        yield SkewTableau(shape, rows)


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    return sum(1 for _ in enumerate_lr_tableaux(lam, mu, nu))


def lr_coefficient(lam, mu=None, nu=None) -> int:
    """c^nu_{lam,mu}.  Accepts an :class:`LRQuery` or three partitions.

    Degenerate inputs (nu/lam not a skew shape, sizes not adding up) give 0.
    """
    if isinstance(lam, LRQuery):
        q = lam
    else:
        q = LRQuery(tuple(lam), tuple(mu), tuple(nu))
    return _lr(q.lam, q.mu, q.nu)


def lr_product(lam: Sequence[int], mu: Sequence[int]) -> dict[Partition, int]:
    """Nonzero c^nu_{lam,mu} over all nu of size |lam|+|mu|."""
    lam, mu = make_partition(lam), make_partition(mu)
    return _lr_product(lam, mu)


@lru_cache(maxsize=None)
def _lr_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    out = {}
    # nu_1 <= lam_1 + mu_1 whenever the coefficient is nonzero
    for nu in enumerate_partitions(size(lam) + size(mu)):
        if not is_skew(nu, lam):
            continue
        c = _lr(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def restriction_multiplicities(lam: DPartition) -> dict[Partition, int]:
    """Multiplicity of E^nu in the restriction of E^lam from G(d,1,n) to S_n.

    Chains LR products left to right: lam^(0) * lam^(1) * ... * lam^(d-1).
    """
    lam = tuple(make_partition(c) for c in lam)
    current: dict[Partition, int] = {lam[0]: 1}
    for comp in lam[1:]:
        nxt: dict[Partition, int] = defaultdict(int)
        for shape, mult in current.items():
            for nu, c in _lr_product(shape, comp).items():
                nxt[nu] += mult * c
        current = dict(nxt)
    return current


def horizontal_strips(mu: Partition, l: int) -> Iterator[Partition]:
    """Partitions obtained from ``mu`` by adding ``l`` boxes, no two in a column."""
    rows = len(mu) + 1

    def rec(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                yield make_partition(acc)
            return
        cap = left if i == 0 else min(left, mu[i - 1] - part(mu, i))
        for add in range(cap, -1, -1):
            acc.append(part(mu, i) + add)
            yield from rec(i + 1, left - add, acc)
            acc.pop()

    yield from rec(0, l, [])


def pieri_summands(mu: DPartition, l: int) -> list[DPartition]:
    """d-partitions obtained from ``mu`` by adding ``l`` boxes in total across
    the components, with no two added boxes in the same column."""
    if l < 1:
        raise ValueError("l must be positive")
    mu = tuple(make_partition(c) for c in mu)
    out: list[DPartition] = []

    def rec(i: int, left: int, acc: list[Partition]):
        if i == len(mu):
            if left == 0:
                out.append(tuple(acc))
            return
        for k in range(left, -1, -1):
            for strip in horizontal_strips(mu[i], k):
                acc.append(strip)
                rec(i + 1, left - k, acc)
                acc.pop()

    rec(0, l, [])
    return out
