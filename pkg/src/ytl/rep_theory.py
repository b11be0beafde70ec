"""Irreducible representations of YTL_{d,n}(u) and the dimension of the algebra."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .combinatorics import (
    DPartition,
    enumerate_d_partitions,
    first_row_total,
    standard_d_tableaux_count,
)


def _require_n(n: int):
    if n < 3:
        raise ValueError("YTL defined for n >= 3")


@dataclass(frozen=True)
class RepClassification:
    """The set R(d,n) of d-partitions labelling irreducibles of YTL_{d,n}(u).

    ``tags[i]`` is 1 when ``members[i]`` has a single nonempty component and 2
    when it has two single-column components.
    """

    d: int
    n: int
    members: tuple[DPartition, ...]
    tags: tuple[int, ...] = field(repr=False)

    def __len__(self):
        return len(self.members)

    def __contains__(self, lam):
        return tuple(tuple(c) for c in lam) in self.members

    def by_tag(self, tag: int) -> list[DPartition]:
        return [m for m, t in zip(self.members, self.tags) if t == tag]


def in_r_set(lam: DPartition) -> bool:
    """At most two columns in total across the Young d-diagram."""
    return first_row_total(lam) <= 2


def _two_column_partitions(n: int) -> list[tuple[int, ...]]:
    # (2^a, 1^b) with 2a + b = n, in decreasing lexicographic order
    return [(2,) * a + (1,) * (n - 2 * a) for a in range(n // 2, -1, -1)]


def r_set(d: int, n: int) -> RepClassification:
    """Build R(d,n) directly from its two families, ordered as in
    :func:`ytl.combinatorics.enumerate_d_partitions`."""
    _require_n(n)
    if d < 1:
        raise ValueError("d must be at least 1")
    tagged: list[tuple[DPartition, int]] = []
    empty = [()] * d
    for i in range(d):
        for lam in _two_column_partitions(n):
            comps = list(empty)
            comps[i] = lam
            tagged.append((tuple(comps), 1))
    for i1, i2 in combinations(range(d), 2):
        for k in range(1, n):
            comps = list(empty)
            comps[i1] = (1,) * k
            comps[i2] = (1,) * (n - k)
            tagged.append((tuple(comps), 2))
    order = {lam: idx for idx, lam in enumerate(_canonical_keys(tagged))}
    tagged.sort(key=lambda t: order[t[0]])
    return RepClassification(d, n, tuple(t[0] for t in tagged), tuple(t[1] for t in tagged))


def _canonical_keys(tagged):
    # decreasing size composition first, then each component decreasing lex
    def key(lam):
        sizes = tuple(sum(c) for c in lam)
        return tuple(-s for s in sizes), tuple(tuple(-x for x in c) + (0,) for c in lam)

    return sorted((t[0] for t in tagged), key=key)


def r_set_by_filter(d: int, n: int) -> list[DPartition]:
    """R(d,n) obtained by filtering all d-partitions of n."""
    _require_n(n)
    return [lam for lam in enumerate_d_partitions(d, n) if in_r_set(lam)]


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


def ytl_dimension_formula(d: int, n: int) -> int:
    """d (nd - n + d + 1) / 2 * C_n - d (d - 1)."""
    _require_n(n)
    num = d * (n * d - n + d + 1) * catalan(n)
    return num // 2 - d * (d - 1)


def ytl_dimension_sum_squares(d: int, n: int) -> int:
    """Sum of (dim E^lam)^2 over lam in R(d,n)."""
    return sum(standard_d_tableaux_count(lam) ** 2 for lam in r_set(d, n).members)
