"""Cycle patterns g_{i,k}, the Temperley-Lieb index set T_n, weights, the
counts Z_n(m), and the framing exponent sets E_{d,n}(g) that cut the
spanning set {t^r g : g in T_n} down to a basis of YTL_{d,n}(u).

Variables x_1..x_n (and generator indices) are 1-indexed throughout, to
match the usual notation; exponent vectors are plain 0-indexed tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .rep_theory import catalan

Pairs = tuple[tuple[int, int], ...]
Exponents = tuple[int, ...]


@dataclass(frozen=True, order=True)
class CyclePattern:
    """The word (g_{i_1} ... g_{i_1-k_1}) ... (g_{i_p} ... g_{i_p-k_p}).

    ``pairs`` holds ``(i_j, k_j)``; the empty pattern is the identity word.
    """

    n: int
    pairs: Pairs = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(i), int(k)) for i, k in self.pairs))
        if not self.in_H():
            raise ValueError(f"{self.pairs} is not a valid cycle pattern for n={self.n}")

    def in_H(self) -> bool:
        ii = [i for i, _ in self.pairs]
        return (all(1 <= i <= self.n - 1 for i in ii)
                and all(a < b for a, b in zip(ii, ii[1:]))
                and all(0 <= k <= i - 1 for i, k in self.pairs))

    def in_T(self) -> bool:
        bottoms = [i - k for i, k in self.pairs]
        return self.in_H() and all(a < b for a, b in zip(bottoms, bottoms[1:]))

    def word(self) -> tuple[int, ...]:
        """Generator indices of g_{i,k}, read left to right."""
        return tuple(j for i, k in self.pairs for j in range(i, i - k - 1, -1))

    @property
    def degree(self) -> int:
        return sum(k + 1 for _, k in self.pairs)

    @property
    def p(self) -> int:
        return len(self.pairs)

    def __str__(self):
        if not self.pairs:
            return "1"
        return "".join(f"g{j}" for j in self.word())


def _h_pairs(n: int) -> Iterator[Pairs]:
    def rec(lo: int, acc: list):
        yield tuple(acc)
        for i in range(lo, n):
            for k in range(i):
                acc.append((i, k))
                yield from rec(i + 1, acc)
                acc.pop()

    yield from rec(1, [])


def _t_pairs(n: int) -> Iterator[Pairs]:
    def rec(lo: int, bottom: int, acc: list):
        yield tuple(acc)
        for i in range(lo, n):
            # bottoms strictly increase: i - k > bottom
            for k in range(i - bottom):
                acc.append((i, k))
                yield from rec(i + 1, i - k, acc)
                acc.pop()

    yield from rec(1, 0, [])


def enumerate_Hn(n: int) -> list[CyclePattern]:
    """All of H_n (n! patterns), indexing the standard Hecke algebra basis."""
    if n < 1:
        raise ValueError("n must be positive")
    return [CyclePattern(n, pr) for pr in _h_pairs(n)]


def enumerate_Tn(n: int) -> list[CyclePattern]:
    """All of T_n (C_n patterns), indexing Jones's Temperley-Lieb basis."""
    if n < 1:
        raise ValueError("n must be positive")
    return [CyclePattern(n, pr) for pr in _t_pairs(n)]


def _index_set(pairs: Pairs) -> frozenset[int]:
    return frozenset(j for i, k in pairs for j in range(i - k, i + 1))


def index_set(pattern: CyclePattern) -> frozenset[int]:
    """I(g): the generator indices occurring in the word."""
    return _index_set(pattern.pairs)


def weight(pattern: CyclePattern) -> int:
    return len(index_set(pattern))


def l_index(pattern: CyclePattern, j: int) -> int:
    """Smallest cycle number l (1-indexed) whose interval [i_l - k_l, i_l] holds j."""
    for l, (i, k) in enumerate(pattern.pairs, start=1):
        if i - k <= j <= i:
            return l
    raise ValueError(f"{j} does not occur in {pattern}")


def L_of(pattern: CyclePattern, l: int) -> int:
    """Smallest L >= l such that i_L + 1 is not in I(g)."""
    if not 1 <= l <= pattern.p:
        raise ValueError(f"l={l} out of range for a pattern with {pattern.p} cycles")
    idx = index_set(pattern)
    for L in range(l, pattern.p + 1):
        if pattern.pairs[L - 1][0] + 1 not in idx:
            return L
    raise AssertionError("i_p + 1 always lies outside I(g)")


# --- Z_n(m) -----------------------------------------------------------------


def z_row_direct(n: int) -> list[int]:
    """[Z_n(0), ..., Z_n(n-1)] by enumerating T_n."""
    row = [0] * n
    for pr in _t_pairs(n):
        row[len(_index_set(pr))] += 1
    return row


@lru_cache(maxsize=None)
def z_count_recursive(n: int, m: int) -> int:
    """Z_n(m) from the splitting recursion, with Z_n(n-1) = C_{n-1}."""
    if not 0 <= m <= n - 1:
        raise ValueError(f"m={m} out of range for n={n}")
    if m == n - 1:
        return catalan(n - 1)
    return sum(z_count_recursive(j, m - n + j + 1) * catalan(n - j - 1)
               for j in range(n - m - 1, n))


def z_count(n: int, m: int, method: str = "direct") -> int:
    """Number of patterns in T_n of weight m."""
    if not 0 <= m <= n - 1:
        raise ValueError(f"m={m} out of range for n={n}")
    if method == "direct":
        return z_row_direct(n)[m]
    if method == "recursive":
        return z_count_recursive(n, m)
    raise ValueError(f"unknown method {method!r}")


# --- exponent sets ----------------------------------------------------------


@dataclass(frozen=True)
class ExponentSet:
    pattern: CyclePattern
    d: int
    exponents: tuple[Exponents, ...]

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __contains__(self, r):
        return tuple(r) in set(self.exponents)


def _staircase(N: int, d: int, start: int) -> Iterator[Exponents]:
    """Exponents (over N ordered variables, 1-indexed) of
    y_i^a y_{i+1}^b prod_{j>=i+2} y_j^eps  for start <= i < N, 1 <= a < d,
    0 <= b < d, eps in {0,1}; followed by the pure powers y_N^b."""
    for i in range(start, N):
        for a in range(1, d):
            for b in range(d):
                for eps in product((0, 1), repeat=N - i - 1):
                    yield (0,) * (i - 1) + (a, b) + eps
    for b in range(d):
        yield (0,) * (N - 1) + (b,)


def identity_count(d: int, n: int) -> int:
    return (2 ** (n - 1) - 1) * d * d - (2 ** (n - 1) - 2) * d


def pattern_count(d: int, n: int, m: int) -> int:
    return 2 ** (n - m - 1) * d * d - (2 ** (n - m - 1) - 1) * d


def intro_count(d: int, n: int, m: int) -> int:
    """Closed form for |E_{d,n}(g)| in terms of the weight only."""
    delta = 1 if m == 0 else 0
    return pattern_count(d, n, m) - delta * (d * d - d)


def monomial_set_identity(d: int, n: int) -> ExponentSet:
    """E_{d,n}(1).  For d = 1 this is the single zero vector."""
    exps = tuple(sorted(set(_staircase(n, d, 1))))
    return ExponentSet(CyclePattern(n), d, exps)


def relabelled_variables(pattern: CyclePattern) -> list[int]:
    """Original indices of the variables x~_1, ..., x~_N used for a nonempty pattern.

    x~_1 = x_{i_1}, x~_2 = x_{i_{L(1)}+1}, then every x_s with s outside I(g)
    and s != i_{L(1)}+1, in increasing order of s.
    """
    if not pattern.pairs:
        raise ValueError("the identity pattern uses monomial_set_identity")
    idx = index_set(pattern)
    first = pattern.pairs[0][0]
    second = pattern.pairs[L_of(pattern, 1) - 1][0] + 1
    rest = [s for s in range(1, pattern.n + 1) if s not in idx and s != second]
    return [first, second] + rest


def monomial_set(d: int, n: int, pattern: CyclePattern) -> ExponentSet:
    """E_{d,n}(g) for a pattern g in T_n."""
    if pattern.n != n:
        raise ValueError("pattern rank does not match n")
    if not pattern.in_T():
        raise ValueError(f"{pattern} is not in T_{n}")
    if not pattern.pairs:
        return monomial_set_identity(d, n)
    variables = relabelled_variables(pattern)
    N = len(variables)
    local = list(_staircase(N, d, 2))
    local += [(a, b) + (0,) * (N - 2) for a in range(1, d) for b in range(d)]
    exps = set()
    for e in local:
        r = [0] * n
        for pos, var in zip(e, variables):
            r[var - 1] = pos
        exps.add(tuple(r))
    return ExponentSet(pattern, d, tuple(sorted(exps)))


def exponent_set(d: int, pattern: CyclePattern) -> ExponentSet:
    return monomial_set(d, pattern.n, pattern)


def enumerate_basis(d: int, n: int) -> Iterator[tuple[Exponents, CyclePattern]]:
    """Stream S_{d,n} as (framing exponents, braiding pattern), pattern-major."""
    if n < 3:
        raise ValueError("YTL defined for n >= 3")
    if d < 1:
        raise ValueError("d must be at least 1")
    for pattern in enumerate_Tn(n):
        for r in monomial_set(d, n, pattern):
            yield r, pattern


def basis_size(d: int, n: int) -> int:
    return sum(1 for _ in enumerate_basis(d, n))
