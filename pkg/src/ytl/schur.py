"""Schur polynomials as explicit monomial sums, used as an independent check on
Littlewood-Richardson coefficients via s_lam * s_mu = sum_nu c^nu_{lam,mu} s_nu.

Nothing here shares code with :mod:`ytl.lr_rule`.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

Monomial = tuple[int, ...]


@lru_cache(maxsize=None)
def schur_polynomial(lam: tuple[int, ...], nvars: int) -> dict[Monomial, int]:
    """s_lam(x_1..x_nvars) as {exponent vector: coefficient}, summing x^T over
    semistandard tableaux T with entries at most ``nvars``."""
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    filling: dict[tuple[int, int], int] = {}
    poly: dict[Monomial, int] = defaultdict(int)

    def rec(idx: int):
        if idx == len(cells):
            expo = [0] * nvars
            for v in filling.values():
                expo[v - 1] += 1
            poly[tuple(expo)] += 1
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, nvars + 1):
            filling[(r, c)] = v
            rec(idx + 1)
        filling.pop((r, c), None)

    rec(0)
    return dict(poly)


def _dominant_part(poly: dict[Monomial, int]) -> dict[Monomial, int]:
    return {m: c for m, c in poly.items()
            if c and all(a >= b for a, b in zip(m, m[1:]))}


def schur_product_coefficients(lam, mu) -> dict[tuple[int, ...], int]:
    """Expand s_lam * s_mu in the Schur basis by peeling off leading monomials.

    Works in |lam|+|mu| variables and only tracks monomials whose exponent
    vectors are weakly decreasing; a symmetric polynomial is determined by
    those.
    """
    lam, mu = tuple(lam), tuple(mu)
    n = sum(lam) + sum(mu)
    nvars = max(n, 1)
    a = schur_polynomial(lam, nvars)
    b = schur_polynomial(mu, nvars)
    prod_poly: dict[Monomial, int] = defaultdict(int)
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            if all(p >= q for p, q in zip(m, m[1:])):
                prod_poly[m] += ca * cb
    remaining = _dominant_part(prod_poly)
    result: dict[tuple[int, ...], int] = {}
    while remaining:
        lead = max(remaining)
        c = remaining[lead]
        nu = tuple(x for x in lead if x)
        result[nu] = c
        for m, k in _dominant_part(schur_polynomial(nu, nvars)).items():
            remaining[m] = remaining.get(m, 0) - c * k
            if remaining[m] == 0:
                del remaining[m]
    return result
