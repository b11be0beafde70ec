"""Acceptance suite: one group of tests per criterion, each at its stated
scope and time budget.  A summary line per criterion is printed at the end
of the run (see conftest.py)."""

import time

import pytest

from ytl import lr_rule
from ytl.algebra import all_permutations, pattern_to_permutation, permutation_to_pattern
from ytl.basis import (
    enumerate_basis,
    enumerate_Hn,
    enumerate_Tn,
    monomial_set,
    weight,
    z_count_recursive,
    z_row_direct,
)
from ytl.combinatorics import enumerate_d_partitions, enumerate_partitions, first_row_total
from ytl.lr_rule import horizontal_strips, lr_coefficient, lr_product, restriction_multiplicities
from ytl.rep_theory import catalan, r_set, ytl_dimension_formula, ytl_dimension_sum_squares
from ytl.schur import schur_product_coefficients
from ytl.verify import QuotientChecker, defining_relations, draw_u0

criterion = pytest.mark.criterion


def first(nu):
    return nu[0] if nu else 0


def pairs_with_total_at_most(total):
    for a in range(total + 1):
        for b in range(total + 1 - a):
            for lam in enumerate_partitions(a):
                for mu in enumerate_partitions(b):
                    yield lam, mu


# --- T_n is Catalan ----------------------------------------------------------


@criterion("Catalan basis count |T_n| = C_n, n <= 12, < 10 s")
def test_catalan_basis_count():
    start = time.perf_counter()
    for n in range(1, 13):
        assert len(enumerate_Tn(n)) == catalan(n), n
    assert time.perf_counter() - start < 10


# --- Z_n(m) --------------------------------------------------------------------


@criterion("Z_n(m) counting identities, n <= 12, direct and recursive, < 30 s")
def test_z_counting_identities():
    start = time.perf_counter()
    z_count_recursive.cache_clear()
    for n in range(1, 13):
        direct = z_row_direct(n)
        recursive = [z_count_recursive(n, m) for m in range(n)]
        assert direct == recursive, n
        assert direct[n - 1] == catalan(n - 1)
        assert sum(direct) == catalan(n)
        assert sum(2 ** (n - m) * z for m, z in enumerate(direct)) == (n + 1) * catalan(n)
    assert time.perf_counter() - start < 30


# --- dimension ----------------------------------------------------------------


@criterion("Dimension theorem: formula = sum of squares, d <= 5, 3 <= n <= 10, < 1 min")
def test_dimension_theorem():
    start = time.perf_counter()
    for d in range(1, 6):
        for n in range(3, 11):
            assert ytl_dimension_formula(d, n) == ytl_dimension_sum_squares(d, n), (d, n)
    assert time.perf_counter() - start < 60


@criterion("Basis cardinality |S_{d,n}| = formula, d <= 4, 3 <= n <= 9, < 1 min")
def test_basis_cardinality():
    start = time.perf_counter()
    for d in range(1, 5):
        for n in range(3, 10):
            assert sum(1 for _ in enumerate_basis(d, n)) == ytl_dimension_formula(d, n), (d, n)
    assert time.perf_counter() - start < 60


@criterion("Intro cardinality formula for |E_{d,n}(g)|, d <= 4, n <= 8")
def test_intro_cardinality():
    for d in range(1, 5):
        for n in range(1, 9):
            for g in enumerate_Tn(n):
                m = weight(g)
                h = 2 ** (n - m - 1)
                expected = h * d * d - (h - 1) * d - (d * d - d if m == 0 else 0)
                assert len(monomial_set(d, n, g)) == expected, (d, n, g)


# --- LR ------------------------------------------------------------------------


@criterion("LR oracle equivalence, |nu| <= 8, < 5 min")
def test_lr_oracle_equivalence():
    start = time.perf_counter()
    lr_rule._lr_product.cache_clear()
    for lam, mu in pairs_with_total_at_most(8):
        oracle = schur_product_coefficients(lam, mu)
        assert lr_product(lam, mu) == oracle, (lam, mu)
    assert time.perf_counter() - start < 300


@criterion("LR first-row bound, Pieri characterisation, d-partition first-row bound")
def test_first_row_vanishing_and_attainment():
    for lam, mu in pairs_with_total_at_most(8):
        bound = first(lam) + first(mu)
        size = sum(lam) + sum(mu)
        attained = False
        for nu in enumerate_partitions(size):
            c = lr_coefficient(lam, mu, nu)
            if first(nu) > bound:
                assert c == 0, (lam, mu, nu)
            elif first(nu) == bound and c > 0:
                attained = True
        assert attained, (lam, mu)


@criterion("LR first-row bound, Pieri characterisation, d-partition first-row bound")
def test_pieri_characterisation():
    for k in range(0, 8):
        for lam in enumerate_partitions(k):
            for l in range(1, 9 - k):
                positive = {nu for nu in enumerate_partitions(k + l)
                            if lr_coefficient(lam, (l,), nu) > 0}
                assert positive == set(horizontal_strips(lam, l)), (lam, l)


@criterion("LR first-row bound, Pieri characterisation, d-partition first-row bound")
def test_restriction_first_row_bound():
    for d in range(1, 4):
        for n in range(0, 7):
            for lam in enumerate_d_partitions(d, n):
                alpha = first_row_total(lam)
                mult = restriction_multiplicities(lam)
                assert all(first(nu) <= alpha for nu in mult), lam
                assert any(first(nu) == alpha for nu in mult), lam


@criterion("Classification cross-check: R(d,n) vs restriction, d <= 3, n <= 6")
def test_classification_cross_check():
    for d in range(1, 4):
        for n in range(3, 7):
            rs = r_set(d, n)
            for lam in enumerate_d_partitions(d, n):
                narrow = all(first(nu) <= 2 for nu in restriction_multiplicities(lam))
                assert (lam in rs) == narrow, lam


# --- the algebra ---------------------------------------------------------------

ALGEBRA_CASES = [(1, 3), (1, 4), (2, 3), (3, 3), (2, 4)]


def two_u0(seed):
    import random
    rng = random.Random(seed)
    out = []
    while len(out) < 2:
        u = draw_u0(rng)
        if u not in out:
            out.append(u)
    return out


@criterion("Algebra brute force: relations, quotient rank, independence, ledger")
@pytest.mark.parametrize("d,n", ALGEBRA_CASES)
def test_algebra_brute_force(d, n):
    rel = defining_relations(d, n)
    assert all(rel.values()), rel
    ranks = set()
    for u0 in two_u0(1000 * d + n):
        chk = QuotientChecker(d, n, u0)
        q = chk.quotient_report()
        assert q.passed, q
        ranks.add(q.ideal_rank)
        ind = chk.independence_report()
        assert ind.passed, ind.dependent[:5]
        led = chk.ledger_report()
        assert led.passed, led.failures
    assert len(ranks) == 1


@criterion("Bijection H_n <-> S_n with exact round trips, n <= 7")
def test_bijection():
    for n in range(1, 8):
        pats = enumerate_Hn(n)
        perms = [pattern_to_permutation(p) for p in pats]
        assert sorted(perms) == sorted(all_permutations(n))
        assert all(permutation_to_pattern(w) == p for p, w in zip(pats, perms))
        assert all(pattern_to_permutation(permutation_to_pattern(w)) == w
                   for w in all_permutations(n))
