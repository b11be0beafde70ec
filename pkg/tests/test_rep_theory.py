from math import comb

import pytest

from ytl.combinatorics import enumerate_d_partitions
from ytl.lr_rule import restriction_multiplicities
from ytl.rep_theory import (
    catalan,
    in_r_set,
    r_set,
    r_set_by_filter,
    ytl_dimension_formula,
    ytl_dimension_sum_squares,
)


def test_r_set_d1_n3():
    rs = r_set(1, 3)
    assert set(rs.members) == {((2, 1),), ((1, 1, 1),)}
    assert ((3,),) not in rs


def test_r_set_d2_n3():
    rs = r_set(2, 3)
    expected = [lam for lam in enumerate_d_partitions(2, 3)
                if sum(c[0] for c in lam if c) <= 2]
    assert len(rs) == 6
    assert set(rs.members) == set(expected)


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", range(3, 7))
def test_trivial_label_excluded(d, n):
    assert ((n,),) + ((),) * (d - 1) not in r_set(d, n)


def test_small_n_rejected():
    with pytest.raises(ValueError, match="n >= 3"):
        r_set(2, 2)
    with pytest.raises(ValueError):
        ytl_dimension_formula(1, 2)
    with pytest.raises(ValueError):
        ytl_dimension_sum_squares(1, 2)


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("n", range(3, 8))
def test_construction_matches_filter(d, n):
    rs = r_set(d, n)
    assert list(rs.members) == r_set_by_filter(d, n)
    assert all(in_r_set(lam) for lam in rs.members)


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("n", range(3, 9))
def test_family_sizes(d, n):
    rs = r_set(d, n)
    assert len(rs.by_tag(2)) == comb(d, 2) * (n - 1)
    assert len(rs.by_tag(1)) == d * (n // 2 + 1)
    for lam in rs.by_tag(2):
        nonempty = [c for c in lam if c]
        assert len(nonempty) == 2 and all(c[0] == 1 for c in nonempty)


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", range(3, 7))
def test_membership_via_restriction(d, n):
    rs = r_set(d, n)
    for lam in enumerate_d_partitions(d, n):
        narrow = all(nu[0] <= 2 for nu in restriction_multiplicities(lam))
        assert (lam in rs) == narrow


def test_catalan_values():
    assert [catalan(k) for k in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


@pytest.mark.parametrize("n", range(0, 21))
def test_catalan_second_expression(n):
    s = sum(comb(n, k) ** 2 for k in range(n + 1))
    assert s % (n + 1) == 0
    assert catalan(n) == s // (n + 1)


def test_dimension_examples():
    assert ytl_dimension_formula(2, 3) == 28
    assert ytl_dimension_sum_squares(2, 3) == 28
    assert ytl_dimension_sum_squares(1, 3) == 5
    assert ytl_dimension_formula(3, 3) == 69


@pytest.mark.parametrize("n", range(3, 13))
def test_d1_is_catalan(n):
    assert ytl_dimension_formula(1, n) == catalan(n)


@pytest.mark.parametrize("d", range(1, 4))
@pytest.mark.parametrize("n", range(3, 8))
def test_formula_equals_sum_of_squares(d, n):
    assert ytl_dimension_formula(d, n) == ytl_dimension_sum_squares(d, n)
