import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import bounded_compositions_count, bounded_tuples_count
from supertoken.counting import (_edge_sum_dist, _edge_sum_indist, binomial, count_report,
                                 dist_edge_class_count, f_count, f_count_recurrence, h_count,
                                 multinomial, nomial_row, order_of, per_edge_multiplier_dist,
                                 per_edge_multiplier_indist)
from supertoken.graph import make_cycle, make_star
from supertoken.tokens import TokenSpec


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(7, 3) == 35
    assert binomial(3, 5) == 0
    assert binomial(-1, 0) == 0 and binomial(0, 0) == 1


def test_multinomial():
    assert multinomial(3, [1]) == 3
    assert multinomial(3, [1, 1]) == math.factorial(3) // (1 * 1 * 1)
    assert multinomial(3, [2, 1]) == 3
    assert multinomial(3, [2, 2]) == 0 and multinomial(3, [-1]) == 0


def test_f_count_worked_values():
    assert f_count(4, 3, 2) == 16
    assert f_count(4, 4, 3) == 31
    assert f_count(4, 4, 2) == 19
    assert f_count(5, -1, 2) == 0 and f_count(0, 0, 3) == 1 and f_count(0, 2, 3) == 0


def test_trinomial_rows():
    rows = [[1], [1, 1, 1], [1, 2, 3, 2, 1], [1, 3, 6, 7, 6, 3, 1], [1, 4, 10, 16, 19, 16, 10, 4, 1]]
    for n, row in enumerate(rows):
        assert nomial_row(n, 2) == row
        assert [f_count(n, k, 2) for k in range(len(row))] == row
    assert f_count_recurrence(2, 2, 2) == 3
    assert f_count_recurrence(3, 3, 2) == 7


def test_f_count_matches_recurrence_and_brute_force():
    for n in range(9):
        for k in range(13):
            for s in range(1, 7):
                assert f_count(n, k, s) == f_count_recurrence(n, k, s)
    for n in range(6):
        for k in range(8):
            for s in range(1, 4):
                assert f_count(n, k, s) == bounded_compositions_count(n, k, s)


def test_h_count():
    assert h_count(5, 3, 2) == 120
    assert h_count(3, 3, 3) == 27
    assert h_count(4, 3, 1) == bounded_tuples_count(4, 3, 1) == 24
    for n in range(6):
        for k in range(6):
            for s in range(1, 5):
                assert h_count(n, k, s) == bounded_tuples_count(n, k, s), (n, k, s)


def test_order_of():
    assert order_of(4, TokenSpec(2, 2)) == 10
    assert order_of(4, TokenSpec(3, 1, "dist")) == 24
    assert order_of(4, TokenSpec(2, 2, "dist")) == 16
    assert order_of(3, TokenSpec(4, 1)) == 0
    assert order_of(4, TokenSpec(3, 7)) == order_of(4, TokenSpec(3, 3))


def test_per_edge_multipliers():
    assert per_edge_multiplier_indist(4, 3, 2) == 8
    assert per_edge_multiplier_indist(4, 4, 3) == 18
    assert per_edge_multiplier_indist(7, 2, 1) == binomial(5, 1) == 5
    assert per_edge_multiplier_dist(5, 3, 2) == 69
    assert per_edge_multiplier_dist(5, 3, 1) == 3 * math.factorial(3) // math.factorial(1) == 18
    assert per_edge_multiplier_dist(4, 2, 2) == 8
    with pytest.raises(ValueError):
        per_edge_multiplier_indist(1, 1, 1)
    with pytest.raises(ValueError):
        per_edge_multiplier_dist(1, 1, 1)


def test_dist_class_terms():
    terms = {(ru, rv): dist_edge_class_count(5, 3, 2, ru, rv) for ru in (0, 1) for rv in (0, 1)}
    assert terms == {(0, 0): 27, (0, 1): 18, (1, 0): 18, (1, 1): 6}


@given(st.integers(0, 8), st.integers(0, 14), st.integers(1, 6))
def test_f_symmetry(n, k, s):
    assert f_count(n, k, s) == f_count(n, s * n - k, s)


def test_specializations():
    for n in range(9):
        for k in range(1, 7):
            assert f_count(n, k, 1) == binomial(n, k)
            assert f_count(n, k, k) == binomial(n + k - 1, k)
            assert h_count(n, k, 1) == (math.perm(n, k) if k <= n else 0)
            assert h_count(n, k, k) == n**k


def test_general_sums_agree_at_the_boundaries():
    # the general edge sums are not used at s = k but must agree there
    for n in range(2, 7):
        for k in range(1, 6):
            assert _edge_sum_indist(n, k, k) == binomial(n + k - 2, k - 1)
            assert _edge_sum_dist(n, k, k) == k * n ** (k - 1)
            assert _edge_sum_indist(n, k, 1) == binomial(n - 2, k - 1)


def test_count_report():
    r = count_report(make_cycle(4), TokenSpec(3, 2), with_enumeration=True)
    assert (r.order_formula, r.order_enumerated, r.size_formula, r.size_enumerated) == (16, 16, 32, 32)
    r = count_report(make_cycle(4), TokenSpec(4, 3), with_enumeration=True)
    assert (r.order_formula, r.size_formula, r.per_edge_multiplier) == (31, 72, 18) and r.agrees
    r = count_report(make_star(4), TokenSpec(3, 2, "dist"), with_enumeration=True)
    assert (r.order_enumerated, r.size_enumerated) == (120, 276)
    r = count_report(make_star(4), TokenSpec(3, 2, "dist"), with_enumeration=True, cap=10)
    assert r.order_enumerated is None and "cap" in r.notice
