import pytest

from dominsert.polynomials import MPoly, PARAMS
from dominsert.series import (
    Factor,
    TruncatedSeries,
    check_cauchy,
    check_dual_cauchy,
    check_weighted_sum,
    domino_function,
    expand_product,
    schur,
    specialization_even_both,
    specialization_even_rows,
    specialization_square,
    specialization_zero_spin,
    weighted_domino_sum,
)

ONE = MPoly.const(1, PARAMS)
Q = MPoly.var("s", PARAMS, power=2)
S = MPoly.var("s", PARAMS)


def test_series_ring_basics():
    one = TruncatedSeries.one(2, 0, 3)
    x1 = TruncatedSeries(2, 0, 3, {(1, 0): ONE})
    x2 = TruncatedSeries(2, 0, 3, {(0, 1): ONE})
    assert one * x1 == x1
    # truncation at total degree 1 drops the cross term
    low = TruncatedSeries(2, 0, 1, {(0, 0): ONE, (1, 0): ONE})
    low2 = TruncatedSeries(2, 0, 1, {(0, 0): ONE, (0, 1): ONE})
    product = low * low2
    assert product == TruncatedSeries(2, 0, 1, {(0, 0): ONE, (1, 0): ONE, (0, 1): ONE})


def test_geometric_factor():
    geo = Factor(-ONE, (1,), power=-1).expand(1, 0, 3)
    assert geo == TruncatedSeries(1, 0, 3, {(0,): ONE, (1,): ONE, (2,): ONE, (3,): ONE})
    binom = Factor(Q, (1,)).expand(1, 0, 3)
    assert binom.terms[(1,)] == Q


def test_expand_product_small():
    x1y1 = Factor(ONE, (1, 1))
    assert expand_product([x1y1], 1, 1, 4).terms[(1, 1)] == ONE
    halves = expand_product(
        [Factor(-ONE, (1, 0), power=-1), Factor(-ONE, (0, 1), power=-1)], 2, 0, 2
    )
    assert halves.terms[(1, 1)] == ONE and halves.terms[(2, 0)] == ONE


def test_schur_examples():
    assert schur((1,), 2, 3).terms == {(1, 0): ONE, (0, 1): ONE}
    assert schur((2,), 2, 3).terms == {(2, 0): ONE, (1, 1): ONE, (0, 2): ONE}
    assert schur((1, 1), 2, 3).terms == {(1, 1): ONE}


def test_domino_function_examples():
    g22 = domino_function((2, 2), 2, 4)
    assert g22 == schur((2,), 2, 4) * Q + schur((1, 1), 2, 4)
    g311 = domino_function((3, 1, 1), 2, 4)
    assert g311 == (schur((2,), 2, 4) + schur((1, 1), 2, 4)) * S
    assert g22 != g311  # equal 2-quotients, different functions
    assert domino_function((), 2, 4) == TruncatedSeries.one(2, 0, 4)
    assert domino_function((2, 1), 2, 4) == TruncatedSeries.one(2, 0, 4)


def test_domino_function_symmetry_and_zero_spin():
    for lam in ((2, 2), (3, 1), (4,), (3, 1, 1), (2, 2, 1, 1)):
        assert domino_function(lam, 2, 4).is_symmetric()
    assert domino_function((4,), 2, 4).subs({"s": 0}) == schur((2,), 2, 4)
    assert domino_function((2, 2), 2, 4).subs({"s": 0}) == schur((1, 1), 2, 4)
    assert domino_function((3, 1), 2, 4).subs({"s": 0}) == TruncatedSeries.zero(2, 0, 4)


def test_doubled_shape_has_even_rows():
    # H of mu is the domino function of the doubled shape
    assert domino_function((4, 2), 2, 3).subs({"s": 0}) == schur((2, 1), 2, 3)


def test_cauchy_identities():
    for core in (0, 1, 2):
        lhs, rhs = check_cauchy(core, 1, 2)
        assert lhs == rhs, core
        lhs, rhs = check_dual_cauchy(core, 1, 2)
        assert lhs == rhs, core
    lhs, rhs = check_cauchy(0, 2, 2)
    assert lhs == rhs
    lhs, rhs = check_dual_cauchy(0, 2, 2)
    assert lhs == rhs


def test_weighted_sum_product_and_core_independence():
    reference = None
    for core in (0, 1, 2):
        lhs, rhs = check_weighted_sum(core, 2, 3)
        assert lhs == rhs, core
        if reference is None:
            reference = lhs
        assert lhs == reference, core


def test_degree_zero_terms():
    lhs, rhs = check_cauchy(0, 2, 0)
    assert lhs == rhs
    assert lhs.terms == {(0, 0, 0, 0): ONE}


def test_specializations():
    lhs, rhs = specialization_square(1, 3)
    assert lhs == rhs
    lhs, rhs = specialization_square(2, 3)
    assert lhs == rhs
    l2, r2, p2 = specialization_zero_spin(2, 3)
    assert l2 == r2 == p2
    l3, r3 = specialization_even_rows(2, 4)
    assert l3 == r3
    l4, r4 = specialization_even_both(2, 4)
    assert l4 == r4


def test_truncation_consistency():
    full = weighted_domino_sum(0, 2, 4)
    assert full.truncated(2) == weighted_domino_sum(0, 2, 2)
    with pytest.raises(ValueError):
        full.truncated(5)


def test_series_config_mismatch():
    with pytest.raises(ValueError):
        TruncatedSeries.one(1, 0, 2) + TruncatedSeries.one(2, 0, 2)
