import pytest

from dominsert.involutions import (
    check_insertion_sign,
    check_involution_stats,
    check_vertical_split,
    classical_counts,
    involution_poly,
    involution_poly_direct,
    involution_poly_egf,
    involution_poly_recursive,
    spin_square_sum,
    spin_square_target,
)
from dominsert.polynomials import MPoly, PARAMS, one_plus_q
from dominsert.words import enumerate_involutions, parse_word


def test_involution_counts():
    assert len(enumerate_involutions(0)) == 1
    assert len(enumerate_involutions(1)) == 2
    assert len(enumerate_involutions(2)) == 6
    # matches the recursion h(n+1) = 2 h(n) + 2n h(n-1) at a=b=c=s=1
    assert len(enumerate_involutions(3)) == 2 * 6 + 2 * 2 * 2 == 20


def test_identity_involution_stats():
    pi = parse_word("1 2 3")
    checks = check_involution_stats(pi, 0)
    spin, rows, cols, dstat = checks
    assert spin.lhs == 0 and spin.holds
    assert rows.lhs == 0 and rows.holds
    # the identity inserts to a single flat row, so every column is odd
    assert cols.lhs == 2 * 3 and cols.holds
    assert dstat.lhs == 0 and dstat.holds


def test_barred_letter_stats():
    checks = check_involution_stats(parse_word("1'"), 0)
    spin, rows, cols, dstat = checks
    assert spin.lhs == 1 and spin.holds  # shape (1,1): one vertical domino
    assert rows.lhs == 2 and rows.holds
    assert cols.lhs == 0 and cols.holds
    assert dstat.lhs == 0 and dstat.holds
    even, odd = check_vertical_split(parse_word("1'"), 0)
    assert even.lhs == 0 and odd.lhs == 1 and even.holds and odd.holds


def test_involution_stats_exhaustive():
    for n in range(5):
        for core in (0, 1, 2):
            for pi in enumerate_involutions(n):
                assert all(cmp.holds for cmp in check_involution_stats(pi, core))
                assert all(cmp.holds for cmp in check_vertical_split(pi, core))


def test_insertion_sign():
    assert check_insertion_sign(parse_word("1 2"), 0).lhs == 1
    barred_cycle = check_insertion_sign(parse_word("2' 1'"), 0)
    assert barred_cycle.lhs == -1 and barred_cycle.holds
    for n in range(5):
        for core in (0, 1):
            for pi in enumerate_involutions(n):
                assert check_insertion_sign(pi, core).holds


def test_non_involution_rejected():
    with pytest.raises(ValueError):
        check_involution_stats(parse_word("2 3 1"), 0)


def test_involution_poly_base_cases():
    a = MPoly.var("a", PARAMS)
    b = MPoly.var("b", PARAMS)
    c = MPoly.var("c", PARAMS)
    s = MPoly.var("s", PARAMS)
    assert involution_poly_recursive(0) == MPoly.const(1, PARAMS)
    assert involution_poly_recursive(1) == b + a * s
    assert involution_poly_recursive(2) == (b + a * s) ** 2 + c * one_plus_q(PARAMS)


def test_involution_poly_routes_agree():
    for n in range(7):
        reference = involution_poly_recursive(n)
        assert involution_poly_direct(n) == reference
        assert involution_poly_egf(n) == reference
    for n in range(5):
        reference = involution_poly_recursive(n)
        for core in (0, 1, 2):
            assert involution_poly(n, core) == reference


def test_spin_square_sum():
    s = MPoly.var("s", ("s",))
    assert spin_square_sum(1, 0) == 1 + s * s
    assert spin_square_sum(0, 2) == spin_square_target(0)
    for n in range(5):
        for core in (0, 1, 2):
            assert spin_square_sum(n, core) == spin_square_target(n)


def test_classical_counts():
    three = classical_counts(3)
    assert three["sum_fsq"] == 6 and three["sum_f"] == 4
    zero = classical_counts(0)
    assert zero["sum_fsq"] == 1 and zero["sum_f"] == 1
    for n in range(9):
        counts = classical_counts(n)
        assert counts["sum_fsq"] == counts["factorial"]
        assert counts["sum_f"] == counts["involutions"]
