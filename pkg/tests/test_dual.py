import pytest

from dominsert.insertion import dual_insert_alpha, dual_insert_beta, insert_word
from dominsert.verify import check_dual
from dominsert.words import (
    DUAL,
    colored_word,
    enumerate_signed_permutations,
    parse_biword,
    with_kind,
)


def test_agree_with_standard_on_permutations():
    for n in range(4):
        for pi in enumerate_signed_permutations(n):
            word = colored_word(pi)
            result = insert_word(pi, 0)
            assert dual_insert_alpha(with_kind(word, DUAL), 0) == (result.p, result.q)
            assert dual_insert_beta(word, 0) == (result.p, result.q)


def test_single_letter_seeds():
    p, q = dual_insert_alpha(parse_biword("1/1'", kind=DUAL), 0)
    assert p.shape() == (1, 1) and q.shape() == (1, 1)
    p, q = dual_insert_beta(parse_biword("1/1"), 1)
    assert p.core == (1,) and p.shape() == q.shape()


def test_rejects_wrong_kind_or_repeats():
    with pytest.raises(ValueError):
        dual_insert_alpha(parse_biword("1/1"), 0)  # colored, not dual
    with pytest.raises(ValueError):
        dual_insert_beta(parse_biword("1/1", kind=DUAL), 0)
    with pytest.raises(ValueError):
        dual_insert_beta(parse_biword("1/1 1/1"), 0)


def test_column_class_example():
    # two equal bottom letters under different tops land in one column class
    word = parse_biword("1/1 2/1", kind=DUAL)
    p, q = dual_insert_alpha(word, 0)
    assert p.is_semistandard() and q.is_column_semistandard()
    assert q.weight() == (1, 1) and p.weight() == (2,)


def test_exhaustive_small():
    for core in (0, 1):
        for length in range(4):
            record = check_dual(length, core)
            assert record["pass"], record
