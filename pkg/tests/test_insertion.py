import pytest

from dominsert.partitions import DominoShape, staircase
from dominsert.insertion import (
    growth,
    growth_reverse,
    growth_reverse_word,
    growth_str,
    insert_letter,
    insert_word,
    local_rule,
    local_rule_reverse,
    matrix_word,
    word_matrix,
)
from dominsert.tableaux import empty_tableau, enumerate_standard
from dominsert.words import (
    Letter,
    enumerate_signed_permutations,
    group_inverse,
    parse_word,
    total_color,
)

H, V = "h", "v"

RUNNING_WORD = parse_word("3' 4 2 1'")

# frames of the running insertion, one per inserted letter
RUNNING_FRAMES = (
    ((3, DominoShape(1, 1, V)),),
    ((3, DominoShape(1, 1, V)), (4, DominoShape(1, 2, H))),
    ((2, DominoShape(1, 1, H)), (3, DominoShape(2, 1, H)), (4, DominoShape(1, 3, V))),
    (
        (1, DominoShape(1, 1, V)),
        (2, DominoShape(1, 2, V)),
        (3, DominoShape(3, 1, H)),
        (4, DominoShape(1, 3, V)),
    ),
)

RUNNING_GRID = (
    ((), (), (), (), ()),
    ((), (), (), (1, 1), (1, 1)),
    ((), (), (), (1, 1), (3, 1)),
    ((), (), (2,), (2, 2), (3, 3)),
    ((), (1, 1), (2, 2), (2, 2, 2), (3, 3, 2)),
)


def test_insert_single_letters():
    barred = insert_letter(empty_tableau(0), Letter(3, True))
    assert barred.entries == ((3, DominoShape(1, 1, V)),)
    plain = insert_word(parse_word("1"), 0)
    assert plain.p.entries == ((1, DominoShape(1, 1, H)),)
    assert plain.p == plain.q


def test_insert_into_one_box_core():
    result = insert_word(parse_word("1'"), 1)
    assert result.p.core == (1,)
    assert result.p.entries == ((1, DominoShape(2, 1, V)),)
    assert result.p.shape() == (1, 1, 1)
    assert growth(parse_word("1'"), 1).p_tableau() == result.p


def test_running_example_frames():
    result = insert_word(RUNNING_WORD, 0)
    assert tuple(f.entries for f in result.frames) == RUNNING_FRAMES
    assert result.p.shape() == (3, 3, 2)
    assert result.p.vertical_count() == 3
    assert result.q.vertical_count() == 1


def test_insert_rejects_duplicate_value():
    tab = insert_word(parse_word("1"), 0).p
    with pytest.raises(ValueError):
        insert_letter(tab, Letter(1))


def test_word_matrix_round_trip():
    matrix = word_matrix(RUNNING_WORD)
    assert matrix == (
        (0, 0, -1, 0),
        (0, 0, 0, 1),
        (0, 1, 0, 0),
        (-1, 0, 0, 0),
    )
    assert matrix_word(matrix) == RUNNING_WORD
    with pytest.raises(ValueError):
        word_matrix(parse_word("1 1"))
    with pytest.raises(ValueError):
        matrix_word(((1, 0), (1, 0)))


def test_growth_running_example():
    diagram = growth(RUNNING_WORD, 0)
    assert diagram.grid == RUNNING_GRID
    assert diagram.p_chain() == ((), (1, 1), (2, 2), (2, 2, 2), (3, 3, 2))
    assert diagram.q_chain() == ((), (1, 1), (3, 1), (3, 3), (3, 3, 2))
    assert diagram.spin_ledger_holds()


def test_growth_empty_word():
    diagram = growth((), 2)
    assert diagram.grid == ((staircase(2),),)
    assert diagram.p_tableau() == empty_tableau(2)


def test_local_rule_validation():
    with pytest.raises(ValueError):
        local_rule((), (2,), (), 1)  # +1 needs three equal corners
    with pytest.raises(ValueError):
        local_rule((), (2,), (1,), 0)  # (1,)/() is not a domino


def test_local_rule_reverse_squares():
    # every square of every small growth diagram reverses to its own corner
    for n in range(4):
        for pi in enumerate_signed_permutations(n):
            diagram = growth(pi, 1)
            for i in range(n):
                for j in range(n):
                    lam, entry = local_rule_reverse(
                        diagram.grid[i + 1][j + 1],
                        diagram.grid[i + 1][j],
                        diagram.grid[i][j + 1],
                    )
                    assert lam == diagram.grid[i][j]
                    assert entry == diagram.matrix[i][j]


def test_growth_reverse_trivial():
    tab = insert_word(parse_word("1"), 0)
    assert growth_reverse(tab.p.chain(), tab.q.chain()) == ((1,),)


def test_growth_reverse_rejects_bad_chains():
    with pytest.raises(ValueError):
        growth_reverse(((), (2,)), ((), (1, 1)))  # unequal final shapes
    with pytest.raises(ValueError):
        growth_reverse(((2,), (2, 2)), ((2,), (2, 2)))  # core is not a staircase


def test_bijection_small_exhaustive():
    from dominsert.partitions import enumerate_with_core

    for n in range(4):
        for core in (0, 1, 2):
            seen = set()
            for pi in enumerate_signed_permutations(n):
                result = insert_word(pi, core)
                diagram = growth(pi, core)
                assert diagram.p_tableau() == result.p
                assert diagram.q_tableau() == result.q
                assert diagram.spin_ledger_holds()
                assert 2 * total_color(pi) == (
                    result.p.vertical_count() + result.q.vertical_count()
                )
                assert growth_reverse_word(result.p, result.q) == pi
                pair = (result.p, result.q)
                assert pair not in seen
                seen.add(pair)
            expected = sum(
                len(enumerate_standard(lam)) ** 2
                for lam in enumerate_with_core(core, n)
            )
            assert len(seen) == expected


def test_surjectivity_onto_tableau_pairs():
    from dominsert.partitions import enumerate_with_core

    for core in (0, 1):
        for lam in enumerate_with_core(core, 2):
            tabs = enumerate_standard(lam)
            for p in tabs:
                for q in tabs:
                    pi = growth_reverse_word(p, q)
                    result = insert_word(pi, core)
                    assert (result.p, result.q) == (p, q)


def test_inverse_symmetry():
    for n in range(4):
        for pi in enumerate_signed_permutations(n):
            result = insert_word(pi, 1)
            other = insert_word(group_inverse(pi), 1)
            assert result.p == other.q and result.q == other.p


def scrambled_growth_grid(word, core):
    """Fill the squares column-major instead of row-major."""
    from dominsert.insertion import local_rule, word_matrix
    from dominsert.partitions import staircase

    matrix = word_matrix(word)
    n = len(matrix)
    base = staircase(core)
    grid = [[base] * (n + 1) for _ in range(n + 1)]
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            grid[i][j] = local_rule(
                grid[i - 1][j - 1], grid[i][j - 1], grid[i - 1][j], matrix[i - 1][j - 1]
            )
    return tuple(tuple(row) for row in grid)


def test_growth_order_independent():
    for n in range(4):
        for pi in enumerate_signed_permutations(n):
            assert growth(pi, 1).grid == scrambled_growth_grid(pi, 1)


def test_larger_words_spot_checks():
    # beyond the exhaustive range: fixed words in B_5 and B_6
    for text in (
        "3' 5 1 4' 2",
        "5' 4' 3' 2' 1'",
        "2 4' 6 1' 3 5'",
        "6' 1 5 2' 4 3",
        "4 6' 2 5' 1' 3'",
    ):
        word = parse_word(text)
        for core in (0, 1, 2):
            result = insert_word(word, core)
            diagram = growth(word, core)
            assert diagram.p_tableau() == result.p
            assert diagram.q_tableau() == result.q
            assert diagram.spin_ledger_holds()
            assert 2 * total_color(word) == (
                result.p.vertical_count() + result.q.vertical_count()
            )
            assert growth_reverse_word(result.p, result.q) == word


def test_growth_str_shapes():
    text = growth_str(growth(RUNNING_WORD, 0))
    lines = text.splitlines()
    assert lines[0].startswith("()")
    assert "(3,3,2)" in lines[0]
    assert lines[-1].strip().startswith("()")
    celled = growth_str(growth(parse_word("2' 1"), 0), cells=True)
    assert "#" in celled
