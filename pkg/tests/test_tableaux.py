from itertools import product

import pytest

from skewing.errors import SkewingError
from skewing.foundation import content, partitions
from skewing.tableaux import (
    SSYT,
    column_word,
    enumerate_ssyt,
    rsk_p_tableau,
    superstandard_tableau,
    tableau_word_shape,
)


def test_row_insertion_bumps():
    assert rsk_p_tableau((1, 2, 1)).rows == ((1, 1), (2,))
    assert rsk_p_tableau((3, 1, 2)).rows == ((1, 2), (3,))
    assert rsk_p_tableau(()).rows == ()


def test_equal_letters_do_not_bump_each_other():
    assert rsk_p_tableau((2, 2, 1)).rows == ((1, 2), (2,))


def test_column_word_reads_bottom_to_top():
    tableau = SSYT.from_rows([[1, 1, 3], [2]])
    assert column_word(tableau) == (2, 1, 1, 3)
    assert column_word(SSYT.from_rows([[1, 1, 3, 4], [3, 4, 6], [5]])) == (5, 3, 1, 4, 1, 6, 3, 4)


def test_insertion_recovers_tableau_from_column_word():
    for shape in [(2, 1), (2, 2), (3, 1), (2, 1, 1)]:
        for tableau in enumerate_ssyt(shape, 3):
            assert rsk_p_tableau(column_word(tableau)) == tableau


def test_insertion_recovers_every_tableau_of_weight_four():
    for n in range(1, 5):
        for size in range(5):
            for lam in partitions(size):
                for tableau in enumerate_ssyt(lam, n):
                    assert rsk_p_tableau(column_word(tableau)) == tableau


@pytest.mark.slow
def test_insertion_recovers_every_tableau_up_to_weight_six():
    for n in range(1, 6):
        for size in range(7):
            for lam in partitions(size):
                for tableau in enumerate_ssyt(lam, n):
                    assert rsk_p_tableau(column_word(tableau)) == tableau, tableau


def test_tableau_word_shape():
    assert tableau_word_shape((2, 1)) == (1, 1)
    assert tableau_word_shape((1, 2)) == (2,)
    assert tableau_word_shape((2, 1, 2)) == (2, 1)
    assert tableau_word_shape((1, 2, 1)) is None
    assert tableau_word_shape(()) == ()


def test_enumerate_ssyt_counts():
    assert len(enumerate_ssyt((2, 1), 3)) == 8
    assert len(enumerate_ssyt((2, 2), 2)) == 1
    assert len(enumerate_ssyt((1, 1, 1), 3)) == 1
    assert enumerate_ssyt((1, 1, 1), 2) == []
    assert enumerate_ssyt((), 3) == [SSYT(())]


def test_every_word_inserts_to_a_semistandard_tableau():
    for word in product(range(1, 4), repeat=4):
        tableau = rsk_p_tableau(word)
        assert SSYT.from_rows(tableau.rows) == tableau
        assert sorted(x for row in tableau.rows for x in row) == sorted(word)


@pytest.mark.slow
def test_insertion_preserves_content():
    for n in range(1, 5):
        for length in range(9):
            for word in product(range(1, n + 1), repeat=length):
                assert rsk_p_tableau(word).content(n) == content(word, n)


def test_from_rows_validation():
    with pytest.raises(SkewingError):
        SSYT.from_rows([[2, 1]])
    with pytest.raises(SkewingError):
        SSYT.from_rows([[1, 2], [1]])
    with pytest.raises(SkewingError):
        SSYT.from_rows([[1], [2, 3]])


def test_superstandard_and_content():
    tableau = superstandard_tableau((3, 1))
    assert tableau.rows == ((1, 1, 1), (2,))
    assert tableau.shape == (3, 1)
    assert tableau.content(3) == (3, 1, 0)
    assert str(SSYT.from_rows([[1, 1, 3, 4], [3, 4, 6], [5]])) == "1134/346/5"
