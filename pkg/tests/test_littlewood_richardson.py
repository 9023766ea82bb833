import pytest

from skewing.errors import AlphabetError, PreconditionError, WeightMismatchError
from skewing.foundation import partitions
from skewing.littlewood_richardson import (
    lr_all,
    lr_classical,
    lr_plactic,
    lr_skew_expansion,
)
from skewing.symfun import SymElem
from skewing.tableaux import SSYT, enumerate_ssyt


def s(*parts):
    return SymElem.basis_element("s", parts)


def triples(max_weight):
    for n in range(max_weight + 1):
        for lam in partitions(n):
            for m in range(n + 1):
                for mu in partitions(m):
                    for nu in partitions(n - m):
                        yield lam, mu, nu


def test_classical_examples():
    assert lr_classical((2, 1), (1,), (1, 1)) == 1
    assert lr_classical((2,), (1,), (1,)) == 1
    assert lr_classical((3, 2, 1), (), (3, 2, 1)) == 1
    assert lr_classical((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_classical((2, 2), (2,), (1, 1)) == 0


def test_skew_expansion_examples():
    assert lr_skew_expansion((2, 1), (1,)) == s(2) + s(1, 1)
    assert lr_skew_expansion((3, 1), (3, 1)) == 1
    assert not lr_skew_expansion((2,), (1, 1))
    assert lr_skew_expansion((3, 2, 1), (2, 1)).coefficient((2, 1)) == 2


def test_plactic_examples():
    assert lr_plactic((2, 1), (1,), (1, 1)) == 1
    assert lr_plactic((2, 2), (2,), (2,)) == 1
    assert lr_plactic((2, 1), (), (2, 1)) == 1
    assert lr_plactic((3,), (), (2, 1)) == 0
    assert lr_plactic((3, 2, 1), (2, 1), (2, 1)) == 2


def test_all_methods():
    assert lr_all((2, 1), (1,), (1, 1)) == {"classical": 1, "skew": 1, "plactic": 1}


def test_three_methods_agree_on_small_weights():
    for lam, mu, nu in triples(4):
        values = lr_all(lam, mu, nu)
        assert len(set(values.values())) == 1, (lam, mu, nu, values)


@pytest.mark.slow
def test_three_methods_agree_up_to_weight_six():
    for lam, mu, nu in triples(6):
        values = lr_all(lam, mu, nu)
        assert len(set(values.values())) == 1, (lam, mu, nu, values)


def test_symmetry():
    for lam, mu, nu in triples(5):
        assert lr_classical(lam, mu, nu) == lr_classical(lam, nu, mu)


def test_count_does_not_depend_on_the_tableau():
    for lam, mu, nu in triples(4):
        expected = lr_plactic(lam, mu, nu)
        for tableau in enumerate_ssyt(lam, 3):
            assert lr_plactic(lam, mu, nu, n=3, tableau=tableau) == expected, (tableau, mu, nu)


@pytest.mark.slow
def test_count_does_not_depend_on_the_tableau_up_to_weight_five():
    for lam, mu, nu in triples(5):
        expected = lr_classical(lam, mu, nu)
        for tableau in enumerate_ssyt(lam, 4):
            assert lr_plactic(lam, mu, nu, n=4, tableau=tableau) == expected, (tableau, mu, nu)


def test_errors():
    with pytest.raises(WeightMismatchError):
        lr_classical((2, 1), (1,), (1,))
    with pytest.raises(WeightMismatchError):
        lr_plactic((2, 1), (2,), (2,))
    with pytest.raises(AlphabetError):
        lr_plactic((2, 1), (1,), (1, 1), n=1)
    with pytest.raises(PreconditionError):
        lr_plactic((2, 1), (1,), (1, 1), tableau=SSYT.from_rows([[1, 1, 2]]))
