import pytest

from skewing.errors import PosetError
from skewing.poset import (
    NUIO,
    all_nuios,
    chains,
    deg_p,
    deg_p_letter,
    des_p,
    has_no_nontrivial_ltr_maxima,
    has_no_p_descents,
    height,
    inv_p,
    is_chain,
    multiset_of,
    n_words,
    nuio_from_hessenberg,
)


def test_relations_of_worked_poset(worked_poset):
    assert worked_poset.less(1, 3)
    assert not worked_poset.less(1, 2)
    assert worked_poset.incomparable(2, 3)
    assert worked_poset.incomparable(4, 4)
    assert worked_poset.greater(5, 3)
    assert str(worked_poset) == "2,3,4,5,5"


def test_rejects_malformed_hessenberg_vectors():
    with pytest.raises(PosetError):
        NUIO((2, 1))
    with pytest.raises(PosetError):
        NUIO((3, 2, 3))
    with pytest.raises(PosetError):
        NUIO((1, 4))
    assert nuio_from_hessenberg([1]) == NUIO((1,))


def test_all_nuios_are_catalan_many():
    assert [len(all_nuios(n)) for n in range(1, 6)] == [1, 2, 5, 14, 42]


def test_total_order_and_antichain():
    total = NUIO.total_order(4)
    assert total.hess == (1, 2, 3, 4)
    assert all(total.less(a, b) for a in range(1, 5) for b in range(a + 1, 5))
    assert height(total) == 4
    antichain = NUIO.antichain(3)
    assert not any(antichain.comparable(a, b) for a in range(1, 4) for b in range(1, 4))
    assert height(antichain) == 1


def test_chains_and_height(worked_poset):
    assert chains(worked_poset, 2) == ((1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5))
    assert chains(worked_poset, 3) == ((1, 3, 5),)
    assert chains(worked_poset, 4) == ()
    assert height(worked_poset) == 3
    assert is_chain((5, 1, 3), worked_poset)
    assert not is_chain((1, 2), worked_poset)


def test_descents_and_inversions(worked_poset):
    assert des_p((3, 1), worked_poset) == frozenset({1})
    assert des_p((2, 1), worked_poset) == frozenset()
    assert inv_p((2, 1), NUIO.antichain(2)) == 1
    assert inv_p((3, 1), worked_poset) == 0
    assert inv_p((3, 2, 1), worked_poset) == 2


def test_deg_matches_worked_table(worked_poset):
    expected = {
        (1, 3): ((0, 1, 1, 1, 1), 2),
        (1, 4): ((0, 1, 2, 0, 1), 2),
        (1, 5): ((0, 1, 2, 1, 0), 1),
        (2, 4): ((1, 0, 2, 0, 1), 3),
        (2, 5): ((1, 0, 2, 1, 0), 2),
        (3, 5): ((1, 1, 1, 1, 0), 1),
    }
    for chain, (rest, degree) in expected.items():
        assert deg_p(chain, rest, worked_poset) == degree


def test_deg_variants(worked_poset):
    beta = (1, 1, 1, 1, 1)
    assert deg_p_letter(3, beta, worked_poset, "B") == 1
    assert deg_p_letter(3, beta, worked_poset, "A") == 1
    assert deg_p_letter(1, beta, worked_poset, "A") == 0
    assert deg_p_letter(1, beta, worked_poset, "B") == 1
    assert deg_p(2, beta, worked_poset) == deg_p((2,), beta, worked_poset)


def test_multiset_of():
    assert multiset_of((0, 2, 1)) == (2, 2, 3)
    assert multiset_of((0, 0)) == ()


def test_n_words():
    antichain = NUIO.antichain(2)
    assert n_words(antichain, 2) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert n_words(antichain, 2, content=(1, 1)) == [(1, 2), (2, 1)]
    chain = NUIO.total_order(2)
    assert n_words(chain, 2) == [(1, 1), (2, 2)]
    assert n_words(chain, 2, content=(1, 1)) == []
    assert n_words(chain, 0) == [()]


def test_word_predicates(worked_poset):
    assert has_no_p_descents((1, 2, 3), worked_poset)
    assert not has_no_p_descents((3, 1), worked_poset)
    assert has_no_nontrivial_ltr_maxima((2, 1, 3), worked_poset)
    assert not has_no_nontrivial_ltr_maxima((1, 3), worked_poset)
