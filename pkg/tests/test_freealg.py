from itertools import product

import pytest

from conftest import qpoly
from skewing.congruence import WordCongruence, in_ideal
from skewing.errors import AlphabetError
from skewing.foundation import ONE, partitions
from skewing.freealg import (
    DualElem,
    NCElem,
    f_gamma,
    f_gamma_poset,
    gamma_partition,
    nc_e,
    nc_e_poset,
    nc_h,
    nc_h_monomial,
    nc_h_poset,
    nc_monomial,
    nc_p,
    nc_p_poset,
    nc_schur,
    pairing,
)
from skewing.poset import NUIO, all_nuios, chains, n_words
from skewing.symfun import SymElem, convert, qsym_to_sym, skew_e_on_h


def words(element):
    return set(element.terms)


class TestElements:
    def test_concatenation_product(self):
        a = NCElem(3, {(1,): 1, (2,): 1})
        b = NCElem.monomial((3,), 3, coeff=qpoly(0, 1))
        assert (a * b).terms == {(1, 3): qpoly(0, 1), (2, 3): qpoly(0, 1)}
        assert (b * a).terms == {(3, 1): qpoly(0, 1), (3, 2): qpoly(0, 1)}
        assert a * NCElem.one(3) == a

    def test_cancellation_drops_words(self):
        a = NCElem(2, {(1, 2): 1})
        assert not (a - a)
        assert (a + a).coefficient((1, 2)) == 2

    def test_alphabet_checks(self):
        with pytest.raises(AlphabetError):
            NCElem(2, {(3,): 1})
        with pytest.raises(AlphabetError):
            NCElem(2, {(1,): 1}) * NCElem(3, {(1,): 1})
        with pytest.raises(AlphabetError):
            pairing(NCElem(2, {(1,): 1}), DualElem(3, {(1,): 1}))

    def test_pairing(self):
        z = NCElem(2, {(1, 2): 2, (2, 1): 1})
        gamma = DualElem.from_words([(1, 2), (2, 2)], 2, coeff=qpoly(0, 1))
        assert pairing(z, gamma) == qpoly(0, 2)
        assert pairing(NCElem(2), gamma) == 0


class TestGenerators:
    def test_nc_e_uses_decreasing_words(self):
        assert words(nc_e(2, 3)) == {(2, 1), (3, 1), (3, 2)}
        assert nc_e(0, 3) == NCElem.one(3)
        assert not nc_e(4, 3)

    def test_nc_h_is_weakly_increasing_words(self):
        assert words(nc_h(2, 2)) == {(1, 1), (1, 2), (2, 2)}
        assert all(c == ONE for c in nc_h(3, 3).terms.values())

    def test_poset_generators_use_the_order(self, worked_poset):
        assert words(nc_e_poset(2, worked_poset)) == {(3, 1), (4, 1), (5, 1), (4, 2), (5, 2), (5, 3)}
        assert words(nc_e_poset(3, worked_poset)) == {(5, 3, 1)}

    def test_h_recursion_matches_monomial_form(self):
        for n in (1, 2, 3):
            for poset in all_nuios(n):
                for k in range(5):
                    assert nc_h_poset(k, poset) == nc_h_monomial(k, poset)

    @pytest.mark.slow
    def test_h_recursion_matches_monomial_form_exhaustively(self):
        for poset in all_nuios(4):
            for k in range(6):
                assert nc_h_poset(k, poset) == nc_h_monomial(k, poset)
        for k in range(6):
            assert nc_h(k, 5) == nc_h_monomial(k, NUIO.total_order(5))

    def test_p_generator_reduces_to_n_words(self):
        for n in (1, 2, 3):
            for poset in all_nuios(n):
                congruence = WordCongruence.unit_interval(poset)
                for k in range(1, 4):
                    expected = NCElem(n, {w: 1 for w in n_words(poset, k)})
                    assert in_ideal(nc_p_poset(k, poset) - expected, congruence)

    @pytest.mark.slow
    def test_p_generator_reduces_to_n_words_on_four_letters(self):
        for n in (1, 2, 3, 4):
            for poset in all_nuios(n):
                congruence = WordCongruence.unit_interval(poset)
                for k in range(1, 5):
                    expected = NCElem(n, {w: 1 for w in n_words(poset, k)})
                    assert in_ideal(nc_p_poset(k, poset) - expected, congruence), (poset, k)

    def test_chains_are_the_support_of_e(self):
        for n in range(1, 5):
            for poset in all_nuios(n):
                for k in range(1, n + 1):
                    decreasing = {
                        w for w in product(range(1, n + 1), repeat=k)
                        if all(poset.greater(w[i], w[i + 1]) for i in range(k - 1))
                    }
                    assert words(nc_e_poset(k, poset)) == decreasing
                    assert {tuple(reversed(c)) for c in chains(poset, k)} == decreasing

    def test_p_generator_signs(self):
        # e1 h1 - 2 e2 on two letters
        assert nc_p(2, 2).terms == {(1, 1): ONE, (1, 2): ONE, (2, 1): -ONE, (2, 2): ONE}

    def test_schur_generators(self):
        assert nc_schur((1, 1), 3) == nc_e(2, 3)
        assert nc_schur((), 3) == NCElem.one(3)
        assert nc_schur((1,), 3) == nc_e(1, 3)

    def test_schur_determinant_expansion(self):
        # e2 e1 - e3, and e3 vanishes on two letters
        assert nc_schur((2, 1), 2).terms == {(2, 1, 1): ONE, (2, 1, 2): ONE}
        assert nc_schur((2,), 3) == nc_h(2, 3)
        assert nc_schur((2, 1), 3) == nc_e(2, 3) * nc_e(1, 3) - nc_e(3, 3)

    def test_nc_monomial(self):
        assert nc_monomial((2, 1), 2).terms == {(1, 1, 2): ONE, (1, 2, 2): ONE}
        assert words(nc_monomial((1,), 3)) == {(1,), (2,), (3,)}


class TestFGamma:
    def test_content_class_gives_complete_homogeneous(self):
        for lam in [(1, 1), (2, 1), (2, 2), (3, 1, 1)]:
            sym = qsym_to_sym(f_gamma(gamma_partition(lam, 3)))
            assert convert(sym, "h") == SymElem.basis_element("h", lam)

    def test_single_word(self):
        gamma = DualElem.from_words([(2, 1)], 2)
        assert f_gamma(gamma).coefficient((1, 1)) == 1
        assert f_gamma(gamma).coefficient((2,)) == 0

    def test_poset_descents(self):
        antichain = NUIO.antichain(2)
        gamma = DualElem(2, {(1, 2): 1, (2, 1): qpoly(0, 1)})
        result = f_gamma_poset(gamma, antichain)
        assert result.coefficient((2,)) == qpoly(1, 1)
        assert result.coefficient((1, 1)) == qpoly(1, 1)

    def test_poset_alphabet_mismatch(self, worked_poset):
        with pytest.raises(AlphabetError):
            f_gamma_poset(DualElem(2), worked_poset)

    def test_gamma_partition_needs_enough_letters(self):
        with pytest.raises(AlphabetError):
            gamma_partition((1, 1, 1), 2)
        assert words(gamma_partition((2, 1), 2)) == {(1, 1, 2), (1, 2, 1), (2, 1, 1)}


class TestSkewingByPairing:
    # <ee_k mm_nu, gamma_lambda> is the h_nu coefficient of e_k^perp h_lambda
    def test_e_perp_on_h_from_word_pairing(self):
        n = 6
        for size in range(1, 7):
            for lam in partitions(size):
                gamma = gamma_partition(lam, n)
                for k in range(1, min(3, size) + 1):
                    expected = skew_e_on_h(k, lam)
                    for nu in partitions(size - k):
                        paired = pairing(nc_e(k, n) * nc_monomial(nu, n), gamma)
                        assert paired == expected.coefficient(nu), (lam, k, nu)

    def test_worked_pairing(self):
        # e_1^perp h_21 = h_2 + h_11
        gamma = gamma_partition((2, 1), 3)
        assert pairing(nc_e(1, 3) * nc_monomial((2,), 3), gamma) == 1
        assert pairing(nc_e(1, 3) * nc_monomial((1, 1), 3), gamma) == 1
