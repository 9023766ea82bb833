"""The free algebra U = Q[q]<u_1, ..., u_N>, its dual on words, and F_gamma.

Elements are sparse tables word -> QPoly with words as tuples of letters.
Every generator family is defined against a natural unit interval order;
the plain noncommutative symmetric functions use the total order on [N].
"""

import logging
from functools import lru_cache
from itertools import combinations

from more_itertools import distinct_permutations

from .errors import AlphabetError
from .foundation import (
    ONE,
    ZERO,
    as_qpoly,
    conjugate,
    descent_set,
    distinct_permutation_class,
    signed_permutation_terms,
    validate_word,
)
from .poset import NUIO, chains, des_p, has_no_p_descents
from .symfun import QSymElem, fundamental_to_monomial

logger = logging.getLogger(__name__)


class _WordTable:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        cleaned = {}
        for word, coeff in (terms or {}).items():
            coeff = as_qpoly(coeff)
            if coeff:
                cleaned[validate_word(word, n)] = coeff
        self.terms = cleaned

    @classmethod
    def _trusted(cls, n, terms):
        # words already validated against the same alphabet
        table = cls.__new__(cls)
        table.n = n
        table.terms = {w: c for w, c in terms.items() if c}
        return table

    def _same_alphabet(self, other):
        if self.n != other.n:
            raise AlphabetError(f"alphabet bounds differ: {self.n} vs {other.n}")

    def coefficient(self, word):
        return self.terms.get(tuple(word), ZERO)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def scale(self, scalar):
        scalar = as_qpoly(scalar)
        return self._trusted(self.n, {w: c * scalar for w, c in self.terms.items()})

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        self._same_alphabet(other)
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            out[word] = out.get(word, ZERO) + coeff
        return self._trusted(self.n, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        body = " + ".join(
            f"({c})·{''.join(map(str, w)) if w else '∅'}" for w, c in self.items()
        )
        return f"{type(self).__name__}(N={self.n}, {body or '0'})"


class NCElem(_WordTable):
    """Element of the free algebra: sum of coefficient * u_w."""

    __slots__ = ()

    @classmethod
    def one(cls, n):
        return cls(n, {(): ONE})

    @classmethod
    def monomial(cls, word, n, coeff=ONE):
        return cls(n, {tuple(word): coeff})

    def __mul__(self, other):
        if isinstance(other, NCElem):
            self._same_alphabet(other)
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    word = w1 + w2
                    out[word] = out.get(word, ZERO) + c1 * c2
            return NCElem._trusted(self.n, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


class DualElem(_WordTable):
    """Element of Z[q] (x) U*: a finitely supported function on words."""

    __slots__ = ()

    @classmethod
    def from_words(cls, words, n, coeff=ONE):
        return cls(n, {tuple(w): coeff for w in words})


def _nc_product(factors, n):
    result = NCElem.one(n)
    for factor in factors:
        result = result * factor
        if not result:
            break
    return result


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def nc_e_poset(k, poset):
    """ee^P_k: sum of u_{i_1}...u_{i_k} over chains i_1 >_P ... >_P i_k."""
    if k < 0:
        return NCElem(poset.n)
    if k == 0:
        return NCElem.one(poset.n)
    return NCElem(poset.n, {tuple(reversed(chain)): ONE for chain in chains(poset, k)})


@lru_cache(maxsize=None)
def nc_h_poset(k, poset):
    """hh^P_k from the recursion hh_k = sum_i (-1)^(i-1) ee_i hh_(k-i)."""
    if k < 0:
        return NCElem(poset.n)
    if k == 0:
        return NCElem.one(poset.n)
    total = NCElem(poset.n)
    for i in range(1, k + 1):
        term = nc_e_poset(i, poset) * nc_h_poset(k - i, poset)
        total = total + (term if i % 2 else -term)
    return total


def nc_h_monomial(k, poset):
    """The direct monomial form of hh^P_k: words of length k without P-descents."""
    words = _words_of_length(k, poset.n)
    return NCElem(poset.n, {w: ONE for w in words if has_no_p_descents(w, poset)})


def _words_of_length(k, n):
    if k == 0:
        return [()]
    shorter = _words_of_length(k - 1, n)
    return [w + (letter,) for w in shorter for letter in range(1, n + 1)]


@lru_cache(maxsize=None)
def nc_p_poset(k, poset):
    """pp^P_k = ee_1 hh_(k-1) - 2 ee_2 hh_(k-2) + ... + (-1)^(k-1) k ee_k."""
    total = NCElem(poset.n)
    for i in range(1, k + 1):
        term = (nc_e_poset(i, poset) * nc_h_poset(k - i, poset)).scale(i)
        total = total + (term if i % 2 else -term)
    return total


def nc_schur_poset(partition, poset):
    """Signed sum of ee_{l'_1 + s_1 - 1} ... ee_{l'_m + s_m - m} over permutations s."""
    conj = conjugate(tuple(partition))
    size = len(conj)

    def entry(i, j):
        index = conj[i] + j - i
        return None if index < 0 else index

    total = NCElem(poset.n)
    for sign, indices in signed_permutation_terms(size, entry):
        term = _nc_product([nc_e_poset(i, poset) for i in indices], poset.n)
        total = total + (term if sign > 0 else -term)
    return total


def nc_e(k, n):
    return nc_e_poset(k, NUIO.total_order(n))


def nc_h(k, n):
    return nc_h_poset(k, NUIO.total_order(n))


def nc_p(k, n):
    return nc_p_poset(k, NUIO.total_order(n))


def nc_schur(partition, n):
    return nc_schur_poset(partition, NUIO.total_order(n))


def nc_monomial(partition, n):
    """Monomial form of phi(m_lambda) modulo the commutativity ideal.

    Sum of u_{i_1}^{a_1} ... u_{i_k}^{a_k} over rearrangements a of lambda and
    i_1 < ... < i_k; every word is weakly increasing.
    """
    partition = tuple(partition)
    terms = {}
    for alpha in distinct_permutations(partition):
        for indices in combinations(range(1, n + 1), len(partition)):
            word = tuple(i for i, a in zip(indices, alpha) for _ in range(a))
            terms[word] = ONE
    return NCElem(n, terms)


# ---------------------------------------------------------------------------
# Pairing and F_gamma
# ---------------------------------------------------------------------------

def pairing(z, gamma):
    """<z, gamma> with <u_w, v> = delta_{w,v}."""
    if z.n != gamma.n:
        raise AlphabetError(f"cannot pair alphabet {z.n} with alphabet {gamma.n}")
    small, large = (z, gamma) if len(z.terms) <= len(gamma.terms) else (gamma, z)
    total = ZERO
    for word, coeff in small.terms.items():
        other = large.terms.get(word)
        if other is not None:
            total = total + coeff * other
    return total


def _f_gamma(gamma, descents_of):
    grouped = {}
    for word, coeff in gamma.terms.items():
        key = (len(word), descents_of(word))
        grouped[key] = grouped.get(key, ZERO) + coeff
    result = QSymElem()
    for (length, descents), coeff in sorted(grouped.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1]))):
        if coeff:
            result = result + fundamental_to_monomial(length, descents).scale(coeff)
    logger.debug("F_gamma over %d words collapsed to %d fundamental terms", len(gamma.terms), len(grouped))
    return result


def f_gamma(gamma):
    """F_gamma = sum_w gamma_w F_{|w|, Des(w)}."""
    return _f_gamma(gamma, descent_set)


def f_gamma_poset(gamma, poset):
    """F^P_gamma = sum_w gamma_w F_{|w|, Des_P(w)}."""
    if gamma.n != poset.n:
        raise AlphabetError(f"gamma lives on [{gamma.n}] but the poset on [{poset.n}]")
    return _f_gamma(gamma, lambda word: des_p(word, poset))


def gamma_partition(partition, n):
    """gamma_lambda: the sum of all words in [lambda]."""
    return DualElem.from_words(distinct_permutation_class(tuple(partition), n), n)
