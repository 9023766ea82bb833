"""Word congruences for the ideals I_0, I_plac and I_P.

All three ideals are generated by differences of words of equal content, so
an element of U lies in the ideal exactly when its coefficients sum to zero
on every congruence class. Classes are finite (content is preserved), which
turns ideal membership into class enumeration.
"""

import logging
from collections import deque

from .errors import AlphabetError, SkewingError
from .foundation import ZERO, validate_word
from .freealg import DualElem, nc_e, nc_e_poset
from .tableaux import column_word, rsk_p_tableau

logger = logging.getLogger(__name__)

KINDS = ("content", "plactic", "unit-interval")


class WordCongruence:
    """One of the three congruences, with memoized class representatives."""

    def __init__(self, kind, n, poset=None):
        if kind not in KINDS:
            raise SkewingError(f"unknown congruence {kind!r}; expected one of {', '.join(KINDS)}")
        if kind == "unit-interval":
            if poset is None:
                raise SkewingError("the unit-interval congruence needs a poset")
            if poset.n != n:
                raise AlphabetError(f"poset on [{poset.n}] used with alphabet [{n}]")
        self.kind = kind
        self.n = n
        self.poset = poset
        self._rep = {}
        self._members = {}

    @classmethod
    def content(cls, n):
        return cls("content", n)

    @classmethod
    def plactic(cls, n):
        return cls("plactic", n)

    @classmethod
    def unit_interval(cls, poset):
        return cls("unit-interval", poset.n, poset)

    def __repr__(self):
        extra = f", hess={self.poset}" if self.poset is not None else ""
        return f"WordCongruence({self.kind!r}, N={self.n}{extra})"

    def moves(self, word):
        """Words reachable from ``word`` by one generator move."""
        if self.kind == "content":
            for i in range(len(word) - 1):
                if word[i] != word[i + 1]:
                    yield word[:i] + (word[i + 1], word[i]) + word[i + 2:]
        elif self.kind == "plactic":
            yield from _knuth_moves(word)
        else:
            yield from _unit_interval_moves(word, self.poset)

    def _closure(self, word):
        seen = {word}
        queue = deque([word])
        while queue:
            current = queue.popleft()
            for neighbour in self.moves(current):
                if neighbour not in seen:
                    seen.add(neighbour)
                    queue.append(neighbour)
        return frozenset(seen)

    def classify(self, word):
        """Canonical representative of the class of ``word``."""
        word = validate_word(word, self.n)
        if self.kind == "content":
            return tuple(sorted(word))
        if self.kind == "plactic":
            return column_word(rsk_p_tableau(word))
        rep = self._rep.get(word)
        if rep is None:
            members = self._closure(word)
            rep = min(members)
            for member in members:
                self._rep[member] = rep
            self._members[rep] = members
        return rep

    def class_members(self, word):
        rep = self.classify(word)
        members = self._members.get(rep)
        if members is None:
            members = self._closure(rep)
            self._members[rep] = members
            logger.debug("%s class of %s has %d words", self.kind, rep, len(members))
        return members


def _knuth_moves(word):
    for i in range(len(word) - 2):
        x, y, z = word[i:i + 3]
        head, tail = word[:i], word[i + 3:]
        # acb <-> cab for a <= b < c
        if x <= z < y or y <= z < x:
            yield head + (y, x, z) + tail
        # bac <-> bca for a < b <= c
        if y < x <= z or z < x <= y:
            yield head + (x, z, y) + tail


def _unit_interval_moves(word, poset):
    for i in range(len(word) - 1):
        if poset.comparable(word[i], word[i + 1]):
            yield word[:i] + (word[i + 1], word[i]) + word[i + 2:]
    for i in range(len(word) - 2):
        x, y, z = word[i:i + 3]
        head, tail = word[:i], word[i + 3:]
        # bac -> acb with a ~ b, b ~ c, a <_P c
        if poset.less(y, z) and poset.incomparable(y, x) and poset.incomparable(x, z):
            yield head + (y, z, x) + tail
        # acb -> bac
        if poset.less(x, y) and poset.incomparable(x, z) and poset.incomparable(z, y):
            yield head + (z, x, y) + tail


def classify(word, congruence):
    return congruence.classify(word)


def class_members(word, congruence):
    return congruence.class_members(word)


def in_ideal(z, congruence):
    """True iff the coefficients of z sum to zero on every class."""
    if z.n != congruence.n:
        raise AlphabetError(f"element on [{z.n}] tested against congruence on [{congruence.n}]")
    sums = {}
    for word, coeff in z.terms.items():
        rep = congruence.classify(word)
        sums[rep] = sums.get(rep, ZERO) + coeff
    return not any(sums.values())


def in_perp(gamma, congruence):
    """True iff gamma is constant on each class meeting its support."""
    if gamma.n != congruence.n:
        raise AlphabetError(f"dual element on [{gamma.n}] tested against congruence on [{congruence.n}]")
    checked = set()
    for word, coeff in gamma.terms.items():
        rep = congruence.classify(word)
        if rep in checked:
            continue
        checked.add(rep)
        for member in congruence.class_members(word):
            if gamma.coefficient(member) != coeff:
                logger.info("gamma differs on %s and %s", word, member)
                return False
    return True


def check_commutation(congruence, kmax, lmax):
    """Certify ee_k ee_l = ee_l ee_k modulo the congruence for k <= kmax, l <= lmax."""
    def generator(k):
        if congruence.kind == "unit-interval":
            return nc_e_poset(k, congruence.poset)
        return nc_e(k, congruence.n)

    for k in range(1, kmax + 1):
        for l in range(1, lmax + 1):
            if l == k:
                continue
            commutator = generator(k) * generator(l) - generator(l) * generator(k)
            if not in_ideal(commutator, congruence):
                logger.warning("commutation fails for k=%d, l=%d in %r", k, l, congruence)
                return False
    return True


def gamma_tableau(tableau, n):
    """gamma_T: the sum of all words w with P(w) = T."""
    congruence = WordCongruence.plactic(n)
    return DualElem.from_words(congruence.class_members(column_word(tableau)), n)
