"""Natural unit interval orders and their word statistics.

A natural unit interval order on [N] is stored as its Hessenberg vector
``hess``: i <_P j exactly when hess_i < j.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import PosetError, SkewingError
from .foundation import words_of_content

logger = logging.getLogger(__name__)

DEG_VARIANTS = ("A", "B")


@dataclass(frozen=True)
class NUIO:
    hess: tuple

    def __post_init__(self):
        hess = tuple(int(h) for h in self.hess)
        object.__setattr__(self, "hess", hess)
        n = len(hess)
        for i, h in enumerate(hess, start=1):
            if not i <= h <= n:
                raise PosetError(f"hess_{i} = {h} must lie in [{i}, {n}]")
        if any(hess[i] > hess[i + 1] for i in range(n - 1)):
            raise PosetError(f"Hessenberg vector {hess} is not weakly increasing")
        self._check_axioms()

    @property
    def n(self):
        return len(self.hess)

    @classmethod
    def total_order(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def antichain(cls, n):
        return cls((n,) * n)

    def less(self, a, b):
        return self.hess[a - 1] < b

    def greater(self, a, b):
        return self.less(b, a)

    def comparable(self, a, b):
        return self.less(a, b) or self.less(b, a)

    def incomparable(self, a, b):
        """a ~_P b: equal or incomparable."""
        return not self.comparable(a, b)

    def _check_axioms(self):
        letters = range(1, self.n + 1)
        for a in letters:
            for c in letters:
                if not self.less(a, c):
                    continue
                if not a < c:
                    raise PosetError(f"{a} <_P {c} but {a} >= {c}")
                if self.less(c, a):
                    raise PosetError(f"{a} and {c} are mutually related")
                for b in letters:
                    if self.incomparable(a, b) and self.incomparable(b, c) and not a < b < c:
                        raise PosetError(
                            f"axiom fails for a={a}, b={b}, c={c} in {self.hess}"
                        )
                    if self.less(c, b) and not self.less(a, b):
                        raise PosetError(f"transitivity fails for {a} <_P {c} <_P {b}")

    def __str__(self):
        return ",".join(str(h) for h in self.hess)


def nuio_from_hessenberg(hess):
    return NUIO(tuple(hess))


def all_nuios(n):
    """Every natural unit interval order on [n] (Catalan many)."""
    def build(i, floor):
        if i > n:
            yield ()
            return
        for h in range(max(i, floor), n + 1):
            for rest in build(i + 1, h):
                yield (h,) + rest

    return [NUIO(hess) for hess in build(1, 1)]


def des_p(word, poset):
    return frozenset(
        i + 1 for i in range(len(word) - 1) if poset.greater(word[i], word[i + 1])
    )


def inv_p(word, poset):
    count = 0
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            if word[i] > word[j] and poset.incomparable(word[i], word[j]):
                count += 1
    return count


def is_chain(letters, poset):
    ordered = sorted(letters)
    return all(poset.less(ordered[i], ordered[i + 1]) for i in range(len(ordered) - 1))


@lru_cache(maxsize=None)
def chains(poset, k):
    """k-element chains t_1 <_P ... <_P t_k, as increasing tuples."""
    if k < 1:
        raise SkewingError("chain length must be positive")
    return tuple(
        chain for chain in combinations(range(1, poset.n + 1), k) if is_chain(chain, poset)
    )


def height(poset):
    k = 1
    while chains(poset, k + 1):
        k += 1
    return k if poset.n else 0


def deg_p_letter(letter, beta, poset, variant="B"):
    if variant not in DEG_VARIANTS:
        raise SkewingError(f"unknown deg_P variant {variant!r}")
    total = 0
    for k, count in enumerate(beta, start=1):
        if not count or not poset.incomparable(letter, k):
            continue
        if variant == "B" and k > letter:
            total += count
        elif variant == "A" and k < letter:
            total += count
    return total


def deg_p(letters, beta, poset, variant="B"):
    """deg_P summed over a multiset of letters (an int counts as a singleton)."""
    if isinstance(letters, int):
        letters = (letters,)
    return sum(deg_p_letter(letter, beta, poset, variant) for letter in letters)


def multiset_of(alpha):
    """S_alpha: letter i repeated alpha_i times."""
    return tuple(i for i, count in enumerate(alpha, start=1) for _ in range(count))


def has_no_p_descents(word, poset):
    return not any(poset.greater(word[i], word[i + 1]) for i in range(len(word) - 1))


def has_no_nontrivial_ltr_maxima(word, poset):
    return all(
        any(not poset.greater(word[i], word[j]) for j in range(i))
        for i in range(1, len(word))
    )


def n_words(poset, k, content=None):
    """Words of length k with no P-descents and no nontrivial left-to-right P-maxima."""
    if k < 0:
        raise SkewingError("word length must be nonnegative")
    if content is not None:
        if sum(content) != k:
            return []
        candidates = words_of_content(content)
    else:
        candidates = product(range(1, poset.n + 1), repeat=k)
    return [
        tuple(word) for word in candidates
        if has_no_p_descents(word, poset) and has_no_nontrivial_ltr_maxima(word, poset)
    ]
