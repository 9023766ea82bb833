"""Exact scalars and the basic combinatorial objects everything else is built on.

Partitions, compositions, words and integer vectors are plain tuples of ints;
the helpers here validate and manipulate them. ``QPoly`` is the one scalar
type used by every sparse table in the package.
"""

import math
from fractions import Fraction
from functools import lru_cache

from more_itertools import distinct_permutations

from .errors import AlphabetError, SkewingError


class QPoly:
    """Polynomial in q with rational coefficients and nonnegative exponents."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = {0: coeffs}
        cleaned = {}
        for exp, value in coeffs.items():
            if exp < 0:
                raise SkewingError(f"negative q-exponent {exp}")
            value = Fraction(value)
            if value:
                cleaned[int(exp)] = value
        self._coeffs = cleaned

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other)
        return NotImplemented

    def items(self):
        """(exponent, coefficient) pairs sorted by exponent."""
        return sorted(self._coeffs.items())

    def coefficient(self, exp):
        return self._coeffs.get(exp, Fraction(0))

    def degree(self):
        """Largest exponent; -1 for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else -1

    def at_one(self):
        return sum(self._coeffs.values(), Fraction(0))

    def evaluate(self, q):
        return sum((c * q ** e for e, c in self._coeffs.items()), Fraction(0))

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self):
        return QPoly({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other):
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        pieces = []
        for exp, coeff in sorted(self._coeffs.items(), reverse=True):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            else:
                var = "q" if exp == 1 else f"q^{exp}"
                body = var if mag == 1 else f"{mag}*{var}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


ZERO = QPoly()
ONE = QPoly(1)
Q = QPoly.monomial(1)


def qpoly_mul(a, b):
    return a * b


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------

def is_partition(parts):
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def make_partition(parts):
    """Validate ``parts`` and return it as a tuple."""
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise SkewingError(f"{parts} is not a partition")
    return parts


def conjugate(partition):
    if not partition:
        return ()
    return tuple(
        sum(1 for part in partition if part >= j) for j in range(1, partition[0] + 1)
    )


def normalize_to_partition(values):
    """Drop zeros and sort; ``None`` stands for the zero function (a negative entry)."""
    values = tuple(values)
    if any(v < 0 for v in values):
        return None
    return tuple(sorted((v for v in values if v), reverse=True))


def partition_key(partition):
    """Sort key: weight first, then descending lexicographic order."""
    return (sum(partition), tuple(-p for p in partition))


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of ``n`` in descending lexicographic order."""
    if n == 0:
        return ((),)

    def build(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in build(remaining - first, first):
                yield (first,) + rest

    return tuple(build(n, n))


def contains(outer, inner):
    """True iff the diagram of ``inner`` fits inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(m <= l for l, m in zip(outer, inner))


def z_lambda(partition):
    counts = {}
    for part in partition:
        counts[part] = counts.get(part, 0) + 1
    value = 1
    for part, mult in counts.items():
        value *= part ** mult * math.factorial(mult)
    return value


def multinomial(parts):
    value = math.factorial(sum(parts))
    for part in parts:
        value //= math.factorial(part)
    return value


# ---------------------------------------------------------------------------
# Compositions
# ---------------------------------------------------------------------------

def composition_from_descents(descents, length):
    """The composition of ``length`` whose partial sums are ``descents``."""
    cuts = sorted(descents)
    parts = []
    previous = 0
    for cut in cuts + [length]:
        parts.append(cut - previous)
        previous = cut
    if length == 0:
        return ()
    return tuple(parts)


def descents_of_composition(composition):
    total = 0
    out = []
    for part in composition[:-1]:
        total += part
        out.append(total)
    return frozenset(out)


def compositions_of(n):
    """All compositions of ``n``, generated from their descent sets."""
    if n == 0:
        return [()]
    out = []
    for mask in range(1 << (n - 1)):
        cuts = [i + 1 for i in range(n - 1) if mask >> i & 1]
        out.append(composition_from_descents(cuts, n))
    return out


# ---------------------------------------------------------------------------
# Words and integer vectors
# ---------------------------------------------------------------------------

def validate_word(word, n):
    word = tuple(int(letter) for letter in word)
    for letter in word:
        if not 1 <= letter <= n:
            raise AlphabetError(f"letter {letter} outside [1, {n}]")
    return word


def descent_set(word):
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def content(word, n):
    counts = [0] * n
    for letter in word:
        counts[letter - 1] += 1
    return tuple(counts)


def words_of_content(vector):
    """All words with ``vector[i-1]`` copies of letter i, in lexicographic order."""
    letters = []
    for index, count in enumerate(vector):
        if count < 0:
            raise SkewingError(f"negative entry in content {tuple(vector)}")
        letters.extend([index + 1] * count)
    return [tuple(w) for w in distinct_permutations(letters)]


def distinct_permutation_class(partition, n):
    """The word class [lambda]: lambda_i copies of letter i, all orders."""
    if len(partition) > n:
        raise AlphabetError(f"partition {partition} needs {len(partition)} letters, alphabet has {n}")
    return words_of_content(partition)


def vector_leq(alpha, beta):
    return all(a <= b for a, b in zip(alpha, beta))


def vector_sub(alpha, beta):
    return tuple(a - b for a, b in zip(alpha, beta))


def bounded_vectors(beta, total):
    """Every alpha <= beta (entrywise, nonnegative) with |alpha| = total."""
    def build(index, remaining):
        if index == len(beta):
            if remaining == 0:
                yield ()
            return
        for value in range(min(beta[index], remaining) + 1):
            for rest in build(index + 1, remaining - value):
                yield (value,) + rest

    return list(build(0, total))


def signed_permutation_terms(size, entry):
    """Expand a size x size determinant sparsely.

    ``entry(i, j)`` returns the (i, j) entry or ``None`` when it vanishes.
    Yields ``(sign, [entry(0, s0), entry(1, s1), ...])`` for every permutation
    whose entries are all nonzero.
    """
    def expand(row, used, sign, picked):
        if row == size:
            yield sign, list(picked)
            return
        for col in range(size):
            if col in used:
                continue
            value = entry(row, col)
            if value is None:
                continue
            # parity of the inversions contributed by placing col after used columns
            flips = sum(1 for c in used if c > col)
            picked.append(value)
            used.add(col)
            yield from expand(row + 1, used, -sign if flips % 2 else sign, picked)
            used.discard(col)
            picked.pop()

    yield from expand(0, set(), 1, [])


def as_qpoly(value):
    """Coerce an int, Fraction or QPoly into a QPoly."""
    coerced = QPoly._coerce(value)
    if coerced is NotImplemented:
        raise SkewingError(f"cannot use {value!r} as a scalar")
    return coerced
