"""Symmetric and quasisymmetric functions over Q[q].

Every symmetric function is stored in one of the bases m, e, h, p, s. All
basis changes go through the monomial basis:

* e, h and p elements are expanded as products of their generators' monomial
  expansions; the way back is an exact per-weight matrix inverse (sympy).
* s elements go to e by the dual Jacobi-Trudi determinant; the way back reads
  coefficients off the Hall inner product, since Schur functions are
  orthonormal.

Transition tables are memoized per partition or per (basis, weight). The
caches only ever hold values that a fresh computation would reproduce.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

import sympy
from more_itertools import distinct_permutations

from .errors import ContainmentError, NotSymmetricError, SkewingError
from .foundation import (
    ONE,
    ZERO,
    QPoly,
    as_qpoly,
    bounded_vectors,
    composition_from_descents,
    conjugate,
    contains,
    normalize_to_partition,
    partition_key,
    partitions,
    signed_permutation_terms,
)

logger = logging.getLogger(__name__)

BASES = ("m", "e", "h", "p", "s")
MULTIPLICATIVE = ("e", "h", "p")


def _check_basis(basis):
    if basis not in BASES:
        raise SkewingError(f"unknown basis {basis!r}; expected one of {', '.join(BASES)}")
    return basis


def _accumulate(target, key, value):
    total = target.get(key, ZERO) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class SymElem:
    """A symmetric function as a sparse table partition -> QPoly in one basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=None):
        self.basis = _check_basis(basis)
        cleaned = {}
        for partition, coeff in (terms or {}).items():
            coeff = as_qpoly(coeff)
            if coeff:
                cleaned[tuple(partition)] = coeff
        self.terms = cleaned

    @classmethod
    def basis_element(cls, basis, partition, coeff=ONE):
        return cls(basis, {tuple(partition): coeff})

    @classmethod
    def zero(cls, basis="m"):
        return cls(basis)

    def coefficient(self, partition):
        return self.terms.get(tuple(partition), ZERO)

    def items(self):
        """Terms in serialization order: by weight, then descending lex."""
        return sorted(self.terms.items(), key=lambda kv: partition_key(kv[0]))

    def degree(self):
        return max((sum(p) for p in self.terms), default=-1)

    def homogeneous_components(self):
        components = {}
        for partition, coeff in self.terms.items():
            components.setdefault(sum(partition), {})[partition] = coeff
        return {w: SymElem(self.basis, t) for w, t in sorted(components.items())}

    def to(self, basis):
        return convert(self, basis)

    def scale(self, scalar):
        scalar = as_qpoly(scalar)
        return SymElem(self.basis, {p: c * scalar for p, c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, SymElem):
            return NotImplemented
        other = convert(other, self.basis)
        out = dict(self.terms)
        for partition, coeff in other.terms.items():
            _accumulate(out, partition, coeff)
        return SymElem(self.basis, out)

    def __neg__(self):
        return self.scale(QPoly(-1))

    def __sub__(self, other):
        if not isinstance(other, SymElem):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymElem):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, QPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QPoly)):
            other = SymElem(self.basis, {(): other})
        if not isinstance(other, SymElem):
            return NotImplemented
        return self.terms == convert(other, self.basis).terms

    __hash__ = None

    def __repr__(self):
        return f"SymElem({self.basis!r}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for partition, coeff in self.items():
            label = f"{self.basis}_{{{','.join(map(str, partition))}}}" if partition else "1"
            pieces.append(f"({coeff})·{label}" if partition else f"({coeff})")
        return " + ".join(pieces)


class QSymElem:
    """Quasisymmetric function in the monomial basis M_alpha."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for composition, coeff in (terms or {}).items():
            coeff = as_qpoly(coeff)
            if coeff:
                cleaned[tuple(composition)] = coeff
        self.terms = cleaned

    def coefficient(self, composition):
        return self.terms.get(tuple(composition), ZERO)

    def scale(self, scalar):
        scalar = as_qpoly(scalar)
        return QSymElem({a: c * scalar for a, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, QSymElem):
            return NotImplemented
        out = dict(self.terms)
        for composition, coeff in other.terms.items():
            _accumulate(out, composition, coeff)
        return QSymElem(out)

    def __sub__(self, other):
        if not isinstance(other, QSymElem):
            return NotImplemented
        return self + other.scale(QPoly(-1))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, QSymElem):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        body = " + ".join(
            f"({c})·M_{{{','.join(map(str, a))}}}"
            for a, c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        )
        return f"QSymElem({body or '0'})"


# ---------------------------------------------------------------------------
# Monomial expansions of the multiplicative bases
# ---------------------------------------------------------------------------

def _generator_m(kind, k):
    # expand the defining sum in k variables; the coefficient of m_lambda is
    # the coefficient of x^lambda, which k variables already see
    variables = range(k)
    if kind == "e":
        sequences = combinations(variables, k)
    elif kind == "h":
        sequences = combinations_with_replacement(variables, k)
    else:
        sequences = ((i,) * k for i in variables)
    out = {}
    for seq in sequences:
        exps = [0] * k
        for i in seq:
            exps[i] += 1
        if all(exps[i] >= exps[i + 1] for i in range(k - 1)):
            partition = tuple(e for e in exps if e)
            out[partition] = out.get(partition, 0) + 1
    return {p: Fraction(c) for p, c in out.items()}


def generator_to_monomial(kind, k):
    """m-basis expansion of e_k, h_k or p_k."""
    if kind not in MULTIPLICATIVE:
        raise SkewingError(f"generators exist only for e, h, p, not {kind!r}")
    if k < 1:
        raise SkewingError("generator index must be positive")
    return SymElem("m", {p: QPoly(c) for p, c in _generator_m(kind, k).items()})


def _m_product(f, g, weight_f, weight_g):
    """Product of two homogeneous m-expansions with Fraction coefficients."""
    out = {}
    for target in partitions(weight_f + weight_g):
        total = Fraction(0)
        # coefficient of x^target: split the exponent vector between f and g
        for alpha in bounded_vectors(target, weight_f):
            left = f.get(normalize_to_partition(alpha))
            if left is None:
                continue
            right = g.get(normalize_to_partition(tuple(t - a for t, a in zip(target, alpha))))
            if right is None:
                continue
            total += left * right
        if total:
            out[target] = total
    return out


@lru_cache(maxsize=None)
def _generator_table(kind, k):
    return _generator_m(kind, k)


@lru_cache(maxsize=None)
def _to_m(basis, partition):
    if basis == "m":
        return {partition: Fraction(1)}
    if basis == "s":
        out = {}
        for nu, sign in _jacobi_trudi(partition).items():
            for mu, c in _to_m("e", nu).items():
                out[mu] = out.get(mu, 0) + sign * c
        return {mu: c for mu, c in out.items() if c}
    if not partition:
        return {(): Fraction(1)}
    # peel off the last part so the cache reuses shorter products
    head = partition[:-1]
    last = partition[-1]
    return _m_product(_to_m(basis, head), _generator_table(basis, last), sum(head), last)


@lru_cache(maxsize=None)
def _inverse_transition(basis, n):
    parts = partitions(n)
    index = {p: i for i, p in enumerate(parts)}
    matrix = sympy.zeros(len(parts), len(parts))
    for i, lam in enumerate(parts):
        for mu, c in _to_m(basis, lam).items():
            matrix[i, index[mu]] = sympy.Rational(c.numerator, c.denominator)
    logger.info("inverting %s->m transition matrix at weight %d (%d x %d)", basis, n, len(parts), len(parts))
    inverse = matrix.inv()
    table = {}
    for i, mu in enumerate(parts):
        row = {}
        for j, lam in enumerate(parts):
            value = inverse[i, j]
            if value != 0:
                row[lam] = Fraction(int(value.p), int(value.q))
        table[mu] = row
    return table


@lru_cache(maxsize=None)
def _schur_in_h(partition):
    out = {}
    for mu, c in _to_m("s", partition).items():
        for lam, d in _from_m("h", mu).items():
            out[lam] = out.get(lam, 0) + c * d
    return {lam: c for lam, c in out.items() if c}


@lru_cache(maxsize=None)
def _from_m(basis, partition):
    if basis == "m":
        return {partition: Fraction(1)}
    if basis == "s":
        # <m_mu, s_lambda> is the h_mu coefficient of s_lambda
        out = {}
        for lam in partitions(sum(partition)):
            value = _schur_in_h(lam).get(partition)
            if value:
                out[lam] = value
        return out
    return _inverse_transition(basis, sum(partition))[partition]


def _apply(terms, table_fn, basis):
    out = {}
    for partition, coeff in terms.items():
        for target, c in table_fn(basis, partition).items():
            _accumulate(out, target, coeff * c)
    return out


def convert(f, target):
    """Re-express ``f`` in the ``target`` basis."""
    _check_basis(target)
    if f.basis == target:
        return f
    monomial = f.terms if f.basis == "m" else _apply(f.terms, _to_m, f.basis)
    if target == "m":
        return SymElem("m", monomial)
    return SymElem(target, _apply(monomial, _from_m, target))


def multiply(f, g, basis=None):
    """Product in Sym, computed by concatenating e-basis indices."""
    fe = convert(f, "e")
    ge = convert(g, "e")
    out = {}
    for lam, a in fe.terms.items():
        for mu, b in ge.terms.items():
            _accumulate(out, tuple(sorted(lam + mu, reverse=True)), a * b)
    return convert(SymElem("e", out), basis or f.basis)


def hall_inner(f, g):
    """Hall inner product, pairing the m-expansion of f with the h-expansion of g."""
    fm = convert(f, "m")
    gh = convert(g, "h")
    total = ZERO
    for partition, coeff in fm.terms.items():
        other = gh.terms.get(partition)
        if other is not None:
            total = total + coeff * other
    return total


@lru_cache(maxsize=None)
def _times_monomial_in_h(basis, nu, lam):
    """h-expansion of b_nu * m_lambda, with Fraction coefficients."""
    product = multiply(SymElem.basis_element(basis, nu), SymElem.basis_element("m", lam), basis="h")
    return {mu: c.coefficient(0) for mu, c in product.terms.items()}


def skew(a, f, basis="h"):
    """The skewing operator a^perp applied to f.

    Computed in the h basis as the sum over lambda of <f, a * m_lambda> h_lambda,
    since m and h are dual; pairs with deg a > deg f contribute nothing.
    """
    out = {}
    f_parts = {w: convert(piece, "m") for w, piece in f.homogeneous_components().items()}
    for nu, coeff in a.terms.items():
        for j, f_piece in f_parts.items():
            if j < sum(nu):
                continue
            for lam in partitions(j - sum(nu)):
                kernel = _times_monomial_in_h(a.basis, nu, lam)
                value = ZERO
                for mu, c in f_piece.terms.items():
                    k = kernel.get(mu)
                    if k:
                        value = value + c * k
                if value:
                    _accumulate(out, lam, coeff * value)
    return convert(SymElem("h", out), basis)


def skew_e_on_h(k, partition):
    """e_k^perp h_lambda as the sum of h_{lambda - eps_S} over k-subsets S."""
    out = {}
    for subset in combinations(range(len(partition)), k):
        shifted = list(partition)
        for i in subset:
            shifted[i] -= 1
        target = normalize_to_partition(shifted)
        if target is not None:
            _accumulate(out, target, ONE)
    return SymElem("h", out)


def skew_p_on_h(k, partition):
    """p_k^perp h_lambda as the sum of h_{lambda - k eps_i}."""
    if k < 1:
        raise SkewingError("power sum index must be positive")
    out = {}
    for i in range(len(partition)):
        shifted = list(partition)
        shifted[i] -= k
        target = normalize_to_partition(shifted)
        if target is not None:
            _accumulate(out, target, ONE)
    return SymElem("h", out)


@lru_cache(maxsize=None)
def _jacobi_trudi(partition):
    conj = conjugate(partition)
    size = len(conj)

    def entry(i, j):
        index = conj[i] + j - i
        return None if index < 0 else index

    out = {}
    for sign, indices in signed_permutation_terms(size, entry):
        nu = tuple(sorted((x for x in indices if x), reverse=True))
        out[nu] = out.get(nu, 0) + sign
    return {nu: c for nu, c in out.items() if c}


def schur_via_jacobi_trudi(partition):
    """s_lambda in the e basis: det(e_{lambda'_i + j - i}) of size lambda_1."""
    return SymElem("e", {nu: QPoly(c) for nu, c in _jacobi_trudi(tuple(partition)).items()})


def skew_schur_det(outer, inner):
    """s_{lambda/mu} in the e basis: det(e_{lambda'_i - mu'_j - i + j})."""
    outer, inner = tuple(outer), tuple(inner)
    if not contains(outer, inner):
        raise ContainmentError(f"{inner} is not contained in {outer}")
    conj_outer = conjugate(outer)
    size = len(conj_outer)
    conj_inner = conjugate(inner) + (0,) * size

    def entry(i, j):
        index = conj_outer[i] - conj_inner[j] - i + j
        return None if index < 0 else index

    out = {}
    for sign, indices in signed_permutation_terms(size, entry):
        nu = tuple(sorted((x for x in indices if x), reverse=True))
        _accumulate(out, nu, QPoly(sign))
    return SymElem("e", out)


def fundamental_to_monomial(length, descents):
    """F_{d,S} as the sum of M_{comp(T,d)} over T containing S."""
    descents = frozenset(descents)
    if any(not 1 <= i < length for i in descents):
        raise SkewingError(f"descent set {sorted(descents)} not inside [1, {length - 1}]")
    free = [i for i in range(1, length) if i not in descents]
    terms = {}
    for size in range(len(free) + 1):
        for extra in combinations(free, size):
            terms[composition_from_descents(descents | set(extra), length)] = ONE
    return QSymElem(terms)


def is_symmetric(qsym):
    seen = set()
    for composition, coeff in qsym.terms.items():
        partition = tuple(sorted(composition, reverse=True))
        if partition in seen:
            continue
        seen.add(partition)
        for rearranged in distinct_permutations(partition):
            if qsym.coefficient(rearranged) != coeff:
                return False
    return True


def qsym_to_sym(qsym):
    """Collect a symmetric quasisymmetric function into the m basis."""
    if not is_symmetric(qsym):
        raise NotSymmetricError("quasisymmetric function is not symmetric")
    return SymElem("m", {
        composition: coeff
        for composition, coeff in qsym.terms.items()
        if all(composition[i] >= composition[i + 1] for i in range(len(composition) - 1))
    })


def sym_to_qsym(f):
    """Expand a symmetric function into monomial quasisymmetric functions."""
    out = {}
    for partition, coeff in convert(f, "m").terms.items():
        for composition in distinct_permutations(partition):
            out[tuple(composition)] = coeff
    return QSymElem(out)
