"""Chromatic quasisymmetric functions of natural unit interval orders.

omega X_P(x; q, beta) is computed from the word generating function gamma_beta
as F^P_gamma, collected into Sym and expanded in the h basis. The recurrence
verifiers recompute both sides of the e_k^perp and p_k^perp identities from
independently computed h-expansions and keep per-term tables.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType

from .config import DEFAULT_DEG_VARIANT
from .errors import PreconditionError, WeightMismatchError
from .foundation import (
    ONE,
    ZERO,
    QPoly,
    bounded_vectors,
    make_partition,
    normalize_to_partition,
    partition_key,
    partitions,
    vector_sub,
    words_of_content,
)
from .freealg import DualElem, f_gamma_poset, nc_p_poset, pairing
from .poset import DEG_VARIANTS, chains, deg_p, height, inv_p, multiset_of
from .symfun import SymElem, convert, qsym_to_sym, skew_e_on_h, skew_p_on_h

logger = logging.getLogger(__name__)


def _other_variant(variant):
    return "A" if variant == "B" else "B"


def _check_beta(poset, beta):
    beta = tuple(int(b) for b in beta)
    if len(beta) != poset.n:
        raise PreconditionError(f"content vector {beta} has length {len(beta)}, poset has {poset.n} elements")
    if any(b < 0 for b in beta):
        raise PreconditionError(f"content vector {beta} has a negative entry")
    return beta


def _check_variant(variant):
    if variant not in DEG_VARIANTS:
        raise PreconditionError(f"unknown deg_P variant {variant!r}; expected A or B")
    return variant


@dataclass(frozen=True)
class HExpansion:
    """omega X_P(x; q, beta) = sum over lambda of c_lambda(q) h_lambda."""

    beta: tuple
    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        # shared through the h_expansion cache
        object.__setattr__(self, "coefficients", MappingProxyType(dict(self.coefficients)))

    def coefficient(self, partition):
        return self.coefficients.get(tuple(partition), ZERO)

    def items(self):
        return sorted(self.coefficients.items(), key=lambda kv: partition_key(kv[0]))

    def as_sym(self):
        return SymElem("h", self.coefficients)


@dataclass
class RecurrenceReport:
    recurrence: str
    hess: tuple
    beta: tuple
    k: int
    partition: tuple
    variant: str
    lhs: QPoly
    rhs: QPoly
    lhs_terms: list
    rhs_terms: list
    other_rhs: QPoly
    mu: tuple = None
    collapsed: bool = True

    @property
    def holds(self):
        return self.lhs == self.rhs and self.collapsed

    @property
    def variants_agree(self):
        return self.rhs == self.other_rhs


def gamma_beta(poset, beta):
    """gamma_beta: every word of content beta weighted by q^inv_P."""
    beta = _check_beta(poset, beta)
    return DualElem(poset.n, {
        word: QPoly.monomial(inv_p(word, poset)) for word in words_of_content(beta)
    })


def omega_x(poset, beta):
    return f_gamma_poset(gamma_beta(poset, beta), poset)


@lru_cache(maxsize=None)
def _h_expansion(poset, beta):
    sym = qsym_to_sym(omega_x(poset, beta))
    expansion = convert(sym, "h")
    logger.info("h-expansion for hess=%s beta=%s has %d terms", poset, beta, len(expansion.terms))
    return HExpansion(beta, dict(expansion.terms))


def h_expansion(poset, beta):
    """Coefficients c^{P,beta}_lambda(q); raises NotSymmetricError if omega X is not symmetric."""
    return _h_expansion(poset, _check_beta(poset, beta))


def _coefficient_or_zero(poset, beta, partition):
    # omega X vanishes when beta has a negative entry
    if any(b < 0 for b in beta):
        return ZERO
    return h_expansion(poset, beta).coefficient(partition)


def c_via_nc_p(poset, beta):
    """One-row coefficient c^{P,beta}_(d) as <pp^P_d, gamma_beta>."""
    beta = _check_beta(poset, beta)
    d = sum(beta)
    if d == 0:
        return ONE
    return pairing(nc_p_poset(d, poset), gamma_beta(poset, beta))


def _indicator(poset, subset):
    return tuple(1 if i in subset else 0 for i in range(1, poset.n + 1))


def _weight_for(beta, k, partition):
    partition = make_partition(partition)
    if sum(partition) != sum(beta) - k:
        raise WeightMismatchError(
            f"|lambda| = {sum(partition)} but |beta| - k = {sum(beta) - k}"
        )
    return partition


# ---------------------------------------------------------------------------
# e_k^perp
# ---------------------------------------------------------------------------

def _e_rhs(poset, beta, k, partition, variant):
    rows = []
    total = ZERO
    for chain in chains(poset, k):
        rest = vector_sub(beta, _indicator(poset, chain))
        degree = deg_p(chain, rest, poset, variant)
        coeff = _coefficient_or_zero(poset, rest, partition)
        rows.append((chain, degree, coeff))
        total = total + QPoly.monomial(degree) * coeff
    return total, rows


def e_skew_sides(poset, beta, k, variant=DEFAULT_DEG_VARIANT):
    """Both sides of the e_k^perp identity as whole h-basis elements.

    The first is sum_mu c_mu e_k^perp h_mu, the second
    sum_T q^deg_P(T, beta - beta_T) omega X_P(beta - beta_T).
    """
    beta = _check_beta(poset, beta)
    _check_variant(variant)
    if k < 1:
        raise PreconditionError("elementary skewing needs k >= 1")
    lhs = SymElem("h")
    for mu, c in h_expansion(poset, beta).coefficients.items():
        lhs = lhs + skew_e_on_h(k, mu).scale(c)
    rhs = SymElem("h")
    for chain in chains(poset, k):
        rest = vector_sub(beta, _indicator(poset, chain))
        if min(rest) < 0:
            continue
        weight = QPoly.monomial(deg_p(chain, rest, poset, variant))
        rhs = rhs + h_expansion(poset, rest).as_sym().scale(weight)
    return lhs, rhs


def verify_e_recurrence(poset, beta, k, partition, variant=DEFAULT_DEG_VARIANT):
    beta = _check_beta(poset, beta)
    _check_variant(variant)
    if k < 1:
        raise PreconditionError("the e-recurrence needs k >= 1")
    partition = _weight_for(beta, k, partition)
    expansion = h_expansion(poset, beta)

    lhs_terms = []
    lhs = ZERO
    for mu in partitions(sum(beta)):
        for subset in combinations(range(1, len(mu) + 1), k):
            shifted = [part - (1 if i in subset else 0) for i, part in enumerate(mu, start=1)]
            if normalize_to_partition(shifted) == partition:
                coeff = expansion.coefficient(mu)
                lhs_terms.append((mu, subset, coeff))
                lhs = lhs + coeff

    rhs, rhs_terms = _e_rhs(poset, beta, k, partition, variant)
    other_rhs, _ = _e_rhs(poset, beta, k, partition, _other_variant(variant))
    report = RecurrenceReport("e", poset.hess, beta, k, partition, variant,
                              lhs, rhs, lhs_terms, rhs_terms, other_rhs)
    logger.info("e-recurrence hess=%s beta=%s k=%d lambda=%s: %s",
                poset, beta, k, partition, "holds" if report.holds else "FAILS")
    return report


# ---------------------------------------------------------------------------
# p_k^perp
# ---------------------------------------------------------------------------

def _p_rhs(poset, beta, k, partition, variant):
    rows = []
    total = ZERO
    for alpha in bounded_vectors(beta, k):
        rest = vector_sub(beta, alpha)
        degree = deg_p(multiset_of(alpha), rest, poset, variant)
        one_row = h_expansion(poset, alpha).coefficient((k,))
        coeff = h_expansion(poset, rest).coefficient(partition)
        rows.append((alpha, degree, one_row, coeff))
        total = total + QPoly.monomial(degree) * one_row * coeff
    return total, rows


def p_skew_sides(poset, beta, k, variant=DEFAULT_DEG_VARIANT):
    """Both sides of the p_k^perp identity as whole h-basis elements.

    The first is sum_mu c_mu p_k^perp h_mu, the second
    sum_alpha q^deg_P(S_alpha, beta - alpha) c^{P,alpha}_(k) omega X_P(beta - alpha).
    """
    beta = _check_beta(poset, beta)
    _check_variant(variant)
    if k < 1:
        raise PreconditionError("power sum skewing needs k >= 1")
    lhs = SymElem("h")
    for mu, c in h_expansion(poset, beta).coefficients.items():
        lhs = lhs + skew_p_on_h(k, mu).scale(c)
    rhs = SymElem("h")
    for alpha in bounded_vectors(beta, k):
        one_row = h_expansion(poset, alpha).coefficient((k,))
        if not one_row:
            continue
        rest = vector_sub(beta, alpha)
        weight = QPoly.monomial(deg_p(multiset_of(alpha), rest, poset, variant)) * one_row
        rhs = rhs + h_expansion(poset, rest).as_sym().scale(weight)
    return lhs, rhs


def verify_p_recurrence(poset, beta, k, partition, variant=DEFAULT_DEG_VARIANT):
    beta = _check_beta(poset, beta)
    _check_variant(variant)
    if k < 1:
        raise PreconditionError("the p-recurrence needs k >= 1")
    if k > sum(beta):
        # nothing of weight |beta| - k < 0 exists on either side
        partition = tuple(partition)
        return RecurrenceReport("p", poset.hess, beta, k, partition, variant,
                                ZERO, ZERO, [], [], ZERO)
    partition = _weight_for(beta, k, partition)
    expansion = h_expansion(poset, beta)

    lhs_terms = []
    lhs = ZERO
    for mu in partitions(sum(beta)):
        for i, part in enumerate(mu, start=1):
            if part < k:
                continue
            shifted = list(mu)
            shifted[i - 1] -= k
            if normalize_to_partition(shifted) == partition:
                coeff = expansion.coefficient(mu)
                lhs_terms.append((mu, i, coeff))
                lhs = lhs + coeff

    rhs, rhs_terms = _p_rhs(poset, beta, k, partition, variant)
    other_rhs, _ = _p_rhs(poset, beta, k, partition, _other_variant(variant))
    report = RecurrenceReport("p", poset.hess, beta, k, partition, variant,
                              lhs, rhs, lhs_terms, rhs_terms, other_rhs)
    logger.info("p-recurrence hess=%s beta=%s k=%d lambda=%s: %s",
                poset, beta, k, partition, "holds" if report.holds else "FAILS")
    return report


# ---------------------------------------------------------------------------
# Harada-Precup
# ---------------------------------------------------------------------------

def harada_precup(poset, beta, mu, variant=DEFAULT_DEG_VARIANT):
    """c_mu = sum_T q^deg c_lambda with k = h_P and lambda_i = mu_i - 1."""
    mu = make_partition(mu)
    k = height(poset)
    if len(mu) != k:
        raise PreconditionError(f"mu = {mu} has length {len(mu)} but the poset has height {k}")
    partition = normalize_to_partition(part - 1 for part in mu)
    report = verify_e_recurrence(poset, beta, k, partition, variant)
    report.recurrence = "hp"
    report.mu = mu
    report.collapsed = report.lhs == h_expansion(poset, beta).coefficient(mu)
    return report
