"""Littlewood-Richardson coefficients computed three independent ways.

* classical: <s_mu s_nu, s_lambda>
* skew: the s_nu coefficient of s_mu^perp s_lambda, cross-checked against the
  skew Schur determinant
* plactic: count the words in the plactic class of a fixed tableau of shape
  lambda that split into a tableau word of shape mu followed by one of shape nu
"""

import logging

from .congruence import WordCongruence
from .errors import AlphabetError, PreconditionError, SkewingError, WeightMismatchError
from .foundation import contains, make_partition
from .symfun import SymElem, convert, hall_inner, multiply, skew, skew_schur_det
from .tableaux import column_word, superstandard_tableau, tableau_word_shape

logger = logging.getLogger(__name__)

METHODS = ("classical", "skew", "plactic")


def check_weights(lam, mu, nu):
    lam, mu, nu = make_partition(lam), make_partition(mu), make_partition(nu)
    if sum(mu) + sum(nu) != sum(lam):
        raise WeightMismatchError(f"|mu| + |nu| = {sum(mu) + sum(nu)} but |lambda| = {sum(lam)}")
    return lam, mu, nu


def lr_classical(lam, mu, nu):
    lam, mu, nu = check_weights(lam, mu, nu)
    product = multiply(SymElem.basis_element("s", mu), SymElem.basis_element("s", nu))
    return hall_inner(product, SymElem.basis_element("s", lam))


def lr_skew_expansion(lam, mu, check=True):
    """s_mu^perp s_lambda in the s basis; zero when mu is not inside lambda."""
    lam, mu = make_partition(lam), make_partition(mu)
    result = convert(skew(SymElem.basis_element("s", mu), SymElem.basis_element("s", lam)), "s")
    if not contains(lam, mu):
        if result:
            raise SkewingError(f"s_{mu}^perp s_{lam} should vanish but is {result}")
        return SymElem("s")
    if check:
        determinant = convert(skew_schur_det(lam, mu), "s")
        if determinant != result:
            logger.error("skew Schur mismatch for %s/%s: %s vs %s", lam, mu, result, determinant)
            raise SkewingError(f"adjoint and determinant disagree on s_{lam}/{mu}")
    return result


def lr_plactic(lam, mu, nu, n=None, tableau=None):
    """Count w with P(w) = T, w = w'w'', col-shape(w') = mu and col-shape(w'') = nu."""
    lam, mu, nu = check_weights(lam, mu, nu)
    if n is None:
        n = max(sum(lam), len(lam))
    if len(lam) > n:
        raise AlphabetError(f"shape {lam} needs at least {len(lam)} letters, alphabet has {n}")
    if tableau is None:
        tableau = superstandard_tableau(lam)
    elif tableau.shape != lam:
        raise PreconditionError(f"tableau {tableau} has shape {tableau.shape}, expected {lam}")
    if any(x > n for row in tableau.rows for x in row):
        raise AlphabetError(f"tableau {tableau} has entries beyond {n}")

    members = WordCongruence.plactic(n).class_members(column_word(tableau))
    split = sum(mu)
    count = sum(
        1 for word in members
        if tableau_word_shape(word[:split]) == mu and tableau_word_shape(word[split:]) == nu
    )
    logger.debug("plactic class of %s: %d words, %d split as %s|%s", tableau, len(members), count, mu, nu)
    return count


def lr_all(lam, mu, nu):
    """Coefficient from every method, as integers keyed by method name."""
    lam, mu, nu = check_weights(lam, mu, nu)
    classical = lr_classical(lam, mu, nu)
    via_skew = lr_skew_expansion(lam, mu).coefficient(nu)
    return {
        "classical": int(classical.coefficient(0)),
        "skew": int(via_skew.coefficient(0)),
        "plactic": lr_plactic(lam, mu, nu),
    }
