"""JSON serialization for symmetric functions, h-expansions and recurrence reports.

A coefficient in Q[q] is written as a list of ``[exponent, "p/q"]`` pairs sorted
by exponent; rationals use ``str(Fraction)``, so integers carry no denominator.
``dumps`` always produces the same bytes for equal inputs.
"""

import json
import re
from fractions import Fraction

from .errors import ParseError
from .foundation import QPoly, is_partition
from .symfun import BASES, SymElem

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def dumps(payload):
    return json.dumps(payload, ensure_ascii=False) + "\n"


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e


# ---------------------------------------------------------------------------
# Coefficients
# ---------------------------------------------------------------------------

def qpoly_to_json(poly):
    return [[exp, str(coeff)] for exp, coeff in poly.items()]


def qpoly_from_json(data):
    if not isinstance(data, list):
        raise ParseError(f"coefficient must be a list of [exponent, rational] pairs, got {data!r}")
    coeffs = {}
    for pair in data:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError(f"malformed coefficient entry {pair!r}")
        exp, rational = pair
        if not isinstance(exp, int) or isinstance(exp, bool) or exp < 0:
            raise ParseError(f"exponent must be a nonnegative integer, got {exp!r}")
        if not isinstance(rational, str) or not _RATIONAL.fullmatch(rational):
            raise ParseError(f"rational must be a string like \"p/q\", got {rational!r}")
        try:
            value = Fraction(rational)
        except ZeroDivisionError as e:
            raise ParseError(f"zero denominator in {rational!r}") from e
        if exp in coeffs:
            raise ParseError(f"exponent {exp} listed twice")
        coeffs[exp] = value
    return QPoly(coeffs)


def _partition_from_json(data):
    if not (isinstance(data, list) and all(isinstance(p, int) and not isinstance(p, bool) for p in data)):
        raise ParseError(f"partition must be a list of integers, got {data!r}")
    if not is_partition(data):
        raise ParseError(f"{data} is not a partition")
    return tuple(data)


# ---------------------------------------------------------------------------
# SymJson
# ---------------------------------------------------------------------------

def sym_to_json(f):
    return {
        "basis": f.basis,
        "terms": [
            {"part": list(partition), "coef": qpoly_to_json(coeff)}
            for partition, coeff in f.items()
        ],
    }


def sym_from_json(data):
    if not isinstance(data, dict) or set(data) != {"basis", "terms"}:
        raise ParseError("a symmetric function needs exactly the keys 'basis' and 'terms'")
    basis = data["basis"]
    if basis not in BASES:
        raise ParseError(f"unknown basis {basis!r}")
    if not isinstance(data["terms"], list):
        raise ParseError("'terms' must be a list")
    terms = {}
    for term in data["terms"]:
        if not isinstance(term, dict) or set(term) != {"part", "coef"}:
            raise ParseError(f"malformed term {term!r}")
        partition = _partition_from_json(term["part"])
        if partition in terms:
            raise ParseError(f"partition {list(partition)} listed twice")
        terms[partition] = qpoly_from_json(term["coef"])
    return SymElem(basis, terms)


def dump_sym(f):
    return dumps(sym_to_json(f))


def load_sym(text):
    return sym_from_json(loads(text))


# ---------------------------------------------------------------------------
# Chromatic output
# ---------------------------------------------------------------------------

def h_expansion_to_json(poset, expansion):
    return {
        "hess": list(poset.hess),
        "beta": list(expansion.beta),
        "coefficients": [
            {"part": list(partition), "coef": qpoly_to_json(coeff)}
            for partition, coeff in expansion.items()
        ],
    }


def coefficient_to_json(poset, beta, partition, coeff):
    return {
        "hess": list(poset.hess),
        "beta": list(beta),
        "part": list(partition),
        "coef": qpoly_to_json(coeff),
    }


def _lhs_term_to_json(recurrence, term):
    mu, where, coeff = term
    if recurrence == "p":
        return {"mu": list(mu), "row": where, "c": qpoly_to_json(coeff)}
    return {"mu": list(mu), "subset": list(where), "c": qpoly_to_json(coeff)}


def _rhs_term_to_json(recurrence, term):
    if recurrence == "p":
        alpha, degree, one_row, coeff = term
        return {
            "alpha": list(alpha),
            "deg": degree,
            "c_k": qpoly_to_json(one_row),
            "c": qpoly_to_json(coeff),
        }
    chain, degree, coeff = term
    return {"chain": list(chain), "deg": degree, "c": qpoly_to_json(coeff)}


def report_to_json(report):
    payload = {
        "recurrence": report.recurrence,
        "hess": list(report.hess),
        "beta": list(report.beta),
        "k": report.k,
        "lambda": list(report.partition),
    }
    if report.mu is not None:
        payload["mu"] = list(report.mu)
    payload.update({
        "variant": report.variant,
        "lhs": qpoly_to_json(report.lhs),
        "rhs": qpoly_to_json(report.rhs),
        "holds": report.holds,
        "other_variant_rhs": qpoly_to_json(report.other_rhs),
        "variants_agree": report.variants_agree,
        "lhs_terms": [_lhs_term_to_json(report.recurrence, t) for t in report.lhs_terms],
        "rhs_terms": [_rhs_term_to_json(report.recurrence, t) for t in report.rhs_terms],
    })
    return payload


# ---------------------------------------------------------------------------
# Command-line values
# ---------------------------------------------------------------------------

def parse_int_list(text, name="value"):
    """'2,1' -> (2, 1); the empty string is the empty tuple."""
    text = (text or "").strip()
    if not text:
        return ()
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError as e:
        raise ParseError(f"{name} must be a comma-separated list of integers, got {text!r}") from e


def parse_partition(text, name="partition"):
    parts = parse_int_list(text, name)
    if not is_partition(parts):
        raise ParseError(f"{name} {text!r} is not a partition")
    return parts


def parse_operator(text):
    """'e:2' / 'p:3' / 's:2,1' -> (basis, partition)."""
    basis, sep, rest = (text or "").partition(":")
    if not sep or basis not in BASES:
        raise ParseError(f"operator must look like basis:partition, got {text!r}")
    return basis, parse_partition(rest, "operator partition")
