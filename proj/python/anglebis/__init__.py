"""Triangles from angle-bisector lengths: solver, exact algebra and Galois certificates."""

import json
from fractions import Fraction

from . import _anglebis
from ._anglebis import (  # noqa: F401
    AnglebisError,
    BadPrime,
    DegreeDropped,
    DivisionByZero,
    InvalidAltitudes,
    InvalidArgument,
    InvalidMedians,
    InvalidTriangle,
    NoConvergence,
    NonPositiveInput,
    NonPositiveRatio,
    NonPositiveRoots,
    NoRootInRange,
    NotPrime,
    NotSquarefree,
    ParseError,
    forward,
    isosceles,
    solve,
)

DEFAULT_PRIME_BOUND = 500


def _exact(x):
    if isinstance(x, float):
        raise TypeError("exact algebra needs int, Fraction or 'num/den', not float")
    return str(Fraction(x))


def _poly(coeffs):
    if isinstance(coeffs, str):
        coeffs = coeffs.split(",")
    return [_exact(c.strip() if isinstance(c, str) else c) for c in coeffs]


def wolff(la, lb, lc):
    """Invariants a2, a3, a4 and the coefficients (constant first) of W, U, V as Fractions."""
    raw = _anglebis.wolff(_exact(la), _exact(lb), _exact(lc))
    out = {k: Fraction(raw[k]) for k in ("a2", "a3", "a4")}
    for k in ("W", "U", "V"):
        out[k] = [Fraction(c) for c in raw[k]]
    return out


def recover_bisectors(la, lb, lc):
    """Bisector lengths read back from the roots of U, sorted ascending."""
    return list(_anglebis.recover_bisectors(_exact(la), _exact(lb), _exact(lc)))


def galois(coeffs, prime_bound=DEFAULT_PRIME_BOUND):
    return json.loads(_anglebis.galois_json(_poly(coeffs), prime_bound))


def constructible(coeffs, prime_bound=DEFAULT_PRIME_BOUND):
    return json.loads(_anglebis.constructible_json(_poly(coeffs), prime_bound))


def radical(la, lb, lc, prime_bound=DEFAULT_PRIME_BOUND):
    return json.loads(_anglebis.radical_json(_exact(la), _exact(lb), _exact(lc), prime_bound))


def reproduce(seed=20210601, corpus=None, prime_bound=DEFAULT_PRIME_BOUND, tolerance=1e-12):
    return json.loads(_anglebis.reproduce_json(seed, corpus, prime_bound, tolerance))
