"""Weighted degrees, initial forms and weight-homogeneity."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import Polynomial


class _MinusInfinity:
    """Sentinel strictly below every rational: the weighted degree of 0.

    A distinct sentinel avoids overloading any actual rational value for
    the degree of the zero polynomial.
    """

    __slots__ = ()

    def __lt__(self, other):
        return not isinstance(other, _MinusInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _MinusInfinity)

    def __eq__(self, other):
        return isinstance(other, _MinusInfinity)

    def __hash__(self):
        return hash("MINUS_INFINITY")

    def __repr__(self):
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()


def _check_weight(weight: Sequence[Fraction], f: Polynomial):
    if len(weight) != f.ring.n:
        raise ValueError(
            f"dimension mismatch: weight of length {len(weight)} on {f.ring.n} variables"
        )


def weighted_degree(weight: Sequence[Fraction], f: Polynomial):
    """Maximal weight.exponent over the support; MINUS_INFINITY for 0."""
    _check_weight(weight, f)
    if f.is_zero:
        return MINUS_INFINITY
    return max(sum(w * e for w, e in zip(weight, exponent)) for exponent in f.terms)


def initial_form(weight: Sequence[Fraction], f: Polynomial) -> Polynomial:
    """Sum of the terms of maximal weighted degree; 0 maps to 0."""
    _check_weight(weight, f)
    if f.is_zero:
        return f
    degrees = {
        exponent: sum(w * e for w, e in zip(weight, exponent)) for exponent in f.terms
    }
    top = max(degrees.values())
    return Polynomial._raw(
        f.ring, {e: c for e, c in f.terms.items() if degrees[e] == top}
    )


def initial_set(weight: Sequence[Fraction], polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Elementwise initial forms, preserving order and multiplicity."""
    return [initial_form(weight, f) for f in polys]


def is_weight_homogeneous(weight: Sequence[Fraction], f: Polynomial) -> bool:
    """True iff every term of f has the same weighted degree."""
    return f == initial_form(weight, f)
