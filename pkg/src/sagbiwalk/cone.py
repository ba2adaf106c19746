"""Cone inequality systems and the boundary-crossing computation.

A basis whose leading terms are picked by an order stays valid for every
weight vector that weakly prefers each leading exponent over the other
exponents in its polynomial.  The difference vectors (leading - other)
define that cone; crossing it along the straight path to a target weight
is an exact one-dimensional minimum over the violated facets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from .errors import PreconditionError
from .order import TermOrder, Weight
from .poly import Polynomial


@dataclass(frozen=True)
class ConeSystem:
    """Primitive integer difference vectors defining a cone by w.v >= 0."""

    vectors: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.vectors)


def _primitive(vector: Sequence[int]) -> tuple[int, ...]:
    shrink = gcd(*(abs(v) for v in vector))
    return tuple(v // shrink for v in vector)


def cone_vectors(basis: Sequence[Polynomial], order: TermOrder) -> ConeSystem:
    """Difference vectors leading-exponent minus other-exponent, deduplicated.

    Vectors are normalized to primitive integer vectors (the halfspaces are
    unchanged) and kept in first-seen order.
    """
    seen = set()
    vectors = []
    for f in basis:
        lead = order.leading_exponent(f)
        for exponent in sorted(f.support(), key=order.key, reverse=True):
            if exponent == lead:
                continue
            vector = _primitive(tuple(a - b for a, b in zip(lead, exponent)))
            if vector not in seen:
                seen.add(vector)
                vectors.append(vector)
    return ConeSystem(tuple(vectors))


def _dot(w: Sequence[Fraction], v: Sequence[int]) -> Fraction:
    return sum(a * b for a, b in zip(w, v))


def in_cone(weight: Sequence[Fraction], cone: ConeSystem) -> bool:
    """True iff the weight satisfies every inequality weakly."""
    return all(_dot(weight, v) >= 0 for v in cone)


def in_interior(weight: Sequence[Fraction], cone: ConeSystem) -> bool:
    """True iff the weight satisfies every inequality strictly."""
    return all(_dot(weight, v) > 0 for v in cone)


def next_cone(
    weight_old: Sequence[Fraction],
    weight_target: Sequence[Fraction],
    cone: ConeSystem,
) -> Fraction:
    """Largest fraction u of the straight path to the target staying in the cone.

    Along (1-u)*old + u*target, each facet with target.v < 0 is hit at
    u = old.v / (old.v - target.v); the minimum over those, capped at 1,
    is returned.  The old weight must lie in the cone.
    """
    if not in_cone(weight_old, cone):
        raise PreconditionError("base weight lies outside the cone")
    best = Fraction(1)
    for vector in cone:
        toward = _dot(weight_target, vector)
        if toward < 0:
            here = _dot(weight_old, vector)
            candidate = here / (here - toward)
            if candidate < best:
                best = candidate
    return best


def advance(
    weight_old: Sequence[Fraction],
    weight_target: Sequence[Fraction],
    fraction: Fraction,
) -> Weight:
    """Exact convex combination (1-fraction)*old + fraction*target."""
    fraction = Fraction(fraction)
    if not 0 <= fraction <= 1:
        raise ValueError(f"path fraction must lie in [0, 1]: {fraction}")
    return tuple(
        (1 - fraction) * a + fraction * b for a, b in zip(weight_old, weight_target)
    )


def integer_weight(weight: Sequence[Fraction]) -> tuple[int, ...]:
    """Order-equivalent primitive integer weight, for display."""
    entries = [Fraction(e) for e in weight]
    scale = 1
    for e in entries:
        scale = scale * e.denominator // gcd(scale, e.denominator)
    ints = [int(e * scale) for e in entries]
    return _primitive(ints)
