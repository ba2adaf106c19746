"""Monomial-subalgebra membership and subduction with representation tracking.

Subduction is the subalgebra analogue of polynomial division: the leading
term is repeatedly rewritten as a scaled power product of the reducers
whenever its exponent decomposes over their leading exponents, otherwise
it is shelved into the remainder.  The exact decomposition found is
recorded as a polynomial in auxiliary variables, one per reducer, so that

    input = representation(reducers) + remainder

holds identically over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import PreconditionError, ResourceGuardError
from .order import TermOrder
from .poly import Exponent, Polynomial, representation_ring

DEFAULT_MAX_STEPS = 1_000_000


def semigroup_member(
    target: Sequence[int], generators: Sequence[Sequence[int]]
) -> Optional[tuple[int, ...]]:
    """Multiplicities a with sum a_i * generators[i] = target, or None.

    The search is exact and exhaustive: each generator's multiplicity is
    bounded by componentwise division of what remains.  Among valid
    decompositions the lexicographically greatest multiplicity vector is
    returned (larger multiplicity on earlier generators wins), which fixes
    deterministic representations.  Generators equal to the zero vector
    contribute nothing and get multiplicity 0.
    """
    target = tuple(target)
    gens = [tuple(g) for g in generators]
    n = len(target)
    for g in gens:
        if len(g) != n:
            raise ValueError("dimension mismatch among exponent vectors")

    def search(i: int, remaining: Exponent) -> Optional[tuple[int, ...]]:
        if i == len(gens):
            return () if not any(remaining) else None
        g = gens[i]
        if not any(g):
            rest = search(i + 1, remaining)
            return None if rest is None else (0,) + rest
        cap = min(remaining[j] // g[j] for j in range(n) if g[j])
        for count in range(cap, -1, -1):
            rest = search(
                i + 1, tuple(remaining[j] - count * g[j] for j in range(n))
            )
            if rest is not None:
                return (count,) + rest
        return None

    return search(0, target)


@dataclass(frozen=True)
class SubductionResult:
    """Remainder plus the representation over the reducers that was used."""

    remainder: Polynomial
    representation: Polynomial


def subduct(
    f: Polynomial,
    reducers: Sequence[Polynomial],
    order: TermOrder,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> SubductionResult:
    """Full Sagbi normal form of f against the reducers.

    Every term is processed, not just the top one: terms whose exponents
    decompose over the reducers' leading exponents are rewritten, the rest
    accumulate in the remainder, so no term of the remainder is a product
    of reducer leading monomials.  Each step strictly decreases the
    working leading monomial, which guarantees termination under a global
    order; max_steps is defence in depth.
    """
    if not order.is_global:
        raise PreconditionError("subduction requires a global order")
    for g in reducers:
        if g.is_zero:
            raise ValueError("reducers must be nonzero")
    aux = representation_ring(len(reducers))
    leading = [order.leading_exponent(g) for g in reducers]
    coeffs = [g.terms[e] for g, e in zip(reducers, leading)]
    powers: list[dict[int, Polynomial]] = [dict() for _ in reducers]

    def reducer_power(i: int, k: int) -> Polynomial:
        cached = powers[i].get(k)
        if cached is None:
            cached = reducers[i] ** k
            powers[i][k] = cached
        return cached

    work = f
    remainder: dict[Exponent, Fraction] = {}
    representation: dict[Exponent, Fraction] = {}
    steps = 0
    while work:
        steps += 1
        if steps > max_steps:
            raise ResourceGuardError(f"subduction exceeded {max_steps} steps")
        exponent = order.leading_exponent(work)
        coefficient = work.terms[exponent]
        witness = semigroup_member(exponent, leading)
        if witness is None:
            remainder[exponent] = coefficient
            data = dict(work.terms)
            del data[exponent]
            work = Polynomial._raw(work.ring, data)
        else:
            scale = coefficient
            product = Polynomial.one(work.ring)
            for i, count in enumerate(witness):
                if count:
                    scale /= coeffs[i] ** count
                    product = product * reducer_power(i, count)
            work = work - scale * product
            # pad only when reducers is empty (the dummy 1-slot aux ring)
            witness = witness + (0,) * (aux.n - len(witness))
            representation[witness] = scale
    return SubductionResult(
        Polynomial._raw(f.ring, remainder), Polynomial(aux, representation)
    )


def is_reduced(f: Polynomial, reducers: Sequence[Polynomial], order: TermOrder) -> bool:
    """True iff no term of f is a product of reducer leading monomials."""
    if f.is_zero:
        return True
    leading = [order.leading_exponent(g) for g in reducers]
    return all(semigroup_member(e, leading) is None for e in f.support())
