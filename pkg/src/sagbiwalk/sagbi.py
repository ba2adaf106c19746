"""Sagbi basis construction, the Sagbi test, and interreduction.

A set S is a Sagbi basis of the subalgebra it generates when the leading
monomials of S generate the algebra of all leading monomials.  The
completion criterion mirrors Buchberger's: for every binomial relation
among the leading monomials, evaluate it at the basis elements (the
leading terms cancel) and subduct; S is complete iff every such
obstruction subducts to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import PreconditionError, ResourceGuardError
from .groebner import toric_relations
from .guards import DEFAULT_GUARDS, Guards
from .membership import semigroup_member, subduct
from .order import TermOrder
from .poly import Polynomial, evaluate_representation, representation_ring


@dataclass(frozen=True)
class TrackedBasis:
    """Basis elements paired with representations over the original generators.

    Each element is (polynomial, representation) where the representation
    is a polynomial in t1..ts, s the number of original generators, and
    evaluating it at those generators reproduces the polynomial exactly.
    All polynomials are monic under the basis's active order.
    """

    elements: tuple[tuple[Polynomial, Polynomial], ...]

    @property
    def polynomials(self) -> tuple[Polynomial, ...]:
        return tuple(p for p, _ in self.elements)

    @property
    def representations(self) -> tuple[Polynomial, ...]:
        return tuple(r for _, r in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[tuple[Polynomial, Polynomial]]:
        return iter(self.elements)

    @classmethod
    def from_polynomials(
        cls, polys: Sequence[Polynomial], order: TermOrder
    ) -> "TrackedBasis":
        """Track a plain list against itself: element i is t_i, made monic."""
        aux = representation_ring(len(polys))
        elements = []
        for i, f in enumerate(polys):
            if f.is_zero:
                raise ValueError("basis elements must be nonzero")
            scale = 1 / order.leading_coefficient(f)
            slot = tuple(1 if j == i else 0 for j in range(aux.n))
            elements.append((f * scale, Polynomial(aux, {slot: scale})))
        return cls(tuple(elements))


def _obstructions(
    polys: Sequence[Polynomial], order: TermOrder, guards: Guards
) -> list[Polynomial]:
    """Binomial relations among the leading monomials of a monic basis."""
    leading = [order.leading_exponent(f) for f in polys]
    return toric_relations(leading, guards.max_basis, guards.max_pairs)


def sagbi_basis(
    generators: Sequence[Polynomial],
    order: TermOrder,
    guards: Guards = DEFAULT_GUARDS,
) -> TrackedBasis:
    """Complete the generators to a Sagbi basis under the order.

    Passes repeat until stable: compute the binomial relations among the
    current leading monomials, evaluate each at the basis (so the leading
    terms cancel), subduct against the current basis, and append every
    nonzero remainder made monic, with its representation over the
    original generators composed from the subduction record.

    Raises ResourceGuardError when the pass or degree guard trips, which
    may indicate a subalgebra with no finite Sagbi basis for this order.
    """
    if not order.is_global:
        raise PreconditionError("sagbi construction requires a global order")
    if not generators:
        raise ValueError("need at least one generator")
    tracked = list(TrackedBasis.from_polynomials(generators, order).elements)

    for _ in range(guards.max_passes):
        snapshot_polys = [p for p, _ in tracked]
        snapshot_reps = [r for _, r in tracked]
        appended = False
        for relation in _obstructions(snapshot_polys, order, guards):
            obstruction = evaluate_representation(relation, snapshot_polys)
            if obstruction.is_zero:
                continue
            current_polys = [p for p, _ in tracked]
            result = subduct(obstruction, current_polys, order, guards.max_steps)
            if result.remainder.is_zero:
                continue
            if result.remainder.total_degree() > guards.max_degree:
                raise ResourceGuardError(
                    f"new basis element exceeds degree {guards.max_degree}; "
                    "the subalgebra may have no finite Sagbi basis here"
                )
            rep = evaluate_representation(relation, snapshot_reps) - evaluate_representation(
                result.representation, [r for _, r in tracked]
            )
            scale = 1 / order.leading_coefficient(result.remainder)
            tracked.append((result.remainder * scale, rep * scale))
            appended = True
        if not appended:
            return TrackedBasis(tuple(tracked))
    raise ResourceGuardError(
        f"sagbi construction did not stabilize within {guards.max_passes} passes; "
        "the subalgebra may have no finite Sagbi basis here"
    )


def is_sagbi(
    polys: Sequence[Polynomial],
    order: TermOrder,
    guards: Guards = DEFAULT_GUARDS,
) -> bool:
    """True iff every leading-monomial relation subducts to zero over polys."""
    if not order.is_global:
        raise PreconditionError("the sagbi test requires a global order")
    if not polys:
        return True
    if any(f.is_zero for f in polys):
        raise ValueError("basis elements must be nonzero")
    monic = [order.monic(f) for f in polys]
    for relation in _obstructions(monic, order, guards):
        obstruction = evaluate_representation(relation, monic)
        if obstruction.is_zero:
            continue
        if not subduct(obstruction, monic, order, guards.max_steps).remainder.is_zero:
            return False
    return True


def interreduce(
    basis: TrackedBasis, order: TermOrder, guards: Guards = DEFAULT_GUARDS
) -> TrackedBasis:
    """Reduced form of a tracked basis.

    Elements whose leading monomial is a product of the other elements'
    leading monomials are dropped, survivors are made monic, and every
    survivor's tail is fully subducted against the survivors.
    Representations are recomposed so they still evaluate to the stored
    polynomials.  Survivors keep their input order.
    """
    items = list(basis.elements)
    by_ascending = sorted(
        range(len(items)), key=lambda i: order.key(order.leading_exponent(items[i][0]))
    )
    survivor_leads: list = []
    keep = set()
    for i in by_ascending:
        lead = order.leading_exponent(items[i][0])
        if semigroup_member(lead, survivor_leads) is None:
            keep.add(i)
            survivor_leads.append(lead)
    survivors = [items[i] for i in sorted(keep)]

    for index in range(len(survivors)):
        poly, rep = survivors[index]
        scale = 1 / order.leading_coefficient(poly)
        poly, rep = poly * scale, rep * scale
        lead = order.leading_term(poly)
        tail = poly - Polynomial.monomial(poly.ring, lead.exponent, lead.coefficient)
        if tail:
            reducers = [p for p, _ in survivors]
            result = subduct(tail, reducers, order, guards.max_steps)
            used = tail - result.remainder
            if used:
                poly = poly - used
                rep = rep - evaluate_representation(
                    result.representation, [r for _, r in survivors]
                )
        survivors[index] = (poly, rep)
    return TrackedBasis(tuple(survivors))
