"""The basis-conversion walk: lift plus the main loop.

Starting from a Sagbi basis under the start order, the loop follows the
straight segment from the start order's weight row to the target order's
weight row.  At each stop it takes initial forms, completes them to a
Sagbi basis under the weight-refined target order (tracking how each new
element is expressed in the initial forms), substitutes the full
polynomials back into those expressions, interreduces, and advances the
weight to the last point of the current cone on the segment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cone import cone_vectors, next_cone, advance
from .errors import PreconditionError, ResourceGuardError
from .guards import DEFAULT_GUARDS, Guards
from .initial import initial_set
from .order import TermOrder, Weight, refine
from .poly import Polynomial, evaluate_representation
from .sagbi import TrackedBasis, interreduce, is_sagbi, sagbi_basis

CONVERGED = "converged"
GUARD_EXCEEDED = "guard_exceeded"


@dataclass(frozen=True)
class WalkStep:
    """One pass of the loop, recorded at the weight where it ran."""

    step_index: int
    weight: Weight
    initials: tuple[Polynomial, ...]
    construction: TrackedBasis
    lifted: tuple[Polynomial, ...]
    interreduced: tuple[Polynomial, ...]
    advance_fraction: Fraction


@dataclass(frozen=True)
class WalkReport:
    steps: tuple[WalkStep, ...]
    final_basis: tuple[Polynomial, ...]
    status: str


def lift(construction: TrackedBasis, source_basis: Sequence[Polynomial]) -> list[Polynomial]:
    """Substitute the source polynomials into the tracked representations.

    The construction's representations must be expressions in the initial
    forms of source_basis, slot i matching source_basis[i]; evaluating
    them at the full polynomials yields the lifted basis.
    """
    if construction.elements and construction.representations[0].ring.n != len(source_basis):
        raise ValueError(
            f"arity mismatch: representations over "
            f"{construction.representations[0].ring.n} generators, "
            f"source basis has {len(source_basis)}"
        )
    return [evaluate_representation(rep, source_basis) for rep in construction.representations]


def walk(
    generators: Sequence[Polynomial],
    start_order: TermOrder,
    target_order: TermOrder,
    guards: Guards = DEFAULT_GUARDS,
    validate: bool = True,
) -> WalkReport:
    """Convert a Sagbi basis from the start order to the target order.

    The generators must be a Sagbi basis of their subalgebra under the
    start order; this is checked unless validate is False.  Both orders
    must be global, so both weight rows lie in the closed positive
    orthant.  Guard trips from the per-step construction are re-raised
    with the partial trace attached to the exception's ``report``.
    """
    if not generators:
        raise ValueError("need at least one generator")
    ring = generators[0].ring
    for f in generators:
        if f.ring != ring:
            raise ValueError("generators must share a ring")
        if f.is_zero:
            raise ValueError("generators must be nonzero")
    if start_order.n != ring.n or target_order.n != ring.n:
        raise ValueError("order dimension does not match the ring")
    if not start_order.is_global:
        raise PreconditionError("start order is not global")
    if not target_order.is_global:
        raise PreconditionError("target order is not global")
    weight = start_order.first_row
    weight_target = target_order.first_row
    for row in (weight, weight_target):
        if any(e < 0 for e in row) or not any(row):
            raise PreconditionError(
                "order weight rows must be nonnegative and nonzero"
            )
    if validate and not is_sagbi(generators, start_order, guards):
        raise PreconditionError(
            "generators are not a Sagbi basis under the start order"
        )

    basis: list[Polynomial] = list(generators)
    steps: list[WalkStep] = []
    for index in range(1, guards.max_walk_steps + 1):
        step_order = refine(weight, target_order)
        initials = initial_set(weight, basis)
        try:
            construction = sagbi_basis(initials, step_order, guards)
        except ResourceGuardError as error:
            partial = WalkReport(tuple(steps), tuple(basis), GUARD_EXCEEDED)
            raise ResourceGuardError(str(error), report=partial) from error
        lifted = lift(construction, basis)
        reduced = interreduce(
            TrackedBasis(tuple(zip(lifted, construction.representations))),
            step_order,
            guards,
        )
        basis = list(reduced.polynomials)
        fraction = next_cone(weight, weight_target, cone_vectors(basis, step_order))
        steps.append(
            WalkStep(
                step_index=index,
                weight=weight,
                initials=tuple(initials),
                construction=construction,
                lifted=tuple(lifted),
                interreduced=tuple(basis),
                advance_fraction=fraction,
            )
        )
        if weight == weight_target:
            return WalkReport(tuple(steps), tuple(basis), CONVERGED)
        weight = advance(weight, weight_target, fraction)
    partial = WalkReport(tuple(steps), tuple(basis), GUARD_EXCEEDED)
    raise ResourceGuardError(
        f"walk did not reach the target weight within {guards.max_walk_steps} steps",
        report=partial,
    )
