"""Resource guards for the potentially unbounded loops in the engine."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Guards:
    """Caps that convert pathological inputs into clean errors.

    max_passes:     outer completion passes in Sagbi construction
    max_degree:     total degree allowed for newly found basis elements
    max_steps:      reduction steps in a single subduction
    max_basis:      basis size in the internal Groebner engine
    max_pairs:      pair-queue size in the internal Groebner engine
    max_walk_steps: walk loop iterations (termination is guaranteed in
                    theory; this is defence in depth)
    """

    max_passes: int = 64
    max_degree: int = 40
    max_steps: int = 1_000_000
    max_basis: int = 100_000
    max_pairs: int = 100_000
    max_walk_steps: int = 10_000


DEFAULT_GUARDS = Guards()
