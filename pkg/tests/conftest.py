"""Shared fixtures: the worked 3-variable example and a frozen random corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import pytest

from sagbiwalk import (
    Guards,
    Polynomial,
    ResourceGuardError,
    RingContext,
    TermOrder,
    WalkReport,
    deglex_order,
    interreduce,
    lex_order,
    refine,
    sagbi_basis,
    walk,
)

# ----------------------------------------------------------------------
# the golden 3-variable conversion: lex z>y>x  ->  lex x>y>z


@pytest.fixture(scope="session")
def xyz() -> RingContext:
    return RingContext(("x", "y", "z"))


@pytest.fixture(scope="session")
def golden(xyz):
    """Input basis, orders, and the exactly known conversion results."""
    half = Fraction(1, 2)
    return {
        "ring": xyz,
        "g1": Polynomial(xyz, {(0, 0, 2): 1, (1, 1, 0): 1}),  # z^2 + xy
        "g2": Polynomial(xyz, {(0, 3, 0): 1, (2, 2, 0): 1}),  # y^3 + x^2y^2
        "start": lex_order(3, [2, 1, 0]),
        "target": lex_order(3),
        "final_1": Polynomial(xyz, {(1, 1, 0): 1, (0, 0, 2): 1}),
        "final_2": Polynomial(
            xyz, {(1, 1, 2): 1, (0, 0, 4): half, (0, 3, 0): -half}
        ),
        "h3": Polynomial(xyz, {(1, 1, 2): 1, (0, 0, 4): half}),  # xyz^2 + z^4/2
        "x2y2": Polynomial(xyz, {(2, 2, 0): 1}),
        "w_mid": (Fraction(2, 3), Fraction(0), Fraction(1, 3)),
    }


# ----------------------------------------------------------------------
# frozen random corpus shared by the oracle-equivalence style tests

CORPUS_SEED = 20260810
CORPUS_SIZE = 24
CORPUS_GUARDS = Guards(max_passes=10, max_degree=14, max_steps=200_000)


def random_global_order(rng: random.Random, n: int) -> TermOrder:
    prio = list(range(n))
    rng.shuffle(prio)
    base = lex_order(n, prio)
    roll = rng.random()
    if roll < 0.4:
        return base
    if roll < 0.7:
        return deglex_order(n, prio)
    w = tuple(Fraction(rng.randint(0, 4)) for _ in range(n))
    if not any(w):
        return base
    return refine(w, base)


def random_poly(rng: random.Random, ring: RingContext, max_terms=3, max_total=4) -> Polynomial:
    """Random nonzero, nonconstant polynomial with small integer coefficients."""
    n = ring.n
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            while True:
                e = tuple(rng.randint(0, max_total) for _ in range(n))
                if sum(e) <= max_total:
                    break
            c = rng.choice([-3, -2, -1, 1, 2, 3])
            terms[e] = terms.get(e, 0) + c
        f = Polynomial(ring, terms)
        if f and f.support() != {(0,) * n}:
            return f


@dataclass
class CorpusEntry:
    ring: RingContext
    generators: list[Polynomial]
    start_order: TermOrder
    target_order: TermOrder
    sagbi_input: tuple[Polynomial, ...] | None = None  # Sagbi basis under start
    direct: tuple[Polynomial, ...] | None = None  # reduced basis under target
    report: WalkReport | None = None
    excluded: bool = False


def corpus_instances(seed=CORPUS_SEED, count=CORPUS_SIZE) -> list[CorpusEntry]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, 3)
        ring = RingContext(tuple("xyz"[:n]))
        k = rng.randint(2, 3)
        gens = [random_poly(rng, ring) for _ in range(k)]
        out.append(
            CorpusEntry(
                ring=ring,
                generators=gens,
                start_order=random_global_order(rng, n),
                target_order=random_global_order(rng, n),
            )
        )
    return out


@pytest.fixture(scope="session")
def corpus() -> list[CorpusEntry]:
    """Corpus with walks and direct constructions run; guard trips marked."""
    entries = corpus_instances()
    for entry in entries:
        try:
            constructed = sagbi_basis(entry.generators, entry.start_order, CORPUS_GUARDS)
            entry.sagbi_input = constructed.polynomials
            entry.direct = interreduce(
                sagbi_basis(list(entry.sagbi_input), entry.target_order, CORPUS_GUARDS),
                entry.target_order,
                CORPUS_GUARDS,
            ).polynomials
            entry.report = walk(
                list(entry.sagbi_input),
                entry.start_order,
                entry.target_order,
                guards=CORPUS_GUARDS,
                validate=False,
            )
        except ResourceGuardError:
            entry.excluded = True
    return entries
