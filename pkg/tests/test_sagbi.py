"""Sagbi construction, the Sagbi test, and interreduction."""

import random
from fractions import Fraction
from itertools import product

import pytest

from sagbiwalk import (
    Guards,
    Polynomial,
    ResourceGuardError,
    RingContext,
    TrackedBasis,
    evaluate_representation,
    interreduce,
    is_sagbi,
    lex_order,
    refine,
    sagbi_basis,
    subduct,
)

from conftest import random_global_order, random_poly


@pytest.fixture
def ring():
    return RingContext(("x", "y", "z"))


@pytest.fixture
def mid_order():
    return refine((Fraction(2, 3), 0, Fraction(1, 3)), lex_order(3))


def check_tracked(basis: TrackedBasis, generators, order):
    for poly, rep in basis:
        assert evaluate_representation(rep, list(generators)) == poly
        assert order.leading_coefficient(poly) == 1


class TestSagbiBasis:
    def test_golden_mid_pass_construction(self, ring, mid_order, golden):
        generators = [golden["g1"], golden["x2y2"]]
        basis = sagbi_basis(generators, mid_order)
        assert basis.polynomials == (golden["g1"], golden["x2y2"], golden["h3"])
        aux = basis.representations[0].ring
        assert basis.representations == (
            Polynomial(aux, {(1, 0): 1}),
            Polynomial(aux, {(0, 1): 1}),
            Polynomial(aux, {(2, 0): Fraction(1, 2), (0, 1): Fraction(-1, 2)}),
        )
        check_tracked(basis, generators, mid_order)

    def test_single_generator(self, ring):
        f = Polynomial(ring, {(1, 1, 0): 3, (0, 0, 2): 1})
        basis = sagbi_basis([f], lex_order(3))
        assert basis.polynomials == (lex_order(3).monic(f),)

    def test_elementary_symmetric_pair(self):
        ring = RingContext(("x", "y"))
        e1 = Polynomial(ring, {(1, 0): 1, (0, 1): 1})
        e2 = Polynomial(ring, {(1, 1): 1})
        order = lex_order(2)
        basis = sagbi_basis([e1, e2], order)
        assert set(basis.polynomials) == {e1, e2}
        assert is_sagbi(list(basis.polynomials), order)
        # brute-force oracle: low-degree products subduct to zero
        for i, j in product(range(3), repeat=2):
            if i + j == 0 or i + j > 4:
                continue
            f = e1 ** i * e2 ** j
            assert subduct(f, list(basis.polynomials), order).remainder.is_zero

    def test_input_membership_in_output(self):
        rng = random.Random(61)
        guards = Guards(max_passes=8, max_degree=12)
        built = 0
        while built < 10:
            n = rng.randint(2, 3)
            ring = RingContext(tuple("xyz"[:n]))
            order = random_global_order(rng, n)
            gens = [random_poly(rng, ring) for _ in range(2)]
            try:
                basis = sagbi_basis(gens, order, guards)
            except ResourceGuardError:
                continue
            built += 1
            check_tracked(basis, gens, order)
            assert is_sagbi(list(basis.polynomials), order, guards)
            for g in gens:
                result = subduct(g, list(basis.polynomials), order, guards.max_steps)
                assert result.remainder.is_zero

    def test_pass_guard(self):
        ring = RingContext(("x", "y"))
        gens = [
            Polynomial(ring, {(1, 0): 1, (0, 1): 1}),
            Polynomial(ring, {(1, 1): 1}),
            Polynomial(ring, {(1, 2): 1}),
        ]
        with pytest.raises(ResourceGuardError, match="finite Sagbi basis"):
            sagbi_basis(gens, lex_order(2), Guards(max_passes=3))

    def test_degree_guard(self):
        ring = RingContext(("x", "y"))
        gens = [
            Polynomial(ring, {(1, 0): 1, (0, 1): 1}),
            Polynomial(ring, {(1, 1): 1}),
            Polynomial(ring, {(1, 2): 1}),
        ]
        with pytest.raises(ResourceGuardError, match="degree"):
            sagbi_basis(gens, lex_order(2), Guards(max_degree=5))

    def test_zero_generator_rejected(self, ring):
        with pytest.raises(ValueError):
            sagbi_basis([Polynomial.zero(ring)], lex_order(3))


class TestIsSagbi:
    def test_golden_start_basis(self, golden):
        assert is_sagbi([golden["g1"], golden["g2"]], golden["start"])

    def test_incomplete_pair(self, golden, mid_order):
        assert not is_sagbi([golden["g1"], golden["x2y2"]], mid_order)

    def test_single_monomial(self, ring):
        assert is_sagbi([Polynomial(ring, {(2, 1, 0): 5})], lex_order(3))

    def test_classic_incomplete_triple(self):
        ring = RingContext(("x", "y"))
        gens = [
            Polynomial(ring, {(1, 0): 1, (0, 1): 1}),
            Polynomial(ring, {(1, 1): 1}),
            Polynomial(ring, {(1, 2): 1}),
        ]
        assert not is_sagbi(gens, lex_order(2))

    def test_random_positive_cases_reduce_products(self):
        rng = random.Random(67)
        guards = Guards(max_passes=8, max_degree=12)
        checked = 0
        while checked < 8:
            n = rng.randint(2, 3)
            ring = RingContext(tuple("xyz"[:n]))
            order = random_global_order(rng, n)
            gens = [random_poly(rng, ring, max_terms=2, max_total=3) for _ in range(2)]
            if not is_sagbi(gens, order, guards):
                continue
            checked += 1
            monic = [order.monic(g) for g in gens]
            for i, j in product(range(3), repeat=2):
                if i + j == 0 or i + j > 3:
                    continue
                f = monic[0] ** i * monic[1] ** j
                assert subduct(f, monic, order, guards.max_steps).remainder.is_zero


class TestLeadingTermTransfer:
    def test_same_leads_same_verdict(self):
        # if a second order picks the same leading monomial in every element
        # of a Sagbi basis, the basis stays Sagbi under it
        rng = random.Random(71)
        guards = Guards(max_passes=8, max_degree=12)
        checked = 0
        while checked < 8:
            n = rng.randint(2, 3)
            ring = RingContext(tuple("xyz"[:n]))
            first = random_global_order(rng, n)
            second = random_global_order(rng, n)
            gens = [random_poly(rng, ring) for _ in range(2)]
            if any(
                first.leading_exponent(g) != second.leading_exponent(g) for g in gens
            ):
                continue
            try:
                if not is_sagbi(gens, first, guards):
                    continue
            except ResourceGuardError:
                continue
            checked += 1
            assert is_sagbi(gens, second, guards)


class TestInterreduce:
    def test_golden_triple(self, golden, mid_order):
        lifted = [golden["final_1"], golden["g2"], golden["final_2"]]
        tracked = TrackedBasis.from_polynomials(lifted, mid_order)
        reduced = interreduce(tracked, mid_order)
        assert reduced.polynomials == (golden["final_1"], golden["final_2"])
        check_tracked(reduced, lifted, mid_order)

    def test_idempotent(self, golden, mid_order):
        lifted = [golden["final_1"], golden["g2"], golden["final_2"]]
        once = interreduce(TrackedBasis.from_polynomials(lifted, mid_order), mid_order)
        twice = interreduce(once, mid_order)
        assert once.polynomials == twice.polynomials

    def test_power_dropped(self):
        ring = RingContext(("x",))
        order = lex_order(1)
        x = Polynomial.variable(ring, 0)
        tracked = TrackedBasis.from_polynomials([x, x * x], order)
        assert interreduce(tracked, order).polynomials == (x,)

    def test_already_reduced_fixed(self, golden):
        order = golden["start"]
        tracked = TrackedBasis.from_polynomials([golden["g1"], golden["g2"]], order)
        reduced = interreduce(tracked, order)
        assert reduced.polynomials == (golden["g1"], golden["g2"])

    def test_tails_are_subducted(self):
        ring = RingContext(("x", "y"))
        order = lex_order(2)
        # second element carries a reducible tail x^2 = (x)^2
        f1 = Polynomial(ring, {(1, 0): 1})
        f2 = Polynomial(ring, {(2, 1): 1, (2, 0): 1})
        reduced = interreduce(TrackedBasis.from_polynomials([f1, f2], order), order)
        assert reduced.polynomials == (f1, Polynomial(ring, {(2, 1): 1}))
        check_tracked(reduced, [f1, f2], order)

    def test_dropped_elements_stay_in_algebra(self):
        rng = random.Random(73)
        guards = Guards(max_passes=8, max_degree=12)
        checked = 0
        while checked < 6:
            n = rng.randint(2, 3)
            ring = RingContext(tuple("xyz"[:n]))
            order = random_global_order(rng, n)
            gens = [random_poly(rng, ring, max_terms=2, max_total=3) for _ in range(2)]
            try:
                basis = sagbi_basis(gens, order, guards)
            except ResourceGuardError:
                continue
            checked += 1
            reduced = interreduce(basis, order, guards)
            survivors = list(reduced.polynomials)
            for poly in basis.polynomials:
                result = subduct(poly, survivors, order, guards.max_steps)
                assert result.remainder.is_zero
