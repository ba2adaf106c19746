"""Polynomial arithmetic: exactness, normalization, ring axioms."""

import random
from fractions import Fraction

import pytest

from sagbiwalk import Polynomial, RingContext, evaluate_representation, representation_ring


@pytest.fixture
def ring():
    return RingContext(("x", "y", "z"))


def poly(ring, terms):
    return Polynomial(ring, terms)


def check_normalized(f: Polynomial):
    """The stored map never carries zeros, wrong lengths, or negatives."""
    for exponent, coefficient in f.terms.items():
        assert coefficient != 0
        assert isinstance(coefficient, Fraction)
        assert len(exponent) == f.ring.n
        assert all(isinstance(e, int) and e >= 0 for e in exponent)


def random_poly(rng, ring, max_terms=4, max_exp=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(ring.n))
        terms[e] = terms.get(e, 0) + Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Polynomial(ring, terms)


class TestConstruction:
    def test_zero_is_empty(self, ring):
        assert Polynomial.zero(ring).is_zero
        assert Polynomial(ring, {(1, 0, 0): 0}).is_zero

    def test_duplicate_exponents_merge(self, ring):
        f = Polynomial(ring, [((1, 0, 0), 2), ((1, 0, 0), -2)])
        assert f.is_zero

    def test_bad_exponent_length(self, ring):
        with pytest.raises(ValueError):
            Polynomial(ring, {(1, 0): 1})

    def test_negative_exponent(self, ring):
        with pytest.raises(ValueError):
            Polynomial(ring, {(-1, 0, 0): 1})

    def test_ring_requires_distinct_names(self):
        with pytest.raises(ValueError):
            RingContext(("x", "x"))

    def test_variable(self, ring):
        assert Polynomial.variable(ring, "y") == Polynomial(ring, {(0, 1, 0): 1})


class TestAdd:
    def test_additive_identity(self, ring):
        f = poly(ring, {(1, 1, 0): 1, (0, 0, 2): 1})
        assert f + Polynomial.zero(ring) == f

    def test_cancellation(self, ring):
        xy = poly(ring, {(1, 1, 0): 1})
        f = poly(ring, {(1, 1, 0): 1, (0, 0, 2): 1})
        assert f + (-xy) == poly(ring, {(0, 0, 2): 1})

    def test_hand_sum(self, ring):
        # (x^2y^2 + y^3) + (-x^2y^2 + x) = y^3 + x
        f = poly(ring, {(2, 2, 0): 1, (0, 3, 0): 1})
        g = poly(ring, {(2, 2, 0): -1, (1, 0, 0): 1})
        assert f + g == poly(ring, {(0, 3, 0): 1, (1, 0, 0): 1})

    def test_ring_mismatch(self, ring):
        other = RingContext(("a", "b"))
        with pytest.raises(ValueError, match="ring mismatch"):
            poly(ring, {(0, 0, 0): 1}) + Polynomial.one(other)


class TestMul:
    def test_multiplicative_identity(self, ring):
        f = poly(ring, {(1, 1, 0): 2, (0, 0, 2): Fraction(1, 3)})
        assert f * Polynomial.one(ring) == f

    def test_monomial_product(self, ring):
        x = Polynomial.variable(ring, "x")
        y = Polynomial.variable(ring, "y")
        assert x * y == poly(ring, {(1, 1, 0): 1})

    def test_hand_expansion(self, ring):
        # (xy + z^2)^2 = x^2y^2 + 2xyz^2 + z^4
        f = poly(ring, {(1, 1, 0): 1, (0, 0, 2): 1})
        expected = poly(ring, {(2, 2, 0): 1, (1, 1, 2): 2, (0, 0, 4): 1})
        assert f * f == expected

    def test_scalar(self, ring):
        f = poly(ring, {(1, 0, 0): 3})
        assert 2 * f == poly(ring, {(1, 0, 0): 6})
        assert f * Fraction(1, 3) == poly(ring, {(1, 0, 0): 1})
        assert f / 3 == poly(ring, {(1, 0, 0): 1})


class TestPow:
    def test_power_zero_is_one(self, ring):
        f = poly(ring, {(1, 1, 0): 5, (0, 0, 1): -2})
        assert f ** 0 == Polynomial.one(ring)

    def test_monomial_power(self, ring):
        xy = poly(ring, {(1, 1, 0): 1})
        assert xy ** 2 == poly(ring, {(2, 2, 0): 1})

    def test_binomial_square(self, ring):
        f = poly(ring, {(1, 1, 0): 1, (0, 0, 2): 1})
        assert f ** 2 == f * f

    def test_pow_matches_iterated_mul(self, ring):
        rng = random.Random(11)
        for _ in range(25):
            f = random_poly(rng, ring, max_terms=3, max_exp=2)
            k = rng.randint(0, 4)
            expected = Polynomial.one(ring)
            for _ in range(k):
                expected = expected * f
            assert f ** k == expected

    def test_negative_power_rejected(self, ring):
        with pytest.raises(ValueError):
            poly(ring, {(1, 0, 0): 1}) ** -1


class TestSupport:
    def test_zero_support_empty(self, ring):
        assert Polynomial.zero(ring).support() == frozenset()

    def test_two_term_support(self, ring):
        f = poly(ring, {(0, 0, 2): 1, (1, 1, 0): 1})
        assert f.support() == {(0, 0, 2), (1, 1, 0)}

    def test_three_term_support(self, ring):
        f = poly(
            ring,
            {(1, 1, 2): 1, (0, 0, 4): Fraction(1, 2), (0, 3, 0): Fraction(-1, 2)},
        )
        assert f.support() == {(1, 1, 2), (0, 0, 4), (0, 3, 0)}


class TestEvaluateRepresentation:
    def test_projection(self, ring):
        aux = representation_ring(2)
        g1 = poly(ring, {(0, 0, 2): 1, (1, 1, 0): 1})
        g2 = poly(ring, {(2, 2, 0): 1, (0, 3, 0): 1})
        assert evaluate_representation(Polynomial.variable(aux, 0), [g1, g2]) == g1

    def test_golden_combination(self, ring):
        # (t1^2 - t2)/2 at (z^2+xy, x^2y^2+y^3) = xyz^2 + z^4/2 - y^3/2
        aux = representation_ring(2)
        rep = Polynomial(aux, {(2, 0): Fraction(1, 2), (0, 1): Fraction(-1, 2)})
        g1 = poly(ring, {(0, 0, 2): 1, (1, 1, 0): 1})
        g2 = poly(ring, {(2, 2, 0): 1, (0, 3, 0): 1})
        expected = poly(
            ring,
            {(1, 1, 2): 1, (0, 0, 4): Fraction(1, 2), (0, 3, 0): Fraction(-1, 2)},
        )
        assert evaluate_representation(rep, [g1, g2]) == expected

    def test_monomial_generators(self, ring):
        aux = representation_ring(2)
        rep = Polynomial(aux, {(1, 1): 1})
        x = Polynomial.variable(ring, "x")
        y = Polynomial.variable(ring, "y")
        assert evaluate_representation(rep, [x, y]) == x * y

    def test_arity_mismatch(self, ring):
        aux = representation_ring(3)
        rep = Polynomial.variable(aux, 0)
        with pytest.raises(ValueError, match="arity"):
            evaluate_representation(rep, [Polynomial.one(ring)])


class TestRingAxioms:
    def test_axioms_on_random_inputs(self, ring):
        rng = random.Random(5)
        for _ in range(60):
            f = random_poly(rng, ring)
            g = random_poly(rng, ring)
            h = random_poly(rng, ring)
            assert f + g == g + f
            assert (f + g) + h == f + (g + h)
            assert f * g == g * f
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            for value in (f + g, f - g, f * g, -f):
                check_normalized(value)

    def test_equality_and_hash(self, ring):
        f = poly(ring, {(1, 1, 0): 1, (0, 0, 2): 1})
        g = poly(ring, {(0, 0, 2): 1, (1, 1, 0): 1})
        assert f == g
        assert hash(f) == hash(g)
        assert len({f, g}) == 1
