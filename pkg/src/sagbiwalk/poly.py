"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is an immutable map from exponent tuples to nonzero Fraction
coefficients, tied to a RingContext naming the variables.  No monomial
order is baked in: ordering is always applied externally, so the same
polynomial value can be viewed under every order that comes up during a
walk.  The zero polynomial is the empty map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

Exponent = tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class RingContext:
    """Ambient polynomial ring: an ordered tuple of distinct variable names."""

    variable_names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        for name in names:
            if not isinstance(name, str) or not name:
                raise ValueError(f"invalid variable name: {name!r}")

    @property
    def n(self) -> int:
        return len(self.variable_names)

    def index(self, name: str) -> int:
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def __repr__(self):
        return f"RingContext({', '.join(self.variable_names)})"


def representation_ring(count: int) -> RingContext:
    """Auxiliary ring t1..t<count> used to express elements over generators."""
    if count < 0:
        raise ValueError("generator count must be nonnegative")
    if count == 0:
        # A 0-variable ring is not representable; use a single dummy slot
        # that never carries a positive exponent.
        return RingContext(("t1",))
    return RingContext(tuple(f"t{i + 1}" for i in range(count)))


class Term(NamedTuple):
    coefficient: Fraction
    exponent: Exponent


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("_ring", "_terms", "_hash")

    def __init__(self, ring: RingContext, terms: Union[Mapping, Iterable] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[Exponent, Fraction] = {}
        n = ring.n
        for exponent, coefficient in items:
            exponent = tuple(exponent)
            if len(exponent) != n:
                raise ValueError(
                    f"exponent {exponent} has length {len(exponent)}, ring has {n} variables"
                )
            if any(not isinstance(e, int) or e < 0 for e in exponent):
                raise ValueError(f"exponents must be nonnegative integers: {exponent}")
            coefficient = Fraction(coefficient)
            if coefficient:
                value = data.get(exponent, _ZERO) + coefficient
                if value:
                    data[exponent] = value
                else:
                    del data[exponent]
        self._ring = ring
        self._terms = data
        self._hash = None

    @classmethod
    def _raw(cls, ring: RingContext, data: dict) -> "Polynomial":
        """Trusted constructor: data is already normalized."""
        self = object.__new__(cls)
        self._ring = ring
        self._terms = data
        self._hash = None
        return self

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, ring: RingContext) -> "Polynomial":
        return cls._raw(ring, {})

    @classmethod
    def one(cls, ring: RingContext) -> "Polynomial":
        return cls.constant(ring, 1)

    @classmethod
    def constant(cls, ring: RingContext, value) -> "Polynomial":
        value = Fraction(value)
        if not value:
            return cls.zero(ring)
        return cls._raw(ring, {(0,) * ring.n: value})

    @classmethod
    def variable(cls, ring: RingContext, which: Union[int, str]) -> "Polynomial":
        index = ring.index(which) if isinstance(which, str) else which
        if not 0 <= index < ring.n:
            raise ValueError(f"variable index {index} out of range")
        exponent = tuple(1 if i == index else 0 for i in range(ring.n))
        return cls._raw(ring, {exponent: _ONE})

    @classmethod
    def monomial(cls, ring: RingContext, exponent: Sequence[int], coefficient=1) -> "Polynomial":
        return cls(ring, {tuple(exponent): coefficient})

    # ------------------------------------------------------------------
    # inspection

    @property
    def ring(self) -> RingContext:
        return self._ring

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> frozenset[Exponent]:
        """Exponents carrying a nonzero coefficient; empty for zero."""
        return frozenset(self._terms)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), _ZERO)

    def total_degree(self) -> int:
        """Maximal sum of exponents; 0 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._ring == other._ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._ring, frozenset(self._terms.items())))
        return self._hash

    # ------------------------------------------------------------------
    # arithmetic

    def _check_ring(self, other: "Polynomial"):
        if self._ring != other._ring:
            raise ValueError(f"ring mismatch: {self._ring} vs {other._ring}")

    def __neg__(self):
        return Polynomial._raw(self._ring, {e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        data = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            value = data.get(exponent, _ZERO) + coefficient
            if value:
                data[exponent] = value
            else:
                del data[exponent]
        return Polynomial._raw(self._ring, data)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        data = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            value = data.get(exponent, _ZERO) - coefficient
            if value:
                data[exponent] = value
            else:
                del data[exponent]
        return Polynomial._raw(self._ring, data)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            factor = Fraction(other)
            if not factor:
                return Polynomial.zero(self._ring)
            return Polynomial._raw(
                self._ring, {e: c * factor for e, c in self._terms.items()}
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        data: dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exponent = tuple(x + y for x, y in zip(ea, eb))
                value = data.get(exponent, _ZERO) + ca * cb
                if value:
                    data[exponent] = value
                elif exponent in data:
                    del data[exponent]
        return Polynomial._raw(self._ring, data)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            divisor = Fraction(other)
            if not divisor:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (1 / divisor)
        return NotImplemented

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise ValueError(f"polynomial power must be a nonnegative integer: {power}")
        result = Polynomial.one(self._ring)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base if power > 1 else base
            power >>= 1
        return result

    # ------------------------------------------------------------------
    # display

    def __repr__(self):
        if not self._terms:
            return "Polynomial(0)"
        ordered = sorted(self._terms, key=lambda e: (sum(e), e), reverse=True)
        return f"Polynomial({_join_terms(self._ring, ordered, self._terms)})"


def _term_body(ring: RingContext, exponent: Exponent, magnitude: Fraction) -> str:
    factors = []
    for name, power in zip(ring.variable_names, exponent):
        if power == 1:
            factors.append(name)
        elif power > 1:
            factors.append(f"{name}^{power}")
    if not factors:
        return str(magnitude)
    if magnitude != 1:
        factors.insert(0, str(magnitude))
    return "*".join(factors)


def _join_terms(ring: RingContext, ordered: Sequence[Exponent], terms: Mapping) -> str:
    pieces = []
    for i, exponent in enumerate(ordered):
        coefficient = terms[exponent]
        body = _term_body(ring, exponent, abs(coefficient))
        if i == 0:
            pieces.append(f"-{body}" if coefficient < 0 else body)
        else:
            pieces.append(f"{'-' if coefficient < 0 else '+'} {body}")
    return " ".join(pieces)


def evaluate_representation(rep: Polynomial, generators: Sequence[Polynomial]) -> Polynomial:
    """Substitute generators[i] for the i-th variable of rep and expand.

    The representation lives in an auxiliary ring with exactly one variable
    per generator; the result lives in the generators' common ring.
    """
    if not generators:
        raise ValueError("cannot evaluate a representation over zero generators")
    if rep.ring.n != len(generators):
        raise ValueError(
            f"arity mismatch: representation has {rep.ring.n} slots, "
            f"got {len(generators)} generators"
        )
    target = generators[0].ring
    for g in generators[1:]:
        if g.ring != target:
            raise ValueError("generators must share a ring")
    result = Polynomial.zero(target)
    powers: list[dict[int, Polynomial]] = [dict() for _ in generators]

    def power(i: int, k: int) -> Polynomial:
        cached = powers[i].get(k)
        if cached is None:
            cached = generators[i] ** k
            powers[i][k] = cached
        return cached

    for exponent, coefficient in rep.terms.items():
        product = Polynomial.constant(target, coefficient)
        for i, k in enumerate(exponent):
            if k:
                product = product * power(i, k)
        result = result + product
    return result
