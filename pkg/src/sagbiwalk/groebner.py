"""Internal Groebner engine: Buchberger's algorithm and toric relations.

The engine exists to compute binomial generators of the kernel of a
monomial map t_i -> x^(m_i), obtained by eliminating the x-variables from
the ideal generated by t_i - x^(m_i) under a block order.  Those binomials
encode all multiplicative relations among leading monomials and drive the
Sagbi completion loop.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ResourceGuardError
from .order import TermOrder, independent_rows
from .poly import Exponent, Polynomial, RingContext, evaluate_representation, representation_ring

DEFAULT_MAX_BASIS = 100_000
DEFAULT_MAX_PAIRS = 100_000


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _exp_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _exp_div(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Full remainder of f under multivariate division by the basis."""
    leading = [order.leading_exponent(g) for g in basis]
    work = f
    remainder: dict[Exponent, Fraction] = {}
    while work:
        exponent = order.leading_exponent(work)
        coefficient = work.terms[exponent]
        for g, lead in zip(basis, leading):
            if _divides(lead, exponent):
                shift = _exp_div(exponent, lead)
                factor = coefficient / g.terms[lead]
                work = work - factor * Polynomial.monomial(g.ring, shift) * g
                break
        else:
            remainder[exponent] = coefficient
            data = dict(work.terms)
            del data[exponent]
            work = Polynomial._raw(work.ring, data)
    return Polynomial._raw(f.ring, remainder)


def spolynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    """S-polynomial: scaled multiples cancelling the two leading terms."""
    lf, lg = order.leading_exponent(f), order.leading_exponent(g)
    common = _exp_lcm(lf, lg)
    mf = Polynomial.monomial(f.ring, _exp_div(common, lf), 1 / f.terms[lf])
    mg = Polynomial.monomial(g.ring, _exp_div(common, lg), 1 / g.terms[lg])
    return mf * f - mg * g


def _update_pairs(pairs, leading, new_index):
    """Gebauer-Moeller form of the product and chain criteria."""
    lead_new = leading[new_index]
    survivors = set()
    for i, j in pairs:
        old = _exp_lcm(leading[i], leading[j])
        if (
            not _divides(lead_new, old)
            or _exp_lcm(leading[i], lead_new) == old
            or _exp_lcm(leading[j], lead_new) == old
        ):
            survivors.add((i, j))
    by_lcm: dict[Exponent, list[int]] = {}
    for i in range(new_index):
        by_lcm.setdefault(_exp_lcm(leading[i], lead_new), []).append(i)
    minimal: list[Exponent] = []
    for candidate in sorted(by_lcm):
        if all(not _divides(kept, candidate) for kept in minimal):
            minimal.append(candidate)
    for candidate in minimal:
        # Product criterion: a pair with coprime leading monomials reduces
        # to zero on its own.
        if any(
            _exp_lcm(leading[i], lead_new) == _exp_mul(leading[i], lead_new)
            for i in by_lcm[candidate]
        ):
            continue
        survivors.add((min(by_lcm[candidate]), new_index))
    return survivors


def buchberger(
    generators: Sequence[Polynomial],
    order: TermOrder,
    max_basis: int = DEFAULT_MAX_BASIS,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> list[Polynomial]:
    """Reduced Groebner basis (monic, interreduced) of the generated ideal.

    Pairs are selected by the normal strategy (smallest lcm first) and
    pruned with the product/chain criteria.
    """
    basis: list[Polynomial] = []
    leading: list[Exponent] = []
    pairs: set[tuple[int, int]] = set()
    for f in generators:
        if f.is_zero:
            continue
        f = order.monic(f)
        pairs = _update_pairs(pairs, leading + [order.leading_exponent(f)], len(basis))
        basis.append(f)
        leading.append(order.leading_exponent(f))

    while pairs:
        if len(basis) > max_basis:
            raise ResourceGuardError(f"groebner basis exceeded {max_basis} elements")
        if len(pairs) > max_pairs:
            raise ResourceGuardError(f"groebner pair queue exceeded {max_pairs} pairs")
        i, j = min(
            pairs,
            key=lambda p: (order.key(_exp_lcm(leading[p[0]], leading[p[1]])), p),
        )
        pairs.remove((i, j))
        remainder = normal_form(spolynomial(basis[i], basis[j], order), basis, order)
        if remainder.is_zero:
            continue
        remainder = order.monic(remainder)
        pairs = _update_pairs(
            pairs, leading + [order.leading_exponent(remainder)], len(basis)
        )
        basis.append(remainder)
        leading.append(order.leading_exponent(remainder))

    return _interreduce_ideal_basis(basis, order)


def _interreduce_ideal_basis(basis: list[Polynomial], order: TermOrder) -> list[Polynomial]:
    if not basis:
        return []
    minimal: list[Polynomial] = []
    for f in sorted(basis, key=lambda g: order.key(order.leading_exponent(g))):
        lead = order.leading_exponent(f)
        if all(not _divides(order.leading_exponent(g), lead) for g in minimal):
            minimal.append(f)
    reduced = []
    for i, f in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(order.monic(normal_form(f, others, order)) if others else f)
    return reduced


# ----------------------------------------------------------------------
# toric relations


def _elimination_order(n: int, s: int) -> TermOrder:
    """Block order: x-block by deglex first, then t-block by deglex."""
    rows = [(1,) * n + (0,) * s]
    for i in range(n):
        rows.append(tuple(1 if k == i else 0 for k in range(n)) + (0,) * s)
    rows.append((0,) * n + (1,) * s)
    for i in range(s):
        rows.append((0,) * n + tuple(1 if k == i else 0 for k in range(s)))
    return TermOrder(independent_rows(rows))


def toric_relations(
    exponents: Sequence[Sequence[int]],
    max_basis: int = DEFAULT_MAX_BASIS,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> list[Polynomial]:
    """Binomial generators of the relations among the given monomials.

    Returns generators of the kernel of t_i -> x^(exponents[i]), computed
    by eliminating the x-variables from {t_i - x^(exponents[i])}.  Every
    returned binomial vanishes under the substitution; this is asserted on
    every call.
    """
    exps = [tuple(e) for e in exponents]
    if not exps:
        return []
    n = len(exps[0])
    if any(len(e) != n for e in exps):
        raise ValueError("dimension mismatch among exponent vectors")
    if any(any(v < 0 for v in e) for e in exps):
        raise ValueError("exponent vectors must be nonnegative")
    s = len(exps)
    extended = RingContext(
        tuple(f"x{i + 1}" for i in range(n)) + tuple(f"t{j + 1}" for j in range(s))
    )
    zero_x = (0,) * n
    zero_t = (0,) * s
    ideal = []
    for j, m in enumerate(exps):
        t_slot = tuple(1 if k == j else 0 for k in range(s))
        ideal.append(
            Polynomial(extended, {zero_x + t_slot: 1, tuple(m) + zero_t: -1})
        )
    gb = buchberger(ideal, _elimination_order(n, s), max_basis, max_pairs)

    t_ring = representation_ring(s)
    relations = []
    for f in gb:
        if all(e[:n] == zero_x for e in f.support()):
            relations.append(Polynomial(t_ring, {e[n:]: c for e, c in f.terms.items()}))
    relations.sort(key=lambda f: sorted(f.terms))

    x_ring = RingContext(tuple(f"x{i + 1}" for i in range(n)))
    monomials = [Polynomial.monomial(x_ring, m) for m in exps]
    for relation in relations:
        if not evaluate_representation(relation, monomials).is_zero:
            raise RuntimeError(
                "internal error: toric relation does not vanish under substitution"
            )
    return relations
