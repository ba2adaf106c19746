"""Matrix-defined monomial orders, leading data, refinement, separating weights.

An order is a rational matrix of full column rank n; monomials compare by
the lexicographic order of their matrix images.  The order is global when
the first nonzero entry of every column is positive, i.e. every variable
exceeds 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .poly import Exponent, Polynomial, Term

Weight = tuple[Fraction, ...]


def weight_vector(entries: Iterable) -> Weight:
    """Validated weight: nonnegative rational entries, at least one positive."""
    w = tuple(Fraction(e) for e in entries)
    if not w:
        raise ValueError("empty weight vector")
    if any(e < 0 for e in w):
        raise ValueError(f"weight entries must be nonnegative: {w}")
    if not any(w):
        raise ValueError("weight vector must have a positive entry")
    return w


def _dot(row: Sequence, vec: Sequence) -> Fraction:
    return sum(r * v for r, v in zip(row, vec))


def _reduce_against(row: list, echelon: list) -> list:
    """Eliminate row against echelon rows (pivot index, row) pairs, exactly."""
    row = list(row)
    for pivot, base in echelon:
        if row[pivot]:
            factor = row[pivot] / base[pivot]
            row = [a - factor * b for a, b in zip(row, base)]
    return row


def independent_rows(rows: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Keep, in order, the rows that enlarge the span of the earlier ones."""
    echelon: list[tuple[int, list]] = []
    kept = []
    for row in rows:
        row = [Fraction(e) for e in row]
        reduced = _reduce_against(row, echelon)
        pivot = next((i for i, e in enumerate(reduced) if e), None)
        if pivot is not None:
            echelon.append((pivot, reduced))
            kept.append(tuple(row))
    return kept


def _integer_row(row: Sequence[Fraction]) -> tuple[int, ...]:
    scale = lcm(*(e.denominator for e in row)) if row else 1
    return tuple(int(e * scale) for e in row)


class TermOrder:
    """Global-capable monomial order given by a rational matrix of rank n."""

    __slots__ = ("_matrix", "_int_rows", "_n", "_global")

    def __init__(self, rows: Iterable[Iterable]):
        matrix = tuple(tuple(Fraction(e) for e in row) for row in rows)
        if not matrix:
            raise ValueError("order matrix needs at least one row")
        n = len(matrix[0])
        if any(len(row) != n for row in matrix):
            raise ValueError("order matrix rows must have equal length")
        if len(independent_rows(matrix)) != n:
            raise ValueError(f"order matrix must have rank {n}")
        self._matrix = matrix
        self._n = n
        # Comparisons run on integer-scaled rows; positive scaling per row
        # does not change any comparison outcome.
        self._int_rows = tuple(_integer_row(row) for row in matrix)
        self._global = all(self._column_sign_ok(j) for j in range(n))

    def _column_sign_ok(self, j: int) -> bool:
        for row in self._matrix:
            if row[j]:
                return row[j] > 0
        return False  # zero column cannot happen at rank n

    @property
    def matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._matrix

    @property
    def n(self) -> int:
        return self._n

    @property
    def is_global(self) -> bool:
        """True iff every monomial other than 1 exceeds 1."""
        return self._global

    @property
    def first_row(self) -> Weight:
        return self._matrix[0]

    # ------------------------------------------------------------------
    # comparisons

    def _check_dimension(self, exponent: Sequence[int]):
        if len(exponent) != self._n:
            raise ValueError(
                f"dimension mismatch: exponent {tuple(exponent)} vs order on {self._n} variables"
            )

    def compare(self, a: Sequence[int], b: Sequence[int]) -> int:
        """-1, 0 or +1 as x^a <, = or > x^b.  Zero only for equal exponents."""
        self._check_dimension(a)
        self._check_dimension(b)
        for row in self._int_rows:
            value = sum(r * (x - y) for r, x, y in zip(row, a, b))
            if value > 0:
                return 1
            if value < 0:
                return -1
        return 0

    def key(self, exponent: Sequence[int]) -> tuple[int, ...]:
        """Sort key: tuples compare exactly as the order compares exponents."""
        return tuple(sum(r * e for r, e in zip(row, exponent)) for row in self._int_rows)

    # ------------------------------------------------------------------
    # leading data

    def sorted_terms(self, f: Polynomial) -> list[Term]:
        """Terms of f in descending order."""
        return [
            Term(f.terms[e], e)
            for e in sorted(f.terms, key=self.key, reverse=True)
        ]

    def leading_exponent(self, f: Polynomial) -> Exponent:
        if f.is_zero:
            raise ValueError("the zero polynomial has no leading term")
        if f.ring.n != self._n:
            raise ValueError("dimension mismatch between polynomial and order")
        return max(f.terms, key=self.key)

    def leading_coefficient(self, f: Polynomial) -> Fraction:
        return f.terms[self.leading_exponent(f)]

    def leading_term(self, f: Polynomial) -> Term:
        exponent = self.leading_exponent(f)
        return Term(f.terms[exponent], exponent)

    def leading_monomial(self, f: Polynomial) -> Polynomial:
        return Polynomial.monomial(f.ring, self.leading_exponent(f))

    def monic(self, f: Polynomial) -> Polynomial:
        return f / self.leading_coefficient(f)

    def __eq__(self, other):
        if not isinstance(other, TermOrder):
            return NotImplemented
        return self._matrix == other._matrix

    def __hash__(self):
        return hash(self._matrix)

    def __repr__(self):
        rows = "; ".join("(" + ", ".join(str(e) for e in row) + ")" for row in self._matrix)
        return f"TermOrder[{rows}]"


# ----------------------------------------------------------------------
# constructors


def _priority(n: int, priority: Sequence[int] | None) -> list[int]:
    order = list(range(n)) if priority is None else list(priority)
    if sorted(order) != list(range(n)):
        raise ValueError(f"priority must be a permutation of 0..{n - 1}: {priority}")
    return order


def lex_order(n: int, priority: Sequence[int] | None = None) -> TermOrder:
    """Lexicographic order; priority lists variable indices, highest first."""
    rows = []
    for index in _priority(n, priority):
        rows.append(tuple(1 if i == index else 0 for i in range(n)))
    return TermOrder(rows)


def deglex_order(n: int, priority: Sequence[int] | None = None) -> TermOrder:
    """Total degree first, ties broken lexicographically."""
    rows = [(1,) * n]
    for index in _priority(n, priority)[:-1]:
        rows.append(tuple(1 if i == index else 0 for i in range(n)))
    return TermOrder(rows)


def degrevlex_order(n: int, priority: Sequence[int] | None = None) -> TermOrder:
    """Total degree first, ties broken reverse-lexicographically."""
    rows = [(1,) * n]
    for index in reversed(_priority(n, priority)[1:]):
        rows.append(tuple(-1 if i == index else 0 for i in range(n)))
    return TermOrder(rows)


def refine(weight: Sequence, base: TermOrder) -> TermOrder:
    """Order comparing the weight first, ties broken by the base order.

    The weight is prepended to the base matrix and rows that are linearly
    dependent on earlier ones are dropped, so the result has exactly n
    independent rows.
    """
    w = tuple(Fraction(e) for e in weight)
    if len(w) != base.n:
        raise ValueError("dimension mismatch between weight and base order")
    if not any(w):
        raise ValueError("refining weight must be nonzero")
    return TermOrder(independent_rows((w,) + base.matrix))


# ----------------------------------------------------------------------
# separating weights


def separating_weight(
    order: TermOrder, pairs: Iterable[tuple[Sequence[int], Sequence[int]]]
) -> tuple[int, ...]:
    """Strictly positive integer weight agreeing with the order on the pairs.

    For every pair (a, b) with a > b under the order, the result w
    satisfies w.a > w.b (pairs with a = b are skipped).  Such a weight
    exists for any finite set because the order is global; it is found by
    combining the order's rows with exact rational scaling, walking down
    the rows until every difference vector is strictly separated.
    """
    if not order.is_global:
        raise ValueError("separating weights require a global order")
    n = order.n
    differences = []
    seen = set()
    for a, b in pairs:
        side = order.compare(a, b)
        if side == 0:
            continue
        hi, lo = (a, b) if side > 0 else (b, a)
        d = tuple(Fraction(x - y) for x, y in zip(hi, lo))
        if d not in seen:
            seen.add(d)
            differences.append(d)
    if not differences:
        return (1,) * n

    # Unit-vector constraints keep the result strictly positive, which is
    # valid because the order is global.
    for i in range(n):
        unit = tuple(Fraction(1 if j == i else 0) for j in range(n))
        if unit not in seen:
            differences.append(unit)

    rows = order.matrix
    current = rows[0]
    for row in rows[1:]:
        if all(_dot(current, d) > 0 for d in differences):
            break
        required = Fraction(0)
        for d in differences:
            positive = _dot(current, d)
            if positive > 0:
                need = -_dot(row, d) / positive
                if need > required:
                    required = need
        scale = required + 1
        current = tuple(scale * c + r for c, r in zip(current, row))

    if any(_dot(current, d) <= 0 for d in differences):
        raise RuntimeError("internal error: separating weight construction failed")

    ints = _integer_row(current)
    shrink = gcd(*ints)
    return tuple(v // shrink for v in ints)
