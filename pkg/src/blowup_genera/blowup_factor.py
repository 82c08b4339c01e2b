"""Closed forms of the universal blow-up factor Y_k in three presentations.

yk_main: Euler product prod_{n>0} (1 - (q^2 y)^(rn))^-r times the lattice
sum over integer vectors with sum k, each contributing
q^Q * y^((Q + L)/2) where Q = sum_{i<j} (k_i - k_j)^2 and
L = sum_{i<j} (k_i - k_j).  Half-integer intermediates are never
materialized; the combined exponents are formed as integers and checked.

yk_gottsche: the same series written as an eta-quotient style product in
x = q^(2r) y^r times a theta sum over the shifted lattice
Z^(r-1) + (k/r) * (1,...,1), with the upper-triangular all-ones Gram
matrix A: each vector v contributes x^(v^T A v) * y^(v^T A I).  Computed
independently of yk_main so the two presentations cross-check each other.

yk_euler: the y = 1 specialization, prod (1 - q^(2rn))^-r times
sum q^Q, over plain rationals.

yk_hol: the y = 0 branch.  The stated table value is 1 for k = 0 and 0
otherwise; direct evaluation of yk_main at y = 0 instead leaves the single
monotone lattice vector, giving q^(k(r-k)).  Both values are reported side
by side without deciding intent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt

from .coefficients import YPoly, coeff_evaluate
from .partitions import enumerate_lattice_vectors
from .qseries import QSeries, euler_product


class IntegralityViolationError(ArithmeticError):
    """A combined lattice exponent failed to be a nonnegative integer."""


def _check_exponent(value, label: str) -> int:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise IntegralityViolationError(f"{label} exponent {value} is not an integer")
        value = value.numerator
    if value < 0:
        raise IntegralityViolationError(f"{label} exponent {value} is negative")
    return int(value)


def lattice_theta_series(r: int, k: int, order: int, y_sign: int = +1) -> QSeries:
    """Lattice sum of yk_main as a q-series over YPoly, valid through q^order.

    y_sign flips the linear part of the y exponent to (Q - L)/2; the two
    signs give the same series because reversing a vector negates L while
    fixing Q.  Every contributing q-exponent is checked to be congruent to
    k(r-k) mod 2r.
    """
    if y_sign not in (+1, -1):
        raise ValueError("y_sign must be +1 or -1")
    terms: dict[int, YPoly] = {}
    for vec in enumerate_lattice_vectors(r, k, order):
        ks = vec.entries
        pairs = [
            ks[i] - ks[j] for i in range(r) for j in range(i + 1, r)
        ]
        q_exp = _check_exponent(sum(d * d for d in pairs), "q")
        y_exp = _check_exponent(
            Fraction(sum(d * d for d in pairs) + y_sign * sum(pairs), 2), "y"
        )
        if (q_exp - k * (r - k)) % (2 * r) != 0:
            raise IntegralityViolationError(
                f"lattice exponent {q_exp} is not congruent to k(r-k) mod 2r"
            )
        mono = YPoly.monomial(y_exp)
        terms[q_exp] = terms.get(q_exp, YPoly.zero()) + mono
    return QSeries.from_terms(terms, order + 1)


def yk_main(r: int, k: int, order: int, y_sign: int = +1) -> QSeries:
    """Blow-up factor in its Euler-product-times-lattice-sum form, over YPoly."""
    if not 0 <= k < r:
        raise ValueError(f"k must satisfy 0 <= k < r, got k={k}, r={r}")
    prefactor = euler_product(2 * r, r, -r, order + 1)
    return prefactor * lattice_theta_series(r, k, order, y_sign)


def _gottsche_lattice(r: int, k: int, order: int) -> QSeries:
    # vectors v = m + (k/r)(1,..,1), m integral, with v^T A v <= order/(2r);
    # A upper-triangular ones gives v^T A v = ((sum v)^2 + sum v^2)/2, so
    # each coordinate satisfies |v_i| <= sqrt(2 * bound)
    bound = Fraction(order, 2 * r)
    if r == 1:
        # empty lattice, the sum is the single term 1
        return QSeries.one(order + 1)
    shift = Fraction(k, r)
    coord_cap = isqrt(int(2 * bound)) + 1
    lo = -coord_cap - 1
    hi = coord_cap + 1
    terms: dict[int, YPoly] = {}
    for m in product(range(lo, hi + 1), repeat=r - 1):
        v = [mi + shift for mi in m]
        s = sum(v)
        vav = (s * s + sum(x * x for x in v)) / 2
        if vav > bound:
            continue
        vai = sum((r - i) * v[i - 1] for i in range(1, r))
        q_exp = _check_exponent(2 * r * vav, "q")
        y_exp = _check_exponent(r * vav + vai, "y")
        mono = YPoly.monomial(y_exp)
        terms[q_exp] = terms.get(q_exp, YPoly.zero()) + mono
    return QSeries.from_terms(terms, order + 1)


def yk_gottsche(r: int, k: int, order: int) -> QSeries:
    """Blow-up factor in the eta-quotient and shifted-lattice presentation."""
    if not 0 <= k < r:
        raise ValueError(f"k must satisfy 0 <= k < r, got k={k}, r={r}")
    prefactor = euler_product(2 * r, r, -r, order + 1)
    return prefactor * _gottsche_lattice(r, k, order)


def yk_euler(r: int, k: int, order: int) -> QSeries:
    """Euler-characteristic branch: the blow-up factor at y = 1, over Fraction."""
    if not 0 <= k < r:
        raise ValueError(f"k must satisfy 0 <= k < r, got k={k}, r={r}")
    prefactor = euler_product(2 * r, 0, -r, order + 1)
    terms: dict[int, int] = {}
    for vec in enumerate_lattice_vectors(r, k, order):
        q_exp = vec.pair_form
        terms[q_exp] = terms.get(q_exp, 0) + 1
    return prefactor * QSeries.from_terms(terms, order + 1)


@dataclass(frozen=True)
class YkHolReport:
    """Holomorphic branch: stated table value next to the direct y = 0 value."""

    r: int
    k: int
    stated: int
    main_at_y0: QSeries

    @property
    def discrepant(self) -> bool:
        stated_series = QSeries.monomial(
            Fraction(self.stated), 0, self.main_at_y0.order
        )
        return self.main_at_y0 != stated_series

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "k": self.k,
            "stated": self.stated,
            "main_at_y0": self.main_at_y0.to_json(),
            "discrepant": self.discrepant,
        }


def yk_hol(r: int, k: int, order: int) -> YkHolReport:
    """Holomorphic-Euler branch: stated value plus yk_main evaluated at y = 0.

    For 0 < k < r the two disagree (q^(k(r-k)) versus 0); the report
    carries both so callers can record the discrepancy without failing.
    """
    stated = 1 if k == 0 else 0
    at_zero = yk_main(r, k, order).map_coefficients(
        lambda c: coeff_evaluate(c, Fraction(0))
    )
    return YkHolReport(r, k, stated, at_zero)
