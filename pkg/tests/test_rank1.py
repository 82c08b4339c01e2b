"""Rank-one hook series and the infinite-product quotient identity."""

from fractions import Fraction as F

import pytest

from blowup_genera.coefficients import (
    Specialization,
    YPoly,
    YRat,
    sample_specialization,
)
from blowup_genera.partitions import enumerate_partitions
from blowup_genera.qseries import QSeries
from blowup_genera.rank1 import (
    nekrasov_okounkov_rhs,
    verify_nekrasov_okounkov,
    w_series,
)


def spec23(y0=None):
    return Specialization(F(2), F(3), (F(5),), y0, seed=0)


def test_w_series_base_and_first_coefficient():
    w = w_series(spec23(), 1)
    assert w.coefficient(0) == 1
    assert w.coefficient(1) == YRat(YPoly((2, -1)) * YPoly((3, -1)), YPoly((2,)))


def test_w_series_at_y_one_counts_partitions():
    spec = sample_specialization(1, 44, F(1))
    w = w_series(spec, 6)
    for n in range(7):
        assert w.coefficient(n) == len(enumerate_partitions(n))


def test_w_series_at_y_zero_is_finite():
    spec = sample_specialization(1, 45, F(0))
    w = w_series(spec, 6)
    for n in range(7):
        assert isinstance(w.coefficient(n), (int, F))  # exact finite rationals


def test_rhs_counts_partitions_in_yq():
    rhs = nekrasov_okounkov_rhs(5)
    for n in range(6):
        p_n = len(enumerate_partitions(n))
        assert rhs.coefficient(n) == YPoly.monomial(n, p_n)


def test_identity_order_zero():
    assert verify_nekrasov_okounkov(spec23(), 0)["pass"] is True


def test_identity_symbolic_three_seeds():
    for seed in (1, 2, 3):
        report = verify_nekrasov_okounkov(sample_specialization(1, seed), 6)
        assert report["pass"] is True
        assert report["first_failure"] is None


def test_identity_negative_control():
    # perturb the left side by hand and confirm the first failure is at q^1
    spec = spec23()
    w_plain = w_series(spec, 4)
    w_12 = w_series(spec, 4, "t2/t1")
    w_21 = w_series(spec, 4, "t1/t2")
    rhs = nekrasov_okounkov_rhs(4)
    bump = QSeries.monomial(1, 1, 5)
    left = (w_12 + bump) * w_21
    right = rhs * w_plain
    assert left.first_difference(right, 4) == 1


def test_quotient_independent_of_specialization():
    # stronger than the identity: the quotient series itself matches between
    # two unrelated specializations
    quotients = []
    for seed in (10, 20):
        spec = sample_specialization(1, seed)
        lhs = w_series(spec, 5, "t2/t1") * w_series(spec, 5, "t1/t2")
        quotients.append(lhs * w_series(spec, 5).invert())
    assert quotients[0].agrees_to(quotients[1], 5)


def test_substitution_validation():
    with pytest.raises(ValueError):
        w_series(spec23(), 3, "q/t")
