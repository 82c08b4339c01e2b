"""Generating series assembly: gradings, modes, closed form, reports."""

from fractions import Fraction as F

import pytest

from blowup_genera.characters import DegenerateSpecializationError
from blowup_genera.coefficients import (
    Specialization,
    YPoly,
    YRat,
    coeff_evaluate,
    sample_specialization,
)
from blowup_genera.genera import (
    LIMIT,
    SeriesRequest,
    series_report,
    z_series,
    z_series_limit_closed,
    zhat_series,
)
from blowup_genera.partitions import FixedPointCache, enumerate_tuples
from blowup_genera.rank1 import w_series


def spec23(y0=None):
    return Specialization(F(2), F(3), (F(5),), y0, seed=0)


def theta(x, y0=None):
    if y0 is None:
        return YRat(YPoly((x, -1)), YPoly((x - 1,)))
    return (x - y0) / (x - 1)


def test_z_series_rank1_base():
    z = z_series(SeriesRequest(rank=1, max_n=0, spec=spec23()))
    assert z.coefficient(0) == 1
    assert z.order == 1


def test_z_series_rank1_first_coefficient():
    z = z_series(SeriesRequest(rank=1, max_n=1, spec=spec23()))
    assert z.coefficient(0) == 1
    assert z.coefficient(1) == 0
    assert z.coefficient(2) == theta(F(2)) * theta(F(3))


def test_z_series_at_y_one_counts_tuples():
    for r in (1, 2):
        spec = sample_specialization(r, 21, F(1))
        z = z_series(SeriesRequest(rank=r, max_n=3, spec=spec))
        for n in range(4):
            assert z.coefficient(2 * r * n) == len(enumerate_tuples(r, n))


def test_zhat_series_rank1_examples():
    zh = zhat_series(SeriesRequest(rank=1, max_n=1, spec=spec23(), k=0))
    assert zh.coefficient(0) == 1
    t1, t2 = F(2), F(3)
    expected = theta(t1) * theta(t2 / t1) + theta(t1 / t2) * theta(t2)
    assert zh.coefficient(2) == expected


def test_zhat_series_rank2_k1_counts_at_y_one():
    spec = sample_specialization(2, 9, F(1))
    zh = zhat_series(SeriesRequest(rank=2, max_n=0, spec=spec, k=1))
    assert zh.offset == 1
    assert zh.coefficient(1) == 2


def test_zhat_support_congruence():
    for (r, k) in ((2, 0), (2, 1), (3, 2)):
        spec = sample_specialization(r, 31)
        zh = zhat_series(SeriesRequest(rank=r, max_n=1, spec=spec, k=k))
        for e, c in zh.items():
            assert (e - k * (r - k)) % (2 * r) == 0


def test_zhat_rejects_bad_k():
    with pytest.raises(ValueError):
        zhat_series(SeriesRequest(rank=2, max_n=1, spec=sample_specialization(2, 1), k=2))


def test_degenerate_specialization_propagates():
    # t2 = t1^2 collides with the hook weight t1^2/t2 of the row diagram (3)
    bad = Specialization(F(4), F(16), (F(5),), None, seed=77)
    with pytest.raises(DegenerateSpecializationError) as err:
        z_series(SeriesRequest(rank=1, max_n=3, spec=bad))
    assert err.value.seed == 77


def test_limit_closed_form_rank1_is_w_in_q_squared():
    spec = spec23()
    req = SeriesRequest(rank=1, max_n=3, spec=spec, mode=LIMIT)
    closed = z_series_limit_closed(req)
    w = w_series(spec, 3)
    for m in range(4):
        assert closed.coefficient(2 * m) == w.coefficient(m)


def test_limit_closed_form_first_blowup_coefficient():
    spec = sample_specialization(2, 4)
    req = SeriesRequest(rank=2, max_n=1, spec=spec, mode=LIMIT)
    closed = z_series_limit_closed(req)
    expected = 2 * YRat(YPoly.y()) * theta(spec.t1) * theta(spec.t2)
    assert closed.coefficient(4) == expected


def test_limit_mode_equals_closed_form():
    for r in (1, 2, 3):
        spec = sample_specialization(r, 13)
        req = SeriesRequest(rank=r, max_n=2, spec=spec, mode=LIMIT)
        assert z_series(req) == z_series_limit_closed(req)


def test_limit_mode_rank1_equals_equivariant():
    spec = sample_specialization(1, 8)
    a = z_series(SeriesRequest(rank=1, max_n=3, spec=spec))
    b = z_series(SeriesRequest(rank=1, max_n=3, spec=spec, mode=LIMIT))
    assert a == b


def test_closed_form_requires_limit_mode():
    with pytest.raises(ValueError):
        z_series_limit_closed(SeriesRequest(rank=1, max_n=1, spec=spec23()))


def test_symbolic_numeric_cross_mode():
    seed = 12
    for y0 in (F(1), F(2, 3)):
        sym_spec = sample_specialization(2, seed)
        num_spec = sample_specialization(2, seed, y0)
        sym = z_series(SeriesRequest(rank=2, max_n=2, spec=sym_spec))
        num = z_series(SeriesRequest(rank=2, max_n=2, spec=num_spec))
        assert sym.map_coefficients(lambda c: coeff_evaluate(c, y0)) == num

        sym = zhat_series(SeriesRequest(rank=2, max_n=2, spec=sym_spec, k=1))
        num = zhat_series(SeriesRequest(rank=2, max_n=2, spec=num_spec, k=1))
        assert sym.map_coefficients(lambda c: coeff_evaluate(c, y0)) == num


def test_threaded_sum_matches_sequential():
    spec = sample_specialization(2, 6)
    seq = zhat_series(SeriesRequest(rank=2, max_n=2, spec=spec, k=1))
    par = zhat_series(SeriesRequest(rank=2, max_n=2, spec=spec, k=1, threads=4))
    assert seq == par


def test_cache_does_not_change_results(tmp_path):
    spec = sample_specialization(2, 3)
    plain = zhat_series(SeriesRequest(rank=2, max_n=1, spec=spec, k=1))
    cache = FixedPointCache(tmp_path)
    cached_cold = zhat_series(
        SeriesRequest(rank=2, max_n=1, spec=spec, k=1, cache=cache)
    )
    cached_warm = zhat_series(
        SeriesRequest(rank=2, max_n=1, spec=spec, k=1, cache=cache)
    )
    assert plain == cached_cold == cached_warm


def test_series_report_schema():
    spec = sample_specialization(1, 5)
    req = SeriesRequest(rank=1, max_n=2, spec=spec)
    rep = series_report("z", req)
    assert rep["schema"] == "series-report/1"
    assert rep["kind"] == "z"
    assert rep["params"]["seed"] == 5
    assert rep["params"]["prng"] == "splitmix64"
    assert rep["fixed_point_counts"] == {"0": 1, "2": 1, "4": 2}
    assert "wall_clock_seconds" in rep
    assert set(rep["series"]) == {"offset", "order", "coeffs"}
    lean = series_report("zhat", req, include_timing=False)
    assert "wall_clock_seconds" not in lean
