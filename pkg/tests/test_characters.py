"""Tangent characters and theta evaluation at exact specializations."""

from fractions import Fraction as F

import pytest

from blowup_genera.characters import (
    Character,
    DegenerateSpecializationError,
    RankCheckError,
    TrivialWeightError,
    l_block,
    make_weight,
    n_block,
    substitute,
    tangent_blowup,
    tangent_p2,
    theta_eval,
    theta_limit_factor,
    twist,
    weight_value,
)
from blowup_genera.coefficients import Specialization, YPoly, YRat, sample_specialization
from blowup_genera.partitions import (
    LatticeVector,
    Partition,
    PartitionTuple,
    enumerate_blowup_fixed_points,
    enumerate_tuples,
)


def spec23(y0=None):
    return Specialization(F(2), F(3), (F(5),), y0, seed=0)


def char_of(*weights):
    return Character((make_weight(*w), 1) for w in weights)


# -- weights and blocks ------------------------------------------------------

def test_weight_canonicalization():
    assert make_weight(1, 0, 2, 2) == make_weight(1, 0)
    with pytest.raises(ValueError):
        make_weight(0, 0, 1, None)


def test_n_block_single_boxes():
    got = n_block(Partition((1,)), Partition((1,)), 1, 1)
    assert got == char_of((1, 0), (0, 1))  # t1 + t2


def test_n_block_empty():
    assert n_block(Partition(), Partition(), 1, 2) == Character.empty()


def test_n_block_row_of_two():
    got = n_block(Partition((2,)), Partition((2,)), 1, 1)
    expected = char_of((0, 2), (0, 1), (1, -1), (1, 0))
    assert got == expected  # t2^2 + t2 + t1 t2^-1 + t1


def test_n_block_carries_e_part():
    # single box of Y_a against the empty Y_b: leg in the empty diagram is
    # -1, so the weight is e2/e1 * t1 * t2
    got = n_block(Partition((1,)), Partition(), 1, 2)
    assert got == Character([(make_weight(1, 1, 2, 1), 1)])


def test_l_block_cases():
    assert l_block(LatticeVector((1, 1)), 1, 2) == Character.empty()
    # k_a - k_b = 1: single constant weight with the e-part
    got = l_block(LatticeVector((1, 0)), 1, 2)
    assert got == Character([(make_weight(0, 0, 2, 1), 1)])
    # k_b - k_a = 2: single t1 t2 weight
    got = l_block(LatticeVector((0, 2)), 1, 2)
    assert got == Character([(make_weight(1, 1, 2, 1), 1)])
    # rank grows as a simplex: difference d > 0 gives d(d+1)/2 weights
    assert l_block(LatticeVector((3, 0)), 1, 2).rank == 6
    assert l_block(LatticeVector((0, 3)), 1, 2).rank == 3


def test_substitute_examples():
    c = char_of((1, 0), (0, 1))
    assert substitute(c, "t2/t1") == char_of((1, 0), (-1, 1))
    assert substitute(Character.empty(), "t2/t1") == Character.empty()
    assert twist(char_of((1, -1)), dt2=2) == char_of((1, 1))
    with pytest.raises(ValueError):
        substitute(c, "t2*t1")


def test_substitution_collisions_accumulate():
    c = char_of((2, 1), (1, 0))
    got = substitute(c, "t2/t1")  # (2,1) -> (1,1)... and (1,0) -> (1,0)
    assert got.rank == 2


# -- tangent characters -------------------------------------------------------

def test_tangent_p2_examples():
    single = PartitionTuple((Partition((1,)),))
    assert tangent_p2(single) == char_of((1, 0), (0, 1))
    empty = PartitionTuple((Partition(),))
    assert tangent_p2(empty) == Character.empty()
    row2 = PartitionTuple((Partition((2,)),))
    assert tangent_p2(row2).rank == 4


def test_tangent_p2_rank_formula():
    for r in (1, 2, 3):
        for n in range(4):
            for fp in enumerate_tuples(r, n):
                assert tangent_p2(fp).rank == 2 * r * n


def test_tangent_blowup_examples():
    pts = enumerate_blowup_fixed_points(1, 0, 0)
    assert tangent_blowup(pts[0]) == Character.empty()

    pts = enumerate_blowup_fixed_points(1, 0, 1)
    y_first = tangent_blowup(pts[0])  # ((1), {}, (0))
    assert y_first == char_of((1, 0), (-1, 1))  # t1 + t2/t1

    pts = enumerate_blowup_fixed_points(2, 1, 0)
    for fp in pts:
        assert tangent_blowup(fp).rank == 1


def test_tangent_blowup_rank_and_isolation():
    for r in (1, 2):
        for k in range(r):
            for n in range(3):
                for fp in enumerate_blowup_fixed_points(r, k, n):
                    char = tangent_blowup(fp)
                    assert char.rank == fp.virtual_dim
                    assert not char.contains_trivial()


def test_rank_check_fires_on_broken_block(monkeypatch):
    # the trap guards against convention bugs; simulate one by dropping the
    # exceptional blocks and calling the uncached implementation
    import blowup_genera.characters as characters

    fp = enumerate_blowup_fixed_points(2, 1, 0)[0]
    monkeypatch.setattr(
        characters, "l_block", lambda kv, a, b: Character.empty()
    )
    with pytest.raises(RankCheckError):
        tangent_blowup.__wrapped__(fp)


# -- theta evaluation ----------------------------------------------------------

def test_theta_eval_symbolic_example():
    val = theta_eval(char_of((1, 0), (0, 1)), spec23())
    assert val == YRat(YPoly((2, -1)) * YPoly((3, -1)), YPoly((2,)))


def test_theta_eval_empty_product():
    assert theta_eval(Character.empty(), spec23()) == 1


def test_theta_eval_trivial_weight_error():
    with pytest.raises(TrivialWeightError):
        theta_eval(char_of((0, 0)), spec23())


def test_theta_eval_degenerate_error_identifies_weight():
    # t1 * t2^-1 evaluates to 1 when t1 == t2 is forced via e-part values;
    # here use t1^2 t2^-1 with t2 = t1^2
    bad_spec = Specialization(F(2), F(4), (F(5),), None, seed=11)
    with pytest.raises(DegenerateSpecializationError) as err:
        theta_eval(char_of((2, -1)), bad_spec)
    assert err.value.weight == make_weight(2, -1)
    assert err.value.seed == 11


def test_theta_eval_multiplicative():
    a = char_of((1, 0), (0, 1))
    b = char_of((1, -1), (0, 2))
    s = spec23()
    assert theta_eval(a + b, s) == theta_eval(a, s) * theta_eval(b, s)


def test_theta_eval_at_y_one_counts_fixed_points():
    s = spec23(F(1))
    for fp in enumerate_tuples(2, 2):
        spec = sample_specialization(2, 3, F(1))
        assert theta_eval(tangent_p2(fp), spec) == 1
    assert theta_eval(char_of((1, 0), (0, 1)), s) == 1


def test_theta_eval_numeric_matches_symbolic():
    c = char_of((1, 0), (0, 1), (1, -1))
    for y0 in (F(0), F(1), F(2, 5)):
        sym = theta_eval(c, spec23())
        num = theta_eval(c, spec23(y0))
        assert sym.evaluate(y0) == num


def test_theta_eval_negative_multiplicity():
    c = Character([(make_weight(1, 0), -1)])
    val = theta_eval(c, spec23())
    assert val == YRat(YPoly((1,)), YPoly((2, -1)))


# -- ordered limit --------------------------------------------------------------

def test_theta_limit_factor_case_table():
    s = Specialization(F(2), F(3), (F(5), F(7)), None, seed=0)
    # numerator slot above denominator slot: factor 1
    assert theta_limit_factor(Character([(make_weight(1, 0, 2, 1), 1)]), s) == 1
    # numerator slot below denominator slot: factor y
    assert theta_limit_factor(Character([(make_weight(1, 0, 1, 2), 1)]), s) == YRat(YPoly.y())
    # pure t-monomial keeps theta: theta(2/3) = (2/3 - y)/(2/3 - 1) = 3y - 2
    got = theta_limit_factor(Character([(make_weight(1, -1), 1)]), s)
    assert got == YRat(YPoly((-2, 3)))


def test_theta_limit_factor_trivial_weight():
    s = Specialization(F(2), F(3), (F(5),), None, seed=0)
    with pytest.raises(TrivialWeightError):
        theta_limit_factor(char_of((0, 0)), s)


def test_limit_bookkeeping_matches_hook_product():
    # for a plane fixed point the limit factor equals
    # prod_a y^((r-1)|Y_a|) * prod of the r = 1 hook thetas of each Y_a
    from blowup_genera.rank1 import hook_character

    r = 3
    spec = sample_specialization(r, 17)
    rank1_spec = Specialization(spec.t1, spec.t2, (spec.e[0],), None, seed=spec.seed)
    for fp in enumerate_tuples(r, 2):
        got = theta_limit_factor(tangent_p2(fp), spec)
        expected = YRat(YPoly.one())
        for part in fp.entries:
            expected = expected * YRat(YPoly.monomial((r - 1) * part.size))
            expected = expected * theta_eval(hook_character(part), rank1_spec)
        assert got == expected


def test_weight_value():
    s = Specialization(F(2), F(3), (F(5), F(7)), None, seed=0)
    assert weight_value(make_weight(1, 1), s) == 6
    assert weight_value(make_weight(0, 0, 2, 1), s) == F(7, 5)
    assert weight_value(make_weight(-1, 0, 1, 2), s) == F(5, 14)


def test_character_serialization():
    c = Character([(make_weight(0, 1, 2, 1), 2), (make_weight(1, 0), 1)])
    assert c.to_str() == "1 * t1^1 * t2^0 + 2 * e2/e1 * t1^0 * t2^1"
    assert Character.empty().to_str() == "0"
