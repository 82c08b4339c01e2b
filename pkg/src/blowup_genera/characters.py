"""Torus weights, tangent characters at fixed points, and theta evaluation.

A Weight (i1, i2, num, den) stands for the one-dimensional representation
e_num * e_den**-1 * t1**i1 * t2**i2; num and den are None for a pure
t-monomial, and num == den cancels to that form.  A Character is a finite
integer-multiplicity combination of weights.

Tangent characters come from two closed formulas.  For diagrams Y_a, Y_b
framed at slots a, b the pairing block is

    n_block = e_b/e_a * ( sum over s in Y_a of t1^(-leg_{Y_b}(s)) * t2^(arm_{Y_a}(s)+1)
                        + sum over s in Y_b of t1^(leg_{Y_a}(s)+1) * t2^(-arm_{Y_b}(s)) ),

and for a lattice vector the exceptional block l_block is a simplex of
t-monomials fixed by the difference k_a - k_b (empty when that difference
is 0 or 1 in the relevant direction).  The tangent space on the plane is
the double sum of n_blocks; on the blow-up each n_block enters with the
variable substitutions (t1, t2/t1), (t1/t2, t2) and a monomial twist.

The multiplicative genus is evaluated weight by weight through
theta(x) = (1 - y/x) / (1 - 1/x) = (x - y) / (x - 1), with x the exact
rational value of the weight.  theta_limit_factor instead applies the
ordered e_r -> 0, ..., e_1 -> 0 limit as an exact case table: a weight
with denominator slot below the numerator slot contributes 1, the
opposite order contributes y, and pure t-monomials keep their theta.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .coefficients import Specialization, YPoly, YRat
from .partitions import BlowupFixedPoint, Partition, PartitionTuple, arm_leg


class TrivialWeightError(ValueError):
    """The trivial weight appeared where an isolated fixed point was required."""


class DegenerateSpecializationError(ValueError):
    """A weight evaluated to 1, so its theta factor would divide by zero."""

    def __init__(self, weight, seed):
        self.weight = weight
        self.seed = seed
        super().__init__(
            f"theta factor degenerated: weight {weight_to_str(weight, 1)} evaluates to 1 "
            f"under specialization seed {seed}"
        )


class RankCheckError(RuntimeError):
    """A tangent character has the wrong rank, indicating a convention bug."""


class Weight(NamedTuple):
    i1: int
    i2: int
    num: int | None = None
    den: int | None = None


def make_weight(i1: int, i2: int, num: int | None = None, den: int | None = None) -> Weight:
    if (num is None) != (den is None):
        raise ValueError("e-part needs both slots or neither")
    if num == den:
        num = den = None
    return Weight(i1, i2, num, den)


def weight_is_trivial(w: Weight) -> bool:
    return w.i1 == 0 and w.i2 == 0 and w.num is None


def weight_to_str(w: Weight, mult: int) -> str:
    parts = [str(mult)]
    if w.num is not None:
        parts.append(f"e{w.num}/e{w.den}")
    parts.append(f"t1^{w.i1}")
    parts.append(f"t2^{w.i2}")
    return " * ".join(parts)


def _sort_key(w: Weight):
    return (w.den or 0, w.num or 0, w.i1, w.i2)


class Character:
    """Finite integer combination of weights; zero multiplicities are dropped."""

    __slots__ = ("_mult",)

    def __init__(self, items=()):
        acc: dict[Weight, int] = {}
        for w, m in items:
            acc[w] = acc.get(w, 0) + m
        self._mult = {w: m for w, m in acc.items() if m}

    @classmethod
    def empty(cls) -> "Character":
        return cls()

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self._mult.items(), key=lambda wm: _sort_key(wm[0]))

    @property
    def rank(self) -> int:
        return sum(self._mult.values())

    def __len__(self):
        return len(self._mult)

    def __add__(self, other: "Character") -> "Character":
        return Character(list(self._mult.items()) + list(other._mult.items()))

    def __eq__(self, other):
        if isinstance(other, Character):
            return self._mult == other._mult
        return NotImplemented

    def multiplicity(self, w: Weight) -> int:
        return self._mult.get(w, 0)

    def contains_trivial(self) -> bool:
        return any(weight_is_trivial(w) for w in self._mult)

    def to_str(self) -> str:
        if not self._mult:
            return "0"
        return " + ".join(weight_to_str(w, m) for w, m in self.sorted_items())

    def __repr__(self):
        return f"Character({self.to_str()})"


def n_block(y_a: Partition, y_b: Partition, a: int, b: int) -> Character:
    """Tangent block pairing diagram Y_a at slot a with Y_b at slot b."""
    items = []
    for s in y_a.boxes():
        arm = arm_leg(y_a, s)[0]
        leg = arm_leg(y_b, s)[1]
        items.append((make_weight(-leg, arm + 1, b, a), 1))
    for s in y_b.boxes():
        leg = arm_leg(y_a, s)[1]
        arm = arm_leg(y_b, s)[0]
        items.append((make_weight(leg + 1, -arm, b, a), 1))
    return Character(items)


def l_block(kvec, a: int, b: int) -> Character:
    """Exceptional-divisor tangent block for slots a, b of a lattice vector.

    Nonempty only when k_a > k_b (simplex of nonpositive exponents) or
    k_a + 1 < k_b (simplex of strictly positive exponents).
    """
    ka = kvec.entries[a - 1]
    kb = kvec.entries[b - 1]
    items = []
    if ka > kb:
        bound = ka - kb - 1
        for i in range(bound + 1):
            for j in range(bound + 1 - i):
                items.append((make_weight(-i, -j, b, a), 1))
    elif ka + 1 < kb:
        bound = kb - ka - 2
        for i in range(bound + 1):
            for j in range(bound + 1 - i):
                items.append((make_weight(i + 1, j + 1, b, a), 1))
    return Character(items)


def substitute(c: Character, kind: str) -> Character:
    """Apply one of the supported integer-linear variable substitutions.

    kind "t2/t1" sends (t1, t2) to (t1, t2/t1), so (i1, i2) -> (i1 - i2, i2);
    kind "t1/t2" sends (t1, t2) to (t1/t2, t2), so (i1, i2) -> (i1, i2 - i1).
    Multiplicities are preserved and colliding weights accumulate.
    """
    if kind == "t2/t1":
        def remap(w):
            return make_weight(w.i1 - w.i2, w.i2, w.num, w.den)
    elif kind == "t1/t2":
        def remap(w):
            return make_weight(w.i1, w.i2 - w.i1, w.num, w.den)
    else:
        raise ValueError(f"unsupported substitution {kind!r}")
    return Character((remap(w), m) for w, m in c.sorted_items())


def twist(c: Character, dt1: int = 0, dt2: int = 0) -> Character:
    """Multiply every weight by the monomial t1**dt1 * t2**dt2."""
    return Character(
        (make_weight(w.i1 + dt1, w.i2 + dt2, w.num, w.den), m)
        for w, m in c.sorted_items()
    )


@lru_cache(maxsize=None)
def tangent_p2(fp: PartitionTuple) -> Character:
    """Tangent character at a fixed point of the plane moduli.

    The rank must equal 2*r*n for the tuple of total size n; a mismatch
    means an index-convention bug and raises rather than warns.
    """
    r = fp.rank
    total = Character.empty()
    for a in range(1, r + 1):
        for b in range(1, r + 1):
            total = total + n_block(fp.entries[a - 1], fp.entries[b - 1], a, b)
    expected = 2 * r * fp.total_size
    if total.rank != expected:
        raise RankCheckError(
            f"tangent rank {total.rank} != {expected} at {fp!r}"
        )
    return total


@lru_cache(maxsize=None)
def tangent_blowup(fp: BlowupFixedPoint) -> Character:
    """Tangent character at a blow-up fixed point.

    Sum over slot pairs of the exceptional block plus the two substituted
    and twisted diagram blocks.  The rank must equal the q-degree
    2*r*w + pair_form, and the trivial weight must be absent (fixed points
    are isolated); both are hard checks.
    """
    r = fp.rank
    kv = fp.kvec
    total = Character.empty()
    for a in range(1, r + 1):
        for b in range(1, r + 1):
            d = kv.entries[b - 1] - kv.entries[a - 1]
            total = total + l_block(kv, a, b)
            ny = n_block(fp.y_tuple.entries[a - 1], fp.y_tuple.entries[b - 1], a, b)
            total = total + twist(substitute(ny, "t2/t1"), dt1=d)
            nz = n_block(fp.z_tuple.entries[a - 1], fp.z_tuple.entries[b - 1], a, b)
            total = total + twist(substitute(nz, "t1/t2"), dt2=d)
    expected = fp.virtual_dim
    if total.rank != expected:
        raise RankCheckError(
            f"tangent rank {total.rank} != {expected} at {fp!r}"
        )
    if total.contains_trivial():
        raise TrivialWeightError(f"trivial weight in tangent character at {fp!r}")
    return total


def weight_value(w: Weight, spec: Specialization) -> Fraction:
    """Exact rational value of a weight under a specialization."""
    val = spec.t1**w.i1 * spec.t2**w.i2
    if w.num is not None:
        val = val * spec.e[w.num - 1] / spec.e[w.den - 1]
    return val


def _theta_product(factors, spec: Specialization):
    """Product of theta(x)**m over (weight, x, m) triples, exact in either y mode."""
    if spec.symbolic:
        num = YPoly.one()
        den = YPoly.one()
        for _w, x, m in factors:
            lin_num = YPoly((x, -1))  # x - y
            lin_den = YPoly((x - 1,))
            if m >= 0:
                num = num * lin_num**m
                den = den * lin_den**m
            else:
                num = num * lin_den ** (-m)
                den = den * lin_num ** (-m)
        return YRat(num, den)
    result = Fraction(1)
    for _w, x, m in factors:
        result = result * ((x - spec.y0) / (x - 1)) ** m
    return result


def theta_eval(c: Character, spec: Specialization):
    """Multiplicative theta genus of a character at a specialization.

    Returns a YRat for symbolic y or a Fraction for numeric y.  Raises
    TrivialWeightError if the trivial weight is present and
    DegenerateSpecializationError naming the first weight whose value is 1.
    """
    factors = []
    for w, m in c.sorted_items():
        if weight_is_trivial(w):
            raise TrivialWeightError(f"theta undefined on the trivial weight in {c!r}")
        x = weight_value(w, spec)
        if x == 1:
            raise DegenerateSpecializationError(w, spec.seed)
        factors.append((w, x, m))
    return _theta_product(factors, spec)


def theta_limit_factor(c: Character, spec: Specialization):
    """Theta genus after the ordered limit e_r -> 0, ..., e_1 -> 0.

    Case table per weight: denominator slot below numerator slot gives 1,
    above gives y, and pure t-monomials keep theta of their t-value.  The
    limit is exact by construction, no values are actually driven to 0.
    """
    y_exp = 0
    factors = []
    for w, m in c.sorted_items():
        if weight_is_trivial(w):
            raise TrivialWeightError(f"theta undefined on the trivial weight in {c!r}")
        if w.num is None:
            x = weight_value(w, spec)
            if x == 1:
                raise DegenerateSpecializationError(w, spec.seed)
            factors.append((w, x, m))
        elif w.den > w.num:
            y_exp += m
        # den < num contributes the factor 1
    base = _theta_product(factors, spec)
    if spec.symbolic:
        return YRat(YPoly.monomial(y_exp)) * base
    return spec.y0**y_exp * base
