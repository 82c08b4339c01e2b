"""Young diagrams and the fixed-point index sets of both moduli families.

Torus fixed points of the rank-r framed moduli on the plane are r-tuples
of Young diagrams.  On the blown-up plane they are triples
(Y-tuple, Z-tuple, kvec) of two r-tuples and an integer vector, subject
to an integer weight constraint.  All enumerations here are total,
deterministic and pure, so results can be shared read-only between
threads.

Grading convention used throughout the package: a blow-up fixed point
with diagram weight w = sum(|Y_i| + |Z_i|) and lattice vector kvec sits
in q-degree

    2*r*w + sum_{i<j} (k_i - k_j)**2  =  2*r*n + k*(r - k),

where k = sum(kvec) and n is the instanton number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import isqrt
from pathlib import Path
from typing import Iterator, NamedTuple


class Box(NamedTuple):
    """Cell of a Young diagram, 1-based matrix convention (row i, column j)."""

    i: int
    j: int


class Partition:
    """Weakly decreasing tuple of positive parts; the empty partition is allowed."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] <= 0:
            raise ValueError(f"parts must be positive: {parts}")
        self.parts = parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """Row length at 1-based row i, zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def transpose_part(self, j: int) -> int:
        """Column length at 1-based column j, zero beyond the first row."""
        return sum(1 for p in self.parts if p >= j)

    def transpose(self) -> "Partition":
        width = self.parts[0] if self.parts else 0
        return Partition(self.transpose_part(j) for j in range(1, width + 1))

    def boxes(self) -> Iterator[Box]:
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield Box(i, j)

    def __contains__(self, box: Box) -> bool:
        return 1 <= box.j <= self.part(box.i)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"


def arm_leg(p: Partition, box: Box) -> tuple[int, int]:
    """Arm and leg of ``box`` measured in ``p``, as signed integers.

    arm = (length of row i) - j, leg = (length of column j) - i.  The box
    need not lie inside ``p``; rows and columns beyond the diagram count
    as length zero, so boxes outside get negative values.
    """
    return p.part(box.i) - box.j, p.transpose_part(box.j) - box.i


@lru_cache(maxsize=None)
def _part_lists(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _part_lists(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, each exactly once, in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition(parts) for parts in _part_lists(n, n))


@dataclass(frozen=True)
class PartitionTuple:
    """r-tuple of Young diagrams indexing a fixed point of the plane moduli."""

    entries: tuple[Partition, ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def total_size(self) -> int:
        return sum(p.size for p in self.entries)

    def __repr__(self):
        inner = ", ".join(str(list(p.parts)) for p in self.entries)
        return f"PartitionTuple({inner})"


def _compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    # all r-part compositions of n with nonnegative parts, first part descending
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, r - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_tuples(r: int, n: int) -> tuple[PartitionTuple, ...]:
    """All r-tuples of partitions with total size n, in a fixed order."""
    if r < 1:
        raise ValueError("r must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for comp in _compositions(n, r):
        for combo in product(*(enumerate_partitions(c) for c in comp)):
            out.append(PartitionTuple(combo))
    return tuple(out)


@dataclass(frozen=True)
class LatticeVector:
    """Integer vector (k_1, ..., k_r) of exceptional-curve degrees."""

    entries: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def k(self) -> int:
        return sum(self.entries)

    @property
    def pair_form(self) -> int:
        """sum_{i<j} (k_i - k_j)**2, the positive quadratic form on sum-zero vectors."""
        ks = self.entries
        return sum(
            (ks[i] - ks[j]) ** 2 for i in range(len(ks)) for j in range(i + 1, len(ks))
        )

    def __repr__(self):
        return f"LatticeVector({list(self.entries)})"


def enumerate_lattice_vectors(r: int, k: int, qform_bound: int) -> tuple[LatticeVector, ...]:
    """All integer vectors with sum k and pair_form at most qform_bound.

    The form is positive definite on the sum-k affine sublattice, so the
    set is finite.  Every coordinate of a valid vector deviates from k/r
    by at most sqrt(qform_bound); the scan box uses that bound and
    filters, which is complete at desk scale.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if qform_bound < 0:
        raise ValueError("qform_bound must be nonnegative")
    if r == 1:
        return (LatticeVector((k,)),)
    slack = isqrt(qform_bound) + 1
    lo = -(-k // r) - slack  # ceil(k/r) - slack
    hi = k // r + slack
    out = []
    for head in product(range(lo, hi + 1), repeat=r - 1):
        last = k - sum(head)
        vec = LatticeVector(head + (last,))
        if vec.pair_form <= qform_bound:
            out.append(vec)
    return tuple(out)


def blowup_virtual_dim(r: int, k: int, n: int) -> int:
    """q-degree of the blow-up moduli component with invariants (r, k, n)."""
    return 2 * r * n + k * (r - k)


@dataclass(frozen=True)
class BlowupFixedPoint:
    """Triple (Y-tuple, Z-tuple, kvec) indexing a blow-up fixed point."""

    y_tuple: PartitionTuple
    z_tuple: PartitionTuple
    kvec: LatticeVector

    def __post_init__(self):
        if not (self.y_tuple.rank == self.z_tuple.rank == self.kvec.rank):
            raise ValueError("tuple and vector ranks disagree")

    @property
    def rank(self) -> int:
        return self.kvec.rank

    @property
    def k(self) -> int:
        return self.kvec.k

    @property
    def weight(self) -> int:
        return self.y_tuple.total_size + self.z_tuple.total_size

    @property
    def virtual_dim(self) -> int:
        return 2 * self.rank * self.weight + self.kvec.pair_form

    def instanton_number(self) -> int:
        """Recover n from the triple; the grading identity makes this exact."""
        r, k = self.rank, self.k
        rem = self.virtual_dim - k * (r - k)
        if rem % (2 * r) != 0:
            raise ValueError(f"inconsistent fixed point {self}")
        return rem // (2 * r)

    def __repr__(self):
        return f"BlowupFixedPoint({self.y_tuple!r}, {self.z_tuple!r}, {self.kvec!r})"


def enumerate_blowup_fixed_points(r: int, k: int, n: int) -> tuple[BlowupFixedPoint, ...]:
    """All blow-up fixed points with invariants (r, k, n), in a fixed order.

    Requires 0 <= k < r.  For each admissible lattice vector the remaining
    q-degree must be a nonnegative multiple of 2r; anything else is
    excluded (the congruence makes the multiple automatic when sum(kvec)
    equals k, the check is a guard against convention drift).
    """
    if not 0 <= k < r:
        raise ValueError(f"k must satisfy 0 <= k < r, got k={k}, r={r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    vdim = blowup_virtual_dim(r, k, n)
    out = []
    for kvec in enumerate_lattice_vectors(r, k, vdim):
        rem = vdim - kvec.pair_form
        if rem < 0 or rem % (2 * r) != 0:
            continue
        w = rem // (2 * r)
        for wy in range(w, -1, -1):
            for yt in enumerate_tuples(r, wy):
                for zt in enumerate_tuples(r, w - wy):
                    out.append(BlowupFixedPoint(yt, zt, kvec))
    return tuple(out)


# ---------------------------------------------------------------------------
# Optional line-oriented enumeration cache.  Purely an optimization: parsed
# records reproduce the computed lists exactly, bit for bit.

_CACHE_MAGIC = "# fixed-point-cache/1"


def format_partition(p: Partition) -> str:
    return "[" + ",".join(str(x) for x in p.parts) + "]"


def parse_partition(s: str) -> Partition:
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"bad partition literal: {s!r}")
    body = s[1:-1].strip()
    return Partition(int(x) for x in body.split(",")) if body else Partition()


def format_partition_tuple(t: PartitionTuple) -> str:
    return "|".join(format_partition(p) for p in t.entries)


def parse_partition_tuple(s: str) -> PartitionTuple:
    return PartitionTuple(tuple(parse_partition(x) for x in s.split("|")))


def format_lattice_vector(v: LatticeVector) -> str:
    return ",".join(str(x) for x in v.entries)


def parse_lattice_vector(s: str) -> LatticeVector:
    return LatticeVector(tuple(int(x) for x in s.split(",")))


def format_blowup_point(fp: BlowupFixedPoint) -> str:
    return " ; ".join(
        (
            format_partition_tuple(fp.y_tuple),
            format_partition_tuple(fp.z_tuple),
            format_lattice_vector(fp.kvec),
        )
    )


def parse_blowup_point(s: str) -> BlowupFixedPoint:
    ys, zs, ks = (part.strip() for part in s.split(";"))
    return BlowupFixedPoint(
        parse_partition_tuple(ys), parse_partition_tuple(zs), parse_lattice_vector(ks)
    )


class FixedPointCache:
    """On-disk memo of fixed-point enumerations, one text file per key.

    Results served from the cache are identical to freshly computed ones;
    a corrupt or mismatched file is an error rather than a silent recompute.
    """

    def __init__(self, directory):
        self.directory = Path(directory)

    def _path(self, family: str, r: int, k: int, n: int) -> Path:
        return self.directory / f"{family}_r{r}_k{k}_n{n}.txt"

    def _write(self, path: Path, family, r, k, n, lines) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        body = [_CACHE_MAGIC, f"family={family} r={r} k={k} n={n} count={len(lines)}"]
        body.extend(lines)
        path.write_text("\n".join(body) + "\n", encoding="ascii")

    def _read(self, path: Path, family, r, k, n) -> list[str]:
        text = path.read_text(encoding="ascii").splitlines()
        if len(text) < 2 or text[0] != _CACHE_MAGIC:
            raise ValueError(f"unrecognized cache file {path}")
        header = f"family={family} r={r} k={k} n={n} "
        if not text[1].startswith(header):
            raise ValueError(f"cache key mismatch in {path}")
        count = int(text[1].split("count=")[1])
        records = text[2:]
        if len(records) != count:
            raise ValueError(f"truncated cache file {path}")
        return records

    def tuples(self, r: int, n: int) -> tuple[PartitionTuple, ...]:
        path = self._path("p2", r, 0, n)
        if path.exists():
            return tuple(
                parse_partition_tuple(line) for line in self._read(path, "p2", r, 0, n)
            )
        result = enumerate_tuples(r, n)
        self._write(path, "p2", r, 0, n, [format_partition_tuple(t) for t in result])
        return result

    def blowup_points(self, r: int, k: int, n: int) -> tuple[BlowupFixedPoint, ...]:
        path = self._path("blowup", r, k, n)
        if path.exists():
            return tuple(
                parse_blowup_point(line) for line in self._read(path, "blowup", r, k, n)
            )
        result = enumerate_blowup_fixed_points(r, k, n)
        self._write(path, "blowup", r, k, n, [format_blowup_point(fp) for fp in result])
        return result
