"""From diagrams to equivariant tangent spaces.

Each fixed point carries a torus representation on its tangent space,
written as an integer combination of monomial weights in t1, t2 and the
framing characters e_a.  The closed formulas below make three promises
that double as bug traps: the rank equals the moduli dimension, no weight
is trivial (fixed points are isolated), and the blow-up blocks are the
plane blocks after a variable substitution and a twist.
"""

from blowup_genera import (
    Partition,
    PartitionTuple,
    enumerate_blowup_fixed_points,
    l_block,
    n_block,
    substitute,
    tangent_blowup,
    tangent_p2,
)
from blowup_genera.partitions import LatticeVector

# The pairing block of two single-box diagrams is t1 + t2.
print("n_block (1),(1):", n_block(Partition((1,)), Partition((1,)), 1, 1))
print("n_block (2),(2):", n_block(Partition((2,)), Partition((2,)), 1, 1))

# Substitution (t1, t2) -> (t1, t2/t1) acts on exponents.
c = n_block(Partition((1,)), Partition((1,)), 1, 1)
print("substituted:", substitute(c, "t2/t1"))

# Exceptional blocks depend only on the degree difference.
for entries in ((1, 0), (0, 2), (3, 0)):
    blk = l_block(LatticeVector(entries), 1, 2)
    print(f"l_block for kvec {entries}: rank {blk.rank}: {blk}")

# Tangent spaces assemble the blocks; rank checks run on construction.
fp = PartitionTuple((Partition((2, 1)), Partition((1,))))
char = tangent_p2(fp)
print("\nplane tangent at", fp, "rank", char.rank, "(= 2*r*n =", 2 * 2 * 4, ")")

for fp in enumerate_blowup_fixed_points(2, 1, 1)[:3]:
    char = tangent_blowup(fp)
    print("blow-up tangent rank", char.rank, "at kvec", fp.kvec.entries,
          "weight", fp.weight)
