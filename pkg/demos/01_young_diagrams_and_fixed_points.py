"""Fixed points of the torus action are pure combinatorics.

On the plane, a rank-r fixed point is an r-tuple of Young diagrams; on the
blow-up it is a pair of r-tuples plus an integer vector recording degrees
on the exceptional curve.  This script walks through the index sets and
the integer grading that replaces all geometry downstream.
"""

from blowup_genera import (
    Box,
    Partition,
    arm_leg,
    enumerate_blowup_fixed_points,
    enumerate_lattice_vectors,
    enumerate_partitions,
    enumerate_tuples,
)

# A partition is a weakly decreasing list of row lengths.  Arm and leg of a
# box are the hook data every tangent weight is built from; boxes outside
# the diagram give negative values, which the pairing blocks rely on.
lam = Partition((4, 2, 1))
print("partition:", lam, "size", lam.size, "transpose", lam.transpose())
for box in (Box(1, 1), Box(2, 2), Box(5, 1)):
    print(f"  arm/leg of {box}: {arm_leg(lam, box)}")

# Counting: partitions of n, then r-tuples of total size n.
print("\npartitions of 0..8:", [len(enumerate_partitions(n)) for n in range(9)])
print("2-tuples of size 0..5:", [len(enumerate_tuples(2, n)) for n in range(6)])

# Lattice vectors with a fixed sum, bounded by the pairwise-difference form.
vectors = enumerate_lattice_vectors(2, 1, 9)
print("\nsum-1 vectors with pair form <= 9:")
for v in vectors:
    print("  ", v.entries, "form", v.pair_form)

# A blow-up fixed point combines all three ingredients.  Its q-degree is
# 2*r*(|Y|+|Z|) + pair_form, and the instanton number can be read back off.
print("\nblow-up fixed points for r=2, k=1, n=1:")
for fp in enumerate_blowup_fixed_points(2, 1, 1):
    print(
        "  Y:", [list(p.parts) for p in fp.y_tuple.entries],
        "Z:", [list(p.parts) for p in fp.z_tuple.entries],
        "kvec:", fp.kvec.entries,
        "degree:", fp.virtual_dim,
        "n:", fp.instanton_number(),
    )
