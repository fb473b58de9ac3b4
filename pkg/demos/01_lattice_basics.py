"""Exact lattice arithmetic: constructors, signatures, saturation, complements.

Every computation below is over Z or Q with zero tolerance; printing a
result means it was computed exactly, not approximated.
"""
from k3lag import (
    Lattice,
    Sublattice,
    e8_lattice,
    hyperbolic_plane,
    inner,
    k3_lattice,
    orth_complement,
    radical,
    saturate,
    signature,
    sublattice_index,
)

# The three building blocks. U is the hyperbolic plane, E8 the negative
# definite even unimodular rank-8 lattice, and the rank-22 lattice is
# U + U + U + E8 + E8 in a fixed coordinate order.
U = hyperbolic_plane()
E8 = e8_lattice()
K3 = k3_lattice()

for name, lat in [("U", U), ("E8", E8), ("K3 lattice", K3)]:
    print(f"{name}: rank {lat.rank}, even={lat.even}, det={lat.det()}, "
          f"signature={signature(lat)}")

# Pairings are plain integer arithmetic through the Gram matrix.
print("\n(e+f).(e+f) in U =", inner(U, (1, 1), (1, 1)))
print("first E8 basis vector squared =", inner(E8, (1,) + (0,) * 7, (1,) + (0,) * 7))

# Saturation closes a subgroup under rational multiples that are integral.
s = Sublattice.from_generators(U, [(2, 0)])
print("\nsaturation of <(2,0)>:", saturate(U, s).basis)
index2 = Sublattice.from_generators(U, [(1, 1), (1, -1)])
print("index of <(1,1),(1,-1)> in its saturation:",
      sublattice_index(index2, saturate(U, index2)))

# Orthogonal complements are always saturated; for a nondegenerate host and
# saturated input, taking the complement twice returns the input.
e = Sublattice.from_generators(U, [(1, 0)])
print("\ne-perp in U:", orth_complement(U, e).basis, "(isotropic: e is in its own perp)")
s = saturate(U, Sublattice.from_generators(U, [(1, 1)]))
print("double complement returns the input:",
      orth_complement(U, orth_complement(U, s)) == s)

# Degenerate forms are first-class: the radical is the kernel of the Gram.
deg = Lattice(((0, 0), (0, -2)))
print("\nradical of [[0,0],[0,-2]]:", radical(deg).basis)
print("signature of the same:", signature(deg), "(the 1 at the end is the radical rank)")
