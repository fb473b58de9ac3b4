"""Which sublattices arise as Lagrangian lattices.

Exactly the proper, saturated sublattices whose orthogonal complement
contains a vector of positive square. The witness is a formal Kaehler
direction v = x + eps * sum t_i y_i whose markers make the orthogonality
cut exact: v-perp recovers the input sublattice on the nose.
"""
from k3lag import (
    Sublattice,
    direct_sum,
    hyperbolic_plane,
    k3_lattice,
    lag_lattice,
    realizable,
    realize_witness,
)

K3 = k3_lattice()
U = hyperbolic_plane()
U3 = direct_sum(U, U, U)

# The E8 block embeds as a Lagrangian lattice.
rows = [tuple(1 if j == 6 + i else 0 for j in range(22)) for i in range(8)]
block = Sublattice.from_generators(K3, rows)
report = realizable(K3, block)
print("E8 block realizable:", report.ok)
print("eps bound:", report.eps_bound)
print("witness base (a positive vector of the complement):",
      report.witness.base[:6], "...")
print("marker terms:", len(report.witness.terms))
print("Lagrangian lattice of the witness equals the block:",
      lag_lattice(K3, report.witness) == block)

# The rejections carry the failing condition.
print("\nwhole lattice:", realizable(K3, Sublattice.full(K3)).failing_condition)
two_e1 = Sublattice.from_generators(U3, [(2, 0, 0, 0, 0, 0)])
print("<2 e1> (not saturated):", realizable(U3, two_e1).failing_condition)

# The zero sublattice is realizable too: Lagrangian lattices can vanish.
witness, bound = realize_witness(U, Sublattice.zero(U))
print("\nzero sublattice of U: witness base", witness.base, "bound", bound)
print("its Lagrangian lattice has rank", lag_lattice(U, witness).rank)

# The pinned textbook case: <e1> inside U^3 gives the bound 2/9 exactly.
e1 = Sublattice.from_generators(U3, [(1, 0, 0, 0, 0, 0)])
witness, bound = realize_witness(U3, e1)
print("\n<e1> in U^3: eps bound =", bound)
