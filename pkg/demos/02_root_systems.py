"""Complete short-vector enumeration and root reports.

The enumerator is exact (rational Cholesky decomposition, integer interval
bounds via isqrt) and complete: within the bound, nothing is missed. That
completeness is what downstream certificates rely on.
"""
from k3lag import (
    direct_sum,
    e8_lattice,
    from_diagonal,
    hyperbolic_plane,
    find_isotropic,
    find_positive,
    inner,
    norm,
    root_slice,
    roots_generate,
    short_vectors,
)

E8 = e8_lattice()

# All vectors of square -2 in E8, one representative per +-pair.
roots = short_vectors(E8, 2)
print(f"E8 has {len(roots)} root pairs ({2 * len(roots)} roots)")
print("first few:", roots[:4])

report = roots_generate(E8)
print("roots generate E8 with index one:", report.generates)

# <-4> has no roots at all, so nothing of square >= -2 can generate it.
print("\n<-4> root report:", roots_generate(from_diagonal([-4])))

# Positive and isotropic vector searches.
U = hyperbolic_plane()
print("\npositive vector in U:", find_positive(U))
print("isotropic vector in U:", find_isotropic(U))
print("isotropic in <-4> (definite, provably none):", find_isotropic(from_diagonal([-4])))
# For [[2,0],[0,-3]] no isotropic vector exists (sqrt(3/2) is irrational),
# but the search cannot prove that; it answers honestly.
from k3lag.lattice import Lattice

print("isotropic in [[2,0],[0,-3]] up to height 6:",
      find_isotropic(Lattice(((2, 0), (0, -3))), height=6))

# Bounded root slices: all roots delta with 0 < delta.w < B. This is the
# finite candidate set that makes each step of the nef walk a finite search.
host = direct_sum(U, from_diagonal([-2]))
w = (3, 2, 1)
slice3 = root_slice(host, w, 3)
print(f"\nroot slice of U+<-2> at w={w}, bound 3:")
for d in slice3:
    print(f"  {d}: square {norm(host, d)}, pairing with w {inner(host, d, w)}")
