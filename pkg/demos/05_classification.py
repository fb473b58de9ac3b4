"""The classifier and its certificates.

A Lagrangian lattice either contains a vector of positive square, in which
case every class splits into two positive pieces, or it is (isotropic
radical) + (negative definite N) and equality with the square >= -2 span
holds iff the roots of N generate it. Certificates are integer identities
a verifier can recheck from scratch.
"""
from k3lag import (
    PeriodData,
    Sublattice,
    classify,
    direct_sum,
    e8_lattice,
    from_diagonal,
    hyperbolic_plane,
    lag_lattice,
    norm,
    realize_witness,
    certificate_for,
    slag_certificate,
    verify_certificate,
)

U = hyperbolic_plane()
U3 = direct_sum(U, U, U)


def v(*coords):
    return tuple(coords) + (0,) * (6 - len(coords))


# The three headline verdicts.
print("U:", classify(U).case, "-> equal", classify(U).equal)
rep = classify(from_diagonal([-4]))
print("<-4>:", rep.case, "roots generate:", rep.roots_generate, "-> equal", rep.equal)
rep = classify(e8_lattice())
print("E8:", rep.case, "roots generate:", rep.roots_generate, "-> equal", rep.equal)

# Certificates over toy period data: gamma of square -4 splits into two
# positive classes.
period = PeriodData(U3, v(1, 1), v(0, 0, 1, 1), v(0, 0, 0, 0, 1, 1))
gamma = v(1, -2)
cert = slag_certificate(period, gamma)
print(f"\ngamma = e1 - 2 f1 (square {norm(U3, gamma)}):")
for coeff, cls in cert.terms:
    print(f"  {coeff} * {cls}  (square {norm(U3, cls)})")
print("verifier accepts:", bool(verify_certificate(cert.context, gamma, cert)))

# The verifier is pure recomputation, so tampering is caught.
from k3lag import SlagCertificate

tampered = SlagCertificate(((2, cert.terms[0][1]), cert.terms[1]), cert.context)
print("tampered certificate:", verify_certificate(cert.context, gamma, tampered))

# A split-case certificate: realize Lag = E8 block inside the K3 lattice,
# then express a deep class over the finite root list.
from k3lag import k3_lattice

K3 = k3_lattice()
rows = [tuple(1 if j == 6 + i else 0 for j in range(22)) for i in range(8)]
block = Sublattice.from_generators(K3, rows)
omega, _ = realize_witness(K3, block)
gamma = tuple([0] * 6 + [2, -1, 0, 1, 0, 0, 1, 0] + [0] * 8)
cert = certificate_for(K3, omega, gamma)
print(f"\nsplit-case gamma of square {norm(K3, gamma)}: "
      f"{len(cert.terms)} root terms, verified:",
      bool(verify_certificate(lag_lattice(K3, omega), gamma, cert)))
