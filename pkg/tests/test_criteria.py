import random
from fractions import Fraction

import pytest

from k3lag.criteria import (
    SlagCertificate,
    certificate_for,
    classify,
    decompose_positive,
    lag_lattice,
    positive_from_isotropic,
    realizable,
    realize_witness,
    slag_certificate,
    split_radical,
    verify_certificate,
)
from k3lag.errors import (
    HasPositive,
    NotCoupled,
    NotDecomposable,
    NotIsotropic,
    NotLagrangian,
    NotMember,
    NotPositive,
    NotRealizable,
    ZeroOmega,
)
from k3lag.hodge import PeriodData
from k3lag.lattice import (
    FormalVector,
    Lattice,
    Sublattice,
    from_diagonal,
    gram_row,
    inner,
    norm,
    signature,
)
from k3lag import intlinalg as la

from conftest import v6, v22


@pytest.fixture()
def toy(U3):
    return PeriodData(U3, v6(1, 1), v6(0, 0, 1, 1), v6(0, 0, 0, 0, 1, 1))


# --- lag_lattice ----------------------------------------------------------


def test_lag_lattice_rational(U3):
    sub = lag_lattice(U3, v6(0, 0, 0, 0, 1, 1))
    assert sub.rank == 5
    assert sub == Sublattice.from_generators(
        U3, [v6(1, 0), v6(0, 1), v6(0, 0, 1), v6(0, 0, 0, 1), v6(0, 0, 0, 0, 1, -1)]
    )


def test_lag_lattice_formal(U3):
    fv = FormalVector(v6(0, 0, 0, 0, 1, 1), Fraction(1, 2), ((1, v6(1, 0)),))
    sub = lag_lattice(U3, fv)
    assert sub.rank == 4
    assert sub == Sublattice.from_generators(
        U3, [v6(1, 0), v6(0, 0, 1), v6(0, 0, 0, 1), v6(0, 0, 0, 0, 1, -1)]
    )


def test_lag_lattice_k3_signature(K3):
    sub = lag_lattice(K3, v22(1, 1))
    assert sub.rank == 21
    assert signature(sub.as_lattice()) == (2, 19, 0)


def test_lag_lattice_errors(U3):
    with pytest.raises(ZeroOmega):
        lag_lattice(U3, v6())
    with pytest.raises(NotPositive):
        lag_lattice(U3, v6(1, 0))  # isotropic direction


# --- decompositions -------------------------------------------------------


def test_decompose_positive_examples(U):
    full = Sublattice.full(U)
    assert decompose_positive(full, (0, 0), (1, 1)) == ((1, 1), (-1, -1), 1)
    assert decompose_positive(full, (1, 0), (1, 1)) == ((2, 2), (-1, -2), 2)
    assert decompose_positive(full, (1, 1), (1, 1)) == ((2, 2), (-1, -1), 2)


def test_decompose_positive_norms(U):
    full = Sublattice.full(U)
    alpha, beta, m = decompose_positive(full, (1, 0), (1, 1))
    assert norm(U, alpha) == 8 and norm(U, beta) == 4 and m == 2


def test_decompose_positive_errors(U, U3):
    full = Sublattice.full(U)
    with pytest.raises(NotPositive):
        decompose_positive(full, (1, 0), (1, 0))
    sub = lag_lattice(U3, v6(0, 0, 0, 0, 1, 1))
    with pytest.raises(NotMember):
        decompose_positive(sub, v6(0, 0, 0, 0, 1, 0), v6(1, 1))


def test_positive_from_isotropic_examples(U):
    full = Sublattice.full(U)
    assert positive_from_isotropic(full, (1, 0), (0, 1)) == ((1, 1), 1)
    assert positive_from_isotropic(full, (1, 0), (0, -1)) == ((-1, -1), -1)
    with pytest.raises(NotCoupled):
        positive_from_isotropic(full, (1, 0), (1, 0))
    with pytest.raises(NotIsotropic):
        positive_from_isotropic(full, (1, 1), (0, 1))


def test_positive_from_isotropic_minimality(U):
    full = Sublattice.full(U)
    # alpha with negative square needs m > 1
    alpha = (-3, 1)  # alpha^2 = -6, delta.alpha = 1
    v, m = positive_from_isotropic(full, (1, 0), alpha)
    assert norm(U, v) > 0 and m == 4
    prev = tuple((m - 1) * d + a for d, a in zip((1, 0), alpha))
    assert norm(U, prev) <= 0


# --- split_radical and classify -------------------------------------------


def test_split_radical_examples():
    rad, n_lat, rows = split_radical(Lattice(((0, 0), (0, -2))))
    assert rad.basis == ((1, 0),) and n_lat.gram == ((-2,),)
    rad, n_lat, rows = split_radical(from_diagonal([-4]))
    assert rad.rank == 0 and n_lat.gram == ((-4,),)
    deg = Lattice(((0, 0, 0), (0, -2, 1), (0, 1, -2)))
    rad, n_lat, rows = split_radical(deg)
    assert rad.rank == 1
    assert signature(n_lat) == (0, 2, 0)
    assert n_lat.gram in (((-2, 1), (1, -2)),)


def test_split_radical_reassembly():
    # mixed radical directions: permuted paddings around an A2 block
    grams = [
        ((0, 0, 0), (0, -2, 1), (0, 1, -2)),
        ((-2, 0, 1), (0, 0, 0), (1, 0, -2)),
        ((-2, 1, 0), (1, -2, 0), (0, 0, 0)),
        ((0, 0, 0, 0), (0, -2, 1, 0), (0, 1, -2, 0), (0, 0, 0, 0)),
    ]
    for g in grams:
        deg = Lattice(g)
        rad, n_lat, rows = split_radical(deg)
        stacked = tuple(rad.basis) + tuple(rows)
        assert abs(la.det(stacked)) == 1
        assert signature(n_lat) == (0, n_lat.rank, 0)
        for r in rad.basis:
            for c in rows:
                assert inner(deg, r, c) == 0


def test_split_radical_rejects_positive(U):
    with pytest.raises(HasPositive) as exc:
        split_radical(U)
    assert norm(U, exc.value.payload["witness"]) > 0


def test_classify_vectors(U, E8):
    rep = classify(U)
    assert rep.case == "PositiveWitness" and rep.equal
    assert norm(U, rep.witness) > 0
    rep = classify(from_diagonal([-4]))
    assert rep.case == "Split" and not rep.roots_generate and not rep.equal
    rep = classify(E8)
    assert rep.case == "Split" and rep.roots_generate and rep.equal
    rep = classify(Lattice(()))
    assert rep.equal


def test_classify_positive_means_basis_decomposes(U3):
    sub = lag_lattice(U3, v6(0, 0, 0, 0, 1, 1))
    rep = classify(sub.as_lattice())
    assert rep.case == "PositiveWitness"
    x = sub.to_host(rep.witness)
    for row in sub.basis:
        alpha, beta, _ = decompose_positive(sub, row, x)
        assert norm(U3, alpha) > 0 and norm(U3, beta) > 0
        assert sub.contains(alpha) and sub.contains(beta)


# --- certificates ----------------------------------------------------------


def test_certificate_fixtures(toy, U3):
    cert = slag_certificate(toy, v6(1, 0))
    assert cert.terms == ((1, v6(1, 0)),)
    cert = slag_certificate(toy, v6(1, -2))
    assert cert.terms == ((1, v6(2, 2)), (1, v6(-1, -4)))
    assert [norm(U3, c) for _, c in cert.terms] == [8, 8]
    assert verify_certificate(cert.context, v6(1, -2), cert)
    cert = slag_certificate(toy, v6())
    assert cert.terms == ()
    assert verify_certificate(cert.context, v6(), cert)


def test_certificate_not_lagrangian(toy):
    with pytest.raises(NotLagrangian):
        slag_certificate(toy, v6(0, 0, 0, 0, 1, 0))


def test_certificate_random_roundtrip(toy, U3):
    rng = random.Random(4242)
    sub = lag_lattice(U3, toy.omega)
    for _ in range(40):
        coeffs = [rng.randint(-4, 4) for _ in range(sub.rank)]
        gamma = sub.to_host(coeffs)
        cert = slag_certificate(toy, gamma)
        assert verify_certificate(sub, gamma, cert)


def test_certificate_split_case_with_roots(K3):
    # formal omega realizing Lag = one E8 block: the split branch solves
    # over the finite root list
    e8_rows = [tuple(1 if j == 6 + i else 0 for j in range(22)) for i in range(8)]
    block = Sublattice.from_generators(K3, e8_rows)
    witness, _ = realize_witness(K3, block)
    gamma = v22(*([0] * 6 + [2, -1, 0, 1, 0, 0, 1, 0]))  # deep in the block
    assert norm(K3, gamma) < -2
    cert = certificate_for(K3, witness, gamma)
    sub = lag_lattice(K3, witness)
    assert sub == block
    assert verify_certificate(sub, gamma, cert)
    assert all(norm(K3, cls) == -2 for _, cls in cert.terms)


def test_certificate_split_obstruction(U3):
    # Lag = <e1 - 2f1> (square -4, no roots): certificates must refuse
    target = Sublattice.from_generators(U3, [v6(1, -2)])
    witness, _ = realize_witness(U3, target)
    gamma = v6(1, -2)
    with pytest.raises(NotDecomposable):
        certificate_for(U3, witness, gamma)


def test_certificate_mutations_rejected(toy, U3):
    gamma = v6(1, -2)
    cert = slag_certificate(toy, gamma)
    sub = cert.context
    for idx in range(len(cert.terms)):
        for bump in (1, -1):
            terms = list(cert.terms)
            c, cls = terms[idx]
            terms[idx] = (c + bump, cls)
            mutated = SlagCertificate(tuple(t for t in terms if t[0] != 0), sub)
            assert not verify_certificate(sub, gamma, mutated)
    # class with square < -2 is rejected even when sums match
    bad = SlagCertificate(((1, v6(1, -2)),), sub)
    chk = verify_certificate(sub, gamma, bad)
    assert not chk and "square" in chk.reason
    # sum mismatch diagnostic
    off = SlagCertificate(cert.terms[:1], sub)
    chk = verify_certificate(sub, gamma, off)
    assert not chk and chk.reason == "sum mismatch"


def test_rational_period_always_positive_witness(U3, K3):
    # integral primitivization of theta_re is a positive Lagrangian vector
    toyset = [
        PeriodData(U3, v6(1, 1), v6(0, 0, 1, 1), v6(0, 0, 0, 0, 1, 1)),
        PeriodData(U3, v6(2, 1), v6(0, 0, 1, 2), v6(0, 0, 0, 0, 2, 1)),
    ]
    for p in toyset:
        sub = lag_lattice(p.host, p.omega)
        rep = classify(sub.as_lattice())
        assert rep.case == "PositiveWitness"


# --- realizability ---------------------------------------------------------


def test_realizable_e8_block(K3):
    rows = [tuple(1 if j == 6 + i else 0 for j in range(22)) for i in range(8)]
    block = Sublattice.from_generators(K3, rows)
    rep = realizable(K3, block)
    assert rep.ok and rep.witness is not None and rep.eps_bound > 0
    sub = lag_lattice(K3, rep.witness)
    assert sub == block


def test_realizable_rejections(K3, U3):
    assert realizable(K3, Sublattice.full(K3)).failing_condition == "NotProper"
    assert (
        realizable(U3, Sublattice.from_generators(U3, [v6(2, 0)])).failing_condition
        == "NotSaturated"
    )
    # complement without positive vectors: E = <e1+f1>-perp inside U
    host = Lattice(((2, 0), (0, -2)))
    sub = Sublattice.from_generators(host, [(1, 0)])
    rep = realizable(host, sub)
    assert rep.failing_condition == "NoPositiveInComplement"
    with pytest.raises(NotRealizable):
        realize_witness(K3, Sublattice.full(K3))


def test_realize_witness_u3_e1(U3):
    e = Sublattice.from_generators(U3, [v6(1, 0)])
    witness, bound = realize_witness(U3, e)
    assert bound == Fraction(2, 9)
    assert witness.base == tuple(Fraction(c) for c in v6(0, 0, 1, 1))
    assert len(witness.terms) == 5
    # joint kernel identity
    rows = [la.integral_row(gram_row(U3, witness.base))]
    rows += [la.integral_row(gram_row(U3, y)) for _, y in witness.terms]
    assert la.int_kernel(rows, 6) == e.basis


def test_realize_witness_zero_sublattice(U):
    e = Sublattice.zero(U)
    witness, bound = realize_witness(U, e)
    assert witness.base == (Fraction(1), Fraction(1))
    assert len(witness.terms) == 2 and bound == Fraction(2, 7)
    sub = lag_lattice(U, witness)
    assert sub.rank == 0


def _vertex_positivity(host, witness, bound):
    # v.v > 0 at every sign pattern t_i = +-1 with eps = bound/2, checked in
    # integers: multiply through by the squared denominator
    x = witness.base
    ys = [y for _, y in witness.terms]
    x2 = inner(host, x, x)
    a = [inner(host, x, y) for y in ys]
    nmat = [[inner(host, yi, yj) for yj in ys] for yi in ys]
    eps = bound / 2
    p, q = eps.numerator, eps.denominator
    m = len(ys)
    for mask in range(1 << m):
        t = [1 if mask & (1 << i) else -1 for i in range(m)]
        s1 = sum(t[i] * a[i] for i in range(m))
        s2 = sum(t[i] * t[j] * nmat[i][j] for i in range(m) for j in range(m))
        value = x2 * q * q + 2 * p * q * s1 + p * p * s2
        if value <= 0:
            return False
    return True


def test_realize_witness_vertex_positivity(U3):
    e = Sublattice.from_generators(U3, [v6(1, 0)])
    witness, bound = realize_witness(U3, e)
    assert _vertex_positivity(U3, witness, bound)


def test_realize_witness_vertex_positivity_e8_block(K3):
    rows = [tuple(1 if j == 6 + i else 0 for j in range(22)) for i in range(8)]
    block = Sublattice.from_generators(K3, rows)
    witness, bound = realize_witness(K3, block)
    assert _vertex_positivity(K3, witness, bound)  # 2^14 sign patterns
