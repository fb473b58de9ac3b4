import random
from fractions import Fraction

import pytest

from k3lag.errors import (
    FormalOmegaUnsupported,
    InvalidPeriod,
    NotLagrangian,
    TypeOneOne,
)
from k3lag.hodge import (
    PeriodData,
    kahler_sign,
    phase_square,
    rotated_picard,
    validate_period,
)
from k3lag.lattice import FormalVector, Sublattice

from conftest import v6


@pytest.fixture()
def toy(U3):
    # theta = (e1+f1) + i(e2+f2), omega = e3+f3
    return PeriodData(U3, v6(1, 1), v6(0, 0, 1, 1), v6(0, 0, 0, 0, 1, 1))


def test_validate_toy(toy):
    assert validate_period(toy).ok


def test_validate_degenerate_theta(U3):
    p = PeriodData(U3, v6(1, 0), v6(), v6(0, 0, 0, 0, 1, 1))
    with pytest.raises(InvalidPeriod) as exc:
        validate_period(p)
    assert "theta.conj(theta)" in exc.value.reason


def test_validate_isotropic_omega(U3):
    # omega = e1 is orthogonal to theta = (e2+f2) + i(e3+f3) but has square 0
    p = PeriodData(U3, v6(0, 0, 1, 1), v6(0, 0, 0, 0, 1, 1), v6(1, 0))
    with pytest.raises(InvalidPeriod) as exc:
        validate_period(p)
    assert exc.value.reason == "omega^2 > 0"


def test_validate_nonorthogonal_omega(U3):
    p = PeriodData(U3, v6(1, 1), v6(0, 0, 1, 1), v6(1, 0, 0, 0, 1, 1))
    with pytest.raises(InvalidPeriod) as exc:
        validate_period(p)
    assert "omega.theta_re" in exc.value.reason


def test_validate_unequal_norms(U3):
    p = PeriodData(U3, v6(1, 1), v6(0, 0, 2, 2), v6(0, 0, 0, 0, 1, 1))
    with pytest.raises(InvalidPeriod) as exc:
        validate_period(p)
    assert exc.value.reason == "theta_re^2 = theta_im^2"


def test_phase_square_fixtures(toy):
    ph = phase_square(toy, v6(1, 0))
    assert (ph.c.re, ph.c.im) == (1, 0)
    assert (ph.zeta_squared.re, ph.zeta_squared.im) == (1, 0)
    ph = phase_square(toy, v6(0, 0, 1, 0))
    assert (ph.c.re, ph.c.im) == (0, 1)
    assert (ph.zeta_squared.re, ph.zeta_squared.im) == (-1, 0)
    ph = phase_square(toy, v6(1, 0, 1, 0))
    assert (ph.c.re, ph.c.im) == (1, 1)
    assert (ph.zeta_squared.re, ph.zeta_squared.im) == (0, -1)


def test_phase_square_modulus_one(toy):
    rng = random.Random(11)
    for _ in range(25):
        gamma = v6(*(rng.randint(-3, 3) for _ in range(4)))
        try:
            ph = phase_square(toy, gamma)
        except TypeOneOne:
            continue
        z = ph.zeta_squared
        assert z.norm_squared() == 1
        assert (z * z.conjugate()).re == 1


def test_phase_square_errors(toy, U3):
    with pytest.raises(NotLagrangian):
        phase_square(toy, v6(0, 0, 0, 0, 1, 0))
    with pytest.raises(TypeOneOne) as exc:
        phase_square(toy, v6(0, 0, 0, 0, 1, -1))
    assert exc.value.payload["gamma_square"] == -2
    fv = FormalVector(v6(0, 0, 0, 0, 1, 1), Fraction(1, 2), ((1, v6(1, 0)),))
    formal = PeriodData(U3, v6(1, 1), v6(0, 0, 1, 1), fv)
    with pytest.raises(FormalOmegaUnsupported):
        phase_square(formal, v6(0, 1))


def test_rotated_picard_fixtures(toy, U3):
    rp = rotated_picard(toy, v6(1, 0))
    expected = Sublattice.from_generators(
        U3, [v6(1, 0), v6(0, 1), v6(0, 0, 1, -1), v6(0, 0, 0, 0, 1, -1)]
    )
    assert rp == expected and rp.rank == 4
    rp2 = rotated_picard(toy, v6(0, 0, 1, 0))
    expected2 = Sublattice.from_generators(
        U3, [v6(0, 0, 1, 0), v6(0, 0, 0, 1), v6(1, -1), v6(0, 0, 0, 0, 1, -1)]
    )
    assert rp2 == expected2


def test_rotated_picard_basis_satisfies_conditions(toy, U3):
    from k3lag.lattice import inner

    gamma = v6(1, 0, 1, 0)
    rp = rotated_picard(toy, gamma)
    a = inner(U3, gamma, toy.theta_re)
    b = inner(U3, gamma, toy.theta_im)
    for row in rp.basis:
        assert inner(U3, row, toy.omega) == 0
        assert a * inner(U3, row, toy.theta_im) == b * inner(U3, row, toy.theta_re)


def test_rotated_picard_contains_gamma(toy):
    rng = random.Random(23)
    for _ in range(25):
        gamma = v6(*(rng.randint(-3, 3) for _ in range(4)))
        try:
            rp = rotated_picard(toy, gamma)
        except TypeOneOne:
            continue
        assert rp.contains(gamma)


def test_kahler_sign_fixtures(toy):
    assert kahler_sign(toy, v6(1, 0), v6(1, 0), 1) == 1
    assert kahler_sign(toy, v6(1, 0), v6(0, 0, 1, -1), 1) == 0
    assert kahler_sign(toy, v6(1, 0), v6(1, 0), -1) == -1


def test_kahler_sign_antisymmetric_in_root(toy):
    rng = random.Random(37)
    for _ in range(25):
        gamma = v6(rng.randint(-2, 2), rng.randint(-2, 2))
        x = v6(*(rng.randint(-3, 3) for _ in range(6)))
        try:
            plus = kahler_sign(toy, gamma, x, 1)
        except TypeOneOne:
            continue
        assert kahler_sign(toy, gamma, x, -1) == -plus


def test_scale_invariance(toy, U3):
    rng = random.Random(101)
    gamma = v6(1, 0, 1, 0)
    base_phase = phase_square(toy, gamma)
    base_picard = rotated_picard(toy, gamma)
    base_sign = kahler_sign(toy, gamma, v6(2, 1, 0, 1), 1)
    for _ in range(20):
        s = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        t = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        scaled = PeriodData(
            U3,
            tuple(s * c for c in toy.theta_re),
            tuple(s * c for c in toy.theta_im),
            tuple(t * c for c in toy.omega),
        )
        ph = phase_square(scaled, gamma)
        assert ph.zeta_squared == base_phase.zeta_squared
        assert rotated_picard(scaled, gamma) == base_picard
        assert kahler_sign(scaled, gamma, v6(2, 1, 0, 1), 1) == base_sign
