"""Exact period bookkeeping and rotation-phase arithmetic.

Period data is a pair (theta, omega) with theta.theta = 0, theta.conj > 0,
omega orthogonal to theta, stored with exact rational coordinates. The unit
phase zeta is irrational in general and never materialized: only zeta^2 and
sign functionals in which |c| cancels are computed, keeping everything in Q.
All outputs are invariant under positive rescaling of theta and omega, so
integral or rational period data is admissible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from . import intlinalg as la
from .errors import (
    FormalOmegaUnsupported,
    InvalidPeriod,
    NotLagrangian,
    RankMismatch,
    TypeOneOne,
)
from .exact import GaussianRational
from .lattice import FormalVector, Lattice, Sublattice, gram_row, inner, norm

QVec = Tuple[Fraction, ...]


@dataclass(frozen=True)
class PeriodData:
    """Exact rational period direction plus a Kaehler direction."""

    host: Lattice
    theta_re: QVec
    theta_im: QVec
    omega: Union[QVec, FormalVector]

    def __post_init__(self):
        tr = tuple(Fraction(c) for c in self.theta_re)
        ti = tuple(Fraction(c) for c in self.theta_im)
        object.__setattr__(self, "theta_re", tr)
        object.__setattr__(self, "theta_im", ti)
        if isinstance(self.omega, FormalVector):
            if self.omega.rank != self.host.rank:
                raise RankMismatch("omega rank differs from host rank")
        else:
            om = tuple(Fraction(c) for c in self.omega)
            if len(om) != self.host.rank:
                raise RankMismatch("omega rank differs from host rank")
            object.__setattr__(self, "omega", om)
        if len(tr) != self.host.rank or len(ti) != self.host.rank:
            raise RankMismatch("theta rank differs from host rank")

    @property
    def omega_is_rational(self) -> bool:
        return not isinstance(self.omega, FormalVector)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    checked: Tuple[str, ...]


@dataclass(frozen=True)
class RotationPhase:
    """c = gamma.theta and zeta^2 = conj(c)/c, with the chosen square root."""

    c: GaussianRational
    zeta_squared: GaussianRational
    root_choice: int = 1


def validate_period(p: PeriodData) -> ValidationReport:
    """Check every period identity exactly; raise InvalidPeriod on the first
    violated one."""
    checked = []
    lat = p.host

    def check(name: str, ok: bool):
        if not ok:
            raise InvalidPeriod(name)
        checked.append(name)

    tr, ti = p.theta_re, p.theta_im
    check("theta_re.theta_im = 0", inner(lat, tr, ti) == 0)
    check("theta_re^2 = theta_im^2", norm(lat, tr) == norm(lat, ti))
    check("theta.conj(theta) > 0", norm(lat, tr) + norm(lat, ti) > 0)
    if p.omega_is_rational:
        om = p.omega
        check("omega != 0", any(c != 0 for c in om))
        check("omega.theta_re = 0", inner(lat, om, tr) == 0)
        check("omega.theta_im = 0", inner(lat, om, ti) == 0)
        check("omega^2 > 0", norm(lat, om) > 0)
    else:
        om = p.omega
        check("omega != 0", not om.is_zero())
        check("omega.theta_re = 0", inner(lat, om, tr).is_zero())
        check("omega.theta_im = 0", inner(lat, om, ti).is_zero())
        # no positivity identity for a formal omega: signs of formal
        # expressions are undefined
    return ValidationReport(True, tuple(checked))


def _require_rational_omega(p: PeriodData) -> None:
    if not p.omega_is_rational:
        raise FormalOmegaUnsupported(
            "phase and rotation operations need a rational omega"
        )


def _require_lagrangian(p: PeriodData, gamma) -> None:
    val = inner(p.host, gamma, p.omega)
    if val != 0:
        raise NotLagrangian(f"gamma.omega = {val} must be 0")


def _phase_c(p: PeriodData, gamma) -> GaussianRational:
    return GaussianRational(
        Fraction(inner(p.host, gamma, p.theta_re)),
        Fraction(inner(p.host, gamma, p.theta_im)),
    )


def phase_square(p: PeriodData, gamma, root_choice: int = 1) -> RotationPhase:
    """c = gamma.theta and zeta^2 = conj(c)/c in lowest terms."""
    _require_rational_omega(p)
    validate_period(p)
    _require_lagrangian(p, gamma)
    c = _phase_c(p, gamma)
    if c.is_zero():
        g2 = norm(p.host, gamma)
        raise TypeOneOne(
            "gamma.theta = 0: gamma is already of type (1,1)"
            + (
                "; with gamma^2 >= -2 a Lagrangian such class must be 0"
                if g2 >= -2
                else ""
            ),
            gamma_square=g2,
        )
    if root_choice not in (1, -1):
        raise ValueError("root_choice must be +1 or -1")
    return RotationPhase(c, c.conjugate() / c, root_choice)


def rotated_picard(p: PeriodData, gamma) -> Sublattice:
    """Integral classes of type (1,1) after rotating gamma to type (1,1).

    These are the x with x.omega = 0 and Im(conj(c)(x.theta)) = 0, i.e.
    (gamma.theta_re)(x.theta_im) = (gamma.theta_im)(x.theta_re); the
    irrational modulus |c| cancels, so the cut is rational. Always
    contains gamma.
    """
    phase = phase_square(p, gamma)
    lat = p.host
    a, b = phase.c.re, phase.c.im
    row_omega = la.integral_row(gram_row(lat, p.omega))
    g_tr = gram_row(lat, p.theta_re)
    g_ti = gram_row(lat, p.theta_im)
    row_rot = la.integral_row(
        tuple(a * g_ti[j] - b * g_tr[j] for j in range(lat.rank))
    )
    return Sublattice(lat, la.int_kernel([row_omega, row_rot], lat.rank))


def kahler_sign(p: PeriodData, gamma, x, root_choice: int = 1) -> int:
    """Exact sign of x . Re(zeta * theta) for the selected root of zeta^2.

    With zeta = root_choice * conj(c)/|c| this is
    root_choice * sign(Re(conj(c)(x.theta))); only the sign survives the
    irrational normalization.
    """
    phase = phase_square(p, gamma, root_choice)
    lat = p.host
    a, b = phase.c.re, phase.c.im
    val = a * Fraction(inner(lat, x, p.theta_re)) + b * Fraction(
        inner(lat, x, p.theta_im)
    )
    if val > 0:
        return root_choice
    if val < 0:
        return -root_choice
    return 0
