"""Fibration-class pipeline: isotropic witnesses and the nef reflection walk.

An isotropic class orthogonal to a Kaehler-type class is produced through
the canonical form of the second hyperbolic block; a separate walk moves an
isotropic class into the nef chamber by reflecting in norm -2 roots, with
the strictly decreasing pairing trace certifying termination.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .eichler import CanonicalFormResult, canonical_form
from .enumeration import root_slice
from .errors import (
    ImpossibleState,
    NotIsotropic,
    NotPositive,
    WrongSide,
    ZeroVector,
)
from .exact import rational_direction
from .lattice import Isometry, Lattice, gram_row, inner, is_primitive, norm

IntVec = Tuple[int, ...]


@dataclass(frozen=True)
class NefWalkResult:
    """Walk outcome: the nef class, the roots used, and the pairing trace.

    pairing_trace starts with the initial ell.omega and appends the value
    after each reflection; it is strictly decreasing and positive, which
    makes termination observable rather than assumed. The final class pairs
    non-negatively with every root in the remaining slice.
    """

    nef_class: IntVec
    reflections: Tuple[IntVec, ...]
    pairing_trace: Tuple[int, ...]


@dataclass(frozen=True)
class SyzReport:
    """Witness record: primitivized input, canonical form, both witnesses."""

    w_primitive: IntVec
    v: IntVec
    ell: IntVec
    canonical: CanonicalFormResult


def reflection(lat: Lattice, delta) -> Isometry:
    """s_delta(x) = x + (x.delta) delta for a norm -2 root; an involution."""
    dv = tuple(int(c) for c in delta)
    if norm(lat, dv) != -2:
        raise ValueError(f"delta.delta = {norm(lat, dv)} must be -2")
    gd = gram_row(lat, dv)
    n = lat.rank
    return Isometry(
        tuple(
            tuple((1 if i == j else 0) + dv[i] * gd[j] for j in range(n))
            for i in range(n)
        )
    )


def make_nef(lat: Lattice, omega, ell) -> NefWalkResult:
    """Reflect ell into the chamber where no slice root pairs negatively.

    Candidates at each step are the complete root slice 0 < delta.omega <
    ell.omega (the reflected pairing stays positive exactly when delta.omega
    is below that bound), filtered to delta.ell < 0; ties break by minimal
    delta.omega, then lexicographic order. Each step preserves ell.ell = 0
    and strictly decreases ell.omega, so the walk terminates.
    """
    ov = tuple(int(c) for c in omega)
    lv = tuple(int(c) for c in ell)
    w2 = norm(lat, ov)
    if w2 <= 0:
        raise NotPositive(f"omega^2 = {w2} must be positive")
    if norm(lat, lv) != 0:
        raise NotIsotropic(f"ell^2 = {norm(lat, lv)} must be 0")
    pairing = inner(lat, lv, ov)
    if pairing <= 0:
        raise WrongSide(f"ell.omega = {pairing} must be positive")
    trace = [pairing]
    used = []
    cur = lv
    while True:
        bound = trace[-1]
        if bound <= 1:
            break
        candidates = [
            d for d in root_slice(lat, ov, bound) if inner(lat, d, cur) < 0
        ]
        if not candidates:
            break
        delta = min(candidates, key=lambda d: (inner(lat, d, ov), d))
        coupling = inner(lat, cur, delta)
        cur = tuple(c + coupling * d for c, d in zip(cur, delta))
        if norm(lat, cur) != 0:
            raise ImpossibleState("reflection broke isotropy")
        now = inner(lat, cur, ov)
        if not 0 < now < trace[-1]:
            raise ImpossibleState("pairing trace failed to decrease")
        used.append(delta)
        trace.append(now)
    return NefWalkResult(cur, tuple(used), tuple(trace))


def syz_witness(lat: Lattice, w) -> Tuple[IntVec, SyzReport]:
    """Primitive isotropic ell with ell.w = 0 for a Kaehler-type class w.

    Rational input directions are primitivized (positive rescaling only).
    The isotropic witness and the norm-2 companion come from the inverse
    canonical-form isometry applied to the second hyperbolic block, and the
    report records that isometry for callers who want to keep walking.
    """
    wp = rational_direction(w)
    if not any(wp):
        raise ZeroVector("w must be nonzero")
    w2 = norm(lat, wp)
    if w2 <= 0:
        raise NotPositive(f"w.w = {w2} must be positive")
    res = canonical_form(lat, wp)
    ginv = res.g.inverse(lat)
    e2 = lat.basis_vector(2)
    f2 = lat.basis_vector(3)
    v = ginv.apply(tuple(a + b for a, b in zip(e2, f2)))
    ell = ginv.apply(e2)
    if not (
        norm(lat, ell) == 0
        and inner(lat, ell, wp) == 0
        and norm(lat, v) == 2
        and inner(lat, v, wp) == 0
        and any(ell)
        and is_primitive(ell)
    ):
        raise ImpossibleState("witness contract failed")
    return ell, SyzReport(wp, v, ell, res)
