"""Complete, deterministic vector enumeration.

Short vectors in definite lattices via exact Fincke-Pohst (rational
Cholesky-style decomposition, integer interval bounds computed with isqrt,
never a float), root reports, positive/isotropic searches, and the bounded
root slices that drive the nef reflection walk. Completeness is the
contract: enumerations return exactly the stated finite sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Iterator, List, Optional, Tuple

from . import intlinalg as la
from .errors import NotNegativeDefinite, NotPositive
from .exact import content, primitivize, rational_direction, sign_normalized
from .lattice import (
    Lattice,
    Sublattice,
    gram_row,
    inner,
    norm,
    orth_complement,
    radical,
    signature,
)

IntVec = Tuple[int, ...]


@dataclass(frozen=True)
class Unknown:
    """Honest third answer: no isotropic vector found up to this height."""

    height: int


@dataclass(frozen=True)
class RootReport:
    """All norm -2 vectors of a negative definite lattice.

    roots holds one representative per +-pair (first nonzero coordinate
    positive, lexicographically sorted); generates is true iff their span
    has index 1 in the host.
    """

    roots: Tuple[IntVec, ...]
    count: int
    generates: bool
    generation_basis: Optional[Sublattice]


def _floor_sqrt(t: Fraction) -> int:
    """floor(sqrt(t)) for a nonnegative rational, exactly."""
    if t < 0:
        raise ValueError("negative radicand")
    return isqrt(t.numerator * t.denominator) // t.denominator


def _floor_add_sqrt(r: Fraction, t: Fraction) -> int:
    """floor(r + sqrt(t)) for rational r and nonnegative rational t."""
    k = (r.numerator // r.denominator) + _floor_sqrt(t)
    # k is within 1 of the answer; settle it with exact comparisons
    while True:
        d = k + 1 - r
        if d <= 0 or d * d <= t:
            k += 1
        else:
            break
    while True:
        d = k - r
        if d > 0 and d * d > t:
            k -= 1
        else:
            break
    return k


def _decompose(pd) -> Tuple[List[Fraction], List[List[Fraction]]]:
    """Q(y) = sum_k d[k] (y_k + sum_{j>k} mu[k][j] y_j)^2 for pos. def. Q."""
    n = len(pd)
    a = [[Fraction(x) for x in row] for row in pd]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        d[k] = a[k][k]
        if d[k] <= 0:
            raise NotNegativeDefinite("form is not definite")
        for j in range(k + 1, n):
            mu[k][j] = a[k][j] / d[k]
        for i in range(k + 1, n):
            for j in range(i, n):
                a[i][j] -= a[i][k] * a[k][j] / d[k]
                a[j][i] = a[i][j]
    return d, mu


def _ellipsoid_points(
    pd, center: Tuple[Fraction, ...], bound: Fraction
) -> Iterator[Tuple[IntVec, Fraction]]:
    """Integer points x with Q(x - center) <= bound, with the exact value.

    Deterministic order; complete by construction of the level bounds.
    """
    n = len(pd)
    if bound < 0:
        return
    if n == 0:
        yield (), Fraction(0)
        return
    d, mu = _decompose(pd)
    x = [0] * n

    def rec(k: int, budget: Fraction) -> Iterator[Tuple[IntVec, Fraction]]:
        c = -center[k]
        for j in range(k + 1, n):
            c += mu[k][j] * (x[j] - center[j])
        t = budget / d[k]
        hi = _floor_add_sqrt(-c, t)
        lo = -_floor_add_sqrt(c, t)
        for v in range(lo, hi + 1):
            x[k] = v
            used = d[k] * (v + c) ** 2
            if used > budget:
                continue
            if k == 0:
                yield tuple(x), bound - (budget - used)
            else:
                yield from rec(k - 1, budget - used)
        x[k] = 0

    yield from rec(n - 1, bound)


def _require_negative_definite(lat: Lattice) -> None:
    p, n, z = signature(lat)
    if p != 0 or z != 0:
        raise NotNegativeDefinite(
            f"lattice has signature {(p, n, z)}, expected (0, {lat.rank}, 0)"
        )


def short_vectors(lat: Lattice, bound: int) -> List[IntVec]:
    """All x with 0 < -x.x <= bound, one per +-pair, lexicographic.

    Complete: misses nothing within the bound.
    """
    _require_negative_definite(lat)
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    pd = tuple(tuple(-g for g in row) for row in lat.gram)
    zero = tuple(Fraction(0) for _ in range(lat.rank))
    out = []
    for x, q in _ellipsoid_points(pd, zero, Fraction(bound)):
        if q == 0:
            continue
        if sign_normalized(x) == x:
            out.append(x)
    out.sort()
    return out


def roots_generate(lat: Lattice) -> RootReport:
    """Enumerate all norm -2 roots and test index-1 generation."""
    roots = tuple(
        v for v in short_vectors(lat, 2) if norm(lat, v) == -2
    ) if lat.rank else ()
    if lat.rank == 0:
        # the zero lattice is generated by the empty root set
        return RootReport((), 0, True, None)
    if not roots:
        return RootReport((), 0, False, None)
    span = Sublattice.from_generators(lat, roots)
    return RootReport(roots, len(roots), span.is_full(), span)


def find_positive(lat: Lattice) -> Optional[IntVec]:
    """Some v with v.v > 0, or None iff the signature has p = 0.

    Deterministic: basis vectors, then basis pairs, then a rational
    positive vector from exact diagonalization scaled to a primitive
    integer vector.
    """
    p, _, _ = signature(lat)
    if p == 0:
        return None
    g = lat.gram
    n = lat.rank
    for i in range(n):
        if g[i][i] > 0:
            return lat.basis_vector(i)
    for i in range(n):
        for j in range(i + 1, n):
            for s in (1, -1):
                if g[i][i] + g[j][j] + 2 * s * g[i][j] > 0:
                    return tuple(
                        (1 if k == i else (s if k == j else 0)) for k in range(n)
                    )
    diag, basis = la.symmetric_diagonalize(g)
    k = next(i for i in range(n) if diag[i] > 0)
    v = rational_direction(basis[k])
    assert norm(lat, v) > 0
    return v


def find_isotropic(lat: Lattice, height: int = 10):
    """A primitive nonzero vector of square zero, None, or Unknown(height).

    None is returned only when the signature proves none exist. The search
    tries the radical, then visibly isotropic basis vectors, then an
    exhaustive coordinate box scan out to the given height.
    """
    if height < 1:
        raise ValueError("height must be a positive integer")
    if lat.rank == 0:
        return None
    p, n, z = signature(lat)
    if z == 0 and (p == 0 or n == 0):
        return None
    rad = radical(lat)
    if rad.rank > 0:
        return rad.basis[0]
    for i in range(lat.rank):
        if lat.gram[i][i] == 0:
            return lat.basis_vector(i)
    for s in range(1, height + 1):
        for x in product(range(-s, s + 1), repeat=lat.rank):
            if max(abs(c) for c in x) != s:
                continue
            if norm(lat, x) == 0:
                return sign_normalized(primitivize(x))
    return Unknown(height)


def root_slice(lat: Lattice, w, bound: int) -> List[IntVec]:
    """All roots delta with delta.delta = -2 and 0 < delta.w < bound.

    Requires w.w > 0 with negative definite w-orthogonal complement, which
    makes the slice finite; the listing is complete and lexicographic.
    """
    wv = tuple(int(c) for c in w)
    if len(wv) != lat.rank:
        raise NotPositive("vector length differs from lattice rank")
    w2 = norm(lat, wv)
    if w2 <= 0:
        raise NotPositive(f"w.w = {w2} must be positive")
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    comp = orth_complement(lat, [wv])
    comp_lat = comp.as_lattice()
    _require_negative_definite(comp_lat)
    m = comp.basis
    k = len(m)
    gw = gram_row(lat, wv)
    d = content(gw)  # d >= 1: w.w > 0 forces a nonzero pairing row
    # one solution of x.w = d, scaled for each admissible pairing value
    sol = _pairing_solution(gw, d)
    pd = tuple(tuple(-g for g in row) for row in comp_lat.gram)
    pinv = la.frac_inverse(pd) if k else ()
    out = []
    for a in range(d, bound, d):
        xa = tuple((a // d) * c for c in sol)
        s0 = norm(lat, xa)
        t = tuple(inner(lat, xa, row) for row in m)
        if k:
            u = tuple(
                sum(pinv[i][j] * t[j] for j in range(k)) for i in range(k)
            )
            r = Fraction(s0 + 2) + sum(t[i] * u[i] for i in range(k))
            if r < 0:
                continue
            for c, q in _ellipsoid_points(pd, u, r):
                if q == r:
                    delta = tuple(
                        x + y for x, y in zip(xa, la.vecmat(c, m))
                    )
                    out.append(delta)
        else:
            if s0 == -2:
                out.append(xa)
    out.sort()
    return out


def _pairing_solution(gw, target: int) -> IntVec:
    """Integer x with x . gw = target, where target = gcd(gw)."""
    g, coeffs = la.gcd_combination(gw)
    if g != target:
        raise ValueError("pairing content mismatch")
    return coeffs
