"""Eichler transvections and canonical forms for primitive vectors.

Hosts must carry the block shape U + U + R with R even unimodular (the K3
lattice in its fixed coordinate order qualifies). A primitive vector w with
w.w = 2d >= 0 is carried onto e1 + d*f1 by an explicit composition of
transvections and U-block isometries; the isometry is returned and can be
re-verified exactly. Orthogonal positive/isotropic witnesses are pulled
back from the second hyperbolic block.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Tuple

from . import intlinalg as la
from .errors import (
    ImpossibleState,
    NegativeNorm,
    NotIsotropic,
    NotOrthogonal,
    NotPositive,
    NotPrimitive,
    ParityFailure,
    UnsupportedLattice,
)
from .exact import content
from .lattice import Isometry, Lattice, gram_row, inner, is_primitive, norm

IntVec = Tuple[int, ...]


@dataclass(frozen=True)
class CanonicalFormResult:
    """An isometry g with g(w) = e1 + d*f1 and 2d = w.w."""

    g: Isometry
    d: int
    target: IntVec


def transvection(lat: Lattice, u, a) -> Isometry:
    """The Eichler map x -> x + (x.a)u - (x.u)a - (a.a/2)(x.u)u."""
    uv = tuple(int(c) for c in u)
    av = tuple(int(c) for c in a)
    if norm(lat, uv) != 0:
        raise NotIsotropic(f"u.u = {norm(lat, uv)} must be 0")
    if inner(lat, uv, av) != 0:
        raise NotOrthogonal(f"u.a = {inner(lat, uv, av)} must be 0")
    asq = norm(lat, av)
    if asq % 2:
        raise ParityFailure("a.a must be even")
    half = asq // 2
    ga = gram_row(lat, av)
    gu = gram_row(lat, uv)
    n = lat.rank
    mat = [
        [
            (1 if i == j else 0)
            + uv[i] * ga[j]
            - av[i] * gu[j]
            - half * uv[i] * gu[j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return Isometry(tuple(tuple(row) for row in mat))


def require_two_hyperbolic_blocks(lat: Lattice) -> None:
    """Check the U + U + (even unimodular) block shape this module needs."""
    n = lat.rank
    g = lat.gram
    if n < 4:
        raise UnsupportedLattice("rank < 4: no leading U + U block")
    u = ((0, 1), (1, 0))
    for off in (0, 2):
        block = tuple(tuple(g[off + i][off + j] for j in range(2)) for i in range(2))
        if block != u:
            raise UnsupportedLattice("leading blocks are not hyperbolic planes")
    for i in range(4):
        for j in range(n):
            same_block = (j < 2) == (i < 2) and j < 4
            if not same_block and g[i][j] != 0:
                raise UnsupportedLattice("U blocks are not split off orthogonally")
    rest = tuple(tuple(g[i][j] for j in range(4, n)) for i in range(4, n))
    if rest:
        if any(rest[i][i] % 2 for i in range(len(rest))):
            raise UnsupportedLattice("orthogonal rest is not even")
        if abs(la.det(rest)) != 1:
            raise UnsupportedLattice("orthogonal rest is not unimodular")


class _Walker:
    """Mutable state for the canonical-form walk.

    Tracks the moving vector, its pairing row and the accumulated isometry;
    transvections are applied as rank-2 row updates, so composing a move
    costs O(n^2) rather than a full matrix product.
    """

    def __init__(self, lat: Lattice, w: IntVec):
        self.lat = lat
        self.n = lat.rank
        self.cur = tuple(w)
        self.prow = gram_row(lat, self.cur)
        self.g: List[List[int]] = [list(r) for r in la.identity(self.n)]
        self.moves = 0

    def pairing(self, idx: int) -> int:
        return self.prow[idx]

    def rest(self) -> IntVec:
        return self.cur[4:]

    def transvect(self, u: IntVec, a: IntVec) -> None:
        lat = self.lat
        asq = norm(lat, a)
        half = asq // 2
        ga = gram_row(lat, a)
        gu = gram_row(lat, u)
        # vector update
        xa = la.dot(self.prow, a)
        xu = la.dot(self.prow, u)
        self.cur = tuple(
            c + xa * u[i] - xu * a[i] - half * xu * u[i]
            for i, c in enumerate(self.cur)
        )
        self.prow = gram_row(lat, self.cur)
        # g <- E*g via the rank-2 structure of E
        rag = la.vecmat(ga, self.g)
        rug = la.vecmat(gu, self.g)
        for i in range(self.n):
            ui, ai = u[i], a[i]
            if ui == 0 and ai == 0:
                continue
            row = self.g[i]
            for j in range(self.n):
                row[j] += ui * rag[j] - ai * rug[j] - half * ui * rug[j]
        self.moves += 1

    def negate_u1(self) -> None:
        self.cur = (-self.cur[0], -self.cur[1]) + self.cur[2:]
        self.prow = (-self.prow[0], -self.prow[1]) + self.prow[2:]
        self.g[0] = [-x for x in self.g[0]]
        self.g[1] = [-x for x in self.g[1]]

    def swap_u1(self) -> None:
        self.cur = (self.cur[1], self.cur[0]) + self.cur[2:]
        self.prow = (self.prow[1], self.prow[0]) + self.prow[2:]
        self.g[0], self.g[1] = self.g[1], self.g[0]


def _trunc_div(a: int, b: int) -> int:
    q = abs(a) // abs(b)
    return q if (a < 0) == (b < 0) else -q


def _euclid(
    get_q: Callable[[], int],
    get_x: Callable[[], int],
    bump_q: Callable[[int], None],
    bump_x: Callable[[int], None],
) -> None:
    """Drive x to 0, leaving q = +-gcd(q, x), via q += n*x / x += n*q moves."""
    while True:
        x = get_x()
        if x == 0:
            return
        q = get_q()
        if q == 0:
            bump_q(1)
            bump_x(-1)
            return
        if abs(x) >= abs(q):
            bump_x(-_trunc_div(x, q))
        else:
            bump_q(-_trunc_div(q, x))


def canonical_form(lat: Lattice, w) -> CanonicalFormResult:
    """Carry a primitive w with w.w >= 0 onto e1 + (w.w/2) f1."""
    require_two_hyperbolic_blocks(lat)
    wv = tuple(int(c) for c in w)
    if len(wv) != lat.rank:
        raise NotPrimitive("vector length differs from lattice rank")
    if not any(wv) or not is_primitive(wv):
        raise NotPrimitive("w must be a primitive nonzero vector")
    w2 = norm(lat, wv)
    if w2 < 0:
        raise NegativeNorm(f"w.w = {w2} is not supported")
    d = w2 // 2
    n = lat.rank
    target = tuple(
        1 if i == 0 else (d if i == 1 else 0) for i in range(n)
    )
    if wv == target:
        return CanonicalFormResult(Isometry.identity(n), d, target)

    st = _Walker(lat, wv)
    e1, f1, e2, f2 = (lat.basis_vector(i) for i in range(4))

    def scaled(v: IntVec, m: int) -> IntVec:
        return tuple(m * c for c in v)

    def s1() -> int:
        return st.pairing(0)  # w.e1

    def t1() -> int:
        return st.pairing(1)  # w.f1

    def s2() -> int:
        return st.pairing(2)  # w.e2

    def t2() -> int:
        return st.pairing(3)  # w.f2

    def bump_s1_by_s2(m: int) -> None:
        st.transvect(f1, scaled(e2, m))

    def bump_s2_by_s1(m: int) -> None:
        st.transvect(f2, scaled(e1, m))

    def bump_s1_by_t2(m: int) -> None:
        st.transvect(f1, scaled(f2, m))

    def bump_t2_by_s1(m: int) -> None:
        st.transvect(e2, scaled(e1, m))

    def zero_u2() -> None:
        # a pass that leaves the second block dirty must have strictly shrunk
        # |w.e1| (only w.e1-reductions re-pollute), so this terminates
        while True:
            before = abs(s1())
            _euclid(s1, s2, bump_s1_by_s2, bump_s2_by_s1)
            _euclid(s1, t2, bump_s1_by_t2, bump_t2_by_s1)
            if s2() == 0 and t2() == 0:
                return
            if before != 0 and abs(s1()) >= before:
                raise ImpossibleState("second hyperbolic block failed to clear")

    # each full pass folds another pairing into gcd position; a stalled pass
    # would force w.e1 to divide every pairing, contradicting primitivity
    while abs(s1()) != 1:
        start = abs(s1())
        zero_u2()
        if abs(s1()) == 1:
            break
        z = st.rest()
        if any(z):
            # pull the content of the rest component into w.e2 (w.f2 is 0, so
            # the rest component itself is untouched), then fold into w.e1
            a_rest = _rest_gcd_vector(lat, z)
            st.transvect(f2, a_rest)
            _euclid(s1, s2, bump_s1_by_s2, bump_s2_by_s1)
            zero_u2()
            if abs(s1()) == 1:
                break
        if t1() != 0:
            st.transvect(f2, f1)  # w.e2 += w.f1; safe since w.f2 = 0
            _euclid(s1, s2, bump_s1_by_s2, bump_s2_by_s1)
            zero_u2()
        if abs(s1()) == 1:
            break
        if abs(s1()) == start:
            raise ImpossibleState("no progress: input cannot be primitive")

    if s1() == -1:
        st.negate_u1()
    if s1() != 1:
        raise ImpossibleState("unit pairing lost before endgame")
    rest_component = (0, 0) + st.cur[2:]
    if any(rest_component):
        st.transvect(e1, rest_component)
    if st.cur != target:
        st.swap_u1()
    if st.cur != target:
        raise ImpossibleState("endgame did not reach the canonical vector")
    g = Isometry(tuple(tuple(r) for r in st.g))
    return CanonicalFormResult(g, d, target)


def _rest_gcd_vector(lat: Lattice, z: IntVec) -> IntVec:
    """a in the rest block with z.a = gcd content of z, embedded in the host."""
    n = lat.rank
    rest_gram = tuple(tuple(lat.gram[i][j] for j in range(4, n)) for i in range(4, n))
    gz = la.matvec(rest_gram, z)
    g, coeffs = la.gcd_combination(gz)
    if g != content(z):
        raise ImpossibleState("rest block pairing content mismatch")
    return (0, 0, 0, 0) + coeffs


def orth_witnesses(lat: Lattice, w) -> Tuple[IntVec, IntVec]:
    """(v, ell) with v.v = 2, ell.ell = 0, ell nonzero primitive, both _|_ w.

    Pulled back through the canonical form: v = g^{-1}(e2 + f2) and
    ell = g^{-1}(e2).
    """
    wv = tuple(int(c) for c in w)
    w2 = norm(lat, wv)
    if w2 <= 0:
        raise NotPositive(f"w.w = {w2} must be positive")
    res = canonical_form(lat, wv)
    ginv = res.g.inverse(lat)
    e2 = lat.basis_vector(2)
    f2 = lat.basis_vector(3)
    v = ginv.apply(tuple(a + b for a, b in zip(e2, f2)))
    ell = ginv.apply(e2)
    checks = (
        norm(lat, v) == 2
        and norm(lat, ell) == 0
        and inner(lat, v, wv) == 0
        and inner(lat, ell, wv) == 0
        and is_primitive(ell)
        and any(ell)
    )
    if not checks:
        raise ImpossibleState("orthogonal witnesses failed their contract")
    return v, ell
