"""Exact integer and rational matrix routines.

Matrices are row-major tuples of tuples. Canonical form throughout is the
row Hermite normal form: positive pivots, entries above a pivot reduced into
[0, pivot), zero rows dropped (or sorted to the bottom when a transform is
requested). Ranks in this package stay small (<= 22), so the plain
O(n^3)-with-big-ints algorithms are entirely adequate.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

IntMatrix = Tuple[Tuple[int, ...], ...]
IntVector = Tuple[int, ...]


def freeze(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence]) -> tuple:
    if not m:
        return ()
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0])))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matmul shape mismatch")
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def matvec(m: Sequence[Sequence], v: Sequence) -> tuple:
    if m and len(m[0]) != len(v):
        raise ValueError("matvec shape mismatch")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def vecmat(v: Sequence, m: Sequence[Sequence]) -> tuple:
    if len(v) != len(m):
        raise ValueError("vecmat shape mismatch")
    if not m:
        return ()
    n = len(m[0])
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(n))


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError("dot shape mismatch")
    return sum(x * y for x, y in zip(u, v))


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and g = a*x + b*y.

    When a divides b the coefficients are (sign(a), 0), so "clearing" steps
    built on xgcd leave the pivot row alone in the already-divisible case.
    """
    if a != 0 and b % a == 0:
        return (a, 1, 0) if a > 0 else (-a, -1, 0)
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def gcd_combination(values: Sequence[int]) -> Tuple[int, IntVector]:
    """(g, coeffs) with g = gcd(values) >= 0 and g = sum coeffs[i]*values[i]."""
    n = len(values)
    coeffs = [0] * n
    g = 0
    for i, val in enumerate(values):
        if val == 0:
            continue
        if g == 0:
            g = abs(val)
            coeffs = [0] * n
            coeffs[i] = 1 if val > 0 else -1
            continue
        gg, x, y = xgcd(g, val)
        coeffs = [x * c for c in coeffs]
        coeffs[i] += y
        g = gg
    return g, tuple(coeffs)


def hnf_with_transform(
    rows: Sequence[Sequence[int]], ncols: int
) -> Tuple[IntMatrix, IntMatrix]:
    """Row HNF with a unimodular transform: U * rows = H.

    H keeps its zero rows (sorted to the bottom) so that U rows aligned with
    them span the left kernel.
    """
    work = [list(map(int, r)) for r in rows]
    nr = len(work)
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    piv = 0
    for col in range(ncols):
        # choose a pivot row and clear the column below it via gcd steps
        k = next((i for i in range(piv, nr) if work[i][col]), None)
        if k is None:
            continue
        work[piv], work[k] = work[k], work[piv]
        u[piv], u[k] = u[k], u[piv]
        for i in range(piv + 1, nr):
            if not work[i][col]:
                continue
            a, b = work[piv][col], work[i][col]
            g, x, y = xgcd(a, b)
            aa, bb = a // g, b // g
            rp, ri = work[piv], work[i]
            work[piv] = [x * p + y * q for p, q in zip(rp, ri)]
            work[i] = [-bb * p + aa * q for p, q in zip(rp, ri)]
            up, ui = u[piv], u[i]
            u[piv] = [x * p + y * q for p, q in zip(up, ui)]
            u[i] = [-bb * p + aa * q for p, q in zip(up, ui)]
        if work[piv][col] < 0:
            work[piv] = [-x for x in work[piv]]
            u[piv] = [-x for x in u[piv]]
        p = work[piv][col]
        for i in range(piv):
            q = work[i][col] // p
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[piv])]
                u[i] = [a - q * b for a, b in zip(u[i], u[piv])]
        piv += 1
        if piv == nr:
            break
    return freeze(work), freeze(u)


def hnf(rows: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Canonical row HNF with zero rows dropped."""
    h, _ = hnf_with_transform(rows, ncols)
    return tuple(r for r in h if any(r))


def int_kernel(rows: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """HNF basis of {x in Z^ncols : rows . x = 0}. Always saturated."""
    if not rows:
        return identity(ncols)
    h, u = hnf_with_transform(transpose(rows), len(rows))
    kernel_rows = [u[i] for i in range(len(h)) if not any(h[i])]
    return hnf(kernel_rows, ncols)


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            j = next((i for i in range(k + 1, n) if a[i][k]), None)
            if j is None:
                return 0
            a[k], a[j] = a[j], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_left(
    rows: Sequence[Sequence[int]], target: Sequence[int], ncols: int
) -> Optional[IntVector]:
    """Integer x with x . rows = target, or None if no solution exists."""
    if len(target) != ncols:
        raise ValueError("solve_left shape mismatch")
    if not rows:
        return () if not any(target) else None
    h, u = hnf_with_transform(rows, ncols)
    t = [int(x) for x in target]
    coeffs = [0] * len(h)
    for i, row in enumerate(h):
        if not any(row):
            break
        p = next(j for j, x in enumerate(row) if x)
        if t[p] % row[p]:
            return None
        q = t[p] // row[p]
        coeffs[i] = q
        if q:
            t = [a - q * b for a, b in zip(t, row)]
    if any(t):
        return None
    nr = len(rows)
    return tuple(
        sum(coeffs[i] * u[i][j] for i in range(len(h))) for j in range(nr)
    )


def smith_invariants(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    a = [list(map(int, r)) for r in rows]
    nr = len(a)
    nc = len(a[0]) if a else 0
    invariants: List[int] = []
    t = 0
    while t < min(nr, nc):
        # find a nonzero entry in the remaining block
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j]:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            # clear column t; a plain quotient step when the pivot divides
            # keeps row t untouched, so only gcd-shrinking steps re-pollute
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    if a[i][t] % a[t][t] == 0:
                        q = a[i][t] // a[t][t]
                        a[i] = [p - q * r for p, r in zip(a[i], a[t])]
                    else:
                        g, x, y = xgcd(a[t][t], a[i][t])
                        aa, bb = a[t][t] // g, a[i][t] // g
                        rt, ri = a[t], a[i]
                        a[t] = [x * p + y * q for p, q in zip(rt, ri)]
                        a[i] = [-bb * p + aa * q for p, q in zip(rt, ri)]
                        dirty = True
            # clear row t
            for j in range(t + 1, nc):
                if a[t][j]:
                    if a[t][j] % a[t][t] == 0:
                        q = a[t][j] // a[t][t]
                        for row in a:
                            row[j] -= q * row[t]
                    else:
                        g, x, y = xgcd(a[t][t], a[t][j])
                        aa, bb = a[t][t] // g, a[t][j] // g
                        for row in a:
                            p, q = row[t], row[j]
                            row[t] = x * p + y * q
                            row[j] = -bb * p + aa * q
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t] = [p + q for p, q in zip(a[t], a[offender])]
        invariants.append(abs(a[t][t]))
        t += 1
    return tuple(invariants)


# ---------------------------------------------------------------------------
# rational routines


def frac_rows(rows: Sequence[Sequence]) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def integral_row(frac_row: Sequence) -> Tuple[int, ...]:
    """Clear denominators by the positive lcm, preserving the kernel."""
    fracs = [Fraction(x) for x in frac_row]
    lcm = 1
    for f in fracs:
        g = gcd(lcm, f.denominator)
        lcm = lcm * f.denominator // g
    return tuple(int(f * lcm) for f in fracs)


def frac_inverse(m: Sequence[Sequence]) -> Tuple[Tuple[Fraction, ...], ...]:
    """Exact inverse via Gauss-Jordan; raises ZeroDivisionError if singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def int_inverse(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a unimodular integer matrix, returned over Z."""
    inv = frac_inverse(m)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def symmetric_diagonalize(
    gram: Sequence[Sequence[int]],
) -> Tuple[Tuple[Fraction, ...], Tuple[Tuple[Fraction, ...], ...]]:
    """Congruence diagonalization over Q.

    Returns (diag, basis) with basis rows v_i satisfying v_i G v_j^T =
    diag[i] * [i == j]. Handles zero pivots and degenerate forms.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def add_row(i, j, c):
        # v_i += c v_j, updating the working Gram congruently
        basis[i] = [x + c * y for x, y in zip(basis[i], basis[j])]
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        for row in a:
            row[i] = row[i] + c * row[j]

    def swap(i, j):
        basis[i], basis[j] = basis[j], basis[i]
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        if a[k][k] == 0:
            j = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((i for i in range(k + 1, n) if a[k][i] != 0), None)
                if j is None:
                    continue  # v_k pairs to zero with the remaining block
                add_row(k, j, Fraction(1))
                if a[k][k] == 0:
                    add_row(k, j, Fraction(-2))
        d = a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                add_row(i, k, -a[i][k] / d)
    return tuple(a[i][i] for i in range(n)), tuple(
        tuple(row) for row in basis
    )
