"""Exact linear algebra over the rationals.

Vectors are tuples of Fractions (or ints), matrices are lists/tuples of such
rows.  Everything here is elimination-based; sizes are tiny (d <= 6), so no
attempt is made at asymptotic cleverness.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vec = tuple[Fraction, ...]


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum(x * y for x, y in zip(a, b, strict=True))


def vec_add(a: Sequence, b: Sequence) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Sequence, b: Sequence) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c, a: Sequence) -> Vec:
    return tuple(c * x for x in a)


def is_zero(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def scale_to_int(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    fracs = [Fraction(x) for x in vec]
    if all(f == 0 for f in fracs):
        return tuple(0 for _ in fracs)
    denom_lcm = 1
    for f in fracs:
        d = f.denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = [int(f * denom_lcm) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)


def rref(rows: Sequence[Sequence]) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def null_space(rows: Sequence[Sequence], ncols: int) -> list[Vec]:
    """Basis of {x : rows @ x = 0}."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(tuple(v))
    return basis


def row_space_basis(rows: Sequence[Sequence]) -> list[Vec]:
    red, _ = rref(rows)
    return red


def solve(a_rows: Sequence[Sequence], b: Sequence) -> Vec | None:
    """Unique solution of A x = b, or None if inconsistent/underdetermined."""
    n = len(a_rows[0]) if a_rows else 0
    aug = [list(map(Fraction, row)) + [Fraction(bv)] for row, bv in zip(a_rows, b, strict=True)]
    red, pivots = rref(aug)
    if n in pivots:  # pivot in the constant column
        return None
    if len(pivots) < n:
        return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(pivots):
        x[pc] = red[i][n]
    return tuple(x)


def invert(mat: Sequence[Sequence]) -> list[Vec] | None:
    """Inverse of a square matrix, or None if singular."""
    n = len(mat)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [tuple(red[i][n:]) for i in range(n)]


def determinant(mat: Sequence[Sequence]) -> Fraction:
    m = [list(map(Fraction, r)) for r in mat]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of a point set (-1 for empty)."""
    pts = list(points)
    if not pts:
        return -1
    p0 = pts[0]
    diffs = [vec_sub(p, p0) for p in pts[1:]]
    return rank(diffs)
