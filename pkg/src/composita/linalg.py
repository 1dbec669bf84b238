"""Exact Gaussian elimination over the rationals.

Matrices are plain lists of lists of Fractions; everything returns fresh
values.  Small and dense is fine: the biggest systems in this package are
36 x 37.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def _frac_rows(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot column list."""
    m = _frac_rows(rows)
    if not m:
        return [], []
    n_cols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r] + [[Fraction(0)] * n_cols for _ in range(len(m) - r)], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], n_cols: int | None = None) -> Matrix:
    """Basis of the right kernel (vectors v with rows @ v == 0)."""
    if not rows:
        if n_cols is None:
            raise ValueError("need n_cols for an empty matrix")
        return [[Fraction(1 if i == j else 0) for j in range(n_cols)]
                for i in range(n_cols)]
    n_cols = len(rows[0])
    reduced, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One exact solution of rows @ x == rhs, or None if inconsistent."""
    m = _frac_rows(rows)
    b = [Fraction(x) for x in rhs]
    aug = [row + [bb] for row, bb in zip(m, b)]
    reduced, pivots = rref(aug)
    n_cols = len(m[0]) if m else 0
    if n_cols in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [Fraction(0)] * n_cols
    for r, pc in enumerate(pivots):
        x[pc] = reduced[r][n_cols]
    return x


def in_row_space(basis_rref: Matrix, pivots: list[int], v: Sequence) -> bool:
    """Membership test against a precomputed rref basis."""
    vv = [Fraction(x) for x in v]
    for r, pc in enumerate(pivots):
        if vv[pc] != 0:
            f = vv[pc]
            vv = [a - f * b for a, b in zip(vv, basis_rref[r])]
    return all(x == 0 for x in vv)


def same_row_space(rows_a: Sequence[Sequence], rows_b: Sequence[Sequence]) -> bool:
    ra, pa = rref(rows_a)
    rb, pb = rref(rows_b)
    return pa == pb and ra[: len(pa)] == rb[: len(pb)]


def matvec(m: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def matmul(a: Sequence[Sequence[Fraction]],
           b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt]
            for row in a]


def identity_matrix(n: int) -> Matrix:
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
