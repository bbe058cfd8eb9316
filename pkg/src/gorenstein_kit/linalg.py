"""Small exact linear algebra over the rationals.

Matrices are immutable tuples of tuples of Fractions; everything here is a
pure function.  Sizes stay tiny (representations of small finite groups), so
straightforward Gaussian elimination with exact arithmetic is the right
tool.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


def as_exact(value: Fraction | int) -> Fraction:
    """Coerce to Fraction, refusing floats: nothing here may round."""
    if isinstance(value, float):
        raise TypeError("floating point is not exact; pass a Fraction or int")
    return Fraction(value)


def freeze(rows: Iterable[Iterable[Fraction | int]]) -> Matrix:
    return tuple(tuple(as_exact(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0])
    inner = len(b)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(m))
        for i in range(n)
    )


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def determinant(m: Matrix) -> Fraction:
    n = len(m)
    rows = [list(r) for r in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col]:
                factor = rows[r][col] * inv
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


def rank(m: Matrix) -> int:
    if not m:
        return 0
    rows = [list(r) for r in m]
    n, cols = len(rows), len(rows[0])
    rk = 0
    for col in range(cols):
        pivot = next((r for r in range(rk, n) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        inv = 1 / rows[rk][col]
        for r in range(n):
            if r != rk and rows[r][col]:
                factor = rows[r][col] * inv
                for c in range(col, cols):
                    rows[r][c] -= factor * rows[rk][c]
        rk += 1
        if rk == n:
            break
    return rk


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + list(ident_row) for row, ident_row in zip(m, identity(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def trace(m: Matrix) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def det_one_minus_coefficients(m: Matrix) -> list[Fraction]:
    """Coefficients c_0..c_n of det(1 - s*M) as a polynomial in s.

    Computed by the Faddeev-LeVerrier recursion for the characteristic
    polynomial; exact over the rationals.
    """
    n = len(m)
    coeffs = [Fraction(1)]
    mk = m
    for k in range(1, n + 1):
        c = -trace(mk) / k
        coeffs.append(c)
        if k < n:
            shifted = tuple(
                tuple(mk[i][j] + (c if i == j else 0) for j in range(n)) for i in range(n)
            )
            mk = mat_mul(m, shifted)
    return coeffs


def rref(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form; zero rows are dropped."""
    work = [list(r) for r in rows]
    if not work:
        return []
    cols = len(work[0])
    rk = 0
    for col in range(cols):
        pivot = next((r for r in range(rk, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        inv = 1 / work[rk][col]
        work[rk] = [x * inv for x in work[rk]]
        for r in range(len(work)):
            if r != rk and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[rk])]
        rk += 1
        if rk == len(work):
            break
    return [row for row in work[:rk]]
