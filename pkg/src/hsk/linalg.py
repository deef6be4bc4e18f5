"""Exact linear algebra over the cyclotomic coefficient field.

Everything here works on dense matrices given as lists of Scalar rows.
Row reduction is plain Gauss-Jordan: scalar arithmetic is exact and
field division costs one inversion per pivot, so fraction-free
tricks buy nothing.  The reduced row echelon form doubles as a column
calculus: row operations preserve column relations, so column j of the
RREF expresses column j of the input in terms of the pivot columns.
"""
from __future__ import annotations

import numpy as np

from .scalar import Params, Scalar

__all__ = ["rref", "rank", "nullspace", "solve", "determinant", "hermitian_min_eigenvalue"]

Matrix = list[list[Scalar]]


def rref(p: Params, rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    Returns (R, pivots) with len(R) == len(pivots) == rank; zero rows
    are dropped.  The input is not modified."""
    if not rows:
        return [], []
    ncols = len(rows[0])
    work = [list(r) for r in rows]
    reduced: Matrix = []
    pivots: list[int] = []
    for col in range(ncols):
        pivot_row = None
        for r in range(len(work)):
            if not work[r][col].is_zero():
                pivot_row = r
                break
        if pivot_row is None:
            continue
        row = work.pop(pivot_row)
        inv = row[col].inverse()
        row = [c * inv for c in row]
        for other in work:
            f = other[col]
            if not f.is_zero():
                for j in range(col, ncols):
                    other[j] = other[j] - f * row[j]
        for other in reduced:
            f = other[col]
            if not f.is_zero():
                for j in range(col, ncols):
                    other[j] = other[j] - f * row[j]
        reduced.append(row)
        pivots.append(col)
        work = [r for r in work if any(not c.is_zero() for c in r)]
        if not work:
            break
    return reduced, pivots


def rank(p: Params, rows: Matrix) -> int:
    return len(rref(p, rows)[1])


def nullspace(p: Params, rows: Matrix, ncols: int | None = None) -> Matrix:
    """Basis of the right kernel, one vector per free column.  Each
    basis vector has a single 1 in its free column, so the output is
    sparse whenever the RREF is."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    red, pivots = rref(p, rows)
    pivot_set = set(pivots)
    basis: Matrix = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [p.zero] * ncols
        vec[f] = p.one
        for r, c in enumerate(pivots):
            vec[c] = -red[r][f]
        basis.append(vec)
    return basis


def solve(p: Params, rows: Matrix, rhs: list[Scalar]) -> list[Scalar] | None:
    """One solution of A x = b, or None if the system is inconsistent."""
    if not rows:
        return None if any(not c.is_zero() for c in rhs) else []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(p, aug)
    if pivots and pivots[-1] == ncols:
        return None
    x = [p.zero] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][ncols]
    return x


def determinant(p: Params, mat: Matrix) -> Scalar:
    """Exact determinant by first-column Laplace expansion; intended
    for the small matrices of modular data (a handful of labels)."""
    n = len(mat)
    if n == 0:
        return p.one
    if n == 1:
        return mat[0][0]
    acc = p.zero
    sign = 1
    for r in range(n):
        c = mat[r][0]
        if not c.is_zero():
            minor = [row[1:] for i, row in enumerate(mat) if i != r]
            term = c * determinant(p, minor)
            acc = acc + term if sign > 0 else acc - term
        sign = -sign
    return acc


def hermitian_min_eigenvalue(mat: Matrix) -> float:
    """Smallest eigenvalue of a hermitian Scalar matrix under the
    distinguished complex embedding."""
    n = len(mat)
    if n == 0:
        return 0.0
    arr = np.empty((n, n), dtype=complex)
    for i, row in enumerate(mat):
        for j, c in enumerate(row):
            arr[i, j] = c.embed()
    return float(np.linalg.eigvalsh(arr)[0].real)
