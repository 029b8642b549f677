"""Exact dense linear algebra over a field, plus small matrix helpers.

Entries only need ``+ - * /`` and truthiness, so the same routines serve
``Fraction`` matrices (ansatz systems) and ``RationalFunction`` matrices
(row-rank tests over K(t)). Matrices are lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Sequence

Matrix = list[list[Any]]


def rref(rows: Sequence[Sequence[Any]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; first nonzero entry is taken as pivot."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence[Any]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Any]], ncols: int, zero=Fraction(0), one=Fraction(1)) -> list[list[Any]]:
    """Basis of the right kernel ``{v : rows * v = 0}``."""
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    r, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def left_kernel(rows: Sequence[Sequence[Any]], zero=Fraction(0), one=Fraction(1)) -> list[list[Any]]:
    """Basis of ``{c : c * rows = 0}``."""
    if not rows:
        return []
    return nullspace(transpose(rows), len(rows), zero, one)


def solve_affine(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction], ncols: int):
    """All solutions of ``a x = b``: ``(particular or None, kernel basis)``."""
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    kernel = nullspace(a, ncols)
    if not aug:
        return [Fraction(0)] * ncols, kernel
    r, pivots = rref(aug)
    if ncols in pivots:
        return None, kernel
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = r[i][ncols]
    return x, kernel


def transpose(m: Sequence[Sequence[Any]]) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_mul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]], zero: Any) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError(f"dimension mismatch: {len(a[0])} vs {len(b)}")
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(ncols):
            acc = zero
            for k, x in enumerate(row):
                if x:
                    acc = acc + x * b[k][j]
            new.append(acc)
        out.append(new)
    return out


def identity(n: int, zero: Any, one: Any) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def map_matrix(m: Sequence[Sequence[Any]], f: Callable[[Any], Any]) -> Matrix:
    return [[f(x) for x in row] for row in m]
