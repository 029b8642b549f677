"""Popov normal form over the commutative ring K[sigma], Groebner-style row
division, determinants, and the left row rank of operator matrices over
K(t)[sigma].

Module monomials ``e_j x^a`` are compared in term-over-position (TOP) order:
higher degree wins, and among equal degrees the smaller column index wins.
Column indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .arith import RationalFunction, SigmaPoly, TPoly, exact_div, poly_gcd
from .linalg import left_kernel
from .ore import OreMatrix, OrePoly, SigmaMatrix, ore_mul

Row = list[SigmaPoly]


@dataclass(frozen=True)
class PopovResult:
    """``U @ M == P`` stacked over ``M.nrows - rank`` zero rows."""

    P: SigmaMatrix
    U: SigmaMatrix
    rank: int

    @property
    def pivots(self) -> list[int]:
        return [top_leading_term(r)[0] for r in self.P]


@dataclass(frozen=True)
class DivisionResult:
    """``C == X @ P + Y`` with every row of Y irreducible by P."""

    X: SigmaMatrix
    Y: SigmaMatrix

    def is_exact(self) -> bool:
        return all(not p for row in self.Y for p in row)


def _top_key(pos: int, deg: int) -> tuple[int, int]:
    return (deg, -pos)


def top_leading_term(row: Sequence[SigmaPoly]) -> tuple[int, int]:
    """``(position, degree)`` of the TOP-largest monomial of a nonzero row."""
    best = None
    for j, p in enumerate(row):
        if p and (best is None or p.degree > best[1]):
            best = (j, p.degree)
    if best is None:
        raise ValueError("zero row has no leading term")
    return best


def _is_zero_row(row: Sequence[SigmaPoly]) -> bool:
    return all(not p for p in row)


def _axpy(row: Row, c: Fraction, k: int, other: Sequence[SigmaPoly]) -> Row:
    """``row + c * x^k * other``."""
    return [a + (b.shift_up(k) * c) if b else a for a, b in zip(row, other)]


def _find_reducible(row: Sequence[SigmaPoly], basis: Sequence[Sequence[SigmaPoly]], skip: int = -1):
    """TOP-largest term of ``row`` divisible by a leading term of ``basis``.

    Returns ``(basis index, position, degree)`` or None.
    """
    leads = {}
    for k, b in enumerate(basis):
        if k != skip and not _is_zero_row(b):
            pos, deg = top_leading_term(b)
            leads.setdefault(pos, (k, deg))
    best = None
    for pos, (k, deg) in leads.items():
        p = row[pos]
        for a in range(len(p.coeffs) - 1, deg - 1, -1):
            if p.coeffs[a]:
                if best is None or _top_key(pos, a) > _top_key(best[1], best[2]):
                    best = (k, pos, a)
                break
    return best


def _reduce_by(row: Row, basis: Sequence[Sequence[SigmaPoly]], skip: int = -1):
    """Full reduction of ``row``; returns ``(remainder, multipliers)``."""
    mult = [SigmaPoly() for _ in basis]
    while True:
        hit = _find_reducible(row, basis, skip)
        if hit is None:
            return row, mult
        k, pos, a = hit
        lead_pos, lead_deg = top_leading_term(basis[k])
        c = row[pos].coeffs[a] / basis[k][lead_pos].lc
        row = _axpy(row, -c, a - lead_deg, basis[k])
        mult[k] = mult[k] + SigmaPoly.monomial(a - lead_deg, c)


def popov_form(M: Sequence[Sequence[SigmaPoly]]) -> PopovResult:
    """Row Popov normal form with unimodular transformation.

    Pivot rows are monic, sorted by pivot column; zero rows go to the bottom
    of ``U @ M``.
    """
    m = len(M)
    rows: list[Row] = [list(r) for r in M]
    U: list[Row] = [[SigmaPoly.one() if i == j else SigmaPoly() for j in range(m)] for i in range(m)]

    # weak Popov: pairwise distinct leading positions
    while True:
        clash = None
        seen: dict[int, int] = {}
        for i, r in enumerate(rows):
            if _is_zero_row(r):
                continue
            pos, deg = top_leading_term(r)
            if pos in seen:
                k = seen[pos]
                clash = (i, k) if deg >= rows[k][pos].degree else (k, i)
                break
            seen[pos] = i
        if clash is None:
            break
        i, k = clash
        pos, di = top_leading_term(rows[i])
        dk = rows[k][pos].degree
        c = -rows[i][pos].lc / rows[k][pos].lc
        rows[i] = _axpy(rows[i], c, di - dk, rows[k])
        U[i] = _axpy(U[i], c, di - dk, U[k])

    # reduced + monic
    for i in range(m):
        if _is_zero_row(rows[i]):
            continue
        while True:
            hit = _find_reducible(rows[i], rows, skip=i)
            if hit is None:
                break
            k, pos, a = hit
            lp, ld = top_leading_term(rows[k])
            c = -rows[i][pos].coeffs[a] / rows[k][lp].lc
            rows[i] = _axpy(rows[i], c, a - ld, rows[k])
            U[i] = _axpy(U[i], c, a - ld, U[k])
    for i in range(m):
        if not _is_zero_row(rows[i]):
            pos, _ = top_leading_term(rows[i])
            lc = rows[i][pos].lc
            rows[i] = [p / lc for p in rows[i]]
            U[i] = [p / lc for p in U[i]]

    nonzero = sorted(
        (i for i in range(m) if not _is_zero_row(rows[i])),
        key=lambda i: top_leading_term(rows[i])[0],
    )
    zero = [i for i in range(m) if _is_zero_row(rows[i])]
    order = nonzero + zero
    P = tuple(tuple(rows[i]) for i in nonzero)
    U_out = tuple(tuple(U[i]) for i in order)
    return PopovResult(P, U_out, len(nonzero))


def is_popov(P: Sequence[Sequence[SigmaPoly]]) -> bool:
    """Monic pivots in distinct columns, rows fully reduced against each other."""
    seen = set()
    for r in P:
        if _is_zero_row(r):
            return False
        pos, _ = top_leading_term(r)
        if pos in seen or r[pos].lc != 1:
            return False
        seen.add(pos)
    return all(_find_reducible(list(r), P, skip=i) is None for i, r in enumerate(P))


def reduce_rows(C: Sequence[Sequence[SigmaPoly]], P: Sequence[Sequence[SigmaPoly]]) -> DivisionResult:
    """Divide each row of C by the Popov basis P: ``C = X P + Y``."""
    if not is_popov(P):
        raise ValueError("divisor matrix is not in Popov form")
    if P and C and len(C[0]) != len(P[0]):
        raise ValueError("column counts of C and P differ")
    X, Y = [], []
    for row in C:
        rem, mult = _reduce_by(list(row), P)
        X.append(tuple(mult))
        Y.append(tuple(rem))
    return DivisionResult(tuple(X), tuple(Y))


def row_in_module(row: Sequence[SigmaPoly], P: Sequence[Sequence[SigmaPoly]]) -> bool:
    return _is_zero_row(_reduce_by(list(row), P)[0])


def sigma_det(M: Sequence[Sequence[SigmaPoly]]) -> SigmaPoly:
    """Determinant over K[sigma] by fraction-free Bareiss elimination."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return SigmaPoly.one()
    a = [list(r) for r in M]
    sign = 1
    prev = SigmaPoly.one()
    for k in range(n - 1):
        if not a[k][k]:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return SigmaPoly()
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def leibniz_det(M: Sequence[Sequence[SigmaPoly]]) -> SigmaPoly:
    """Permutation-sum determinant; slow cross-check for small matrices."""
    n = len(M)
    total = SigmaPoly()
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = SigmaPoly.one()
        for i, j in enumerate(perm):
            term = term * M[i][j]
            if not term:
                break
        total = total + (term if inversions % 2 == 0 else -term)
    return total


# --- rank over K(t)[sigma] ------------------------------------------------


def _row_sigma_degree(row: Sequence[OrePoly]) -> int:
    return max(e.sigma_degree for e in row if e)


def _primitive_row(row: list[OrePoly]) -> list[OrePoly]:
    g = TPoly()
    for e in row:
        for c in e.coeffs:
            if c:
                g = poly_gcd(g, c)
                if g.is_constant():
                    return row
    if g.is_zero() or g.is_constant():
        return row
    return [OrePoly([exact_div(c, g) for c in e.coeffs], e.q) for e in row]


def ore_row_rank(A: OreMatrix) -> int:
    """Left row rank of A over K(t)[sigma].

    Repeatedly cancels the sigma-leading coefficient vectors of dependent
    rows (each row normalized by its own sigma-degree) until the remaining
    nonzero rows are row-reduced.
    """
    q = A.q
    rows = [list(r) for r in A.entries if any(e for e in r)]
    zero_rf, one_rf = RationalFunction(0), RationalFunction(1)
    while rows:
        degs = [_row_sigma_degree(r) for r in rows]
        lead = [
            [RationalFunction(e.coeff(d).scale_var(q ** (-d))) for e in r]
            for r, d in zip(rows, degs)
        ]
        kernel = left_kernel(lead, zero_rf, one_rf)
        if not kernel:
            return len(rows)
        c = kernel[0]
        support = [i for i, ci in enumerate(c) if ci]
        k = max(support, key=lambda i: (degs[i], i))
        d = degs[k]
        coeffs = [c[i].num.scale_var(q**d) for i in support]
        dens = [c[i].den.scale_var(q**d) for i in support]
        common = TPoly.one()
        for den in dens:
            common = exact_div(common * den, poly_gcd(common, den))
        new = [OrePoly.zero(q) for _ in range(A.ncols)]
        for i, num, den in zip(support, coeffs, dens):
            mult = OrePoly.from_tpoly(exact_div(common, den) * num, q)
            shift = OrePoly.sigma(q, d - degs[i])
            op = ore_mul(mult, shift)
            new = [acc + ore_mul(op, e) for acc, e in zip(new, rows[i])]
        if all(not e for e in new):
            rows.pop(k)
        else:
            rows[k] = _primitive_row(new)
    return 0
