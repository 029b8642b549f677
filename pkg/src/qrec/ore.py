"""Skew polynomials K[t, sigma] with sigma*t = q*t*sigma, operator matrices,
and q-recurrence systems ``A . y = t^(-nu) b``.

Operators are stored sigma-major: ``OrePoly.coeffs[j]`` is the TPoly in
front of ``sigma^j``. The t-major view (matrices over K[sigma]) is produced
by :func:`t_decompose`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import (
    MINUS_INFINITY,
    RationalFunction,
    SigmaPoly,
    TPoly,
    as_fraction,
    as_rational_function,
    substitute_qt,
)
from .errors import InvalidQError

SigmaMatrix = tuple[tuple[SigmaPoly, ...], ...]


def check_q(q) -> Fraction:
    q = as_fraction(q)
    if q in (0, 1, -1):
        raise InvalidQError(f"q must not be a root of unity or zero (got {q})")
    return q


def _max_degree(polys) -> int:
    """Max degree over polynomials, MINUS_INFINITY if all are zero."""
    best = MINUS_INFINITY
    for p in polys:
        if p and (best is MINUS_INFINITY or p.degree > best):
            best = p.degree
    return best


class OrePoly:
    """Element ``sum_j coeffs[j](t) sigma^j`` of K[t, sigma]."""

    __slots__ = ("coeffs", "q")

    def __init__(self, coeffs: Sequence[TPoly], q):
        cs = [c if isinstance(c, TPoly) else TPoly((c,)) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[TPoly, ...] = tuple(cs)
        self.q = check_q(q)

    @classmethod
    def zero(cls, q):
        return cls((), q)

    @classmethod
    def from_tpoly(cls, p: TPoly, q):
        return cls((p,), q)

    @classmethod
    def from_sigma_poly(cls, p: SigmaPoly, q):
        return cls([TPoly((c,)) for c in p.coeffs], q)

    @classmethod
    def sigma(cls, q, k: int = 1):
        return cls([TPoly()] * k + [TPoly.one()], q)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def sigma_degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def t_degree(self):
        return _max_degree(self.coeffs)

    def coeff(self, j: int) -> TPoly:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else TPoly()

    def _same_q(self, other: "OrePoly") -> None:
        if other.q != self.q:
            raise ValueError(f"mismatched q: {self.q} vs {other.q}")

    def __add__(self, other: "OrePoly") -> "OrePoly":
        self._same_q(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly([self.coeff(j) + other.coeff(j) for j in range(n)], self.q)

    def __neg__(self) -> "OrePoly":
        return OrePoly([-c for c in self.coeffs], self.q)

    def __sub__(self, other: "OrePoly") -> "OrePoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, OrePoly):
            return ore_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return OrePoly([c * other for c in self.coeffs], self.q)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return OrePoly([c * other for c in self.coeffs], self.q)
        if isinstance(other, TPoly):
            return self.left_mul_t(other)
        return NotImplemented

    def left_mul_t(self, p: TPoly) -> "OrePoly":
        """``p(t) * self``."""
        return OrePoly([p * c for c in self.coeffs], self.q)

    def t_shift(self, e: int) -> "OrePoly":
        """``t^e * self``; for negative e every coefficient must be divisible."""
        if e >= 0:
            return OrePoly([c.shift_up(e) for c in self.coeffs], self.q)
        return OrePoly([c.shift_down(-e) for c in self.coeffs], self.q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.q))

    def to_str(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            mono = "" if j == 0 else ("S" if j == 1 else f"S^{j}")
            cs = c.to_str()
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"({cs}){mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"OrePoly({self.to_str()!r}, q={self.q})"


def ore_mul(a: OrePoly, b: OrePoly) -> OrePoly:
    """Product in K[t, sigma]: ``a_i sigma^i * b_j sigma^j = a_i b_j(q^i t) sigma^(i+j)``."""
    a._same_q(b)
    if not a.coeffs or not b.coeffs:
        return OrePoly.zero(a.q)
    out = [TPoly()] * (len(a.coeffs) + len(b.coeffs) - 1)
    qi = Fraction(1)
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, bj in enumerate(b.coeffs):
                if bj:
                    out[i + j] = out[i + j] + ai * bj.scale_var(qi)
        qi *= a.q
    return OrePoly(out, a.q)


def apply(a: OrePoly, f) -> RationalFunction:
    """Action ``a . f = sum_i a_i(t) f(q^i t)``."""
    f = as_rational_function(f)
    acc = RationalFunction(TPoly())
    qi = Fraction(1)
    for ai in a.coeffs:
        if ai:
            acc = acc + substitute_qt(f, qi) * ai
        qi *= a.q
    return acc


class OreMatrix:
    """Matrix of OrePolys sharing one q."""

    __slots__ = ("entries", "q", "nrows", "ncols")

    def __init__(self, entries: Sequence[Sequence[OrePoly]], q=None):
        rows = tuple(tuple(r) for r in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged operator matrix")
        if q is None:
            if not rows or not rows[0]:
                raise ValueError("q required for an empty operator matrix")
            q = rows[0][0].q
        q = check_q(q)
        for r in rows:
            for e in r:
                if e.q != q:
                    raise ValueError("all entries of an operator matrix must share q")
        self.entries = rows
        self.q = q
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    @classmethod
    def from_coefficient_matrices(cls, mats: Sequence[Sequence[Sequence[TPoly]]], q) -> "OreMatrix":
        """Build ``sum_j mats[j] sigma^j`` from a list of TPoly matrices."""
        if not mats:
            raise ValueError("need at least one coefficient matrix")
        m, n = len(mats[0]), len(mats[0][0]) if mats[0] else 0
        for M in mats:
            if len(M) != m or any(len(r) != n for r in M):
                raise ValueError("coefficient matrices must all have the same shape")
        return cls(
            [[OrePoly([mats[j][r][c] for j in range(len(mats))], q) for c in range(n)] for r in range(m)],
            q,
        )

    @classmethod
    def from_sigma_matrix(cls, X: Sequence[Sequence[SigmaPoly]], q) -> "OreMatrix":
        return cls([[OrePoly.from_sigma_poly(p, q) for p in row] for row in X], q)

    @classmethod
    def identity(cls, m: int, q) -> "OreMatrix":
        one, zero = OrePoly.from_tpoly(TPoly.one(), q), OrePoly.zero(q)
        return cls([[one if i == j else zero for j in range(m)] for i in range(m)], q)

    def row(self, i: int) -> tuple[OrePoly, ...]:
        return self.entries[i]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(not e for r in self.entries for e in r)

    @property
    def t_degree(self):
        return _max_degree(c for r in self.entries for e in r for c in e.coeffs)

    @property
    def sigma_degree(self):
        best = MINUS_INFINITY
        for r in self.entries:
            for e in r:
                if e and (best is MINUS_INFINITY or e.sigma_degree > best):
                    best = e.sigma_degree
        return best

    def row_t_degree(self, i: int):
        return _max_degree(c for e in self.entries[i] for c in e.coeffs)

    def coefficient_matrix(self, j: int) -> list[list[TPoly]]:
        """The TPoly matrix ``A_j`` in front of ``sigma^j``."""
        return [[e.coeff(j) for e in r] for r in self.entries]

    def __matmul__(self, other: "OreMatrix") -> "OreMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        zero = OrePoly.zero(self.q)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    if self.entries[i][k] and other.entries[k][j]:
                        acc = acc + ore_mul(self.entries[i][k], other.entries[k][j])
                row.append(acc)
            out.append(row)
        return OreMatrix(out, self.q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OreMatrix):
            return NotImplemented
        return self.q == other.q and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.entries, self.q))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(e.to_str() for e in r) for r in self.entries)
        return f"OreMatrix([{body}], q={self.q})"


def apply_matrix(A: OreMatrix, y: Sequence) -> list[RationalFunction]:
    if A.ncols != len(y):
        raise ValueError(f"dimension mismatch: matrix has {A.ncols} columns, vector has {len(y)} entries")
    y = [as_rational_function(v) for v in y]
    out = []
    for r in A.entries:
        acc = RationalFunction(TPoly())
        for e, v in zip(r, y):
            if e and v:
                acc = acc + apply(e, v)
        out.append(acc)
    return out


def sigma_matrix_zero(m: int, n: int) -> SigmaMatrix:
    return tuple(tuple(SigmaPoly() for _ in range(n)) for _ in range(m))


def sigma_matrix_identity(m: int) -> SigmaMatrix:
    return tuple(tuple(SigmaPoly.one() if i == j else SigmaPoly() for j in range(m)) for i in range(m))


def sigma_matmul(X: Sequence[Sequence[SigmaPoly]], Y: Sequence[Sequence[SigmaPoly]]) -> SigmaMatrix:
    if X and len(X[0]) != len(Y):
        raise ValueError("dimension mismatch")
    n = len(Y[0]) if Y else 0
    out = []
    for row in X:
        new = []
        for j in range(n):
            acc = SigmaPoly()
            for k, x in enumerate(row):
                if x and Y[k][j]:
                    acc = acc + x * Y[k][j]
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def sigma_matrix_scale_var(X: Sequence[Sequence[SigmaPoly]], c) -> SigmaMatrix:
    """Entrywise ``x(sigma) -> x(c*sigma)``."""
    return tuple(tuple(p.scale_var(c) for p in row) for row in X)


def is_zero_sigma_matrix(X: Sequence[Sequence[SigmaPoly]]) -> bool:
    return all(not p for row in X for p in row)


def t_decompose(A: OreMatrix) -> list[SigmaMatrix]:
    """``[Ã_0, ..., Ã_l]`` with ``A = sum_i t^i Ã_i`` and Ã_i over K[sigma]."""
    ell = A.t_degree
    if ell is MINUS_INFINITY:
        return [sigma_matrix_zero(A.nrows, A.ncols)]
    return [t_coefficient(A, i) for i in range(ell + 1)]


def t_coefficient(A: OreMatrix, i: int) -> SigmaMatrix:
    return tuple(
        tuple(SigmaPoly([c.coeff(i) for c in e.coeffs]) for e in row) for row in A.entries
    )


def t_recompose(mats: Sequence[Sequence[Sequence[SigmaPoly]]], q) -> OreMatrix:
    """Inverse of :func:`t_decompose`."""
    m, n = len(mats[0]), len(mats[0][0]) if mats[0] else 0
    rows = []
    for r in range(m):
        row = []
        for c in range(n):
            s = max((len(M[r][c].coeffs) for M in mats), default=0)
            row.append(OrePoly([TPoly([M[r][c].coeff(j) for M in mats]) for j in range(s)], q))
        rows.append(row)
    return OreMatrix(rows, q)


def t_trailing(A: OreMatrix) -> SigmaMatrix:
    return t_coefficient(A, 0)


def t_leading(A: OreMatrix) -> SigmaMatrix:
    ell = A.t_degree
    if ell is MINUS_INFINITY:
        raise ValueError("the zero operator matrix has no t-leading matrix")
    return t_coefficient(A, ell)


def sigma_left_mul(X: Sequence[Sequence[SigmaPoly]], A: OreMatrix) -> OreMatrix:
    """``X * A`` for X over K[sigma]."""
    return OreMatrix.from_sigma_matrix(X, A.q) @ A


@dataclass(frozen=True)
class QRecSystem:
    """The system ``A . y = t^(-nu) b``."""

    A: OreMatrix
    b: tuple[TPoly, ...]
    nu: int = 0

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(p if isinstance(p, TPoly) else TPoly((p,)) for p in self.b))
        if self.A.nrows != self.A.ncols:
            raise ValueError(f"operator matrix must be square, got {self.A.nrows}x{self.A.ncols}")
        if len(self.b) != self.A.nrows:
            raise ValueError(f"right hand side has {len(self.b)} entries, expected {self.A.nrows}")
        if self.nu < 0:
            raise ValueError("nu must be nonnegative")

    @classmethod
    def from_matrices(cls, mats, b, nu: int = 0, q=2) -> "QRecSystem":
        return cls(OreMatrix.from_coefficient_matrices(mats, q), tuple(b), nu)

    @property
    def q(self) -> Fraction:
        return self.A.q

    @property
    def m(self) -> int:
        return self.A.nrows

    @property
    def order(self):
        return self.A.sigma_degree

    @property
    def ell(self):
        return self.A.t_degree

    @property
    def kappa(self):
        return _max_degree(self.b)

    def is_homogeneous(self) -> bool:
        return all(not p for p in self.b)

    def rhs(self) -> list[RationalFunction]:
        """``t^(-nu) b`` as rational functions."""
        s = RationalFunction.t_power(-self.nu)
        return [s * p for p in self.b]

    def homogeneous(self) -> "QRecSystem":
        return QRecSystem(self.A, tuple(TPoly() for _ in self.b), 0)



def sigma_act_rhs(p: SigmaPoly, nu: int, b: TPoly, q: Fraction) -> TPoly:
    """Polynomial part of ``p(sigma) . (t^(-nu) b)``; the factor t^(-nu) is kept.

    Uses ``sigma^j . (t^(-nu) b(t)) = q^(-nu j) t^(-nu) b(q^j t)``.
    """
    acc = TPoly()
    qj = Fraction(1)
    for c in p.coeffs:
        if c:
            acc = acc + b.scale_var(qj) * (c / qj**nu)
        qj *= q
    return acc


def system_left_mul_sigma(sys: QRecSystem, X: Sequence[Sequence[SigmaPoly]]) -> QRecSystem:
    """Left-multiply the whole system (operator and right hand side) by X over K[sigma]."""
    if len(X) != sys.m or any(len(r) != sys.m for r in X):
        raise ValueError("transformation matrix has the wrong shape")
    A = sigma_left_mul(X, sys.A)
    b = []
    for row in X:
        acc = TPoly()
        for p, bk in zip(row, sys.b):
            if p and bk:
                acc = acc + sigma_act_rhs(p, sys.nu, bk, sys.q)
        b.append(acc)
    return QRecSystem(A, tuple(b), sys.nu)


def system_scale_rows(sys: QRecSystem, rows: Sequence[int], e: int) -> QRecSystem:
    """Multiply the given rows by ``t^e`` and re-homogenize to one global nu.

    For ``e < 0`` the operator rows must be divisible by ``t^(-e)``.
    """
    rows = set(rows)
    A = OreMatrix(
        [[x.t_shift(e) for x in r] if i in rows else r for i, r in enumerate(sys.A.entries)],
        sys.q,
    )
    if e >= 0:
        b = tuple(p.shift_up(e) if i in rows else p for i, p in enumerate(sys.b))
        return QRecSystem(A, b, sys.nu)
    # scaled rows now carry t^(-(nu - e)); lift the others to the same exponent
    b = tuple(p if i in rows else p.shift_up(-e) for i, p in enumerate(sys.b))
    return QRecSystem(A, b, sys.nu - e)


def system_scale_row_const(sys: QRecSystem, i: int, c) -> QRecSystem:
    c = as_fraction(c)
    if c == 0:
        raise ValueError("row scaling by zero")
    A = OreMatrix(
        [[x * c for x in r] if k == i else r for k, r in enumerate(sys.A.entries)], sys.q
    )
    b = tuple(p * c if k == i else p for k, p in enumerate(sys.b))
    return QRecSystem(A, b, sys.nu)
