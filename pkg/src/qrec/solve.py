"""Polynomial solutions by ansatz, and rational solutions whose denominator
is a power of t (optionally times a user-supplied aperiodic factor)."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arith import MINUS_INFINITY, RationalFunction, TPoly, as_rational_function
from .bounds import BoundReport, degree_bound, denominator_t_bound
from .errors import NotRegularError
from .linalg import solve_affine
from .ore import OreMatrix, OrePoly, QRecSystem, apply_matrix
from .popov import ore_row_rank
from .regularize import RegularizeConfig, head_regularize, tail_regularize

log = logging.getLogger(__name__)

Vector = list[RationalFunction]


@dataclass
class SolutionSet:
    """``particular + span(homogeneous_basis)``.

    ``particular`` is None for homogeneous systems and for infeasible
    inhomogeneous ones; ``feasible`` tells the two apart.
    """

    particular: Vector | None
    homogeneous_basis: list[Vector]
    denominator_exponent: int = 0
    feasible: bool = True
    degree_bound: int | None = None
    reports: dict[str, BoundReport] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.homogeneous_basis)


def verify_solution(sys: QRecSystem, y: Sequence) -> bool:
    """True iff ``A . y == t^(-nu) b`` exactly."""
    if len(y) != sys.m:
        raise ValueError(f"vector has {len(y)} entries, system has m={sys.m}")
    return apply_matrix(sys.A, y) == sys.rhs()


def _primitive_rows(A_rows, b) -> tuple[list[list[OrePoly]], list[TPoly]]:
    from math import gcd, lcm

    out_rows, out_b = [], []
    for row, bi in zip(A_rows, b):
        coeffs = [c for e in row for p in e.coeffs for c in p.coeffs] + list(bi.coeffs)
        coeffs = [c for c in coeffs if c]
        if not coeffs:
            out_rows.append(list(row))
            out_b.append(bi)
            continue
        num = gcd(*(c.numerator for c in coeffs))
        den = lcm(*(c.denominator for c in coeffs))
        f = Fraction(den, num)
        out_rows.append([e * f for e in row])
        out_b.append(bi * f)
    return out_rows, out_b


def substitute_t_power(sys: QRecSystem, n: int, aperiodic: TPoly | None = None) -> QRecSystem:
    """System in z for ``y = z / (t^n d)``, denominators cleared, rows made primitive.

    ``A'_j = q^(-n j) A_j prod_{i != j} d(q^i t)``; each row (with its right
    hand side entry) is then scaled to integer coefficients with content 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    d = aperiodic if aperiodic is not None else TPoly.one()
    if not d or d.coeff(0) == 0:
        raise ValueError("aperiodic denominator must be nonzero and coprime to t")
    q, s = sys.q, max(sys.order, 0)
    shifted = [d.scale_var(q**i) for i in range(s + 1)]
    mats = []
    for j in range(s + 1):
        f = TPoly.const(q ** (-n * j))
        for i in range(s + 1):
            if i != j:
                f = f * shifted[i]
        mats.append(f)
    total = TPoly.one()
    for p in shifted:
        total = total * p
    rows = [
        [OrePoly([mats[j] * e.coeff(j) for j in range(s + 1)], q) for e in row]
        for row in sys.A.entries
    ]
    if n >= sys.nu:
        b = [(bi * total).shift_up(n - sys.nu) for bi in sys.b]
        nu = 0
    else:
        b = [bi * total for bi in sys.b]
        nu = sys.nu - n
    rows, b = _primitive_rows(rows, b)
    return QRecSystem(OreMatrix(rows, q), tuple(b), nu)


def polynomial_solutions(sys: QRecSystem, N: int) -> SolutionSet:
    """All polynomial solutions of degree <= N by coefficient comparison."""
    m, q = sys.m, sys.q
    if N is None or N < 0:
        feasible = sys.is_homogeneous()
        return SolutionSet(None, [], 0, feasible, N)
    ell = sys.ell if sys.ell is not MINUS_INFINITY else 0
    s = max(sys.order, 0)
    nu = sys.nu
    rhs_ok = all(not p or p.valuation() >= nu for p in sys.b)
    rhs = [p.shift_down(nu) if rhs_ok else TPoly() for p in sys.b]
    top = ell + N
    for p in rhs:
        if p and p.degree > top:
            top = p.degree
    nvars = m * (N + 1)
    # row (e, r): coefficient of t^e in equation r
    eqs: list[list[Fraction]] = []
    vals: list[Fraction] = []
    for r in range(m):
        entries = sys.A.entries[r]
        for e in range(top + 1):
            row = [Fraction(0)] * nvars
            for k in range(N + 1):
                i = e - k
                if i < 0:
                    continue
                for c in range(m):
                    op = entries[c]
                    acc = Fraction(0)
                    qk = q**k
                    w = Fraction(1)
                    for j in range(s + 1):
                        a = op.coeff(j).coeff(i)
                        if a:
                            acc += w * a
                        w *= qk
                    row[k * m + c] = acc
            eqs.append(row)
            vals.append(rhs[r].coeff(e))
    x, kernel = solve_affine(eqs, vals, nvars)

    def to_vector(v) -> Vector:
        return [
            RationalFunction(TPoly([v[k * m + c] for k in range(N + 1)])) for c in range(m)
        ]

    basis = [to_vector(v) for v in kernel]
    if sys.is_homogeneous():
        return SolutionSet(None, basis, 0, True, N)
    if not rhs_ok or x is None:
        return SolutionSet(None, basis, 0, False, N)
    return SolutionSet(to_vector(x), basis, 0, True, N)


def rational_t_solutions(
    sys: QRecSystem,
    aperiodic: TPoly | None = None,
    config: RegularizeConfig | None = None,
    verify: bool = True,
) -> SolutionSet:
    """All solutions whose denominators divide ``t^n * d`` for the computed n.

    Pipeline: tail-regularize, bound the t-power, substitute ``y = z/(t^n d)``,
    head-regularize, bound the degree, solve the ansatz, map back, verify.
    """
    rank = ore_row_rank(sys.A)
    if rank < sys.m:
        raise NotRegularError(
            f"system not regular (row rank {rank} < {sys.m}); remove redundancies first"
        )
    cfg = RegularizeConfig(
        max_steps=config.max_steps if config else None, check_rank=False
    )
    tail_sys, _ = tail_regularize(sys, cfg)
    den = denominator_t_bound(tail_sys)
    n = den.bound
    z_sys = substitute_t_power(sys, n, aperiodic)
    head_sys, _ = head_regularize(z_sys, cfg)
    reports = {"denominator": den}
    bounds = []
    hom = degree_bound(head_sys.homogeneous())
    reports["degree_homogeneous"] = hom
    if hom.bound is not None:
        bounds.append(hom.bound)
    if not sys.is_homogeneous():
        full = degree_bound(head_sys)
        reports["degree"] = full
        if full.bound is not None:
            bounds.append(full.bound)
    N = max(bounds) if bounds else None
    log.debug("denominator exponent %s, degree bound %s", n, N)
    poly = polynomial_solutions(z_sys, N if N is not None else -1)

    scale = RationalFunction(TPoly.one(), TPoly.monomial(n) * (aperiodic or TPoly.one()))

    def back(v: Vector) -> Vector:
        return [as_rational_function(e) * scale for e in v]

    basis = [back(v) for v in poly.homogeneous_basis]
    particular = back(poly.particular) if poly.particular is not None else None
    result = SolutionSet(particular, basis, n, poly.feasible, N, reports)
    if verify:
        hsys = sys.homogeneous()
        for v in basis:
            if not verify_solution(hsys, v):
                raise AssertionError(f"basis vector failed verification: {v}")
        if particular is not None and not verify_solution(sys, particular):
            raise AssertionError(f"particular solution failed verification: {particular}")
    return result
