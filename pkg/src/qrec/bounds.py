"""Denominator (t-power) and polynomial degree bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .arith import MINUS_INFINITY, SigmaPoly, t_power_split
from .errors import SingularSystemError
from .ore import QRecSystem, check_q, t_leading, t_trailing
from .popov import sigma_det


@dataclass(frozen=True)
class BoundReport:
    """Result of a bound computation.

    ``bound is None`` means no nonzero solution can exist (degree kind only).
    ``structural_bound`` is nu for denominators and kappa - nu - ell for
    degrees (None when b = 0 or the right hand side is not polynomial).
    """

    kind: str
    det_poly: SigmaPoly
    candidates: frozenset[int]
    structural_bound: int | None
    bound: int | None
    notes: tuple[str, ...] = field(default=())

    @property
    def has_solutions(self) -> bool:
        return self.bound is not None


def lambda_poly(sys: QRecSystem) -> SigmaPoly:
    return sigma_det(t_trailing(sys.A))


def rho_poly(sys: QRecSystem) -> SigmaPoly:
    if sys.A.is_zero():
        return SigmaPoly()
    return sigma_det(t_leading(sys.A))


def _integer_coefficients(p: SigmaPoly) -> list[int]:
    den = lcm(1, *(c.denominator for c in p.coeffs))
    return [int(c * den) for c in p.coeffs]


def q_power_roots(p: SigmaPoly, q, direction: str = "negative") -> frozenset[int]:
    """All ``n >= 0`` with ``p(q^-n) = 0`` (negative) or ``p(q^n) = 0`` (positive).

    With q = a/b in lowest terms, a root ``(a/b)^(+-n)`` forces ``|a|^n`` and
    ``|b|^n`` to divide the outer integer coefficients of p, so
    ``n <= log2 max(|c_0|, |c_d|)``; every n in that range is tested exactly.
    """
    if direction not in ("negative", "positive"):
        raise ValueError("direction must be 'negative' or 'positive'")
    if not p:
        raise SingularSystemError("q_power_roots of the zero polynomial; regularize first")
    q = check_q(q)
    _, g = t_power_split(p)
    cs = _integer_coefficients(g)
    n_max = max(abs(cs[0]), abs(cs[-1])).bit_length()
    base = q if direction == "positive" else 1 / q
    found = set()
    x = Fraction(1)
    for n in range(n_max + 1):
        if g(x) == 0:
            found.add(n)
        x *= base
    return frozenset(found)


def denominator_t_bound(sys: QRecSystem) -> BoundReport:
    """Bound on n for t^n dividing the denominator of any rational solution.

    Requires a t-tail regular system.
    """
    lam = lambda_poly(sys)
    if not lam:
        raise SingularSystemError("t-tail singular (lambda = 0); regularize first")
    cands = q_power_roots(lam, sys.q, "negative")
    bound = max({0, sys.nu} | cands)
    return BoundReport("denominator", lam, cands, sys.nu, bound)


def degree_bound(sys: QRecSystem) -> BoundReport:
    """Bound on the degree of polynomial solutions; requires t-head regularity."""
    rho = rho_poly(sys)
    if not rho:
        raise SingularSystemError("t-head singular (rho = 0); regularize first")
    nu = sys.nu
    if nu > 0 and any(p and p.valuation() < nu for p in sys.b):
        return BoundReport(
            "degree", rho, frozenset(), None, None,
            ("right hand side has negative powers of t",),
        )
    cands = q_power_roots(rho, sys.q, "positive")
    kappa = sys.kappa
    structural = None if kappa is MINUS_INFINITY else kappa - nu - sys.ell
    pool = set(cands)
    notes = ()
    if structural is None:
        notes = ("homogeneous right hand side: kappa absent",)
    else:
        pool.add(structural)
    bound = max(pool) if pool else None
    if bound is not None and bound < 0:
        bound = None
    return BoundReport("degree", rho, cands, structural, bound, notes)
