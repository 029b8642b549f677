"""Seeded random regular systems with planted solutions.

A random operator matrix is optionally "singularized" so that its t-trailing
or t-leading matrix loses rank (row scaling by t, or adding t-multiples /
shifted multiples of one row to another; both keep the solution set), then a
solution ``y = z / t^e`` is planted by defining the right hand side as
``A . y``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arith import RationalFunction, TPoly
from .bounds import lambda_poly, rho_poly
from .ore import OreMatrix, OrePoly, QRecSystem, apply_matrix, ore_mul
from .popov import ore_row_rank


@dataclass
class CorpusConfig:
    seed: int = 0
    max_m: int = 3
    max_order: int = 2
    max_t_degree: int = 3
    base_t_degree: int = 1
    max_planted_exponent: int = 2
    max_planted_degree: int = 2
    coeff_range: int = 4
    qs: tuple = (2, 3, -2)
    singular: str = "any"  # "tail", "head", "none" or "any"


@dataclass
class PlantedSystem:
    system: QRecSystem
    solution: list[RationalFunction]
    exponent: int
    numerator_degree: int
    kind: str = field(default="none")


def _rand_tpoly(rng: random.Random, deg: int, c: int) -> TPoly:
    return TPoly(rng.randint(-c, c) for _ in range(deg + 1))


def _rand_matrix(rng: random.Random, m: int, s: int, deg: int, c: int, q) -> OreMatrix:
    while True:
        rows = [
            [OrePoly([_rand_tpoly(rng, deg, c) for _ in range(s + 1)], q) for _ in range(m)]
            for _ in range(m)
        ]
        A = OreMatrix(rows, q)
        if A.sigma_degree == s and all(any(e for e in r) for r in rows):
            return A


def _add_multiple(A: OreMatrix, i: int, j: int, op: OrePoly) -> OreMatrix:
    rows = [list(r) for r in A.entries]
    rows[i] = [a + ore_mul(op, b) for a, b in zip(rows[i], rows[j])]
    return OreMatrix(rows, A.q)


def _scale_row_t(A: OreMatrix, i: int, k: int) -> OreMatrix:
    rows = [list(r) for r in A.entries]
    rows[i] = [e.t_shift(k) for e in rows[i]]
    return OreMatrix(rows, A.q)


def _singularize(rng: random.Random, A: OreMatrix, kind: str) -> OreMatrix:
    m, q = A.nrows, A.q
    i = rng.randrange(m)
    j = rng.choice([k for k in range(m) if k != i]) if m > 1 else i
    if kind == "tail":
        A = _scale_row_t(A, i, 1)
        if m > 1 and rng.random() < 0.6:
            shift = OrePoly.sigma(q, rng.randint(0, 1)) * rng.choice([1, -1, 2])
            A = _add_multiple(A, i, j, shift)
    elif kind == "head" and m > 1:
        k = rng.randint(1, 2)
        op = OrePoly.from_tpoly(TPoly.monomial(k, rng.choice([1, -1, 3])), q)
        if rng.random() < 0.5:
            op = ore_mul(op, OrePoly.sigma(q, 1))
        A = _add_multiple(A, i, j, op)
    return A


def planted_system(rng: random.Random, cfg: CorpusConfig) -> PlantedSystem:
    kinds = ["tail", "head", "none"] if cfg.singular == "any" else [cfg.singular]
    while True:
        m = rng.randint(1, cfg.max_m)
        s = rng.randint(0, cfg.max_order)
        q = rng.choice(cfg.qs)
        kind = rng.choice(kinds)
        if kind == "head" and m == 1:
            continue
        A = _rand_matrix(rng, m, s, cfg.base_t_degree, cfg.coeff_range, q)
        A = _singularize(rng, A, kind)
        if A.t_degree > cfg.max_t_degree or A.sigma_degree > cfg.max_order:
            continue
        if ore_row_rank(A) < m:
            continue
        probe = QRecSystem(A, tuple(TPoly() for _ in range(m)), 0)
        if kind == "tail" and lambda_poly(probe):
            continue
        if kind == "head" and rho_poly(probe):
            continue
        e = rng.randint(0, cfg.max_planted_exponent)
        d = rng.randint(0, cfg.max_planted_degree)
        z = [_rand_tpoly(rng, d, cfg.coeff_range) for _ in range(m)]
        if not any(z) or all(p.coeff(0) == 0 for p in z):
            continue
        y = [RationalFunction(p, TPoly.monomial(e)) for p in z]
        r = apply_matrix(A, y)
        nu = 0
        for f in r:
            if f:
                k, rest = f.den.valuation(), f.den.shift_down(f.den.valuation())
                assert rest == 1, "right hand side must have t-power denominators"
                nu = max(nu, k)
        b = tuple((f * RationalFunction.t_power(nu)).num for f in r)
        deg = max(p.degree for p in z if p)
        return PlantedSystem(QRecSystem(A, b, nu), y, e, deg, kind)


def corpus(n: int, cfg: CorpusConfig | None = None) -> list[PlantedSystem]:
    cfg = cfg or CorpusConfig()
    rng = random.Random(cfg.seed)
    return [planted_system(rng, cfg) for _ in range(n)]
