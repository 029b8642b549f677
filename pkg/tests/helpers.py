"""Hypothesis strategies and independent sympy oracles shared by the tests."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy
from hypothesis import strategies as st

from qrec.arith import RationalFunction, SigmaPoly, TPoly
from qrec.ore import OrePoly

QS = (Fraction(2), Fraction(3), Fraction(1, 2), Fraction(-2), Fraction(5, 3))

T, X = sympy.symbols("t x")

fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))
qs = st.sampled_from(QS)


def polys(cls=TPoly, max_degree: int = 4, nonzero: bool = False):
    s = st.lists(fractions, min_size=0, max_size=max_degree + 1).map(cls)
    return s.filter(bool) if nonzero else s


tpolys = polys(TPoly)
sigma_polys = polys(SigmaPoly, 3)


@st.composite
def rational_functions(draw, max_degree: int = 3):
    num = draw(polys(TPoly, max_degree))
    den = draw(polys(TPoly, max_degree, nonzero=True))
    return RationalFunction(num, den)


@st.composite
def ore_polys(draw, q, max_order: int = 2, max_degree: int = 2):
    n = draw(st.integers(0, max_order + 1))
    return OrePoly([draw(polys(TPoly, max_degree)) for _ in range(n)], q)


@st.composite
def sigma_matrices(draw, max_size: int = 3, max_degree: int = 3, square: bool = True):
    m = draw(st.integers(1, max_size))
    n = m if square else draw(st.integers(1, max_size))
    entries = polys(SigmaPoly, max_degree)
    return tuple(tuple(draw(entries) for _ in range(n)) for _ in range(m))


def to_sympy(p, var=T):
    terms = (sympy.Rational(c.numerator, c.denominator) * var**k for k, c in enumerate(p.coeffs))
    return sum(terms, sympy.Integer(0))


def from_sympy(expr, cls=TPoly, var=T):
    if expr == 0:
        return cls()
    coeffs = sympy.Poly(sympy.expand(expr), var).all_coeffs()[::-1]
    return cls(Fraction(int(c.p), int(c.q)) for c in coeffs)


def sympy_det(M) -> SigmaPoly:
    mat = sympy.Matrix([[to_sympy(p, X) for p in row] for row in M])
    return from_sympy(mat.det(method="berkowitz"), SigmaPoly, X)


def random_sigma_matrix(rng: random.Random, m: int, n: int, deg: int, c: int = 5):
    return tuple(
        tuple(SigmaPoly(rng.randint(-c, c) for _ in range(rng.randint(0, deg + 1))) for _ in range(n))
        for _ in range(m)
    )


def random_unimodular(rng: random.Random, m: int, steps: int = 4, deg: int = 2):
    """Product of random elementary row operations over K[sigma]."""
    V = [[SigmaPoly.one() if i == j else SigmaPoly() for j in range(m)] for i in range(m)]
    for _ in range(steps):
        op = rng.choice(("add", "scale", "swap")) if m > 1 else "scale"
        if op == "scale":
            i = rng.randrange(m)
            c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
            V[i] = [p * c for p in V[i]]
        elif op == "swap":
            i, j = rng.sample(range(m), 2)
            V[i], V[j] = V[j], V[i]
        else:
            i, j = rng.sample(range(m), 2)
            f = SigmaPoly(rng.randint(-3, 3) for _ in range(rng.randint(1, deg + 1)))
            V[i] = [a + f * b for a, b in zip(V[i], V[j])]
    return tuple(tuple(r) for r in V)


def specialized_rank(A, point) -> int:
    """Left row rank over K(t)[sigma], estimated through the sigma-expansion.

    Rows ``sigma^i . A_r`` for ``i <= k`` span a K(t)-space of dimension
    ``(k+1) r + c`` once k is large, so ``r`` is the growth of that rank. The
    entries are evaluated at ``t = point`` (a lower bound for the generic rank).
    """
    m, n = A.nrows, A.ncols
    s = max((e.sigma_degree for row in A.entries for e in row if e), default=0)
    q = A.q
    k = m * max(s, 1) + 1
    ranks = []
    for kk in (k, k + 1):
        width = s + kk + 1
        rows = []
        for i in range(kk + 1):
            for r in range(m):
                row = [0] * (n * width)
                for c in range(n):
                    e = A.entries[r][c]
                    for j, a in enumerate(e.coeffs):
                        if a:
                            row[c * width + i + j] = to_sympy(a).subs(T, sympy.Rational(
                                (q**i * point).numerator, (q**i * point).denominator))
                rows.append(row)
        ranks.append(sympy.Matrix(rows).to_DM().convert_to(sympy.QQ).rank())
    return ranks[1] - ranks[0]


def _flatten(vectors):
    """Coefficient rows of the vectors after clearing a common denominator."""
    den = TPoly.one()
    for v in vectors:
        for f in v:
            den = den * f.den
    rows = [[(f * RationalFunction(den)).num for f in v] for v in vectors]
    width = max((p.degree + 1 for row in rows for p in row if p), default=1)
    return [[p.coeff(k) for p in row for k in range(width)] for row in rows]


def span_rank(vectors) -> int:
    """Rank over K of a family of rational function vectors."""
    if not vectors:
        return 0
    mat = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in r] for r in _flatten(vectors)])
    return mat.to_DM().convert_to(sympy.QQ).rank()


def in_span(basis, v) -> bool:
    return span_rank(list(basis) + [v]) == span_rank(list(basis))


def same_span(a, b) -> bool:
    r = span_rank(list(a) + list(b))
    return r == span_rank(a) == span_rank(b)
