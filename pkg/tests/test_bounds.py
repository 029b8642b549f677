from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import qs
from qrec.arith import RationalFunction, SigmaPoly, TPoly
from qrec.bounds import degree_bound, denominator_t_bound, lambda_poly, q_power_roots, rho_poly
from qrec.errors import SingularSystemError
from qrec.ore import OreMatrix, QRecSystem, system_scale_row_const
from qrec.regularize import head_regularize, tail_regularize
from qrec.solve import polynomial_solutions, substitute_t_power


def test_ex_bound(ex_bound):
    lam = lambda_poly(ex_bound)
    assert lam == SigmaPoly([8, -80, 128])
    assert q_power_roots(lam, 2) == {1, 3}
    rep = denominator_t_bound(ex_bound)
    assert rep.bound == 3 and rep.candidates == {1, 3}


def test_ex_deg_needs_regularization(ex_deg):
    assert not rho_poly(ex_deg)
    with pytest.raises(SingularSystemError, match="regularize first"):
        degree_bound(ex_deg)
    out, _ = head_regularize(ex_deg)
    rep = degree_bound(out)
    assert rep.candidates == {2, 3} and rep.bound == 3


def test_tail_singular_diagnostic():
    sys = QRecSystem.from_matrices([[[TPoly([0, 1])]]], [TPoly()], 0, 2)
    with pytest.raises(SingularSystemError, match="regularize first"):
        denominator_t_bound(sys)


def test_zero_polynomial_has_no_roots():
    with pytest.raises(SingularSystemError):
        q_power_roots(SigmaPoly(), 2)


@settings(max_examples=200)
@given(qs, st.sets(st.integers(0, 6), max_size=3), st.sampled_from(["negative", "positive"]),
       st.integers(0, 2), st.sampled_from([Fraction(7, 11), Fraction(-1), Fraction(13)]))
def test_q_power_roots_recovers_planted_roots(q, exps, direction, xk, extra):
    p = SigmaPoly.monomial(xk) * SigmaPoly([-extra, 1])
    for n in exps:
        root = q ** (-n) if direction == "negative" else q**n
        p = p * SigmaPoly([-root, 1])
    # no power of q in QS equals 7/11, -1 or 13
    assert q_power_roots(p, q, direction) == exps


def test_degree_bound_with_right_hand_side():
    # (sigma - 1) y = t^2 - t over q = 2: y = t^2/3 - t + c
    q = 2
    sys = QRecSystem.from_matrices([[[TPoly([-1])]], [[TPoly([1])]]], [TPoly([0, -1, 1])], 0, q)
    rep = degree_bound(sys)
    assert rep.structural_bound == 2 and rep.candidates == {0} and rep.bound == 2


def test_negative_rhs_powers_exclude_polynomial_solutions():
    sys = QRecSystem.from_matrices([[[TPoly([-1])]], [[TPoly([1])]]], [TPoly([1])], 1, 3)
    rep = degree_bound(sys)
    assert rep.bound is None and not rep.has_solutions


def test_bounds_are_sound_on_corpus(planted):
    for p in planted:
        ts, _ = tail_regularize(p.system)
        n = denominator_t_bound(ts).bound
        assert p.exponent <= n
        z_sys = substitute_t_power(p.system, n)
        hs, _ = head_regularize(z_sys)
        N = degree_bound(hs).bound
        z = [f * RationalFunction(TPoly.monomial(n)) for f in p.solution]
        assert all(f.is_polynomial() for f in z)
        assert N is not None and max(f.num.degree for f in z if f) <= N


def test_degree_bound_against_brute_force(planted):
    """Past the bound, enlarging the ansatz finds no new solutions."""
    for p in planted[:15]:
        hs, _ = head_regularize(p.system.homogeneous())
        N = degree_bound(hs).bound
        if N is None:
            assert polynomial_solutions(hs, 6).dimension == 0
            continue
        assert polynomial_solutions(hs, N).dimension == polynomial_solutions(hs, N + 3).dimension


def test_invariant_under_row_scaling(planted):
    for p in planted[:10]:
        scaled = system_scale_row_const(p.system, 0, Fraction(-3, 2))
        a, _ = head_regularize(p.system)
        b, _ = head_regularize(scaled)
        assert degree_bound(a).bound == degree_bound(b).bound
        a, _ = tail_regularize(p.system)
        b, _ = tail_regularize(scaled)
        assert denominator_t_bound(a).bound == denominator_t_bound(b).bound


def test_degree_bound_invariant_under_t_multiplication(planted):
    for p in planted[:10]:
        sys, _ = head_regularize(p.system)
        shifted = QRecSystem(
            OreMatrix([[e.t_shift(2) for e in row] for row in sys.A.entries], sys.q),
            tuple(b.shift_up(2) for b in sys.b),
            sys.nu,
        )
        assert rho_poly(shifted) == rho_poly(sys)
        before = degree_bound(sys).bound
        # a right hand side with negative t-powers rules out polynomial solutions outright
        if before is not None:
            assert degree_bound(shifted).bound == before
