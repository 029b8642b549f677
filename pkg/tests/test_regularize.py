import pytest

from qrec.arith import RationalFunction, SigmaPoly, TPoly
from qrec.bounds import lambda_poly, rho_poly
from qrec.errors import IterationLimitError, NotRegularError
from qrec.ore import OreMatrix, OrePoly, QRecSystem, ore_mul, t_leading
from qrec.regularize import (
    PopovStep,
    ReductionStep,
    RegularizationTrace,
    RegularizeConfig,
    ShiftStep,
    apply_step,
    head_regularize,
    replay_trace,
    tail_regularize,
)
from qrec.solve import verify_solution


def t_identity_system(q=2, b=(TPoly(), TPoly()), nu=0):
    tt = OrePoly.from_tpoly(TPoly.var(), q)
    z = OrePoly.zero(q)
    return QRecSystem(OreMatrix([[tt, z], [z, tt]], q), b, nu)


def test_tail_of_t_identity():
    sys = t_identity_system()
    assert not lambda_poly(sys)
    out, trace = tail_regularize(sys)
    assert out.A == OreMatrix.identity(2, 2)
    assert [type(s) for s in trace.steps] == [PopovStep, ShiftStep]
    assert trace.steps[0].rank == 0


def test_tail_shift_moves_rhs_into_denominator():
    sys = t_identity_system(b=(TPoly.one(), TPoly.var()))
    y = [RationalFunction(TPoly.one(), TPoly.var()), RationalFunction(TPoly.one())]
    assert verify_solution(sys, y)
    out, _ = tail_regularize(sys)
    assert out.nu == 1 and out.b == sys.b
    assert verify_solution(out, y)


def test_already_regular_input_is_unchanged(ex_bound):
    out, trace = tail_regularize(ex_bound)
    assert out == ex_bound and len(trace) == 0


def test_head_on_ex_deg(ex_deg):
    out, trace = head_regularize(ex_deg)
    kinds = [type(s).__name__ for s in trace.steps]
    assert kinds == ["PopovStep", "ShiftStep", "ReductionStep", "ShiftStep", "ShiftStep", "ShiftStep"]
    assert out.ell == ex_deg.ell == 4
    X = SigmaPoly
    assert t_leading(out.A) == ((X(), X([1])), (X([32, -12, 1]), X([-8, 8])))
    assert rho_poly(out) == X([-32, 12, -1])


def test_rank_deficient_input_is_rejected():
    q = 3
    row = [OrePoly([TPoly([1, 1]), TPoly([2])], q), OrePoly.sigma(q)]
    shifted = [ore_mul(OrePoly.sigma(q), e) for e in row]
    sys = QRecSystem(OreMatrix([row, shifted], q), (TPoly(), TPoly()), 0)
    for fn in (tail_regularize, head_regularize):
        with pytest.raises(NotRegularError, match="not regular"):
            fn(sys)


def test_iteration_cap(ex_deg):
    with pytest.raises(IterationLimitError):
        head_regularize(ex_deg, RegularizeConfig(max_steps=2))


def test_trace_replay_and_composition(ex_deg):
    out, trace = head_regularize(ex_deg)
    assert replay_trace(trace, ex_deg) == out
    k = 3
    first = RegularizationTrace(trace.kind, trace.steps[:k])
    rest = RegularizationTrace(trace.kind, trace.steps[k:])
    assert replay_trace(rest, replay_trace(first, ex_deg)) == out
    assert first + rest == trace


def test_apply_step_checks_shape(ex_deg):
    with pytest.raises(ValueError):
        apply_step(ex_deg, ShiftStep(3, 1))
    with pytest.raises(ValueError):
        apply_step(ex_deg, ReductionStep(1, ((SigmaPoly.one(), SigmaPoly()),)))


def test_corpus_solutions_are_preserved(planted):
    for p in planted:
        for fn, det in ((tail_regularize, lambda_poly), (head_regularize, rho_poly)):
            out, trace = fn(p.system)
            assert det(out)
            assert verify_solution(out, p.solution)
            assert replay_trace(trace, p.system) == out


def test_head_keeps_degree_and_popov_ranks_grow(planted):
    for p in planted:
        out, trace = head_regularize(p.system)
        assert out.ell == p.system.ell
        ranks = [s.rank for s in trace.steps if isinstance(s, PopovStep)]
        assert ranks == sorted(ranks)


def test_corpus_exercises_both_singularities(planted):
    assert sum(not lambda_poly(p.system) for p in planted) >= 5
    assert sum(not rho_poly(p.system) for p in planted) >= 5
