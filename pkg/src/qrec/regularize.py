"""Transform a regular system into an equivalent one whose t-trailing
(``tail_regularize``) or t-leading (``head_regularize``) matrix has nonzero
determinant.

Every transformation is applied to the operator and the right hand side at
once, so the returned system has exactly the solutions of the input. The
applied steps are recorded in a :class:`RegularizationTrace` that
:func:`replay_trace` can re-run.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

from .errors import IterationLimitError, NotRegularError
from .ore import (
    QRecSystem,
    SigmaMatrix,
    is_zero_sigma_matrix,
    sigma_matrix_identity,
    sigma_matrix_scale_var,
    system_left_mul_sigma,
    system_scale_rows,
    t_coefficient,
)
from .arith import MINUS_INFINITY
from .popov import popov_form, reduce_rows, sigma_det, ore_row_rank

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PopovStep:
    """Left-multiply the system by the unimodular ``X`` over K[sigma].

    ``P`` is the Popov basis this step exposes in the upper ``rank`` rows.
    """

    X: SigmaMatrix
    P: SigmaMatrix
    rank: int


@dataclass(frozen=True)
class ShiftStep:
    """Multiply rows ``start..m-1`` by ``t**exponent``."""

    start: int
    exponent: int


@dataclass(frozen=True)
class ReductionStep:
    """Left-multiply by ``[[I, 0], [-X, I]]`` with the identity block of size ``start``."""

    start: int
    X: SigmaMatrix


Step = Union[PopovStep, ShiftStep, ReductionStep]


@dataclass(frozen=True)
class RegularizationTrace:
    kind: str
    steps: tuple[Step, ...] = ()

    def count(self, step_type: type) -> int:
        return sum(isinstance(s, step_type) for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "RegularizationTrace") -> "RegularizationTrace":
        return RegularizationTrace(self.kind, self.steps + other.steps)


@dataclass
class RegularizeConfig:
    """``max_steps=None`` means ``10 * m * (ell + 1) * (s + 1)``."""

    max_steps: int | None = None
    check_rank: bool = True


def _reduction_matrix(m: int, start: int, X: SigmaMatrix) -> SigmaMatrix:
    full = [list(r) for r in sigma_matrix_identity(m)]
    for i, row in enumerate(X):
        for k, p in enumerate(row):
            full[start + i][k] = -p
    return tuple(tuple(r) for r in full)


def apply_step(sys: QRecSystem, step: Step) -> QRecSystem:
    m = sys.m
    if isinstance(step, PopovStep):
        if len(step.X) != m:
            raise ValueError(f"trace step is {len(step.X)}x{len(step.X)}, system has m={m}")
        return system_left_mul_sigma(sys, step.X)
    if isinstance(step, ShiftStep):
        if not 0 <= step.start <= m:
            raise ValueError("shift step does not fit the system")
        return system_scale_rows(sys, range(step.start, m), step.exponent)
    if isinstance(step, ReductionStep):
        if step.start + len(step.X) != m or any(len(r) != step.start for r in step.X):
            raise ValueError("reduction step does not fit the system")
        return system_left_mul_sigma(sys, _reduction_matrix(m, step.start, step.X))
    raise TypeError(f"unknown step {step!r}")


def replay_trace(trace: RegularizationTrace, sys: QRecSystem) -> QRecSystem:
    for step in trace.steps:
        sys = apply_step(sys, step)
    return sys


def _default_cap(sys: QRecSystem) -> int:
    ell = sys.ell if sys.ell is not MINUS_INFINITY else 0
    s = max(sys.order, 0)
    return 10 * sys.m * (ell + 1) * (s + 1)


def _regularize(sys: QRecSystem, head: bool, config: RegularizeConfig | None):
    config = config or RegularizeConfig()
    m = sys.m
    if config.check_rank:
        rank = ore_row_rank(sys.A)
        if rank < m:
            raise NotRegularError(
                f"system not regular (row rank {rank} < {m}); remove redundancies first"
            )
    cap = config.max_steps if config.max_steps is not None else _default_cap(sys)
    exponent = 1 if head else -1
    ell0 = sys.ell
    steps: list[Step] = []

    def coefficient_index() -> int:
        return ell0 if head else 0

    def check_degree():
        if head and sys.ell != ell0:
            raise AssertionError(f"t-degree changed from {ell0} to {sys.ell}")

    n_iter = 0
    while True:
        idx = coefficient_index()
        lead = t_coefficient(sys.A, idx)
        if sigma_det(lead):
            break
        res = popov_form(lead)
        # sigma^j t^idx = q^(j idx) t^idx sigma^j, so pre-scale X to act on Ã_idx as X
        X = sigma_matrix_scale_var(res.U, sys.q ** (-idx)) if idx else res.U
        sys = system_left_mul_sigma(sys, X)
        steps.append(PopovStep(X, res.P, res.rank))
        check_degree()
        r = res.rank
        log.debug("popov step: rank %d of %d", r, m)
        while True:
            n_iter += 1
            if n_iter > cap:
                raise IterationLimitError(
                    f"regularization exceeded {cap} steps; input may not be regular"
                )
            try:
                sys = system_scale_rows(sys, range(r, m), exponent)
            except ValueError as exc:
                raise AssertionError(f"lower rows not divisible by t: {exc}") from exc
            steps.append(ShiftStep(r, exponent))
            check_degree()
            C = t_coefficient(sys.A, idx)[r:]
            div = reduce_rows(C, res.P)
            if not div.is_exact():
                break
            if not is_zero_sigma_matrix(div.X):
                Xr = sigma_matrix_scale_var(div.X, sys.q ** (-idx)) if idx else div.X
                step = ReductionStep(r, Xr)
                sys = apply_step(sys, step)
                steps.append(step)
                check_degree()
    return sys, RegularizationTrace("head" if head else "tail", tuple(steps))


def tail_regularize(sys: QRecSystem, config: RegularizeConfig | None = None):
    """Equivalent system with ``det`` of the t-trailing matrix nonzero.

    Returns ``(system, trace)``. Raises :class:`NotRegularError` for
    rank-deficient input.
    """
    return _regularize(sys, head=False, config=config)


def head_regularize(sys: QRecSystem, config: RegularizeConfig | None = None):
    """Equivalent system with ``det`` of the t-leading matrix nonzero.

    The t-degree of the operator is unchanged by every step.
    """
    return _regularize(sys, head=True, config=config)
