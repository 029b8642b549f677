#!/usr/bin/env python3
"""Step through the solving pipeline on a system document and print each stage."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from qrec.bounds import degree_bound, denominator_t_bound, lambda_poly, rho_poly
from qrec.io import load_system, sigma_matrix_str
from qrec.ore import t_leading, t_trailing
from qrec.popov import ore_row_rank
from qrec.regularize import PopovStep, ReductionStep, head_regularize, tail_regularize
from qrec.solve import rational_t_solutions, substitute_t_power

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class WalkthroughConfig:
    system: Path = ROOT / "systems" / "ex_bound.json"
    show_trace: bool = True


def describe_trace(trace) -> None:
    for i, step in enumerate(trace.steps, 1):
        if isinstance(step, PopovStep):
            print(f"    {i}. popov  rank={step.rank}  X={sigma_matrix_str(step.X)}")
        elif isinstance(step, ReductionStep):
            print(f"    {i}. reduce rows {step.start}..  X={sigma_matrix_str(step.X)}")
        else:
            print(f"    {i}. shift  rows {step.start}.. by t^{step.exponent}")


def run(cfg: WalkthroughConfig) -> None:
    sys = load_system(str(cfg.system))
    print(f"system {cfg.system.name}: m={sys.m} s={sys.order} ell={sys.ell} nu={sys.nu} q={sys.q}")
    print(f"  row rank            {ore_row_rank(sys.A)}")
    print(f"  t-trailing matrix   {sigma_matrix_str(t_trailing(sys.A))}")
    print(f"  lambda              {lambda_poly(sys).to_str()}")

    tail, trace = tail_regularize(sys)
    if cfg.show_trace and len(trace):
        print("  tail regularization:")
        describe_trace(trace)
    den = denominator_t_bound(tail)
    print(f"  q-power roots       {sorted(den.candidates)}  ->  n* = {den.bound}")

    z = substitute_t_power(sys, den.bound)
    print(f"  substituted system  ell={z.ell}, t-leading {sigma_matrix_str(t_leading(z.A))}")
    print(f"  rho                 {rho_poly(z).to_str()}")
    head, trace = head_regularize(z)
    if cfg.show_trace and len(trace):
        print("  head regularization:")
        describe_trace(trace)
    print(f"  t-leading matrix    {sigma_matrix_str(t_leading(head.A))}")
    deg = degree_bound(head)
    print(f"  rho                 {deg.det_poly.to_str()}")
    print(f"  q-power roots       {sorted(deg.candidates)}  ->  N* = {deg.bound}")

    sol = rational_t_solutions(sys)
    print(f"  solution space      dimension {sol.dimension}, feasible={sol.feasible}")
    if sol.particular is not None:
        print("    particular  (" + ", ".join(f.to_str() for f in sol.particular) + ")")
    for v in sol.homogeneous_basis:
        print("    basis       (" + ", ".join(f.to_str() for f in v) + ")")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("system", nargs="?", type=Path, default=WalkthroughConfig.system)
    parser.add_argument("--no-trace", action="store_true")
    args = parser.parse_args()
    run(WalkthroughConfig(system=args.system, show_trace=not args.no_trace))


if __name__ == "__main__":
    main()
