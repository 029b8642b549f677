#!/usr/bin/env python3
"""Run the full pipeline over a random planted corpus and report statistics.

For every system: regularization step counts, the computed bounds, the slack
between each bound and the planted solution, and wall time. Optionally writes
one JSON record per system.
"""

from __future__ import annotations

import argparse
import json
import statistics
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from qrec.arith import RationalFunction, TPoly
from qrec.bounds import degree_bound, denominator_t_bound, lambda_poly, rho_poly
from qrec.corpus import CorpusConfig, corpus
from qrec.regularize import head_regularize, tail_regularize
from qrec.solve import rational_t_solutions, substitute_t_power, verify_solution


@dataclass
class StatsConfig:
    size: int = 100
    corpus: CorpusConfig = field(default_factory=CorpusConfig)
    output: Path | None = None


@dataclass
class Record:
    m: int
    order: int
    ell: int
    kind: str
    tail_singular: bool
    head_singular: bool
    tail_steps: int
    head_steps: int
    n_star: int
    N_star: int | None
    planted_exponent: int
    planted_degree: int
    dimension: int
    seconds: float


def measure(p) -> Record:
    start = time.perf_counter()
    s = p.system
    tail, ttrace = tail_regularize(s)
    n = denominator_t_bound(tail).bound
    z_sys = substitute_t_power(s, n)
    head, htrace = head_regularize(z_sys)
    N = degree_bound(head).bound
    sol = rational_t_solutions(s)
    z = [f * RationalFunction(TPoly.monomial(n)) for f in p.solution]
    assert verify_solution(head, z) and sol.feasible
    return Record(
        m=s.m,
        order=s.order,
        ell=s.ell,
        kind=p.kind,
        tail_singular=not lambda_poly(s),
        head_singular=not rho_poly(z_sys),
        tail_steps=len(ttrace),
        head_steps=len(htrace),
        n_star=n,
        N_star=N,
        planted_exponent=p.exponent,
        planted_degree=max(f.num.degree for f in z if f),
        dimension=sol.dimension,
        seconds=time.perf_counter() - start,
    )


def summarize(records: list[Record]) -> None:
    n = len(records)
    print(f"systems                {n}")
    print(f"t-tail singular        {sum(r.tail_singular for r in records)}")
    print(f"t-head singular        {sum(r.head_singular for r in records)}  (after substitution)")
    print(f"mean tail steps        {statistics.mean(r.tail_steps for r in records):.2f}")
    print(f"mean head steps        {statistics.mean(r.head_steps for r in records):.2f}")
    den_slack = [r.n_star - r.planted_exponent for r in records]
    deg_slack = [r.N_star - r.planted_degree for r in records if r.N_star is not None]
    print(f"denominator slack      min {min(den_slack)}  mean {statistics.mean(den_slack):.2f}  max {max(den_slack)}")
    print(f"degree slack           min {min(deg_slack)}  mean {statistics.mean(deg_slack):.2f}  max {max(deg_slack)}")
    print(f"tight denominator      {sum(s == 0 for s in den_slack)}")
    print(f"mean solution dim      {statistics.mean(r.dimension for r in records):.2f}")
    times = sorted(r.seconds for r in records)
    print(f"seconds/system         median {times[n // 2]:.4f}  max {times[-1]:.4f}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=StatsConfig.size)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--max-order", type=int, default=2)
    parser.add_argument("--singular", choices=("any", "tail", "head", "none"), default="any")
    parser.add_argument("--output", type=Path, help="write JSON lines here")
    args = parser.parse_args()
    cfg = StatsConfig(
        size=args.size,
        corpus=CorpusConfig(seed=args.seed, max_m=args.max_m, max_order=args.max_order, singular=args.singular),
        output=args.output,
    )
    records = [measure(p) for p in corpus(cfg.size, cfg.corpus)]
    summarize(records)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            for r in records:
                fh.write(json.dumps(asdict(r)) + "\n")


if __name__ == "__main__":
    main()
