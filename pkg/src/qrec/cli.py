"""Command line interface: ``qrec <command> FILE``.

Exit status: 0 success, 1 mathematically infeasible or ill-posed input
(rank deficient, no solution), 2 malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys as _sys
from typing import Any, Callable

from .arith import SigmaPoly, format_fraction
from .bounds import BoundReport, degree_bound, denominator_t_bound, lambda_poly, rho_poly
from .errors import DocumentError, IterationLimitError, NotRegularError, SingularSystemError
from .io import (
    load_system,
    parse_expression,
    poly_json,
    rf_json,
    sigma_matrix_json,
    sigma_matrix_str,
    system_to_document,
)
from .ore import QRecSystem, t_leading, t_trailing
from .popov import ore_row_rank
from .regularize import (
    PopovStep,
    ReductionStep,
    RegularizationTrace,
    ShiftStep,
    head_regularize,
    tail_regularize,
)
from .solve import SolutionSet, polynomial_solutions, rational_t_solutions, verify_solution

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT = 0, 1, 2


class _Infeasible(Exception):
    pass


def _deg(d) -> int | None:
    return d if isinstance(d, int) else None


def _poly(p: SigmaPoly | Any, fmt: str):
    return poly_json(p) if fmt == "json" else p.to_str()


def _trace(trace: RegularizationTrace, fmt: str) -> list:
    out = []
    for s in trace.steps:
        if isinstance(s, PopovStep):
            X = sigma_matrix_json(s.X) if fmt == "json" else sigma_matrix_str(s.X)
            out.append({"type": "popov", "rank": s.rank, "X": X})
        elif isinstance(s, ShiftStep):
            out.append({"type": "shift", "start": s.start, "exponent": s.exponent})
        elif isinstance(s, ReductionStep):
            X = sigma_matrix_json(s.X) if fmt == "json" else sigma_matrix_str(s.X)
            out.append({"type": "reduction", "start": s.start, "X": X})
    return out


def _bound(rep: BoundReport, fmt: str) -> dict:
    return {
        "det_poly": _poly(rep.det_poly, fmt),
        "candidates": sorted(rep.candidates),
        "structural_bound": rep.structural_bound,
        "bound": rep.bound,
        "notes": list(rep.notes),
    }


def _vector(v, fmt: str):
    if v is None:
        return None
    return [rf_json(e) if fmt == "json" else e.to_str() for e in v]


def cmd_check(sys: QRecSystem, args) -> dict:
    rank = ore_row_rank(sys.A)
    lam = lambda_poly(sys)
    rho = rho_poly(sys)
    return {
        "m": sys.m,
        "s": _deg(sys.order),
        "ell": _deg(sys.ell),
        "nu": sys.nu,
        "kappa": _deg(sys.kappa),
        "q": format_fraction(sys.q),
        "rank": rank,
        "regular": rank == sys.m,
        "t_tail_regular": bool(lam),
        "t_head_regular": bool(rho),
        "lambda": _poly(lam, args.format),
        "rho": _poly(rho, args.format),
    }


def _regularize(sys, args, head: bool) -> dict:
    fn = head_regularize if head else tail_regularize
    out_sys, trace = fn(sys)
    mat = t_leading(out_sys.A) if head else t_trailing(out_sys.A)
    det = rho_poly(out_sys) if head else lambda_poly(out_sys)
    res = {
        "system": system_to_document(out_sys),
        "steps": len(trace),
        ("leading_matrix" if head else "trailing_matrix"): (
            sigma_matrix_json(mat) if args.format == "json" else sigma_matrix_str(mat)
        ),
        ("rho" if head else "lambda"): _poly(det, args.format),
    }
    if args.trace:
        res["trace"] = _trace(trace, args.format)
    return res


def cmd_tail(sys, args) -> dict:
    return _regularize(sys, args, head=False)


def cmd_head(sys, args) -> dict:
    return _regularize(sys, args, head=True)


def cmd_denbound(sys, args) -> dict:
    regularized = False
    trace = RegularizationTrace("tail")
    if not lambda_poly(sys):
        sys, trace = tail_regularize(sys)
        regularized = True
    res = {"regularized": regularized, "nu": sys.nu, **_bound(denominator_t_bound(sys), args.format)}
    res["lambda"] = res.pop("det_poly")
    if args.trace:
        res["trace"] = _trace(trace, args.format)
    return res


def cmd_degbound(sys, args) -> dict:
    regularized = False
    trace = RegularizationTrace("head")
    if not rho_poly(sys):
        sys, trace = head_regularize(sys)
        regularized = True
    rep = degree_bound(sys)
    res = {"regularized": regularized, "ell": _deg(sys.ell), "kappa": _deg(sys.kappa), **_bound(rep, args.format)}
    res["rho"] = res.pop("det_poly")
    if args.trace:
        res["trace"] = _trace(trace, args.format)
    return res


def _solution_payload(sol: SolutionSet, fmt: str) -> dict:
    return {
        "feasible": sol.feasible,
        "particular": _vector(sol.particular, fmt),
        "basis": [_vector(v, fmt) for v in sol.homogeneous_basis],
        "dimension": sol.dimension,
    }


def cmd_polysolve(sys, args) -> dict:
    if args.max_degree < 0:
        raise DocumentError("--max-degree must be nonnegative")
    sol = polynomial_solutions(sys, args.max_degree)
    verified = None
    if args.verify:
        hom = sys.homogeneous()
        verified = all(verify_solution(hom, v) for v in sol.homogeneous_basis) and (
            sol.particular is None or verify_solution(sys, sol.particular)
        )
    res = {"max_degree": args.max_degree, "verified": verified, **_solution_payload(sol, args.format)}
    if not sol.feasible:
        raise _Infeasible(res)
    return res


def cmd_ratsolve(sys, args) -> dict:
    d = parse_expression(args.aperiodic_denominator) if args.aperiodic_denominator else None
    if d is not None and (not d or d.coeff(0) == 0):
        raise DocumentError("aperiodic denominator must be nonzero and not divisible by t")
    verify = True if args.verify is None else args.verify
    sol = rational_t_solutions(sys, aperiodic=d, verify=verify)
    res = {
        "n_star": sol.denominator_exponent,
        "N_star": sol.degree_bound,
        "verified": verify,
        **_solution_payload(sol, args.format),
    }
    if not sol.feasible:
        raise _Infeasible(res)
    return res


COMMANDS: dict[str, Callable] = {
    "check": cmd_check,
    "tail-regularize": cmd_tail,
    "head-regularize": cmd_head,
    "denbound": cmd_denbound,
    "degbound": cmd_degbound,
    "polysolve": cmd_polysolve,
    "ratsolve": cmd_ratsolve,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="system document (JSON)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--trace", action="store_true", help="emit regularization steps")
    common.add_argument(
        "--verify", action=argparse.BooleanOptionalAction, default=None,
        help="re-verify solutions (default on for ratsolve)",
    )
    parser = argparse.ArgumentParser(
        prog="qrec", description="Bounds and rational solutions of q-recurrence systems."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="dimensions, rank, regularity, lambda, rho")
    sub.add_parser("tail-regularize", parents=[common], help="make the t-trailing matrix regular")
    sub.add_parser("head-regularize", parents=[common], help="make the t-leading matrix regular")
    sub.add_parser("denbound", parents=[common], help="bound the power of t in denominators")
    sub.add_parser("degbound", parents=[common], help="bound the degree of polynomial solutions")
    p = sub.add_parser("polysolve", parents=[common], help="polynomial solutions up to a degree")
    p.add_argument("--max-degree", type=int, required=True, metavar="N")
    r = sub.add_parser("ratsolve", parents=[common], help="all solutions with t-power denominators")
    r.add_argument("--aperiodic-denominator", metavar="EXPR", default=None)
    return parser


def _styled(text: str, stream) -> str:
    if os.environ.get("QREC_COLOR", "1") == "0" or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\033[1m{text}\033[0m"


def _emit_text(result: dict, out) -> None:
    for key in sorted(result):
        value = result[key]
        if key == "system":
            out.write(f"{_styled(key, out)}:\n")
            for line in json.dumps(value, indent=2, sort_keys=True).splitlines():
                out.write(f"  {line}\n")
        elif key in ("trace", "basis") and isinstance(value, list):
            out.write(f"{_styled(key, out)}: {len(value)} entries\n")
            for item in value:
                out.write(f"  {_format_item(item)}\n")
        else:
            out.write(f"{_styled(key, out)}: {_format_item(value)}\n")


def _format_item(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, dict):
        return " ".join(f"{k}={_format_item(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "(" + ", ".join(_format_item(v) for v in value) + ")"
    return str(value)


def run_command(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or _sys.stdout
    err = err or _sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_INPUT
    status = EXIT_OK
    try:
        sys = load_system(args.file)
        result = COMMANDS[args.command](sys, args)
    except _Infeasible as exc:
        result = exc.args[0]
        status = EXIT_INFEASIBLE
        err.write("no solution: the inhomogeneous system is infeasible\n")
    except (DocumentError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (NotRegularError, IterationLimitError, SingularSystemError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INFEASIBLE
    result = {"command": args.command, **result}
    if args.format == "json":
        out.write(json.dumps(result, indent=2, sort_keys=True) + "\n")
    else:
        _emit_text(result, out)
    return status


def main() -> None:
    raise SystemExit(run_command())
