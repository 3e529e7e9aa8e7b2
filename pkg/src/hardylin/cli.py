"""Command-line front end: ``python -m hardylin <command>``.

Exit codes: 0 on success, 2 on usage errors, 3 on numerical failure.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import hardy, lhv, nonlocality, qcore
from .hardy import HardyParams

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3


class NumericalFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-9
    seed: int = 0
    output_path: str | None = None


def fmt(x) -> str:
    """12 significant digits; magnitudes below 1e-14 print as 0."""
    if x is None:
        return "undefined"
    x = float(x)
    if abs(x) < 1e-14:
        return "0"
    return f"{x:.12g}"


@contextlib.contextmanager
def _sink(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _write_csv(path: str | None, header, rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    with _sink(path) as fh:
        fh.write(buf.getvalue())


def hardy_table(alpha_min: float, alpha_max: float, steps: int, cfg: RunConfig) -> list[list[str]]:
    rows = []
    for alpha in np.linspace(alpha_min, alpha_max, steps):
        p = HardyParams(float(alpha))
        closed = hardy.closed_form_moments(p)
        gap = hardy.moments_gap(closed, hardy.matrix_moments(p))
        joint = hardy.hardy_joint(p)
        gap = max(gap, abs(joint - hardy.matrix_joint(p)))
        if gap > cfg.tolerance:
            raise NumericalFailure(f"alpha={alpha}: closed form and matrix differ by {gap:.3e}")
        rows.append([fmt(p.alpha), fmt(p.beta), fmt(p.ab), fmt(closed.u1), fmt(closed.d1),
                     fmt(closed.cond_d1d2), fmt(joint), fmt(closed.u1u2)])
    return rows


HARDY_HEADER = ["alpha", "beta", "ab", "u_marg", "d_marg", "cond_d1d2", "joint_dd", "u1u2"]
CHSH_HEADER = ["alpha", "max_chsh", "oracle_chsh", "gap"]
CHSH_GAP = 1e-4


def chsh_scan(steps: int, alpha_min: float = 0.0, alpha_max: float = 1.0) -> list[list[str]]:
    rows = []
    for alpha in np.linspace(alpha_min, alpha_max, steps):
        psi = hardy.hardy_state(float(alpha))
        value = nonlocality.max_chsh(psi).value
        oracle = nonlocality.chsh_oracle(psi)
        gap = abs(value - oracle)
        if gap >= CHSH_GAP:
            raise NumericalFailure(f"alpha={alpha}: optimizer misses oracle by {gap:.3e}")
        rows.append([fmt(alpha), fmt(value), fmt(oracle), fmt(gap)])
    return rows


def cmd_hardy_table(args, cfg: RunConfig) -> int:
    if not (0.0 <= args.alpha_min < args.alpha_max <= 1.0) or args.steps < 2:
        raise UsageError("need 0 <= alpha-min < alpha-max <= 1 and steps >= 2")
    _write_csv(cfg.output_path, HARDY_HEADER, hardy_table(args.alpha_min, args.alpha_max, args.steps, cfg))
    return EXIT_OK


def cmd_feasibility(args, cfg: RunConfig) -> int:
    if not 0.0 <= args.alpha <= 1.0:
        raise UsageError("alpha must lie in [0, 1]")
    p = HardyParams(args.alpha)
    print(f"alpha={fmt(p.alpha)} beta={fmt(p.beta)} ab={fmt(p.ab)}")
    try:
        cs = lhv.hardy_constraints(p)
    except lhv.DegenerateError:
        print("DEGENERATE: alpha*beta = 0, the state is a product state and every Hardy moment vanishes;"
              " the conditional probabilities are undefined")
        return EXIT_OK
    res = lhv.solve_feasibility(cs, tol=max(cfg.tolerance, lhv.FEASIBILITY_TOL))
    print(res.status)
    print(f"max_violation={fmt(res.max_violation)}")
    tr = lhv.translation_report(p)
    print(f"E[u1u2] standard range=[{fmt(tr.standard_min)}, {fmt(tr.standard_max)}]")
    print(f"E[u1u2] clustered={fmt(tr.clustered)}")
    print(f"quantum <D1D2>={fmt(hardy.hardy_joint(p))}")
    if res.feasible:
        rows = [[*s, fmt(w)] for s, w in res.witness.support().items()]
        if cfg.output_path is None:
            print("witness:")
        _write_csv(cfg.output_path, ["u1", "d1", "u2", "d2", "weight"], rows)
    return EXIT_OK


def cmd_chsh_scan(args, cfg: RunConfig) -> int:
    if not (0.0 <= args.alpha_min < args.alpha_max <= 1.0) or args.steps < 2:
        raise UsageError("need 0 <= alpha-min < alpha-max <= 1 and steps >= 2")
    _write_csv(cfg.output_path, CHSH_HEADER, chsh_scan(args.steps, args.alpha_min, args.alpha_max))
    return EXIT_OK


def cmd_ghz_check(args, cfg: RunConfig) -> int:
    res = nonlocality.ghz_check(tol=cfg.tolerance)
    for k in res.quantum:
        print(f"<{k}> quantum={fmt(res.quantum[k])} factored={fmt(res.factored[k])}")
    for pair in res.factored_pair_max:
        print(f"pair {pair[0]}{pair[1]} max CHSH factored={fmt(res.factored_pair_max[pair])}"
              f" quantum={fmt(res.quantum_pair_max[pair])}")
    print("PASS" if res.passed else "FAIL")
    return EXIT_OK


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="numerical tolerance (default 1e-9)")
    common.add_argument("--seed", type=int, default=0, help="random seed (all commands are currently deterministic)")
    common.add_argument("--out", default=None, help="CSV output path (default: standard output)")

    parser = argparse.ArgumentParser(prog="hardylin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hardy-table", parents=[common], help="quantum predictions over an alpha grid")
    p.add_argument("--alpha-min", type=float, default=0.0)
    p.add_argument("--alpha-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=11)
    p.set_defaults(func=cmd_hardy_table)

    p = sub.add_parser("feasibility", parents=[common], help="hidden-variable LP for Hardy's conditions")
    p.add_argument("--alpha", type=float, required=True)
    p.set_defaults(func=cmd_feasibility)

    p = sub.add_parser("chsh-scan", parents=[common], help="maximal CHSH value of Hardy's state over alpha")
    p.add_argument("--steps", type=int, default=21)
    p.add_argument("--alpha-min", type=float, default=0.0)
    p.add_argument("--alpha-max", type=float, default=1.0)
    p.set_defaults(func=cmd_chsh_scan)

    p = sub.add_parser("ghz-check", parents=[common], help="GHZ state against the factored three-party model")
    p.set_defaults(func=cmd_ghz_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not (args.tol > 0 and math.isfinite(args.tol)):
        print("hardylin: error: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    cfg = RunConfig(args.tol, args.seed, args.out)
    try:
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"hardylin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalFailure, qcore.ConvergenceError, ArithmeticError) as exc:
        print(f"hardylin: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
