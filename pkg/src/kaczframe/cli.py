"""Command-line front end.

Matrix files are MatrixMarket; their rows are the ``a_n``. Vectors are one
value per line (``re`` or ``re im``). Reports go to stdout as JSON unless
``--report`` names a file. ``KF_LOG`` sets the log level (e.g. ``INFO``).

Exit codes: 0 success (for ``solve``: converged), 2 ``solve`` ran out of
budget, 1 bad input.
"""
import argparse
import csv
import io
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import __version__, diagnostics, mmio, report
from .errors import C1Unavailable, KaczframeError, NotFrame
from .kaczmarz import LinearSystem, cyclic_solve, data_driven_pass, normalize_rows
from .systems import (
    SystemKind,
    UnitVectorSystem,
    auxiliary_sequence,
    generate_system,
    triangular_pair,
)

log = logging.getLogger("kaczframe")

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2


@dataclass
class RunConfig:
    subcommand: str
    matrix: Optional[str] = None
    rhs: Optional[str] = None
    exact: Optional[str] = None
    out: Optional[str] = None
    report: Optional[str] = None
    trace: Optional[str] = None
    mode: str = "cyclic"
    sweeps: int = 500
    tol: float = 1e-10
    seed: int = 0
    fmt: str = "json"
    normalize: bool = False
    tolerances: diagnostics.Tolerances = field(default_factory=diagnostics.Tolerances)

    def __post_init__(self):
        if self.sweeps < 1:
            raise ValueError("--sweeps must be >= 1")
        if not self.tol > 0:
            raise ValueError("--tol must be positive")


def _emit(cfg, text):
    if cfg.report:
        with open(cfg.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _trace_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["iter", "residual", "error"])
    for it, res, err in rows:
        w.writerow([it, format(res, ".17g"), "" if err is None else format(err, ".17g")])
    return buf.getvalue()


def solve_command(cfg):
    a = mmio.read_matrix_market(cfg.matrix)
    b = mmio.read_vector(cfg.rhs)
    system = LinearSystem(a, b)
    x_true = None if cfg.exact is None else mmio.read_vector(cfg.exact)
    count = system.shape[0]

    if cfg.mode == "cyclic":
        traj = cyclic_solve(system, max_sweeps=cfg.sweeps, tol=cfg.tol, x_true=x_true,
                            keep_iterates=False)
        ends = traj.iterates
        first = 0
    else:
        traj = data_driven_pass(system, passes=cfg.sweeps, tol=cfg.tol, x_true=x_true)
        ends = traj.iterates[count - 1::count]
        first = 1
    errors = [None] * len(ends) if x_true is None else np.linalg.norm(ends - x_true, axis=1)
    trace = [(first + k, float(r), None if e is None else float(e))
             for k, (r, e) in enumerate(zip(traj.residual_norms, errors))]
    if cfg.trace:
        with open(cfg.trace, "w", encoding="utf-8") as fh:
            fh.write(_trace_csv(trace))

    bnorm = float(np.linalg.norm(b))
    final = float(traj.residual_norms[-1])
    payload = {
        "kind": "solve",
        "mode": cfg.mode,
        "solution": report.complex_vector(traj.solution),
        "residual_norm": final,
        "relative_residual": final / bnorm if bnorm > 0 else None,
        "sweeps_used": traj.sweeps,
        "converged": traj.converged,
        "tol": cfg.tol,
    }
    if bnorm == 0:
        payload["reasons"] = {"relative_residual": "right-hand side is zero"}
    if cfg.fmt == "csv":
        _emit(cfg, _trace_csv(trace))
    else:
        _emit(cfg, report.dumps(payload) + "\n")
    log.info("solve: mode=%s sweeps=%d residual=%.3e", cfg.mode, traj.sweeps, final)
    if not traj.converged:
        print(f"not converged after {traj.sweeps} sweeps; residual {final:.6e}", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def analyze_command(cfg):
    a = mmio.read_matrix_market(cfg.matrix)
    system = LinearSystem(a, np.zeros(a.shape[0]))
    e, scales, _ = normalize_rows(system)
    rep = diagnostics.analyze_system(e, cfg.tolerances, rows=a)
    _emit(cfg, report.dumps(report.analyze_payload(rep, cfg.tolerances, scales)) + "\n")
    return EXIT_OK


def _unit_system(a, normalize):
    if normalize:
        e, scales, _ = normalize_rows(LinearSystem(a, np.zeros(a.shape[0])))
        return e, scales
    return UnitVectorSystem(a.conj()), None


def gseq_command(cfg):
    a = mmio.read_matrix_market(cfg.matrix)
    e, _ = _unit_system(a, cfg.normalize)
    pair = triangular_pair(e)
    g = auxiliary_sequence(e, pair.M)
    prefix = cfg.out
    # g is written with the same row convention as the input (rows are conj(g_n))
    mmio.write_matrix_market(f"{prefix}_g.mtx", g.vectors.conj(),
                             comment="rows are conj(g_n)")
    mmio.write_matrix_market(f"{prefix}_M.mtx", pair.M.dense(), coordinate=True,
                             comment="M[i,j] = <e_i, e_j> for i > j, unit diagonal")
    mmio.write_matrix_market(f"{prefix}_C.mtx", pair.C.dense(), coordinate=True,
                             comment="C = M^-1")
    log.info("gseq: wrote %s_{g,M,C}.mtx", prefix)
    return EXIT_OK


def bound_command(cfg):
    a = mmio.read_matrix_market(cfg.matrix)
    e, _, _ = normalize_rows(LinearSystem(a, np.zeros(a.shape[0])))
    payload = {"kind": "bound", "bound": None, "a1": None, "a2": None, "c1": None,
               "g_lower": None, "measured": None, "reasons": {}}
    cb = None
    try:
        cb = diagnostics.convergence_bound(e, cfg.tolerances)
        payload.update(bound=cb.bound, a1=cb.a1, a2=cb.a2, c1=cb.c1, g_lower=cb.g_lower)
    except C1Unavailable as exc:
        payload.update(a1=exc.a1, a2=exc.a2)
        for k in ("bound", "c1", "g_lower"):
            payload["reasons"][k] = str(exc)
    except NotFrame as exc:
        for k in ("bound", "a1", "a2", "c1", "g_lower"):
            payload["reasons"][k] = str(exc)
    if cfg.rhs:
        system = LinearSystem(a, mmio.read_vector(cfg.rhs))
        traj = data_driven_pass(system, passes=cfg.sweeps)
        bnorm2 = float(np.linalg.norm(system.b)) ** 2
        ratio = float(traj.residual_norms[-1]) ** 2 / bnorm2 if bnorm2 > 0 else 0.0
        payload["measured"] = {
            "passes": cfg.sweeps,
            "residual_sq_ratio": ratio,
            "within_bound": None if cb is None else ratio <= cb.bound + 1e-8,
        }
    else:
        payload["reasons"]["measured"] = "no right-hand side given"
    _emit(cfg, report.dumps(payload) + "\n")
    return EXIT_OK


def generate_command(cfg, kind, dim, count):
    e = generate_system(kind, dim, count, cfg.seed)
    mmio.write_matrix_market(
        cfg.out, e.vectors.conj(),
        comment=f"kind={kind} dim={dim} count={count} seed={cfg.seed}; rows are conj(e_n)",
    )
    return EXIT_OK


def _add_tolerances(p):
    d = diagnostics.DEFAULT_TOLERANCES
    p.add_argument("--tol-frame", type=float, default=d.frame_tol)
    p.add_argument("--tol-tight", type=float, default=d.tight_tol)
    p.add_argument("--tol-onb", type=float, default=d.onb_tol)
    p.add_argument("--tol-effective", type=float, default=d.effective_tol)


def build_parser():
    parser = argparse.ArgumentParser(prog="kaczframe", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("solve", help="run cyclic Kaczmarz or data-driven passes")
    p.add_argument("--matrix", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--exact", help="known solution, adds an error column to the trace")
    p.add_argument("--mode", choices=["cyclic", "pass"], default="cyclic")
    p.add_argument("--sweeps", type=int, default=500, help="sweep (or pass) budget")
    p.add_argument("--tol", type=float, default=1e-10, help="relative residual tolerance")
    p.add_argument("--trace", help="write a CSV convergence trace here")
    p.add_argument("--format", dest="fmt", choices=["json", "csv"], default="json")
    p.add_argument("--report")

    p = sub.add_parser("analyze", help="frame and effectiveness diagnostics of the rows")
    p.add_argument("--matrix", required=True)
    p.add_argument("--report")
    _add_tolerances(p)

    p = sub.add_parser("gseq", help="write the auxiliary sequence and M, C")
    p.add_argument("--matrix", required=True)
    p.add_argument("--out-prefix", dest="out", required=True)
    p.add_argument("--normalize", action="store_true", help="normalise rows instead of rejecting")

    p = sub.add_parser("bound", help="residual bound for data-driven passes")
    p.add_argument("--matrix", required=True)
    p.add_argument("--rhs", help="measure the tail residual for this right-hand side")
    p.add_argument("--passes", dest="sweeps", type=int, default=50)
    p.add_argument("--report")
    _add_tolerances(p)

    p = sub.add_parser("generate", help="write a seeded test system")
    p.add_argument("--kind", required=True, choices=[k.value for k in SystemKind])
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    return parser


def _config(args):
    known = {k: v for k, v in vars(args).items()
             if k in RunConfig.__dataclass_fields__ and k != "tolerances"}
    if hasattr(args, "tol_frame"):
        known["tolerances"] = diagnostics.Tolerances(
            frame_tol=args.tol_frame, tight_tol=args.tol_tight,
            onb_tol=args.tol_onb, effective_tol=args.tol_effective,
        )
    return RunConfig(**known)


def _setup_logging():
    level = os.environ.get("KF_LOG", "WARNING").upper()
    logging.basicConfig(
        level=int(level) if level.isdigit() else getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv=None):
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        if cfg.subcommand == "solve":
            return solve_command(cfg)
        if cfg.subcommand == "analyze":
            return analyze_command(cfg)
        if cfg.subcommand == "gseq":
            return gseq_command(cfg)
        if cfg.subcommand == "bound":
            return bound_command(cfg)
        return generate_command(cfg, args.kind, args.dim, args.count)
    except (KaczframeError, ValueError, OSError) as exc:
        print(f"kaczframe {args.subcommand}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
