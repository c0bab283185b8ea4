"""Command-line front end.

    catenoid constants                 reproduce the published constants
    catenoid d0-sweep LO HI [N]        tabulate d0, d0', pi/(4 cosh)
    catenoid curve LAMBDA YMAX [N]     sample one full catenary
    catenoid intersect L1 L2           crossings of two catenaries
    catenoid envelope LO HI [N]        touching points with the envelope
    catenoid area-check LAMBDA Y1...   band area versus geodesic caps
    catenoid solve-boundary D_L        the two necks spanning a circle pair

Every command writes a table, CSV by default (``#`` metadata lines, then a
header row) or JSON (``{"meta": {...}, "rows": [...]}``), to ``--out`` or
stdout.  Reals are printed with 17 significant digits and nothing in the
output depends on the clock, so reruns are byte-identical.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 domain error,
4 convergence failure, 5 I/O failure.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from . import __version__
from .area import K_constant, comparison_integral, compare, lambda0
from .catenary import DEFAULT_Y_SEARCH_MAX, envelope, intersect, sample_curve
from .errors import ConvergenceError, DomainError
from .hgeom import halfdisk_to_ball
from .quad import QuadConfig, integrate_semi_infinite
from .separation import (
    LAMBDA5,
    check_r_variant,
    critical_constants,
    d0,
    d0_prime,
    d0_upper_bound,
    solve_boundary_separation,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CONVERGENCE = 4
EXIT_IO = 5

# name -> (published value, reference compared against, tolerance)
PUBLISHED_CONSTANTS = {
    "K": (0.40093, 0.40093, 1e-5),
    "Lambda0": (1.10055, 1.10055, 2e-4),
    "Lambda_d": (0.4955, 0.4955, 5e-4),
    "d0_max": (0.501143, 0.501143, 1e-5),
    "D0": (1.0022, 1.0022, 2e-5),
    "Lambda3": (0.402359, 0.402359, 1e-5),
    "Lambda4": (0.53068, 0.53068, 1e-5),
    "Lambda5": (0.804719, LAMBDA5, 2.0 * math.ulp(LAMBDA5)),
    "int_exp_tail": (math.pi / 4, math.pi / 4, 1e-10),
    "int_comparison": (1.0, 1.0, 1e-10),
}


@dataclass(frozen=True)
class RunConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    grid_resolution: int = 101
    output_format: str = "csv"
    output_path: str | None = None
    r_variant: str = "sinh"

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("tolerances must be positive")
        if self.grid_resolution < 2:
            raise DomainError("grid resolution must be at least 2")
        if self.output_format not in ("csv", "json"):
            raise DomainError(f"unknown output format {self.output_format!r}")
        if self.r_variant not in ("sinh", "sin"):
            raise DomainError(f"unknown r-factor variant {self.r_variant!r}")

    @property
    def quad(self) -> QuadConfig:
        return QuadConfig(abs_tol=self.abs_tol, rel_tol=self.rel_tol)


@dataclass
class Table:
    command: str
    columns: list[str]
    rows: list[list[Any]]
    meta: dict[str, Any]
    summary: str = ""
    failed: bool = False


def _fmt(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return format(v, ".17g")
    return str(v)


def _json_value(v: Any) -> Any:
    if isinstance(v, float):
        return float(format(v, ".17g")) if math.isfinite(v) else None
    return v


def render(table: Table, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "meta": {k: _json_value(v) for k, v in table.meta.items()},
            "rows": [
                {c: _json_value(v) for c, v in zip(table.columns, row)} for row in table.rows
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    buf = io.StringIO()
    for k, v in table.meta.items():
        buf.write(f"# {k}: {_fmt(v)}\n")
    buf.write(",".join(table.columns) + "\n")
    for row in table.rows:
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    return buf.getvalue()


def _meta(cfg: RunConfig, command: str, columns: list[str], **extra: Any) -> dict[str, Any]:
    meta: dict[str, Any] = {
        "tool": f"catenoid {__version__}",
        "command": command,
        "abs_tol": cfg.abs_tol,
        "rel_tol": cfg.rel_tol,
        "grid": cfg.grid_resolution,
        "r_variant": cfg.r_variant,
    }
    meta.update(extra)
    meta["columns"] = " ".join(columns)
    return meta


def cmd_constants(cfg: RunConfig) -> Table:
    q = cfg.quad
    k = K_constant(q)
    crit = critical_constants(q)
    tail = integrate_semi_infinite(
        lambda t: math.exp(-2 * t) / math.sqrt(-math.expm1(-4 * t)), 0.0, q, decay_rate=2.0
    ).value
    computed = {
        "K": k,
        "Lambda0": lambda0(K=k),
        "Lambda_d": crit.lambda_d,
        "d0_max": crit.d0_max,
        "D0": crit.D0,
        "Lambda3": crit.lambda3,
        "Lambda4": crit.lambda4,
        "Lambda5": crit.lambda5,
        "int_exp_tail": tail,
        "int_comparison": comparison_integral(q),
    }
    columns = ["quantity", "computed", "reference", "published", "abs_deviation", "tolerance", "status"]
    rows = []
    failed = []
    for name, (published, ref, tol) in PUBLISHED_CONSTANTS.items():
        dev = abs(computed[name] - ref)
        ok = dev <= tol
        if not ok:
            failed.append(name)
        rows.append([name, computed[name], ref, published, dev, tol, "PASS" if ok else "FAIL"])

    n = max(cfg.grid_resolution, 2)
    rc = check_r_variant(cfg.r_variant, n_t=n, n_lam=max(n * 4 // 5, 2))
    for name, value, ok in (
        (f"r_max[{rc.variant}]", rc.max_r, rc.negative_on_grid),
        (f"r_dh_rel_error[{rc.variant}]", rc.max_derivative_rel_error, rc.matches_derivative),
    ):
        if not ok:
            failed.append(name)
        rows.append([name, value, 0.0, "", "", "", "PASS" if ok else "FAIL"])

    summary = (
        "all checks within tolerance"
        if not failed
        else "outside tolerance: " + ", ".join(failed)
    )
    meta = _meta(cfg, "constants", columns, r_grid_points=rc.grid_points, result=summary)
    return Table("constants", columns, rows, meta, summary, failed=bool(failed))


def _grid(lo: float, hi: float, n: int) -> list[float]:
    if n < 2:
        raise DomainError("need at least 2 grid points")
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def cmd_d0_sweep(cfg: RunConfig, lam_lo: float, lam_hi: float, n: int | None) -> Table:
    n = cfg.grid_resolution if n is None else n
    if not 0 <= lam_lo < lam_hi:
        raise DomainError(f"need 0 <= lo < hi, got {lam_lo}, {lam_hi}")
    q = cfg.quad
    columns = ["lambda", "d0", "d0_prime", "d0_upper_bound"]
    rows = []
    for lam in _grid(lam_lo, lam_hi, n):
        # d0' blows up like log at lambda = 0
        dp = math.inf if lam == 0 else d0_prime(lam, q)
        rows.append([lam, d0(lam, q), dp, d0_upper_bound(lam)])
    meta = _meta(cfg, "d0-sweep", columns, lo=lam_lo, hi=lam_hi, n=n)
    return Table("d0-sweep", columns, rows, meta, f"{n} rows")


def cmd_curve(cfg: RunConfig, lam: float, y_max: float, n: int | None) -> Table:
    n = cfg.grid_resolution if n is None else n
    sample = sample_curve(lam, y_max, n, cfg.quad)
    arcs = list(sample.arc)
    signed = [-a for a in reversed(arcs[1:])] + arcs
    columns = ["x", "y", "u", "v", "arc_length"]
    rows = [[p.x, p.y, b.u, b.v, s] for (p, b), s in zip(sample.full(), signed)]
    meta = _meta(cfg, "curve", columns, **{"lambda": lam, "y_max": y_max, "n": n})
    return Table("curve", columns, rows, meta, f"{len(rows)} rows")


def cmd_intersect(cfg: RunConfig, lam1: float, lam2: float, y_max: float) -> Table:
    rep = intersect(lam1, lam2, y_max, cfg.quad)
    columns = ["x", "y", "u", "v", "residual"]
    rows = []
    for p, r in zip(rep.points, rep.residuals):
        b = halfdisk_to_ball(p)
        rows.append([p.x, p.y, b.u, b.v, r])
    summary = f"{rep.count} intersections"
    meta = _meta(cfg, "intersect", columns, lambda1=lam1, lambda2=lam2, y_max=y_max,
                 count=rep.count, result=summary)
    return Table("intersect", columns, rows, meta, summary)


def cmd_envelope(cfg: RunConfig, lam_lo: float, lam_hi: float, n: int | None, step: float) -> Table:
    n = cfg.grid_resolution if n is None else n
    env = envelope(lam_lo, lam_hi, n, cfg.quad, step=step)
    columns = ["lambda", "x", "y", "u", "v"]
    rows = []
    for lam, p in zip(env.lambdas, env.points):
        b = halfdisk_to_ball(p)
        rows.append([lam, p.x, p.y, b.u, b.v])
    failures = "; ".join(f"{_fmt(k)}: {v}" for k, v in sorted(env.failures.items()))
    meta = _meta(
        cfg, "envelope", columns, lo=lam_lo, hi=lam_hi, n=n, step=step,
        no_touch=" ".join(_fmt(x) for x in env.no_touch), failures=failures,
    )
    summary = f"{len(rows)} touching points, {len(env.no_touch)} necks without one"
    return Table("envelope", columns, rows, meta, summary, failed=bool(env.failures))


def cmd_area_check(cfg: RunConfig, lam: float, y1s: Sequence[float]) -> Table:
    columns = [
        "lambda", "y1", "band_area", "band_area_identity", "caps_area",
        "margin", "margin_identity", "identity_rel_error", "band_below_caps",
    ]
    rows = []
    for y1 in y1s:
        c = compare(lam, y1, cfg.quad)
        rows.append([
            c.lam, c.y1, c.band_area, c.band_area_identity, c.caps_area,
            c.margin, c.margin_identity, c.identity_rel_error, c.band_area < c.caps_area,
        ])
    below = sum(1 for r in rows if r[-1])
    summary = f"band below caps for {below} of {len(rows)} radii"
    meta = _meta(cfg, "area-check", columns, **{"lambda": lam}, result=summary)
    return Table("area-check", columns, rows, meta, summary)


def cmd_solve_boundary(cfg: RunConfig, d_L: float) -> Table:
    sol = solve_boundary_separation(d_L, cfg.quad)
    columns = ["root", "lambda", "d0", "target", "residual"]
    target = 0.5 * d_L
    rows = [
        [1, sol.lambda1, d0(sol.lambda1, cfg.quad), target, sol.residual1],
        [2, sol.lambda2, d0(sol.lambda2, cfg.quad), target, sol.residual2],
    ]
    summary = (
        f"degenerate: single neck {sol.lambda1:.12g}" if sol.degenerate
        else f"lambda1={sol.lambda1:.12g} lambda2={sol.lambda2:.12g}"
    )
    meta = _meta(cfg, "solve-boundary", columns, d_L=d_L, degenerate=sol.degenerate, result=summary)
    return Table("solve-boundary", columns, rows, meta, summary)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--abs-tol", type=float, default=1e-12, help="absolute quadrature tolerance")
    common.add_argument("--rel-tol", type=float, default=1e-10, help="relative quadrature tolerance")
    common.add_argument("--format", choices=("csv", "json"), default="csv", dest="output_format")
    common.add_argument("--out", default=None, metavar="PATH", help="write here instead of stdout")
    common.add_argument("--grid", type=int, default=101, metavar="N",
                        help="default grid resolution (sweeps, r-factor scan)")
    common.add_argument("--r-variant", choices=("sinh", "sin"), default="sinh",
                        help="term 2t+8lambda of r(t, lambda): corrected sinh or printed sin")

    parser = argparse.ArgumentParser(
        prog="catenoid",
        description="Spherical catenoids in hyperbolic 3-space: constants, curves, area checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser(
        "constants", parents=[common],
        help="computed vs published constants (columns: quantity, computed, reference, "
             "published, abs_deviation, tolerance, status)",
    )

    p = sub.add_parser("d0-sweep", parents=[common],
                       help="columns: lambda, d0, d0_prime, d0_upper_bound")
    p.add_argument("lo", type=float)
    p.add_argument("hi", type=float)
    p.add_argument("n", type=int, nargs="?")

    p = sub.add_parser("curve", parents=[common],
                       help="full catenary, 2n-1 rows; columns: x, y, u, v, arc_length")
    p.add_argument("lam", type=float, metavar="LAMBDA")
    p.add_argument("y_max", type=float)
    p.add_argument("n", type=int, nargs="?")

    p = sub.add_parser("intersect", parents=[common], help="columns: x, y, u, v, residual")
    p.add_argument("lam1", type=float, metavar="LAMBDA1")
    p.add_argument("lam2", type=float, metavar="LAMBDA2")
    p.add_argument("--y-max", type=float, default=DEFAULT_Y_SEARCH_MAX)

    p = sub.add_parser("envelope", parents=[common], help="columns: lambda, x, y, u, v")
    p.add_argument("lo", type=float)
    p.add_argument("hi", type=float)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--step", type=float, default=1e-4, help="finite-difference step in lambda")

    p = sub.add_parser(
        "area-check", parents=[common],
        help="columns: lambda, y1, band_area, band_area_identity, caps_area, margin, "
             "margin_identity, identity_rel_error, band_below_caps",
    )
    p.add_argument("lam", type=float, metavar="LAMBDA")
    p.add_argument("y1", type=float, nargs="+")

    p = sub.add_parser("solve-boundary", parents=[common],
                       help="columns: root, lambda, d0, target, residual")
    p.add_argument("d_L", type=float)
    return parser


def run(args: argparse.Namespace) -> Table:
    cfg = RunConfig(
        abs_tol=args.abs_tol,
        rel_tol=args.rel_tol,
        grid_resolution=args.grid,
        output_format=args.output_format,
        output_path=args.out,
        r_variant=args.r_variant,
    )
    c = args.command
    if c == "constants":
        return cmd_constants(cfg)
    if c == "d0-sweep":
        return cmd_d0_sweep(cfg, args.lo, args.hi, args.n)
    if c == "curve":
        return cmd_curve(cfg, args.lam, args.y_max, args.n)
    if c == "intersect":
        return cmd_intersect(cfg, args.lam1, args.lam2, args.y_max)
    if c == "envelope":
        return cmd_envelope(cfg, args.lo, args.hi, args.n, args.step)
    if c == "area-check":
        return cmd_area_check(cfg, args.lam, args.y1)
    if c == "solve-boundary":
        return cmd_solve_boundary(cfg, args.d_L)
    raise DomainError(f"unknown command {c!r}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        table = run(args)
    except DomainError as exc:
        print(f"catenoid {args.command}: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ConvergenceError, ArithmeticError) as exc:
        print(f"catenoid {args.command}: convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE

    text = render(table, args.output_format)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"catenoid {args.command}: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    if table.summary:
        print(f"{table.command}: {table.summary}", file=sys.stderr)
    return EXIT_CHECK_FAILED if table.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
