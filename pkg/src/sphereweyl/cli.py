"""Command line front end.

Subcommands: ``scan``, ``crossings``, ``regime``, ``plot``, ``geometry-check``
and ``box``. Exit codes: 0 success, 1 usage, 2 I/O, 3 enumeration budget.

CSV columns for ``scan`` are fixed::

    n,k,v_k,mult,N,w,sign_node,sign_next,crossing_mid

``sign_node`` is the sign of w - N at v_k, ``sign_next`` the sign of
N(v_k) - w(v_{k+1}); both are -1, 0 or 1. ``crossing_mid`` is the midpoint
of the certified crossing enclosure in (v_k, v_{k+1}), empty when there is none.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .box_baseline import (
    DEFAULT_BUDGET,
    BoxDomain,
    BudgetExceeded,
    box_nodes,
    box_weyl_decimal,
    weyl_exceeds_count,
)
from .euclidean_geometry import ball_volume, product_identity_check, sphere_volume
from .exact_numbers import DomainError, decimal_string, sqrt_decimal_string
from .figure import render_counting_plot
from .sphere_spectrum import counting_closed_form, multiplicity
from .weyl_compare import (
    compare_N_vs_w_next_node,
    compare_w_vs_N_at_node,
    crossing_in_interval,
    paper_bound,
    parallel_map,
    regime_report,
    weyl_squared,
)

THREADS_ENV = "SPHEREWEYL_THREADS"
CSV_HEADER = ("n", "k", "v_k", "mult", "N", "w", "sign_node", "sign_next", "crossing_mid")

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class ScanRow(NamedTuple):
    n: int
    k: int
    v_k: int
    mult: int
    N: int
    w: str
    sign_node: int
    sign_next: int
    crossing_mid: str


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    n: Optional[int] = None
    k_max: Optional[int] = None
    scan_limit: Optional[int] = None
    tol: Fraction = Fraction(1, 10 ** 6)
    fmt: str = "csv"
    out: Optional[str] = None
    digits: int = 6
    threads: int = 1
    budget: int = DEFAULT_BUDGET
    sides: tuple = ()
    q_max: Optional[Fraction] = None
    strict: bool = False

    def validate(self) -> "RunConfig":
        def need(cond: bool, flag: str, msg: str):
            if not cond:
                raise UsageError(f"{flag}: {msg}")

        if self.subcommand in ("scan", "crossings", "regime", "plot"):
            need(self.n is not None, "--dim", "required")
            need(self.n >= 1, "--dim", "must be a positive integer")
        if self.subcommand == "geometry-check":
            need(self.n is not None, "--max-dim", "required")
            need(self.n >= 0, "--max-dim", "must be non-negative")
        if self.subcommand in ("scan", "crossings", "plot"):
            need(self.k_max is not None, "--kmax", "required")
            need(self.k_max >= 0, "--kmax", "must be non-negative")
        if self.scan_limit is not None:
            need(self.scan_limit >= 0, "--scan-limit", "must be non-negative")
        need(self.tol > 0, "--tol", "must be positive")
        need(0 <= self.digits <= 1000, "--digits", "must be between 0 and 1000")
        need(self.threads >= 1, "--threads", "must be at least 1")
        need(self.budget >= 1, "--budget", "must be at least 1")
        allowed = {
            "scan": ("csv", "json"),
            "crossings": ("csv", "json"),
            "regime": ("json",),
            "plot": ("svg", "csv"),
            "geometry-check": ("csv", "json"),
            "box": ("csv", "json"),
        }[self.subcommand]
        need(self.fmt in allowed, "--format", f"{self.subcommand} supports {', '.join(allowed)}")
        if self.subcommand == "box":
            need(len(self.sides) >= 1, "--sides", "required, e.g. --sides 1,1")
            need(all(a > 0 for a in self.sides), "--sides", "all sides must be positive")
            need(self.q_max is not None and self.q_max > 0, "--qmax", "required and positive")
        return self


def scan_rows(n: int, k_max: int, digits: int = 6, tol=Fraction(1, 10 ** 6), threads: int = 1) -> list[ScanRow]:
    """One exact row per level k = 0..k_max, ordered by k."""

    def row(k: int) -> ScanRow:
        v = k * (k + n - 1)
        rec = crossing_in_interval(n, k, tol)
        return ScanRow(
            n, k, v, multiplicity(n, k), counting_closed_form(n, k),
            sqrt_decimal_string(weyl_squared(n, v), digits),
            int(compare_w_vs_N_at_node(n, k)),
            int(compare_N_vs_w_next_node(n, k)),
            decimal_string(rec.midpoint, digits) if rec is not None else "",
        )

    return parallel_map(row, range(k_max + 1), threads)


def rows_to_csv(rows: Sequence[Sequence], header: Sequence[str] = CSV_HEADER) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_scan(cfg: RunConfig) -> str:
    rows = scan_rows(cfg.n, cfg.k_max, cfg.digits, cfg.tol, cfg.threads)
    if cfg.fmt == "json":
        return _dumps({"dim": cfg.n, "k_max": cfg.k_max, "rows": [r._asdict() for r in rows]})
    return rows_to_csv(rows)


def cmd_crossings(cfg: RunConfig) -> str:
    header = ("k", "lower", "upper", "level", "enclosure_lo", "enclosure_hi", "width")

    def record(k: int):
        rec = crossing_in_interval(cfg.n, k, cfg.tol)
        if rec is None:
            return None
        return (rec.k, rec.lower, rec.upper, rec.level, str(rec.enclosure_lo), str(rec.enclosure_hi), str(rec.width))

    found = [r for r in parallel_map(record, range(cfg.k_max + 1), cfg.threads) if r is not None]
    if cfg.fmt == "json":
        return _dumps({"dim": cfg.n, "k_max": cfg.k_max, "tol": str(cfg.tol), "count": len(found),
                       "crossings": [dict(zip(header, r)) for r in found]})
    return rows_to_csv(found, header)


def cmd_regime(cfg: RunConfig) -> str:
    limit = cfg.scan_limit if cfg.scan_limit is not None else paper_bound(cfg.n) + 100
    if limit < paper_bound(cfg.n):
        raise UsageError(f"--scan-limit: must be at least {paper_bound(cfg.n)} for dimension {cfg.n}")
    return _dumps(regime_report(cfg.n, limit, cfg.threads).to_dict())


def cmd_plot(cfg: RunConfig) -> str:
    data = rows_to_csv(scan_rows(cfg.n, cfg.k_max, cfg.digits, cfg.tol, cfg.threads))
    if cfg.fmt == "csv":
        return data
    return render_counting_plot(cfg.n, cfg.k_max, data)


def cmd_geometry_check(cfg: RunConfig) -> tuple[str, bool]:
    rows = []
    for d in range(cfg.n + 1):
        ok = product_identity_check(d)
        rows.append((d, str(ball_volume(d).value), str(sphere_volume(d).value), "pass" if ok else "FAIL"))
    all_ok = all(r[3] == "pass" for r in rows)
    if cfg.fmt == "json":
        text = _dumps({"max_dim": cfg.n, "all_pass": all_ok,
                       "dims": [dict(zip(("n", "ball", "sphere", "result"), r)) for r in rows]})
    else:
        text = rows_to_csv(rows, ("n", "ball", "sphere", "result"))
    return text, all_ok


def cmd_box(cfg: RunConfig) -> str:
    box = BoxDomain(cfg.sides)
    nodes = box_nodes(box, cfg.q_max, cfg.budget, cfg.threads)
    rows = []
    verdict = True
    for q, count in nodes:
        holds = weyl_exceeds_count(box, q, count, cfg.strict)
        verdict = verdict and holds
        rows.append((str(q), count, box_weyl_decimal(box, q, cfg.digits), "yes" if holds else "no"))
    if cfg.fmt == "json":
        return _dumps({
            "dim": box.dim,
            "sides": [str(a) for a in box.sides],
            "q_max": str(cfg.q_max),
            "strict": cfg.strict,
            "verdict": verdict,
            "nodes": [dict(zip(("q", "N", "w", "holds"), r)) for r in rows],
        })
    return rows_to_csv(rows, ("q", "N", "w", "holds")) + f"# verdict,{str(verdict).lower()}\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _sides(text: str) -> tuple:
    return tuple(_fraction(t.strip()) for t in text.split(","))


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--digits", type=int, default=6, help="decimal places for rendered reals")
    common.add_argument("--threads", type=int, default=None, help=f"worker threads (default: ${THREADS_ENV} or 1)")
    common.add_argument("--tol", type=_fraction, default=Fraction(1, 10 ** 6), help="crossing enclosure width")

    parser = _Parser(prog="sphereweyl", description="Counting function vs Weyl function on round spheres.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("scan", parents=[common], help="per-level table of N, w and signs")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("crossings", parents=[common], help="certified crossing enclosures")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("regime", parents=[common], help="exceptional set and stable threshold as JSON")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--scan-limit", type=int, default=None)
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("plot", parents=[common], help="SVG of N and w")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--format", choices=("svg", "csv"), default="svg")

    p = sub.add_parser("geometry-check", parents=[common], help="ball/sphere volume product identity")
    p.add_argument("--max-dim", "--dim", dest="dim", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("box", parents=[common], help="Dirichlet counting on a box vs its Weyl term")
    p.add_argument("--sides", type=_sides, required=True, help="comma separated side lengths, e.g. 1,2")
    p.add_argument("--qmax", type=_fraction, required=True, help="eigenvalue cutoff divided by pi^2")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="lattice enumeration budget")
    p.add_argument("--strict", action="store_true", help="require N < w instead of N <= w")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        subcommand=args.subcommand,
        n=getattr(args, "dim", None),
        k_max=getattr(args, "kmax", None),
        scan_limit=getattr(args, "scan_limit", None),
        tol=args.tol,
        fmt=args.format,
        out=args.out,
        digits=args.digits,
        threads=args.threads if args.threads is not None else _default_threads(),
        budget=getattr(args, "budget", DEFAULT_BUDGET),
        sides=getattr(args, "sides", ()),
        q_max=getattr(args, "qmax", None),
        strict=getattr(args, "strict", False),
    ).validate()


def run(cfg: RunConfig) -> tuple[str, int]:
    """Execute a validated config; returns the output text and exit code."""
    if cfg.subcommand == "geometry-check":
        text, ok = cmd_geometry_check(cfg)
        return text, EXIT_OK if ok else EXIT_USAGE
    handler = {
        "scan": cmd_scan,
        "crossings": cmd_crossings,
        "regime": cmd_regime,
        "plot": cmd_plot,
        "box": cmd_box,
    }[cfg.subcommand]
    return handler(cfg), EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        text, code = run(cfg)
    except (UsageError, DomainError) as exc:
        print(f"sphereweyl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"sphereweyl: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    try:
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"sphereweyl: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
