"""Command-line entry point: ``verify``, ``eval`` and ``table``.

Exit codes: 0 all checks pass, 1 an identity failed or a point is outside
the kernel domain, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import math
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import kernels as K
from . import transforms as T
from .quaternion import Quaternion
from .verify import SUITE_NAMES, RunConfig, run

IDENTITIES = ("qsum", "phi-gram", "fock-moments")
IDENTITY_VARS = {"qsum": ("q", "r"), "phi-gram": ("t",), "fock-moments": ("k", "x")}


class UsageError(ValueError):
    pass


def parse_quaternion(text: str) -> Quaternion:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected w,x,y,z but got {text!r}")
    try:
        return Quaternion(*(float(p) for p in parts))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number in quaternion {text!r}") from None


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _values(spec: str) -> List[float]:
    """``start:stop:step`` (stop included) or ``v1,v2,...``."""
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise UsageError(f"range needs start:stop:step, got {spec!r}")
        start, stop, step = (Fraction(p.strip()) for p in parts)
        if step <= 0:
            raise UsageError("step must be positive")
        n = math.floor((stop - start) / step)
        return [float(start + i * step) for i in range(max(n + 1, 0))]
    return [float(v) for v in spec.split(",") if v.strip()]


def parse_grid(text: Optional[str], allowed: Sequence[str]) -> Dict[str, List[float]]:
    """``var=start:stop:step;var=v1,v2`` -> values per variable (Cartesian product later)."""
    grid: Dict[str, List[float]] = {}
    if text is None or not text.strip():
        return grid
    for item in text.split(";"):
        if not item.strip():
            continue
        if "=" not in item:
            raise UsageError(f"grid entry {item!r} needs var=values")
        name, spec = (s.strip() for s in item.split("=", 1))
        if name not in allowed:
            raise UsageError(f"unknown grid variable {name!r}; expected one of {', '.join(allowed)}")
        if name in grid:
            raise UsageError(f"grid variable {name!r} given twice")
        try:
            grid[name] = _values(spec)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad values for {name!r}: {exc}") from None
    return grid


# table identities ----------------------------------------------------------------


def _qsum_row(cfg: RunConfig, q: float, r: float):
    k = np.arange(cfg.truncation + 1)
    lhs = float(np.sum((k + 1.0) * (k + 2) * (k + 3) / 6 * (q * r) ** k))
    return Quaternion(lhs), Quaternion((1 - q * r) ** -4)


def _phi_gram_row(cfg: RunConfig, t: float, q: Quaternion, p: Quaternion):
    a, b = q * t, p * t
    return T.phi_gram(a, b, cfg.quad_order), T.phi_gram_series(a, b)


def _moment_row(cfg: RunConfig, k: float, x: float):
    if k != int(k) or k < 0:
        raise UsageError("k must be a non-negative integer")
    lhs = T.fock_moment(int(k), x, cfg.quad_order)
    return Quaternion(lhs.real, lhs.imag, 0.0, 0.0), Quaternion(T.fock_moment_closed(int(k), x))


def table_rows(identity: str, grid: Dict[str, List[float]], cfg: RunConfig,
               q: Optional[Quaternion] = None, p: Optional[Quaternion] = None):
    names = IDENTITY_VARS[identity]
    header = list(names) + ["lhs_w", "lhs_x", "lhs_y", "lhs_z", "rhs_w", "rhs_x", "rhs_y", "rhs_z", "abs_error"]
    if not grid:
        return header, []
    defaults = {"r": p.w if p is not None else 0.3, "t": 1.0}
    axes = []
    for n in names:
        if n in grid:
            axes.append(grid[n])
        elif n in defaults:
            axes.append([float(defaults[n])])
        else:
            raise UsageError(f"grid must give values for {n!r}")
    qq = q if q is not None else Quaternion(0.0, 0.5, 0.0, 0.0)
    pp = p if p is not None else Quaternion(0.3, 0.0, 0.2, 0.0)
    rows = []
    for point in itertools.product(*axes):
        if identity == "qsum":
            lhs, rhs = _qsum_row(cfg, *point)
        elif identity == "phi-gram":
            lhs, rhs = _phi_gram_row(cfg, point[0], qq, pp)
        else:
            lhs, rhs = _moment_row(cfg, *point)
        err = abs((lhs - rhs).to_float())
        rows.append([*point, *lhs.to_float().as_tuple(), *rhs.to_float().as_tuple(), err])
    return header, rows


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(float(v)) for v in row])
    return buf.getvalue()


# argument parsing ---------------------------------------------------------------------


def _add_config(p: argparse.ArgumentParser) -> None:
    p.add_argument("--truncation", type=int, default=K.DEFAULT_TRUNCATION, help="series truncation N (default 300)")
    p.add_argument("--quad-order", type=int, default=80, help="quadrature order (default 80)")
    p.add_argument("--tol", type=_positive_float, default=1e-8, help="quadrature tolerance (default 1e-8)")
    p.add_argument("--seed", type=int, default=0, help="seed for random test points (default 0)")
    p.add_argument("--max-degree", type=int, default=30, help="highest Appell degree checked (default 30)")
    p.add_argument("--output", default=None, help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fueter", description="Fueter mapping kernels and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", choices=SUITE_NAMES + ("all",))
    _add_config(v)

    e = sub.add_parser("eval", help="evaluate a kernel at two points")
    e.add_argument("--kernel", required=True, type=lambda s: s.replace("-", "_"), choices=K.KERNEL_NAMES)
    e.add_argument("--q", required=True, type=parse_quaternion, help="first point w,x,y,z")
    e.add_argument("--p", required=True, type=parse_quaternion, help="second point w,x,y,z")
    e.add_argument("--form", choices=("series", "closed"), default="closed")
    e.add_argument("--wedge-n", type=int, default=1)
    _add_config(e)

    t = sub.add_parser("table", help="emit a CSV table of an identity over a grid")
    t.add_argument("--identity", required=True, choices=IDENTITIES)
    t.add_argument("--grid", default="", help="e.g. 'q=-0.5:0.5:0.1;r=0.3'")
    t.add_argument("--q", type=parse_quaternion, default=None)
    t.add_argument("--p", type=parse_quaternion, default=None)
    _add_config(t)
    return parser


@contextmanager
def _sink(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _config(args, suite: str = "all") -> RunConfig:
    return RunConfig(suite=suite, truncation=args.truncation, quad_order=args.quad_order, tol=args.tol,
                     seed=args.seed, max_degree=args.max_degree, output=args.output)


def cmd_verify(args) -> int:
    cfg = _config(args, args.suite)
    results = run(cfg)
    failed = sum(not r.passed for r in results)
    with _sink(cfg.output) as out:
        for r in results:
            out.write(r.line() + "\n")
        out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 0 if failed == 0 else 1


def cmd_eval(args) -> int:
    cfg = _config(args)
    spec = K.KernelSpec(args.kernel, cfg.truncation, args.form, args.wedge_n)
    try:
        value, bound = K.evaluate(spec, args.q, args.p)
    except K.DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    with _sink(cfg.output) as out:
        out.write(",".join(repr(float(c)) for c in value.as_tuple()) + "\n")
        out.write(f"truncation_error_bound,{bound!r}\n")
    return 0


def cmd_table(args) -> int:
    cfg = _config(args)
    grid = parse_grid(args.grid, IDENTITY_VARS[args.identity])
    header, rows = table_rows(args.identity, grid, cfg, args.q, args.p)
    with _sink(cfg.output) as out:
        out.write(_csv(header, rows))
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "eval":
            return cmd_eval(args)
        return cmd_table(args)
    except K.DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"fueter: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
