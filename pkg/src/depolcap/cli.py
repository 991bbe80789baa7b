"""Command-line front end.

Subcommands write UTF-8 CSV (one header line, LF endings) to ``--out`` or
to stdout.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 I/O error.
"""
from __future__ import annotations

import argparse
import io
import math
import sys
from typing import Iterable, Sequence

import numpy as np

from . import checks
from .channels import depolarising, error_probability
from .info import i2_max, mutual_information, one_shot_capacity
from .optimize import (
    locate_extrema,
    orthogonal_product_control,
    sample_random_ensembles,
    scan_theta,
)
from .states import HALF_PI, figure1_ensemble

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


def fmt(x) -> str:
    """12 significant digits; ``-0`` is printed as ``0``."""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x) + 0.0, ".12g")


def _write_csv(path: str | None, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    buf = io.StringIO(newline="")
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(v if isinstance(v, str) else fmt(v) for v in row) + "\n")
    text = buf.getvalue()
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _check_eta(eta: float) -> None:
    if not (0.0 <= eta <= 1.0) or math.isnan(eta):
        raise UsageError(f"--eta must lie in [0, 1], got {eta}")


def _check_at_least(name: str, value: int, low: int) -> None:
    if value < low:
        raise UsageError(f"--{name} must be at least {low}, got {value}")


def cmd_capacity(eta: float, out=None) -> int:
    _check_eta(eta)
    out = out or sys.stdout
    pipeline = mutual_information(depolarising(eta), figure1_ensemble(0.0, 0.0)).mutual_information
    closed = i2_max(eta)
    print(f"eta              {fmt(eta)}", file=out)
    print(f"p_e              {fmt(error_probability(eta))}", file=out)
    print(f"I2_max           {fmt(closed)}", file=out)
    print(f"C1               {fmt(one_shot_capacity(eta))}", file=out)
    print(f"I2_pipeline      {fmt(pipeline)}", file=out)
    print(f"difference       {fmt(pipeline - closed)}", file=out)
    return EXIT_OK


def cmd_scan(eta: float, grid: int, output_path: str | None) -> int:
    _check_eta(eta)
    _check_at_least("grid", grid, 2)
    _write_csv(output_path, ("theta", "I2"), scan_theta(eta, grid))
    if 0.0 < eta < 1.0:
        for r in locate_extrema(eta):
            print(f"{r.classification} at theta={fmt(r.theta)} I2={fmt(r.mutual_information)}", file=sys.stderr)
    return EXIT_OK


def fig1_rows(eta: float, grid: int) -> list:
    """``(theta, beta, I2)`` over [0, pi/2]^2, theta outer, beta inner."""
    channel = depolarising(eta)
    angles = [HALF_PI * k / (grid - 1) for k in range(grid)]
    angles[-1] = HALF_PI
    rows = []
    for theta in angles:
        for beta in angles:
            value = mutual_information(channel, figure1_ensemble(theta, beta)).mutual_information
            rows.append((theta, beta, value))
    return rows


def cmd_fig1(eta: float, grid: int, output_path: str | None) -> int:
    _check_eta(eta)
    _check_at_least("grid", grid, 2)
    _write_csv(output_path, ("theta", "beta", "I2"), fig1_rows(eta, grid))
    return EXIT_OK


def fig2_rows(steps: int) -> list:
    """``(eta, I2_product, I2_bell)`` on a uniform eta grid over [0, 1]."""
    product = figure1_ensemble(0.0, 0.0)
    bell = figure1_ensemble(math.pi / 4, math.pi / 4)
    rows = []
    for k in range(steps):
        eta = k / (steps - 1)
        channel = depolarising(eta)
        rows.append(
            (
                eta,
                mutual_information(channel, product).mutual_information,
                mutual_information(channel, bell).mutual_information,
            )
        )
    return rows


def cmd_fig2(steps: int, output_path: str | None) -> int:
    _check_at_least("steps", steps, 2)
    _write_csv(output_path, ("eta", "I2_product", "I2_bell"), fig2_rows(steps))
    return EXIT_OK


def cmd_verify(channel_factory=depolarising, out=None) -> int:
    out = out or sys.stdout
    results = checks.run_all(channel_factory)
    for r in results:
        print(r.line(), file=out)
    ok = all(r.passed for r in results)
    print("ALL CHECKS PASSED" if ok else "VERIFICATION FAILED", file=out)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def sample_rows(eta: float, count: int, size: int, seed: int) -> list:
    """Random-ensemble rows followed by an orthogonal product control row."""
    top = i2_max(eta)
    rows = [
        (r.index, r.mutual_information, r.max_entanglement, top - r.mutual_information)
        for r in sample_random_ensembles(eta, count, size, seed)
    ]
    control = orthogonal_product_control(eta)
    rows.append(("control", control, 0.0, top - control))
    return rows


def cmd_sample(eta: float, count: int, size: int, seed: int, output_path: str | None) -> int:
    _check_eta(eta)
    _check_at_least("count", count, 1)
    if not (2 <= size <= 16):
        raise UsageError(f"--size must lie in [2, 16], got {size}")
    _write_csv(output_path, ("seed_index", "I2", "max_entanglement", "deficit"), sample_rows(eta, count, size, seed))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="depolcap",
        description="Mutual information of two-qubit signals through a depolarising channel.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def eta_arg(p, default):
        p.add_argument("--eta", type=float, default=default, help="shrink factor in [0, 1]")

    def out_arg(p):
        p.add_argument("--out", default=None, help="output CSV path (default: stdout)")

    p = sub.add_parser("capacity", help="closed-form and pipeline I2 for product signals")
    eta_arg(p, 0.8)

    p = sub.add_parser("scan", help="I2 along the theta = beta diagonal")
    eta_arg(p, 0.8)
    p.add_argument("--grid", type=int, default=33)
    out_arg(p)

    p = sub.add_parser("fig1", help="I2 surface over (theta, beta)")
    eta_arg(p, 0.8)
    p.add_argument("--grid", type=int, default=33)
    out_arg(p)

    p = sub.add_parser("fig2", help="I2 against eta for product and Bell signals")
    p.add_argument("--steps", type=int, default=101)
    out_arg(p)

    sub.add_parser("verify", help="run the cross-oracle checks")

    p = sub.add_parser("sample", help="random ensembles against the product-state maximum")
    eta_arg(p, 0.8)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--size", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    out_arg(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "capacity":
            return cmd_capacity(args.eta)
        if args.command == "scan":
            return cmd_scan(args.eta, args.grid, args.out)
        if args.command == "fig1":
            return cmd_fig1(args.eta, args.grid, args.out)
        if args.command == "fig2":
            return cmd_fig2(args.steps, args.out)
        if args.command == "verify":
            return cmd_verify()
        if args.command == "sample":
            return cmd_sample(args.eta, args.count, args.size, args.seed, args.out)
    except UsageError as exc:
        print(f"depolcap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"depolcap: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_USAGE
