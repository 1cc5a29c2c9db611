"""Command-line front end.

Subcommands: simulate (transfer probabilities on a time grid),
entangle (pairwise-group negativities), sweep (delta sweeps of the
min-max objectives), peaks (arrival peaks and the transfer window) and
verify (cross-check suites).  Numeric output goes to CSV with 17
significant digits so identical configurations give identical bytes;
summaries go to standard output.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O
error.
"""

from __future__ import annotations

import argparse
import sys

from .dynamics import probability_grid, tau_grid
from .entanglement import Bipartition
from .geometry import FIELD_ALONG_B, FIELD_PERPENDICULAR
from .search import SYSTEM_KINDS, System, hpst_times, sweep1d, sweep2d
from .verify import run_all

__all__ = ["main"]


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _system_from(args) -> System:
    return System(
        args.system,
        delta=args.delta,
        delta1=args.delta1,
        delta2=args.delta2,
        k0=args.k0,
    )


def _write_csv(path: str, header, rows) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(x) for x in row) + "\n")


def _probability_table(system: System, T: float, dtau: float):
    taus = tau_grid(T, dtau)
    return taus, probability_grid(system.spectrum(), system.k0, taus)


def cmd_simulate(args) -> int:
    system = _system_from(args)
    taus, probs = _probability_table(system, args.T, args.dtau)
    header = ["tau"] + [f"P_{m}" for m in range(1, system.n_nodes + 1)]
    _write_csv(args.out, header, zip(taus, *probs))
    return 0


def _parse_partition(text: str, n_nodes: int) -> Bipartition:
    halves = text.split("_")
    if len(halves) != 2 or not all(h.isdigit() for h in halves):
        raise ValueError(f"partition {text!r} is not of the form '15_48'")
    part = Bipartition(tuple(int(c) for c in halves[0]), tuple(int(c) for c in halves[1]))
    if max(part.a + part.b) > n_nodes:
        raise ValueError(f"partition {text!r} names a node beyond {n_nodes}")
    return part


def cmd_entangle(args) -> int:
    system = _system_from(args)
    if not args.partition:
        raise ValueError("at least one --partition is required")
    parts = [_parse_partition(p, system.n_nodes) for p in args.partition]
    taus, probs = _probability_table(system, args.T, args.dtau)
    columns = []
    for part in parts:
        s_a = probs[[k - 1 for k in part.a]].sum(axis=0)
        s_b = probs[[k - 1 for k in part.b]].sum(axis=0)
        sig = 1.0 - s_a - s_b
        columns.append((sig * sig + 4.0 * s_a * s_b) ** 0.5 - sig)
    header = ["tau"] + [f"N_{p.label()}" for p in parts]
    _write_csv(args.out, header, zip(taus, *columns))
    return 0


def cmd_sweep(args) -> int:
    if args.system == "chain2":
        raise ValueError("chain2 has no coupling parameter to sweep")
    if args.system == "box":
        if args.fn:
            raise ValueError("the FN column is available for 1D sweeps only")
        for flag in ("delta1_min", "delta1_max", "delta2_min", "delta2_max"):
            if getattr(args, flag) is None:
                raise ValueError(f"box sweep requires --{flag.replace('_', '-')}")
        result = sweep2d(
            (args.delta1_min, args.delta1_max),
            (args.delta2_min, args.delta2_max),
            (args.delta1_step, args.delta2_step),
            args.T,
            args.dtau,
            P0=args.p0,
            threads=args.threads,
        )
        rows = ((d1, d2, fp) for (d1, d2), fp in zip(result.grid, result.fp))
        _write_csv(args.out, ["delta1", "delta2", "FP"], rows)
        print(f"HPST points: {int(result.hpst.sum())} of {result.hpst.size}")
        return 0
    if args.delta_min is None or args.delta_max is None:
        raise ValueError("1D sweep requires --delta-min and --delta-max")
    mode = FIELD_PERPENDICULAR if args.system == "rect-perp" else FIELD_ALONG_B
    result = sweep1d(
        mode,
        (args.delta_min, args.delta_max),
        args.delta_step,
        args.T,
        args.dtau,
        P0=args.p0,
        with_fn=args.fn,
        threads=args.threads,
    )
    if args.fn:
        _write_csv(args.out, ["delta", "FP", "FN"], zip(result.grid, result.fp, result.fn))
    else:
        _write_csv(args.out, ["delta", "FP"], zip(result.grid, result.fp))
    if result.intervals:
        for lo, hi in result.intervals:
            print(f"HPST interval: [{lo:.6g}, {hi:.6g}]")
    else:
        print("no HPST interval found")
    return 0


def cmd_peaks(args) -> int:
    system = _system_from(args)
    records, window = hpst_times(system, args.T, args.dtau, args.p0)
    print("m tau_star p_star")
    for rec in records:
        print(f"{rec.target} {rec.tau_star:.6g} {rec.p_star:.6g}")
    print(f"T_window {window:.6g}" if window is not None else "T_window undefined")
    return 0


def cmd_verify(args) -> int:
    failed = False
    for suite in run_all():
        status = "PASS" if suite.passed else "FAIL"
        print(f"{suite.name} max_dev={suite.max_deviation:.3g} tol={suite.tolerance:g} {status}")
        failed = failed or not suite.passed
    return 1 if failed else 0


def _add_system_flags(sub, with_out: bool) -> None:
    sub.add_argument("--system", required=True, choices=SYSTEM_KINDS)
    sub.add_argument("--delta", type=float, default=None)
    sub.add_argument("--delta1", type=float, default=None)
    sub.add_argument("--delta2", type=float, default=None)
    sub.add_argument("--k0", type=int, default=1)
    sub.add_argument("--T", type=float, required=True, dest="T")
    sub.add_argument("--dtau", type=float, default=0.01)
    sub.add_argument("--p0", type=float, default=0.9)
    sub.add_argument("--threads", type=int, default=1)
    if with_out:
        sub.add_argument("--out", required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spintransfer",
        description="Excitation transfer and entanglement in small dipolar spin clusters.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("simulate", help="transfer probabilities on a time grid")
    _add_system_flags(sub, with_out=True)
    sub.set_defaults(func=cmd_simulate)

    sub = subs.add_parser("entangle", help="group negativities on a time grid")
    _add_system_flags(sub, with_out=True)
    sub.add_argument(
        "--partition",
        action="append",
        default=[],
        metavar="A_B",
        help="bipartition such as 15_48 for nodes {1,5} vs {4,8}; repeatable",
    )
    sub.set_defaults(func=cmd_entangle)

    sub = subs.add_parser("sweep", help="delta sweep of the min-max objectives")
    _add_system_flags(sub, with_out=True)
    sub.add_argument("--delta-min", type=float, default=None)
    sub.add_argument("--delta-max", type=float, default=None)
    sub.add_argument("--delta-step", type=float, default=0.01)
    sub.add_argument("--delta1-min", type=float, default=None)
    sub.add_argument("--delta1-max", type=float, default=None)
    sub.add_argument("--delta1-step", type=float, default=0.01)
    sub.add_argument("--delta2-min", type=float, default=None)
    sub.add_argument("--delta2-max", type=float, default=None)
    sub.add_argument("--delta2-step", type=float, default=0.01)
    sub.add_argument("--fn", action="store_true", help="add the FN column (1D only)")
    sub.set_defaults(func=cmd_sweep)

    sub = subs.add_parser("peaks", help="arrival peaks and the transfer window")
    _add_system_flags(sub, with_out=False)
    sub.set_defaults(func=cmd_peaks)

    sub = subs.add_parser("verify", help="run the cross-check suites")
    sub.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
