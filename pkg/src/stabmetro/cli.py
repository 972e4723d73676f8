"""Command-line frontend.

Subcommands: construct, count, qfi, analyze, oracle, sweep,
optimal-bound, rm-enumerator.  Single-code reports are JSON (stable key
order); sweeps and tables are CSV.  The sweep and optimal-bound paths
can additionally render a matplotlib figure next to the delimited
output.  Exit codes: 0 success, 1 validation failure, 2 usage/IO error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import analysis, constructors, metrology, oracle, rm
from .code import CodeError, StabilizerCode, load_code, save_code

FAMILIES = ("thin-surface", "qrm1", "shor", "generalized-shor", "concatenated")


class UsageError(Exception):
    pass


def _parse_range(text: str) -> List[int]:
    """'3..5' -> [3, 4, 5]; '7' -> [7]."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            lo_i, hi_i = int(lo), int(hi)
        except ValueError:
            raise UsageError(f"invalid range {text!r}") from None
        if hi_i < lo_i:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo_i, hi_i + 1))
    try:
        return [int(text)]
    except ValueError:
        raise UsageError(f"invalid integer {text!r}") from None


def _construct_one(family: str, args, value: int) -> StabilizerCode:
    if family == "thin-surface":
        return constructors.thin_surface(value)
    if family == "qrm1":
        return constructors.qrm1(value)
    if family == "shor":
        return constructors.shor(value)
    if family == "generalized-shor":
        return constructors.generalized_shor(args.k_blocks, value)
    if family == "concatenated":
        inner = (
            load_code(args.inner)
            if args.inner
            else constructors.phase_flip_code()
        )
        return constructors.concatenate_with_repetition(inner, value)
    raise UsageError(f"unknown family {family!r}")


def _family_values(args) -> List[int]:
    for flag in ("lx", "m", "nr"):
        text = getattr(args, flag, None)
        if text is not None:
            return _parse_range(text)
    raise UsageError("missing size parameter (--lx / --m / --nr)")


def _emit_json(obj, out: Optional[str]) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _count_payload(code: StabilizerCode, cen: metrology.LogicalCensus) -> dict:
    return {
        "name": code.name,
        "n": cen.n,
        "k": cen.k,
        "ell": cen.ell,
        "counts": {
            "anti_commuting": cen.anti_count,
            "stabilizer": cen.stabilizer_count,
            "logical": cen.ell,
        },
        "max_degree": max(cen.degrees) if cen.degrees else 0,
        "degree_sum": sum(cen.degrees),
        "samples": [list(s) for s in cen.samples],
    }


def _qfi_payload(rep: metrology.QfiReport) -> dict:
    return {
        "name": rep.name,
        "n": rep.n,
        "k": rep.k,
        "ell": rep.ell,
        "delta_g_eff": rep.delta_g_eff,
        "qfi_coeff": rep.qfi_coeff,
        "noiseless_delta_g": rep.noiseless_delta_g,
        "noiseless_coeff": rep.noiseless_coeff,
        "ghz_coeff": rep.ghz_coeff,
        "opt_lower": str(rep.opt_lower),
        "opt_upper": str(rep.opt_upper),
        "flags": list(rep.flags),
    }


def _analyze_payload(rep: analysis.NoGoReport) -> dict:
    return {
        "name": rep.name,
        "n": rep.n,
        "w_max": rep.w_max,
        "ell": rep.ell,
        "ldpc": {
            "outcome": rep.ldpc.outcome.value,
            "bound": str(rep.ldpc.bound),
            "passed": rep.ldpc.passed,
        },
        "zz": {
            "outcome": rep.zz.outcome.value,
            "bound": str(rep.zz.bound),
            "passed": rep.zz.passed,
            "witness": list(rep.zz_witness) if rep.zz_witness else None,
        },
        "chains": [list(c) for c in rep.chains],
        "chain_max": rep.chain_max,
    }


SWEEP_COLUMNS = (
    "family",
    "n",
    "ell",
    "qfi_coeff",
    "noiseless_coeff",
    "ghz_coeff",
    "w_max",
    "has_zz",
    "chain_max",
)


def _sweep_rows(family: str, args, values: Sequence[int], threads: int):
    for value in values:
        code = _construct_one(family, args, value)
        cen = metrology.census(code, k=args.k, threads=threads)
        rep = metrology.qfi_report(code, k=args.k, census_result=cen)
        nogo = analysis.analyze_code(code, cen)
        yield {
            "family": family,
            "n": code.n,
            "ell": cen.ell,
            "qfi_coeff": rep.qfi_coeff,
            "noiseless_coeff": rep.noiseless_coeff,
            "ghz_coeff": rep.ghz_coeff,
            "w_max": nogo.w_max,
            "has_zz": int(nogo.zz_witness is not None),
            "chain_max": nogo.chain_max,
        }


def _write_csv(path: Optional[str], columns, rows) -> None:
    f = open(path, "w", newline="") if path else sys.stdout
    try:
        writer = csv.DictWriter(f, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    finally:
        if path:
            f.close()


def _plot_sweep(rows: List[dict], path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [r["n"] for r in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.loglog(ns, [max(r["ell"], 1e-12) for r in rows], "o-", label="logical count")
    ax1.set_xlabel("n")
    ax1.set_ylabel("count")
    ax1.legend()
    ax2.loglog(ns, [r["qfi_coeff"] for r in rows], "o-", label="QFI coefficient")
    ax2.loglog(ns, [r["noiseless_coeff"] for r in rows], "s--", label="noiseless")
    ax2.loglog(ns, [r["ghz_coeff"] for r in rows], "^:", label="GHZ baseline")
    ax2.set_xlabel("n")
    ax2.legend()
    fig.suptitle(rows[0]["family"] if rows else "")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _plot_optimal(rows: List[dict], path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [r["n"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, [float(Fraction(r["value"])) for r in rows], "o-", label="optimal")
    ax.plot(ns, [float(Fraction(r["lower"])) for r in rows], "--", label="lower")
    ax.plot(ns, [float(Fraction(r["upper"])) for r in rows], "--", label="upper")
    ax.set_xlabel("n")
    ax.set_ylabel("optimal interaction gap")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabmetro",
        description="Stabilizer-code toolkit for many-body interaction metrology",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker cap for the census (default: QMETRO_THREADS or 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_flags(p, with_inner=True):
        p.add_argument("--family", required=True, choices=FAMILIES)
        p.add_argument("--lx", help="thin-surface horizontal extent (int or a..b)")
        p.add_argument("--m", help="QRM order parameter (int or a..b)")
        p.add_argument("--nr", help="repetition block length (int or a..b)")
        p.add_argument(
            "--k-blocks", type=int, default=3, help="block count for generalized-shor"
        )
        if with_inner:
            p.add_argument("--inner", help="inner code file for concatenated family")

    p = sub.add_parser("construct", help="build a code and write a code file")
    add_family_flags(p)
    p.add_argument("-o", "--output", required=True)

    for name, help_text in (
        ("count", "logical census of a code file"),
        ("qfi", "QFI report for a code file"),
        ("analyze", "structural no-go report for a code file"),
        ("oracle", "statevector cross-check for a code file (n <= 15)"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("codefile")
        p.add_argument("--k", type=int, default=3)
        p.add_argument("-o", "--output", help="write JSON here instead of stdout")

    p = sub.add_parser("sweep", help="iterate a family over a size range")
    add_family_flags(p)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--csv", help="output CSV path (default stdout)")
    p.add_argument("--plot", help="also render a PNG figure to this path")

    p = sub.add_parser("optimal-bound", help="exact min-max gap with interval bounds")
    p.add_argument("--n", required=True, help="size or range a..b")
    p.add_argument("--csv", help="output CSV path (default stdout)")
    p.add_argument("--plot", help="also render a PNG figure to this path")

    p = sub.add_parser("rm-enumerator", help="Reed-Muller weight enumerator table")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--shortened", action="store_true")
    p.add_argument("--dual", action="store_true", help="MacWilliams dual enumerator")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    threads = args.threads
    if threads is None:
        threads = int(os.environ.get("QMETRO_THREADS", "1"))
    threads = max(1, threads)
    try:
        return _dispatch(args, threads)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (CodeError, rm.RmError, oracle.OracleError, metrology.CensusError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def _dispatch(args, threads: int) -> int:
    cmd = args.command
    if cmd == "construct":
        values = _family_values(args)
        if len(values) != 1:
            raise UsageError("construct takes a single size, not a range")
        code = _construct_one(args.family, args, values[0])
        save_code(code, args.output)
        print(f"wrote {code.name} ([[{code.n},{code.k}]]) to {args.output}")
        return 0

    if cmd in ("count", "qfi", "analyze", "oracle"):
        code = load_code(args.codefile)
        if cmd == "count":
            cen = metrology.census(code, k=args.k, threads=threads)
            _emit_json(_count_payload(code, cen), args.output)
        elif cmd == "qfi":
            rep = metrology.qfi_report(code, k=args.k, threads=threads)
            _emit_json(_qfi_payload(rep), args.output)
        elif cmd == "analyze":
            cen = metrology.census(code, k=args.k, threads=threads)
            _emit_json(_analyze_payload(analysis.analyze_code(code, cen)), args.output)
        else:
            cen = metrology.census(code, k=args.k, threads=threads)
            gap = oracle.g_eff_gap(code, k=args.k)
            kl = oracle.knill_laflamme_check(code)
            _emit_json(
                {
                    "name": code.name,
                    "n": code.n,
                    "k": args.k,
                    "delta_g_eff": gap.delta_g_eff,
                    "two_ell": 2 * cen.ell,
                    "kl_pass": kl.passed,
                    "worst_residual": kl.worst_residual,
                },
                args.output,
            )
        return 0

    if cmd == "sweep":
        values = _family_values(args)
        rows = list(_sweep_rows(args.family, args, values, threads))
        _write_csv(args.csv, SWEEP_COLUMNS, rows)
        if args.plot:
            _plot_sweep(rows, args.plot)
        return 0

    if cmd == "optimal-bound":
        rows = []
        for n in _parse_range(args.n):
            if n < 3:
                continue
            value, beta = metrology.optimal_delta_g(n)
            lower, upper = metrology.optimal_interval(n)
            rows.append(
                {
                    "n": n,
                    "value": str(value),
                    "beta_star": str(beta),
                    "lower": str(lower),
                    "upper": str(upper),
                }
            )
        _write_csv(args.csv, ("n", "value", "beta_star", "lower", "upper"), rows)
        if args.plot:
            _plot_optimal(rows, args.plot)
        return 0

    if cmd == "rm-enumerator":
        code = rm.rm_generator(args.r, args.m)
        if args.shortened:
            code = rm.shorten(code)
        enum = rm.weight_enumerator(code)
        if args.dual:
            enum = rm.macwilliams(enum, code.size)
        if args.format == "json":
            _emit_json(
                {
                    "r": args.r,
                    "m": args.m,
                    "shortened": bool(args.shortened),
                    "dual": bool(args.dual),
                    "length": enum.length,
                    "coefficients": list(enum.coefficients),
                },
                args.output,
            )
        else:
            _write_csv(
                args.output,
                ("weight", "count"),
                (
                    {"weight": w, "count": c}
                    for w, c in enumerate(enum.coefficients)
                    if c
                ),
            )
        return 0

    raise UsageError(f"unknown command {cmd!r}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
