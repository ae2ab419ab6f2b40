"""Command-line front end: state dumps, sweeps, figure data, verification.

Half-integers are accepted as "3/2" or "1.5".  All CSV output is
deterministic: header row, 17-significant-digit cells, LF endings.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .construct import Branch, IntelligentSpec, beta_of_alpha, intelligent_state
from .errors import DegenerateAlphaError
from .halfint import HalfInt, m_values
from .sweeps import REPORT_COLUMNS, SweepConfig, emit_figure, emit_sweep, fmt, write_csv, write_json
from .verify import run_all


def _halfint(text: str) -> HalfInt:
    try:
        return HalfInt.of(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must be start:stop:points")
    return float(parts[0]), float(parts[1]), int(parts[2])


def _resolve_spec(args) -> IntelligentSpec:
    if (args.beta is None) == (args.alpha is None):
        raise SystemExit("provide exactly one of --beta or --alpha")
    if args.alpha is not None:
        try:
            beta, branch = beta_of_alpha(args.alpha)
        except DegenerateAlphaError as exc:
            raise SystemExit(f"error: {exc}")
        if args.branch is not None and Branch(args.branch) is not branch:
            raise SystemExit(
                f"error: alpha = {args.alpha} belongs to the {branch.value} branch"
            )
    else:
        beta = args.beta
        branch = Branch(args.branch) if args.branch else Branch.Y
    try:
        return IntelligentSpec(args.la, args.lb, beta, branch)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")


def cmd_state(args) -> int:
    spec = _resolve_spec(args)
    ket = intelligent_state(spec)
    header = ["m", "re_amp", "im_amp", "abs2"]
    rows = [
        [str(m), amp.real, amp.imag, abs(amp) ** 2]
        for m, amp in zip(m_values(spec.ell), ket.amplitudes)
    ]
    if args.format == "csv":
        write_csv(args.out, header, rows)
    else:
        payload = {
            "ell_a": str(spec.ell_a),
            "ell_b": str(spec.ell_b),
            "ell": str(spec.ell),
            "beta": spec.beta,
            "branch": spec.branch.value,
            "amplitudes": [dict(zip(header, row)) for row in rows],
        }
        write_json(args.out, payload)
    return 0


def cmd_sweep(args) -> int:
    if not args.la or not args.lb or len(args.la) != len(args.lb):
        raise SystemExit("provide matching --la/--lb pairs (repeat the flags per pair)")
    start, stop, points = args.grid
    config = SweepConfig(
        ell_pairs=list(zip(args.la, args.lb)),
        parameter=args.param,
        start=start,
        stop=stop,
        points=points,
        branch=Branch(args.branch) if args.branch else Branch.Y,
        outputs=tuple(args.outputs.split(",")) if args.outputs else REPORT_COLUMNS,
        fmt=args.format,
        out_path=args.out,
    )
    emit_sweep(config)
    return 0


def cmd_figure(args) -> int:
    try:
        emit_figure(args.which, args.out)
    except OSError as exc:
        raise SystemExit(f"error writing {args.out}: {exc}")
    return 0


def cmd_verify(args) -> int:
    if args.max_ell.twice > 20:
        raise SystemExit("error: --max-ell is capped at 10")
    summary = run_all(args.max_ell, args.seed)
    text = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    for suite in summary["suites"]:
        status = "pass" if suite["pass"] else "FAIL"
        print(
            f"[{status}] {suite['name']}: {suite['cases']} cases, "
            f"worst residual {fmt(suite['worst_residual'])}"
        )
    if not summary["pass"]:
        first = next(s["name"] for s in summary["suites"] if not s["pass"])
        print(f"FAILED: {first}", file=sys.stderr)
        return 1
    print("all suites passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su2int",
        description="Construct and verify su(2) intelligent states built from "
        "coupled spin coherent states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    state = sub.add_parser("state", help="dump one state's amplitudes")
    state.add_argument("--la", type=_halfint, required=True, help="ell_a, e.g. 3/2 or 1.5")
    state.add_argument("--lb", type=_halfint, required=True, help="ell_b")
    state.add_argument("--beta", type=float, help="rotation angle in radians")
    state.add_argument("--alpha", type=float, help="shift parameter (branch inferred)")
    state.add_argument("--branch", choices=["y", "x"], help="rotation axis (default y)")
    state.add_argument("--format", choices=["csv", "json"], default="csv")
    state.add_argument("--out", help="output path (default stdout)")
    state.set_defaults(fn=cmd_state)

    sweep = sub.add_parser("sweep", help="report observables over a parameter grid")
    sweep.add_argument("--la", type=_halfint, action="append", help="repeat per pair")
    sweep.add_argument("--lb", type=_halfint, action="append", help="repeat per pair")
    sweep.add_argument("--param", choices=["beta", "alpha"], default="beta")
    sweep.add_argument("--grid", type=_grid, required=True, metavar="START:STOP:POINTS")
    sweep.add_argument("--branch", choices=["y", "x"])
    sweep.add_argument("--outputs", help="comma-separated report columns (default all)")
    sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    sweep.add_argument("--out", help="output path (default stdout)")
    sweep.set_defaults(fn=cmd_sweep)

    figure = sub.add_parser("figure", help="emit the data behind the reference figures")
    figure.add_argument("which", choices=["fig1", "fig2", "fig3"])
    figure.add_argument("--out", help="output CSV path (default stdout)")
    figure.set_defaults(fn=cmd_figure)

    verify = sub.add_parser("verify", help="run every invariant suite, emit JSON summary")
    verify.add_argument("--max-ell", type=_halfint, default=HalfInt(12), dest="max_ell")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--out", help="JSON report path")
    verify.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
