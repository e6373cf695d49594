"""Command-line entry point ``ambc``.

Exit codes: 0 success, 1 a verification suite failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .asymptotic import stabilized_p
from .backward import backward_numbering, backward_step_traced, psi
from .channels import channel_numbering, northeast_channel, southwest_channel
from .errors import AMBCError
from .finite import ZigZag
from .forward import OmegaTriple, forward_step_traced, phi_traced
from .perm import Cell, PartialAffinePermutation, parse_window
from .render import render_grid
from .shi import shi_p
from .verify import SUITES, run_suites


def _window(args: argparse.Namespace) -> PartialAffinePermutation:
    return parse_window(args.window, args.n)


def _tabloid_text(t) -> str:
    return "|".join(",".join(str(v) for v in row) for row in t)


def _emit_triple(t: OmegaTriple, as_json: bool) -> None:
    print(json.dumps(t.to_json()) if as_json else t.to_text())


def cmd_forward(args: argparse.Namespace) -> int:
    w = _window(args)
    t, steps = phi_traced(w, args.policy)
    if args.trace:
        for k, (stream, trace) in enumerate(steps, start=1):
            values = ", ".join(f"{tuple(c)}:{v}" for c, v in zip(trace.numbering.cells, trace.numbering.values))
            print(f"step {k}: numbering {{{values}}} (period {trace.numbering.period})")
            print(f"step {k}: stream A={list(stream.A)} B={list(stream.B)} r={stream.r}")
    _emit_triple(t, args.json)
    return 0


def _parse_triple(text: str, n: int | None) -> OmegaTriple:
    s = text.strip()
    return OmegaTriple.from_json(s, n) if s.startswith("{") else OmegaTriple.from_text(s, n)


def cmd_backward(args: argparse.Namespace) -> int:
    w = psi(_parse_triple(args.triple, args.n))
    print(json.dumps(w.to_json()) if args.json else str(w))
    return 0


def cmd_shi(args: argparse.Namespace) -> int:
    print(_tabloid_text(shi_p(_window(args))))
    return 0


def cmd_asymptotic(args: argparse.Namespace) -> int:
    P, i0 = stabilized_p(_window(args), args.max_periods)
    print(f"{_tabloid_text(P)} (stable from i = {i0})")
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError as exc:
        raise AMBCError(f"expected a range like '-3..8', got {text!r}") from exc


def _translated_paths(levels, n: int, rows: tuple[int, int]) -> list[list[Cell]]:
    paths = []
    for lev in levels:
        base = list(ZigZag.through(lev.inner).cells)
        lo = min(c.row for c in base)
        hi = max(c.row for c in base)
        for k in range((rows[0] - hi) // n - 1, (rows[1] - lo) // n + 2):
            paths.append([c.translate(k, n) for c in base])
    return paths


def _stream_cells(levels) -> list[Cell]:
    return [lev.back for lev in levels]


def cmd_render(args: argparse.Namespace) -> int:
    w = _window(args)
    n = w.n
    rows = _parse_range(args.rows) if args.rows else (1 - n, 2 * n)
    cols = _parse_range(args.cols) if args.cols else rows
    if w.is_empty:
        print(render_grid(w, rows, cols, color=args.color))
        return 0
    if args.numbering in ("sw", "ne"):
        chan = southwest_channel(w) if args.numbering == "sw" else northeast_channel(w)
        d = channel_numbering(w, chan)
        _nxt, _stream, trace = forward_step_traced(w, d)
        print(
            render_grid(
                w,
                rows,
                cols,
                numbering=d,
                highlight=chan.generator,
                stream=_stream_cells(trace.levels),
                paths=_translated_paths(trace.levels, n, rows) if args.zigzags else (),
                color=args.color,
            )
        )
        return 0
    # backward: the forward image numbered by the backward numbering of the recorded stream
    d = channel_numbering(w, southwest_channel(w))
    nxt, stream, _trace = forward_step_traced(w, d)
    bd = backward_numbering(nxt, stream)
    _u, _induced, btrace = backward_step_traced(nxt, stream)
    print(
        render_grid(
            nxt,
            rows,
            cols,
            numbering=bd if bd.cells else None,
            stream=stream.representatives(),
            paths=_translated_paths(btrace.levels, n, rows) if args.zigzags else (),
            color=args.color,
        )
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(
        names, args.n_max, args.shift_max, n_min=args.n_min, rho_max=args.rho_max, samples=args.samples
    )
    for r in results:
        print(r.summary())
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ambc", description="Affine matrix-ball construction toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_window(p: argparse.ArgumentParser) -> None:
        p.add_argument("window", help='window such as "[1,2,17,5]"; "_" marks an undefined entry')
        p.add_argument("-n", type=int, default=None, help="period (defaults to the window length)")

    p = sub.add_parser("forward", help="compute (P, Q, rho) of a window")
    with_window(p)
    p.add_argument("--trace", action="store_true", help="print each step's numbering and stream")
    p.add_argument("--policy", choices=("sw", "ne"), default="sw", help="channel numbering used at each step")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", dest="json", action="store_false")
    p.set_defaults(func=cmd_forward)

    p = sub.add_parser("backward", help="compute the window of a triple")
    p.add_argument("triple", help='"P ; Q ; rho" such as "1,2|3 ; 1,3|2 ; 0,0", or JSON')
    p.add_argument("-n", type=int, default=None)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", dest="json", action="store_false")
    p.set_defaults(func=cmd_backward)

    p = sub.add_parser("shi", help="tabloid from Shi's insertion")
    with_window(p)
    p.set_defaults(func=cmd_shi)

    p = sub.add_parser("asymptotic", help="stable period of row insertion modulo n")
    with_window(p)
    p.add_argument("--max-periods", type=int, default=60)
    p.set_defaults(func=cmd_asymptotic)

    p = sub.add_parser("render", help="draw the ball grid")
    with_window(p)
    p.add_argument("--rows", help="row range a..b")
    p.add_argument("--cols", help="column range a..b (defaults to the row range)")
    p.add_argument("--numbering", choices=("sw", "ne", "backward"), default="sw")
    p.add_argument("--zigzags", action="store_true", help="draw the zig-zags of one step")
    p.add_argument("--color", action="store_true", help="draw period lines in red")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run the enumerated identity suites")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--n-min", type=int, default=None, help="smallest n to enumerate (defaults to --n-max)")
    p.add_argument("--shift-max", type=int, default=2)
    p.add_argument("--rho-max", type=int, default=2, help="weight range for the weyl suite")
    p.add_argument("--samples", type=int, default=200, help="random cases for the asymptotic suite")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AMBCError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
