"""Command-line interface: ``fdetour <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 failed
verification.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bounds import bfs_search, closed_form_upper, report, unknot
from .diagram import (
    GaussCodeError,
    GaussDiagram,
    canonical_key,
    key_to_code,
    parse_gauss_code,
    random_diagram,
    serialize,
)
from .invariants import affine_index_poly, all_indices, n_writhes
from .laurent import format_poly
from .moves import MoveError, MoveTrace, replay

EXIT_USAGE, EXIT_INVALID, EXIT_VERIFY = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")

    def with_code(sp):
        sp.add_argument("code", nargs="?", help="Gauss code, e.g. O1+O2+U1+U2+")
        sp.add_argument("--empty", action="store_true", help="use the empty diagram")

    parser = _Parser(prog="fdetour", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    with_code(sub.add_parser("parse", parents=[common], help="validate and canonicalize a Gauss code"))
    with_code(sub.add_parser("invariants", parents=[common], help="indices, n-writhes, affine index polynomial"))
    p = sub.add_parser("unknot", parents=[common], help="run the constructive unknotting procedure")
    with_code(p)
    p.add_argument("--trace", metavar="FILE", help="write the move trace as JSON")
    p = sub.add_parser("bounds", parents=[common], help="bracket the forbidden detour number")
    with_code(p)
    p.add_argument("--search", action="store_true", help="also run the exhaustive search")
    p.add_argument("--max-fd", type=int, default=None)
    p = sub.add_parser("search", parents=[common], help="minimum Fd count over Fd/R1/R2-removal sequences")
    with_code(p)
    p.add_argument("--max-fd", type=int, default=None)
    p = sub.add_parser("random", parents=[common], help="emit random Gauss codes")
    p.add_argument("--chords", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p = sub.add_parser("verify", parents=[common], help="replay a trace file")
    p.add_argument("--trace", metavar="FILE", required=True)
    return parser


def _diagram(args) -> GaussDiagram:
    if args.empty:
        if args.code:
            raise UsageError("give either a code or --empty, not both")
        return GaussDiagram()
    if args.code is None:
        raise UsageError("a Gauss code (or --empty) is required")
    return parse_gauss_code(args.code)


def _emit(out, args, data: dict, text: str) -> None:
    if args.json:
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _cmd_parse(args, out):
    d = _diagram(args)
    key = key_to_code(canonical_key(d))
    _emit(out, args, {"code": serialize(d), "chords": d.n_chords, "canonical": key},
          f"chords: {d.n_chords}\ncanonical: {key}")


def _cmd_invariants(args, out):
    d = _diagram(args)
    idx = all_indices(d)
    writhes = n_writhes(d)
    poly = affine_index_poly(d)
    lines = ["chord sign index"]
    lines += [f"{c:>5} {d.signs[c]:>+4} {idx[c]:>5}" for c in d.chords]
    lines.append("n-writhes: " + (", ".join(f"J[{n}]={j}" for n, j in writhes.items()) or "none"))
    lines.append(f"affine index polynomial: {format_poly(poly)}")
    lines.append(f"quotient by (t - 1): {format_poly(poly.divide_by_t_minus_1())}")
    data = {
        "code": serialize(d),
        "indices": {str(c): idx[c] for c in d.chords},
        "signs": {str(c): d.signs[c] for c in d.chords},
        "n_writhes": {str(n): j for n, j in writhes.items()},
        "polynomial": format_poly(poly),
        "quotient": format_poly(poly.divide_by_t_minus_1()),
    }
    _emit(out, args, data, "\n".join(lines))


def _cmd_unknot(args, out):
    d = _diagram(args)
    trace, stages = unknot(d)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(trace.to_json())
    bound = closed_form_upper(d.n_chords)
    lines = ["stage chord     side  c  a  b  fd  bound"]
    for k, s in enumerate(stages, 1):
        lines.append(f"{k:>5} {s.chord_removed:>5} {s.side:>10} {s.c_at_stage:>2} "
                     f"{s.a:>2} {s.b:>2} {s.fd_used:>3} {s.bound:>6}")
    lines.append(f"total Fd moves: {trace.fd_count} (closed-form bound {bound})")
    data = {
        "code": serialize(d),
        "stages": [dict(chord=s.chord_removed, side=s.side, c=s.c_at_stage, a=s.a, b=s.b,
                        fd_used=s.fd_used) for s in stages],
        "fd_count": trace.fd_count,
        "closed_form_upper": bound,
    }
    _emit(out, args, data, "\n".join(lines))


def _cmd_bounds(args, out):
    d = _diagram(args)
    r = report(d, search=args.search, max_fd=args.max_fd)
    _emit(out, args, r.to_dict(), r.render())


def _cmd_search(args, out):
    d = _diagram(args)
    limit = args.max_fd
    if limit is None:
        limit = unknot(d)[0].fd_count
    trace = bfs_search(d, limit)
    value = None if trace is None else trace.fd_count
    text = f"minimum Fd moves: {value}" if trace is not None else f"minimum Fd moves: more than {limit}"
    _emit(out, args, {"code": serialize(d), "max_fd": limit, "min_fd": value}, text)


def _cmd_random(args, out):
    if args.chords < 0 or args.count < 0:
        raise UsageError("--chords and --count must be non-negative")
    codes = [serialize(random_diagram(args.chords, args.seed + k)) for k in range(args.count)]
    _emit(out, args, {"codes": codes}, "\n".join(codes))


def _cmd_verify(args, out, err):
    try:
        with open(args.trace) as fh:
            trace = MoveTrace.from_json(fh.read())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        err.write(f"fdetour: cannot read trace: {exc}\n")
        return EXIT_INVALID
    try:
        final = replay(trace)
    except MoveError as exc:
        err.write(f"fdetour: illegal move at {exc}\n")
        return EXIT_VERIFY
    if not final.is_empty():
        err.write(f"fdetour: trace ends at {serialize(final)}, not the empty diagram\n")
        return EXIT_VERIFY
    _emit(out, args, {"ok": True, "moves": len(trace.records), "fd_count": trace.fd_count},
          f"ok: {len(trace.records)} moves, {trace.fd_count} Fd")
    return 0


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if args.command == "verify":
            return _cmd_verify(args, out, err)
        handler = {
            "parse": _cmd_parse,
            "invariants": _cmd_invariants,
            "unknot": _cmd_unknot,
            "bounds": _cmd_bounds,
            "search": _cmd_search,
            "random": _cmd_random,
        }[args.command]
        handler(args, out)
        return 0
    except UsageError as exc:
        err.write(f"{exc}\n")
        err.write(parser.format_usage())
        return EXIT_USAGE
    except GaussCodeError as exc:
        err.write(f"fdetour: invalid Gauss code: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
