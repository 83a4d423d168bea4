"""Command-line entry point: ``air-index <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 for invalid
arguments or input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import __version__
from .chain import check_range, compute_chain
from .codec import build_plan, decode, encode, plan_report, render_table
from .distances import distance_profile
from .errors import AirIndexError, DecodingError
from .field import PrimeField
from .matrix import build_air, render
from .verify import DEFAULT_SEED, sweep, verify_instance

PROG = "air-index"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # one line, no usage dump
        raise UsageError(message)


def _fields(text: str) -> list[int]:
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad field list {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty field list")
    for p in out:
        PrimeField(p)
    return out


def _dump(obj: dict, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _read_symbols(path: str) -> list[int]:
    lines = Path(path).read_text().split()
    return [int(x) for x in lines]


def _read_side(path: str) -> dict[int, int]:
    """``index value`` pairs, one per line; blank lines and ``#`` comments skipped."""
    side = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        i, v = line.split()
        side[int(i)] = int(v)
    return side


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="AIR-matrix index codes for SNI-SUICP instances.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def instance(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("K", type=int)
        p.add_argument("D", type=int)
        return p

    instance("chain", "print the lambda/beta chain as JSON")

    p = instance("matrix", "print the AIR matrix")
    p.add_argument("--format", choices=["txt", "csv", "pbm"], default="txt")

    p = instance("profile", "print the distance profile of a column as JSON")
    p.add_argument("--k", type=int, required=True, dest="column")

    p = instance("plan", "print the decoding plan of every receiver")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--field", type=int, default=2)

    p = instance("encode", "encode a message file")
    p.add_argument("--field", type=int, default=2)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile")

    p = instance("decode", "decode one receiver's message")
    p.add_argument("--field", type=int, default=2)
    p.add_argument("--receiver", type=int, required=True)
    p.add_argument("--code", required=True)
    p.add_argument("--side", required=True)

    p = instance("verify", "verify every receiver of one instance")
    p.add_argument("--fields", type=_fields, default=[2])
    p.add_argument("--random", type=int, default=8, dest="n_random")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--minimality", action="store_true", help="also run the column-deletion check")

    p = sub.add_parser("sweep", help="verify all instances with K <= kmax")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--fields", type=_fields, default=[2])
    p.add_argument("--random", type=int, default=4, dest="n_random")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=1)
    return parser


def _dispatch(args: argparse.Namespace, out: TextIO) -> int:
    cmd = args.command
    if cmd == "sweep":
        if args.kmax < 3:
            raise UsageError("--kmax must be at least 3")
        rep = sweep(args.kmax, args.fields, args.n_random, args.seed, args.workers)
        _dump(rep.to_dict(), out)
        return 0 if rep.ok else 1

    check_range(args.K, args.D)
    if cmd == "chain":
        _dump(compute_chain(args.K, args.D).to_dict(), out)
        return 0

    matrix = build_air(args.K, args.D)
    header = {"K": matrix.K, "D": matrix.D, "U": matrix.chain.U}
    if cmd == "matrix":
        for line in render(matrix, args.format):
            out.write(line + "\n")
    elif cmd == "profile":
        _dump({**header, **distance_profile(matrix, args.column).to_dict()}, out)
    elif cmd == "plan":
        report = plan_report(matrix, build_plan(matrix, PrimeField(args.field)))
        if args.format == "table":
            out.write(render_table(report))
        else:
            _dump(report, out)
    elif cmd == "encode":
        field = PrimeField(args.field)
        code = encode(_read_symbols(args.infile), matrix, field)
        text = "".join(f"{int(c)}\n" for c in code)
        if args.outfile:
            Path(args.outfile).write_text(text)
        else:
            out.write(text)
    elif cmd == "decode":
        field = PrimeField(args.field)
        if not (0 <= args.receiver < matrix.K):
            raise UsageError(f"receiver {args.receiver} outside [0:{matrix.K - 1}]")
        code = _read_symbols(args.code)
        plan = build_plan(matrix, field)
        try:
            value = decode(args.receiver, code, _read_side(args.side), plan, field)
        except DecodingError as err:
            raise UsageError(str(err)) from None
        out.write(f"{value}\n")
    elif cmd == "verify":
        rep = verify_instance(
            args.K, args.D, args.fields, args.n_random, args.seed, minimality=args.minimality
        )
        _dump(rep.to_dict(), out)
        return 0 if rep.passed else 1
    return 0


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, out)
    except (UsageError, AirIndexError, OSError, ValueError) as exc:
        err.write(f"{PROG}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
