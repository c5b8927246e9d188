"""Command-line entry point: ``gbsclass {classify,orbit,distinguish,verify,class-of}``."""

from __future__ import annotations

import argparse
import logging
import sys
import time

from . import store
from .locc import SearchConfig, Verdict, find_witness, serialize_vector
from .orbits import METHOD_EXTENSION, METHOD_FULL, ClassIndex, classify_all, extension_family, orbit_members
from .sets import format_set, parse_set

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO_WITNESS = 2
EXIT_MISMATCH = 3

METHODS = {"full": METHOD_FULL, "incremental": METHOD_EXTENSION}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _read_set(args):
    try:
        s = parse_set(args.set, args.d, implicit_identity=args.implicit_identity)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not s.is_standard():
        raise UsageError(f"{s} does not contain (0,0); pass --implicit-identity to add it")
    return s


def cmd_classify(args) -> int:
    method = METHODS[args.method]
    members = args.emit == "members"
    t0 = time.perf_counter()
    try:
        c = store.cached_classification(
            args.d, args.l, method, members=members, workers=args.workers, use_cache=not args.no_cache
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = args.output or f"classification-d{args.d}-l{args.l}-{args.method}.json"
    store.save(c, out)
    print(f"d={c.d} l={c.l} classes={len(c)} universe={c.universe_size}")
    logging.info("wrote %s in %.2fs", out, time.perf_counter() - t0)
    return EXIT_OK


def cmd_orbit(args) -> int:
    s = _read_set(args)
    try:
        members = orbit_members(s)
        if args.within_family:
            if len(s) < 3:
                raise ValueError("--within-family needs a set of size >= 3")
            family = set(extension_family(classify_all(s.d, len(s) - 1)))
            members = [m for m in members if m in family]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for m in members:
        print(format_set(m))
    print(f"size={len(members)}")
    return EXIT_OK


def cmd_distinguish(args) -> int:
    s = _read_set(args)
    if len(s) < 2:
        raise UsageError("distinguishing needs at least two states")
    try:
        cfg = SearchConfig(
            restarts=args.restarts,
            max_iter=args.max_iter,
            witness_tol=args.witness_tol,
            seed=args.seed,
            structured_starts=not args.random_only,
        )
        report = find_witness(s, cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(f"set={format_set(s)}")
    print(f"verdict={report.verdict.value}")
    print(f"min_residual={report.min_residual!r}")
    print(f"restarts_used={report.restarts_used}")
    if report.witness is not None:
        print("witness=" + " ".join(serialize_vector(report.witness)))
    else:
        worst = max(report.residuals.items(), key=lambda kv: kv[1])
        print(f"largest_overlap={worst[0]}:{worst[1]!r}")
    print(f"note={report.note}")
    return EXIT_OK if report.verdict is Verdict.DISTINGUISHABLE else EXIT_NO_WITNESS


def cmd_verify(args) -> int:
    result = store.verify_table(args.table, workers=args.workers)
    for line in result.lines:
        print(line)
    return EXIT_OK if result.passed else EXIT_MISMATCH


def cmd_class_of(args) -> int:
    s = _read_set(args)
    if len(s) < 2 or len(s) > args.d:
        raise UsageError(f"set size must lie in [2, {args.d}]")
    c = store.cached_classification(
        args.d, len(s), METHODS[args.method], workers=args.workers, use_cache=not args.no_cache
    )
    try:
        cls = ClassIndex(c).lookup(s)
    except LookupError as exc:
        raise UsageError(str(exc)) from exc
    index = c.classes.index(cls) + 1
    print(f"class={index} representative={format_set(cls.representative)} size={cls.size}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gbsclass", description="Clifford-based classification of generalized Bell state sets.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def set_args(p):
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--set", required=True, help='e.g. "(0,0);(0,2);(2,0)"')
        p.add_argument("--implicit-identity", action="store_true", help="prepend (0,0) to the set")

    p = sub.add_parser("classify", help="classify all standard l-sets over Z_d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--method", choices=sorted(METHODS), default="full")
    p.add_argument("--emit", choices=("reps", "members"), default="reps")
    p.add_argument("--output", "-o")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orbit", help="list the equivalence class of one set")
    set_args(p)
    p.add_argument(
        "--within-family",
        action="store_true",
        help="only list members obtained by adding one GPM to an (l-1)-set representative",
    )
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("distinguish", help="search for a one-way LOCC witness")
    set_args(p)
    p.add_argument("--restarts", type=_positive_int, default=200)
    p.add_argument("--max-iter", type=_positive_int, default=2000)
    p.add_argument("--witness-tol", type=_positive_float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-only", action="store_true", help="skip uniform and GPM-eigenvector starts")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("verify", help="recompute a reference table and diff it")
    p.add_argument("--table", choices=store.TABLE_IDS, required=True)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("class-of", help="find the class containing a set")
    set_args(p)
    p.add_argument("--method", choices=sorted(METHODS), default="full")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_class_of)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gbsclass {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
