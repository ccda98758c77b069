"""Command line front end.

Every result is written as one record per line: JSON objects by default,
or CSV rows with ``--csv``.  Numbers are always decimal strings.

Exit status: 0 on success, 1 on a domain error (the error record goes to
stderr), 2 on a usage error.

Settings resolve as flag, then ``COLLATZ_<NAME>`` environment variable,
then built-in default.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import enumeration, families, stats
from .affine import DEFAULT_CYCLE_BOUND, integer_cycles
from .cache import LengthCache
from .core import DEFAULT_KEEP, DEFAULT_MAX_STEPS, collatz_length, orbit
from .errors import CollatzError, ParityError, WordSyntaxError
from .records import CycleListing, to_record
from .solver import solve_blocks
from .words import apply, format_word, inverse_apply, parse_blocks, parse_word, word_of

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

log = logging.getLogger(__name__)

BLOCKS_HELP = """\
block list grammar:
  BLOCKS := PAIR (SP PAIR)* ['t' DECIMAL]      PAIR := K ',' M
  "9,1 6,1 2,1" is 0^9 1 0^6 1 0^2 1;  "3,2 t1" is 0^3 1^2 0

word grammar:
  WORD := RUN (SP RUN)* | BITSTRING | ""      RUN := ('0'|'1') ['^' DECIMAL]
  the rightmost symbol is applied first: 10011 sends 19 to 17

defaults: --max-steps 10000, --bound per command (enum 40 bfs / 24 words,
cycles 20), --threads 1.  Environment: COLLATZ_MAX_STEPS, COLLATZ_BOUND,
COLLATZ_CACHE, COLLATZ_THREADS, COLLATZ_FORMAT (json|csv).
"""


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a natural number >= 1, got {value}")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None
    return values


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    default = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("common options")
    g.add_argument("--max-steps", type=_natural, default=default, help="orbit cutoff")
    g.add_argument("--bound", type=_natural, default=default, help="size bound for enum/cycles")
    g.add_argument("--cache", default=default, metavar="PATH", help="persistent length cache")
    fmt = g.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", default=default)
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv", default=default)
    g.add_argument("--strict", action="store_true", default=default,
                   help="treat a non-natural solve as an error")
    g.add_argument("--threads", type=_natural, default=default, help="worker processes for scans")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="collatz-algebra",
        description="Exact computations with the accelerated 3n+1 map.",
        epilog=BLOCKS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[_common_options(False)],
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    common = [_common_options(True)]

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, parents=common, epilog=BLOCKS_HELP,
                              formatter_class=argparse.RawDescriptionHelpFormatter)

    p = add("orbit", "iterates, word, length and minimum of each n")
    p.add_argument("n", type=_natural, nargs="+")
    p.add_argument("--keep", type=int, default=DEFAULT_KEEP, help="iterates to store")

    p = add("length", "Collatz length of each n")
    p.add_argument("n", type=_natural, nargs="+")

    p = add("word", "canonical word sending n to 1")
    p.add_argument("n", type=_natural, nargs="+")

    p = add("apply", "apply a word to naturals")
    p.add_argument("--word", required=True)
    p.add_argument("x", type=_natural, nargs="+")

    p = add("invert", "formal inverse of a word at rationals")
    p.add_argument("--word", required=True)
    p.add_argument("y", type=_rational, nargs="+")

    p = add("solve", "solve block words for alpha")
    p.add_argument("--blocks", action="append", required=True)

    p = add("family", "members of the block families")
    p.add_argument("--n", type=_natural, help="block count, with --max-param")
    p.add_argument("--max-param", type=_natural, default=1)
    p.add_argument("--m", type=_int_list, help="explicit m_1,...,m_n")
    p.add_argument("--l", type=_int_list, help="explicit l_1,...,l_n")
    p.add_argument("--max-digits", type=_natural, default=families.DEFAULT_MAX_DIGITS)

    p = add("enum", "all Collatz numbers of a given length")
    p.add_argument("theta", type=_natural)
    p.add_argument("--method", choices=("bfs", "words", "both"), default="both")
    p.add_argument("--prune", action="store_true", help="also print pruning counts")

    p = add("cycles", "integer periodic points of period k")
    p.add_argument("k", type=_natural)

    p = add("density", "fraction of m < M whose orbit dips below m")
    p.add_argument("M", type=_natural)

    p = add("check", "residue-class descent check over [2, N]")
    p.add_argument("range_end", type=_natural)
    return parser


def _resolve(args: argparse.Namespace, env: dict[str, str]) -> None:
    def pick(name: str, default: Any, conv=int):
        value = getattr(args, name, None)
        if value is None:
            raw = env.get(f"COLLATZ_{name.upper()}")
            value = conv(raw) if raw else default
        setattr(args, name, value)

    pick("max_steps", DEFAULT_MAX_STEPS)
    pick("bound", None)
    pick("cache", None, str)
    pick("threads", 1)
    pick("format", "json", str)
    if not getattr(args, "strict", None):
        args.strict = False


class _Writer:
    def __init__(self, fmt: str, out) -> None:
        self.fmt = fmt
        self.out = out
        self._csv = None

    def write(self, obj: Any) -> None:
        rec = obj if isinstance(obj, dict) else to_record(obj)
        if self.fmt == "json":
            self.out.write(json.dumps(rec, separators=(",", ":")) + "\n")
            return
        row = {k: _flat(v) for k, v in rec.items()}
        # a change of columns starts a new table with its own header
        if self._csv is None or self._csv.fieldnames != list(row):
            self._csv = csv.DictWriter(self.out, fieldnames=list(row), lineterminator="\n")
            self._csv.writeheader()
        self._csv.writerow(row)


def _flat(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return " ".join(_flat(x) if not isinstance(x, dict) else
                        ":".join(str(y) for y in x.values()) for x in v)
    if isinstance(v, dict):
        return " ".join(f"{k}:{x}" for k, x in v.items())
    return str(v)


def _error_record(exc: Exception) -> dict[str, Any]:
    rec: dict[str, Any] = {"type": "error", "error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParityError):
        rec.update(position=str(exc.position), symbol=str(exc.symbol), value=str(exc.value))
    return rec


def _dispatch(args: argparse.Namespace) -> Iterable[Any]:
    cmd = args.command
    if cmd == "orbit":
        for n in args.n:
            yield orbit(n, args.max_steps, args.keep)
    elif cmd == "length":
        cache = LengthCache(args.cache) if args.cache else None
        for n in args.n:
            value = cache.length(n, args.max_steps) if cache is not None else collatz_length(n, args.max_steps)
            yield {"type": "length", "n": str(n), "length": str(value)}
    elif cmd == "word":
        for n in args.n:
            w = word_of(n, args.max_steps)
            yield {"type": "word", "n": str(n), "word": format_word(w), "length": str(len(w)),
                   "support": str(w.support)}
    elif cmd == "apply":
        word = parse_word(args.word)
        for x in args.x:
            yield {"type": "apply", "word": format_word(word), "x": str(x),
                   "result": str(apply(word, x))}
    elif cmd == "invert":
        word = parse_word(args.word)
        for y in args.y:
            yield {"type": "invert", "word": format_word(word), "y": str(y),
                   "x": str(inverse_apply(word, y))}
    elif cmd == "solve":
        for text in args.blocks:
            res = solve_blocks(parse_blocks(text))
            yield res
            if args.strict and res.natural is None:
                raise NonNaturalSolution(f"{text!r} has non-natural solution {res.candidate}")
    elif cmd == "family":
        if args.m is not None or args.l is not None:
            if args.m is None or args.l is None:
                raise _UsageError("--m and --l must be given together")
            yield families.n_block_member(families.FamilyParams(args.m, args.l), args.max_digits)
        elif args.n is not None:
            yield from families.enumerate_family(args.n, args.max_param, args.max_digits)
        else:
            raise _UsageError("family needs --n or --m/--l")
    elif cmd == "enum":
        if args.method in ("bfs", "both"):
            bound = args.bound or enumeration.DEFAULT_BFS_BOUND
            yield enumeration.inverse_bfs(args.theta, bound)
        if args.method in ("words", "both"):
            bound = args.bound or enumeration.DEFAULT_ENUM_BOUND
            yield enumeration.word_enum(args.theta, bound, cross_check=args.method == "both")
        if args.prune:
            yield enumeration.prune_count(args.theta, args.bound or enumeration.DEFAULT_ENUM_BOUND)
    elif cmd == "cycles":
        sols = integer_cycles(args.k, args.bound or DEFAULT_CYCLE_BOUND)
        yield CycleListing(args.k, tuple(sols))
    elif cmd == "density":
        if args.M < 2:
            raise _UsageError("density needs M >= 2")
        yield stats.everett_density(args.M, args.max_steps, workers=args.threads)
    elif cmd == "check":
        if args.range_end < 4:
            raise _UsageError("check needs range_end >= 4")
        yield stats.residue_glide_check(args.range_end, args.max_steps, workers=args.threads)


class NonNaturalSolution(CollatzError):
    pass


class _UsageError(Exception):
    pass


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None,
        env: dict[str, str] | None = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    _resolve(args, dict(os.environ) if env is None else env)
    writer = _Writer(args.format, stdout)
    try:
        for obj in _dispatch(args):
            writer.write(obj)
    except (_UsageError, WordSyntaxError) as exc:
        parser.print_usage(stderr)
        stderr.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE
    except CollatzError as exc:
        stderr.write(json.dumps(_error_record(exc), separators=(",", ":")) + "\n")
        return EXIT_DOMAIN
    return EXIT_OK


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run())
