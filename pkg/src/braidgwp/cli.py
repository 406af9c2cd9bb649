"""
Command line interface: ``braid <exp|nf|eq|pow|log|batch|bench>``.

Exit codes: 0 positive verdict, 1 negative verdict, 2 input error, 3 unsupported
(generator with exponent sum zero).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import bench as bench_mod
from .core import BraidError, power
from .exponent import exp_sum
from .gwp import GwpResult, StepStats, Verdict, gwp_with_stats
from .normalform import equal, left_canonical_form
from .wordio import format_lcf, format_word, parse, parse_batch

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3

_VERDICT_EXIT = {
    Verdict.POWER: EXIT_OK,
    Verdict.NOT_POWER: EXIT_NEGATIVE,
    Verdict.ZERO_EXPONENT_UNSUPPORTED: EXIT_UNSUPPORTED,
}


class UsageError(Exception):
    pass


def result_json(result: GwpResult, stats: StepStats | None = None, **extra) -> dict:
    out = dict(extra)
    out.update({
        "verdict": result.verdict.value,
        "c": result.c,
        "reason": result.reason.value if result.reason else None,
    })
    if stats is not None:
        out["stats"] = stats.as_dict()
    return out


def parse_range(text: str, geometric: bool = False) -> list[int]:
    """``4..8`` (every integer, or doubling steps when geometric), ``32,64`` or ``7``."""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
            if lo < 1 or hi < lo:
                raise UsageError(f"empty or invalid range {text!r}")
            if not geometric:
                return list(range(lo, hi + 1))
            out = []
            while lo <= hi:
                out.append(lo)
                lo *= 2
            return out
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"invalid range {text!r}") from None
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


def _cmd_exp(args) -> int:
    print(exp_sum(parse(args.word, args.n)))
    return EXIT_OK


def _cmd_nf(args) -> int:
    form = left_canonical_form(parse(args.word, args.n))
    if args.json:
        print(json.dumps({"inf": form.inf, "factors": [list(f.perm) for f in form.factors]}))
    else:
        print(format_lcf(form))
    return EXIT_OK


def _cmd_eq(args) -> int:
    same = equal(parse(args.u, args.n), parse(args.v, args.n))
    print("equal" if same else "unequal")
    return EXIT_OK if same else EXIT_NEGATIVE


def _cmd_pow(args) -> int:
    print(format_word(power(parse(args.word, args.n), args.k)))
    return EXIT_OK


def _cmd_log(args) -> int:
    result, stats = gwp_with_stats(parse(args.x, args.n), parse(args.y, args.n))
    if args.json:
        print(json.dumps(result_json(result, stats)))
    else:
        print(result.message())
    return _VERDICT_EXIT[result.verdict]


def _batch_one(pair):
    result, stats = gwp_with_stats(pair.x, pair.y)
    return result_json(result, stats, line=pair.line)


def _cmd_batch(args) -> int:
    if args.file == "-":
        pairs = parse_batch(sys.stdin, args.n)
    else:
        with open(args.file, encoding="ascii", newline="") as fh:
            pairs = parse_batch(fh, args.n)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_one, pairs))
    else:
        results = [_batch_one(p) for p in pairs]
    for r in results:
        if not args.stats:
            r.pop("stats")
        print(json.dumps(r))
    return EXIT_OK


def _cmd_bench(args) -> int:
    ns = parse_range(args.n_range)
    Ms = parse_range(args.M_range, geometric=True)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if min(ns) < 2:
        raise UsageError("braid index must be >= 2")
    report = bench_mod.bench(ns, Ms, args.trials, args.seed, jobs=args.jobs)
    text = report.to_csv(wall_time=not args.no_wall_time)
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(report.summary(), file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braid", description="Braid word problem and cyclic subgroup membership.")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-n", type=int, required=True, help="braid index (number of strands)")
        return p

    p = word_cmd("exp", "exponent sum of a word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_exp)

    p = word_cmd("nf", "left canonical form")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_nf)

    p = word_cmd("eq", "decide equality of two words")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=_cmd_eq)

    p = word_cmd("pow", "k-th power of a word")
    p.add_argument("word")
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_pow)

    p = word_cmd("log", "find c with x^c = y")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_log)

    p = word_cmd("batch", "run log over a TAB-separated file of pairs")
    p.add_argument("file", help="path, or - for stdin")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--stats", action="store_true", help="include step counters")
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser("bench", help="empirical scaling of log")
    p.add_argument("--n", dest="n_range", required=True, help="e.g. 4..8 or 4,8")
    p.add_argument("--M", dest="M_range", required=True,
                   help="e.g. 16..256 (doubling) or 32,64,128")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--no-wall-time", action="store_true",
                   help="write 0 in wall_ns so output is byte-reproducible")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "n", None) is not None and args.n < 2:
            raise UsageError("braid index must be >= 2")
        return args.func(args)
    except (BraidError, UsageError, OSError, UnicodeDecodeError) as exc:
        line = getattr(exc, "line", None)
        prefix = f"line {line}: " if line is not None else ""
        print(f"braid: {prefix}{exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
