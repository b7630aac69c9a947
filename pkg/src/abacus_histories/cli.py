"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .checks import LEVELS, SUITES, run_checks
from .histories import HistoryError, format_history, enumerate_histories
from .operators import WordParseError, format_word, parse_word, word_for
from .parallel import (apply_word_parallel, count_histories_parallel,
                       render_histories_parallel)
from .partitions import PartitionError, partition, render_partition
from .qlaurent import SchurExpansion
from .threerow import three_row_table

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2
HISTORY_KINDS = {"S", "H", "C", "B"}


class UsageError(Exception):
    pass


def parse_partition(text: str):
    """``"3,1,1"`` -> (3, 1, 1); the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"bad partition {text!r}: expected comma-separated integers") from None
    try:
        return partition(parts)
    except PartitionError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def parse_sequence(text: str):
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _word(text: str, history_mode: bool = False):
    try:
        word = parse_word(text)
    except WordParseError as exc:
        raise UsageError(str(exc)) from None
    if not word:
        raise UsageError("empty operator word")
    if history_mode:
        for op in word:
            if op.kind not in HISTORY_KINDS:
                raise UsageError(f"operator {op} has no history model; use S, H, C or B")
    return word


def _jobs(n: int) -> int:
    if n < 1:
        raise UsageError("--jobs must be at least 1")
    return n


def _write(out, text: str):
    out.write(text if text.endswith("\n") else text + "\n")


# -- subcommands ----------------------------------------------------------

def cmd_expand(args, out) -> int:
    word = _word(args.word)
    start = parse_partition(args.start)
    E = apply_word_parallel(word, SchurExpansion.schur(start), _jobs(args.jobs))
    if args.format == "json":
        _write(out, json.dumps({"word": format_word(word), "start": list(start),
                                "expansion": E.to_json()}, separators=(",", ":")))
    else:
        _write(out, str(E))
    return EXIT_OK


def cmd_histories(args, out) -> int:
    word = _word(args.word, history_mode=True)
    start = parse_partition(args.start)
    jobs = _jobs(args.jobs)
    text = format_word(word)
    try:
        if args.count_only:
            _write(out, str(count_histories_parallel(text, start, args.b_mode, jobs)))
            return EXIT_OK
        if jobs > 1:
            blocks = render_histories_parallel(text, start, args.b_mode, args.format, jobs)
        else:
            blocks = (format_history(h, args.format)
                      for h in enumerate_histories(word, start, args.b_mode))
        for block in blocks:
            _write(out, block)
    except HistoryError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_kostka3(args, out) -> int:
    if args.n < 1:
        raise UsageError("n must be positive")
    table = three_row_table(args.n)
    if args.format == "json":
        rows = [{"nu": list(nu), "lam": list(lam), "coeff": c.to_json()}
                for (nu, lam), c in table.items()]
        _write(out, json.dumps(rows, separators=(",", ":")))
        return EXIT_OK
    current = None
    for (nu, lam), c in table.items():
        if nu != current:
            _write(out, f"H{render_partition(nu)[1:]}")
            current = nu
        _write(out, f"  {render_partition(lam)}: {c}")
    return EXIT_OK


def cmd_bench(args, out) -> int:
    jobs = _jobs(args.jobs)
    if args.alpha is not None:
        alpha = parse_sequence(args.alpha)
        if not alpha:
            raise UsageError("--alpha needs at least one entry")
        word = word_for(args.word_type, alpha)
        label = f"{args.word_type}({','.join(map(str, alpha))})"
        t0 = time.perf_counter()
        if args.terms:
            n = count_histories_parallel(format_word(word), (), "omega", jobs)
            line = f"{label}: {n} terms"
        else:
            E = apply_word_parallel(word, SchurExpansion.one(), jobs)
            line = f"{label}: {len(E)} Schur terms, {E.monomial_count()} monomials"
        if not args.no_times:
            line += f"  ({time.perf_counter() - t0:.3f} s)"
        _write(out, line)
        return EXIT_OK
    if not 2 <= args.k_max <= 7:
        raise UsageError("--k-max must lie in 2..7")
    _write(out, "k  histories" + ("" if args.no_times else "  seconds"))
    for k in range(2, args.k_max + 1):
        t0 = time.perf_counter()
        n = count_histories_parallel(format_word(word_for("H", (3,) * k)), (), "omega", jobs)
        line = f"{k}  {n}"
        if not args.no_times:
            line += f"  {time.perf_counter() - t0:.3f}"
        _write(out, line)
    return EXIT_OK


def cmd_check(args, out) -> int:
    names = args.suite or None
    status = EXIT_OK
    for r in run_checks(args.level, names):
        timing = "" if args.no_times else f" ({r.seconds:.2f} s)"
        verdict = "PASS" if r.ok else "FAIL"
        _write(out, f"{verdict} {r.name}: {r.cases} cases{timing}")
        if not r.ok:
            _write(out, "  counterexample: " + r.counterexample.replace("\n", "\n  "))
            status = EXIT_CHECK_FAILED
    return status


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="abacus-histories",
        description="Schur expansions of creation-operator words and their abacus-histories.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", help="expand an operator word applied to s_start")
    e.add_argument("--word", required=True, help='e.g. "H(1),H(2),H(3)"; rightmost acts first')
    e.add_argument("--start", default="", help='starting partition, e.g. "3,1"')
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(func=cmd_expand)

    h = sub.add_parser("histories", help="enumerate abacus-histories of an S/H/C/B word")
    h.add_argument("--word", required=True)
    h.add_argument("--start", default="")
    h.add_argument("--format", choices=("text", "json"), default="text")
    h.add_argument("--count-only", action="store_true")
    h.add_argument("--b-mode", choices=("omega", "native"), default="omega")
    h.add_argument("--jobs", type=int, default=1)
    h.set_defaults(func=cmd_histories)

    k = sub.add_parser("kostka3", help="three-row coefficient table for partitions of n")
    k.add_argument("n", type=int)
    k.add_argument("--format", choices=("text", "json"), default="text")
    k.set_defaults(func=cmd_kostka3)

    b = sub.add_parser("bench", help="history counts and timings")
    b.add_argument("--k-max", type=int, default=5)
    b.add_argument("--word-type", choices=("H", "C", "B"), default="H")
    b.add_argument("--alpha", default=None, help="benchmark one word instead of (3^k)")
    b.add_argument("--terms", action="store_true",
                   help="with --alpha, count signed history terms before cancellation")
    b.add_argument("--no-times", action="store_true")
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_bench)

    c = sub.add_parser("check", help="run the self-check suites")
    c.add_argument("--level", choices=LEVELS, default="quick")
    c.add_argument("--suite", action="append", choices=[name for name, _ in SUITES])
    c.add_argument("--no-times", action="store_true")
    c.set_defaults(func=cmd_check)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
