"""Command-line entry point: ``seqcm <command> [--job FILE] [options]``.

Exit codes: 0 ok, 1 input error, 2 unsupported construction, 3 search
failure, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .config import METHODS
from .errors import SeqCMError
from .jobs import COMMANDS, JobSpec, dumps, load_job, render_table, run_job, SCHEMA


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed {text} is not an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqcm",
        description="Filtrations, good systems of parameters and the p_F(M) invariant.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--job", help="JSON job file (not needed for 'example')")
    parser.add_argument("--seed", type=_u64, action="append",
                        help="sop search seed; repeat for several systems")
    parser.add_argument("--grid", type=_positive, help="grid bound for I values")
    parser.add_argument("--nmax", type=_positive, help="diagonal samples for the estimator")
    parser.add_argument("--modulus", type=_positive, help="prime field characteristic")
    parser.add_argument("--k", type=_positive, help="adjoined variables for flat-ext")
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--method", choices=METHODS, help="length computation")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def make_job(args) -> JobSpec:
    if args.job:
        job = load_job(args.job)
        if job.command != args.command:
            job.command = args.command
            job.__post_init__()
    elif args.command == "example":
        job = JobSpec("example")
    else:
        raise SystemExit(f"seqcm {args.command}: --job is required")
    for name in ("grid", "nmax", "modulus", "k", "method"):
        value = getattr(args, name)
        if value is not None:
            setattr(job, name, value)
    if args.seed:
        job.seeds = list(args.seed)
    return job


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        report = run_job(make_job(args))
    except (SeqCMError, ValueError) as exc:
        code = getattr(exc, "exit_code", 1)
        kind = type(exc).__name__
        if args.format == "json":
            print(json.dumps({"schema": SCHEMA, "error": {"type": kind, "message": str(exc),
                                                           "exit_code": code}}, indent=2))
        print(f"seqcm: {kind}: {exc}", file=sys.stderr)
        return code
    print(dumps(report) if args.format == "json" else render_table(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
