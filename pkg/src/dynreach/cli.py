"""Command-line harness.

    dynreach run STREAM [--checked] [--timings]
    dynreach gen --n N --ops K --mix I,D,Q --seed S --model M
    dynreach bench STREAM
    dynreach dump-tcm STREAM

Exit status: 0 success, 1 parse/validation error, 2 check failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import benchmark
from .errors import CheckFailure, InvalidArgument, StreamError
from .stream import make_oracle, parse_stream, run_stream
from .workload import MODELS, generate_workload

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _mix(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("mix is three comma-separated probabilities")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad mix {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dynreach", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("run", help="replay a stream, print one line per query")
    p.add_argument("file")
    p.add_argument("--checked", action="store_true", help="diff every step against brute force")
    p.add_argument("--timings", action="store_true", help="append wall-clock totals to the summary")

    p = sub.add_parser("gen", help="write a random stream to stdout")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ops", type=int, required=True)
    p.add_argument("--mix", type=_mix, default=(0.4, 0.3, 0.3))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--model", choices=MODELS, default=MODELS[0])

    p = sub.add_parser("bench", help="compare against recomputing the closure after every update")
    p.add_argument("file")

    p = sub.add_parser("dump-tcm", help="replay a stream and print the witness matrix")
    p.add_argument("file")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.verb == "gen":
            out.write(generate_workload(args.n, args.ops, args.mix, args.seed, args.model))
            return EXIT_OK
        commands = parse_stream(_read(args.file))
        if args.verb == "run":
            report = run_stream(commands, "checked" if args.checked else "fast")
            out.write(report.render(timings=args.timings))
        elif args.verb == "bench":
            out.write(benchmark(commands).render())
        else:
            oracle = make_oracle(commands)
            run_stream(commands, oracle=oracle)
            out.write(oracle.tcm.dump() + "\n")
    except (StreamError, InvalidArgument, OSError) as exc:
        print(f"dynreach: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CheckFailure as exc:
        print(f"dynreach: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
