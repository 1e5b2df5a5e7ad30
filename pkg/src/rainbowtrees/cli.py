"""Command-line front end.

Subcommands: gen (emit a coloring), build (pack trees from a coloring),
verify (referee a coloring/forest/trace triple), oracle (exhaustive counts on
tiny instances), bench (timing sweep). Exit status: 0 success or pass, 1
verification failure, 2 usage or input error, 3 internal-invariant violation
(a bug; the partial trace is dumped and its path printed).
"""

from __future__ import annotations

import argparse
import json
import sys
import tempfile
import time

from .coloring import (
    canonical_json_bytes,
    parse_coloring,
    permuted_round_robin,
    round_robin,
    serialize_coloring,
)
from .constructor import (
    MAX_INDEX,
    MIN_INDEX,
    SelectionPolicy,
    build_forest,
    omega,
    random_policy,
    trace_from_jsonl,
    trace_to_jsonl,
)
from .errors import InputError, InternalInvariantError, SwapError
from .forest import forest_to_json, parse_forest
from .oracle import (
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_PACKING_CAP,
    enumerate_rainbow_spanning_trees,
    max_disjoint_rainbow_trees,
)
from .verifier import verify_all

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be a positive integer")
    return value


def _policy_from_args(args) -> SelectionPolicy:
    if args.policy == "min":
        return MIN_INDEX
    if args.policy == "max":
        return MAX_INDEX
    return random_policy(args.seed if args.seed is not None else 0)


def _write(path: str | None, payload: bytes) -> None:
    if path is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as handle:
            handle.write(payload)


def _read(path: str) -> bytes:
    with open(path, "rb") as handle:
        return handle.read()


def cmd_gen(args) -> int:
    if args.permute_seed is None:
        coloring = round_robin(args.m)
    else:
        coloring = permuted_round_robin(args.m, args.permute_seed)
    _write(args.output, serialize_coloring(coloring))
    return EXIT_OK


def cmd_build(args) -> int:
    coloring = parse_coloring(_read(args.input))
    policy = _policy_from_args(args)
    try:
        forest, trace = build_forest(coloring, policy=policy, trace_on=True)
    except (SwapError, InternalInvariantError) as exc:
        trace = getattr(exc, "trace", None)
        dump_path = args.trace
        if trace is not None:
            if dump_path is None:
                handle = tempfile.NamedTemporaryFile(
                    mode="wb", suffix=".trace.jsonl", delete=False
                )
                dump_path = handle.name
                handle.write(trace_to_jsonl(trace))
                handle.close()
            else:
                _write(dump_path, trace_to_jsonl(trace))
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        if dump_path is not None:
            print(f"trace dumped to {dump_path}", file=sys.stderr)
        return EXIT_INTERNAL
    _write(args.output, forest_to_json(forest))
    if args.trace is not None:
        _write(args.trace, trace_to_jsonl(trace))
    return EXIT_OK


def cmd_verify(args) -> int:
    coloring = parse_coloring(_read(args.input))
    forest = parse_forest(_read(args.forest))
    trace = None
    if args.trace is not None:
        trace = trace_from_jsonl(_read(args.trace), m=coloring.m)
    report = verify_all(coloring, forest, trace)
    sys.stdout.buffer.write(report.to_json())
    sys.stdout.buffer.flush()
    return EXIT_OK if report.verdict else EXIT_VERIFY_FAIL


def cmd_oracle(args) -> int:
    coloring = parse_coloring(_read(args.input))
    enum_cap = args.cap if args.cap is not None else DEFAULT_ENUMERATION_CAP
    pack_cap = args.cap if args.cap is not None else DEFAULT_PACKING_CAP
    # the packing cap is the tighter one; let it reject before any search runs
    packing = max_disjoint_rainbow_trees(coloring, max_vertices=pack_cap)
    trees = enumerate_rainbow_spanning_trees(coloring, max_vertices=enum_cap)
    sys.stdout.buffer.write(
        canonical_json_bytes({"count": len(trees), "max_disjoint": packing})
    )
    sys.stdout.buffer.flush()
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.m_to < args.m_from:
        print("error: --m-to must be at least --m-from", file=sys.stderr)
        return EXIT_INPUT
    rows = ["m,omega,trees_built,build_micros,verify_pass,min_candidate_slack"]
    for m in range(args.m_from, args.m_to + 1):
        coloring = round_robin(m)
        best_micros = None
        forest = trace = None
        for _ in range(args.reps):
            t0 = time.perf_counter()
            forest, trace = build_forest(coloring, policy=MIN_INDEX, trace_on=True)
            micros = int((time.perf_counter() - t0) * 1e6)
            if best_micros is None or micros < best_micros:
                best_micros = micros
        report = verify_all(coloring, forest, trace)
        slacks = [
            len(set(st.candidates_before) - set().union(*map(set, st.eliminated.values()))) - 1
            for rt in trace.rounds
            for st in rt.steps
        ]
        slack = str(min(slacks)) if slacks else ""
        rows.append(
            f"{m},{omega(m)},{len(forest.trees)},{best_micros},"
            f"{'true' if report.verdict else 'false'},{slack}"
        )
    payload = ("\n".join(rows) + "\n").encode("utf-8")
    _write(args.csv, payload)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowtrees",
        description="Pack edge-disjoint rainbow spanning trees out of properly "
        "edge-colored complete graphs, and verify the result exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a proper coloring document")
    p_gen.add_argument("--m", type=_positive_int, required=True, help="half the vertex count")
    p_gen.add_argument(
        "--scheme",
        choices=["round-robin"],
        default="round-robin",
        help="generation scheme (round-robin is the only one)",
    )
    p_gen.add_argument(
        "--permute-seed",
        type=int,
        default=None,
        help="scramble vertices and colors with this seed",
    )
    p_gen.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_build = sub.add_parser("build", help="construct the packed forest")
    p_build.add_argument("-i", "--input", required=True, help="coloring document")
    p_build.add_argument("-o", "--output", default=None, help="forest output path")
    p_build.add_argument(
        "--policy", choices=["min", "max", "random"], default="min", help="selection policy"
    )
    p_build.add_argument("--seed", type=int, default=None, help="seed for --policy random")
    p_build.add_argument("--trace", default=None, help="also write the trace (JSON lines)")
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser("verify", help="referee a coloring/forest/trace triple")
    p_verify.add_argument("-i", "--input", required=True, help="coloring document")
    p_verify.add_argument("-f", "--forest", required=True, help="forest document")
    p_verify.add_argument("-t", "--trace", default=None, help="trace file (optional)")
    p_verify.set_defaults(func=cmd_verify)

    p_oracle = sub.add_parser("oracle", help="exhaustive counts on a tiny instance")
    p_oracle.add_argument("-i", "--input", required=True, help="coloring document")
    p_oracle.add_argument(
        "--cap",
        type=_positive_int,
        default=None,
        help="vertex cap for both searches (defaults: "
        f"{DEFAULT_ENUMERATION_CAP} enumeration, {DEFAULT_PACKING_CAP} packing)",
    )
    p_oracle.set_defaults(func=cmd_oracle)

    p_bench = sub.add_parser("bench", help="timing sweep over round-robin instances")
    p_bench.add_argument("--m-from", type=_positive_int, required=True)
    p_bench.add_argument("--m-to", type=_positive_int, required=True)
    p_bench.add_argument("--reps", type=_positive_int, default=1)
    p_bench.add_argument("--csv", default=None, help="CSV output path (default stdout)")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
