"""``mmpx`` command line: gen, solve, verify, bench.

Exit codes: 0 success, 1 usage / parse / dimension error, 2 non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import worked
from .eigen import (
    DEFAULT_MAX_ITER,
    EigenPair,
    latin_eigenvalue,
    solve_fixedpoint,
    solve_latin,
    solve_power,
    verify_eigenpair,
)
from .errors import MMPXError, NonConvergence, ParseError
from .latin import VARIANTS, MaskKind, MaskSpec, build_system, random_pair, random_system
from .oracle import naive_apply_M
from .system import StateVector
from .textio import (
    format_report,
    format_state,
    format_system,
    format_trace,
    parse_state,
    parse_state_file,
    parse_system,
    parse_token,
)
from .tropical import fmt

EXIT_OK, EXIT_USAGE, EXIT_NONCONVERGENCE = 0, 1, 2

BENCH_COLUMNS = ("n", "seed", "variant", "algo", "lambda", "v", "s", "r",
                 "continuation_steps", "map_applications", "wall_time_ns", "verified")

SOLVERS = {"latin": solve_latin, "power": solve_power}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_max_iter() -> int:
    env = os.environ.get("MMPX_MAX_ITER")
    if env is None:
        return DEFAULT_MAX_ITER
    try:
        value = int(env)
    except ValueError:
        raise UsageError(f"MMPX_MAX_ITER must be an integer, got {env!r}") from None
    if value < 1:
        raise UsageError("MMPX_MAX_ITER must be positive")
    return value


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load_state(spec: str, sys_) -> StateVector:
    """``zeros``, ``file:<path>``, or an inline ``(u;w)`` literal."""
    if spec == "zeros":
        return sys_.zeros()
    if spec.startswith("file:"):
        target = spec[len("file:"):]
        if Path(target).exists():
            return sys_.check_state(parse_state_file(_read(target), sys_.m))
        if target.lstrip().startswith("("):
            return sys_.check_state(parse_state(target))
        raise UsageError(f"no such file: {target}")
    if spec.lstrip().startswith("("):
        return sys_.check_state(parse_state(spec))
    return sys_.check_state(parse_state_file(_read(spec), sys_.m))


def _write(path, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="ascii", newline="\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from exc


def cmd_gen(args) -> int:
    try:
        mask_a = MaskSpec.parse(args.maskA)
        mask_b = MaskSpec.parse(args.maskB)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if mask_a.kind is MaskKind.TAU:
        raise UsageError("--maskA must be none or eps:<k>; A cannot hold +inf")
    if mask_b.kind is MaskKind.EPS:
        raise UsageError("--maskB must be none or tau:<k>; B cannot hold -inf")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    LA, LB = random_pair(args.n, args.seed)
    system = build_system(LA, LB, mask_a, mask_b)
    _write(args.out, format_system(system))
    note = f"lambda: {fmt(latin_eigenvalue(system))}\n"
    (sys.stderr if args.out in (None, "-") else sys.stdout).write(note)
    return EXIT_OK


def _report(algorithm, pair, trace, wall_ns) -> dict:
    return {
        "algorithm": algorithm, "lambda": pair.lam, "m": pair.v.m, "n": pair.v.n,
        "s": trace.s, "r": trace.r, "c": trace.c,
        "continuation_steps": trace.continuation_steps,
        "map_applications": trace.map_applications,
        "wall_time_ns": wall_ns, "v": pair.v,
    }


def cmd_solve(args) -> int:
    system = parse_system(_read(args.system))
    x0 = _load_state(args.x0, system)
    max_iter = args.max_iter or default_max_iter()
    start = time.perf_counter_ns()
    try:
        if args.algorithm == "fixed":
            if args.lam is None:
                raise UsageError("--algorithm fixed requires --lambda")
            pair, trace = solve_fixedpoint(system, parse_token(args.lam), x0, max_iter)
        else:
            if args.lam is not None:
                raise UsageError("--lambda only applies to --algorithm fixed")
            pair, trace = SOLVERS[args.algorithm](system, x0, max_iter)
    except NonConvergence as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    wall = time.perf_counter_ns() - start
    if args.trace:
        _write(args.trace, format_trace(trace))
    sys.stdout.write(format_report(_report(args.algorithm, pair, trace, wall)))
    return EXIT_OK


def cmd_verify(args) -> int:
    system = parse_system(_read(args.system))
    v = _load_state(args.vector, system)
    lam = parse_token(args.lam)
    check = verify_eigenpair(system, EigenPair(lam, v))
    print("valid" if check.valid else "invalid")
    print(f"image: {format_state(check.image)}")
    print(f"residual: {format_state(StateVector.from_entries(check.residual.entries, system.m))}")
    ok = check.valid
    if args.oracle:
        agree = naive_apply_M(system.A, system.B, v) == check.image
        print(f"oracle: {'agree' if agree else 'disagree'}")
        ok = ok and agree
    return EXIT_OK if ok else EXIT_USAGE


def _bench_cell(cell):
    n, seed, variant, algo, max_iter = cell
    if variant == "example1":
        system, x0 = worked.system(), worked.START
    else:
        system = random_system(n, seed, variant)
        x0 = system.zeros()
    start = time.perf_counter_ns()
    try:
        pair, trace = SOLVERS[algo](system, x0, max_iter)
    except NonConvergence as exc:
        wall = time.perf_counter_ns() - start
        return [n, seed, variant, algo, "", "", "", "", "", exc.applications, wall, "false"]
    wall = time.perf_counter_ns() - start
    verified = verify_eigenpair(system, pair).valid
    return [n, seed, variant, algo, fmt(pair.lam), format_state(pair.v), trace.s, trace.r,
            trace.continuation_steps, trace.map_applications, wall,
            "true" if verified else "false"]


def bench_rows(sizes, seeds, variants, max_iter, include_example=False, jobs=1):
    cells = [(n, seed, variant, algo, max_iter)
             for n in sizes for seed in seeds for variant in variants for algo in SOLVERS]
    if include_example:
        cells += [(4, 0, "example1", algo, max_iter) for algo in SOLVERS]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_bench_cell, cells, chunksize=8))
    else:
        rows = [_bench_cell(c) for c in cells]
    rows.sort(key=lambda row: (row[0], row[1], row[2], row[3]))
    return rows


def _int_list(text: str):
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise UsageError("list must be non-empty")
    return values


def cmd_bench(args) -> int:
    sizes = _int_list(args.n)
    if any(n < 2 for n in sizes):
        raise UsageError("bench sizes must be at least 2")
    if args.seeds < 1:
        raise UsageError("--seeds must be at least 1")
    variants = sorted(VARIANTS) if args.variants == "all" else args.variants.split(",")
    unknown = [v for v in variants if v not in VARIANTS]
    if unknown:
        raise UsageError(f"unknown variants {unknown}; choose from {sorted(VARIANTS)} or 'all'")
    rows = bench_rows(sizes, range(args.seeds), variants, args.max_iter or default_max_iter(),
                      include_example=args.example, jobs=args.jobs)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    writer.writerows(rows)
    _write(args.out, buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mmpx", description="Eigenpairs of bipartite min-max-plus systems.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a system built from two random Latin squares")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--maskA", default="none", help="none or eps:<k>")
    p.add_argument("--maskB", default="none", help="none or tau:<k>")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="compute an eigenpair")
    p.add_argument("system")
    p.add_argument("--algorithm", choices=("latin", "power", "fixed"), default="latin")
    p.add_argument("--lambda", dest="lam", help="eigenvalue for --algorithm fixed")
    p.add_argument("--x0", default="zeros", help="zeros, file:<path>, or (u1,..;w1,..)")
    p.add_argument("--max-iter", type=int, help="cap on map applications per phase")
    p.add_argument("--trace", help="write the iteration trace here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check M(v) = lambda + v")
    p.add_argument("system")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("vector", help="state vector file or (u1,..;w1,..)")
    p.add_argument("--oracle", action="store_true", help="also cross-check with the naive map")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="compare the latin and power solvers")
    p.add_argument("--n", default="4,6,8", help="comma-separated orders")
    p.add_argument("--seeds", type=int, default=10, help="seeds 0..SEEDS-1")
    p.add_argument("--variants", default="case4", help="comma list of case1..case4, or all")
    p.add_argument("--max-iter", type=int)
    p.add_argument("--example", action="store_true", help="add the order-4 worked example rows")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_iter", None) is not None and args.max_iter < 1:
        print("mmpx: error: --max-iter must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, MMPXError, ValueError) as exc:
        kind = "parse error" if isinstance(exc, ParseError) else "error"
        print(f"mmpx: {kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
