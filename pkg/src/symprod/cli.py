"""Command-line front end.

Subcommands: dist, canon, lift, holonomy, lemmas, bench.  Exit codes:
0 success, 1 invariant violation (or failed checks), 2 input error,
3 undersampled loop.  Randomized commands take --seed, falling back to
the SYMPROD_SEED environment variable, then to 0.
"""

from __future__ import annotations

import argparse
import os
import statistics
import sys
import time

import numpy as np

from . import fieldfile
from .core import BRUTE_FORCE_CAP
from .errors import InputError, InvariantViolation, UndersampledLoopError
from .lemmas import run_lemma_suite
from .metric import dist
from .monodromy import describe_cycles, roots_loop_generator, track_loop
from .selection import canonicalize, continuity_report, lift_field

LIFT_RATIO_TOL = 1e-6


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def parse_tuple_text(text: str) -> np.ndarray:
    """Parse "1,5" or "1+2j,-1j" into a real or complex vector."""
    entries = [e.strip() for e in text.split(",") if e.strip()]
    if not entries:
        raise InputError(f"empty tuple: {text!r}")
    values = []
    any_complex = False
    for entry in entries:
        try:
            values.append(float(entry))
            continue
        except ValueError:
            pass
        try:
            values.append(complex(entry.replace("i", "j")))
            any_complex = True
        except ValueError:
            raise InputError(f"cannot parse component {entry!r}") from None
    dtype = complex if any_complex else float
    return np.asarray(values, dtype=dtype)


def _parse_n_values(text: str) -> list[int]:
    """Accept "4", "2..6", or "2,3,5"."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(part) for part in text.split(",")]
    except ValueError:
        raise InputError(f"cannot parse n range {text!r} (use e.g. 4, 2..6, or 2,3,5)") from None
    if not values or any(v < 1 for v in values):
        raise InputError(f"invalid n range {text!r}")
    return values


def _resolve_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("SYMPROD_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"SYMPROD_SEED must be an integer, got {env!r}") from None
    return 0


def _cmd_dist(args) -> int:
    if args.file is not None:
        if args.a is not None or args.b is not None:
            raise InputError("give either --file or --a/--b, not both")
        with open(args.file, "r", encoding="utf-8") as handle:
            lines = [line.strip() for line in handle if line.strip()]
        if len(lines) != 2:
            raise InputError(f"{args.file}: expected exactly two tuple lines, got {len(lines)}")
        a, b = parse_tuple_text(lines[0]), parse_tuple_text(lines[1])
    else:
        if args.a is None or args.b is None:
            raise InputError("need --a and --b (or --file)")
        a, b = parse_tuple_text(args.a), parse_tuple_text(args.b)
    engine = args.engine
    result = dist(a, b, engine=engine)
    if engine == "auto":
        engine = "assignment" if (np.iscomplexobj(a) or np.iscomplexobj(b)) else "sorted"
    print(f"distance = {_fmt(result.value)}")
    print(f"engine = {engine}")
    print("minimizer = " + ",".join(str(i) for i in result.attaining_perm))
    return 0


def _cmd_canon(args) -> int:
    values = parse_tuple_text(args.t)
    if np.iscomplexobj(values):
        raise InputError("canon is defined for real tuples only")
    print(",".join(_fmt(v) for v in canonicalize(values)))
    return 0


def _cmd_lift(args) -> int:
    in_path = args.input
    if args.csv or str(in_path).endswith(".csv"):
        doc = fieldfile.read_csv_field(in_path)
    else:
        doc = fieldfile.read_field_file(in_path)
    if doc.complex_mode:
        raise InputError(
            "complex-mode input cannot be lifted by sorting; use `symprod holonomy` "
            "to track components around a loop instead"
        )
    field = doc.to_sampled_field()
    lifted = lift_field(field)
    fieldfile.write_lifted_file(args.output, lifted, adjacency_spec=doc.adjacency_spec)
    report = continuity_report(lifted, field)
    print(
        f"max_ratio = {_fmt(report.max_ratio)} worst_edge = {report.worst_edge} "
        f"(ratio edges: {report.ratio_edges}, equal-class edges: {report.zero_edges})",
        file=sys.stderr,
    )
    if abs(report.max_ratio - 1.0) > LIFT_RATIO_TOL:
        raise InvariantViolation(
            f"sorted lift must be an isometry; max_ratio = {report.max_ratio!r}"
        )
    return 0


def _cmd_holonomy(args) -> int:
    if args.input is not None:
        if args.k is not None:
            raise InputError("give either --input or --k/--steps, not both")
        doc = fieldfile.read_field_file(args.input)
        loop = doc.to_loop()
    else:
        if args.k is None or args.steps is None:
            raise InputError("need --k and --steps (or --input)")
        loop = roots_loop_generator(args.k, args.steps, radius=args.radius)
    holonomy = track_loop(loop)
    print(f"cycle type = {describe_cycles(holonomy.permutation)}")
    print(f"total cost = {_fmt(holonomy.total_path_cost)}")
    print(f"steps = {loop.step_count}")
    return 0


def _cmd_lemmas(args) -> int:
    n_values = _parse_n_values(args.n)
    seed = _resolve_seed(args.seed)
    results = run_lemma_suite(
        n_values=n_values,
        trials=args.trials,
        seed=seed,
        fault=args.inject_fault,
        grid_trials=args.grid_trials,
    )
    width = max(len(r.name) for r in results)
    print(f"{'check':<{width}}  n  trials  violations  status")
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.name:<{width}}  {r.n}  {r.trials:>6}  {r.violations:>10}  {status}")
    failed = sum(1 for r in results if not r.passed)
    if failed:
        print(f"{failed} check(s) FAILED (seed = {seed})", file=sys.stderr)
        return 1
    print(f"all {len(results)} checks passed (seed = {seed})")
    return 0


def _cmd_bench(args) -> int:
    n_values = _parse_n_values(args.n)
    seed = _resolve_seed(args.seed)
    rng = np.random.default_rng(seed)
    mismatch = False
    print("n engine median_ms value")
    for n in n_values:
        y = rng.uniform(-10.0, 10.0, size=n)
        z = rng.uniform(-10.0, 10.0, size=n)
        engines = ["sorted", "assignment"] + (["brute"] if n <= BRUTE_FORCE_CAP else [])
        values = {}
        for engine in engines:
            times = []
            for _ in range(args.reps):
                start = time.perf_counter()
                result = dist(y, z, engine=engine)
                times.append(time.perf_counter() - start)
            values[engine] = result.value
            print(f"{n} {engine} {statistics.median(times) * 1e3:.3f} {_fmt(result.value)}")
        if "brute" in values:
            worst = max(abs(values[e] - values["brute"]) for e in engines)
            agree = worst <= 1e-9
            print(f"{n} cross-check {'ok' if agree else 'MISMATCH'} (max deviation {worst:.3e})")
            mismatch = mismatch or not agree
    if mismatch:
        raise InvariantViolation("engines disagree beyond 1e-9 on benchmark inputs")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symprod",
        description="Distances, sorted selections, and loop holonomy for unordered tuples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="distance between two unordered tuples")
    p.add_argument("--a", help='first tuple, e.g. "1,5" or "1+2j,-1j"')
    p.add_argument("--b", help="second tuple")
    p.add_argument("--file", help="file with the two tuples on two lines")
    p.add_argument(
        "--engine",
        choices=["auto", "sorted", "assignment", "brute"],
        default="auto",
        help="auto picks sorted for real input, assignment for complex",
    )
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("canon", help="sorted representative of a real tuple")
    p.add_argument("--t", required=True, help='tuple, e.g. "3,1,2"')
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("lift", help="sort a sampled field pointwise and check the step ratios")
    p.add_argument("--input", required=True, help="JSON-lines field file (or CSV with --csv)")
    p.add_argument("--output", required=True, help="where to write the lifted JSON-lines file")
    p.add_argument("--csv", action="store_true", help="read the input as CSV")
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("holonomy", help="track components of a complex loop")
    p.add_argument("--k", type=int, help="track the k-th roots of a circling point")
    p.add_argument("--steps", type=int, help="number of loop samples")
    p.add_argument("--radius", type=float, default=1.0, help="radius of the base circle")
    p.add_argument("--input", help="complex-mode JSON-lines loop file instead of --k/--steps")
    p.set_defaults(func=_cmd_holonomy)

    p = sub.add_parser("lemmas", help="run the diagonal-set property suite")
    p.add_argument("--n", default="2..6", help='tuple sizes: "4", "2..6", or "2,3,5"')
    p.add_argument("--trials", type=int, default=500, help="trials per check per size")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (default: SYMPROD_SEED or 0)")
    p.add_argument("--grid-trials", type=int, default=None, help="trials for the grid-oracle check")
    p.add_argument("--inject-fault", default=None, help=argparse.SUPPRESS)  # CI mutation check
    p.set_defaults(func=_cmd_lemmas)

    p = sub.add_parser("bench", help="time the distance engines and cross-check values")
    p.add_argument("--n", default="2..7", help='tuple sizes: "4", "2..6", or "2,3,5"')
    p.add_argument("--reps", type=int, default=5, help="repetitions per timing")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (default: SYMPROD_SEED or 0)")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UndersampledLoopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
