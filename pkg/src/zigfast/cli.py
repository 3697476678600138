"""Command line surface: zigfast tables|gen|quality|bench|pathstats.

Exit codes: 0 success, 1 statistical failure (quality gate), 2 operational
failure.  --seed wins over the ZIGFAST_SEED environment variable, which wins
over time/PID auto-seeding.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import tableio
from .bench import ALGORITHMS, run_bench
from .densities import EXPONENTIAL, HALF_NORMAL
from .errors import ZigfastError
from .quality import make_sampler, run_quality
from .tables import build_tables, verify_tables
from .traditional import TraditionalExpSampler, TraditionalNormalSampler
from .uniform import UniformSource

_DIST_KIND = {"exp": EXPONENTIAL, "normal": HALF_NORMAL}

OK, STAT_FAIL, OP_FAIL = 0, 1, 2


def _add_seed(p):
    p.add_argument("--seed", type=int, default=None,
                   help="u64 seed (default: ZIGFAST_SEED env, else auto)")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zigfast")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="build, write, or check lookup tables")
    p.add_argument("--dist", choices=("exp", "normal"), default="exp")
    p.add_argument("--imax", type=int, default=256)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--out", default=None, help="write the table file here")
    p.add_argument("--format", choices=("json", "binary"), default="json")
    p.add_argument("--check", default=None, metavar="PATH",
                   help="verify an existing table file against quadrature instead")

    p = sub.add_parser("gen", help="stream variates to stdout or a file")
    p.add_argument("--dist", choices=("exp", "normal"), default="exp")
    p.add_argument("-n", type=int, required=True)
    _add_seed(p)
    p.add_argument("--format", choices=("text", "f64le"), default="text")
    p.add_argument("--out", default=None)

    p = sub.add_parser("quality", help="raw-moment statistical gate")
    p.add_argument("--dist", choices=("exp", "normal"), default="exp")
    p.add_argument("-n", type=int, default=10**8)
    _add_seed(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("bench", help="generate-and-aggregate timing comparison")
    p.add_argument("--algorithms", default="modified,traditional",
                   help="comma list from: modified, traditional")
    p.add_argument("--dist", choices=("exp", "normal"), default="exp")
    p.add_argument("-n", type=int, default=10**8)
    p.add_argument("--trials", type=int, default=3)
    _add_seed(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("pathstats", help="per-path hit fractions")
    p.add_argument("--dist", choices=("exp", "normal"), default="exp")
    p.add_argument("-n", type=int, default=10**7)
    _add_seed(p)
    p.add_argument("--traditional", action="store_true",
                   help="report the traditional baseline instead")
    return ap


def _cmd_tables(args) -> int:
    if args.check:
        t = tableio.load(args.check)
        problems = verify_tables(t)
        if problems:
            for msg in problems:
                print(f"violation: {msg}")
            return OP_FAIL
        print(f"{args.check}: ok ({t.distribution}, i_max={t.i_max}, L_max={t.l_max})")
        return OK
    kind = _DIST_KIND[args.dist]
    t = build_tables(kind, args.imax, args.tol)
    raw_total = t.total_mass * (t.i_max - t.l_max) / t.i_max
    print(f"L_max {t.l_max}")
    print(f"overhang_mass {raw_total:.17g}")
    print(f"epsilon_max {t.epsilon_max:.17g}")
    if args.out:
        tableio.save(t, args.out, fmt=args.format)
        print(f"wrote {args.out}")
    return OK


def _cmd_gen(args) -> int:
    if args.n < 0:
        print("n must be >= 0", file=sys.stderr)
        return OP_FAIL
    sampler = make_sampler(args.dist, args.seed)
    sink = open(args.out, "wb") if args.out else sys.stdout.buffer
    try:
        chunk = 1 << 20
        left = args.n
        while left > 0:
            vals = sampler.fill(min(chunk, left))
            if args.format == "f64le":
                sink.write(vals.astype("<f8", copy=False).tobytes())
            else:
                sink.write("".join(f"{v:.17g}\n" for v in vals).encode())
            left -= len(vals)
        sink.flush()
    finally:
        if args.out:
            sink.close()
    return OK


def _cmd_quality(args) -> int:
    report = run_quality(args.dist, args.n, seed=args.seed, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=1))
    else:
        print(report.format_text())
    return OK if report.passed else STAT_FAIL


def _cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    bad = set(algos) - set(ALGORITHMS)
    if bad or not algos:
        print(f"unknown algorithms: {sorted(bad)}", file=sys.stderr)
        return OP_FAIL
    reports = run_bench(algos, args.dist, args.n, trials=args.trials, seed=args.seed)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=1))
    else:
        for r in reports:
            line = (f"{r.algorithm:<12} {r.distribution:<6} n={r.n} "
                    f"median={r.median_seconds:.6f}s "
                    f"throughput={r.throughput:.3e}/s")
            if r.speedup_vs_baseline is not None:
                line += f" speedup={r.speedup_vs_baseline:.2f}x"
            print(line)
    return OK


def _cmd_pathstats(args) -> int:
    source = UniformSource(args.seed)
    if args.traditional:
        sampler = (TraditionalExpSampler(source=source) if args.dist == "exp"
                   else TraditionalNormalSampler(source=source))
        sampler.fill_counted(args.n)
        c = sampler.path_counts
        print(f"rounds {c.byte_draws}")
        print(f"fast_accept_fraction {c.common / c.byte_draws:.6f}")
        print(f"reject_test_fraction {c.overhang_fast / c.byte_draws:.6f}")
        print(f"tail_fraction {c.band_evals / c.byte_draws:.6f}")
        return OK
    sampler = make_sampler(args.dist, args.seed)
    chunk = 1 << 20
    left = args.n
    while left > 0:
        sampler.fill_counted(min(chunk, left))
        left -= min(chunk, left)
    c = sampler.path_counts
    print(f"byte_draws {c.byte_draws}")
    print(f"common_fraction {c.common_fraction:.6f}")
    print(f"overhang_fast_fraction {c.overhang_fast / c.byte_draws:.6f}")
    print(f"band_eval_fraction_of_attempts {c.band_eval_fraction:.6f}")
    print(f"tail_fraction {c.tail_fraction:.6f}")
    expected_tail = (sampler.tables.i_max - sampler.tables.l_max) / sampler.tables.i_max \
        * float(sampler.tables.a[0])
    print(f"expected_tail_fraction {expected_tail:.6f}")
    return OK


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    handler = {
        "tables": _cmd_tables,
        "gen": _cmd_gen,
        "quality": _cmd_quality,
        "bench": _cmd_bench,
        "pathstats": _cmd_pathstats,
    }[args.command]
    try:
        return handler(args)
    except (ZigfastError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return OP_FAIL


if __name__ == "__main__":
    sys.exit(main())
