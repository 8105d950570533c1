#!/usr/bin/env python3
"""Benchmark the exhaustive-enumeration kernel: compiled core vs fallback.

The hot loop of the whole package is the closed-subset search behind the
oracle sweeps (H(6) and osp(6|2) walk a 3^13-state space).  This script
times both engines on the same inputs and checks they agree.

    python bench/bench_kernel.py [--repeat N]
"""

import argparse
import time
import warnings

from supercomin import kernel
from supercomin.parabolic import closure_rows
from supercomin.rootsys import build_root_system
from supercomin.verify import oracle_counts

INSTANCES = [("H", (6,)), ("osp", (6, 2)), ("W", (3,)), ("sl", (3, 2)),
             ("H", (5,)), ("p", (3,))]


def units_of(rs):
    pairs, singles, done = [], [], set()
    for i in range(len(rs)):
        if i in done:
            continue
        j = rs.neg[i]
        if j is None:
            singles.append(i)
            done.add(i)
        else:
            pairs.append((i, j))
            done.update((i, j))
    return pairs, singles


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    warnings.filterwarnings("ignore")

    if not kernel.COMPILED_AVAILABLE:
        print("compiled core unavailable; build it with "
              "`python setup.py build_ext --inplace` to compare engines")
    print(f"{'instance':<12} {'subsets':>8} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for fam, par in INSTANCES:
        rs = build_root_system(fam, par)
        rows = closure_rows(rs)
        pairs, singles = units_of(rs)

        def run(force_pure):
            best = None
            out = None
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                out = kernel.enumerate_closed(len(rs), pairs, singles, rows,
                                              force_pure=force_pure)
                dt = time.perf_counter() - t0
                best = dt if best is None or dt < best else best
            return best, out

        t_pure, out_pure = run(True)
        if kernel.COMPILED_AVAILABLE:
            t_comp, out_comp = run(False)
            assert sorted(out_pure) == sorted(out_comp)
            print(f"{fam}{par!s:<9} {len(out_pure):>8} {t_pure * 1e3:>9.2f}ms "
                  f"{t_comp * 1e3:>9.2f}ms {t_pure / t_comp:>7.1f}x")
        else:
            print(f"{fam}{par!s:<9} {len(out_pure):>8} {t_pure * 1e3:>9.2f}ms "
                  f"{'-':>10} {'-':>8}")

    print("\nend-to-end oracle H(6) (enumeration + lifts + verdicts):")
    t0 = time.perf_counter()
    counts = oracle_counts("H", (6,))
    print(f"  {time.perf_counter() - t0:.2f}s  {counts['parabolic']} parabolic, "
          f"{counts['cominuscule']} cominuscule [{kernel.engine_name()} engine]")


if __name__ == "__main__":
    main()
