#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-Python one.

The hot path is the Delorme oracle: building semigroup membership tables
and scanning them once per generator.  The closed-form recursion barely
touches the kernels, so the interesting comparison is oracle runs and the
differential sweep.

Usage: python benchmarks/bench_kernels.py [--sweep-max 100] [--repeat 5]
"""

import argparse
import time
from math import gcd

from planebranch import kernels, verify
from planebranch.delorme import run_accelerated, run_naive
from planebranch.semigroup import Semigroup


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def scenarios(sweep_max):
    big = Semigroup(122, 281)
    coprime = [
        (p, m)
        for p in range(3, sweep_max)
        for m in range(p + 1, sweep_max + 1)
        if gcd(p, m) == 1
    ]

    def table_build(kern):
        kern.semigroup_table(big.p, big.m, big.pm + big.p + big.m)

    def naive_big(kern):
        run_naive(big, kernel=kern)

    def accel_big(kern):
        run_accelerated(big, kernel=kern)

    def oracle_sweep(kern):
        for p, m in coprime:
            sg = Semigroup(p, m)
            run_naive(sg, kernel=kern)
            run_accelerated(sg, kernel=kern)

    def full_verify_sweep(kern):
        for p, m in coprime:
            check = verify.verify_pair(p, m, kernel=kern)
            assert check.ok, (p, m)

    return [
        ("semigroup table <122,281>", table_build),
        ("naive oracle <122,281>", naive_big),
        ("accelerated oracle <122,281>", accel_big),
        (f"oracle sweep p<m<={sweep_max}", oracle_sweep),
        (f"full verify sweep p<m<={sweep_max}", full_verify_sweep),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sweep-max", type=int, default=100)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backs = kernels.backends()
    names = [k.NAME for k in backs]
    print(f"backends: {', '.join(names)} (active: {kernels.active.NAME})")
    if len(backs) < 2:
        print("note: compiled backend unavailable, timing the fallback only")

    rows = []
    for label, fn in scenarios(args.sweep_max):
        times = {k.NAME: best_of(lambda k=k: fn(k), args.repeat) for k in backs}
        rows.append((label, times))

    width = max(len(label) for label, _ in rows)
    header = f"{'scenario':<{width}}" + "".join(f"  {n:>12}" for n in names)
    if len(names) == 2:
        header += f"  {'ratio':>8}"
    print(header)
    for label, times in rows:
        line = f"{label:<{width}}"
        for n in names:
            line += f"  {times[n] * 1e3:>10.3f}ms"
        if len(names) == 2:
            a, b = (times[n] for n in names)
            line += f"  {b / a:>7.2f}x"
        print(line)


if __name__ == "__main__":
    main()
