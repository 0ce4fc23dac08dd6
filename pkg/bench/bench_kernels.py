#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure Python fallback.

Covers the three hot paths on realistic workloads: word reduction on a
million-letter axis word, taut-diagram construction plus crossing counts on
the two largest consecutive axis rays, and the carousel rewrite behind the
translation element.

    python3 bench/bench_kernels.py [--quick]
"""

import argparse
import time

import raylab.kernels as K
from raylab import axes, mcg, tight
from raylab.kernels import load_backend
from raylab.model import build_model

KERNEL_NAMES = (
    "cancel_adjacent",
    "prepare_rank_context",
    "sort_slots",
    "count_cross_pairs",
    "count_self_pairs",
    "exchange_pass",
)


def _use(impl):
    for name in KERNEL_NAMES:
        setattr(K, name, getattr(impl, name))


def _time(fn, repeat=1):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()

    k_reduce = 10 if args.quick else 12
    k_pair = 8 if args.quick else 9
    k_twist = 6 if args.quick else 8

    model = build_model(16)
    m12 = build_model(12)
    noisy = list(axes.alpha_word(k_reduce))
    noisy = [x for pair in zip(noisy, noisy) for x in pair]  # all cancels
    pair = (axes.alpha(model, k_pair), axes.alpha(model, k_pair + 1))
    twist_src = axes.alpha(m12, k_twist)
    h = mcg.named("h")

    workloads = [
        (f"reduce 2x|alpha_{k_reduce}| letters",
         lambda: K.cancel_adjacent(noisy)),
        (f"taut pair alpha_{k_pair}/alpha_{k_pair + 1}",
         lambda: tight.geometric_intersection(model, *pair)),
        (f"carousel h on alpha_{k_twist}",
         lambda: mcg.apply(h, twist_src, m12)),
    ]

    backends = []
    for name in ("pure", "cython"):
        try:
            backends.append((name, load_backend(name)))
        except Exception:
            print(f"backend {name}: unavailable")

    results = {}
    for bname, impl in backends:
        _use(impl)
        for wname, fn in workloads:
            fn()  # warm caches
            results[(bname, wname)] = _time(fn)

    width = max(len(w) for w, _ in workloads)
    print(f"{'workload':<{width}}  " + "  ".join(f"{b:>10}" for b, _ in backends)
          + ("     speedup" if len(backends) == 2 else ""))
    for wname, _ in workloads:
        row = [results[(b, wname)] for b, _ in backends]
        line = f"{wname:<{width}}  " + "  ".join(f"{v:>9.3f}s" for v in row)
        if len(row) == 2 and row[1] > 0:
            line += f"  {row[0] / row[1]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
