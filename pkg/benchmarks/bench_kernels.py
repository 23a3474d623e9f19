#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the four hot kernels on seeded configuration-model graphs and prints
a timing table plus speedups.  Usage:

    python benchmarks/bench_kernels.py [--n 20000] [--gamma 2.1] [--repeat 3]
"""
import argparse
import time

import numpy as np

from medusa.ensemble import EnsembleSpec, generate_scale_free
from medusa.graph import node_mask
from medusa.kernels import available_backends


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=20_000)
    parser.add_argument("--gamma", type=float, default=2.1)
    parser.add_argument("--kmin", type=int, default=1)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled kernels not built; benchmarking pure-python only")

    g = generate_scale_free(
        EnsembleSpec(n=args.n, gamma=args.gamma, k_min=args.kmin, seed=args.seed))
    print(f"graph: N={g.node_count} E={g.edge_count}\n")

    rng = np.random.default_rng(0)
    mask = node_mask(g, g.all_nodes())
    sources = rng.integers(0, g.node_count, size=50)
    order = rng.permutation(g.all_nodes()).astype(np.int32)

    jobs = {
        "core_numbers": lambda mod: mod.core_numbers(g.indptr, g.indices),
        "bfs_distances x50": lambda mod: [
            mod.bfs_distances(g.indptr, g.indices, int(s), mask) for s in sources],
        "component_labels": lambda mod: mod.component_labels(g.indptr, g.indices, mask),
        "box_cover (l_B=3)": lambda mod: mod.box_cover_assign(
            g.indptr, g.indices, mask, order, 2),
    }

    times = {}
    for job_name, job in jobs.items():
        for backend_name, mod in backends.items():
            times[(job_name, backend_name)] = bench(lambda: job(mod), args.repeat)

    width = max(len(j) for j in jobs)
    print(f"{'kernel':<{width}}  {'pure-python':>12}  {'compiled':>12}  {'speedup':>8}")
    for job_name in jobs:
        tp = times.get((job_name, "pure-python"))
        tc = times.get((job_name, "compiled"))
        if tc is None:
            print(f"{job_name:<{width}}  {tp:>11.4f}s  {'-':>12}  {'-':>8}")
        else:
            print(f"{job_name:<{width}}  {tp:>11.4f}s  {tc:>11.4f}s  {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
