"""Timing comparison: jitted kernel vs the interpreted fallback.

Runs the same solves under both backends and prints a speedup table.
The first jitted call pays the compile cost, so each backend gets one
untimed warm-up before measurement.

    python3 benchmarks/bench_search.py
"""

import os
import time

from edgespectra.backend import ENV_VAR
from edgespectra.graphs import build_complete_bipartite
from edgespectra.search import count_colorings, mu2, sweep_linear_forest


def task_full_table():
    g = build_complete_bipartite(3, 3)
    for t in range(3, 10):
        mu2(g, t)


def task_count():
    count_colorings(build_complete_bipartite(3, 3), 5)


def task_bijective_sweep():
    sweep_linear_forest(build_complete_bipartite(3, 2))


TASKS = [
    ("mu2 across full t-range, K_{3,3}", task_full_table),
    ("count all 5-colorings, K_{3,3}", task_count),
    ("linear-forest sweep, K_{3,2}", task_bijective_sweep),
]


def run_backend(name):
    os.environ[ENV_VAR] = name
    mu2(build_complete_bipartite(2, 2), 3)  # warm-up / compile
    times = []
    for _, fn in TASKS:
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return times


def main():
    py = run_backend("python")
    nb = run_backend("numba")
    width = max(len(label) for label, _ in TASKS)
    print(f"{'task':<{width}}  {'python':>10}  {'numba':>10}  {'speedup':>8}")
    print("-" * (width + 34))
    for (label, _), tp, tn in zip(TASKS, py, nb):
        ratio = tp / tn if tn > 0 else float("inf")
        print(f"{label:<{width}}  {tp:>9.4f}s  {tn:>9.4f}s  {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
