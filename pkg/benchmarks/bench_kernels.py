#!/usr/bin/env python3
"""Compare the compiled partition kernel with its pure-Python twin.

Each workload computes the graded vector-partition polynomial at a multiple
of the highest root, on a freshly built engine (cold memo), best of three.
The two kernels are bitwise-identical in output; only speed differs.

Run after installing the package:  python3 benchmarks/bench_kernels.py
"""

import time

from qweights.root_system import build_root_system
from qweights._partition_py import PartitionEngine as PurePartitionEngine

try:
    from qweights._partition_cy import PartitionEngine as CompiledPartitionEngine
except ImportError:
    CompiledPartitionEngine = None

WORKLOADS = [
    ("B3", 3),
    ("C3", 3),
    ("D4", 2),
    ("G2", 5),
    ("F4", 2),
    ("F4", 3),
]


def time_cold(engine_cls, rs, multiple, repeats=3):
    target = tuple(multiple * c for c in rs.theta_root_coords)
    best = None
    result = entries = None
    for _ in range(repeats):
        engine = engine_cls(rs.positive_roots)
        start = time.perf_counter()
        result = engine.compute(target)
        elapsed = time.perf_counter() - start
        entries = engine.stats()[0]
        if best is None or elapsed < best:
            best = elapsed
    return best, entries, result


def main():
    print(f"{'workload':<12} {'memo':>8} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, multiple in WORKLOADS:
        rs = build_root_system(name)
        pure_t, entries, pure_out = time_cold(PurePartitionEngine, rs, multiple)
        label = f"{name} {multiple}*theta"
        if CompiledPartitionEngine is None:
            print(f"{label:<12} {entries:>8} {pure_t * 1e3:>8.1f}ms "
                  f"{'absent':>10} {'-':>8}")
            continue
        comp_t, comp_entries, comp_out = time_cold(
            CompiledPartitionEngine, rs, multiple)
        assert pure_out == comp_out, f"kernel outputs differ on {label}"
        assert entries == comp_entries, f"memo shapes differ on {label}"
        print(f"{label:<12} {entries:>8} {pure_t * 1e3:>8.1f}ms "
              f"{comp_t * 1e3:>8.1f}ms {pure_t / comp_t:>7.1f}x")
    if CompiledPartitionEngine is None:
        print("\ncompiled kernel not built; showing pure-Python times only")


if __name__ == "__main__":
    main()
