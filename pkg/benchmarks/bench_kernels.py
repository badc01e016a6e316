"""Time each hot kernel on both implementations.

Runs the numba @njit path (when importable) against the pure-numpy
fallback on the workloads the verifiers actually produce: distance
sweeps over a length-16 code of 2048 words and component BFS under the
56-mask pair adjacency.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from perfcodes import kernels
from perfcodes.codes import distance_masks
from perfcodes.gf import make_field
from perfcodes.partition import odd_class_partition
from perfcodes.product import identity_perm, doubled_product_code


def make_workloads():
    partition = odd_class_partition(make_field(3))
    product = doubled_product_code(partition, identity_perm(partition.n))
    words = product.code.word_array()
    lookup = kernels.make_lookup(words, 16)
    masks4 = distance_masks(16, 4, through=(0, 5))
    masks2 = distance_masks(16, 2)
    points = np.arange(1 << 16, dtype=np.uint32)
    present = np.zeros(1 << 16, dtype=np.uint8)
    present[words] = 1
    return {
        "min_distance (2048 words)": [
            ("numpy", lambda: kernels._min_distance_np(words)),
            ("numba", lambda: kernels._min_distance_nb(words)),
        ],
        "min_dist_to_set (65536 x 2048)": [
            ("numpy", lambda: kernels._min_dist_to_set_np(points, words)),
            ("numba", lambda: kernels._min_dist_to_set_nb(points, words)),
        ],
        "component_labels (56 masks)": [
            ("numpy", lambda: kernels._component_labels_np(words, lookup, masks4)),
            ("numba", lambda: kernels._component_labels_nb(words, lookup, masks4)),
        ],
        "has_close_pair (120 masks)": [
            ("numpy", lambda: kernels._has_close_pair_np(words, present, masks2)),
            ("numba", lambda: kernels._has_close_pair_nb(words, present, masks2)),
        ],
    }


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5,
                        help="take the best of N runs per kernel")
    args = parser.parse_args()

    if not kernels.NUMBA_ENABLED:
        print("numba path unavailable (PERFCODES_NUMBA=0 or numba missing); "
              "timing the numpy fallback only")

    kernels.warmup()
    workloads = make_workloads()
    print(f"{'kernel':<34} {'numpy':>12} {'numba':>12} {'speedup':>9}")
    for name, variants in workloads.items():
        times = {}
        for label, fn in variants:
            if label == "numba" and not kernels.NUMBA_ENABLED:
                continue
            fn()  # warm caches / JIT
            times[label] = best_of(fn, args.repeat)
        np_ms = times["numpy"] * 1e3
        if "numba" in times:
            nb_ms = times["numba"] * 1e3
            print(f"{name:<34} {np_ms:>10.3f}ms {nb_ms:>10.3f}ms "
                  f"{times['numpy'] / times['numba']:>8.1f}x")
        else:
            print(f"{name:<34} {np_ms:>10.3f}ms {'-':>12} {'-':>9}")


if __name__ == "__main__":
    main()
