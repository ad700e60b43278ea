"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Inputs are real workloads: right-multiplication maps of an element table
(closure and generation tests), the flag maps of a built map (orbits and
equivariant extension), and an element table (element orders).  Each pair
of results is checked for equality before timing.
"""

import argparse
import time

import numpy as np

from etmaps import _kernels as K
from etmaps.groupzoo import alternating, psl2
from etmaps.parent import GeneratorTuple, build_map
from etmaps.permcore import Permutation


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads():
    A7 = alternating(7)
    table = A7.element_table()
    gens = [table.index(g) for g in A7.generators]
    right = table.right_maps(gens)
    pair = (Permutation.from_cycles("(1,2,3,4,5)", 7), Permutation.from_cycles("(1,6,7)(2,4,5)", 7))
    M = build_map(GeneratorTuple("5", pair), A7)
    L = psl2(11).element_table()
    return [
        ("closure_mask  A7 table", "closure_mask", (right, 0)),
        ("closure_exceeds A7 half", "closure_exceeds", (right, 0, table.size // 2)),
        ("orbit_labels  A7 class-5 flags", "orbit_labels", (M.maps[:2],)),
        ("extend_equivariant flags", "extend_equivariant", (M.maps, M.maps, 0, 0)),
        ("element_orders L2(11)", "element_orders", (L.elements,)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':34s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for label, name, inputs in workloads():
        f_np = getattr(K, name + "_numpy")
        f_nb = getattr(K, name + "_numba")
        a, b = f_np(*inputs), f_nb(*inputs)  # also compiles the numba version
        same = all(np.array_equal(x, y) for x, y in zip(a, b)) if isinstance(a, tuple) else np.array_equal(a, b)
        if not same:
            raise SystemExit(f"{name}: backends disagree")
        t_np = best_of(lambda: f_np(*inputs), args.repeat)
        t_nb = best_of(lambda: f_nb(*inputs), args.repeat)
        print(f"{label:34s} {1e3 * t_np:10.3f} {1e3 * t_nb:10.3f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
