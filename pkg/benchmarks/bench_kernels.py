"""Time the compiled permutation kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py --group E6 --group G33 --repeat 3
"""
import argparse
import time

import numpy as np

from graded_hecke import _kernels_py
from graded_hecke.groups import build_group

try:
    from graded_hecke import _kernels_c
except ImportError:
    _kernels_c = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def bench(spec, repeat):
    group = build_group(spec)
    gens = group.perms[group.generators]
    reps = [c.rep for c in group.classes]
    backends = [("python", _kernels_py)] + ([("cython", _kernels_c)] if _kernels_c else [])
    results = {}
    for name, mod in backends:
        row = {}
        row["closure"], perms = best_of(lambda: mod.closure(gens, group.base, 10**7), repeat)
        assert len(perms) == group.order
        row["classes"], labels = best_of(
            lambda: mod.conjugacy_labels(
                group.perms, group.base, group.generators, group._sorted_keys, group._key_order
            ),
            repeat,
        )
        assert np.array_equal(np.asarray(labels), group.class_labels)
        row["centralizers"], _ = best_of(
            lambda: [mod.centralizer_mask(group.perms, group.inverse_perms_base, group.perms[g], group.base) for g in reps],
            repeat,
        )
        results[name] = row
    return group, results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--group", action="append", default=None)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    specs = args.group or ["F4", "G(4,2,4)", "E6", "G33"]
    if _kernels_c is None:
        print("compiled kernels not built; only the fallback is timed")
    print(f"{'group':10} {'order':>7} {'kernel':13} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for spec in specs:
        group, res = bench(spec, args.repeat)
        for kernel in ("closure", "classes", "centralizers"):
            py = res["python"][kernel]
            cy = res.get("cython", {}).get(kernel)
            tail = f"{cy:10.4f} {py / cy:8.1f}x" if cy else f"{'-':>10} {'-':>8}"
            print(f"{spec:10} {group.order:7d} {kernel:13} {py:10.4f} {tail}")


if __name__ == "__main__":
    main()
