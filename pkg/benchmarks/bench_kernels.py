"""Compiled core vs numpy fallback on the two hot kernels.

    python benchmarks/bench_kernels.py [--repeat N]

sgd_epoch: one local epoch of a 784-200-200-10 MLP over 600 samples, B=10.
scan_subsets: full subset scan over n candidate UAVs with 10 classes.
"""

import argparse
import timeit

import numpy as np

from swarmfl import _backend, _purepy, fl


def sgd_case(seed=0, n=600):
    rng = np.random.default_rng(seed)
    sizes = np.array(fl.DEFAULT_LAYERS, np.intp)
    p = fl.init_model(fl.DEFAULT_LAYERS, seed).weights_and_biases.copy()
    X = rng.random((n, 784))
    y = rng.integers(0, 10, n).astype(np.intp)
    return p, sizes, X, y, rng.permutation(n).astype(np.intp)


def scan_case(n, seed=0):
    rng = np.random.default_rng(seed)
    masks = np.array([int(rng.integers(1, 1 << 10)) for _ in range(n)], np.uint64)
    nums = rng.integers(0, 5000, n).astype(np.int64)
    dens = rng.integers(1000, 6000, n).astype(np.int64)
    return masks, nums, dens, 0, 10, 0.5, 10


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = [("numpy", _purepy)]
    if _backend.compiled is not None:
        impls.insert(0, ("compiled", _backend.compiled))
    print(f"active backend: {_backend.NAME}")
    if _backend.compiled is not None:
        print(f"compiled SIMD level: {_backend.compiled.simd_level()}")

    p, sizes, X, y, order = sgd_case()
    rows = []
    for name, mod in impls:
        t = best(lambda: mod.sgd_epoch(p.copy(), sizes, X, y, order, 10, 0.01), args.repeat)
        rows.append(("sgd_epoch n=600", name, t, t / 60 * 1e6, "us/step"))
    if _backend.compiled is not None:
        c = _backend.compiled
        try:
            for lvl in (0, 1):
                if c.force_simd_level(lvl) == lvl:
                    t = best(lambda: c.sgd_epoch(p.copy(), sizes, X, y, order, 10, 0.01), args.repeat)
                    rows.append(("sgd_epoch n=600", f"compiled/simd{lvl}", t, t / 60 * 1e6, "us/step"))
        finally:
            c.force_simd_level(-1)
    for n in (10, 16, 20):
        case = scan_case(n)
        for name, mod in impls:
            t = best(lambda: mod.scan_subsets(*case), max(1, args.repeat // 2))
            rows.append((f"scan_subsets n={n}", name, t, t / ((1 << n) - 1) * 1e9, "ns/subset"))

    print(f"{'kernel':<20} {'impl':<16} {'best s':>10} {'per unit':>12}")
    for k, name, t, per, unit in rows:
        print(f"{k:<20} {name:<16} {t:>10.4f} {per:>10.1f} {unit}")


if __name__ == "__main__":
    main()
