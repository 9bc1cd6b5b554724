"""Compare the compiled walk kernel with the numpy fallback.

    python benchmarks/bench_kernel.py [--steps 128] [--repeat 200]
"""

import argparse
import time

import numpy as np

from qwhash import _kernel_py
from qwhash.params import WalkParams
from qwhash.walk import _coin_tables, _shift_sources, initial_state

try:
    from qwhash import _kernel
except ImportError:
    _kernel = None


def time_kernel(kern, params, bits, repeat):
    plus, minus = _shift_sources(params.n, params.d)
    cos2, sin2 = _coin_tables(params)
    planes = initial_state(params)._planes()
    kern.evolve_planes(planes, bits, cos2, sin2, plus, minus)
    start = time.perf_counter()
    for _ in range(repeat):
        out = kern.evolve_planes(planes, bits, cos2, sin2, plus, minus)
        kern.probabilities(out)
    return (time.perf_counter() - start) / repeat


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--steps", type=int, default=128)
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()

    bits = np.random.default_rng(0).integers(0, 2, size=args.steps, dtype=np.uint8)
    kernels = {"python": _kernel_py}
    if _kernel is not None:
        kernels["cython"] = _kernel
    else:
        print("compiled kernel unavailable; timing the fallback only")

    print(f"{'lattice':>10} {'backend':>8} {'us/message':>12} {'speedup':>8}")
    for n, d in [(5, 2), (7, 2), (5, 3), (16, 2)]:
        params = WalkParams(0.7, 1.1, alpha=0.6, beta=0.8j, n=n, d=d)
        times = {name: time_kernel(k, params, bits, args.repeat) for name, k in kernels.items()}
        for name, t in times.items():
            speed = times["python"] / t
            print(f"{f'{n}^{d}':>10} {name:>8} {t * 1e6:12.1f} {speed:8.1f}x")


if __name__ == "__main__":
    main()
