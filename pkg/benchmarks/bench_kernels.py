"""Compare the accelerated and pure paths.

Polynomial backend: each timing runs in a subprocess, since the backend is
fixed at import (QSC_POLY_BACKEND=flint|python).
Gamma_p product: numba kernel against the Python loop, in process.

    python benchmarks/bench_kernels.py
"""

import os
import subprocess
import sys
import time

POLY_WORKLOAD = """
import time
from qsupercong.theorems import TheoremParams, verify_theorem
t = time.perf_counter()
for n, d, r in [(9, 4, 1), (11, 2, 1), (13, 4, 1), (11, 4, -1)]:
    assert verify_theorem(TheoremParams("theorem1", n, d, r))
print(time.perf_counter() - t)
"""


def time_poly_backend(name):
    env = {**os.environ, "QSC_POLY_BACKEND": name}
    out = subprocess.run([sys.executable, "-c", POLY_WORKLOAD], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def time_gamma(force_pure, p=11, k=6):
    from qsupercong._kernels import unit_product
    mod = p**k
    unit_product(10, p, mod, force_pure=force_pure)  # compile outside the timing
    t = time.perf_counter()
    value = unit_product(mod - 1, p, mod, force_pure=force_pure)
    return time.perf_counter() - t, value


def main():
    print(f"{'workload':<34} {'fast':>10} {'pure':>10} {'speedup':>8}")
    fast, pure = time_poly_backend("flint"), time_poly_backend("python")
    print(f"{'theorem1, 4 instances (poly)':<34} {fast:>9.3f}s {pure:>9.3f}s {pure / fast:>7.1f}x")
    (tf, vf), (tp, vp) = time_gamma(False), time_gamma(True)
    assert vf == vp
    print(f"{'Gamma_p product, 11^6 (kernel)':<34} {tf:>9.3f}s {tp:>9.3f}s {tp / tf:>7.1f}x")


if __name__ == "__main__":
    main()
