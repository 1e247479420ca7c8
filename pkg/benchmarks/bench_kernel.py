"""Compare the compiled residue-sum kernel with the pure-Python fallback.

Kernel calls are timed in-process against both modules; the end-to-end
workloads run in fresh interpreters with and without HBSUM_PURE_PYTHON.

    python3 benchmarks/bench_kernel.py [--repeat 5]
"""
import argparse
import os
import subprocess
import sys
import timeit

from hbsum import _pykernel
from hbsum.polyfun import default_tables

try:
    from hbsum import _ckernel
except ImportError:
    _ckernel = None

WORKLOADS = {
    "rp-S sweep": (
        "from hbsum.sweep import CampaignConfig, run_target;"
        "run_target('rp-S', CampaignConfig(modulus_max=9, order_max=3, shift_samples=4))"
    ),
    "omega N=6": (
        "from hbsum.series import OmegaParams, omega_total, iter_pairwise_coprime;"
        "[omega_total(OmegaParams(a, b, c, 4, 1, 0, 0), 6) for a, b, c in iter_pairwise_coprime(7)]"
    ),
}


def kernel_cases():
    bern, euler = default_tables()
    small = euler.scaled[5][1]
    big = bern.scaled[20][1]
    U = [list(range(i, i + 400)) for i in range(8)]
    return {
        "column n=5 D=97 (machine ints)": lambda m: m.periodic_column(2, 5, small, 97, 13, 31, 2000),
        "column n=20 D=10^7 (bigints)": lambda m: m.periodic_column(0, 20, big, 10**7, 3, 7919, 300),
        "dot_matrix 8x8x400": lambda m: m.dot_matrix(U, U, True, 0),
    }


def bench_kernels(repeat):
    mods = [("python", _pykernel)] + ([("cython", _ckernel)] if _ckernel else [])
    print(f"{'kernel call':<34}" + "".join(f"{n:>12}" for n, _ in mods) + f"{'speedup':>10}")
    for label, fn in kernel_cases().items():
        times = [min(timeit.repeat(lambda: fn(m), number=3, repeat=repeat)) / 3 for _, m in mods]
        speed = f"{times[0] / times[1]:>9.1f}x" if len(times) > 1 else ""
        print(f"{label:<34}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times) + speed)


def bench_workloads():
    print(f"\n{'end-to-end':<34}{'python':>12}{'cython':>12}{'speedup':>10}")
    for label, stmt in WORKLOADS.items():
        times = []
        for pure in (True, False):
            env = dict(os.environ)
            env.pop("HBSUM_PURE_PYTHON", None)
            if pure:
                env["HBSUM_PURE_PYTHON"] = "1"
            code = f"import time;t=time.perf_counter();{stmt};print(time.perf_counter()-t)"
            out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
            times.append(float(out.stdout))
        print(f"{label:<34}{times[0]:>11.2f}s{times[1]:>11.2f}s{times[0] / times[1]:>9.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _ckernel is None:
        print("compiled kernel not built; timing the Python kernel only")
    bench_kernels(args.repeat)
    if _ckernel is not None:
        bench_workloads()


if __name__ == "__main__":
    main()
