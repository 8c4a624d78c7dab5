#!/usr/bin/env python3
"""Compare the two rational backends on representative workloads.

The package selects gmpy2's compiled mpq at import when available and falls
back to pure-Python fractions.Fraction.  This script reruns the same
workloads in fresh interpreters (one per backend and run, so memo caches
start cold), times only the computation, and reports wall times.

Usage: python benchmarks/bench_rationals.py [--repeat N]
"""

import argparse
import subprocess
import sys

SETUP = (
    "from superq.schurq import character_table\n"
    "from superq.frakp import frak_p, expand_gamma_in_frak\n"
    "from superq.partitions import OddPartition\n"
    "from superq.explorer import deg1_conjecture_scan\n"
    "from superq.plancherel import average_bruteforce, average_symbolic\n"
    "from superq.content import hat_p\n"
)

WORKLOADS = {
    "character tables to degree 16": (
        "for k in range(17): character_table(k)\n"
    ),
    "expand fp[7]*fp[7] in the frak-p basis": (
        "f = frak_p(OddPartition((7,)))\n"
        "expand_gamma_in_frak(f * f)\n"
    ),
    "deg1 conjecture scan to total 10": (
        "assert deg1_conjecture_scan(10).ok\n"
    ),
    "averages of (hatp1)^2, n <= 12": (
        "f = hat_p(1) ** 2\n"
        "assert average_symbolic(f).evaluate(12) == average_bruteforce(f, 12)\n"
        "for n in range(12): average_bruteforce(f, n)\n"
    ),
}


def run_workload(backend: str, body: str) -> float:
    code = (
        "import os\n"
        f"os.environ['SUPERQ_RATIONAL'] = {backend!r}\n"
        + SETUP
        + "import time\n"
        "start = time.perf_counter()\n"
        + body
        + "print(time.perf_counter() - start)\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, check=True
    )
    return float(out.stdout.strip().splitlines()[-1])


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="take the best of N runs (default 3)")
    args = parser.parse_args()

    try:
        import gmpy2  # noqa: F401
        backends = ["gmpy2", "fractions"]
    except ImportError:
        print("gmpy2 not installed; benchmarking the fallback only\n")
        backends = ["fractions"]

    width = max(len(name) for name in WORKLOADS)
    header = f"{'workload':<{width}}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, body in WORKLOADS.items():
        times = {
            backend: min(run_workload(backend, body) for _ in range(args.repeat))
            for backend in backends
        }
        row = f"{name:<{width}}  " + "  ".join(
            f"{times[b]:>9.3f}s" for b in backends
        )
        if len(backends) == 2:
            row += f"  {times['fractions'] / times['gmpy2']:>7.2f}x"
        print(row)


if __name__ == "__main__":
    main()
