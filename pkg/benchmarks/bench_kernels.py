"""Compare the compiled homology kernel with the pure-Python fallback.

Each workload runs in a fresh interpreter so the backend choice made at
import (``MONIDEAL_PURE``) is honoured.  Usage::

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

# ideals are built before timing starts; only betti_numbers is timed
WORKLOADS = {
    "betti(J^2)": "power(J, 2)",
    "betti(closure of J^2)": "integral_closure_of_power(J, 2)",
    "betti(J^(2))": "symbolic_power(J, 2)",
    "betti(split_2(J)^2)": "power(apply_ideal(S2, J), 2)",
    "betti(split_2(J)^(2))": "symbolic_power(apply_ideal(S2, J), 2)",
}

RUNNER = """
import json, sys, time
from monideal import _kernels
from monideal.arithmetic import power
from monideal.betti import betti_numbers
from monideal.decomposition import symbolic_power
from monideal.golden import J
from monideal.newton import integral_closure_of_power
from monideal.splitting import SplittingMap, apply_ideal
expr, repeat = sys.argv[1], int(sys.argv[2])
S2 = SplittingMap.uniform(J.ring, 2)
I = eval(expr)
best = float("inf")
for _ in range(repeat):
    t0 = time.perf_counter()
    result = betti_numbers(I)
    best = min(best, time.perf_counter() - t0)
print(json.dumps({"backend": _kernels.BACKEND, "seconds": best, "regularity": result.regularity()}))
"""


def run(expr: str, pure: bool, repeat: int) -> dict:
    env = dict(os.environ, MONIDEAL_THREADS="1")
    env.pop("MONIDEAL_PURE", None)
    if pure:
        env["MONIDEAL_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", RUNNER, expr, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    print(f"{'workload':<26} {'compiled':>10} {'pure':>10} {'speedup':>8}")
    for name, expr in WORKLOADS.items():
        fast = run(expr, False, args.repeat)
        slow = run(expr, True, args.repeat)
        if fast["regularity"] != slow["regularity"]:
            print(f"{name}: backends disagree ({fast} vs {slow})", file=sys.stderr)
            return 1
        label = f"{fast['seconds']:.3f}s" if fast["backend"] == "cython" else "n/a"
        ratio = slow["seconds"] / fast["seconds"] if fast["backend"] == "cython" else float("nan")
        print(f"{name:<26} {label:>10} {slow['seconds']:>9.3f}s {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
