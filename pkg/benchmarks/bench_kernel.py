"""Compare the compiled kernel with the pure-Python fallback.

Each backend runs in a fresh interpreter (the kernel is chosen at import),
on field arithmetic micro-benchmarks and on one end-to-end scenario.

    python3 benchmarks/bench_kernel.py [--repeat 3] [--scenario sphere]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from qhopf.backend import COMPILED
from qhopf.scalar import symbol, qpow
from qhopf.linalg import det_bareiss

def best(fn, repeat):
    ts = []
    for _ in range(repeat):
        t = time.perf_counter(); fn(); ts.append(time.perf_counter() - t)
    return min(ts)

repeat, scenario = int(sys.argv[1]), sys.argv[2]
q, p, mu, nu = (symbol(s) for s in ("q", "p", "mu", "nu"))

def field_ops():
    for start in range(20):
        x = (q + p + start) / (q - mu)
        for k in range(10):
            x = x * (q * nu + k) / (p + qpow(-1) * k + 1) + mu
    return x

def det():
    n = 5
    m = [[q ** ((i * j) % 3) + p * (i - j) + (mu if i == j else 0) for j in range(n)]
         for i in range(n)]
    return det_bareiss(m)

def run_scenario():
    from qhopf import scenarios
    if scenario == "plane":
        return scenarios.run_plane(3, 1, galois_degree=0)
    return scenarios.run_sphere(3, "pq", det_max=6, galois_degree=0)

out = {"compiled": COMPILED,
       "field_ops_s": best(field_ops, repeat),
       "det_s": best(det, repeat),
       "scenario_s": best(run_scenario, 1)}
print(json.dumps(out))
"""


def run(pure: bool, repeat: int, scenario: str) -> dict:
    env = dict(os.environ)
    env["QHOPF_PURE_PYTHON"] = "1" if pure else "0"
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat), scenario], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--scenario", choices=("plane", "sphere"), default="sphere")
    args = ap.parse_args(argv)
    fast = run(False, args.repeat, args.scenario)
    slow = run(True, args.repeat, args.scenario)
    if not fast["compiled"]:
        print("compiled kernel not available; both rows use pure Python")
    print(f"{'benchmark':<14}{'compiled s':>12}{'pure s':>10}{'speedup':>9}")
    for key in ("field_ops_s", "det_s", "scenario_s"):
        print(f"{key[:-2]:<14}{fast[key]:>12.3f}{slow[key]:>10.3f}{slow[key] / fast[key]:>8.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
