"""Time the numba and numpy kernel backends on a few large monoids.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each backend runs in its own interpreter since the backend is fixed at import.
"""

import argparse
import json
import os
import subprocess
import sys

CASES = ["11,12,13,14,15,16,17,18,19,20,21", "5,11,17,18", "9,10,11,12,13,14,15,16,17"]

WORKER = r"""
import json, sys, time
from idclass import kernels
from idclass.monoid import class_monoid, width_inclusion, longest_chain
from idclass.semigroup import from_generators

gens, repeat = sys.argv[1], int(sys.argv[2])
S = from_generators(int(x) for x in gens.split(","))
class_monoid(S).classification  # warm-up, includes JIT compilation
best = {}
for _ in range(repeat):
    t0 = time.perf_counter(); M = class_monoid(S); t1 = time.perf_counter()
    M.classification; t2 = time.perf_counter()
    longest_chain(M, "preceq"); width_inclusion(M); t3 = time.perf_counter()
    for k, v in (("table", t1 - t0), ("classify", t2 - t1), ("order", t3 - t2)):
        best[k] = min(best.get(k, v), v)
print(json.dumps({"backend": kernels.BACKEND, "ideals": len(M), **best}))
"""


def run(backend: str, gens: str, repeat: int) -> dict:
    env = dict(os.environ, IDCLASS_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", WORKER, gens, str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{"semigroup":<36}{'backend':<8}{'ideals':>7}{'table':>10}{'classify':>10}{'order':>10}")
    for gens in CASES:
        for backend in ("numba", "numpy"):
            r = run(backend, gens, args.repeat)
            print(f"<{gens}>".ljust(36) + f"{r['backend']:<8}{r['ideals']:>7}"
                  f"{r['table']:>10.4f}{r['classify']:>10.4f}{r['order']:>10.4f}")


if __name__ == "__main__":
    main()
