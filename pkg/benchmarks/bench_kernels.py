"""Compare the compiled determinant kernel with the pure Python one.

Runs the same workloads twice in subprocesses, once as installed and
once with SURGEON_PURE=1, so each timing sees exactly the backend it
names.  Usage:

    python3 benchmarks/bench_kernels.py
"""

import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, time
from surgeon.poly import BACKEND, LaurentPoly, det
from surgeon.invariants import alexander_polynomial
from surgeon import family

def random_matrix(rng, n, spread):
    return [[LaurentPoly({e: rng.randint(-5, 5)
                          for e in range(-spread, spread + 1)})
             for _ in range(n)] for _ in range(n)]

results = {"backend": BACKEND}
rng = random.Random(99)
mats = [random_matrix(rng, 8, 2) for _ in range(12)]
t0 = time.perf_counter()
for m in mats:
    det(m)
results["det_8x8_poly"] = time.perf_counter() - t0

rng = random.Random(7)
mats = [random_matrix(rng, 14, 1) for _ in range(3)]
t0 = time.perf_counter()
for m in mats:
    det(m)
results["det_14x14_poly"] = time.perf_counter() - t0

d = family.knot_diagram(2, 2)
t0 = time.perf_counter()
alexander_polynomial(d)
results["alexander_k_2_2"] = time.perf_counter() - t0
print(json.dumps(results))
"""


def run_backend(pure):
    env = dict(os.environ)
    if pure:
        env["SURGEON_PURE"] = "1"
    else:
        env.pop("SURGEON_PURE", None)
    out = subprocess.run([sys.executable, "-c", WORKER], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    compiled = run_backend(pure=False)
    pure = run_backend(pure=True)
    names = [k for k in compiled if k != "backend"]
    print("backend as installed: %s" % compiled["backend"])
    print("backend under SURGEON_PURE=1: %s" % pure["backend"])
    print()
    print("%-20s %12s %12s %8s" % ("workload", compiled["backend"],
                                   pure["backend"], "speedup"))
    for name in names:
        a, b = compiled[name], pure[name]
        ratio = b / a if a else float("inf")
        print("%-20s %11.4fs %11.4fs %7.1fx" % (name, a, b, ratio))
    if compiled["backend"] == pure["backend"]:
        print()
        print("note: the compiled kernel is not installed, so both runs "
              "used the pure backend")


if __name__ == "__main__":
    main()
