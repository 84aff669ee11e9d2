"""Compare the compiled and pure Python box search on seeded random instances.

    python benchmarks/bench_kernel.py --bound 4 --instances 20
"""

import argparse
import random
import sys
import time

from rhoghn import kernel
from rhoghn.optimizer import kernel_inputs
from rhoghn.random_instances import random_general


def instances(count, seed, min_rank):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        s = random_general(rng)
        if min_rank <= s.datum.torus_rank <= 4:
            out.append(kernel_inputs(s))
    return out


def time_backend(backend, data, bound, repeat):
    best = float("inf")
    results = None
    for _ in range(repeat):
        start = time.perf_counter()
        results = [kernel.box_argmax(w, r, d, bound, backend=backend) for w, r, d in data]
        best = min(best, time.perf_counter() - start)
    return best, results


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--instances", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-rank", type=int, default=3, help="smallest torus rank to include")
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    data = instances(args.instances, args.seed, args.min_rank)
    visited = sum(kernel.box_argmax(w, r, d, args.bound, backend="python")[1] for w, r, d in data)
    print(f"{len(data)} instances, bound {args.bound}, {visited} candidates per pass")

    t_py, r_py = time_backend("python", data, args.bound, args.repeat)
    print(f"python  {t_py:8.4f}s  {visited / t_py:12.0f} candidates/s")
    if kernel.BACKEND != "cython":
        print("cython  not built; install Cython and rebuild to compare")
        return 0
    t_c, r_c = time_backend("cython", data, args.bound, args.repeat)
    print(f"cython  {t_c:8.4f}s  {visited / t_c:12.0f} candidates/s")
    print(f"speedup {t_py / t_c:8.1f}x")
    if r_py != r_c:
        print("backends disagree", file=sys.stderr)
        return 1
    print("results identical")
    return 0


if __name__ == "__main__":
    sys.exit(main())
