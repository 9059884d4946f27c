"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends are imported directly, so the comparison does not depend on
which one ``fundigraph.kernels`` selected.
"""
from __future__ import annotations

import argparse
import itertools
import random
import sys
import time
from typing import Callable, List, Tuple

from fundigraph import _kernels_py

try:
    from fundigraph import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def best_of(fn: Callable[[], object], repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def brute_force(mod, n: int) -> int:
    label = mod.canonical_labeling
    return len({label(f)[0] for f in itertools.product(range(n), repeat=n)})


def random_inputs(count: int, n: int, seed: int = 0) -> List[Tuple[int, ...]]:
    rng = random.Random(seed)
    return [tuple(rng.randrange(n) for _ in range(n)) for _ in range(count)]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args(argv)

    if _kernels_c is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    n_brute = 5 if args.quick else 6
    big = random_inputs(200 if args.quick else 2000, 64)
    huge = random_inputs(5 if args.quick else 20, 4096, seed=1)
    pa, pb = random_inputs(1, 60, seed=2)[0], random_inputs(1, 60, seed=3)[0]

    cases = [
        (f"canonical form, all {n_brute}^{n_brute} endofunctions", lambda m: brute_force(m, n_brute)),
        (f"canonical form, {len(big)} random n=64", lambda m: [m.canonical_labeling(f) for f in big]),
        (f"canonical form, {len(huge)} random n=4096", lambda m: [m.canonical_labeling(f) for f in huge]),
        ("direct product 60 x 60, x200", lambda m: [m.product_successors(pa, pb) for _ in range(200)]),
    ]
    # the two backends must agree before their timings mean anything
    assert brute_force(_kernels_py, 4) == brute_force(_kernels_c, 4) == 19
    assert all(_kernels_py.canonical_labeling(f) == _kernels_c.canonical_labeling(f) for f in big[:50])
    assert list(_kernels_py.product_successors(pa, pb)) == list(_kernels_c.product_successors(pa, pb))

    print(f"{'workload':<44} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, work in cases:
        tp = best_of(lambda: work(_kernels_py), args.repeat)
        tc = best_of(lambda: work(_kernels_c), args.repeat)
        print(f"{name:<44} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
