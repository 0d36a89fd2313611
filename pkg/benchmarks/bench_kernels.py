"""Time the compiled kernels against their pure numpy/Python fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json]

Each kernel is run once untimed per backend so JIT compilation is excluded.
"""

from __future__ import annotations

import argparse
import itertools
import json
import time

import numpy as np

from graphalgo import Graph, _accel, generate
from graphalgo.planarity import is_planar_bruteforce
from graphalgo.spectral import cheeger_constant, normalized_laplacian, symmetric_spectrum
from graphalgo import _kernels


def _random_graph(n, p, seed):
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    return Graph(n, tuple(zip(iu[keep].tolist(), ju[keep].tolist())))


def cases():
    rng = np.random.default_rng(1)
    d = rng.integers(1, 50, size=(160, 160)).astype(float)
    np.fill_diagonal(d, 0.0)
    lap = normalized_laplacian(generate("grid", k=8, l=8))
    sparse = _random_graph(400, 0.02, 2)
    cheeger_g = generate("grid", k=4, l=5)
    # complement of C7: nonplanar, survives the reductions, 14 edges
    co_c7 = Graph(7, tuple((i, j) for i, j in itertools.combinations(range(7), 2) if (j - i) % 7 not in (1, 6)))
    return [
        ("floyd_warshall n=160", lambda: _kernels.floyd_warshall_float(d)),
        ("jacobi 64x64", lambda: symmetric_spectrum(lap)),
        ("bfs_all_pairs n=400", lambda: _kernels.bfs_all_pairs(sparse.n, sparse.adjacency)),
        ("cheeger grid 4x5", lambda: cheeger_constant(cheeger_g)),
        ("embedding search co-C7", lambda: is_planar_bruteforce(co_c7)),
    ]


def _time(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    args = ap.parse_args(argv)
    rows = []
    for name, fn in cases():
        times = {}
        for b in ("numba", "python"):
            if b == "numba" and not _accel.HAVE_NUMBA:
                continue
            with _accel.use_backend(b):
                times[b] = _time(fn, args.repeat)
        rows.append({"kernel": name, **times})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'kernel':<24}{'numba [s]':>12}{'python [s]':>12}{'speedup':>10}")
    for r in rows:
        nb, py = r.get("numba"), r["python"]
        sp = f"{py / nb:9.1f}x" if nb else "      n/a"
        print(f"{r['kernel']:<24}{nb or float('nan'):>12.4f}{py:>12.4f}{sp:>10}")


if __name__ == "__main__":
    main()
