"""Compiled kernels and their numpy fallbacks must agree."""

import itertools
import os
import subprocess
import sys

import networkx as nx
import numpy as np
import pytest

from _util import random_connected, random_graph, to_nx
from graphalgo import Graph, _accel, _kernels, generate
from graphalgo.planarity import is_planar_bruteforce
from graphalgo.spectral import cheeger_constant, normalized_laplacian

both = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba missing")


def _each_backend(fn):
    out = {}
    for b in ("numba", "python") if _accel.HAVE_NUMBA else ("python",):
        with _accel.use_backend(b):
            out[b] = fn()
    return out


def test_env_flag_selects_python_backend():
    code = "from graphalgo import _accel; print(_accel.backend())"
    env = dict(os.environ, GRAPHALGO_DISABLE_NUMBA="1")
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert res.stdout.strip() == "python"
    with pytest.raises(ValueError):
        _accel.set_backend("fortran")


def test_floyd_warshall(backend):
    rng = np.random.default_rng(90)
    for _ in range(10):
        n = int(rng.integers(1, 30))
        d = np.where(rng.random((n, n)) < 0.3, rng.integers(1, 20, (n, n)).astype(float), np.inf)
        np.fill_diagonal(d, 0)
        G = nx.from_numpy_array(np.where(np.isinf(d), 0, d), create_using=nx.DiGraph)
        want = dict(nx.all_pairs_dijkstra_path_length(G))
        got = _kernels.floyd_warshall_float(d.copy())
        for i in range(n):
            for j in range(n):
                assert got[i, j] == want[i].get(j, np.inf)


def test_jacobi(backend):
    rng = np.random.default_rng(91)
    for n in (1, 2, 5, 17):
        a = rng.normal(size=(n, n))
        a = a + a.T
        vals, vecs, _, ok = _kernels.jacobi_eigh(a, 1e-13, 100)
        assert ok
        assert np.allclose(np.sort(vals), np.linalg.eigvalsh(a), atol=1e-10)
        assert np.allclose(a @ vecs, vecs * vals, atol=1e-10)


def test_bfs_all_pairs(backend):
    rng = np.random.default_rng(92)
    for _ in range(15):
        g = random_graph(rng, int(rng.integers(1, 14)), p=0.3)
        dist, count = _kernels.bfs_all_pairs(g.n, g.adjacency)
        G = to_nx(g)
        for s in range(g.n):
            lengths = nx.single_source_shortest_path_length(G, s)
            for t in range(g.n):
                assert dist[s, t] == lengths.get(t, -1)
                if t in lengths and t != s:
                    assert count[s, t] == len(list(nx.all_shortest_paths(G, s, t)))


def test_cheeger_search(backend):
    rng = np.random.default_rng(93)
    for _ in range(15):
        g = random_connected(rng, int(rng.integers(2, 11)))
        cut = cheeger_constant(g)
        assert 0 in cut.subset
        assert cut.h == min(
            _ratio(g, S) for r in range(1, g.n) for S in itertools.combinations(range(g.n), r)
        )


def _ratio(g, S):
    from fractions import Fraction
    S = set(S)
    b = sum((u in S) != (v in S) for u, v in g.edges)
    vs = sum(g.degrees[v] for v in S)
    return Fraction(b, min(vs, 2 * g.m - vs))


def test_embedding_search(backend):
    rng = np.random.default_rng(94)
    for _ in range(25):
        g = random_graph(rng, int(rng.integers(3, 8)), p=0.55)
        assert is_planar_bruteforce(g) == nx.check_planarity(to_nx(g))[0]
    assert not is_planar_bruteforce(generate("complete", n=5))
    assert not is_planar_bruteforce(generate("complete_bipartite", n=3, m=3))


@both
def test_backends_agree_bitwise_on_float_kernels():
    rng = np.random.default_rng(95)
    d = rng.integers(1, 9, (40, 40)).astype(float)
    np.fill_diagonal(d, 0)
    r = _each_backend(lambda: _kernels.floyd_warshall_float(d.copy()))
    assert np.array_equal(r["numba"], r["python"])
    lap = normalized_laplacian(generate("grid", k=4, l=4))
    r = _each_backend(lambda: np.sort(_kernels.jacobi_eigh(lap, 1e-12, 100)[0]))
    assert np.allclose(r["numba"], r["python"], atol=1e-12)
    g = generate("grid", k=3, l=4)
    r = _each_backend(lambda: _kernels.cheeger_search(g.n, g.edges, g.adjacency, g.degrees))
    assert r["numba"] == r["python"]
    g = random_connected(rng, 30, p=0.1)
    r = _each_backend(lambda: _kernels.bfs_all_pairs(g.n, g.adjacency))
    assert all(np.array_equal(a, b) for a, b in zip(r["numba"], r["python"]))
