import itertools
import math
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from _util import random_connected, to_nx
from graphalgo import (
    BadDimension,
    BadP,
    Disconnected,
    Graph,
    IsolatedVertex,
    NotSymmetric,
    TooLarge,
    ZeroVector,
    cheeger_constant,
    cheeger_inequality_check,
    complete_graph_p_spectrum,
    generate,
    laplacian_spectrum,
    normalized_laplacian,
    p_eigenpair_check,
    p_laplacian_apply,
    p_rayleigh,
    symmetric_spectrum,
)

TWO_TRIANGLES = Graph(6, ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)))


def test_normalized_laplacian_examples():
    assert np.array_equal(normalized_laplacian(Graph(2, ((0, 1),))), [[1, -1], [-1, 1]])
    for g in (generate("cycle", n=7), generate("complete", n=5), generate("platonic", name="dodecahedron")):
        r = g.degrees[0]
        A = nx.to_numpy_array(to_nx(g), nodelist=range(g.n))
        assert np.allclose(normalized_laplacian(g), np.eye(g.n) - A / r, atol=1e-15)
    with pytest.raises(IsolatedVertex):
        normalized_laplacian(Graph(3, ((0, 1),)))


def test_complete_graph_spectrum():
    for n in range(2, 9):
        s = laplacian_spectrum(generate("complete", n=n))
        assert s.values[0] == pytest.approx(0, abs=1e-12)
        assert np.allclose(s.values[1:], n / (n - 1), atol=1e-12)
        assert s.residual < 1e-10


def test_zero_multiplicity_counts_components():
    rng = np.random.default_rng(70)
    seen = 0
    while seen < 40:
        g = Graph(int(rng.integers(2, 11)), ())
        g = Graph(g.n, tuple(e for e in itertools.combinations(range(g.n), 2) if rng.random() < 0.3))
        if g.n == 0 or min(g.degrees) == 0:
            continue
        seen += 1
        vals = laplacian_spectrum(g).values
        comps = nx.number_connected_components(to_nx(g))
        assert int((np.abs(vals) < 1e-9).sum()) == comps
        assert (vals[1] > 1e-9) == (comps == 1)


def test_eigenpairs_against_numpy():
    rng = np.random.default_rng(71)
    for _ in range(30):
        g = random_connected(rng, int(rng.integers(2, 12)))
        s = laplacian_spectrum(g)
        M = normalized_laplacian(g)
        assert np.allclose(s.values, np.linalg.eigvalsh(M), atol=1e-10)
        assert np.allclose(M @ s.vectors, s.vectors * s.values, atol=1e-10)
        assert np.allclose(s.vectors.T @ s.vectors, np.eye(g.n), atol=1e-10)


def test_symmetric_spectrum_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        symmetric_spectrum(np.array([[0.0, 1.0], [0.0, 0.0]]))


# characteristic polynomial of D^-1 L (similar to the normalized Laplacian) in exact arithmetic


def _charpoly(g):
    n = g.n
    M = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        M[u][v] = Fraction(-1, g.degrees[u])
        M[v][u] = Fraction(-1, g.degrees[v])
    # Faddeev-LeVerrier, coefficients leading first
    coeffs = [Fraction(1)]
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            Mk[i][i] += coeffs[-1]
        Mk = [[sum(M[i][t] * Mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(Mk[i][i] for i in range(n)) / k)
    return coeffs


def _polydiv_rem(a, b):
    a = list(a)
    while len(a) >= len(b):
        f = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= f * b[i]
        a.pop(0)
    while a and a[0] == 0:
        a.pop(0)
    return a


def _gcd(a, b):
    while b:
        a, b = b, _polydiv_rem(a, b)
    return [c / a[0] for c in a]


def _squarefree(p):
    n = len(p) - 1
    dp = [c * (n - i) for i, c in enumerate(p[:-1])]
    g = _gcd(p, dp)
    q, out = list(p), []
    # exact quotient p / g
    while len(q) >= len(g):
        f = q[0] / g[0]
        out.append(f)
        for i in range(len(g)):
            q[i] -= f * g[i]
        q.pop(0)
    return out


def test_jacobi_against_characteristic_polynomial():
    checked = 0
    for n in (2, 3, 4):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1, 1 << len(pairs)):
            g = Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
            if min(g.degrees) == 0:
                continue
            vals = laplacian_spectrum(g).values
            cp = _charpoly(g)
            assert np.allclose(np.poly(vals), [float(c) for c in cp], atol=1e-9)
            roots = np.sort(np.roots([float(c) for c in _squarefree(cp)]).real)
            distinct = [v for i, v in enumerate(vals) if i == 0 or v - vals[i - 1] > 1e-6]
            assert np.allclose(distinct, roots, atol=1e-9)
            checked += 1
    assert checked > 40


def test_cheeger_examples():
    assert cheeger_constant(Graph(2, ((0, 1),))).h == 1
    assert cheeger_constant(generate("cycle", n=4)).h == Fraction(1, 2)
    cut = cheeger_constant(TWO_TRIANGLES)
    assert cut.h == Fraction(1, 7) and cut.subset == frozenset({0, 1, 2})
    with pytest.raises(Disconnected):
        cheeger_constant(Graph(4, ((0, 1), (2, 3))))
    with pytest.raises(TooLarge):
        cheeger_constant(generate("cycle", n=30))


def test_cheeger_against_enumeration():
    rng = np.random.default_rng(72)
    for _ in range(30):
        g = random_connected(rng, int(rng.integers(2, 9)))
        best = None
        for r in range(1, g.n):
            for S in itertools.combinations(range(g.n), r):
                S = set(S)
                b = sum((u in S) != (v in S) for u, v in g.edges)
                vs = sum(g.degrees[v] for v in S)
                h = Fraction(b, min(vs, 2 * g.m - vs))
                best = h if best is None else min(best, h)
        assert cheeger_constant(g).h == best


def test_cheeger_inequality_examples():
    r = cheeger_inequality_check(generate("complete", n=5))
    assert r.ok and r.lambda2 == pytest.approx(1.25)
    r = cheeger_inequality_check(generate("path", n=10))
    assert r.ok and r.upper - r.lambda2 > 0.1


def test_p_laplacian_examples():
    rng = np.random.default_rng(73)
    g = random_connected(rng, 7)
    x = rng.normal(size=7)
    L = nx.laplacian_matrix(to_nx(g), nodelist=range(7)).toarray()
    assert np.allclose(p_laplacian_apply(g, 2, x), L @ x)
    for p in (1.5, 2, 3.7):
        assert np.array_equal(p_laplacian_apply(g, p, np.full(7, 2.5)), np.zeros(7))
    assert np.array_equal(p_laplacian_apply(Graph(2, ((0, 1),)), 3, [1, -1]), [4, -4])
    with pytest.raises(BadP):
        p_laplacian_apply(g, 1, x)
    with pytest.raises(BadDimension):
        p_laplacian_apply(g, 2, x[:3])


def test_eigenpair_check_examples():
    k6 = generate("complete", n=6)
    e = np.zeros(6)
    e[0], e[1] = 1, -1
    assert p_eigenpair_check(k6, 2, 6, e).ok
    assert p_eigenpair_check(k6, 3, 0, np.ones(6)).ok
    rng = np.random.default_rng(74)
    misses = sum(not p_eigenpair_check(k6, 3, rng.uniform(0, 10), rng.normal(size=6)).ok for _ in range(50))
    assert misses == 50
    with pytest.raises(ZeroVector):
        p_eigenpair_check(k6, 3, 1, np.zeros(6))


def test_complete_graph_p_spectrum():
    for n in range(2, 7):
        assert all(pair.value == pytest.approx(n) for pair in complete_graph_p_spectrum(n, 2))
    for p in (1.5, 2.5, 4):
        (pair,) = complete_graph_p_spectrum(2, p)
        assert pair.value == pytest.approx(2 ** (p - 1))
    pair = next(q for q in complete_graph_p_spectrum(4, 3) if (q.alpha, q.beta) == (1, 2))
    assert pair.value == pytest.approx(1 + (1 + math.sqrt(2)) ** 2, rel=1e-12)
    assert p_eigenpair_check(generate("complete", n=4), 3, pair.value, pair.vector).ok
    for n in range(2, 8):
        for p in (1.3, 2.0, 3.0):
            for q in complete_graph_p_spectrum(n, p):
                assert q.value <= 2 ** (p - 1) * (n - 1) + 1e-9
                assert p_eigenpair_check(generate("complete", n=n), p, q.value, q.vector).ok


def test_bipartite_certificates_reach_the_bound():
    for k in (2, 3, 5):
        g = generate("cycle", n=2 * k)
        x = np.array([(-1) ** i for i in range(2 * k)], dtype=float)
        for p in (1.5, 2.0, 3.0):
            top = 2 ** (p - 1)
            assert p_eigenpair_check(g, p, top, x, normalized=True).ok
            assert p_eigenpair_check(g, p, 2 * top, x).ok
            rng = np.random.default_rng(k)
            for _ in range(20):
                r = p_rayleigh(g, p, rng.normal(size=2 * k), normalized=True)
                assert -1e-12 <= r <= top + 1e-12
