"""Dijkstra, Bellman-Ford, Floyd-Warshall and Johnson.

Distances keep the arithmetic of the weights: ints and Fractions stay exact,
floats stay floats. Unreachable is ``math.inf``.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import IndexOutOfRange, NonPositiveWeight
from .graph import Graph

__all__ = [
    "PathTree",
    "DistanceMatrix",
    "NegativeCycleReport",
    "dijkstra",
    "bellman_ford",
    "floyd_warshall",
    "johnson",
    "johnson_reweight",
    "find_negative_cycle",
    "bellman_ford_arcs",
]

INF = math.inf


@dataclass(frozen=True)
class PathTree:
    root: int
    dist: tuple
    pred: tuple  # predecessor vertex or None

    def path_to(self, v: int) -> list[int] | None:
        if self.dist[v] == INF:
            return None
        path = [v]
        while path[-1] != self.root:
            path.append(self.pred[path[-1]])
        return path[::-1]


@dataclass(frozen=True)
class DistanceMatrix:
    values: tuple[tuple, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, ij):
        i, j = ij
        return self.values[i][j]

    def tolist(self) -> list[list]:
        return [list(r) for r in self.values]


@dataclass(frozen=True)
class NegativeCycleReport:
    cycle: tuple[int, ...]  # v0 -> v1 -> ... -> v0
    weight: object


def _check_root(g, root):
    if not 0 <= root < g.n:
        raise IndexOutOfRange(f"root {root} out of range")


def _arc_list(g: Graph):
    return [(u, v, w) for u, v, w, _ in g.arcs()]


def _dijkstra_core(n, out_arcs, root):
    dist = [INF] * n
    pred = [None] * n
    dist[root] = 0
    done = [False] * n
    heap = [(0, root)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in out_arcs[u]:
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))
    return dist, pred


def _out_arcs(g: Graph, weight_of=None):
    out = [[] for _ in range(g.n)]
    for u, v, w, e in g.arcs():
        out[u].append((v, w if weight_of is None else weight_of(u, v, w)))
    for lst in out:
        lst.sort(key=lambda t: t[0])
    return out


def dijkstra(g: Graph, root: int) -> PathTree:
    """Single-source distances for strictly positive weights."""
    _check_root(g, root)
    if g.weighted and any(w <= 0 for w in g.weights):
        raise NonPositiveWeight("dijkstra needs strictly positive weights")
    dist, pred = _dijkstra_core(g.n, _out_arcs(g), root)
    return PathTree(root, tuple(dist), tuple(pred))


def bellman_ford_arcs(n: int, arcs: Sequence[tuple], init: Sequence):
    """Generic Bellman-Ford over ``arcs = [(u, v, w), ...]``.

    ``init`` holds the starting distance of every vertex (``INF`` for
    non-sources). Returns ``(dist, pred_arc, None)`` on success or
    ``(dist, pred_arc, cycle_arcs)`` with the arc indices of a negative cycle
    in forward order.
    """
    dist = list(init)
    pred = [None] * n
    last = None
    for it in range(n):
        changed = False
        for idx, (u, v, w) in enumerate(arcs):
            du = dist[u]
            if du == INF:
                continue
            nd = du + w
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = idx
                changed = True
                last = v
        if not changed:
            return dist, pred, None
    cycle = _walk_back(last, pred, arcs, n)
    extra = 0
    while cycle is None:
        # pred graph not yet closed: keep relaxing until it is
        for idx, (u, v, w) in enumerate(arcs):
            if dist[u] != INF and dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                pred[v] = idx
        cycle = _pred_graph_cycle(pred, arcs, n)
        extra += 1
        if extra > 4 * n + 4:  # pragma: no cover - guarded by theory
            raise RuntimeError("negative cycle detection failed to converge")
    return dist, pred, cycle


def _walk_back(last, pred, arcs, n):
    y = last
    for _ in range(n):
        a = pred[y]
        if a is None:
            return None
        y = arcs[a][0]
    return _collect_cycle(y, pred, arcs, n)


def _collect_cycle(start, pred, arcs, n):
    cyc = []
    x = start
    for _ in range(n + 1):
        a = pred[x]
        if a is None:
            return None
        cyc.append(a)
        x = arcs[a][0]
        if x == start:
            return cyc[::-1]
    return None


def _pred_graph_cycle(pred, arcs, n):
    state = [0] * n  # 0 new, 1 on current chain, 2 finished
    for s in range(n):
        chain = []
        x = s
        while x is not None and state[x] == 0:
            state[x] = 1
            chain.append(x)
            x = None if pred[x] is None else arcs[pred[x]][0]
        if x is not None and state[x] == 1:
            cyc = _collect_cycle(x, pred, arcs, n)
            if cyc is not None:
                return cyc
        for y in chain:
            state[y] = 2
    return None


def _report(arcs, cycle_arcs):
    verts = [arcs[a][0] for a in cycle_arcs]
    weight = sum((arcs[a][2] for a in cycle_arcs), 0)
    k = verts.index(min(verts))
    return NegativeCycleReport(tuple(verts[k:] + verts[:k]), weight)


def bellman_ford(g: Graph, root: int) -> PathTree | NegativeCycleReport:
    """Single-source distances, or a negative cycle reachable from ``root``."""
    _check_root(g, root)
    arcs = _arc_list(g)
    init = [INF] * g.n
    init[root] = 0
    dist, pred, cycle = bellman_ford_arcs(g.n, arcs, init)
    if cycle is not None:
        return _report(arcs, cycle)
    return PathTree(root, tuple(dist), tuple(None if a is None else arcs[a][0] for a in pred))


def find_negative_cycle(g: Graph) -> NegativeCycleReport | None:
    """Any negative cycle, via a virtual zero-weight source to every vertex."""
    arcs = _arc_list(g)
    _, _, cycle = bellman_ford_arcs(g.n, arcs, [0] * g.n)
    return None if cycle is None else _report(arcs, cycle)


def _is_exact(g: Graph) -> bool:
    return g.weighted and any(isinstance(w, Fraction) for w in g.weights)


def floyd_warshall(g: Graph) -> DistanceMatrix | NegativeCycleReport:
    """All-pairs distances; a negative diagonal entry triggers cycle extraction."""
    n = g.n
    if _is_exact(g):
        d = [[INF] * n for _ in range(n)]
        for i in range(n):
            d[i][i] = 0
        for u, v, w, _ in g.arcs():
            if w < d[u][v]:
                d[u][v] = w
        for k in range(n):
            dk = d[k]
            for i in range(n):
                dik = d[i][k]
                if dik == INF:
                    continue
                di = d[i]
                for j in range(n):
                    c = dik + dk[j]
                    if c < di[j]:
                        di[j] = c
        rows = d
    else:
        arr = np.full((n, n), np.inf)
        np.fill_diagonal(arr, 0.0)
        for u, v, w, _ in g.arcs():
            arr[u, v] = min(arr[u, v], float(w))
        arr = _kernels.floyd_warshall_float(arr)
        as_int = not g.weighted or all(isinstance(w, int) for w in g.weights)
        rows = [[(int(x) if as_int and math.isfinite(x) else float(x)) for x in r] for r in arr]
    if any(rows[i][i] < 0 for i in range(n)):
        rep = find_negative_cycle(g)
        assert rep is not None
        return rep
    return DistanceMatrix(tuple(tuple(r) for r in rows))


def johnson_reweight(g: Graph):
    """Potentials ``h`` and reweighted arcs ``(u, v, w + h[u] - h[v])``.

    Returns a :class:`NegativeCycleReport` instead when one exists.
    """
    arcs = _arc_list(g)
    h, _, cycle = bellman_ford_arcs(g.n, arcs, [0] * g.n)
    if cycle is not None:
        return _report(arcs, cycle)
    return h, [(u, v, w + h[u] - h[v]) for u, v, w in arcs]


def johnson(g: Graph) -> DistanceMatrix | NegativeCycleReport:
    """All-pairs distances by potential reweighting plus Dijkstra per root."""
    res = johnson_reweight(g)
    if isinstance(res, NegativeCycleReport):
        return res
    h, rew = res
    out = [[] for _ in range(g.n)]
    for u, v, w in rew:
        if isinstance(w, float) and w < 0:
            w = 0.0  # rounding residue
        out[u].append((v, w))
    rows = []
    for s in range(g.n):
        d, _ = _dijkstra_core(g.n, out, s)
        rows.append(tuple(x if x == INF else x - h[s] + h[v] for v, x in enumerate(d)))
    return DistanceMatrix(tuple(rows))
