"""Minimum spanning trees and exact spanning-tree counting."""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from .errors import Disconnected, DirectedUnsupported, TooLarge, Unweighted
from .graph import Graph, matrix
from .traversal import is_connected

__all__ = ["TreeResult", "mst", "spanning_tree_count", "spanning_tree_count_bruteforce", "DisjointSet"]


class DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if self.rank[a] < self.rank[b]:
            a, b = b, a
        self.parent[b] = a
        if self.rank[a] == self.rank[b]:
            self.rank[a] += 1
        return True


@dataclass(frozen=True)
class TreeResult:
    edges: tuple[int, ...]
    total_weight: object


def mst(g: Graph, strategy: str = "kruskal") -> TreeResult:
    """Minimum spanning tree; equal weights are broken by smaller edge id."""
    if g.directed:
        raise DirectedUnsupported("spanning trees need an undirected graph")
    if not g.weighted:
        raise Unweighted("minimum spanning tree needs edge weights")
    if g.n > 0 and not is_connected(g):
        raise Disconnected("graph is not connected")
    if strategy == "kruskal":
        chosen = _kruskal(g)
    elif strategy == "prim":
        chosen = _prim(g)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    chosen = tuple(sorted(chosen))
    return TreeResult(chosen, sum((g.weights[e] for e in chosen), 0))


def _kruskal(g):
    dsu = DisjointSet(g.n)
    chosen = []
    for e in sorted(range(g.m), key=lambda e: (g.weights[e], e)):
        u, v = g.edges[e]
        if dsu.union(u, v):
            chosen.append(e)
            if len(chosen) == g.n - 1:
                break
    return chosen


def _prim(g):
    if g.n == 0:
        return []
    in_tree = [False] * g.n
    in_tree[0] = True
    heap = [(g.weights[e], e, w) for w, e in g.incident[0]]
    heapq.heapify(heap)
    chosen = []
    while heap and len(chosen) < g.n - 1:
        _, e, v = heapq.heappop(heap)
        if in_tree[v]:
            continue
        in_tree[v] = True
        chosen.append(e)
        for w, f in g.incident[v]:
            if not in_tree[w]:
                heapq.heappush(heap, (g.weights[f], f, w))
    return chosen


def spanning_tree_count(g: Graph) -> int:
    """Kirchhoff: cofactor of the Laplacian at the last diagonal entry.

    Edge weights, if any, are ignored (the count is structural); a
    disconnected graph yields 0.
    """
    if g.directed:
        raise DirectedUnsupported("matrix-tree counting needs an undirected graph")
    if g.n <= 1:
        return g.n
    lap = matrix(g.unweighted(), "laplacian")
    return lap.cofactor(g.n - 1, g.n - 1)


def spanning_tree_count_bruteforce(g: Graph, max_edges: int = 24) -> int:
    """Count (n-1)-edge subsets that form a spanning tree, exhaustively."""
    if g.directed:
        raise DirectedUnsupported("spanning trees need an undirected graph")
    if g.m > max_edges:
        raise TooLarge(f"{g.m} edges exceeds the brute-force limit {max_edges}")
    if g.n <= 1:
        return g.n
    count = 0
    for subset in itertools.combinations(range(g.m), g.n - 1):
        dsu = DisjointSet(g.n)
        if all(dsu.union(*g.edges[e]) for e in subset):
            count += 1
    return count
