"""DFS/BFS orders, components, spanning forests and bipartiteness."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import DirectedUnsupported, IndexOutOfRange
from .graph import Graph

__all__ = [
    "Traversal",
    "Bipartition",
    "traverse",
    "connected_components",
    "is_connected",
    "spanning_forest",
    "bipartite_partition",
]


@dataclass(frozen=True)
class Traversal:
    root: int
    order: tuple[int, ...]
    number: dict[int, int]  # vertex -> 1-based visit number
    parent: dict[int, int]  # tree edges, child -> parent
    depth: dict[int, int] = field(default_factory=dict)

    @property
    def tree_edges(self) -> list[tuple[int, int]]:
        return [(p, c) for c, p in self.parent.items()]


@dataclass(frozen=True)
class Bipartition:
    side: dict[int, int] | None = None
    odd_cycle: tuple[int, ...] | None = None

    @property
    def is_bipartite(self) -> bool:
        return self.side is not None


def traverse(g: Graph, root: int, order: str = "dfs", neighbors=None) -> Traversal:
    """Visit the root's component, lowest-index neighbor first.

    ``neighbors`` overrides the adjacency (weak connectivity passes the
    undirected view here).
    """
    if not 0 <= root < g.n:
        raise IndexOutOfRange(f"root {root} out of range")
    adj = g.adjacency if neighbors is None else neighbors
    number = {root: 1}
    seq = [root]
    parent = {}
    depth = {root: 0}
    if order == "bfs":
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in number:
                    number[w] = len(seq) + 1
                    seq.append(w)
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
    elif order == "dfs":
        stack = [(root, iter(adj[root]))]
        while stack:
            u, it = stack[-1]
            for w in it:
                if w not in number:
                    number[w] = len(seq) + 1
                    seq.append(w)
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    stack.append((w, iter(adj[w])))
                    break
            else:
                stack.pop()
    else:
        raise ValueError(f"order must be 'dfs' or 'bfs', got {order!r}")
    return Traversal(root, tuple(seq), number, parent, depth)


def connected_components(g: Graph) -> list[list[int]]:
    """Weakly connected components, each sorted, ordered by smallest vertex."""
    adj = g.undirected_adjacency
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def spanning_forest(g: Graph, order: str = "dfs") -> list[list[tuple[int, int]]]:
    """One spanning tree per component, rooted at its smallest vertex."""
    adj = g.undirected_adjacency
    forest = []
    for comp in connected_components(g):
        t = traverse(g, comp[0], order, neighbors=adj)
        forest.append(sorted((min(p, c), max(p, c)) for p, c in t.tree_edges))
    return forest


def bipartite_partition(g: Graph) -> Bipartition:
    """2-colouring by BFS depth parity, or an odd cycle as certificate."""
    if g.directed:
        raise DirectedUnsupported("bipartiteness is tested on undirected graphs")
    side = {}
    for comp in connected_components(g):
        t = traverse(g, comp[0], "bfs")
        for v in comp:
            side[v] = t.depth[v] % 2
        for u in comp:
            for w in g.adjacency[u]:
                if u < w and side[u] == side[w]:
                    return Bipartition(odd_cycle=_tree_cycle(t.parent, t.depth, u, w))
    return Bipartition(side=side)


def _tree_cycle(parent, depth, u, w):
    """Tree path u..w closed by the non-tree edge (w, u)."""
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()  # common ancestor already in left
    return tuple(left + right[::-1])
