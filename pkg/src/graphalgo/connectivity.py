"""Bridges, cut vertices, biconnected blocks, Menger connectivities."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadOrdering, DirectedUnsupported, TooSmall
from .flow import FlowNetwork, max_flow
from .graph import Graph
from .traversal import is_connected

__all__ = [
    "LowReport",
    "tarjan_low",
    "low_points",
    "biconnected_components",
    "edge_connectivity",
    "vertex_connectivity",
    "local_edge_connectivity",
    "local_vertex_connectivity",
    "construct_kld_graph",
]


@dataclass(frozen=True)
class LowReport:
    dfs_number: tuple[int, ...]  # 1-based, 0 for unvisited (never after a full run)
    low: tuple[int, ...]
    bridges: frozenset  # of (u, v) with u < v
    cut_vertices: frozenset
    parent: tuple  # DFS tree parent or None for roots


def _undirected(g: Graph, what: str):
    if g.directed:
        raise DirectedUnsupported(f"{what} is defined for undirected graphs")


def tarjan_low(g: Graph) -> LowReport:
    """Low-point DFS over every component, roots taken in index order."""
    _undirected(g, "bridge detection")
    num, low, bridge_ids, cuts, parent = low_points(g.n, g.incident)
    bridges = frozenset(g.edges[e] for e in bridge_ids)
    return LowReport(tuple(num), tuple(low), bridges, frozenset(cuts), tuple(parent))


def low_points(n: int, incident):
    """DFS numbers, low points, bridge edge ids and cut vertices.

    ``incident[v]`` lists ``(neighbor, edge id)``; parallel edges are fine
    because the tree edge is skipped by id, not by endpoint.
    """
    num = [0] * n
    low = [0] * n
    parent: list = [None] * n
    bridges = set()
    cuts = set()
    counter = 0
    for root in range(n):
        if num[root]:
            continue
        counter += 1
        num[root] = low[root] = counter
        children = 0
        stack = [(root, None, iter(incident[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == pe:
                    continue
                if num[w]:
                    low[v] = min(low[v], num[w])
                    continue
                counter += 1
                num[w] = low[w] = counter
                parent[w] = v
                if v == root:
                    children += 1
                stack.append((w, e, iter(incident[w])))
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if num[p] < low[v]:
                    bridges.add(pe)
                if p != root and num[p] <= low[v]:
                    cuts.add(p)
        if children >= 2:
            cuts.add(root)
    return num, low, bridges, cuts, parent


def biconnected_components(g: Graph) -> list[list[int]]:
    """Blocks as sorted lists of edge ids (bridges form one-edge blocks).

    Ordered by their smallest edge id.
    """
    _undirected(g, "block decomposition")
    n = g.n
    num = [0] * n
    low = [0] * n
    counter = 0
    blocks = []
    estack: list[int] = []
    for root in range(n):
        if num[root]:
            continue
        counter += 1
        num[root] = low[root] = counter
        stack = [(root, None, iter(g.incident[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == pe:
                    continue
                if num[w]:
                    if num[w] < num[v]:
                        estack.append(e)
                        low[v] = min(low[v], num[w])
                    continue
                estack.append(e)
                counter += 1
                num[w] = low[w] = counter
                stack.append((w, e, iter(g.incident[w])))
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if num[p] <= low[v]:
                    block = []
                    while True:
                        f = estack.pop()
                        block.append(f)
                        if f == pe:
                            break
                    blocks.append(sorted(block))
    blocks.sort(key=lambda b: b[0])
    return blocks


def local_edge_connectivity(g: Graph, s: int, t: int) -> int:
    """Number of edge-disjoint s-t paths (unit-capacity max flow)."""
    arcs = []
    for u, v in g.edges:
        arcs += [(u, v), (v, u)]
    net = FlowNetwork(g.n, tuple(arcs), (1,) * len(arcs), s, t)
    return max_flow(net, "dinic").value


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Internally vertex-disjoint s-t paths for nonadjacent s, t.

    Vertex x becomes x_in = 2x and x_out = 2x + 1 joined by a unit arc; edges
    get capacity n, which no cut can reach.
    """
    n = g.n
    arcs, caps = [], []
    for x in range(n):
        arcs.append((2 * x, 2 * x + 1))
        caps.append(1 if x not in (s, t) else n)
    for u, v in g.edges:
        arcs += [(2 * u + 1, 2 * v), (2 * v + 1, 2 * u)]
        caps += [n, n]
    net = FlowNetwork(2 * n, tuple(arcs), tuple(caps), 2 * s + 1, 2 * t)
    return max_flow(net, "dinic").value


def edge_connectivity(g: Graph) -> int:
    """λ(G): min over t of the edge-disjoint paths from vertex 0."""
    _undirected(g, "edge connectivity")
    if g.n < 2:
        raise TooSmall("edge connectivity needs at least 2 vertices")
    if not is_connected(g):
        return 0
    return min(local_edge_connectivity(g, 0, t) for t in range(1, g.n))


def vertex_connectivity(g: Graph) -> int:
    """κ(G) over nonadjacent pairs; n - 1 for complete graphs."""
    _undirected(g, "vertex connectivity")
    if g.n < 2:
        raise TooSmall("vertex connectivity needs at least 2 vertices")
    if not is_connected(g):
        return 0
    best = g.n - 1
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, local_vertex_connectivity(g, s, t))
    return best


def construct_kld_graph(kappa: int, lam: int, d: int) -> Graph:
    """Two copies of K_{d+1} joined by λ edges touching κ vertices on one side.

    G1 holds vertices 0..d, G2 holds d+1..2d+1. The marked G1 vertices
    0..λ-1 are matched round-robin onto the marked G2 vertices d+1..d+κ.
    """
    if not (1 <= kappa <= lam <= d):
        raise BadOrdering(f"need 1 <= kappa <= lambda <= d, got ({kappa}, {lam}, {d})")
    edges = []
    for base in (0, d + 1):
        for i in range(d + 1):
            for j in range(i + 1, d + 1):
                edges.append((base + i, base + j))
    for i in range(lam):
        edges.append((i, d + 1 + (i % kappa)))
    return Graph(2 * d + 2, tuple(edges))
