"""Local and global centralities, small-world coefficient, inequality checks.

Distances are unweighted BFS hop counts. Pair sums run over ordered pairs.
Rational quantities are returned as exact Fractions; betweenness is a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import DegenerateBaseline, DegreeTooSmall, DirectedUnsupported, Disconnected, TooSmall
from .graph import Graph
from .traversal import connected_components, is_connected

__all__ = [
    "MetricReport",
    "InequalityReport",
    "VERTEX_KINDS",
    "GLOBAL_KINDS",
    "vertex_centrality",
    "global_metric",
    "small_world",
    "centrality_inequalities_check",
    "all_pairs",
]

VERTEX_KINDS = (
    "degree",
    "mnc",
    "dmnc",
    "local_clustering",
    "betweenness",
    "bottleneck",
    "closeness",
    "eccentricity",
    "radiality",
    "stress",
    "local_efficiency_contribution",
)
GLOBAL_KINDS = ("diameter", "density", "global_efficiency", "avg_shortest_path", "avg_clustering")
DISTANCE_KINDS = {"closeness", "eccentricity", "radiality"}


@dataclass(frozen=True)
class MetricReport:
    name: str
    values: tuple

    def __getitem__(self, v):
        return self.values[v]

    def as_dict(self) -> dict[int, object]:
        return dict(enumerate(self.values))


class _Paths:
    """All-pairs hop distances and shortest-path counts for one graph."""

    def __init__(self, g: Graph):
        self.g = g
        dist, sigma = _kernels.bfs_all_pairs(g.n, g.adjacency)
        self.dist = dist
        self.sigma = sigma

    @cached_property
    def connected(self) -> bool:
        return self.g.n > 0 and bool((self.dist >= 0).all())

    @cached_property
    def diameter(self) -> int:
        return int(self.dist.max()) if self.g.n else 0


def all_pairs(g: Graph):
    """``(dist, sigma)`` arrays; dist is -1 for unreachable pairs."""
    p = _Paths(g)
    return p.dist, p.sigma


def _undirected(g):
    if g.directed:
        raise DirectedUnsupported("centralities are defined for undirected graphs")


def _require_connected(g, p: _Paths):
    if g.n < 2:
        raise TooSmall("distance metrics need at least 2 vertices")
    if not p.connected:
        raise Disconnected("graph is not connected")


def _edges_within(g: Graph, verts) -> int:
    s = set(verts)
    return sum(1 for v in verts for w in g.adjacency[v] if w in s) // 2


def _clustering(g: Graph, v: int) -> Fraction:
    k = g.degrees[v]
    if k < 2:
        return Fraction(0)
    return Fraction(2 * _edges_within(g, g.adjacency[v]), k * (k - 1))


def _efficiency(h: Graph) -> Fraction:
    """Global efficiency; unreachable pairs contribute 0."""
    n = h.n
    if n < 2:
        return Fraction(0)
    dist, _ = _kernels.bfs_all_pairs(n, h.adjacency)
    total = sum((Fraction(1, int(d)) for d in dist.ravel() if d > 0), Fraction(0))
    return total / (n * (n - 1))


def _max_neighbourhood_component(g: Graph, v: int):
    """Vertex and edge count of the largest component of G[N(v)].

    Equal sizes are resolved by more edges, then by the smaller vertex.
    """
    nb = g.adjacency[v]
    if not nb:
        return 0, 0
    h, labels = g.induced(nb)
    best = (0, 0)
    for comp in connected_components(h):
        size = len(comp)
        edges = _edges_within(h, comp)
        if (size, edges) > best:
            best = (size, edges)
    return best


def _pair_flow(p: _Paths):
    """Per-vertex sums of sigma_sv * sigma_vt (stress) and of that over sigma_st."""
    n = p.g.n
    dist, sigma = p.dist, p.sigma
    stress = np.zeros(n)
    between = np.zeros(n)
    reach = dist >= 0
    off = ~np.eye(n, dtype=bool)
    for v in range(n):
        on = reach[:, v][:, None] & reach[v, :][None, :] & reach
        on &= (dist[:, v][:, None] + dist[v, :][None, :]) == dist
        on &= off
        on[v, :] = False
        on[:, v] = False
        through = np.outer(sigma[:, v], sigma[v, :])
        stress[v] = through[on].sum()
        between[v] = (through[on] / sigma[on]).sum()
    return stress, between


def _bottleneck(g: Graph, p: _Paths):
    n = g.n
    bn = [0] * n
    for s in range(n):
        d = p.dist[s]
        reach = [v for v in range(n) if d[v] >= 0]
        parent = {}
        for v in reach:
            if v == s:
                continue
            parent[v] = min(w for w in g.adjacency[v] if d[w] == d[v] - 1)
        below = {v: 0 for v in reach}
        for v in sorted(reach, key=lambda x: -d[x]):
            if v != s:
                below[parent[v]] += below[v] + 1
        for v in reach:
            if 4 * below[v] > len(reach):
                bn[v] += 1
    return bn


def vertex_centrality(g: Graph, kind: str, epsilon: float = 1.7) -> MetricReport:
    """Per-vertex centrality of the given kind (see ``VERTEX_KINDS``)."""
    _undirected(g)
    n = g.n
    if kind == "degree":
        return MetricReport(kind, g.degrees)
    if kind in ("mnc", "dmnc"):
        vals = []
        for v in range(n):
            size, edges = _max_neighbourhood_component(g, v)
            if kind == "mnc":
                vals.append(size)
            else:
                if not 1 <= epsilon <= 2:
                    raise ValueError("epsilon must lie in [1, 2]")
                vals.append(edges / size**epsilon if size else 0.0)
        return MetricReport(kind, tuple(vals))
    if kind == "local_clustering":
        return MetricReport(kind, tuple(_clustering(g, v) for v in range(n)))
    if kind == "local_efficiency_contribution":
        return MetricReport(kind, tuple(_efficiency(g.induced(g.adjacency[v])[0]) for v in range(n)))
    if kind not in VERTEX_KINDS:
        raise ValueError(f"unknown centrality {kind!r}")
    p = _Paths(g)
    if kind in ("betweenness", "stress"):
        stress, between = _pair_flow(p)
        if kind == "stress":
            return MetricReport(kind, tuple(int(round(x)) for x in stress))
        return MetricReport(kind, tuple(float(x) for x in between))
    if kind == "bottleneck":
        return MetricReport(kind, tuple(_bottleneck(g, p)))
    _require_connected(g, p)
    rows = p.dist
    if kind == "closeness":
        vals = tuple(Fraction(1, int(rows[v].sum())) for v in range(n))
    elif kind == "eccentricity":
        vals = tuple(Fraction(1, int(rows[v].max())) for v in range(n))
    else:  # radiality, summed over t != v
        diam = p.diameter
        vals = tuple(
            Fraction(int(sum(diam + 1 - int(rows[v, t]) for t in range(n) if t != v)), n - 1)
            for v in range(n)
        )
    return MetricReport(kind, vals)


def _avg_clustering(g):
    return sum((_clustering(g, v) for v in range(g.n)), Fraction(0)) / g.n


def global_metric(g: Graph, kind: str):
    """Scalar graph metric of the given kind (see ``GLOBAL_KINDS``)."""
    _undirected(g)
    n = g.n
    if kind == "density":
        if n < 2:
            raise TooSmall("density needs at least 2 vertices")
        return Fraction(2 * g.m, n * (n - 1))
    if kind == "avg_clustering":
        if n < 1:
            raise TooSmall("empty graph")
        return _avg_clustering(g)
    if kind not in GLOBAL_KINDS:
        raise ValueError(f"unknown global metric {kind!r}")
    p = _Paths(g)
    _require_connected(g, p)
    if kind == "diameter":
        return p.diameter
    if kind == "avg_shortest_path":
        return Fraction(int(p.dist.sum()), n * (n - 1))
    return _efficiency(g)


def _random_connected(n, m, rng, max_tries):
    iu, ju = np.triu_indices(n, 1)
    for _ in range(max_tries):
        pick = np.sort(rng.choice(iu.size, size=m, replace=False))
        h = Graph(n, tuple(zip(iu[pick].tolist(), ju[pick].tolist())))
        if is_connected(h):
            return h
    return None


def small_world(g: Graph, seed: int = 0, samples: int = 20, max_tries: int = 10000) -> float:
    """C(G)/C(rand) divided by L(G)/L(rand) over seeded connected (n, m) baselines."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    c = global_metric(g, "avg_clustering")
    L = global_metric(g, "avg_shortest_path")
    rng = np.random.default_rng(seed)
    cs, ls = [], []
    for _ in range(samples):
        h = _random_connected(g.n, g.m, rng, max_tries)
        if h is None:
            raise DegenerateBaseline("could not sample a connected baseline graph")
        cs.append(global_metric(h, "avg_clustering"))
        ls.append(global_metric(h, "avg_shortest_path"))
    c_rand = sum(cs, Fraction(0)) / samples
    l_rand = sum(ls, Fraction(0)) / samples
    if c_rand == 0 or l_rand == 0:
        raise DegenerateBaseline("baseline clustering or path length is zero")
    return float((c / c_rand) / (L / l_rand))


@dataclass(frozen=True)
class InequalityReport:
    local_efficiency: Fraction
    avg_clustering: Fraction
    avg_shortest_path: Fraction
    density: Fraction
    global_efficiency: Fraction
    cent1_slack: Fraction  # (1 + C)/2 - E_loc
    path_slack: Fraction  # L - (2 - D)
    eff_lower_slack: Fraction  # 2 E_glob - (3 - L)
    eff_upper_slack: Fraction  # (1 + D) - 2 E_glob
    neighbourhoods_diam_le_2: bool

    @property
    def cent1_holds(self) -> bool:
        return self.cent1_slack >= 0

    @property
    def path_holds(self) -> bool:
        return self.path_slack >= 0

    @property
    def efficiency_holds(self) -> bool:
        return self.eff_lower_slack >= 0 and self.eff_upper_slack >= 0

    @property
    def all_hold(self) -> bool:
        return self.cent1_holds and self.path_holds and self.efficiency_holds

    @property
    def cent1_equality(self) -> bool:
        return self.cent1_slack == 0


def _diam_le_2(h: Graph) -> bool:
    if h.n <= 1:
        return True
    dist, _ = _kernels.bfs_all_pairs(h.n, h.adjacency)
    return bool((dist >= 0).all() and dist.max() <= 2)


def centrality_inequalities_check(g: Graph) -> InequalityReport:
    """Evaluate the three centrality inequalities exactly."""
    _undirected(g)
    p = _Paths(g)
    _require_connected(g, p)
    if min(g.degrees) < 2:
        raise DegreeTooSmall("every vertex needs degree >= 2")
    n = g.n
    hoods = [g.induced(g.adjacency[v])[0] for v in range(n)]
    e_loc = sum((_efficiency(h) for h in hoods), Fraction(0)) / n
    c = _avg_clustering(g)
    L = Fraction(int(p.dist.sum()), n * (n - 1))
    D = Fraction(2 * g.m, n * (n - 1))
    e_glob = _efficiency(g)
    return InequalityReport(
        local_efficiency=e_loc,
        avg_clustering=c,
        avg_shortest_path=L,
        density=D,
        global_efficiency=e_glob,
        cent1_slack=(1 + c) / 2 - e_loc,
        path_slack=L - (2 - D),
        eff_lower_slack=2 * e_glob - (3 - L),
        eff_upper_slack=(1 + D) - 2 * e_glob,
        neighbourhoods_diam_le_2=all(_diam_le_2(h) for h in hoods),
    )
