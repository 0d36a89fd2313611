"""Flow networks: validation, decomposition, max-flow, min-cut, min-cost flow.

Flows are stored per arc. The skew-symmetric function over ordered pairs is
available through :meth:`Flow.net`. Residual edge ``2i`` is arc ``i`` forward
with capacity ``c - f``; residual edge ``2i + 1`` is its reverse with
capacity ``f``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .errors import BadNetwork, IndexOutOfRange, InvalidFlow, UnboundedCost
from .graph import Graph
from .shortest_path import bellman_ford_arcs

__all__ = [
    "FlowNetwork",
    "Flow",
    "Cut",
    "FlowReport",
    "FlowPart",
    "Residual",
    "validate_flow",
    "decompose_flow",
    "max_flow",
    "level_graph",
    "bfs_levels",
    "min_cut",
    "min_cost_max_flow",
    "flow_cost",
    "residual_negative_cycle",
    "MAX_FLOW_STRATEGIES",
    "MIN_COST_STRATEGIES",
]

MAX_FLOW_STRATEGIES = ("ford_fulkerson", "edmonds_karp", "dinic")
MIN_COST_STRATEGIES = ("cycle_canceling_ff", "dinic_then_cancel")
FLOAT_EPS = 1e-12


@dataclass(frozen=True)
class FlowNetwork:
    """Capacitated digraph with source and terminal.

    ``arcs`` may contain antiparallel pairs but no repeated ordered pair.
    ``capacity`` may contain ``math.inf``.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]
    capacity: tuple
    source: int
    terminal: int
    cost: tuple | None = None

    def __post_init__(self):
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "capacity", tuple(self.capacity))
        if self.cost is not None:
            object.__setattr__(self, "cost", tuple(self.cost))
            if len(self.cost) != len(arcs):
                raise BadNetwork(f"{len(self.cost)} costs for {len(arcs)} arcs")
        if len(self.capacity) != len(arcs):
            raise BadNetwork(f"{len(self.capacity)} capacities for {len(arcs)} arcs")
        for x in (self.source, self.terminal):
            if not 0 <= x < self.n:
                raise IndexOutOfRange(f"vertex {x} out of range")
        if self.source == self.terminal:
            raise BadNetwork("source and terminal coincide")
        seen = set()
        for i, (u, v) in enumerate(arcs):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise IndexOutOfRange(f"arc ({u}, {v}) out of range")
            if u == v:
                raise BadNetwork(f"loop arc at {u}")
            if (u, v) in seen:
                raise BadNetwork(f"repeated arc ({u}, {v})")
            seen.add((u, v))
            if not self.capacity[i] > 0:
                raise BadNetwork(f"arc {i} has non-positive capacity")

    @classmethod
    def from_graph(cls, g: Graph, source: int, terminal: int, costs=None) -> "FlowNetwork":
        """Weights become capacities; an undirected edge yields both arcs."""
        arcs, caps, cs = [], [], []
        for e, (u, v) in enumerate(g.edges):
            c = g.weight(e)
            pairs = [(u, v)] if g.directed else [(u, v), (v, u)]
            for a in pairs:
                arcs.append(a)
                caps.append(c)
                if costs is not None:
                    cs.append(costs[e])
        return cls(g.n, tuple(arcs), tuple(caps), source, terminal, tuple(cs) if costs is not None else None)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def c(self, u: int, v: int):
        """Capacity function on ordered pairs (0 for non-arcs)."""
        i = self._index.get((u, v))
        return 0 if i is None else self.capacity[i]

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {a: i for i, a in enumerate(self.arcs)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def arc_index(self, u: int, v: int) -> int | None:
        return self._index.get((u, v))

    @property
    def exact(self) -> bool:
        vals = list(self.capacity) + list(self.cost or ())
        return not any(isinstance(x, float) and not math.isinf(x) for x in vals)


@dataclass(frozen=True)
class Flow:
    network: FlowNetwork
    arc_flow: tuple
    value: object
    augmentations: int = 0
    phase_distances: tuple[int, ...] = ()

    def net(self, u: int, v: int):
        """Skew-symmetric f(u, v)."""
        net = self.network
        a, b = net.arc_index(u, v), net.arc_index(v, u)
        return (0 if a is None else self.arc_flow[a]) - (0 if b is None else self.arc_flow[b])

    def net_function(self) -> dict:
        out: dict = {}
        for (u, v), x in zip(self.network.arcs, self.arc_flow):
            if x:
                out[(u, v)] = out.get((u, v), 0) + x
                out[(v, u)] = out.get((v, u), 0) - x
        return {k: x for k, x in out.items() if x != 0}

    @property
    def cost(self):
        return flow_cost(self.network, self.arc_flow)


@dataclass(frozen=True)
class Cut:
    A: frozenset
    B: frozenset
    capacity: object


@dataclass(frozen=True)
class FlowReport:
    ok: bool
    value: object = 0
    violation: str | None = None  # "skew" | "capacity" | "conservation"
    location: tuple | int | None = None
    message: str = ""


@dataclass(frozen=True)
class FlowPart:
    kind: str  # "path" | "cycle"
    vertices: tuple[int, ...]
    arcs: tuple[int, ...]
    amount: object


def flow_cost(net: FlowNetwork, arc_flow: Sequence):
    if net.cost is None:
        raise BadNetwork("network has no costs")
    return sum((a * f for a, f in zip(net.cost, arc_flow) if f > 0), 0)


# ------------------------------------------------------------ validation


def _eps(net):
    return 0 if net.exact else 1e-9


def validate_flow(net: FlowNetwork, f: Flow | Mapping) -> FlowReport:
    """Check skew symmetry, capacity and conservation.

    ``f`` is a :class:`Flow` or a mapping of ordered pairs to values of the
    skew-symmetric function; a pair whose reverse is missing implies it.
    """
    eps = _eps(net)
    if isinstance(f, Flow):
        for i, x in enumerate(f.arc_flow):
            if x < -eps:
                return FlowReport(False, violation="capacity", location=net.arcs[i],
                                  message=f"negative flow on arc {net.arcs[i]}")
        fun = f.net_function()
    else:
        fun = {}
        for (u, v), x in f.items():
            if (v, u) in f and abs(f[(v, u)] + x) > eps:
                return FlowReport(False, violation="skew", location=(u, v),
                                  message=f"f{(u, v)} != -f{(v, u)}")
            fun[(u, v)] = x
            fun[(v, u)] = -x
    for (u, v), x in sorted(fun.items()):
        if not (0 <= u < net.n and 0 <= v < net.n):
            return FlowReport(False, violation="capacity", location=(u, v), message="pair out of range")
        if x > net.c(u, v) + eps:
            return FlowReport(False, violation="capacity", location=(u, v),
                              message=f"f{(u, v)} = {x} exceeds c = {net.c(u, v)}")
    excess = [0] * net.n
    for (u, v), x in fun.items():
        excess[u] += x
    for u in range(net.n):
        if u not in (net.source, net.terminal) and abs(excess[u]) > eps:
            return FlowReport(False, violation="conservation", location=u,
                              message=f"net outflow {excess[u]} at vertex {u}")
    return FlowReport(True, value=excess[net.source])


# ------------------------------------------------------------ decomposition


def decompose_flow(net: FlowNetwork, f: Flow) -> list[FlowPart]:
    """Split a valid flow into at most ``m`` path and cycle parts."""
    rep = validate_flow(net, f)
    if not rep.ok:
        raise InvalidFlow(rep.message)
    if rep.value < 0:
        raise InvalidFlow("flow value is negative")
    eps = _eps(net)
    rest = list(f.arc_flow)
    out_arcs = [[] for _ in range(net.n)]
    for i, (u, v) in enumerate(net.arcs):
        out_arcs[u].append(i)

    def next_arc(u):
        for i in out_arcs[u]:
            if rest[i] > eps:
                return i
        return None

    parts = []

    def peel(vertices, arcs, kind):
        amount = min(rest[i] for i in arcs)
        for i in arcs:
            rest[i] -= amount
            if abs(rest[i]) <= eps:
                rest[i] = 0
        parts.append(FlowPart(kind, tuple(vertices), tuple(arcs), amount))

    def walk(start, stop_at_t):
        vertices, arcs, pos = [start], [], {start: 0}
        u = start
        while True:
            i = next_arc(u)
            if i is None:  # pragma: no cover - conservation forbids it
                raise InvalidFlow(f"flow stuck at vertex {u}")
            v = net.arcs[i][1]
            arcs.append(i)
            if stop_at_t and v == net.terminal:
                vertices.append(v)
                return "path", vertices, arcs
            if v in pos:
                k = pos[v]
                return "cycle", vertices[k:] + [v], arcs[k:]
            pos[v] = len(vertices)
            vertices.append(v)
            u = v

    while next_arc(net.source) is not None:
        kind, vs, arcs = walk(net.source, True)
        peel(vs, arcs, kind)
    for i in range(net.m):
        while rest[i] > eps:
            kind, vs, arcs = walk(net.arcs[i][0], False)
            peel(vs, arcs, kind)
    return parts


# ------------------------------------------------------------ residual network


class Residual:
    """Mutable residual network over a :class:`FlowNetwork`."""

    def __init__(self, net: FlowNetwork, arc_flow: Sequence | None = None):
        self.net = net
        self.eps = 0 if net.exact else FLOAT_EPS
        self.head = []
        self.tail = []
        self.cap = []
        self.cost = []
        for i, (u, v) in enumerate(net.arcs):
            x = 0 if arc_flow is None else arc_flow[i]
            a = 0 if net.cost is None else net.cost[i]
            self.tail += [u, v]
            self.head += [v, u]
            self.cap += [net.capacity[i] - x, x]
            self.cost += [a, -a]
        adj = [[] for _ in range(net.n)]
        for e in range(len(self.head)):
            adj[self.tail[e]].append(e)
        self.adj = [sorted(lst, key=lambda e: (self.head[e], e)) for lst in adj]

    def live(self, e: int) -> bool:
        return self.cap[e] > self.eps

    def push(self, e: int, amount) -> None:
        self.cap[e] -= amount
        self.cap[e ^ 1] += amount

    def arc_flow(self) -> tuple:
        out = []
        for i in range(self.net.m):
            x = self.cap[2 * i + 1]
            if self.eps and abs(x) <= self.eps:
                x = 0.0
            out.append(x)
        return tuple(out)

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for e in self.adj[u]:
                if self.live(e) and self.head[e] not in seen:
                    seen.add(self.head[e])
                    stack.append(self.head[e])
        return seen

    def levels(self, s: int) -> list:
        dist = [None] * self.net.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.adj[u]:
                w = self.head[e]
                if self.live(e) and dist[w] is None:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return dist

    def bottleneck(self, path: Sequence[int]):
        return min(self.cap[e] for e in path)

    def augment(self, path: Sequence[int]):
        delta = self.bottleneck(path)
        if delta == math.inf:
            raise BadNetwork("augmenting path of infinite capacity")
        for e in path:
            self.push(e, delta)
        return delta


PathSelector = Callable[[Residual], "Sequence[int] | None"]


def _dfs_path(res: Residual) -> list[int] | None:
    s, t = res.net.source, res.net.terminal
    via = {s: None}
    stack = [(s, iter(res.adj[s]))]
    while stack:
        u, it = stack[-1]
        for e in it:
            w = res.head[e]
            if res.live(e) and w not in via:
                via[w] = e
                if w == t:
                    return _unwind(res, via, t)
                stack.append((w, iter(res.adj[w])))
                break
        else:
            stack.pop()
    return None


def _bfs_path(res: Residual) -> list[int] | None:
    s, t = res.net.source, res.net.terminal
    via = {s: None}
    q = deque([s])
    while q:
        u = q.popleft()
        for e in res.adj[u]:
            w = res.head[e]
            if res.live(e) and w not in via:
                via[w] = e
                if w == t:
                    return _unwind(res, via, t)
                q.append(w)
    return None


def _unwind(res, via, t):
    path = []
    v = t
    while via[v] is not None:
        e = via[v]
        path.append(e)
        v = res.tail[e]
    return path[::-1]


def _augmenting(res: Residual, find: PathSelector) -> int:
    count = 0
    while True:
        path = find(res)
        if not path:
            return count
        res.augment(path)
        count += 1


def _dinic(res: Residual) -> tuple[int, list[int]]:
    s, t = res.net.source, res.net.terminal
    count = 0
    phases = []
    while True:
        level = res.levels(s)
        if level[t] is None:
            return count, phases
        if phases and level[t] <= phases[-1]:  # pragma: no cover - theorem guard
            raise AssertionError("dinic phase distance did not increase")
        phases.append(level[t])
        ptr = [0] * res.net.n
        while True:
            path = _blocking_dfs(res, level, ptr)
            if path is None:
                break
            res.augment(path)
            count += 1


def _blocking_dfs(res, level, ptr):
    """One s-t path in the level graph; dead arcs are skipped for the phase."""
    s, t = res.net.source, res.net.terminal
    path = []
    u = s
    while u != t:
        adj = res.adj[u]
        while ptr[u] < len(adj):
            e = adj[ptr[u]]
            w = res.head[e]
            if res.live(e) and level[w] is not None and level[w] == level[u] + 1:
                break
            ptr[u] += 1
        if ptr[u] == len(adj):
            if u == s:
                return None
            level[u] = None  # dead end: prune the vertex
            e = path.pop()
            u = res.tail[e]
            ptr[u] += 1
            continue
        e = adj[ptr[u]]
        path.append(e)
        u = res.head[e]
    return path


def max_flow(net: FlowNetwork, strategy: str = "dinic", path_selector: PathSelector | None = None) -> Flow:
    """Maximum flow; ``path_selector`` replaces the DFS search in Ford-Fulkerson."""
    res = Residual(net)
    phases: list[int] = []
    if strategy == "ford_fulkerson":
        count = _augmenting(res, path_selector or _dfs_path)
    elif strategy == "edmonds_karp":
        count = _augmenting(res, _bfs_path)
    elif strategy == "dinic":
        count, phases = _dinic(res)
    else:
        raise ValueError(f"unknown max-flow strategy {strategy!r}")
    arc_flow = res.arc_flow()
    value = _value(net, arc_flow)
    return Flow(net, arc_flow, value, count, tuple(phases))


def _value(net, arc_flow):
    s = net.source
    return sum((x for (u, _), x in zip(net.arcs, arc_flow) if u == s), 0) - sum(
        (x for (_, v), x in zip(net.arcs, arc_flow) if v == s), 0
    )


def bfs_levels(net: FlowNetwork, flow: Flow | None = None) -> list:
    """BFS distance from the source in the residual network (None if unreachable)."""
    res = Residual(net, None if flow is None else flow.arc_flow)
    return res.levels(net.source)


def level_graph(net: FlowNetwork, flow: Flow | None = None) -> Graph:
    """Residual arcs going from one BFS level to the next.

    Weights are residual capacities; parallel residual arcs are merged.
    """
    res = Residual(net, None if flow is None else flow.arc_flow)
    level = res.levels(net.source)
    caps: dict = {}
    for e in range(len(res.head)):
        u, w = res.tail[e], res.head[e]
        if res.live(e) and level[u] is not None and level[w] is not None and level[w] == level[u] + 1:
            caps[(u, w)] = caps.get((u, w), 0) + res.cap[e]
    keys = sorted(caps)
    return Graph(net.n, tuple(keys), directed=True, weights=tuple(caps[k] for k in keys) if keys else None)


def min_cut(net: FlowNetwork, strategy: str = "dinic") -> Cut:
    """Residual-reachable side of a maximum flow."""
    f = max_flow(net, strategy)
    A = Residual(net, f.arc_flow).reachable(net.source)
    cap = sum((c for (u, v), c in zip(net.arcs, net.capacity) if u in A and v not in A), 0)
    return Cut(frozenset(A), frozenset(set(range(net.n)) - A), cap)


# ------------------------------------------------------------ min-cost flow


def _live_arcs(res: Residual):
    ids = [e for e in range(len(res.head)) if res.live(e)]
    return ids, [(res.tail[e], res.head[e], res.cost[e]) for e in ids]


def residual_negative_cycle(res: Residual) -> list[int] | None:
    """Residual edge ids of a negative-cost cycle, or None."""
    ids, arcs = _live_arcs(res)
    _, _, cyc = bellman_ford_arcs(res.net.n, arcs, [0] * res.net.n)
    if cyc is None:
        return None
    path = [ids[k] for k in cyc]
    if res.eps and sum(res.cost[e] for e in path) > -1e-9:
        return None  # rounding noise in float mode
    return path


def _cancel_cycles(res: Residual) -> int:
    count = 0
    while True:
        cyc = residual_negative_cycle(res)
        if cyc is None:
            return count
        if res.bottleneck(cyc) == math.inf:
            raise UnboundedCost("negative-cost cycle with unbounded capacity")
        res.augment(cyc)
        count += 1


def _cheapest_path(res: Residual) -> list[int] | None:
    s, t = res.net.source, res.net.terminal
    ids, arcs = _live_arcs(res)
    init = [math.inf] * res.net.n
    init[s] = 0
    dist, pred, cyc = bellman_ford_arcs(res.net.n, arcs, init)
    if cyc is not None:  # pragma: no cover - canceled beforehand
        raise AssertionError("negative cycle in residual network")
    if dist[t] == math.inf:
        return None
    path = []
    v = t
    while v != s:
        k = pred[v]
        path.append(ids[k])
        v = arcs[k][0]
    return path[::-1]


def min_cost_max_flow(net: FlowNetwork, strategy: str = "cycle_canceling_ff") -> Flow:
    """Maximum flow of minimum total cost.

    ``cycle_canceling_ff`` cancels negative cycles of the zero flow, then
    augments along cheapest residual paths with the full bottleneck.
    ``dinic_then_cancel`` cancels negative cycles of a Dinic maximum flow.
    """
    if net.cost is None:
        raise BadNetwork("min-cost flow needs arc costs")
    if strategy == "cycle_canceling_ff":
        res = Residual(net)
        count = _cancel_cycles(res)
        while True:
            path = _cheapest_path(res)
            if path is None:
                break
            res.augment(path)
            count += 1
    elif strategy == "dinic_then_cancel":
        f = max_flow(net, "dinic")
        res = Residual(net, f.arc_flow)
        count = f.augmentations + _cancel_cycles(res)
    else:
        raise ValueError(f"unknown min-cost strategy {strategy!r}")
    arc_flow = res.arc_flow()
    return Flow(net, arc_flow, _value(net, arc_flow), count)
