"""Eulerian classification and trails; Hamiltonian sufficient conditions."""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import low_points
from .errors import DirectedUnsupported, NoEulerPath, NotEulerian, TooLarge, TooSmall
from .graph import Graph
from .traversal import is_connected

__all__ = [
    "EulerClassification",
    "eulerian_classify",
    "eulerian_cycle",
    "eulerian_path",
    "is_euler_trail",
    "hamiltonian_sufficient",
    "hamiltonian_cycle_bruteforce",
    "EULER_STRATEGIES",
    "HAMILTON_CRITERIA",
]

EULER_STRATEGIES = ("cycle_stack", "fleury", "two_stacks")
HAMILTON_CRITERIA = ("ore", "dirac", "bondy_chvatal")


@dataclass(frozen=True)
class EulerClassification:
    kind: str  # "eulerian_cycle" | "eulerian_path" | "none"
    odd_vertices: tuple[int, ...]
    endpoints: tuple[int, int] | None = None


def _edge_components(g: Graph) -> int:
    """Number of connected components that carry at least one edge."""
    seen = [False] * g.n
    count = 0
    for s in range(g.n):
        if seen[s] or not g.adjacency[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def eulerian_classify(g: Graph) -> EulerClassification:
    """Parity census; isolated vertices do not matter."""
    if g.directed:
        raise DirectedUnsupported("Eulerian classification is for undirected graphs")
    odd = tuple(v for v in range(g.n) if g.degrees[v] % 2)
    if _edge_components(g) > 1:
        return EulerClassification("none", odd)
    if not odd:
        return EulerClassification("eulerian_cycle", odd)
    if len(odd) == 2:
        return EulerClassification("eulerian_path", odd, (odd[0], odd[1]))
    return EulerClassification("none", odd)


# Internally a trail runs over a multigraph: edge id -> (u, v).


def _incidence(n, edges):
    inc = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        inc[u].append((e, v))
        inc[v].append((e, u))
    for lst in inc:
        lst.sort()
    return inc


def _start_vertex(n, edges):
    return min(min(u, v) for u, v in edges)


def _closed_walk(start, inc, used, ptr):
    """Walk on unused edges until stuck; with even degrees this closes at start."""
    walk = []
    x = start
    while True:
        lst = inc[x]
        while ptr[x] < len(lst) and used[lst[ptr[x]][0]]:
            ptr[x] += 1
        if ptr[x] == len(lst):
            return walk
        e, y = lst[ptr[x]]
        used[e] = True
        walk.append((x, y, e))
        x = y


def _cycle_stack(n, edges):
    inc = _incidence(n, edges)
    used = [False] * len(edges)
    ptr = [0] * n
    cycles = []
    for s in range(n):
        while True:
            c = _closed_walk(s, inc, used, ptr)
            if not c:
                break
            cycles.append(c)
    touching = [[] for _ in range(n)]
    for i, c in enumerate(cycles):
        for k, (x, _, _) in enumerate(c):
            touching[x].append((i, k))
    taken = [False] * len(cycles)
    taken[0] = True
    stack = [[cycles[0], 0]]
    x = cycles[0][0][0]
    out = []
    while stack:
        for i, k in touching[x]:
            if not taken[i]:
                taken[i] = True
                c = cycles[i]
                stack.append([c[k:] + c[:k], 0])
                break
        top = stack[-1]
        if top[1] < len(top[0]):
            step = top[0][top[1]]
            top[1] += 1
            out.append(step)
            x = step[1]
        else:
            stack.pop()
    return out


def _fleury(n, edges):
    alive = [True] * len(edges)
    x = _start_vertex(n, edges)
    out = []
    for _ in range(len(edges)):
        inc = [[] for _ in range(n)]
        for e, (u, v) in enumerate(edges):
            if alive[e]:
                inc[u].append((v, e))
                inc[v].append((u, e))
        here = sorted(e for _, e in inc[x])
        if len(here) == 1:
            e = here[0]
        else:
            _, _, bridges, _, _ = low_points(n, inc)
            e = next((f for f in here if f not in bridges), here[0])
        u, v = edges[e]
        y = v if u == x else u
        alive[e] = False
        out.append((x, y, e))
        x = y
    return out


def _two_stacks(n, edges):
    inc = _incidence(n, edges)
    used = [False] * len(edges)
    ptr = [0] * n
    start = _start_vertex(n, edges)
    s1 = [(start, None)]  # (vertex, step that reached it)
    s2 = []
    while s1:
        x, _ = s1[-1]
        lst = inc[x]
        while ptr[x] < len(lst) and used[lst[ptr[x]][0]]:
            ptr[x] += 1
        if ptr[x] < len(lst):
            e, y = lst[ptr[x]]
            used[e] = True
            s1.append((y, (x, y, e)))
        else:
            s2.append(s1.pop())
    return [step for _, step in reversed(s2) if step is not None]


_STRATEGIES = {"cycle_stack": _cycle_stack, "fleury": _fleury, "two_stacks": _two_stacks}


def _run(n, edges, strategy):
    try:
        fn = _STRATEGIES[strategy]
    except KeyError:
        raise ValueError(f"unknown strategy {strategy!r}") from None
    return fn(n, edges)


def eulerian_cycle(g: Graph, strategy: str = "cycle_stack") -> list[tuple[int, int]]:
    """Closed trail through every edge, as oriented ``(u, v)`` steps."""
    if eulerian_classify(g).kind != "eulerian_cycle":
        raise NotEulerian("graph has no Eulerian cycle")
    if g.m == 0:
        return []
    return [(x, y) for x, y, _ in _run(g.n, list(g.edges), strategy)]


def eulerian_path(g: Graph, strategy: str = "cycle_stack") -> list[tuple[int, int]]:
    """Open trail between the two odd vertices, smaller one first.

    A virtual edge joins the odd vertices (parallel to a real edge if need
    be), the closed trail is rotated to end with it, and it is dropped.
    """
    cls = eulerian_classify(g)
    if cls.kind != "eulerian_path":
        raise NoEulerPath("graph needs exactly two odd vertices and one edge component")
    a, b = cls.endpoints
    edges = list(g.edges) + [(a, b)]
    virtual = len(edges) - 1
    trail = _run(g.n, edges, strategy)
    k = next(i for i, step in enumerate(trail) if step[2] == virtual)
    trail = trail[k + 1:] + trail[:k]
    steps = [(x, y) for x, y, _ in trail]
    if steps[0][0] != a:
        steps = [(y, x) for x, y in reversed(steps)]
    return steps


def is_euler_trail(g: Graph, steps, closed: bool | None = None) -> bool:
    """Independent validity predicate: edge multiset equality plus chaining."""
    if len(steps) != g.m:
        return False
    seen = set()
    for x, y in steps:
        key = (min(x, y), max(x, y))
        if not g.has_edge(x, y) or key in seen:
            return False
        seen.add(key)
    for (_, y), (x, _) in zip(steps, steps[1:]):
        if y != x:
            return False
    if closed is not None and steps:
        if (steps[0][0] == steps[-1][1]) != closed:
            return False
    return True


# ------------------------------------------------------------ Hamiltonian


def hamiltonian_sufficient(g: Graph, criterion: str) -> str:
    """``"guaranteed"`` when the criterion's hypothesis holds, else ``"inconclusive"``."""
    if g.directed:
        raise DirectedUnsupported("Hamiltonian criteria are for undirected graphs")
    n = g.n
    if n < 3:
        raise TooSmall("Hamiltonian criteria need n >= 3")
    deg = g.degrees
    if criterion == "dirac":
        ok = all(2 * d >= n for d in deg)
    elif criterion == "ore":
        ok = all(
            deg[u] + deg[v] >= n
            for u in range(n)
            for v in range(u + 1, n)
            if not g.has_edge(u, v)
        )
    elif criterion == "bondy_chvatal":
        d = [0] + sorted(deg)  # 1-indexed
        ok = is_connected(g) and all(
            d[n - k] >= n - k for k in range(1, (n + 1) // 2) if d[k] <= k
        )
    else:
        raise ValueError(f"unknown criterion {criterion!r}")
    return "guaranteed" if ok else "inconclusive"


def hamiltonian_cycle_bruteforce(g: Graph, max_vertices: int = 12) -> tuple[int, ...] | None:
    """Backtracking search from vertex 0; None when no Hamiltonian cycle exists."""
    if g.directed:
        raise DirectedUnsupported("Hamiltonian search is for undirected graphs")
    n = g.n
    if n > max_vertices:
        raise TooLarge(f"{n} vertices exceeds the brute-force limit {max_vertices}")
    if n < 3 or min(g.degrees) < 2 or not is_connected(g):
        return None
    adj = g.adjacency
    on_path = [False] * n
    on_path[0] = True
    path = [0]

    def feasible():
        # every unvisited vertex still needs two usable neighbours
        end = path[-1]
        for v in range(n):
            if on_path[v]:
                continue
            free = 0
            for w in adj[v]:
                if not on_path[w] or w == end or w == 0:
                    free += 1
                    if free == 2:
                        break
            if free < 2:
                return False
        return True

    def extend():
        if len(path) == n:
            return g.has_edge(path[-1], 0)
        for w in adj[path[-1]]:
            if on_path[w]:
                continue
            on_path[w] = True
            path.append(w)
            if feasible() and extend():
                return True
            path.pop()
            on_path[w] = False
        return False

    return tuple(path) if extend() else None
