"""Planarity testing, rotation systems, faces, duals and face routing.

Darts: edge ``e = (u, v)`` has dart ``2e`` from u to v and dart ``2e + 1``
from v to u. A rotation lists, per vertex, its incident edges in cyclic
order. Faces are orbits of ``phi(d) = sigma(rev(d))`` where ``sigma`` moves
to the next dart leaving the same vertex.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from . import _kernels
from .connectivity import biconnected_components, low_points
from .errors import (
    AmbiguousRepresentation,
    Disconnected,
    InvalidRotation,
    NonPlanar,
    NotACycle,
    NotSimpleStar,
    OuterFaceEndpoint,
    TooLarge,
)
from .graph import Graph, generate
from .traversal import connected_components, is_connected

__all__ = [
    "RotationSystem",
    "FaceSet",
    "DualGraph",
    "CComponent",
    "is_planar",
    "c_components",
    "interlacement_graph",
    "faces_from_rotation",
    "dual_graph",
    "dual_graph_from_cycles",
    "lee_path",
    "rotation_from_faces",
    "rotation_from_coordinates",
    "platonic_embedding",
    "grid_embedding",
    "multigraph_isomorphic",
    "is_planar_bruteforce",
]


# ------------------------------------------------------------ Auslander-Parter


@dataclass(frozen=True)
class CComponent:
    edges: tuple[tuple[int, int], ...]
    attachments: tuple[int, ...]
    internal: tuple[int, ...]

    @property
    def is_path(self) -> bool:
        if len(self.attachments) != 2 or len(self.edges) != len(self.internal) + 1:
            return False
        deg: dict[int, int] = {}
        for u, v in self.edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        return all(deg[x] == 2 for x in self.internal) and all(deg[a] == 1 for a in self.attachments)


def _cycle_pairs(cycle):
    return {(min(a, b), max(a, b)) for a, b in zip(cycle, cycle[1:] + cycle[:1])}


def _check_cycle(edge_set, cycle):
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycle("a cycle needs at least 3 distinct vertices")
    for p in _cycle_pairs(cycle):
        if p not in edge_set:
            raise NotACycle(f"{p} is not an edge")


def _components(edges, cycle) -> list[CComponent]:
    on_cycle = set(cycle)
    ring = _cycle_pairs(cycle)
    adj: dict[int, list] = {}
    chords = []
    for u, v in edges:
        if (u, v) in ring:
            continue
        if u in on_cycle and v in on_cycle:
            chords.append(CComponent(((u, v),), (u, v), ()))
            continue
        adj.setdefault(u, []).append((u, v))
        adj.setdefault(v, []).append((u, v))
    comps = list(chords)
    seen = set()
    for s in sorted(adj):
        if s in on_cycle or s in seen:
            continue
        seen.add(s)
        stack, internal, es, att = [s], [s], set(), set()
        while stack:
            x = stack.pop()
            for e in adj[x]:
                es.add(e)
                y = e[0] if e[1] == x else e[1]
                if y in on_cycle:
                    att.add(y)
                elif y not in seen:
                    seen.add(y)
                    internal.append(y)
                    stack.append(y)
        comps.append(CComponent(tuple(sorted(es)), tuple(sorted(att)), tuple(sorted(internal))))
    comps.sort(key=lambda c: c.edges[0])
    return comps


def _conflict(pos, a_att, b_att) -> bool:
    """True unless every attachment of B fits in one closed segment of A."""
    pa = sorted(pos[x] for x in a_att)
    k = len(pa)
    a_set = set(pa)
    L = len(pos)
    b_pos = [pos[x] for x in b_att]

    def gap(p):
        # index i with pa[i] < p < pa[i+1] (cyclically)
        for i in range(k):
            lo, hi = pa[i], pa[(i + 1) % k]
            if (lo < p < hi) if lo < hi else (p > lo or p < hi):
                return i
        raise AssertionError

    outside = {gap(p) for p in b_pos if p not in a_set}
    candidates = outside if outside else set(range(k))
    if len(candidates) > 1 and outside:
        return True
    shared = {p for p in b_pos if p in a_set}
    for i in candidates:
        if shared <= {pa[i], pa[(i + 1) % k]}:
            return False
    return True


def _interlacement(cycle, comps) -> list[tuple[int, int]]:
    pos = {v: i for i, v in enumerate(cycle)}
    out = []
    for i, j in itertools.combinations(range(len(comps)), 2):
        if _conflict(pos, comps[i].attachments, comps[j].attachments):
            out.append((i, j))
    return out


def _bipartite(k, edges) -> bool:
    adj = [[] for _ in range(k)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    side = [None] * k
    for s in range(k):
        if side[s] is not None:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if side[w] is None:
                    side[w] = 1 - side[u]
                    q.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def _reroute(cycle, comp: CComponent):
    """Swap the cycle arc between two consecutive attachments for a path in comp."""
    pos = {v: i for i, v in enumerate(cycle)}
    att = sorted(comp.attachments, key=pos.__getitem__)
    a, b = att[0], att[1]
    inner = set(comp.internal)
    adj: dict[int, list[int]] = {}
    for u, v in comp.edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    via = {a: None}
    q = deque([a])
    while q and b not in via:
        x = q.popleft()
        for y in sorted(adj.get(x, ())):
            if y in via or (y != b and y not in inner):
                continue
            via[y] = x
            q.append(y)
    path = [b]
    while via[path[-1]] is not None:
        path.append(via[path[-1]])
    path.reverse()
    return cycle[: pos[a] + 1] + path[1:-1] + cycle[pos[b]:]


def _ap_planar(edges, cycle) -> bool:
    comps = _components(edges, cycle)
    if not comps or (len(comps) == 1 and comps[0].is_path):
        return True
    if not _bipartite(len(comps), _interlacement(cycle, comps)):
        return False
    ring = _cycle_pairs(cycle)
    for comp in comps:
        if comp.is_path:
            continue
        sub = ring | set(comp.edges)
        if not _ap_planar(sub, _reroute(cycle, comp)):
            return False
    return True


def _undirected_edges(g: Graph):
    return sorted({(min(u, v), max(u, v)) for u, v in g.edges})


def _initial_cycle(edges):
    """Fundamental cycle of the lowest-id non-tree edge of a DFS tree, or None."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    root = min(adj)
    parent = {root: None}
    depth = {root: 0}
    tree = set()
    stack = [(root, iter(sorted(adj[root])))]
    while stack:
        x, it = stack[-1]
        for y in it:
            if y not in parent:
                parent[y] = x
                depth[y] = depth[x] + 1
                tree.add((min(x, y), max(x, y)))
                stack.append((y, iter(sorted(adj[y]))))
                break
        else:
            stack.pop()
    for u, v in edges:
        if (u, v) in tree:
            continue
        left, right = [u], [v]
        while depth[left[-1]] > depth[right[-1]]:
            left.append(parent[left[-1]])
        while depth[right[-1]] > depth[left[-1]]:
            right.append(parent[right[-1]])
        while left[-1] != right[-1]:
            left.append(parent[left[-1]])
            right.append(parent[right[-1]])
        return left + right[-2::-1]
    return None


def is_planar(g: Graph) -> bool:
    """Auslander-Parter test run on each biconnected block.

    Directed graphs are tested through their underlying undirected graph.
    """
    h = Graph(g.n, tuple(_undirected_edges(g))) if g.directed else g
    for block in biconnected_components(h):
        edges = [h.edges[e] for e in block]
        cycle = _initial_cycle(edges)
        if cycle is None:
            continue
        if not _ap_planar(set(edges), cycle):
            return False
    return True


def c_components(g: Graph, cycle: Sequence[int]) -> list[CComponent]:
    """C-components of ``cycle``: chords and pieces of G minus C with attachment edges."""
    edges = set(_undirected_edges(g))
    cycle = list(cycle)
    _check_cycle(edges, cycle)
    return _components(edges, cycle)


def interlacement_graph(g: Graph, cycle: Sequence[int]) -> Graph:
    """One vertex per C-component (in :func:`c_components` order), edges for conflicts."""
    comps = c_components(g, cycle)
    return Graph(len(comps), tuple(_interlacement(list(cycle), comps)))


# ------------------------------------------------------------ rotation systems


@dataclass(frozen=True)
class RotationSystem:
    order: tuple[tuple[int, ...], ...]  # per vertex, incident edge ids cyclically

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(tuple(int(e) for e in r) for r in self.order))

    def validate(self, g: Graph) -> None:
        if len(self.order) != g.n:
            raise InvalidRotation(f"rotation has {len(self.order)} vertices, graph has {g.n}")
        for v in range(g.n):
            want = sorted(e for _, e in g.incident[v]) if not g.directed else sorted(
                e for e, (a, b) in enumerate(g.edges) if v in (a, b)
            )
            if sorted(self.order[v]) != want:
                raise InvalidRotation(f"rotation at vertex {v} is not a permutation of its edges")

    def dart_rotation(self, g: Graph) -> list[list[int]]:
        return [[2 * e if g.edges[e][0] == v else 2 * e + 1 for e in self.order[v]] for v in range(g.n)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.order]


def _sigma(dart_rot):
    nxt = {}
    for lst in dart_rot:
        for i, d in enumerate(lst):
            nxt[d] = lst[(i + 1) % len(lst)]
    return nxt


def _orbits(n_darts, dart_rot):
    nxt = _sigma(dart_rot)
    seen = [False] * n_darts
    orbits = []
    for d0 in range(n_darts):
        if seen[d0]:
            continue
        orbit = []
        d = d0
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = nxt[d ^ 1]
        orbits.append(tuple(orbit))
    return orbits


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[int, ...], ...]  # dart cycles; the outer face may join several
    outer: int
    ends: tuple[tuple[int, int], ...]  # edge endpoints, for dart decoding

    def __len__(self) -> int:
        return len(self.faces)

    def tail(self, d: int) -> int:
        u, v = self.ends[d >> 1]
        return u if d % 2 == 0 else v

    def vertices(self, i: int) -> tuple[int, ...]:
        return tuple(self.tail(d) for d in self.faces[i])

    def edges(self, i: int) -> tuple[int, ...]:
        return tuple(d >> 1 for d in self.faces[i])

    def face_of_dart(self) -> dict[int, int]:
        return {d: i for i, f in enumerate(self.faces) for d in f}


def faces_from_rotation(g: Graph, rot: RotationSystem, outer: int | None = None) -> FaceSet:
    """Trace faces; each component's longest face becomes part of the outer face.

    Raises InvalidRotation when the rotation is not a planar embedding, i.e.
    V - E + F would differ from 1 + c.
    """
    rot.validate(g)
    orbits = _orbits(2 * g.m, rot.dart_rotation(g))
    comps = connected_components(g)
    comp_of = {}
    for k, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = k
    per_comp: list[list[tuple]] = [[] for _ in comps]
    for orb in orbits:
        u, v = g.edges[orb[0] >> 1]
        per_comp[comp_of[u]].append(orb)
    faces: list[tuple] = []
    outer_parts = []
    outer_at = None
    for k, lst in enumerate(per_comp):
        if not lst:
            outer_parts.append(())
            if outer_at is None:
                outer_at = len(faces)
                faces.append(None)
            continue
        best = max(range(len(lst)), key=lambda i: (len(lst[i]), -i))
        for i, orb in enumerate(lst):
            if i == best:
                outer_parts.append(orb)
                if outer_at is None:
                    outer_at = len(faces)
                    faces.append(None)
            else:
                faces.append(orb)
    if outer_at is None:  # empty graph on zero vertices
        faces.append(())
        outer_at = 0
    else:
        faces[outer_at] = tuple(itertools.chain.from_iterable(outer_parts))
    if g.n - g.m + len(faces) != 1 + max(len(comps), 1):
        raise InvalidRotation("rotation system does not describe a planar embedding")
    if outer is not None:
        if len(comps) > 1:
            raise InvalidRotation("outer face override needs a connected graph")
        if not 0 <= outer < len(faces):
            raise InvalidRotation(f"face {outer} does not exist")
        outer_at = outer
    ends = tuple((u, v) for u, v in g.edges)
    return FaceSet(tuple(faces), outer_at, ends)


# ------------------------------------------------------------ duals


@dataclass(frozen=True)
class DualGraph:
    """Multigraph with loops; edge ``e`` is dual to primal edge ``e``.

    When built from an embedding, ``rotation`` holds per dual vertex the
    dart cycle of its face (dual dart ``d`` crosses primal dart ``d``).
    """

    n: int
    ends: tuple[tuple[int, int], ...]
    outer: int | None = None
    rotation: tuple[tuple[int, ...], ...] | None = None

    @property
    def m(self) -> int:
        return len(self.ends)

    @property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.ends:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @property
    def loops(self) -> int:
        return sum(1 for u, v in self.ends if u == v)

    def multiplicity(self) -> dict[tuple[int, int], int]:
        out: dict = {}
        for u, v in self.ends:
            key = (min(u, v), max(u, v))
            out[key] = out.get(key, 0) + 1
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = [[] for _ in range(self.n)]
        for u, v in self.ends:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def faces(self) -> list[tuple[int, ...]]:
        if self.rotation is None:
            raise InvalidRotation("dual built without an embedding")
        return _orbits(2 * self.m, [list(r) for r in self.rotation])

    def dual(self) -> "DualGraph":
        """Dual of this embedded dual; reproduces the primal graph."""
        orbits = self.faces()
        face_of = {d: i for i, f in enumerate(orbits) for d in f}
        ends = tuple((face_of[2 * e], face_of[2 * e + 1]) for e in range(self.m))
        return DualGraph(len(orbits), ends, None, tuple(orbits))

    def without(self, v: int) -> tuple[int, list[tuple[int, int]]]:
        """Vertex count and edges after deleting vertex ``v`` (relabelled)."""
        keep = [x for x in range(self.n) if x != v]
        idx = {x: i for i, x in enumerate(keep)}
        return len(keep), [(idx[a], idx[b]) for a, b in self.ends if a != v and b != v]

    def to_dot(self, name: str = "dual") -> str:
        lines = [f"graph {name} {{"]
        for x in range(self.n):
            extra = ' [shape=doublecircle]' if x == self.outer else ""
            lines.append(f"  f{x}{extra};")
        for e, (u, v) in enumerate(self.ends):
            lines.append(f'  f{u} -- f{v} [label="{e}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def dual_graph(g: Graph, rot: RotationSystem, outer: int | None = None) -> DualGraph:
    """One dual vertex per face, one dual edge per primal edge."""
    if g.n == 0 or not is_connected(g):
        raise Disconnected("dual graphs are built for connected graphs")
    fs = faces_from_rotation(g, rot, outer)
    face_of = fs.face_of_dart()
    if g.m == 0:
        return DualGraph(1, (), 0, ((),))
    ends = tuple((face_of[2 * e], face_of[2 * e + 1]) for e in range(g.m))
    return DualGraph(len(fs), ends, fs.outer, fs.faces)


def _bfs_path_edges(n, adj, s, t, banned):
    """Shortest s-t path as edge ids, avoiding ``banned`` edges; ascending order."""
    via = {s: None}
    q = deque([s])
    while q:
        x = q.popleft()
        if x == t:
            break
        for y, e in adj[x]:
            if e in banned or y in via:
                continue
            via[y] = (x, e)
            q.append(y)
    if t not in via:
        return None
    path = []
    x = t
    while via[x] is not None:
        x, e = via[x]
        path.append(e)
    return path[::-1]


def dual_graph_from_cycles(g: Graph, rot: RotationSystem | None = None) -> DualGraph:
    """Dual built from shortest cycles through each edge and a bridge pass.

    Label 0 is the outer vertex v0. When ``rot`` is given the result must be
    isomorphic to :func:`dual_graph` of that embedding.
    """
    if g.n == 0 or not is_connected(g):
        raise Disconnected("dual graphs are built for connected graphs")
    if not is_planar(g):
        raise NonPlanar("graph is not planar")
    m = g.m
    a1: list = [None] * m
    a2: list = [None] * m
    _, _, bridges, _, _ = low_points(g.n, g.incident)
    adj = g.incident
    label = 0
    for e in range(m):
        if e in bridges or (a1[e] is not None and a2[e] is not None):
            continue
        u, v = g.edges[e]
        p1 = _bfs_path_edges(g.n, adj, u, v, {e})
        cycle = p1 + [e]
        if _common_label(cycle, a1, a2):
            cycle = None
            for cut in (p1[0], p1[-1]):
                p2 = _bfs_path_edges(g.n, adj, u, v, {e, cut})
                if p2 is not None and not _common_label(p2 + [e], a1, a2):
                    cycle = p2 + [e]
                    break
            if cycle is None:
                continue
        label += 1
        for j in cycle:
            if a1[j] is None:
                a1[j] = label
            elif a2[j] is None:
                a2[j] = label
            else:
                raise AmbiguousRepresentation(f"edge {j} bounds more than two cycles")
    for j in range(m):
        if j not in bridges and a2[j] is None:
            a2[j] = 0
    for b in sorted(bridges):
        if a2[b] is not None:
            continue
        lab = _bridge_label(g, b, bridges, a2)
        a1[b] = a2[b] = lab
    used = sorted({x for x in a1 + a2 if x is not None})
    idx = {x: i for i, x in enumerate(used)}
    ends = tuple((idx[a1[j]], idx[a2[j]]) for j in range(m))
    d = DualGraph(max(len(used), 1), ends, idx.get(0))
    if d.n != g.m - g.n + 2:
        raise AmbiguousRepresentation(f"{d.n} cycles found, Euler's formula needs {g.m - g.n + 2}")
    if rot is not None and not multigraph_isomorphic(d, dual_graph(g, rot)):
        raise AmbiguousRepresentation("cycle-based dual differs from the embedded dual")
    return d


def _common_label(cycle, a1, a2) -> bool:
    common = None
    for j in cycle:
        labels = {x for x in (a1[j], a2[j]) if x is not None}
        common = labels if common is None else common & labels
        if not common:
            return False
    return bool(common)


def _bridge_label(g, b, bridges, a2):
    """a2 label of the nearest non-bridge edge reached from bridge b, else v0."""
    u, v = g.edges[b]
    seen = {u, v}
    q = deque([u, v])
    while q:
        x = q.popleft()
        for y, e in g.incident[x]:
            if e not in bridges and a2[e] is not None:
                return a2[e]
            if y not in seen:
                seen.add(y)
                q.append(y)
    return 0


def lee_path(g: Graph, rot: RotationSystem, start_face: int, end_face: int,
             outer: int | None = None) -> list[int] | None:
    """Shortest sequence of inner faces from ``start_face`` to ``end_face``.

    BFS depth marks on the dual without its outer vertex, then a walk back
    through decreasing marks (smallest face index first). None if the end is
    unreachable through inner faces.
    """
    d = dual_graph(g, rot, outer)
    for f in (start_face, end_face):
        if not 0 <= f < d.n:
            raise InvalidRotation(f"face {f} does not exist")
        if f == d.outer:
            raise OuterFaceEndpoint(f"face {f} is the outer face")
    adj = [set() for _ in range(d.n)]
    seen_pairs = set()
    for a, b in d.ends:
        if d.outer in (a, b):
            continue
        key = (min(a, b), max(a, b))
        if a == b or key in seen_pairs:
            raise NotSimpleStar("dual has a loop or multi-edge away from the outer face")
        seen_pairs.add(key)
        adj[a].add(b)
        adj[b].add(a)
    mark = {start_face: 0}
    q = deque([start_face])
    while q and end_face not in mark:
        x = q.popleft()
        for y in sorted(adj[x]):
            if y not in mark:
                mark[y] = mark[x] + 1
                q.append(y)
    if end_face not in mark:
        return None
    path = [end_face]
    while path[-1] != start_face:
        x = path[-1]
        path.append(min(y for y in adj[x] if mark.get(y) == mark[x] - 1))
    return path[::-1]


# ------------------------------------------------------------ concrete embeddings


def rotation_from_faces(g: Graph, faces: Sequence[Sequence[int]]) -> RotationSystem:
    """Rotation making the given vertex cycles the faces.

    Faces are reoriented so that every edge is used once in each direction.
    """
    faces = [list(f) for f in faces]
    if not faces:
        raise InvalidRotation("no faces given")
    by_edge: dict[tuple[int, int], list[int]] = {}
    for i, f in enumerate(faces):
        for a, b in zip(f, f[1:] + f[:1]):
            by_edge.setdefault((min(a, b), max(a, b)), []).append(i)
    oriented = {0: faces[0]}
    q = deque([0])
    while q:
        i = q.popleft()
        f = oriented[i]
        steps = set(zip(f, f[1:] + f[:1]))
        for a, b in steps:
            for j in by_edge[(min(a, b), max(a, b))]:
                if j in oriented:
                    continue
                h = faces[j]
                hs = set(zip(h, h[1:] + h[:1]))
                oriented[j] = h[::-1] if (a, b) in hs else h
                q.append(j)
    if len(oriented) != len(faces):
        raise InvalidRotation("faces do not form a connected surface")
    nxt: dict[tuple[int, int], int] = {}
    for f in oriented.values():
        k = len(f)
        for i in range(k):
            a, v, b = f[i - 1], f[i], f[(i + 1) % k]
            # face walks a -> v -> b, so at v the edge to b follows the edge to a
            nxt[(v, a)] = b
    order = []
    for v in range(g.n):
        nb = g.adjacency[v]
        if not nb:
            order.append(())
            continue
        cyc = [nb[0]]
        while len(cyc) < len(nb):
            w = nxt.get((v, cyc[-1]))
            if w is None or w in cyc:
                raise InvalidRotation(f"faces do not close up around vertex {v}")
            cyc.append(w)
        if nxt.get((v, cyc[-1])) != cyc[0]:
            raise InvalidRotation(f"faces do not close up around vertex {v}")
        order.append(tuple(g.edge_index[(v, w)] for w in cyc))
    rot = RotationSystem(tuple(order))
    rot.validate(g)
    return rot


def rotation_from_coordinates(g: Graph, coords: Sequence[tuple[float, float]]) -> RotationSystem:
    """Neighbours sorted by angle around each vertex of a straight-line drawing."""
    order = []
    for v in range(g.n):
        x0, y0 = coords[v]
        nb = sorted(g.incident[v], key=lambda t: math.atan2(coords[t[0]][1] - y0, coords[t[0]][0] - x0))
        order.append(tuple(e for _, e in nb))
    return RotationSystem(tuple(order))


def _girth_cycles(g: Graph, length: int) -> list[list[int]]:
    """All simple cycles of the given length, each listed once."""
    out = []
    for start in range(g.n):
        stack = [(start, [start])]
        while stack:
            x, path = stack.pop()
            if len(path) == length:
                if g.has_edge(x, start) and path[1] < path[-1]:
                    out.append(path)
                continue
            for y in g.adjacency[x]:
                if y > start and y not in path:
                    stack.append((y, path + [y]))
    return out


_FACE_LENGTH = {"tetrahedron": 3, "octahedron": 3, "icosahedron": 3, "cube": 4, "dodecahedron": 5}


def platonic_embedding(name: str) -> tuple[Graph, RotationSystem]:
    """Graph of a platonic solid with the embedding whose faces are its girth cycles."""
    g = generate(name)
    return g, rotation_from_faces(g, _girth_cycles(g, _FACE_LENGTH[name]))


def grid_embedding(k: int, l: int) -> tuple[Graph, RotationSystem]:
    g = generate("grid", k=k, l=l)
    coords = [(b, a) for a in range(k) for b in range(l)]
    return g, rotation_from_coordinates(g, coords)


# ------------------------------------------------------------ isomorphism


def multigraph_isomorphic(a: DualGraph, b: DualGraph) -> bool:
    """Backtracking isomorphism test on multiplicity matrices (loops count once)."""
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        return False
    ma, mb = a.multiplicity(), b.multiplicity()

    def mult(mm, x, y):
        return mm.get((min(x, y), max(x, y)), 0)

    def signature(mm, n, deg):
        return [(deg[x], mult(mm, x, x), sorted(mult(mm, x, y) for y in range(n) if y != x)) for x in range(n)]

    sa, sb = signature(ma, a.n, a.degrees), signature(mb, b.n, b.degrees)
    if sorted(map(repr, sa)) != sorted(map(repr, sb)):
        return False
    order = sorted(range(a.n), key=lambda x: -a.degrees[x])
    image: dict[int, int] = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        x = order[i]
        for y in range(b.n):
            if y in used or sa[x] != sb[y]:
                continue
            if all(mult(ma, x, x2) == mult(mb, y, y2) for x2, y2 in image.items()):
                image[x] = y
                used.add(y)
                if extend(i + 1):
                    return True
                del image[x]
                used.discard(y)
        return False

    return extend(0)


# ------------------------------------------------------------ brute-force oracle


def _reduce(n, edges):
    """Strip degree <= 1 vertices and suppress degree-2 vertices (planarity-preserving)."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if v not in adj:
                continue
            d = len(adj[v])
            if d <= 1:
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v]
                changed = True
            elif d == 2:
                a, b = adj[v]
                adj[a].discard(v)
                adj[b].discard(v)
                del adj[v]
                adj[a].add(b)
                adj[b].add(a)
                changed = True
    return adj


def _embeddable(adj) -> bool:
    verts = sorted(adj)
    idx = {v: i for i, v in enumerate(verts)}
    edges = sorted({(min(idx[u], idx[v]), max(idx[u], idx[v])) for u in adj for v in adj[u]})
    n, m = len(verts), len(edges)
    if n < 5:
        return True
    if m > 3 * n - 6:
        return False
    target = m - n + 2
    out = [[] for _ in range(n)]
    nbrs = [set() for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        out[u].append(2 * e)
        out[v].append(2 * e + 1)
        nbrs[u].add(v)
        nbrs[v].add(u)
    # greedy order: next vertex has most neighbours already placed, so faces close early
    order = [max(range(n), key=lambda v: (len(out[v]), -v))]
    while len(order) < n:
        placed = set(order)
        order.append(max((v for v in range(n) if v not in placed),
                         key=lambda v: (len(nbrs[v] & placed), len(out[v]), -v)))
    width = max(len(ds) for ds in out)
    rows, pptr = [], [0] * (n + 1)
    chunks = {}
    for v in range(n):
        ds = out[v]
        cyc = [[ds[0], *p] for p in itertools.permutations(ds[1:])]
        if v == order[0]:
            # mirror images have the same face count
            cyc = [c for c in cyc if len(c) < 3 or c[1] < c[-1]]
        chunks[v] = [c + [0] * (width - len(c)) for c in cyc]
    for v in range(n):
        pptr[v] = len(rows)
        rows.extend(chunks[v])
    pptr[n] = len(rows)
    deg = [len(ds) for ds in out]
    return _kernels.embedding_search(2 * m, order, deg, rows, pptr, target)


def is_planar_bruteforce(g: Graph, max_vertices: int = 8) -> bool:
    """Exhaustive rotation-system search: planar iff some rotation has V - E + F = 2.

    Run per connected component after planarity-preserving reductions.
    """
    if g.n > max_vertices:
        raise TooLarge(f"{g.n} vertices exceeds the brute-force limit {max_vertices}")
    adj = _reduce(g.n, _undirected_edges(g))
    seen = set()
    for s in sorted(adj):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        if not _embeddable({v: adj[v] & comp for v in comp}):
            return False
    return True
