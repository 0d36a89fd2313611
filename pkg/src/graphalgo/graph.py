"""Graph data model, exact matrices, walk counting and named families."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational, Real
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadParams,
    DuplicateEdge,
    IndexOutOfRange,
    KindUnsupportedForGraph,
    LoopEdge,
    UnknownFamily,
    WeightedUnsupported,
    ZeroWeight,
)

__all__ = [
    "Graph",
    "ExactMatrix",
    "build_graph",
    "generate",
    "matrix",
    "count_walks",
    "degree_sequence",
    "FAMILIES",
    "PLATONIC",
]


def _exact(x):
    """Collapse integral Fractions to int, keep other numbers untouched."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``.

    Undirected edges are stored with ``u < v``. Edge ids are positions in
    ``edges``. Instances are immutable; derived structures are cached.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    directed: bool = False
    weights: tuple | None = None

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise BadParams(f"vertex count must be a non-negative integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        norm = []
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not self.directed and u > v:
                u, v = v, u
            if (u, v) in seen:
                raise DuplicateEdge(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))
        if self.weights is not None:
            w = tuple(_exact(x) for x in self.weights)
            if len(w) != len(norm):
                raise BadParams(f"{len(w)} weights for {len(norm)} edges")
            for i, x in enumerate(w):
                if not isinstance(x, Real):
                    raise BadParams(f"weight of edge {i} is not a real number: {x!r}")
                if x == 0:
                    raise ZeroWeight(f"edge {i} has zero weight")
            object.__setattr__(self, "weights", w)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weighted(self) -> bool:
        return self.weights is not None

    def weight(self, e: int):
        return 1 if self.weights is None else self.weights[e]

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        idx = {}
        for e, (u, v) in enumerate(self.edges):
            idx[(u, v)] = e
            if not self.directed:
                idx[(v, u)] = e
        return idx

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_index

    @cached_property
    def incident(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, ``(neighbor, edge id)`` pairs sorted by neighbor.

        Directed graphs list out-arcs only.
        """
        out = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            out[u].append((v, e))
            if not self.directed:
                out[v].append((u, e))
        return tuple(tuple(sorted(lst)) for lst in out)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(w for w, _ in lst) for lst in self.incident)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    @cached_property
    def undirected_adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbors ignoring edge direction (weak connectivity)."""
        if not self.directed:
            return self.adjacency
        out = [set() for _ in range(self.n)]
        for u, v in self.edges:
            out[u].add(v)
            out[v].add(u)
        return tuple(tuple(sorted(s)) for s in out)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def arcs(self):
        """Yield ``(u, v, w, edge id)`` for every traversable direction."""
        for e, (u, v) in enumerate(self.edges):
            w = self.weight(e)
            yield u, v, w, e
            if not self.directed:
                yield v, u, w, e

    def subgraph_edges(self, keep: Iterable[int]) -> "Graph":
        """Same vertex set, only the edges whose ids are in ``keep``."""
        keep = sorted(set(keep))
        w = None if self.weights is None else [self.weights[e] for e in keep]
        return Graph(self.n, tuple(self.edges[e] for e in keep), self.directed, w)

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the label map."""
        verts = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(verts)}
        edges, w = [], []
        for e, (u, v) in enumerate(self.edges):
            if u in pos and v in pos:
                edges.append((pos[u], pos[v]))
                w.append(self.weight(e))
        return Graph(len(verts), tuple(edges), self.directed, w if self.weighted else None), verts

    def unweighted(self) -> "Graph":
        return Graph(self.n, self.edges, self.directed, None)


def build_graph(n: int, edges: Iterable[Sequence[int]], directed: bool = False,
                weights: Sequence | None = None) -> Graph:
    """Validate and normalize a simple graph."""
    return Graph(n, tuple(tuple(e) for e in edges), directed,
                 None if weights is None else tuple(weights))


class ExactMatrix:
    """Dense matrix of exact rationals (Python ints and Fractions)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [tuple(_exact(Fraction(x) if not isinstance(x, (int, Fraction)) else x) for x in r)
                for r in entries]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise BadParams("ragged matrix rows")
        self.entries = tuple(rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls._raw(rows, cols, ((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if isinstance(other, ExactMatrix):
            return self.shape == other.shape and self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self.entries]!r})"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.entries]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.entries], dtype=float).reshape(self.rows, self.cols)

    @classmethod
    def _raw(cls, rows: int, cols: int, entries) -> "ExactMatrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m.entries = rows, cols, tuple(tuple(r) for r in entries)
        return m

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._raw(self.cols, self.rows,
                                ([self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)))

    T = property(transpose)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise BadParams("shape mismatch")
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise BadParams("shape mismatch")
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise BadParams(f"cannot multiply {self.shape} by {other.shape}")
        cols = [[other.entries[i][j] for i in range(other.rows)] for j in range(other.cols)]
        return ExactMatrix._raw(self.rows, other.cols,
                                ([_exact(sum((a * b for a, b in zip(r, c)), 0)) for c in cols] for r in self.entries))

    def __pow__(self, k: int) -> "ExactMatrix":
        if self.rows != self.cols or k < 0:
            raise BadParams("power needs a square matrix and k >= 0")
        result, base = ExactMatrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def minor_matrix(self, i: int, j: int) -> "ExactMatrix":
        return ExactMatrix([[x for c, x in enumerate(r) if c != j]
                            for rr, r in enumerate(self.entries) if rr != i])

    def determinant(self):
        """Bareiss fraction-free elimination; exact for ints and Fractions."""
        if self.rows != self.cols:
            raise BadParams("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self.entries]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for r in range(k + 1, n):
                    if a[r][k] != 0:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            akk = a[k][k]
            for i in range(k + 1, n):
                aik = a[i][k]
                row_i, row_k = a[i], a[k]
                for j in range(k + 1, n):
                    num = row_i[j] * akk - aik * row_k[j]
                    row_i[j] = num // prev if isinstance(num, int) and isinstance(prev, int) else _exact(Fraction(num) / prev)
                row_i[k] = 0
            prev = akk
        return _exact(sign * a[n - 1][n - 1])

    def cofactor(self, i: int, j: int):
        """Signed minor (algebraic complement) of entry ``(i, j)``."""
        sign = -1 if (i + j) % 2 else 1
        return sign * self.minor_matrix(i, j).determinant()


def matrix(g: Graph, kind: str, orientation=None) -> ExactMatrix:
    """Adjacency, incidence or Laplacian matrix of ``g``.

    For undirected incidence, ``orientation=None`` gives the unsigned 0/1
    matrix. Pass ``"default"`` (every edge u->v as stored) or a per-edge
    sequence of booleans (False flips the edge) for a signed matrix.
    Weighted incidence columns are scaled by the edge weight.
    """
    n = g.n
    if kind == "adjacency":
        a = [[0] * n for _ in range(n)]
        for e, (u, v) in enumerate(g.edges):
            w = g.weight(e)
            a[u][v] = w
            if not g.directed:
                a[v][u] = w
        return ExactMatrix(a)
    if kind == "incidence":
        b = [[0] * g.m for _ in range(n)]
        signed = g.directed or orientation is not None
        if orientation is None or isinstance(orientation, str):
            if isinstance(orientation, str) and orientation != "default":
                raise BadParams(f"unknown orientation {orientation!r}")
            flips = [True] * g.m
        else:
            flips = [bool(x) for x in orientation]
            if len(flips) != g.m:
                raise BadParams("orientation length must equal the edge count")
            if g.directed:
                raise KindUnsupportedForGraph("directed graphs carry their own orientation")
        for e, (u, v) in enumerate(g.edges):
            w = g.weight(e)
            tail, head = (u, v) if flips[e] else (v, u)
            b[tail][e] = w
            b[head][e] = -w if signed else w
        return ExactMatrix(b)
    if kind == "laplacian":
        if g.directed:
            raise KindUnsupportedForGraph("laplacian needs an undirected graph")
        if g.weighted:
            raise KindUnsupportedForGraph("laplacian is defined for unweighted graphs")
        lap = [[0] * n for _ in range(n)]
        for u, v in g.edges:
            lap[u][v] = lap[v][u] = -1
            lap[u][u] += 1
            lap[v][v] += 1
        return ExactMatrix(lap)
    raise KindUnsupportedForGraph(f"unknown matrix kind {kind!r}")


def count_walks(g: Graph, i: int, j: int, k: int) -> int:
    """Number of walks of length ``k`` from ``i`` to ``j``, i.e. ``(A^k)[i, j]``."""
    if g.weighted:
        raise WeightedUnsupported("walk counting needs an unweighted graph")
    if k < 1:
        raise BadParams("walk length must be >= 1")
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise IndexOutOfRange("vertex out of range")
    # row vector times A, k times: O(k * m) instead of a full matrix power
    row = [0] * g.n
    row[i] = 1
    for _ in range(k):
        nxt = [0] * g.n
        for u, v in g.edges:
            nxt[v] += row[u]
            if not g.directed:
                nxt[u] += row[v]
        row = nxt
    return row[j]


def degree_sequence(g: Graph) -> list[int]:
    """Ascending degrees; out-degrees for directed graphs."""
    return sorted(g.degrees)


# ---------------------------------------------------------------- families

PLATONIC = ("tetrahedron", "octahedron", "icosahedron", "cube", "dodecahedron")


def _complete(n):
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def _complete_bipartite(n, m):
    return Graph(n + m, tuple((i, n + j) for i in range(n) for j in range(m)))


def _complete_multipartite(sizes):
    starts = np.cumsum([0, *sizes])
    part = np.repeat(np.arange(len(sizes)), sizes)
    total = int(starts[-1])
    return Graph(total, tuple((u, v) for u, v in itertools.combinations(range(total), 2)
                              if part[u] != part[v]))


def _hypercube(d):
    return Graph(1 << d, tuple((v, v | (1 << b)) for v in range(1 << d) for b in range(d)
                               if not v & (1 << b)))


def _grid(k, l):
    edges = []
    for a in range(k):
        for b in range(l):
            v = a * l + b
            if a + 1 < k:
                edges.append((v, v + l))
            if b + 1 < l:
                edges.append((v, v + 1))
    return Graph(k * l, tuple(edges))


def _path(n):
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def _cycle(n):
    if n < 3:
        raise BadParams("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def _star(k):
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def _platonic(name):
    if name == "tetrahedron":
        return _complete(4)
    if name == "octahedron":
        skip = {(0, 1), (2, 3), (4, 5)}
        return Graph(6, tuple(e for e in itertools.combinations(range(6), 2) if e not in skip))
    if name == "cube":
        return _hypercube(3)
    if name == "icosahedron":
        # apex 0, upper ring 1..5, lower ring 6..10, apex 11
        e = []
        for i in range(5):
            up, up_next = 1 + i, 1 + (i + 1) % 5
            lo, lo_next = 6 + i, 6 + (i + 1) % 5
            e += [(0, up), (up, up_next), (up, lo), (up, lo_next), (lo, lo_next), (lo, 11)]
        return Graph(12, tuple(e))
    if name == "dodecahedron":
        # outer ring a=0..4, spokes b=5..9, middle c=10..14, inner ring d=15..19
        e = []
        for i in range(5):
            j = (i + 1) % 5
            e += [(i, j), (i, 5 + i), (5 + i, 10 + i), (10 + i, 5 + j), (10 + i, 15 + i), (15 + i, 15 + j)]
        return Graph(20, tuple(e))
    raise BadParams(f"unknown platonic solid {name!r}; expected one of {PLATONIC}")


def _positive(name, value, minimum=1):
    if not isinstance(value, (int, np.integer)) or value < minimum:
        raise BadParams(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


FAMILIES = ("complete", "complete_bipartite", "complete_multipartite", "hypercube",
            "grid", "path", "cycle", "star", "empty", "platonic", *PLATONIC)


def generate(family: str, **params) -> Graph:
    """Named graph family.

    ``complete(n)``, ``complete_bipartite(n, m)``, ``complete_multipartite(sizes)``,
    ``hypercube(n)``, ``grid(k, l)``, ``path(n)``, ``cycle(n)``, ``star(n)``
    (n leaves), ``empty(n)``, ``platonic(name)`` or a solid's name directly.
    """
    try:
        if family == "complete":
            return _complete(_positive("n", params["n"]))
        if family == "complete_bipartite":
            return _complete_bipartite(_positive("n", params["n"]), _positive("m", params["m"]))
        if family == "complete_multipartite":
            sizes = [_positive("part size", s) for s in params["sizes"]]
            if not sizes:
                raise BadParams("need at least one part")
            return _complete_multipartite(sizes)
        if family == "hypercube":
            return _hypercube(_positive("n", params["n"]))
        if family == "grid":
            return _grid(_positive("k", params["k"]), _positive("l", params["l"]))
        if family == "path":
            return _path(_positive("n", params["n"]))
        if family == "cycle":
            return _cycle(_positive("n", params["n"], 3))
        if family == "star":
            return _star(_positive("n", params["n"]))
        if family == "empty":
            return Graph(_positive("n", params["n"], 0), ())
        if family == "platonic":
            return _platonic(params["name"])
        if family in PLATONIC:
            return _platonic(family)
    except KeyError as exc:
        raise BadParams(f"family {family!r} needs parameter {exc.args[0]!r}") from None
    raise UnknownFamily(family)
