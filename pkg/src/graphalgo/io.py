"""Reading and writing graph documents.

Edgelist
--------
One edge per line, ``u v [weight [cost]]``. Lines starting with ``#`` are
comments, except these headers::

    # directed            (or: # undirected, the default)
    # n 7                 vertex count, needed for isolated vertices
    # source 0
    # terminal 5
    # labels a b c ...    whitespace separated, one per vertex

Weights are integers, ``p/q`` rationals or floats. Either every edge has a
weight or none does.

JSON
----
An object with keys ``directed`` (bool), ``n`` (int), ``edges`` (list of
pairs) and optionally ``weights``, ``labels``, ``rotation`` (per vertex the
incident edge ids in cyclic order) and ``flow`` (``source``, ``terminal``,
``costs``). Rational numbers are written as ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DuplicateEdge, InvariantViolation, LoopEdge, ParseError
from .graph import Graph

__all__ = ["GraphDocument", "FlowMeta", "parse_graph", "parse_graph_file", "emit_graph", "number_to_json",
           "number_from_text"]


@dataclass(frozen=True)
class FlowMeta:
    source: int | None = None
    terminal: int | None = None
    costs: tuple | None = None


@dataclass(frozen=True)
class GraphDocument:
    format: str
    graph: Graph
    rotation: tuple[tuple[int, ...], ...] | None = None
    flow: FlowMeta = field(default_factory=FlowMeta)
    labels: tuple[str, ...] | None = None

    def with_format(self, fmt: str) -> "GraphDocument":
        return GraphDocument(fmt, self.graph, self.rotation, self.flow, self.labels)


def number_from_text(tok: str):
    try:
        return int(tok)
    except ValueError:
        pass
    if "/" in tok:
        try:
            return Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise ValueError(tok) from None
    return float(tok)


def number_to_text(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def number_to_json(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    return x


def _number_from_json(x, where):
    if isinstance(x, bool):
        raise ParseError(f"{where}: expected a number, got a boolean")
    if isinstance(x, (int, float)):
        return x
    if isinstance(x, str):
        try:
            return number_from_text(x)
        except ValueError:
            pass
    raise ParseError(f"{where}: expected a number, got {x!r}")


def _check_edge(u, v, seen, directed, line, column=None):
    if u == v:
        err = LoopEdge(f"line {line}: loop at vertex {u}" if line else f"loop at vertex {u}")
        err.line, err.column = line, column
        raise err
    key = (u, v) if directed else (min(u, v), max(u, v))
    if key in seen:
        err = DuplicateEdge(f"line {line}: duplicate edge {key}" if line else f"duplicate edge {key}")
        err.line, err.column = line, column
        raise err
    seen.add(key)


# ------------------------------------------------------------ edgelist


def _int_token(tok, line, col, what):
    try:
        x = int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", line, col) from None
    if x < 0:
        raise ParseError(f"{what} must be non-negative", line, col)
    return x


def _columns(text):
    """Tokens with their 1-based starting column."""
    out, i = [], 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        out.append((text[i:j], i + 1))
        i = j
    return out


def _parse_edgelist(text: str) -> GraphDocument:
    directed = False
    n = None
    source = terminal = None
    labels = None
    edges, weights, costs = [], [], []
    seen: set = set()
    widths = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            toks = _columns(raw)
            head = stripped[1:].split()
            if not head:
                continue
            key = head[0].lower()
            if key in ("directed", "undirected") and len(head) == 1:
                directed = key == "directed"
            elif key in ("n", "source", "terminal") and len(head) == 2:
                col = toks[-1][1]
                val = _int_token(head[1], lineno, col, key)
                if key == "n":
                    n = val
                elif key == "source":
                    source = val
                else:
                    terminal = val
            elif key == "labels":
                labels = tuple(head[1:])
            continue
        toks = _columns(raw)
        if len(toks) not in (2, 3, 4):
            raise ParseError(f"expected 'u v [weight [cost]]', got {len(toks)} fields", lineno, 1)
        u = _int_token(toks[0][0], lineno, toks[0][1], "vertex")
        v = _int_token(toks[1][0], lineno, toks[1][1], "vertex")
        _check_edge(u, v, seen, directed, lineno, toks[0][1])
        extra = []
        for tok, col in toks[2:]:
            try:
                extra.append(number_from_text(tok))
            except ValueError:
                raise ParseError(f"not a number: {tok!r}", lineno, col) from None
        widths.add(len(toks))
        if len(widths) > 1:
            raise ParseError("every edge line needs the same number of fields", lineno, 1)
        edges.append((u, v))
        if extra:
            weights.append(extra[0])
        if len(extra) == 2:
            costs.append(extra[1])
    top = 1 + max((max(e) for e in edges), default=-1)
    if n is None:
        n = top
    elif n < top:
        raise ParseError(f"header says n = {n} but vertex {top - 1} appears")
    g = _graph(n, edges, directed, tuple(weights) if weights else None)
    meta = FlowMeta(source, terminal, tuple(costs) if costs else None)
    return GraphDocument("edgelist", g, None, meta, _labels(labels, n))


def _labels(labels, n):
    if labels is None:
        return None
    if len(labels) != n:
        raise ParseError(f"{len(labels)} labels for {n} vertices")
    return tuple(str(x) for x in labels)


def _graph(n, edges, directed, weights):
    try:
        return Graph(n, tuple(edges), directed, weights)
    except InvariantViolation:
        raise
    except Exception as exc:  # BadParams and friends
        raise ParseError(str(exc)) from None


def _emit_edgelist(doc: GraphDocument) -> str:
    g = doc.graph
    lines = ["# directed" if g.directed else "# undirected", f"# n {g.n}"]
    if doc.flow.source is not None:
        lines.append(f"# source {doc.flow.source}")
    if doc.flow.terminal is not None:
        lines.append(f"# terminal {doc.flow.terminal}")
    if doc.labels is not None:
        lines.append("# labels " + " ".join(doc.labels))
    costs = doc.flow.costs
    if costs is not None and g.weights is None:
        raise ParseError("edgelist costs need weights in the column before them")
    for e, (u, v) in enumerate(g.edges):
        row = [str(u), str(v)]
        if g.weights is not None:
            row.append(number_to_text(g.weights[e]))
        if costs is not None:
            row.append(number_to_text(costs[e]))
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ json


def _parse_json(text: str) -> GraphDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    unknown = set(obj) - {"directed", "n", "edges", "weights", "labels", "rotation", "flow"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}")
    directed = obj.get("directed", False)
    if not isinstance(directed, bool):
        raise ParseError("'directed' must be a boolean")
    raw_edges = obj.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError("'edges' must be a list")
    edges = []
    seen: set = set()
    for i, e in enumerate(raw_edges):
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in e)):
            raise ParseError(f"edges[{i}] must be a pair of non-negative integers")
        _check_edge(e[0], e[1], seen, directed, None)
        edges.append((e[0], e[1]))
    top = 1 + max((max(e) for e in edges), default=-1)
    n = obj.get("n", top)
    if not isinstance(n, int) or isinstance(n, bool) or n < top:
        raise ParseError(f"'n' must be an integer >= {top}")
    weights = obj.get("weights")
    if weights is not None:
        if not isinstance(weights, list):
            raise ParseError("'weights' must be a list")
        weights = tuple(_number_from_json(w, f"weights[{i}]") for i, w in enumerate(weights))
    g = _graph(n, edges, directed, weights)
    rotation = obj.get("rotation")
    if rotation is not None:
        if not isinstance(rotation, list) or not all(
            isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r) for r in rotation
        ):
            raise ParseError("'rotation' must be a list of integer lists")
        rotation = tuple(tuple(r) for r in rotation)
    meta = FlowMeta()
    flow = obj.get("flow")
    if flow is not None:
        if not isinstance(flow, dict) or set(flow) - {"source", "terminal", "costs"}:
            raise ParseError("'flow' must be an object with source, terminal, costs")
        costs = flow.get("costs")
        if costs is not None:
            if not isinstance(costs, list) or len(costs) != g.m:
                raise ParseError(f"'flow.costs' must list one number per edge ({g.m})")
            costs = tuple(_number_from_json(c, f"flow.costs[{i}]") for i, c in enumerate(costs))
        ends = []
        for key in ("source", "terminal"):
            x = flow.get(key)
            if x is not None and (not isinstance(x, int) or isinstance(x, bool) or x < 0):
                raise ParseError(f"'flow.{key}' must be a non-negative integer")
            ends.append(x)
        meta = FlowMeta(ends[0], ends[1], costs)
    labels = obj.get("labels")
    if labels is not None and not isinstance(labels, list):
        raise ParseError("'labels' must be a list")
    return GraphDocument("json", g, rotation, meta, _labels(labels, n))


def _json_obj(doc: GraphDocument) -> dict:
    g = doc.graph
    obj: dict = {"directed": g.directed, "n": g.n, "edges": [list(e) for e in g.edges]}
    if g.weights is not None:
        obj["weights"] = [number_to_json(w) for w in g.weights]
    if doc.labels is not None:
        obj["labels"] = list(doc.labels)
    if doc.rotation is not None:
        obj["rotation"] = [list(r) for r in doc.rotation]
    f = doc.flow
    if f.source is not None or f.terminal is not None or f.costs is not None:
        flow: dict = {}
        if f.source is not None:
            flow["source"] = f.source
        if f.terminal is not None:
            flow["terminal"] = f.terminal
        if f.costs is not None:
            flow["costs"] = [number_to_json(c) for c in f.costs]
        obj["flow"] = flow
    return obj


# ------------------------------------------------------------ entry points


def parse_graph(text: str, format: str = "auto") -> GraphDocument:
    """Parse a document; ``auto`` picks JSON when the text starts with ``{``."""
    if format == "auto":
        format = "json" if text.lstrip().startswith("{") else "edgelist"
    if format == "edgelist":
        return _parse_edgelist(text)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unknown format {format!r}")


def parse_graph_file(data: bytes, format: str = "auto") -> GraphDocument:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not UTF-8 (byte {exc.start})") from None
    return parse_graph(text, format)


def emit_graph(doc: GraphDocument, format: str | None = None) -> str:
    fmt = format or doc.format
    if fmt == "edgelist":
        return _emit_edgelist(doc)
    if fmt == "json":
        return json.dumps(_json_obj(doc), sort_keys=True) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
