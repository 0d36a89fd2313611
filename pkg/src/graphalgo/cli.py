"""Command line front end: ``graphalgo <command> [options] [FILE]``.

Every analysis command reads one graph document (edgelist or JSON, see
:mod:`graphalgo.io`) from FILE or stdin and prints a report. Exit codes: 0 on
success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

import numpy as np

from . import _accel
from .connectivity import edge_connectivity, tarjan_low, vertex_connectivity
from .errors import GraphError, ParseError
from .euler import (
    EULER_STRATEGIES,
    HAMILTON_CRITERIA,
    eulerian_classify,
    eulerian_cycle,
    eulerian_path,
    hamiltonian_cycle_bruteforce,
    hamiltonian_sufficient,
)
from .flow import MAX_FLOW_STRATEGIES, MIN_COST_STRATEGIES, FlowNetwork, max_flow, min_cost_max_flow, min_cut
from .graph import FAMILIES, generate
from .io import FlowMeta, GraphDocument, emit_graph, number_to_json, parse_graph_file
from .metrics import GLOBAL_KINDS, VERTEX_KINDS, centrality_inequalities_check, global_metric, small_world
from .metrics import vertex_centrality
from .planarity import RotationSystem, dual_graph, dual_graph_from_cycles, faces_from_rotation, is_planar
from .shortest_path import (
    NegativeCycleReport,
    bellman_ford,
    dijkstra,
    floyd_warshall,
    johnson,
)
from .spanning import mst, spanning_tree_count
from .spectral import cheeger_inequality_check, laplacian_spectrum
from .traversal import is_connected

DEFAULT_SEED = 0
SEED_ENV = "GRAPH_CLI_SEED"
PATH_ALGORITHMS = ("dijkstra", "bellman_ford", "floyd_warshall", "johnson")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ------------------------------------------------------------ value rendering


def _plain(x):
    """JSON-ready value; text mode prints the same thing."""
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return number_to_json(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, frozenset, set, np.ndarray)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else list(x)
        return [_plain(v) for v in items]
    return x


def _text_value(x) -> str:
    if isinstance(x, list):
        if x and isinstance(x[0], list):
            return "; ".join(" ".join(_text_value(v) for v in row) for row in x)
        return " ".join(_text_value(v) for v in x)
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return "none"
    if isinstance(x, dict):
        return " ".join(f"{k}={_text_value(v)}" for k, v in x.items())
    return str(x)


def _render(report: dict, fmt: str) -> str:
    data = _plain(report)
    if fmt == "json":
        return json.dumps(data, sort_keys=True) + "\n"
    return "".join(f"{k}: {_text_value(v)}\n" for k, v in data.items())


# ------------------------------------------------------------ commands


def _read(args) -> GraphDocument:
    path = args.input
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph_file(data, args.input_format)


def _cmd_generate(args):
    params = {}
    for key in ("n", "m", "k", "l", "name"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.sizes is not None:
        params["sizes"] = [int(s) for s in args.sizes.split(",")]
    g = generate(args.family, **params)
    fmt = "json" if args.format == "json" else "edgelist"
    return emit_graph(GraphDocument(fmt, g))


def _cmd_analyze(args):
    g = _read(args).graph
    kind = args.metric
    if kind == "summary":
        out = {"n": g.n, "m": g.m, "density": global_metric(g, "density") if g.n > 1 else None}
        out["connected"] = g.n > 0 and is_connected(g)
        if out["connected"] and g.n > 1:
            for k in ("diameter", "avg_shortest_path", "global_efficiency"):
                out[k] = global_metric(g, k)
        out["avg_clustering"] = global_metric(g, "avg_clustering") if g.n else None
        return out
    if kind in GLOBAL_KINDS:
        return {kind: global_metric(g, kind)}
    if kind in VERTEX_KINDS:
        return {kind: vertex_centrality(g, kind, args.epsilon).values}
    if kind == "small_world":
        return {"small_world": small_world(g, seed=args.seed, samples=args.samples), "seed": args.seed}
    rep = centrality_inequalities_check(g)
    return {
        "local_efficiency": rep.local_efficiency,
        "avg_clustering": rep.avg_clustering,
        "avg_shortest_path": rep.avg_shortest_path,
        "density": rep.density,
        "global_efficiency": rep.global_efficiency,
        "cent1_holds": rep.cent1_holds,
        "cent1_equality": rep.cent1_equality,
        "path_holds": rep.path_holds,
        "efficiency_holds": rep.efficiency_holds,
    }


def _cmd_mst(args):
    g = _read(args).graph
    tree = mst(g, args.strategy)
    out = {"edges": [g.edges[e] for e in tree.edges], "total_weight": tree.total_weight}
    if not g.directed:
        out["spanning_tree_count"] = spanning_tree_count(g.unweighted())
    return out


def _neg_cycle(rep: NegativeCycleReport):
    return {"negative_cycle": rep.cycle, "cycle_weight": rep.weight}


def _cmd_paths(args):
    g = _read(args).graph
    alg = args.algorithm
    if alg in ("dijkstra", "bellman_ford"):
        res = (dijkstra if alg == "dijkstra" else bellman_ford)(g, args.source)
        if isinstance(res, NegativeCycleReport):
            return _neg_cycle(res)
        return {"source": args.source, "dist": res.dist, "pred": res.pred}
    res = (floyd_warshall if alg == "floyd_warshall" else johnson)(g)
    if isinstance(res, NegativeCycleReport):
        return _neg_cycle(res)
    return {"dist": res.tolist()}


def _cmd_connectivity(args):
    g = _read(args).graph
    low = tarjan_low(g)
    return {
        "vertex_connectivity": vertex_connectivity(g),
        "edge_connectivity": edge_connectivity(g),
        "min_degree": min(g.degrees) if g.n else 0,
        "bridges": low.bridges,
        "cut_vertices": low.cut_vertices,
    }


def _cmd_euler(args):
    g = _read(args).graph
    cls = eulerian_classify(g)
    out = {"kind": cls.kind, "odd_vertices": cls.odd_vertices}
    if cls.kind == "eulerian_cycle":
        out["trail"] = eulerian_cycle(g, args.strategy)
    elif cls.kind == "eulerian_path":
        out["trail"] = eulerian_path(g, args.strategy)
    return out


def _cmd_hamilton(args):
    g = _read(args).graph
    out = {c: hamiltonian_sufficient(g, c) for c in HAMILTON_CRITERIA}
    if g.n <= args.max_vertices:
        out["cycle"] = hamiltonian_cycle_bruteforce(g, args.max_vertices)
    return out


def _rotation(doc):
    if doc.rotation is None:
        return None
    rot = RotationSystem(doc.rotation)
    rot.validate(doc.graph)
    return rot


def _cmd_planar(args):
    doc = _read(args)
    g = doc.graph
    out = {"planar": is_planar(g)}
    rot = _rotation(doc)
    if rot is not None:
        fs = faces_from_rotation(g, rot)
        out["faces"] = len(fs.faces)
        out["outer"] = fs.outer
        out["face_vertices"] = [fs.vertices(i) for i in range(len(fs.faces))]
    return out


def _cmd_dual(args):
    doc = _read(args)
    g = doc.graph
    rot = _rotation(doc)
    d = dual_graph(g, rot) if rot is not None else dual_graph_from_cycles(g)
    if args.emit == "dot":
        return d.to_dot()
    return {"n": d.n, "m": d.m, "outer": d.outer, "edges": d.ends, "degrees": d.degrees}


def _network(args, doc: GraphDocument, need_costs=False) -> FlowNetwork:
    meta: FlowMeta = doc.flow
    s = args.source if args.source is not None else meta.source
    t = args.terminal if args.terminal is not None else meta.terminal
    if s is None or t is None:
        raise UsageError("source and terminal are needed (flags or document header)")
    costs = meta.costs
    if need_costs and costs is None:
        raise UsageError("min-cost flow needs edge costs in the document")
    return FlowNetwork.from_graph(doc.graph, s, t, costs)


def _flow_report(f):
    net = f.network
    return {
        "value": f.value,
        "flow": [[u, v, x] for (u, v), x in zip(net.arcs, f.arc_flow) if x],
    }


def _cmd_flow(args):
    net = _network(args, _read(args))
    f = max_flow(net, args.strategy)
    out = _flow_report(f)
    out["augmentations"] = f.augmentations
    cut = min_cut(net)
    out["cut_source_side"] = cut.A
    out["cut_capacity"] = cut.capacity
    return out


def _cmd_mincost(args):
    net = _network(args, _read(args), need_costs=True)
    f = min_cost_max_flow(net, args.strategy)
    out = _flow_report(f)
    out["cost"] = f.cost
    return out


def _cmd_spectral(args):
    sp = laplacian_spectrum(_read(args).graph)
    return {"eigenvalues": sp.values, "lambda2": sp.lambda2, "residual": sp.residual}


def _cmd_cheeger(args):
    rep = cheeger_inequality_check(_read(args).graph)
    return {
        "h": rep.h,
        "lambda2": rep.lambda2,
        "lower": rep.lower,
        "upper": rep.upper,
        "holds": rep.ok,
    }


# ------------------------------------------------------------ parser


def _seed(text):
    try:
        x = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= x < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="report format")
    common.add_argument("--seed", type=_seed, default=None,
                        help=f"random seed (default: ${SEED_ENV} or {DEFAULT_SEED})")
    common.add_argument("--threads", type=int, default=None, help="threads for compiled kernels")

    reader = _Parser(add_help=False)
    reader.add_argument("input", nargs="?", default="-", help="graph file, '-' for stdin")
    reader.add_argument("--input-format", choices=("auto", "edgelist", "json"), default="auto")

    p = _Parser(prog="graphalgo", description="Graph algorithms from the command line.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, fn, help, reads=True):
        sp = sub.add_parser(name, parents=[common, reader] if reads else [common], help=help)
        sp.set_defaults(func=fn)
        return sp

    g = cmd("generate", _cmd_generate, "emit a graph family as a document", reads=False)
    g.add_argument("--family", required=True, choices=FAMILIES)
    for key in ("n", "m", "k", "l"):
        g.add_argument(f"--{key}", type=int)
    g.add_argument("--sizes", help="comma separated part sizes")
    g.add_argument("--name", help="platonic solid name")

    a = cmd("analyze", _cmd_analyze, "graph metrics")
    a.add_argument("--metric", default="summary",
                   choices=("summary", *GLOBAL_KINDS, *VERTEX_KINDS, "small_world", "inequalities"))
    a.add_argument("--epsilon", type=float, default=1.7, help="DMNC exponent")
    a.add_argument("--samples", type=int, default=20, help="random baselines for small_world")

    m = cmd("mst", _cmd_mst, "minimum spanning tree")
    m.add_argument("--strategy", choices=("kruskal", "prim"), default="kruskal")

    pa = cmd("paths", _cmd_paths, "shortest paths")
    pa.add_argument("--algorithm", choices=PATH_ALGORITHMS, default="floyd_warshall")
    pa.add_argument("--source", type=int, default=0)

    cmd("connectivity", _cmd_connectivity, "vertex and edge connectivity")
    e = cmd("euler", _cmd_euler, "Eulerian classification and trail")
    e.add_argument("--strategy", choices=EULER_STRATEGIES, default="cycle_stack")
    h = cmd("hamilton", _cmd_hamilton, "Hamiltonian sufficient conditions")
    h.add_argument("--max-vertices", type=int, default=12, help="brute-force limit")
    cmd("planar", _cmd_planar, "planarity test, faces of a given rotation")
    d = cmd("dual", _cmd_dual, "dual graph of a planar graph")
    d.add_argument("--emit", choices=("report", "dot"), default="report")

    for name, fn, choices, default, help in (
        ("flow", _cmd_flow, MAX_FLOW_STRATEGIES, "dinic", "maximum flow and minimum cut"),
        ("mincost", _cmd_mincost, MIN_COST_STRATEGIES, "cycle_canceling_ff", "minimum-cost maximum flow"),
    ):
        f = cmd(name, fn, help)
        f.add_argument("--strategy", choices=choices, default=default)
        f.add_argument("--source", type=int)
        f.add_argument("--terminal", type=int)

    cmd("spectral", _cmd_spectral, "normalized Laplacian spectrum")
    cmd("cheeger", _cmd_cheeger, "Cheeger constant and bounds")
    return p


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.seed is None:
            env = os.environ.get(SEED_ENV)
            args.seed = _seed(env) if env else DEFAULT_SEED
        if args.threads is not None:
            if args.threads < 1:
                raise UsageError("--threads must be positive")
            _accel.set_threads(args.threads)
        result = args.func(args)
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except argparse.ArgumentTypeError as exc:
        print(f"graphalgo: {exc}", file=stderr)
        return 2
    except GraphError as exc:
        kind = "parse error" if isinstance(exc, ParseError) else type(exc).__name__
        print(f"graphalgo: {kind}: {exc}", file=stderr)
        return 1
    except ValueError as exc:  # out-of-range option values caught by the library
        print(f"graphalgo: {exc}", file=stderr)
        return 2
    stdout.write(result if isinstance(result, str) else _render(result, args.format))
    return 0


def main(argv=None) -> int:
    try:
        code = run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return code


if __name__ == "__main__":
    sys.exit(main())
