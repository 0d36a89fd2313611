import itertools

import networkx as nx
import numpy as np
import pytest
from networkx.generators.atlas import graph_atlas_g

from _util import random_graph, to_nx
from graphalgo import (
    AmbiguousRepresentation,
    DualGraph,
    Graph,
    InvalidRotation,
    NonPlanar,
    NotACycle,
    NotSimpleStar,
    OuterFaceEndpoint,
    PLATONIC,
    RotationSystem,
    TooLarge,
    c_components,
    dual_graph,
    dual_graph_from_cycles,
    faces_from_rotation,
    generate,
    grid_embedding,
    interlacement_graph,
    is_planar,
    is_planar_bruteforce,
    lee_path,
    multigraph_isomorphic,
    platonic_embedding,
    rotation_from_faces,
)


def nx_rotation(g):
    ok, emb = nx.check_planarity(to_nx(g))
    assert ok
    return RotationSystem(tuple(tuple(g.edge_index[(v, w)] for w in emb.neighbors_cw_order(v))
                                for v in range(g.n)))


def random_planar(rng, n, p, connected=True):
    while True:
        g = random_graph(rng, n, p)
        G = to_nx(g)
        if (not connected or nx.is_connected(G)) and nx.check_planarity(G)[0]:
            return g


def test_is_planar_examples():
    assert is_planar(generate("complete", n=4))
    k5 = generate("complete", n=5)
    assert not is_planar(k5) and k5.m > 3 * k5.n - 6
    assert not is_planar(generate("complete_bipartite", n=3, m=3))
    assert is_planar(Graph(0, ()))
    assert is_planar(Graph(3, ((0, 1), (1, 2)), directed=True))


def test_is_planar_vs_networkx_random():
    rng = np.random.default_rng(40)
    for _ in range(400):
        g = random_graph(rng, int(rng.integers(1, 16)), float(rng.uniform(0.1, 0.6)))
        assert is_planar(g) == nx.check_planarity(to_nx(g))[0], g.edges


def test_is_planar_vs_oracle_on_eight_vertices():
    rng = np.random.default_rng(41)
    for _ in range(15):
        g = random_graph(rng, 8, float(rng.uniform(0.25, 0.55)))
        assert is_planar(g) == is_planar_bruteforce(g)
    with pytest.raises(TooLarge):
        is_planar_bruteforce(generate("cube"), max_vertices=7)


def test_nonplanar_verdicts_have_a_certificate():
    # either the edge bound fails or the interlacement graph of some block is not bipartite,
    # which is what a nonplanar verdict rests on; here checked via networkx's Kuratowski finder
    for G in graph_atlas_g()[1:300]:
        g = Graph(G.number_of_nodes(), tuple(G.edges()))
        if not is_planar(g):
            assert g.m > 3 * g.n - 6 or nx.check_planarity(G, counterexample=True)[1] is not None


def test_c_components_examples():
    k4 = generate("complete", n=4)
    (comp,) = c_components(k4, [0, 1, 2])
    assert comp.attachments == (0, 1, 2) and comp.internal == (3,)
    assert c_components(generate("cycle", n=5), [0, 1, 2, 3, 4]) == []
    chord = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2)))
    (c,) = c_components(chord, [0, 1, 2, 3])
    assert c.edges == ((0, 2),) and c.attachments == (0, 2) and c.is_path
    with pytest.raises(NotACycle):
        c_components(k4, [0, 1])
    with pytest.raises(NotACycle):
        c_components(generate("path", n=4), [0, 1, 2, 3])


def test_interlacement_examples():
    c6 = [(i, (i + 1) % 6) for i in range(6)]
    parallel = Graph(6, tuple(c6 + [(0, 2), (3, 5)]))
    assert interlacement_graph(parallel, list(range(6))).m == 0
    crossing = Graph(6, tuple(c6 + [(0, 3), (1, 4)]))
    ig = interlacement_graph(crossing, list(range(6)))
    assert (ig.n, ig.m) == (2, 1)


def test_faces_examples():
    cube, rot = platonic_embedding("cube")
    fs = faces_from_rotation(cube, rot)
    assert len(fs) == 6 and 8 - 12 + 6 == 2
    tri = generate("cycle", n=3)
    assert len(faces_from_rotation(tri, RotationSystem(((0, 2), (0, 1), (1, 2))))) == 2
    tree = Graph(5, ((0, 1), (1, 2), (1, 3), (3, 4)))
    assert len(faces_from_rotation(tree, nx_rotation(tree))) == 1


def test_non_planar_rotation_rejected():
    k4 = generate("complete", n=4)
    rot = nx_rotation(k4)
    bad = list(rot.order)
    bad[0] = (bad[0][1], bad[0][0], bad[0][2])
    with pytest.raises(InvalidRotation):
        faces_from_rotation(k4, RotationSystem(tuple(bad)))
    with pytest.raises(InvalidRotation):
        faces_from_rotation(k4, RotationSystem(rot.order[:3]))


def test_euler_formula_random_embeddings():
    rng = np.random.default_rng(42)
    for _ in range(150):
        g = random_planar(rng, int(rng.integers(1, 12)), float(rng.uniform(0.1, 0.5)), connected=False)
        fs = faces_from_rotation(g, nx_rotation(g))
        c = nx.number_connected_components(to_nx(g))
        assert g.n - g.m + len(fs) == 1 + c
        if nx.is_connected(to_nx(g)) and g.n:
            assert min(g.degrees) <= 5


def test_dual_examples():
    d = dual_graph(*platonic_embedding("cube"))
    assert (d.n, d.m) == (6, 12)
    assert multigraph_isomorphic(d, DualGraph(6, generate("octahedron").edges))
    t = dual_graph(*platonic_embedding("tetrahedron"))
    assert multigraph_isomorphic(t, DualGraph(4, generate("tetrahedron").edges))
    k2 = Graph(2, ((0, 1),))
    d = dual_graph(k2, RotationSystem(((0,), (0,))))
    assert (d.n, d.m, d.loops) == (1, 1, 1)


def test_dual_invariants_random():
    rng = np.random.default_rng(43)
    for _ in range(120):
        g = random_planar(rng, int(rng.integers(2, 11)), float(rng.uniform(0.2, 0.6)))
        rot = nx_rotation(g)
        fs = faces_from_rotation(g, rot)
        d = dual_graph(g, rot)
        assert (d.n, d.m, len(d.faces())) == (len(fs), g.m, g.n)
        assert d.is_connected()
        dd = d.dual()
        assert multigraph_isomorphic(dd, DualGraph(g.n, g.edges))


def test_dual_from_cycles_examples():
    tri = dual_graph_from_cycles(generate("cycle", n=3))
    assert (tri.n, tri.m) == (2, 3) and tri.multiplicity() == {(0, 1): 3}
    tree = dual_graph_from_cycles(Graph(5, ((0, 1), (1, 2), (1, 3), (3, 4))))
    assert (tree.n, tree.m, tree.loops) == (1, 4, 4)
    for name in PLATONIC:
        g, rot = platonic_embedding(name)
        assert multigraph_isomorphic(dual_graph_from_cycles(g), dual_graph(g, rot))
    with pytest.raises(NonPlanar):
        dual_graph_from_cycles(generate("complete", n=5))


def test_dual_from_cycles_never_wrong_when_it_answers():
    rng = np.random.default_rng(44)
    answered = 0
    for _ in range(150):
        g = random_planar(rng, int(rng.integers(3, 10)), 0.4)
        rot = nx_rotation(g)
        try:
            c = dual_graph_from_cycles(g, rot)
        except AmbiguousRepresentation:
            continue
        answered += 1
        assert multigraph_isomorphic(c, dual_graph(g, rot))
    assert answered > 20


def test_lee_path_examples():
    g, rot = grid_embedding(3, 3)
    fs = faces_from_rotation(g, rot)
    corner = {frozenset(fs.vertices(i)): i for i in range(len(fs)) if i != fs.outer}
    a = corner[frozenset({0, 1, 3, 4})]
    b = corner[frozenset({4, 5, 7, 8})]
    path = lee_path(g, rot, a, b)
    assert len(path) == 3 and path[0] == a and path[-1] == b
    assert lee_path(g, rot, a, a) == [a]
    with pytest.raises(OuterFaceEndpoint):
        lee_path(g, rot, fs.outer, a)
    # square with a two-edge path through vertex 4 splitting it: inner faces share two edges
    sq = Graph(5, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 4)))
    rot = rotation_from_faces(sq, [[0, 1, 2, 4], [0, 4, 2, 3], [0, 1, 2, 3]])
    fs = faces_from_rotation(sq, rot)
    inner = [i for i in range(len(fs)) if i != fs.outer]
    with pytest.raises(NotSimpleStar):
        lee_path(sq, rot, inner[0], inner[1])


@pytest.mark.parametrize("k,l", [(2, 2), (3, 4), (5, 5)])
def test_grid_embedding_faces(k, l):
    g, rot = grid_embedding(k, l)
    assert len(faces_from_rotation(g, rot)) == (k - 1) * (l - 1) + 1


def test_multigraph_isomorphism_negative():
    a = DualGraph(3, ((0, 1), (0, 1), (1, 2)))
    b = DualGraph(3, ((0, 1), (1, 2), (1, 2)))
    c = DualGraph(3, ((0, 1), (1, 2), (0, 2)))
    assert multigraph_isomorphic(a, b)
    assert not multigraph_isomorphic(a, c)
