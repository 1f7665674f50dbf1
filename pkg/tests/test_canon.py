import random

import networkx as nx
import pytest

from grundy.canon import CANONICAL_LIMIT, are_isomorphic, canonical_form
from grundy.errors import SizeLimitError
from grundy.graph import Graph, make_family

from enumeration import all_graphs, to_graph


def _relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def test_atlas_classes_get_distinct_labels():
    # networkx's atlas lists every graph on <= 7 vertices once per isomorphism class
    rng = random.Random(0)
    labels = {}
    for n in range(0, 8):
        for h in all_graphs(n):
            g = to_graph(h)
            label = canonical_form(g)
            assert label not in labels
            labels[label] = g
            assert canonical_form(_relabel(g, rng)) == label
    assert len(labels) == 1253


def test_agrees_with_networkx_isomorphism():
    rng = random.Random(1)
    for _ in range(150):
        n = rng.randint(5, 9)
        p = rng.uniform(0.2, 0.7)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        h = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        gx, hx = nx.empty_graph(n), nx.empty_graph(n)
        gx.add_edges_from(g.edges)
        hx.add_edges_from(h.edges)
        want = nx.is_isomorphic(gx, hx)
        assert (canonical_form(g) == canonical_form(h)) == want
        assert are_isomorphic(g, _relabel(g, rng))


def test_vertex_colors_are_respected():
    p3 = make_family("path", 3)
    assert canonical_form(p3, (1, 2, 1)) == canonical_form(Graph(3, [(1, 2), (0, 2)]), (1, 1, 2))
    assert canonical_form(p3, (1, 2, 1)) != canonical_form(p3, (2, 1, 1))
    assert canonical_form(p3, (1, 2, 1)) != canonical_form(p3)


def test_regular_graphs_and_limits():
    assert canonical_form(make_family("cycle", 10)) != canonical_form(
        Graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)])
    )
    big = make_family("stable", CANONICAL_LIMIT + 1)
    with pytest.raises(SizeLimitError):
        canonical_form(big)
