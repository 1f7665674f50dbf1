import json
import random

import pytest

from grundy.coloring import Coloring
from grundy.errors import ColoringError, GraphError
from grundy.graph import Graph, make_family
from grundy.io import dump_coloring, emit_dot, emit_graph, load_coloring, parse_family, parse_graph


def corpus(count=50, seed=9):
    rng = random.Random(seed)
    out = [Graph(1), make_family("stable", 4), make_family("torus", 3, 4)]
    while len(out) < count:
        n = rng.randint(1, 14)
        p = rng.random()
        out.append(Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]))
    return out


def test_dimacs_examples():
    assert parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == make_family("complete", 3)
    assert parse_graph("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n") == make_family("path", 4)
    with pytest.raises(GraphError):
        parse_graph("p edge 5 1\ne 1 7\n")


def test_dimacs_tolerates_comments_and_duplicates():
    text = "c a comment\np edge 3 3\ne 1 2\ne 2 1\n\ne 2 3\n"
    assert parse_graph(text) == make_family("path", 3)


@pytest.mark.parametrize(
    "text",
    ["e 1 2\n", "p edge x 1\n", "p edge 3\n", "p edge 3 1\ne 1\n", "p edge 3 1\ne a b\n", "p edge 3 0\nq 1 2\n", "p edge 2 0\np edge 2 0\n", ""],
)
def test_dimacs_malformed(text):
    with pytest.raises(GraphError):
        parse_graph(text)


def test_edge_list_format():
    g = parse_graph("# comment\n4 3\n0 1\n1 2\n2 3\n", "edge-list")
    assert g == make_family("path", 4)
    with pytest.raises(GraphError):
        parse_graph("3 1\n0 5\n", "edge-list")
    with pytest.raises(GraphError):
        parse_graph("", "edge-list")
    with pytest.raises(GraphError):
        parse_graph("3 1\n0 1 2\n", "edge-list")


def test_family_descriptors():
    assert parse_family("path 4") == make_family("path", 4)
    assert parse_family("torus 4,4") == make_family("torus", 4, 4)
    assert parse_graph("complete_bipartite:2:3", "family") == make_family("complete_bipartite", 2, 3)
    with pytest.raises(GraphError):
        parse_family("path four")
    with pytest.raises(GraphError):
        parse_graph("path 4", "graphml")


@pytest.mark.parametrize("fmt", ["dimacs", "edge-list"])
def test_round_trip(fmt):
    for g in corpus():
        assert parse_graph(emit_graph(g, fmt), fmt) == g


def test_dimacs_emission_is_one_based():
    assert emit_graph(make_family("path", 3)) == "p edge 3 2\ne 1 2\ne 2 3\n"


def test_dot_examples():
    dot = emit_dot(make_family("complete", 2))
    assert dot.count(" -- ") == 1 and "v0;" in dot and "v1;" in dot
    dot = emit_dot(make_family("path", 4), Coloring((1, 3, 2, 1)))
    for label in ("v0:1", "v1:3", "v2:2", "v3:1"):
        assert f'label="{label}"' in dot
    assert emit_dot(Graph(0)) == "graph G {\n}\n"
    assert emit_dot(make_family("cycle", 5)) == emit_dot(make_family("cycle", 5))
    with pytest.raises(ColoringError):
        emit_dot(make_family("path", 3), Coloring((1, 2)))


def test_coloring_documents():
    c = Coloring((1, 0, 2))
    doc = dump_coloring(c)
    assert json.loads(doc) == {"n": 3, "colors": [1, 0, 2]}
    assert load_coloring(doc) == c
    for g in corpus(20):
        cols = Coloring(tuple(range(1, g.n + 1)))
        assert load_coloring(dump_coloring(cols)) == cols


@pytest.mark.parametrize(
    "text",
    ["nope", "[]", '{"n": 2}', '{"n": 2, "colors": [1]}', '{"n": 1, "colors": [-1]}', '{"n": 1, "colors": ["a"]}'],
)
def test_coloring_documents_malformed(text):
    with pytest.raises(ColoringError):
        load_coloring(text)
