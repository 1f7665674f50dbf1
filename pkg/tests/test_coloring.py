import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grundy.coloring import (
    Coloring,
    extend_proper,
    greedy_color,
    is_grundy,
    is_proper,
    order_from_coloring,
)
from grundy.errors import ColoringError
from grundy.graph import Graph, make_family
from grundy.solver import grundy_exact

from strategies import graphs


def col(*cs):
    return Coloring(tuple(cs))


def test_coloring_rejects_negative_colors():
    with pytest.raises(ColoringError):
        col(1, -1)


def test_partial_constructor():
    c = Coloring.partial(4, {1: 3})
    assert c.colors == (0, 3, 0, 0)
    assert not c.is_total
    assert c.assigned() == {1: 3}


def test_is_proper_examples():
    assert is_proper(make_family("cycle", 4), col(1, 2, 1, 2)).proper
    rep = is_proper(make_family("complete", 3), col(1, 1, 2))
    assert not rep.proper
    assert {(v.vertex, v.neighbor) for v in rep.violations} == {(0, 1), (1, 0)}
    assert all(v.kind == "conflict" and v.color == 1 for v in rep.violations)
    assert is_proper(make_family("path", 4), col(1, 3, 2, 1)).proper


def test_is_grundy_examples():
    p4 = make_family("path", 4)
    assert is_grundy(p4, col(1, 3, 2, 1)).grundy
    assert is_grundy(p4, col(1, 2, 1, 2)).grundy
    rep = is_grundy(make_family("star", 3), col(3, 1, 1, 1))
    assert rep.proper and not rep.grundy
    assert [(v.vertex, v.color, v.kind) for v in rep.violations] == [(0, 2, "missing")]


def test_report_lists_every_violation():
    rep = is_grundy(make_family("path", 3), col(3, 3, 1))
    kinds = sorted(v.kind for v in rep.violations)
    assert kinds.count("conflict") == 2 and "missing" in kinds
    assert not rep


def test_partial_colorings_are_rejected_by_verifiers():
    with pytest.raises(ColoringError):
        is_proper(make_family("path", 3), col(1, 0, 1))
    with pytest.raises(ColoringError):
        is_grundy(make_family("path", 3), col(1, 2))


def test_greedy_examples():
    assert greedy_color(make_family("path", 4), [3, 2, 0, 1]).colors == (1, 3, 2, 1)
    assert greedy_color(make_family("cycle", 4), [0, 1, 2, 3]).num_colors == 2
    for order in ([0, 1, 2], [2, 0, 1], [1, 2, 0]):
        assert greedy_color(make_family("complete", 3), order).num_colors == 3
    with pytest.raises(ColoringError):
        greedy_color(make_family("path", 3), [0, 0, 1])


def test_extend_examples():
    p4 = make_family("path", 4)
    assert extend_proper(p4, Coloring.partial(4, {1: 3})).colors == (1, 3, 1, 2)
    total = col(1, 2, 1, 2)
    assert extend_proper(p4, total) == total
    assert extend_proper(make_family("stable", 4), col(0, 0, 0, 0)).colors == (1, 1, 1, 1)
    with pytest.raises(ColoringError):
        extend_proper(p4, col(2, 2, 0, 0))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_greedy_is_always_grundy(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    c = greedy_color(g, order)
    rep = is_grundy(g, c)
    assert rep.proper and rep.grundy
    assert c.num_colors <= g.max_degree + 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_extend_keeps_assigned_colors(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    full = greedy_color(g, order)
    keep = {v: full[v] for v in range(g.n) if rnd.random() < 0.5}
    ext = extend_proper(g, Coloring.partial(g.n, keep))
    assert all(ext[v] == c for v, c in keep.items())
    assert is_proper(g, ext).proper
    assert all(ext[v] <= g.degree(v) + 1 for v in range(g.n) if v not in keep)


def test_solver_witnesses_replay_through_greedy():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 7)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        w = grundy_exact(g).witness
        assert greedy_color(g, order_from_coloring(w)) == w
