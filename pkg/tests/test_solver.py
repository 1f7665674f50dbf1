import random

import pytest
from hypothesis import given, settings

from grundy.coloring import Coloring, is_grundy
from grundy.errors import BudgetExhausted, GraphError, SizeLimitError
from grundy.graph import Graph, cartesian_product, complement, induced_subgraph, make_family
from grundy.solver import (
    SearchBudget,
    chromatic_number,
    degree_bound,
    grundy_exact,
    grundy_oracle,
    grundy_witness,
    independence_number,
    ng_check,
    oracle_lexmin_witness,
    upper_bounds,
)

from strategies import graphs


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(max_time=-1)
    with pytest.raises(ValueError):
        SearchBudget(threads=0)


@pytest.mark.parametrize(
    "kind,sizes,want",
    [
        ("complete", (5,), 5),
        ("cycle", (4,), 2),
        ("cycle", (5,), 3),
        ("complete_bipartite", (3, 3), 2),
        ("stable", (1,), 1),
        ("path", (4,), 3),
        ("stable", (5,), 1),
    ],
)
def test_exact_examples(kind, sizes, want):
    g = make_family(kind, *sizes)
    res = grundy_exact(g)
    assert res.exact and res.value == want
    assert is_grundy(g, res.witness).grundy and res.witness.num_colors == want
    assert grundy_oracle(g) == want


def test_exact_rejects_empty_graph():
    with pytest.raises(GraphError):
        grundy_exact(Graph(0))


def test_witness_examples():
    assert grundy_witness(make_family("cycle", 4), 3) is None
    w = grundy_witness(make_family("path", 4), 3)
    assert w is not None and is_grundy(make_family("path", 4), w).grundy
    g, _ = cartesian_product(make_family("cycle", 3), make_family("cycle", 5))
    w = grundy_witness(g, 5)
    assert w is not None and w.num_colors == 5 and is_grundy(g, w).grundy


def test_witness_budget_is_not_absence():
    # Gamma(C3 x C4) = 4 < 5 = max degree + 1, so ruling out 5 needs real search
    g, _ = cartesian_product(make_family("cycle", 3), make_family("cycle", 4))
    with pytest.raises(BudgetExhausted):
        grundy_witness(g, 5, SearchBudget(max_nodes=5))
    assert grundy_witness(g, 5) is None


def test_exact_under_tiny_budget_is_flagged():
    g, _ = cartesian_product(make_family("cycle", 3), make_family("cycle", 4))
    res = grundy_exact(g, SearchBudget(max_nodes=5))
    assert not res.exact
    assert is_grundy(g, res.witness).grundy and res.witness.num_colors == res.value


def test_independence_examples():
    assert independence_number(make_family("complete", 6)) == 1
    assert independence_number(make_family("cycle", 5)) == 2
    assert independence_number(make_family("path", 4)) == 2


def test_upper_bound_examples():
    ub = upper_bounds(make_family("path", 4))
    assert (ub.delta_plus_one, ub.stability_bound) == (3, 3)
    ub = upper_bounds(make_family("complete_bipartite", 3, 3))
    assert (ub.delta_plus_one, ub.stability_bound) == (4, 4)
    ub = upper_bounds(make_family("cycle", 5))
    assert (ub.delta_plus_one, ub.stability_bound) == (3, 4) and ub.combined == 3
    assert upper_bounds(Graph(4, [(0, 1), (2, 3)])).stability_bound is None


def test_oracle_examples_and_limit():
    assert grundy_oracle(make_family("path", 4)) == 3
    assert grundy_oracle(make_family("cycle", 4)) == 2
    assert grundy_oracle(make_family("stable", 5)) == 1
    with pytest.raises(SizeLimitError):
        grundy_oracle(make_family("path", 10))


def _random_graphs(seed, count, lo, hi):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(lo, hi)
        p = rng.uniform(0.15, 0.85)
        yield Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_exact_matches_oracle_with_lexmin_witness():
    for g in _random_graphs(7, 60, 1, 7):
        res = grundy_exact(g)
        assert res.exact and res.value == grundy_oracle(g)
        assert res.witness == oracle_lexmin_witness(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_sandwich(g):
    res = grundy_exact(g)
    assert res.exact
    assert chromatic_number(g) <= res.value <= min(g.max_degree + 1, degree_bound(g))
    if g.is_connected():
        assert res.value <= g.n + 1 - independence_number(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_no_witness_above_exact_value(g):
    res = grundy_exact(g)
    assert grundy_witness(g, res.value) is not None
    assert grundy_witness(g, res.value + 1) is None


def test_induced_subgraphs_never_exceed():
    rng = random.Random(21)
    for g in _random_graphs(22, 30, 3, 8):
        vs = sorted(rng.sample(range(g.n), rng.randint(1, g.n)))
        assert grundy_exact(induced_subgraph(g, vs)).value <= grundy_exact(g).value


def test_disconnected_graph_takes_component_maximum():
    g = Graph(9, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 4)])
    assert grundy_exact(g).value == 3
    assert grundy_oracle(g) == 3


def test_medium_products_solve_exactly():
    cases = [(("cycle", 3), ("cycle", 4), 4), (("cycle", 3), ("cycle", 3), 4), (("cycle", 4), ("cycle", 4), 5)]
    for a, b, want in cases:
        g, _ = cartesian_product(make_family(*a), make_family(*b))
        res = grundy_exact(g, SearchBudget(max_nodes=10**8))
        assert res.exact and res.value == want


def test_ng_check_examples():
    rep = ng_check(make_family("cycle", 5))
    assert (rep.gamma, rep.gamma_complement, rep.sum, rep.bound_holds) == (3, 3, 6, True)
    assert "regular" in rep.conditions
    rep = ng_check(make_family("complete", 4))
    assert rep.sum == 5 and rep.bound_holds


def test_ng_check_top_vertices_carry_the_top_color():
    g = make_family("path", 5)
    rep = ng_check(g)
    assert rep.top_vertices == (1, 2, 3)
    gc = complement(g)
    for y in rep.top_vertices_complement:
        assert grundy_witness(gc, rep.gamma_complement, roots=[y]) is not None


def test_chromatic_number_examples():
    assert chromatic_number(make_family("cycle", 5)) == 3
    assert chromatic_number(make_family("complete_bipartite", 2, 4)) == 2
    assert chromatic_number(make_family("complete", 6)) == 6
    assert chromatic_number(make_family("stable", 3)) == 1


def test_witness_respects_roots():
    p4 = make_family("path", 4)
    assert grundy_witness(p4, 3, roots=[0]) is None
    w = grundy_witness(p4, 3, roots=[2])
    assert w[2] == 3


def test_witness_is_total_coloring():
    w = grundy_witness(make_family("stable", 3), 1)
    assert w == Coloring((1, 1, 1))
