"""Seeded random graphs and small exhaustive corpora for the reproduction runs."""

from __future__ import annotations

import random
from itertools import combinations

from .canon import canonical_form
from .graph import Graph, induced_subgraph

__all__ = ["DEFAULT_SEED", "random_graph", "random_regular", "random_induced", "graphs_up_to_iso"]

DEFAULT_SEED = 20240611


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_regular(rng: random.Random, n: int, d: int, connected: bool = True, tries: int = 1000) -> Graph:
    """Random d-regular graph: pair stubs one edge at a time, restarting on a dead end."""
    if n * d % 2 or d >= n or d < 0:
        raise ValueError(f"no {d}-regular graph on {n} vertices")
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(d)]
        edges: set[tuple[int, int]] = set()
        while stubs:
            for _ in range(50):
                i, j = rng.sample(range(len(stubs)), 2)
                e = (min(stubs[i], stubs[j]), max(stubs[i], stubs[j]))
                if e[0] != e[1] and e not in edges:
                    break
            else:
                break
            edges.add(e)
            for k in sorted((i, j), reverse=True):
                stubs.pop(k)
        if stubs:
            continue
        g = Graph(n, edges)
        if not connected or g.is_connected():
            return g
    raise RuntimeError(f"could not sample a {d}-regular graph on {n} vertices")


def random_induced(rng: random.Random, g: Graph) -> tuple[list[int], Graph]:
    """A random non-empty vertex subset and the subgraph it induces."""
    size = rng.randint(1, g.n)
    vs = sorted(rng.sample(range(g.n), size))
    return vs, induced_subgraph(g, vs)


def graphs_up_to_iso(n: int) -> list[Graph]:
    """One graph per isomorphism class on n vertices, by brute force over edge sets (n <= 6)."""
    if n > 6:
        raise ValueError("brute-force corpus is limited to 6 vertices")
    pairs = list(combinations(range(n), 2))
    seen: dict[bytes, Graph] = {}
    for bits in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
        seen.setdefault(canonical_form(g), g)
    return [seen[k] for k in sorted(seen)]
