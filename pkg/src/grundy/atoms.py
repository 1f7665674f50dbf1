"""Generate the edge-minimal graphs with a given Grundy number by vertex merging.

Start from the binomial tree on ``2**(k-1)`` vertices with its natural
``k``-coloring, merge pairs of non-adjacent vertices of equal color, keep
the results whose Grundy number is still ``k``, dedupe up to isomorphism and
repeat until nothing new appears.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field

from .canon import canonical_form
from .coloring import Coloring, is_grundy
from .errors import BudgetExhausted, DomainError
from .graph import Graph, make_family, merge_vertices, remove_edge
from .solver import SearchBudget, grundy_exact

__all__ = ["MAX_K", "Atom", "AtomSet", "binomial_coloring", "generate_atoms", "is_edge_critical"]

MAX_K = 6


@dataclass(frozen=True)
class Atom:
    graph: Graph
    label: bytes
    witness: Coloring
    edge_critical: bool


@dataclass
class AtomSet:
    """Pairwise non-isomorphic graphs with Grundy number ``k``.

    ``trace`` records ``(parent_label, (u, v), child_label)`` for every merge
    that produced a new member.  ``complete`` is False when the budget ran out.
    """

    k: int
    members: list[Atom] = field(default_factory=list)
    trace: list[tuple[bytes, tuple[int, int], bytes]] = field(default_factory=list)
    complete: bool = True

    @property
    def labels(self) -> list[bytes]:
        return [a.label for a in self.members]


def binomial_coloring(k: int) -> Coloring:
    """Color of vertex v is one more than the number of trailing zero bits; the root gets k."""
    n = 1 << (k - 1)
    return Coloring(tuple(k if v == 0 else (v & -v).bit_length() for v in range(n)))


def _merged_coloring(col: Coloring, u: int, v: int) -> Coloring:
    drop = max(u, v)
    return Coloring(col.colors[:drop] + col.colors[drop + 1 :])


def is_edge_critical(g: Graph, k: int, budget: SearchBudget | None = None) -> bool:
    """True when ``g`` has Grundy number ``k`` and deleting any edge drops it below ``k``."""
    res = grundy_exact(g, budget)
    if not res.exact:
        raise BudgetExhausted("could not confirm the Grundy number of the graph")
    if res.value != k:
        raise ValueError(f"graph has Grundy number {res.value}, not {k}")
    for u, v in g.edges:
        sub = grundy_exact(remove_edge(g, u, v), budget)
        if not sub.exact:
            raise BudgetExhausted(f"could not solve the graph without edge ({u}, {v})")
        if sub.value >= k:
            return False
    return True


def generate_atoms(k: int, budget: SearchBudget | None = None, critical_only: bool = False) -> AtomSet:
    """Breadth-first search over the merge lattice of the binomial tree.

    ``budget.max_nodes`` limits each exact solve; ``budget.max_time`` limits
    the whole generation.  Members are sorted by canonical label.
    """
    if not 1 <= k <= MAX_K:
        raise DomainError(f"k must be between 1 and {MAX_K}, got {k}")
    budget = budget or SearchBudget()
    start = time.monotonic()
    out = AtomSet(k)

    seed = make_family("binomial_tree", k)
    seed_col = binomial_coloring(k)
    assert is_grundy(seed, seed_col).grundy and seed_col.num_colors == k

    # underlying-graph label -> witness, or None when Gamma != k
    verdict: dict[bytes, Coloring | None] = {}
    graphs: dict[bytes, Graph] = {}

    def accept(g: Graph, col: Coloring) -> bytes | None:
        label = canonical_form(g)
        if label not in verdict:
            res = grundy_exact(g, budget)
            if not res.exact:
                raise BudgetExhausted("exact solve ran out of budget")
            verdict[label] = col if res.value == k else None
            graphs[label] = g
        return label if verdict[label] is not None else None

    seen_colored = {canonical_form(seed, seed_col.colors)}
    queue = deque()
    try:
        if accept(seed, seed_col) is not None:
            queue.append((seed, seed_col, canonical_form(seed)))
        while queue:
            g, col, label = queue.popleft()
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    if col[u] != col[v] or g.adjacent(u, v):
                        continue
                    if budget.max_time is not None and time.monotonic() - start > budget.max_time:
                        raise BudgetExhausted("generation ran out of time")
                    h = merge_vertices(g, u, v)
                    hcol = _merged_coloring(col, u, v)
                    if not (is_grundy(h, hcol).grundy and hcol.num_colors == k):
                        continue
                    ckey = canonical_form(h, hcol.colors)
                    if ckey in seen_colored:
                        continue
                    seen_colored.add(ckey)
                    child = accept(h, hcol)
                    if child is None:
                        continue
                    out.trace.append((label, (u, v), child))
                    queue.append((h, hcol, child))
    except BudgetExhausted:
        out.complete = False

    for label in sorted(lab for lab, w in verdict.items() if w is not None):
        g = graphs[label]
        try:
            critical = is_edge_critical(g, k, budget)
        except BudgetExhausted:
            out.complete = False
            critical = False
        if critical_only and not critical:
            continue
        out.members.append(Atom(g, label, verdict[label], critical))
    return out
