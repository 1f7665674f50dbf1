"""Immutable simple graphs, standard families and structural operators.

Vertices are ``0..n-1``.  Adjacency is stored as one integer bitmask per
vertex, which keeps the exhaustive searches elsewhere in the package cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Iterable, Sequence

from .errors import GraphError

__all__ = [
    "Graph",
    "Bipartition",
    "ProductCoords",
    "FAMILIES",
    "make_family",
    "cartesian_product",
    "product_of",
    "complement",
    "induced_subgraph",
    "bipartition",
    "merge_vertices",
    "remove_edge",
    "components",
    "iter_bits",
]


def iter_bits(mask: int):
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances never change after construction; every operator in this module
    returns a new graph.
    """

    __slots__ = ("_n", "_masks", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._n = n
        self._masks = tuple(masks)
        self._hash = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build from adjacency bitmasks, checking symmetry and loops."""
        n = len(masks)
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full or (m >> v) & 1:
                raise GraphError(f"bad adjacency mask for vertex {v}")
            for u in iter_bits(m):
                if not (masks[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        g._n = n
        g._masks = tuple(masks)
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def __len__(self) -> int:
        return self._n

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self._masks[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self._masks[v]))

    def degree(self, v: int) -> int:
        return self._masks[v].bit_count()

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._masks)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self._n) for v in iter_bits(self._masks[u] >> (u + 1) << (u + 1))
        )

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._masks)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class Bipartition:
    """Split of the vertex set into two independent sets ``left`` (X) and ``right`` (Y)."""

    left: frozenset
    right: frozenset

    def side(self, v: int) -> int:
        """0 for X, 1 for Y."""
        return 0 if v in self.left else 1


class ProductCoords:
    """Row-major bijection between product vertices and coordinate tuples.

    For a binary product ``G x H`` the index of ``(i, j)`` is ``i * n_H + j``;
    ``i`` is the row (a vertex of G) and ``j`` the column (a vertex of H).
    Longer products nest the same rule left to right.
    """

    __slots__ = ("sizes", "_strides")

    def __init__(self, sizes: Sequence[int]):
        self.sizes = tuple(sizes)
        strides = []
        acc = 1
        for s in reversed(self.sizes):
            strides.append(acc)
            acc *= s
        self._strides = tuple(reversed(strides))

    @property
    def n(self) -> int:
        return prod(self.sizes)

    def index(self, *coords: int) -> int:
        if len(coords) != len(self.sizes):
            raise GraphError(f"expected {len(self.sizes)} coordinates, got {len(coords)}")
        idx = 0
        for c, s, st in zip(coords, self.sizes, self._strides):
            if not 0 <= c < s:
                raise GraphError(f"coordinate {c} out of range 0..{s - 1}")
            idx += c * st
        return idx

    def coords(self, idx: int) -> tuple[int, ...]:
        if not 0 <= idx < self.n:
            raise GraphError(f"vertex {idx} out of range")
        out = []
        for st, s in zip(self._strides, self.sizes):
            out.append((idx // st) % s)
        return tuple(out)

    def column(self, j: int) -> list[int]:
        """Copy of the first factor sitting at column ``j`` (binary products)."""
        rows, _ = self.sizes
        return [self.index(i, j) for i in range(rows)]

    def row(self, i: int) -> list[int]:
        """Copy of the second factor sitting at row ``i`` (binary products)."""
        _, cols = self.sizes
        return [self.index(i, j) for j in range(cols)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ProductCoords) and self.sizes == other.sizes

    def __repr__(self) -> str:
        return f"ProductCoords({self.sizes})"


# -- families ---------------------------------------------------------------


def _binomial_tree_edges(k: int) -> list[tuple[int, int]]:
    # parent of v is v with its lowest set bit cleared
    return [(v & (v - 1), v) for v in range(1, 1 << (k - 1))]


def _family_edges(kind: str, sizes: Sequence[int]) -> tuple[int, list[tuple[int, int]]]:
    def need(count: int, minimum: int) -> None:
        if len(sizes) != count:
            raise GraphError(f"family {kind!r} takes {count} size parameter(s), got {len(sizes)}")
        for s in sizes:
            if s < minimum:
                raise GraphError(f"family {kind!r} needs sizes >= {minimum}, got {s}")

    if kind in ("stable", "empty"):
        need(1, 1)
        return sizes[0], []
    if kind == "complete":
        need(1, 1)
        return sizes[0], list(combinations(range(sizes[0]), 2))
    if kind == "path":
        need(1, 1)
        return sizes[0], [(i, i + 1) for i in range(sizes[0] - 1)]
    if kind == "cycle":
        need(1, 3)
        n = sizes[0]
        return n, [(i, (i + 1) % n) for i in range(n)]
    if kind == "complete_bipartite":
        need(2, 1)
        a, b = sizes
        return a + b, [(i, a + j) for i in range(a) for j in range(b)]
    if kind == "star":
        need(1, 1)
        return sizes[0] + 1, [(0, i) for i in range(1, sizes[0] + 1)]
    if kind == "binomial_tree":
        need(1, 1)
        return 1 << (sizes[0] - 1), _binomial_tree_edges(sizes[0])
    raise GraphError(f"unknown family {kind!r}")


FAMILIES = (
    "stable",
    "complete",
    "path",
    "cycle",
    "complete_bipartite",
    "star",
    "binomial_tree",
    "mesh",
    "torus",
)


def make_family(kind: str, *sizes: int) -> Graph:
    """Return a named graph family member with canonical numbering.

    ``binomial_tree k`` is the tree on ``2**(k-1)`` vertices whose natural
    first-fit coloring uses ``k`` colors; ``mesh`` and ``torus`` take a list of
    path/cycle lengths and return their Cartesian product.
    """
    sizes = tuple(int(s) for s in sizes)
    if kind in ("mesh", "torus"):
        if len(sizes) < 1:
            raise GraphError(f"family {kind!r} needs at least one dimension")
        factor = "path" if kind == "mesh" else "cycle"
        return product_of([make_family(factor, s) for s in sizes])[0]
    n, edges = _family_edges(kind, sizes)
    return Graph(n, edges)


# -- operators ---------------------------------------------------------------


def cartesian_product(g: Graph, h: Graph) -> tuple[Graph, ProductCoords]:
    """Cartesian product with vertex ``(i, j)`` numbered ``i * h.n + j``."""
    if g.n == 0 or h.n == 0:
        raise GraphError("Cartesian product of an empty graph")
    coords = ProductCoords((g.n, h.n))
    nh = h.n
    masks = []
    for i in range(g.n):
        gi = g.masks[i]
        for j in range(nh):
            m = h.masks[j] << (i * nh)
            for k in iter_bits(gi):
                m |= 1 << (k * nh + j)
            masks.append(m)
    return Graph.from_masks(masks), coords


def product_of(graphs: Sequence[Graph]) -> tuple[Graph, ProductCoords]:
    """Left-nested Cartesian product of several factors."""
    if not graphs:
        raise GraphError("product of no factors")
    result = graphs[0]
    if result.n == 0:
        raise GraphError("Cartesian product of an empty graph")
    for factor in graphs[1:]:
        result, _ = cartesian_product(result, factor)
    return result, ProductCoords([f.n for f in graphs])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_masks([full & ~m & ~(1 << v) for v, m in enumerate(g.masks)])


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph on ``vs``, renumbered in ascending order of the original index."""
    keep = sorted(set(vs))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(keep), edges)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.masks[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def bipartition(g: Graph) -> Bipartition | None:
    """Two-coloring by BFS; each component's smallest vertex goes to X.

    Returns ``None`` when the graph has an odd cycle.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = [root]
        for v in queue:
            for u in iter_bits(g.masks[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    left = frozenset(v for v in range(g.n) if side[v] == 0)
    right = frozenset(v for v in range(g.n) if side[v] == 1)
    return Bipartition(left, right)


def merge_vertices(g: Graph, u: int, v: int) -> Graph:
    """Identify two non-adjacent vertices.

    The merged vertex keeps the smaller index; the larger index is removed and
    the vertices above it shift down by one.
    """
    if u == v:
        raise GraphError("cannot merge a vertex with itself")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex pair ({u}, {v}) out of range")
    if g.adjacent(u, v):
        raise GraphError(f"vertices {u} and {v} are adjacent")
    keep, drop = min(u, v), max(u, v)

    def relabel(x: int) -> int:
        if x == drop:
            return keep
        return x - 1 if x > drop else x

    edges = {tuple(sorted((relabel(a), relabel(b)))) for a, b in g.edges}
    return Graph(g.n - 1, edges)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.adjacent(u, v):
        raise GraphError(f"no edge ({u}, {v})")
    masks = list(g.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph.from_masks(masks)
