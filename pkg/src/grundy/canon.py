"""Canonical labels for small graphs, optionally vertex-colored.

Two graphs get the same label exactly when they are isomorphic (by a
color-preserving map when colors are supplied).  The search is a plain
individualization/refinement tree: refine to an equitable ordered partition,
branch on the first smallest non-singleton cell, keep the smallest leaf
adjacency string.  Automorphisms discovered between equal leaves prune
sibling branches that lie in the same orbit.
"""

from __future__ import annotations

from typing import Sequence

from .errors import SizeLimitError
from .graph import Graph, iter_bits

__all__ = ["CANONICAL_LIMIT", "canonical_form", "are_isomorphic"]

CANONICAL_LIMIT = 64


def _refine(cells: list[list[int]], masks: Sequence[int]) -> list[list[int]]:
    cells = [list(c) for c in cells]
    while True:
        split = False
        for si in range(len(cells)):
            smask = 0
            for v in cells[si]:
                smask |= 1 << v
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((masks[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split = True
                    out.extend(groups[k] for k in sorted(groups))
            cells = out
            if split:
                break
        if not split:
            return cells


def _leaf_label(order: list[int], masks: Sequence[int], colors: Sequence[int] | None) -> bytes:
    n = len(order)
    bits = 0
    for i in range(n):
        mi = masks[order[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | ((mi >> order[j]) & 1)
    nbits = n * (n - 1) // 2
    head = n.to_bytes(2, "big")
    if colors is not None:
        head += b"".join(int(colors[v]).to_bytes(2, "big") for v in order)
    return head + bits.to_bytes((nbits + 7) // 8, "big")


class _Orbits:
    """Union-find orbits of the group generated by a set of permutations."""

    def __init__(self, n: int, gens: list[tuple[int, ...]]):
        self.parent = list(range(n))
        for g in gens:
            for v, w in enumerate(g):
                self.union(v, w)

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> bytes:
    """Isomorphism-invariant byte label of ``g``.

    With ``colors`` the label is invariant only under color-preserving
    isomorphisms and encodes the colors too.
    """
    n = g.n
    if n > CANONICAL_LIMIT:
        raise SizeLimitError(f"canonical_form handles at most {CANONICAL_LIMIT} vertices, got {n}")
    if colors is not None and len(colors) != n:
        raise ValueError("colors must have one entry per vertex")
    if n == 0:
        return _leaf_label([], g.masks, colors)
    masks = g.masks
    if colors is None:
        start = [list(range(n))]
    else:
        by_color: dict[int, list[int]] = {}
        for v in range(n):
            by_color.setdefault(colors[v], []).append(v)
        start = [by_color[c] for c in sorted(by_color)]

    best_label: bytes | None = None
    best_order: list[int] | None = None
    autos: list[tuple[int, ...]] = []

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        nonlocal best_label, best_order
        cells = _refine(cells, masks)
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            order = [c[0] for c in cells]
            label = _leaf_label(order, masks, colors)
            if best_label is None or label < best_label:
                best_label, best_order = label, order
            elif label == best_label:
                # map best leaf onto this one: an automorphism
                perm = [0] * n
                for a, b in zip(best_order, order):
                    perm[a] = b
                autos.append(tuple(perm))
            return
        cell = cells[target]
        explored: list[int] = []
        for v in sorted(cell):
            if explored:
                fixing = [a for a in autos if all(a[p] == p for p in prefix)]
                if fixing:
                    orb = _Orbits(n, fixing)
                    rv = orb.find(v)
                    if any(orb.find(w) == rv for w in explored):
                        continue
            rest = [w for w in cell if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            search(child, prefix + [v])
            explored.append(v)

    search(start, [])
    assert best_label is not None
    return best_label


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)
