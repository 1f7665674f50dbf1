"""Colorings, proper/Grundy verification, first-fit and proper extension.

Colors are 1-based; ``0`` marks an unassigned vertex in a partial coloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ColoringError
from .graph import Graph, iter_bits

__all__ = [
    "Coloring",
    "Violation",
    "VerificationReport",
    "is_proper",
    "is_grundy",
    "greedy_color",
    "extend_proper",
    "order_from_coloring",
]


@dataclass(frozen=True)
class Coloring:
    """Vertex colors aligned with vertex indices; 0 means unassigned."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 0 for c in self.colors):
            raise ColoringError("colors must be >= 1, or 0 for unassigned")

    @classmethod
    def partial(cls, n: int, assigned: Mapping[int, int]) -> "Coloring":
        colors = [0] * n
        for v, c in assigned.items():
            if not 0 <= v < n:
                raise ColoringError(f"vertex {v} out of range for n={n}")
            if c < 1:
                raise ColoringError(f"assigned color must be >= 1, got {c} at vertex {v}")
            colors[v] = c
        return cls(tuple(colors))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def is_total(self) -> bool:
        return all(self.colors)

    @property
    def num_colors(self) -> int:
        return max(self.colors, default=0)

    def assigned(self) -> dict[int, int]:
        return {v: c for v, c in enumerate(self.colors) if c}

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            if c:
                out.setdefault(c, []).append(v)
        return out

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)


@dataclass(frozen=True)
class Violation:
    """One failed check.

    ``kind`` is ``"conflict"`` (``color`` shared with adjacent ``neighbor``) or
    ``"missing"`` (no neighbor carries the smaller ``color``).
    """

    vertex: int
    color: int
    kind: str
    neighbor: int | None = None


@dataclass(frozen=True)
class VerificationReport:
    proper: bool
    grundy: bool
    violations: list[Violation] = field(default_factory=list)

    def __bool__(self) -> bool:
        return not self.violations


def _check_shape(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise ColoringError(f"coloring has {c.n} entries, graph has {g.n} vertices")
    if not c.is_total:
        missing = [v for v, x in enumerate(c.colors) if x == 0]
        raise ColoringError(f"partial coloring submitted; unassigned vertices {missing}")


def _conflicts(g: Graph, c: Coloring) -> list[Violation]:
    out = []
    for u, v in g.edges:
        if c.colors[u] == c.colors[v]:
            out.append(Violation(u, c.colors[u], "conflict", v))
            out.append(Violation(v, c.colors[v], "conflict", u))
    return out


def _missing(g: Graph, c: Coloring) -> list[Violation]:
    out = []
    cols = c.colors
    for v in range(g.n):
        seen = {cols[u] for u in iter_bits(g.masks[v])}
        for j in range(1, cols[v]):
            if j not in seen:
                out.append(Violation(v, j, "missing"))
    return out


def is_proper(g: Graph, c: Coloring) -> VerificationReport:
    """Check that no edge is monochromatic; lists both endpoints of every bad edge."""
    _check_shape(g, c)
    conflicts = _conflicts(g, c)
    proper = not conflicts
    grundy = proper and not _missing(g, c)
    return VerificationReport(proper, grundy, conflicts)


def is_grundy(g: Graph, c: Coloring) -> VerificationReport:
    """Check properness plus: a vertex colored i sees every color 1..i-1."""
    _check_shape(g, c)
    conflicts = _conflicts(g, c)
    missing = _missing(g, c)
    proper = not conflicts
    return VerificationReport(proper, proper and not missing, conflicts + missing)


def _first_fit(masks: Sequence[int], order: Iterable[int], colors: list[int]) -> list[int]:
    for v in order:
        used = 0
        for u in iter_bits(masks[v]):
            used |= 1 << colors[u]
        c = 1
        while (used >> c) & 1:
            c += 1
        colors[v] = c
    return colors


def greedy_color(g: Graph, order: Sequence[int]) -> Coloring:
    """First-fit coloring: each vertex in ``order`` takes the smallest color unused by its colored neighbors."""
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ColoringError("order must be a permutation of the vertices")
    result = Coloring(tuple(_first_fit(g.masks, order, [0] * g.n)))
    assert is_grundy(g, result).grundy
    return result


def extend_proper(g: Graph, partial: Coloring) -> Coloring:
    """Complete a proper partial coloring without touching assigned vertices.

    Unassigned vertices are processed in ascending index and take the smallest
    color absent from their already-colored neighbors.
    """
    if partial.n != g.n:
        raise ColoringError(f"coloring has {partial.n} entries, graph has {g.n} vertices")
    cols = list(partial.colors)
    for u, v in g.edges:
        if cols[u] and cols[u] == cols[v]:
            raise ColoringError(f"partial coloring not proper on edge ({u}, {v})")
    todo = [v for v in range(g.n) if cols[v] == 0]
    return Coloring(tuple(_first_fit(g.masks, todo, cols)))


def order_from_coloring(c: Coloring) -> list[int]:
    """Vertex order (by color class, then index) whose first-fit reproduces a Grundy coloring."""
    return sorted(range(c.n), key=lambda v: (c.colors[v], v))
