"""Exact Grundy numbers, witness search, bounds and a brute-force oracle.

Two complete search routines live here:

* a color-class dynamic program.  A Grundy coloring is a chain of maximal
  independent sets, each maximal in what the previous ones left over, so the
  Grundy number of a vertex set ``R`` is ``1 + max`` over maximal independent
  sets ``I`` of ``R`` of the Grundy number of ``R - I``.  States are memoized
  by bitmask and cut with a fail-soft threshold plus an iterated degree bound.
* a witness search for a fixed target ``t``: color a root ``t``, then satisfy
  each open "vertex v still needs a neighbor of color j" obligation, most
  constrained obligation first.  Used on graphs too large for the DP.

The oracle takes the maximum of first-fit over every vertex ordering and
shares no code with either search.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coloring import Coloring, extend_proper, is_grundy
from .errors import BudgetExhausted, GraphError, SizeLimitError
from .graph import Graph, complement, iter_bits

__all__ = [
    "SearchBudget",
    "GrundyResult",
    "UpperBounds",
    "NGReport",
    "ALPHA_LIMIT",
    "ORACLE_LIMIT",
    "independence_number",
    "degree_bound",
    "upper_bounds",
    "grundy_exact",
    "grundy_witness",
    "grundy_oracle",
    "oracle_lexmin_witness",
    "chromatic_number",
    "ng_check",
]

ALPHA_LIMIT = 48
ORACLE_LIMIT = 9
DP_LIMIT = 40
CANONICAL_WITNESS_LIMIT = 8
_PROBE_NODES = 20_000


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock limits for one search call.

    ``threads`` is accepted as a parallelism hint; searches here run on one
    thread so results never depend on scheduling.
    """

    max_nodes: int | None = 10_000_000
    max_time: float | None = None
    threads: int = 1

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_time is not None and self.max_time <= 0:
            raise ValueError("max_time must be positive")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


class _OutOfBudget(Exception):
    pass


class _Clock:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise _OutOfBudget
        if b.max_time is not None and not self.nodes & 1023:
            if time.monotonic() - self.start > b.max_time:
                raise _OutOfBudget

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.start


@dataclass(frozen=True)
class GrundyResult:
    """``value`` is the Grundy number when ``exact``, otherwise a proven lower bound."""

    value: int
    witness: Coloring
    exact: bool
    nodes: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class UpperBounds:
    delta_plus_one: int
    stability_bound: int | None
    degree_bound: int

    @property
    def combined(self) -> int:
        vals = [self.delta_plus_one, self.degree_bound]
        if self.stability_bound is not None:
            vals.append(self.stability_bound)
        return min(vals)


# -- independence number ------------------------------------------------------


def _alpha(masks: Sequence[int], pool: int, cache: dict[int, int]) -> int:
    if pool == 0:
        return 0
    hit = cache.get(pool)
    if hit is not None:
        return hit
    best_v, best_d = -1, -1
    low_v = -1
    for v in iter_bits(pool):
        d = (masks[v] & pool).bit_count()
        if d <= 1:
            low_v = v
            break
        if d > best_d:
            best_v, best_d = v, d
    if low_v >= 0:
        # a vertex of degree <= 1 always lies in some maximum independent set
        res = 1 + _alpha(masks, pool & ~masks[low_v] & ~(1 << low_v), cache)
    elif best_d == 2:
        # disjoint union of cycles
        res = 0
        left = pool
        while left:
            s = left & -left
            comp = s
            frontier = s
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= masks[u]
                frontier = nxt & pool & ~comp
                comp |= frontier
            res += comp.bit_count() // 2
            left &= ~comp
    else:
        v = best_v
        res = max(
            _alpha(masks, pool & ~(1 << v), cache),
            1 + _alpha(masks, pool & ~masks[v] & ~(1 << v), cache),
        )
    cache[pool] = res
    return res


def independence_number(g: Graph) -> int:
    """Exact size of a maximum independent set (bitset branch and bound)."""
    if g.n < 1:
        raise GraphError("independence number of the empty graph")
    if g.n > ALPHA_LIMIT:
        raise SizeLimitError(f"independence_number handles at most {ALPHA_LIMIT} vertices")
    return _alpha(g.masks, (1 << g.n) - 1, {})


# -- bounds ---------------------------------------------------------------------


def _max_color_caps(masks: Sequence[int], pool: int) -> dict[int, int]:
    """Per-vertex cap on the color a vertex can take in a Grundy coloring of ``pool``.

    A vertex colored c needs distinct neighbors able to carry 1..c-1; iterate
    that matching condition from the degree+1 start to a fixed point.
    """
    verts = list(iter_bits(pool))
    cap = {v: (masks[v] & pool).bit_count() + 1 for v in verts}
    changed = True
    while changed:
        changed = False
        for v in verts:
            m = 0
            for a in sorted(cap[u] for u in iter_bits(masks[v] & pool)):
                if a > m:
                    m += 1
            if m + 1 < cap[v]:
                cap[v] = m + 1
                changed = True
    return cap


def _pool_bound(masks: Sequence[int], pool: int) -> int:
    if pool == 0:
        return 0
    return max(_max_color_caps(masks, pool).values())


def degree_bound(g: Graph) -> int:
    """Iterated degree bound; never weaker than max degree + 1."""
    if g.n == 0:
        return 0
    return _pool_bound(g.masks, (1 << g.n) - 1)


def upper_bounds(g: Graph) -> UpperBounds:
    """Max degree + 1, and n + 1 - alpha for connected graphs.

    ``stability_bound`` is ``None`` for disconnected graphs and for graphs above
    ``ALPHA_LIMIT`` vertices.
    """
    if g.n < 1:
        raise GraphError("bounds of the empty graph")
    stab = None
    if g.is_connected() and g.n <= ALPHA_LIMIT:
        stab = g.n + 1 - independence_number(g)
    return UpperBounds(g.max_degree + 1, stab, degree_bound(g))


# -- helpers ----------------------------------------------------------------


def _pool_components(masks: Sequence[int], pool: int) -> list[int]:
    out = []
    left = pool
    while left:
        s = left & -left
        comp = s
        frontier = s
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= masks[u]
            frontier = nxt & pool & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def _maximal_independent_sets(masks: Sequence[int], pool: int) -> list[int]:
    """All maximal independent sets of the subgraph induced by ``pool`` (Bron-Kerbosch on the complement)."""
    out: list[int] = []

    def free(v: int) -> int:
        return pool & ~masks[v] & ~(1 << v)

    def bk(chosen: int, cand: int, excl: int) -> None:
        if not cand:
            if not excl:
                out.append(chosen)
            return
        best_u, best_k = -1, -1
        for u in iter_bits(cand | excl):
            k = (cand & free(u)).bit_count()
            if k > best_k:
                best_u, best_k = u, k
        for v in iter_bits(cand & ~free(best_u)):
            fv = free(v)
            bk(chosen | (1 << v), cand & fv, excl & fv)
            cand &= ~(1 << v)
            excl |= 1 << v

    bk(0, pool, 0)
    return out


def _first_fit_mask(masks: Sequence[int], order: Iterable[int], n: int) -> list[int]:
    cols = [0] * n
    for v in order:
        used = 0
        for u in iter_bits(masks[v]):
            used |= 1 << cols[u]
        c = 1
        while (used >> c) & 1:
            c += 1
        cols[v] = c
    return cols


def _heuristic(g: Graph) -> list[int]:
    """Best of a few first-fit orders; a cheap starting lower bound."""
    n = g.n
    deg = g.degrees
    orders = [
        list(range(n)),
        list(range(n - 1, -1, -1)),
        sorted(range(n), key=lambda v: (deg[v], v)),
        sorted(range(n), key=lambda v: (-deg[v], v)),
    ]
    best = None
    for order in orders:
        cols = _first_fit_mask(g.masks, order, n)
        if best is None or max(cols) > max(best):
            best = cols
    return best


# -- color-class dynamic program ----------------------------------------------


class _ClassDP:
    def __init__(self, masks: Sequence[int], clock: _Clock):
        self.masks = masks
        self.clock = clock
        self.exact: dict[int, int] = {}
        self.upper: dict[int, int] = {}
        self.choice: dict[int, int] = {}
        self._ub: dict[int, int] = {}
        self._cands: dict[int, list[tuple[int, int]]] = {}

    def ub(self, pool: int) -> int:
        hit = self._ub.get(pool)
        if hit is None:
            hit = self._ub[pool] = _pool_bound(self.masks, pool)
        return hit

    def candidates(self, pool: int) -> list[tuple[int, int]]:
        hit = self._cands.get(pool)
        if hit is None:
            hit = []
            for ind in _maximal_independent_sets(self.masks, pool):
                hit.append((self.ub(pool & ~ind), ind))
            hit.sort(key=lambda t: (-t[0], t[1].bit_count(), t[1]))
            self._cands[pool] = hit
        return hit

    def solve(self, pool: int, lo: int) -> int:
        """Exact value if it exceeds ``lo``; otherwise an upper bound <= ``lo``."""
        if pool == 0:
            return 0
        hit = self.exact.get(pool)
        if hit is not None:
            return hit
        up = self.upper.get(pool)
        if up is not None and up <= lo:
            return up
        self.clock.tick()
        comps = _pool_components(self.masks, pool)
        if len(comps) > 1:
            best = 0
            soft = 0
            for comp in sorted(comps, key=lambda c: (-self.ub(c), c)):
                thr = max(lo, best)
                if self.ub(comp) <= thr:
                    soft = max(soft, self.ub(comp))
                    continue
                v = self.solve(comp, thr)
                if v > thr:
                    best = v
                else:
                    soft = max(soft, v)
            return self._store(pool, lo, best, soft)
        top = self.ub(pool)
        if top <= lo:
            self.upper[pool] = top
            return top
        best = 0
        soft = 0
        for sub_ub, ind in self.candidates(pool):
            thr = max(lo, best)
            if 1 + sub_ub <= thr:
                soft = max(soft, 1 + sub_ub)
                break
            v = self.solve(pool & ~ind, thr - 1)
            if 1 + v > thr:
                best = 1 + v
                self.choice[pool] = ind
                if best >= top:
                    break
            else:
                soft = max(soft, 1 + v)
        return self._store(pool, lo, best, soft)

    def _store(self, pool: int, lo: int, best: int, soft: int) -> int:
        if best > lo:
            self.exact[pool] = best
            return best
        prev = self.upper.get(pool)
        self.upper[pool] = soft if prev is None else min(prev, soft)
        return soft

    def paint(self, pool: int, offset: int, cols: list[int]) -> None:
        """Write a Grundy coloring of ``pool`` using colors above ``offset``."""
        if pool == 0:
            return
        comps = _pool_components(self.masks, pool)
        if len(comps) > 1:
            for comp in comps:
                self.paint(comp, offset, cols)
            return
        ind = self.choice.get(pool) if pool in self.exact else None
        if ind is None:
            # no optimal chain recorded: any first-fit chain is still Grundy
            for v in iter_bits(pool):
                used = 0
                for u in iter_bits(self.masks[v] & pool):
                    used |= 1 << cols[u]
                c = offset + 1
                while (used >> c) & 1:
                    c += 1
                cols[v] = c
            return
        for v in iter_bits(ind):
            cols[v] = offset + 1
        self.paint(pool & ~ind, offset + 1, cols)


# -- witness search ---------------------------------------------------------


class _WitnessSearch:
    """Find a partial coloring, Grundy on the colored vertices, with some vertex colored ``t``."""

    def __init__(self, g: Graph, t: int, clock: _Clock):
        self.g = g
        self.t = t
        self.clock = clock
        n = g.n
        self.nbrs = [g.neighbors(v) for v in range(n)]
        self.cap = _max_color_caps(g.masks, (1 << n) - 1) if n else {}
        self.col = [0] * n
        self.seen = [[0] * (t + 1) for _ in range(n)]
        self.colored: list[int] = []

    def _assign(self, v: int, c: int) -> None:
        self.col[v] = c
        self.colored.append(v)
        for u in self.nbrs[v]:
            self.seen[u][c] += 1

    def _unassign(self, v: int) -> None:
        c = self.col[v]
        self.col[v] = 0
        self.colored.pop()
        for u in self.nbrs[v]:
            self.seen[u][c] -= 1

    def _pick(self):
        col, seen, cap = self.col, self.seen, self.cap
        best = None
        best_cands: list[int] = []
        for w in self.colored:
            sw = seen[w]
            for j in range(1, col[w]):
                if sw[j]:
                    continue
                cands = [z for z in self.nbrs[w] if not col[z] and cap[z] >= j and not seen[z][j]]
                if best is None or len(cands) < len(best_cands):
                    best, best_cands = (w, j), cands
                    if not cands:
                        return best, cands
        return best, best_cands

    def _dfs(self) -> bool:
        self.clock.tick()
        ob, cands = self._pick()
        if ob is None:
            return True
        if not cands:
            return False
        _, j = ob
        col, seen = self.col, self.seen

        def score(z: int) -> int:
            return sum(1 for y in self.nbrs[z] if col[y] > j and not seen[y][j])

        for z in sorted(cands, key=lambda z: (-score(z), z)):
            self._assign(z, j)
            if self._dfs():
                return True
            self._unassign(z)
        return False

    def run(self, roots: Iterable[int]) -> list[int] | None:
        for r in roots:
            if self.cap[r] < self.t:
                continue
            self._assign(r, self.t)
            if self._dfs():
                return list(self.col)
            self._unassign(r)
        return None


def _root_order(g: Graph) -> list[int]:
    deg = g.degrees
    return sorted(range(g.n), key=lambda v: (-deg[v], v))


def _search_witness(g: Graph, t: int, clock: _Clock, roots: Iterable[int] | None = None) -> Coloring | None:
    if t == 1:
        return extend_proper(g, Coloring((0,) * g.n))
    partial = _WitnessSearch(g, t, clock).run(_root_order(g) if roots is None else roots)
    if partial is None:
        return None
    result = extend_proper(g, Coloring(tuple(partial)))
    assert is_grundy(g, result).grundy and result.num_colors >= t
    return result


def grundy_witness(
    g: Graph,
    t: int,
    budget: SearchBudget | None = None,
    roots: Iterable[int] | None = None,
) -> Coloring | None:
    """Grundy coloring with at least ``t`` colors, or ``None`` when none exists.

    Raises :class:`BudgetExhausted` when the search is cut short; that outcome
    says nothing about existence.  ``roots`` restricts which vertices may carry
    color ``t``.  The returned coloring uses exactly ``t`` colors whenever
    ``t`` equals the Grundy number.
    """
    if t < 1:
        raise ValueError("target must be >= 1")
    if g.n == 0:
        return None
    clock = _Clock(budget or SearchBudget())
    try:
        return _search_witness(g, t, clock, roots)
    except _OutOfBudget:
        raise BudgetExhausted(f"witness search for {t} colors ran out of budget", nodes=clock.nodes) from None


# -- exact -------------------------------------------------------------------


def _lexmin_witness(g: Graph, k: int, clock: _Clock) -> list[int] | None:
    """Lexicographically least color vector among Grundy colorings with exactly k colors."""
    n = g.n
    masks = g.masks
    cap = _max_color_caps(masks, (1 << n) - 1)
    last_nbr = [max(iter_bits(masks[v]), default=-1) for v in range(n)]
    cols = [0] * n

    def ok_at(w: int, upto: int) -> bool:
        # w and every vertex finished at ``upto`` must still be able to meet property P
        need = 0
        free = 0
        present = 0
        for u in iter_bits(masks[w]):
            if u <= upto:
                present |= 1 << cols[u]
            else:
                free += 1
        for j in range(1, cols[w]):
            if not (present >> j) & 1:
                need += 1
        return need <= free

    def rec(v: int) -> bool:
        if v == n:
            return max(cols) == k
        clock.tick()
        for c in range(1, min(k, cap[v]) + 1):
            if any(cols[u] == c for u in iter_bits(masks[v]) if u < v):
                continue
            cols[v] = c
            if ok_at(v, v) and all(ok_at(u, v) for u in iter_bits(masks[v]) if u < v):
                if rec(v + 1):
                    return True
        cols[v] = 0
        return False

    return list(cols) if rec(0) else None


def grundy_exact(g: Graph, budget: SearchBudget | None = None) -> GrundyResult:
    """Grundy number with a verified witness.

    On budget exhaustion the result has ``exact=False`` and carries the best
    lower bound found with its witness.  For graphs up to
    ``CANONICAL_WITNESS_LIMIT`` vertices the witness is the lexicographically
    least optimal color vector.
    """
    if g.n < 1:
        raise GraphError("Grundy number of the empty graph")
    clock = _Clock(budget or SearchBudget())
    n = g.n
    best = _heuristic(g)
    lb = max(best)
    ub = upper_bounds(g).combined if n <= ALPHA_LIMIT else degree_bound(g)
    exact = False
    try:
        if lb < ub:
            probe = _Clock(SearchBudget(max_nodes=_PROBE_NODES))
            try:
                found = _search_witness(g, ub, probe)
            except _OutOfBudget:
                found = None
            clock.nodes += probe.nodes
            if found is not None:
                best, lb = list(found.colors), found.num_colors
        if lb >= ub:
            exact = True
        elif n <= DP_LIMIT:
            dp = _ClassDP(g.masks, clock)
            v = dp.solve((1 << n) - 1, lb)
            if v > lb:
                cols = [0] * n
                dp.paint((1 << n) - 1, 0, cols)
                best, lb = cols, v
            exact = True
        else:
            for t in range(ub, lb, -1):
                found = _search_witness(g, t, clock)
                if found is not None:
                    best, lb = list(found.colors), found.num_colors
                    break
            exact = True
        if exact and n <= CANONICAL_WITNESS_LIMIT:
            canon = _lexmin_witness(g, lb, clock)
            assert canon is not None
            best = canon
    except _OutOfBudget:
        pass
    witness = Coloring(tuple(best))
    assert is_grundy(g, witness).grundy and witness.num_colors == lb
    return GrundyResult(lb, witness, exact, clock.nodes, clock.elapsed)


# -- oracle --------------------------------------------------------------------


def _oracle_scan(g: Graph) -> tuple[int, tuple[int, ...]]:
    n = g.n
    if n > ORACLE_LIMIT:
        raise SizeLimitError(f"oracle handles at most {ORACLE_LIMIT} vertices")
    adj = [list(g.neighbors(v)) for v in range(n)]
    cols = [0] * n
    seen: set[tuple[int, ...]] = set()
    best_val = 0
    best_vec: tuple[int, ...] | None = None

    def rec(depth: int) -> None:
        nonlocal best_val, best_vec
        state = tuple(cols)
        if state in seen:
            return
        seen.add(state)
        if depth == n:
            k = max(cols, default=0)
            if k > best_val or (k == best_val and (best_vec is None or state < best_vec)):
                best_val, best_vec = k, state
            return
        for v in range(n):
            if cols[v]:
                continue
            used = {cols[u] for u in adj[v]}
            c = 1
            while c in used:
                c += 1
            cols[v] = c
            rec(depth + 1)
            cols[v] = 0

    rec(0)
    return best_val, best_vec or ()


def grundy_oracle(g: Graph) -> int:
    """Maximum number of first-fit colors over all vertex orderings (n <= 9)."""
    return _oracle_scan(g)[0]


def oracle_lexmin_witness(g: Graph) -> Coloring:
    """Lexicographically least optimal first-fit coloring over all orderings."""
    return Coloring(_oracle_scan(g)[1])


# -- chromatic number ------------------------------------------------------------


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking (small graphs)."""
    n = g.n
    if n == 0:
        return 0
    masks = g.masks
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    cols = [0] * n

    def fits(i: int, k: int) -> bool:
        if i == n:
            return True
        v = order[i]
        used = {cols[u] for u in iter_bits(masks[v])}
        top = max(cols) if i else 0
        for c in range(1, min(k, top + 1) + 1):
            if c not in used:
                cols[v] = c
                if fits(i + 1, k):
                    return True
        cols[v] = 0
        return False

    k = 1
    while not fits(0, k):
        k += 1
    return k


# -- Nordhaus-Gaddum check ---------------------------------------------------------


@dataclass(frozen=True)
class NGReport:
    """``conditions`` names the sufficient conditions that hold: ``regular``,
    ``degree_order`` (some top-colored x of G and y of the complement with
    d(x) <= d(y)) and ``shared_vertex`` (one vertex can carry the top color in
    both)."""

    n: int
    gamma: int
    gamma_complement: int
    sum: int
    bound_holds: bool
    conditions: tuple[str, ...]
    top_vertices: tuple[int, ...]
    top_vertices_complement: tuple[int, ...]


def _top_vertices(g: Graph, k: int, clock: _Clock) -> tuple[int, ...]:
    out = []
    for r in range(g.n):
        if _search_witness(g, k, clock, roots=[r]) is not None:
            out.append(r)
    return tuple(out)


def ng_check(g: Graph, budget: SearchBudget | None = None) -> NGReport:
    """Exact Grundy number of ``g`` plus that of its complement, against n + 1."""
    budget = budget or SearchBudget()
    gc = complement(g)
    r1 = grundy_exact(g, budget)
    r2 = grundy_exact(gc, budget)
    if not (r1.exact and r2.exact):
        raise BudgetExhausted("ng_check could not solve both graphs exactly")
    clock = _Clock(budget)
    try:
        xs = _top_vertices(g, r1.value, clock)
        ys = _top_vertices(gc, r2.value, clock)
    except _OutOfBudget:
        raise BudgetExhausted("ng_check ran out of budget locating top-colored vertices") from None
    deg = g.degrees
    conds = []
    if g.n and g.is_regular() and deg[0] >= 1:
        conds.append("regular")
    if xs and ys and min(deg[x] for x in xs) <= max(deg[y] for y in ys):
        conds.append("degree_order")
    if set(xs) & set(ys):
        conds.append("shared_vertex")
    total = r1.value + r2.value
    return NGReport(g.n, r1.value, r2.value, total, total <= g.n + 1, tuple(conds), xs, ys)
