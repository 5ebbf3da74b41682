"""Exact counting on the directed universe and the Tait graph.

Arborescence counts use the directed matrix-tree theorem: with
``L[i][i] = outdeg(i)`` (loops excluded) and ``L[i][j] = -#arcs(i -> j)``,
deleting the root's row and column leaves a matrix whose determinant is
the number of spanning trees converging to the root.  Determinants are
fraction-free Bareiss over Python ints, so every count is exact.

Enumeration operations carry instance guards (default 12 vertices /
24 arcs, overridable per call or via the KDL_GUARD_MAX environment
variable); the determinant-based counts have no guard.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from ._linalg import bareiss_determinant
from .errors import LoopsNotAllowed, NotEulerian, TooLarge
from .tait import DirectedUniverse, TaitGraph

DEFAULT_MAX_VERTICES = 12
DEFAULT_MAX_ARCS = 24


def _guard(name: str, value: int, limit: int | None, default: int) -> None:
    if limit is None:
        env = os.environ.get("KDL_GUARD_MAX")
        limit = int(env) if env else default
    if value > limit:
        raise TooLarge(f"{name} = {value} exceeds guard {limit}")


@dataclass(frozen=True)
class DirectedMultigraph:
    """Directed multigraph on vertices 0..order-1 with an explicit arc list."""

    order: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for t, h in self.arcs:
            if not (0 <= t < self.order and 0 <= h < self.order):
                raise ValueError(f"arc ({t}, {h}) out of range")

    @classmethod
    def from_arcs(cls, order, arcs, allow_loops=False):
        arcs = tuple(tuple(a) for a in arcs)
        if not allow_loops:
            loops = [a for a in arcs if a[0] == a[1]]
            if loops:
                raise LoopsNotAllowed(f"loops present: {loops}")
        return cls(order=order, arcs=arcs)

    @classmethod
    def from_directed_universe(cls, du: DirectedUniverse) -> "DirectedMultigraph":
        # Diagrams with nugatory crossings produce loops; they are legal
        # here and simply never enter an arborescence.
        return cls(order=du.underlying.n, arcs=du.arcs())

    def out_degree(self, v: int) -> int:
        return sum(1 for t, _ in self.arcs if t == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, h in self.arcs if h == v)

    def is_balanced(self) -> bool:
        return all(self.out_degree(v) == self.in_degree(v) for v in range(self.order))

    def is_connected_underlying(self) -> bool:
        """Connectivity of the underlying undirected graph, ignoring
        vertices that touch no arc (unless the graph has no arcs)."""
        active = set()
        adjacency: dict[int, set[int]] = {}
        for t, h in self.arcs:
            active.update((t, h))
            adjacency.setdefault(t, set()).add(h)
            adjacency.setdefault(h, set()).add(t)
        if not active:
            return self.order <= 1
        start = min(active)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen == active and len(active) == self.order

    def is_eulerian(self) -> bool:
        return bool(self.arcs) and self.is_balanced() and self.is_connected_underlying()


@dataclass(frozen=True)
class Arborescence:
    """Spanning in-tree: every non-root vertex has exactly one out-arc and
    all paths converge to the root."""

    root: int
    arc_indices: tuple[int, ...]


@dataclass(frozen=True)
class Hypertree:
    """Degree vector (tree degree minus one) on one color class, realized
    by at least one spanning tree of the bipartite graph."""

    side: str
    degrees: tuple[tuple[object, int], ...]

    def vector(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.degrees)


def arborescence_count(g: DirectedMultigraph, root: int) -> int:
    """Number of spanning arborescences converging to `root` (matrix-tree)."""
    m = g.order
    if m == 1:
        return 1
    lap = [[0] * m for _ in range(m)]
    for t, h in g.arcs:
        if t == h:
            continue
        lap[t][t] += 1
        lap[t][h] -= 1
    minor = [
        [lap[i][j] for j in range(m) if j != root]
        for i in range(m)
        if i != root
    ]
    return bareiss_determinant(minor)


def arborescence_enumerate(
    g: DirectedMultigraph,
    root: int,
    max_vertices: int | None = None,
    max_arcs: int | None = None,
) -> list[Arborescence]:
    """All spanning arborescences to `root`, in canonical (sorted) order.

    Backtracking over vertices in index order, assigning each non-root
    vertex one out-arc and rejecting assignments that close a cycle.
    """
    _guard("vertices", g.order, max_vertices, DEFAULT_MAX_VERTICES)
    _guard("arcs", len(g.arcs), max_arcs, DEFAULT_MAX_ARCS)
    out_arcs: dict[int, list[int]] = {v: [] for v in range(g.order)}
    for idx, (t, h) in enumerate(g.arcs):
        if t != h:
            out_arcs[t].append(idx)
    todo = [v for v in range(g.order) if v != root]
    chosen: dict[int, int] = {}
    found: list[Arborescence] = []

    def creates_cycle(v: int, first_head: int) -> bool:
        seen = {v}
        cur = first_head
        while cur != root and cur in chosen:
            if cur in seen:
                return True
            seen.add(cur)
            cur = g.arcs[chosen[cur]][1]
        return cur in seen

    def extend(i: int) -> None:
        if i == len(todo):
            found.append(
                Arborescence(root=root, arc_indices=tuple(sorted(chosen.values())))
            )
            return
        v = todo[i]
        for idx in out_arcs[v]:
            head = g.arcs[idx][1]
            if creates_cycle(v, head):
                continue
            chosen[v] = idx
            extend(i + 1)
            del chosen[v]

    extend(0)
    found.sort(key=lambda a: a.arc_indices)
    return found


def eulerian_tour_count(g: DirectedMultigraph, fixed_arc: int) -> int:
    """Number of Eulerian tours starting along a fixed arc.

    BEST formula: the tour count is the arborescence count times the
    product of (outdeg - 1)! over all vertices.
    """
    if not g.is_eulerian():
        raise NotEulerian("graph is not balanced and connected")
    if not 0 <= fixed_arc < len(g.arcs):
        raise ValueError(f"arc index {fixed_arc} out of range")
    root = g.arcs[fixed_arc][0]
    tau = arborescence_count(g, root)
    product = 1
    for v in range(g.order):
        product *= math.factorial(g.out_degree(v) - 1) if g.out_degree(v) else 1
    return tau * product


def root_independence_check(g: DirectedMultigraph) -> dict:
    """Arborescence count for every root; they agree on Eulerian graphs."""
    if not g.is_eulerian():
        raise NotEulerian("root independence is asserted for Eulerian graphs")
    per_root = {r: arborescence_count(g, r) for r in range(g.order)}
    values = set(per_root.values())
    return {"per_root": per_root, "all_equal": len(values) == 1}


def _tait_vertex_index(g: TaitGraph) -> tuple[dict, int]:
    index: dict[object, int] = {}
    for v in list(g.E) + list(g.V):
        index[v] = len(index)
    return index, len(index)


def spanning_tree_enumerate(
    g: TaitGraph,
    max_vertices: int | None = None,
    max_edges: int | None = None,
) -> list[tuple[int, ...]]:
    """All spanning trees of the (multi)graph, as sorted edge-index tuples.

    Include/exclude backtracking over edges in index order; the exclude
    branch is pruned when the remaining edges can no longer connect the
    graph.
    """
    index, order = _tait_vertex_index(g)
    _guard("vertices", order, max_vertices, DEFAULT_MAX_VERTICES)
    _guard("edges", len(g.edges), max_edges, DEFAULT_MAX_ARCS)
    m = len(g.edges)
    ends = [(index[b], index[w]) for b, w, _ in g.edges]
    trees: list[tuple[int, ...]] = []
    if order == 0:
        return trees

    def connected_with(available: list[int], chosen: list[int]) -> bool:
        parent = list(range(order))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = order
        for idx in chosen + available:
            a, b = ends[idx]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                comps -= 1
        return comps == 1

    chosen: list[int] = []

    def extend(i: int, parent: list[int], comps: int) -> None:
        if comps == 1:
            trees.append(tuple(chosen))
            return
        if i == m:
            return

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        a, b = ends[i]
        ra, rb = find(a), find(b)
        if ra != rb:
            nxt = parent[:]
            nxt[ra] = rb
            chosen.append(i)
            extend(i + 1, nxt, comps - 1)
            chosen.pop()
        if connected_with(list(range(i + 1, m)), chosen):
            extend(i + 1, parent, comps)

    extend(0, list(range(order)), order)
    trees.sort()
    return trees


def hypertree_set(
    g: TaitGraph,
    side: str,
    max_vertices: int | None = None,
    max_edges: int | None = None,
) -> list[Hypertree]:
    """Distinct spanning-tree degree vectors (offset by -1) on one class.

    `side` is "E" (black class) or "V" (white class).  Computed by a full
    spanning-tree sweep; desk scale favors the transparent route over
    polymatroid shortcuts.
    """
    if side not in ("E", "V"):
        raise ValueError("side must be 'E' or 'V'")
    vertices = g.E if side == "E" else g.V
    trees = spanning_tree_enumerate(g, max_vertices, max_edges)
    seen = set()
    out = []
    for tree in trees:
        degree = {v: 0 for v in vertices}
        for idx in tree:
            b, w, _ = g.edges[idx]
            v = b if side == "E" else w
            degree[v] += 1
        vector = tuple((v, degree[v] - 1) for v in vertices)
        if vector not in seen:
            seen.add(vector)
            out.append(Hypertree(side=side, degrees=vector))
    out.sort(key=lambda h: h.vector())
    return out
