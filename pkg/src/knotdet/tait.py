"""Checkerboard coloring, the bipartite Tait graph, and the directed universe.

The regions of a universe admit exactly two proper 2-colorings; we fix the
one that makes the unbounded region (region 0) white.  The Tait graph has
one vertex per region and one edge per universe edge, joining the black
side to the white side; it is the planar dual of the universe.  Directing
each universe edge with its black side on the right produces a balanced
digraph with in-degree = out-degree = 2 everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Universe
from .errors import NotBipartiteFaces

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class FaceColoring:
    """Proper 2-coloring of the regions; `color[r]` is BLACK or WHITE."""

    color: tuple[str, ...]

    def black_regions(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.color) if c == BLACK)

    def white_regions(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.color) if c == WHITE)


@dataclass(frozen=True)
class TaitGraph:
    """Plane bipartite graph with color classes E (black) and V (white).

    `edges[i]` is ``(black_vertex, white_vertex, edge_ref)``.  For graphs
    built from a universe the vertices are region ids and `edge_ref` is
    the universe edge id (1..2n); for free-standing graphs the vertices
    are caller-supplied labels and `edge_ref` is the input line number.
    """

    E: tuple[object, ...]
    V: tuple[object, ...]
    edges: tuple[tuple[object, object, int], ...]

    def degree(self, vertex: object) -> int:
        return sum(1 for b, w, _ in self.edges if b == vertex or w == vertex)

    def is_connected(self) -> bool:
        vertices = set(self.E) | set(self.V)
        if not vertices:
            return True
        adjacency: dict[object, set[object]] = {v: set() for v in vertices}
        for b, w, _ in self.edges:
            adjacency[b].add(w)
            adjacency[w].add(b)
        start = next(iter(vertices))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(vertices)


@dataclass(frozen=True)
class DirectedUniverse:
    """The universe with each edge directed black-side-on-the-right.

    `direction[i]` is ``(tail_crossing, head_crossing)`` for edge ``i+1``;
    `tail_dart[i]` is the dart at the tail.
    """

    underlying: Universe
    direction: tuple[tuple[int, int], ...]
    tail_dart: tuple[int, ...]

    def arcs(self) -> tuple[tuple[int, int], ...]:
        return self.direction

    def out_degree(self, crossing: int) -> int:
        return sum(1 for t, _ in self.direction if t == crossing)

    def in_degree(self, crossing: int) -> int:
        return sum(1 for _, h in self.direction if h == crossing)

    def is_balanced(self) -> bool:
        return all(
            self.out_degree(c) == 2 and self.in_degree(c) == 2
            for c in range(self.underlying.n)
        )


def checkerboard(universe: Universe, white_outside: bool = True) -> FaceColoring:
    """Proper 2-coloring of the regions, unbounded region white by default.

    Plane universes are always checkerboard-colorable; failure means the
    map data is corrupt and raises NotBipartiteFaces.
    """
    m = len(universe.regions)
    color = [-1] * m
    color[0] = 0
    stack = [0]
    while stack:
        r = stack.pop()
        for eid in range(1, 2 * universe.n + 1):
            a, b = universe.edge_sides(eid)
            if a == r or b == r:
                other = b if a == r else a
                if color[other] == -1:
                    color[other] = 1 - color[r]
                    stack.append(other)
                elif color[other] == color[r]:
                    raise NotBipartiteFaces(
                        f"regions {r} and {other} share an edge and a color"
                    )
    if -1 in color:
        raise NotBipartiteFaces("region adjacency is disconnected")
    outside_white = 0 if white_outside else 1
    names = {outside_white: WHITE, 1 - outside_white: BLACK}
    return FaceColoring(color=tuple(names[c] for c in color))


def tait_graph(universe: Universe, coloring: FaceColoring) -> TaitGraph:
    """Bipartite dual of the universe: one edge per universe edge.

    Edge ``j`` of the result is dual to universe edge ``j`` and joins the
    black and white regions flanking it.
    """
    edges = []
    for eid in range(1, 2 * universe.n + 1):
        a, b = universe.edge_sides(eid)
        if coloring.color[a] == BLACK:
            black, white = a, b
        else:
            black, white = b, a
        if coloring.color[black] != BLACK or coloring.color[white] != WHITE:
            raise NotBipartiteFaces(f"edge {eid} does not separate the colors")
        edges.append((black, white, eid))
    return TaitGraph(
        E=coloring.black_regions(),
        V=coloring.white_regions(),
        edges=tuple(edges),
    )


def orient_universe(universe: Universe, coloring: FaceColoring) -> DirectedUniverse:
    """Direct every universe edge so its black region is on the right.

    The region to the right of a dart (pointing away from its crossing) is
    `face_of_dart`, so the tail of each edge is the dart whose right side
    is black.
    """
    direction = []
    tails = []
    for eid in range(1, 2 * universe.n + 1):
        d1, d2 = universe.edge_darts[eid - 1]
        if coloring.color[universe.face_of_dart[d1]] == BLACK:
            tail = d1
        else:
            tail = d2
        head = universe.edge_pairing[tail]
        direction.append((tail // 4, head // 4))
        tails.append(tail)
    return DirectedUniverse(
        underlying=universe,
        direction=tuple(direction),
        tail_dart=tuple(tails),
    )


def dual_edge_map(graph: TaitGraph, directed: DirectedUniverse) -> dict[int, int]:
    """Bijection from Tait-graph edge index to its dual universe edge id.

    Both structures are built edge-by-edge from the same universe, so the
    pairing is positional; it is materialized (and validated) here because
    the polytope triangulation consumes it.
    """
    universe = directed.underlying
    mapping = {}
    for index, (_, _, eid) in enumerate(graph.edges):
        if not 1 <= eid <= 2 * universe.n:
            raise ValueError(f"edge ref {eid} is not a universe edge id")
        mapping[index] = eid
    if len(set(mapping.values())) != 2 * universe.n:
        raise ValueError("edge pairing is not a bijection")
    return mapping
