"""PD-code parsing and the universe of a link diagram.

A diagram is given as PD code: one crossing per line, ``X a b c d``,
where a, b, c, d are the edge labels around the crossing listed
counterclockwise starting at the incoming under-strand.  The under-strand
runs from position 0 to position 2; the over-strand occupies positions 1
and 3.

The *universe* is the underlying 4-regular plane map: one vertex per
crossing, darts in counterclockwise order around each vertex, faces traced
from the rotation system.  With counterclockwise rotations, the face orbit
of the permutation ``dart -> sigma(alpha(dart))`` lies to the *right* of
each of its darts (darts point away from their vertex).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .errors import (
    BadEdgeMultiplicity,
    Disconnected,
    EmptyDiagram,
    InconsistentOrientation,
    MalformedLine,
    MultiComponent,
    NonPlanarEmbedding,
)


@dataclass(frozen=True)
class Crossing:
    """One crossing: four edge labels counterclockwise from the incoming
    under-strand."""

    id: int
    quadrant_edges: tuple[int, int, int, int]


@dataclass(frozen=True)
class LinkDiagram:
    """A validated PD-code diagram.

    `crossings` carry edge labels renumbered 1..2n in first-appearance
    order; `source_quads` keeps the labels as given so serialization
    round-trips the input.
    """

    crossings: tuple[Crossing, ...]
    source_quads: tuple[tuple[int, int, int, int], ...]

    @property
    def n(self) -> int:
        return len(self.crossings)

    def pd_text(self) -> str:
        lines = ["X %d %d %d %d" % quad for quad in self.source_quads]
        return "\n".join(lines) + "\n"

    def normalized_text(self) -> str:
        lines = ["X %d %d %d %d" % c.quadrant_edges for c in self.crossings]
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        """SHA-256 of the renumbered PD text; stable diagram identity."""
        return hashlib.sha256(self.normalized_text().encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Region:
    id: int
    boundary: tuple[int, ...]          # closed face walk, as darts
    incident_crossings: frozenset[int]


@dataclass(frozen=True)
class Universe:
    """4-regular plane combinatorial map of a diagram.

    Darts are numbered ``4 * crossing + slot``.  `vertex_rotation` is the
    counterclockwise successor, `edge_pairing` the other end of the same
    edge.  Edge ids run 1..2n; `edge_darts[j]` are the two darts of edge
    ``j + 1`` in (smaller, larger) order.
    """

    n: int
    vertex_rotation: tuple[int, ...]
    edge_pairing: tuple[int, ...]
    edge_darts: tuple[tuple[int, int], ...]
    dart_edge: tuple[int, ...]
    face_cycles: tuple[Region, ...]
    face_of_dart: tuple[int, ...] = field(repr=False)

    @property
    def darts(self) -> range:
        return range(4 * self.n)

    def dart(self, crossing: int, slot: int) -> int:
        return 4 * crossing + (slot % 4)

    def dart_crossing(self, dart: int) -> int:
        return dart // 4

    def dart_slot(self, dart: int) -> int:
        return dart % 4

    @property
    def regions(self) -> tuple[Region, ...]:
        return self.face_cycles

    def quadrant_region(self, crossing: int, quadrant: int) -> int:
        """Region occupying the corner between slots `quadrant` and
        `quadrant + 1` (counterclockwise) at the crossing."""
        return self.face_of_dart[self.dart(crossing, quadrant + 1)]

    def region_of_dart_right(self, dart: int) -> int:
        """Region to the right of `dart` directed away from its vertex."""
        return self.face_of_dart[dart]

    def region_of_dart_left(self, dart: int) -> int:
        return self.face_of_dart[self.vertex_rotation[dart]]

    def edge_sides(self, edge_id: int) -> tuple[int, int]:
        """The two regions flanking an edge (right of each dart)."""
        a, b = self.edge_darts[edge_id - 1]
        return (self.face_of_dart[a], self.face_of_dart[b])

    def regions_adjacent(self, r1: int, r2: int) -> bool:
        for eid in range(1, 2 * self.n + 1):
            if set(self.edge_sides(eid)) == {r1, r2}:
                return True
        return False


def parse_pd(text: str) -> LinkDiagram:
    """Parse PD-code text into a validated LinkDiagram.

    Lines are ``X a b c d``; blank lines and lines starting with ``#`` are
    ignored.  Raises MalformedLine, BadEdgeMultiplicity, EmptyDiagram or
    Disconnected on invalid input.
    """
    quads: list[tuple[int, int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 5 or tokens[0] != "X":
            raise MalformedLine(f"line {lineno}: expected 'X a b c d', got {raw!r}")
        try:
            labels = tuple(int(t) for t in tokens[1:])
        except ValueError:
            raise MalformedLine(f"line {lineno}: non-integer edge label in {raw!r}")
        if any(v <= 0 for v in labels):
            raise MalformedLine(f"line {lineno}: edge labels must be positive")
        quads.append(labels)  # type: ignore[arg-type]

    if not quads:
        raise EmptyDiagram("a diagram needs at least one crossing")

    counts: dict[int, int] = {}
    for quad in quads:
        for label in quad:
            counts[label] = counts.get(label, 0) + 1
    bad = sorted(label for label, c in counts.items() if c != 2)
    if bad:
        raise BadEdgeMultiplicity(f"labels used != 2 times: {bad}")

    # Renumber labels 1..2n in first-appearance order so downstream
    # conventions (star placement at edge 1) are reproducible.
    renumber: dict[int, int] = {}
    for quad in quads:
        for label in quad:
            if label not in renumber:
                renumber[label] = len(renumber) + 1
    crossings = tuple(
        Crossing(i, tuple(renumber[v] for v in quad))  # type: ignore[arg-type]
        for i, quad in enumerate(quads)
    )

    _check_connected(crossings)
    return LinkDiagram(crossings=crossings, source_quads=tuple(quads))


def _check_connected(crossings: tuple[Crossing, ...]) -> None:
    n = len(crossings)
    edge_ends: dict[int, list[int]] = {}
    for c in crossings:
        for label in c.quadrant_edges:
            edge_ends.setdefault(label, []).append(c.id)
    seen = {0}
    stack = [0]
    adjacency: dict[int, set[int]] = {i: set() for i in range(n)}
    for ends in edge_ends.values():
        a, b = ends
        adjacency[a].add(b)
        adjacency[b].add(a)
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise Disconnected(f"universe has {n - len(seen)} unreachable crossings")


def build_universe(diagram: LinkDiagram) -> Universe:
    """Build the plane map of the diagram and trace its regions.

    The face count of a connected 4-regular sphere map must be n + 2; any
    other count means the PD rotation data is not planar and is reported
    as NonPlanarEmbedding rather than silently fixed.
    """
    n = diagram.n
    nd = 4 * n
    sigma = tuple(4 * (d // 4) + (d + 1) % 4 for d in range(nd))

    ends: dict[int, list[int]] = {}
    for c in diagram.crossings:
        for slot, label in enumerate(c.quadrant_edges):
            ends.setdefault(label, []).append(4 * c.id + slot)
    alpha = [0] * nd
    edge_darts = []
    dart_edge = [0] * nd
    for label in range(1, 2 * n + 1):
        a, b = ends[label]
        alpha[a], alpha[b] = b, a
        edge_darts.append((min(a, b), max(a, b)))
        dart_edge[a] = dart_edge[b] = label

    # Faces: orbits of dart -> sigma(alpha(dart)); each face lies to the
    # right of its darts.
    face_of = [-1] * nd
    cycles: list[tuple[int, ...]] = []
    for start in range(nd):
        if face_of[start] != -1:
            continue
        orbit = []
        d = start
        while face_of[d] == -1:
            face_of[d] = len(cycles)
            orbit.append(d)
            d = sigma[alpha[d]]
        cycles.append(tuple(orbit))

    if len(cycles) != n + 2:
        raise NonPlanarEmbedding(
            f"{len(cycles)} regions for {n} crossings (need {n + 2}); "
            "the PD code does not describe a plane diagram"
        )

    # Region ids ordered by smallest boundary dart, so region 0 contains
    # dart 0.  Region 0 plays the role of the unbounded region.
    order = sorted(range(len(cycles)), key=lambda i: min(cycles[i]))
    relabel = {old: new for new, old in enumerate(order)}
    regions = []
    for new_id, old in enumerate(order):
        boundary = cycles[old]
        regions.append(
            Region(
                id=new_id,
                boundary=boundary,
                incident_crossings=frozenset(d // 4 for d in boundary),
            )
        )
    face_of_dart = tuple(relabel[f] for f in face_of)

    return Universe(
        n=n,
        vertex_rotation=sigma,
        edge_pairing=tuple(alpha),
        edge_darts=tuple(edge_darts),
        dart_edge=tuple(dart_edge),
        face_cycles=tuple(regions),
        face_of_dart=face_of_dart,
    )


def _through(dart: int) -> int:
    """Dart where a strand entering at `dart` leaves the crossing."""
    return 4 * (dart // 4) + (dart + 2) % 4


def strand_passages(diagram: LinkDiagram, universe: Universe | None = None):
    """Split the diagram into link components.

    Returns a list of components; each component is the cyclic list of
    passages ``(crossing, entering_slot)`` in traversal order.  Traversal
    direction per component is chosen so that the first passage of the
    component enters at the smallest available dart.
    """
    if universe is None:
        universe = build_universe(diagram)
    alpha = universe.edge_pairing
    nd = 4 * diagram.n
    visited = [False] * nd
    components = []
    for start in range(nd):
        if visited[start]:
            continue
        passages = []
        d = start
        while not visited[d]:
            visited[d] = True
            passages.append((d // 4, d % 4))
            out = _through(d)
            visited[out] = True
            d = alpha[out]
        components.append(passages)
    return components


def component_count(diagram: LinkDiagram, universe: Universe | None = None) -> int:
    return len(strand_passages(diagram, universe))


def check_alternating(diagram: LinkDiagram, universe: Universe | None = None) -> bool:
    """True iff every strand alternates under/over along its traversal.

    A passage is an under-passage when it enters at slot 0 or 2; the PD
    convention puts the under-strand at those positions.
    """
    for passages in strand_passages(diagram, universe):
        flags = [slot % 2 == 0 for _, slot in passages]
        k = len(flags)
        for i in range(k):
            if flags[i] == flags[(i + 1) % k]:
                return False
    return True


def oriented_passages(diagram: LinkDiagram, universe: Universe | None = None):
    """Traverse a knot diagram with the PD orientation.

    Returns the passage list ``(crossing, entering_slot)`` of the single
    component, directed so that every under-passage enters at slot 0.
    Raises MultiComponent for links and InconsistentOrientation when no
    direction satisfies the under-strand convention.
    """
    if universe is None:
        universe = build_universe(diagram)
    components = strand_passages(diagram, universe)
    if len(components) != 1:
        raise MultiComponent(f"diagram has {len(components)} components")
    alpha = universe.edge_pairing

    # Entering crossing 0 at slot 0 is the only direction compatible with
    # the under-strand convention there; the rest of the walk is forced.
    start = universe.dart(0, 0)
    d = start
    passages = []
    for _ in range(2 * diagram.n):
        slot = d % 4
        if slot == 2:
            raise InconsistentOrientation(
                f"under-strand entered backwards at crossing {d // 4}"
            )
        passages.append((d // 4, slot))
        d = alpha[_through(d)]
    if d != start:
        raise InconsistentOrientation("strand walk did not close up")
    return passages
