"""Kauffman states of a universe: markers, stars, clock moves.

A state assigns each crossing a marker in one of its four corners so that
every region holds at most one marker and the two starred regions hold
none.  A universe with n crossings has n + 2 regions, so a state is a
bijection from crossings onto the non-starred regions.

Two markers sitting at the ends of a shared edge, on opposite sides of it,
may be transposed across the edge; both markers turn a quarter-rotation in
the same sense around their crossings.  A transposition in the sense of
the counterclockwise rotation system is a "ccw" move, its inverse a "cw"
move.  The clocked state is the unique state without ccw moves, the
counterclocked state the unique one without cw moves, and the move graph
is connected; violations of these guarantees raise ClockTheoremViolation
because they indicate a bug, not bad input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Universe
from .errors import ClockTheoremViolation

CW = "cw"
CCW = "ccw"


@dataclass(frozen=True)
class StarPlacement:
    """The two adjacent regions excluded from receiving markers."""

    starred: tuple[int, int]

    def __contains__(self, region: int) -> bool:
        return region in self.starred


@dataclass(frozen=True)
class KauffmanState:
    """marker[k] is the region holding crossing k's marker."""

    marker: tuple[int, ...]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.marker))


@dataclass(frozen=True)
class ClockLattice:
    """All states with their move arcs.

    `moves` holds ``(from_index, to_index, direction, edge_id)`` into
    `states`; arcs come in inverse cw/ccw pairs.
    """

    states: tuple[KauffmanState, ...]
    moves: tuple[tuple[int, int, str, int], ...]
    clocked_index: int | None
    counterclocked_index: int | None


def default_stars(universe: Universe) -> StarPlacement:
    """Stars in the two regions flanking internal edge 1.

    Any adjacent pair works and all counts are star-independent; fixing
    the pair at edge 1 makes every downstream output reproducible.
    """
    a, b = universe.edge_sides(1)
    return StarPlacement(starred=(min(a, b), max(a, b)))


def marker_quadrant(universe: Universe, crossing: int, region: int) -> int | None:
    """Canonical corner of `region` at `crossing` (smallest quadrant index).

    Only diagrams with nugatory crossings can show the same region in two
    (opposite) corners of one crossing; the smallest index is used then.
    """
    for quadrant in range(4):
        if universe.quadrant_region(crossing, quadrant) == region:
            return quadrant
    return None


def enumerate_states(universe: Universe, stars: StarPlacement) -> list[KauffmanState]:
    """All Kauffman states, in lexicographic marker order.

    Backtracking over crossings in id order with region-availability
    tracking.  An empty list (no states) is possible only for degenerate
    star data and is returned, not raised.
    """
    n = universe.n
    incident: list[list[int]] = []
    for k in range(n):
        regions = {universe.quadrant_region(k, q) for q in range(4)}
        incident.append(sorted(r for r in regions if r not in stars))
    used: set[int] = set()
    marker: list[int] = []
    out: list[KauffmanState] = []

    def place(k: int) -> None:
        if k == n:
            out.append(KauffmanState(marker=tuple(marker)))
            return
        for region in incident[k]:
            if region in used:
                continue
            used.add(region)
            marker.append(region)
            place(k + 1)
            marker.pop()
            used.remove(region)

    place(0)
    return out


def _moves_with_edges(universe, state):
    sigma = universe.vertex_rotation
    result = []
    for eid in range(1, 2 * universe.n + 1):
        d1, d2 = universe.edge_darts[eid - 1]
        k, l = d1 // 4, d2 // 4
        if k == l:
            continue
        qk = marker_quadrant(universe, k, state.marker[k])
        ql = marker_quadrant(universe, l, state.marker[l])
        sk, sl = d1 % 4, d2 % 4
        # ccw move: both markers in the corners clockwise of the edge's
        # darts, rotating forward; cw move: the mirror configuration.
        if qk == (sk - 1) % 4 and ql == (sl - 1) % 4:
            direction = CCW
            new_k = universe.face_of_dart[sigma[d1]]
            new_l = universe.face_of_dart[sigma[d2]]
        elif qk == sk and ql == sl:
            direction = CW
            new_k = universe.face_of_dart[d1]
            new_l = universe.face_of_dart[d2]
        else:
            continue
        marker = list(state.marker)
        marker[k], marker[l] = new_k, new_l
        result.append((direction, KauffmanState(marker=tuple(marker)), eid))
    return result


def clock_moves(
    universe: Universe,
    stars: StarPlacement,
    state: KauffmanState,
) -> list[tuple[str, KauffmanState]]:
    """All states one clock move away, as (direction, successor) pairs.

    For each edge, the move exists when both end-crossings' markers sit in
    the corners flanking that edge, necessarily on opposite sides; the
    markers then swap regions.  The scan runs in edge-id order, so the
    output order is canonical.
    """
    return [(d, s) for d, s, _ in _moves_with_edges(universe, state)]


def clock_lattice(universe: Universe, stars: StarPlacement) -> ClockLattice:
    """The full state graph under clock moves.

    Checks the clock-theorem structure: connectivity plus unique clocked
    (no ccw move) and counterclocked (no cw move) states.
    """
    states = enumerate_states(universe, stars)
    index = {s: i for i, s in enumerate(states)}
    moves: list[tuple[int, int, str, int]] = []
    no_ccw: list[int] = []
    no_cw: list[int] = []
    for i, state in enumerate(states):
        directions = set()
        for direction, successor, eid in _moves_with_edges(universe, state):
            moves.append((i, index[successor], direction, eid))
            directions.add(direction)
        if CCW not in directions:
            no_ccw.append(i)
        if CW not in directions:
            no_cw.append(i)

    if not states:
        return ClockLattice(states=(), moves=(), clocked_index=None,
                            counterclocked_index=None)

    adjacency: dict[int, set[int]] = {i: set() for i in range(len(states))}
    for a, b, _, _ in moves:
        adjacency[a].add(b)
        adjacency[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adjacency[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(states):
        raise ClockTheoremViolation("state lattice is disconnected")
    if len(no_ccw) != 1 or len(no_cw) != 1:
        raise ClockTheoremViolation(
            f"expected unique extremal states, found {len(no_ccw)} clocked "
            f"and {len(no_cw)} counterclocked"
        )
    return ClockLattice(
        states=tuple(states),
        moves=tuple(moves),
        clocked_index=no_ccw[0],
        counterclocked_index=no_cw[0],
    )
