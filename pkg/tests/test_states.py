import pytest

from knotdet.diagram import build_universe, parse_pd
from knotdet.states import (
    CCW,
    CW,
    StarPlacement,
    clock_lattice,
    clock_moves,
    default_stars,
    enumerate_states,
)

from conftest import CORPUS, KINK, load
from oracles import permanent


def _setup(name):
    u = build_universe(load(name))
    return u, default_stars(u)


def _incidence_matrix(u, stars):
    regions = sorted(r for r in range(len(u.regions)) if r not in stars.starred)
    column = {r: i for i, r in enumerate(regions)}
    matrix = [[0] * len(regions) for _ in range(u.n)]
    for k in range(u.n):
        for q in range(4):
            r = u.quadrant_region(k, q)
            if r in column:
                matrix[k][column[r]] = 1
    return matrix


def test_default_stars_flank_edge_one(corpus_universes):
    for name, u in corpus_universes.items():
        stars = default_stars(u)
        assert set(stars.starred) == set(u.edge_sides(1)), name


@pytest.mark.parametrize(
    "name,expected", [("trefoil", 3), ("hopf", 2), ("figure8", 5)]
)
def test_state_counts_match_permanent_oracle(name, expected):
    u, stars = _setup(name)
    states = enumerate_states(u, stars)
    assert len(states) == expected
    assert permanent(_incidence_matrix(u, stars)) == expected


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_states_are_bijections_onto_unstarred_regions(name):
    u, stars = _setup(name)
    unstarred = {r for r in range(len(u.regions)) if r not in stars.starred}
    for state in enumerate_states(u, stars):
        assert set(state.marker) == unstarred
        for k, region in enumerate(state.marker):
            quadrants = {u.quadrant_region(k, q) for q in range(4)}
            assert region in quadrants


def test_enumeration_order_is_lexicographic(corpus_universes):
    u = corpus_universes["figure8"]
    states = enumerate_states(u, default_stars(u))
    markers = [s.marker for s in states]
    assert markers == sorted(markers)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_state_count_star_independent(name):
    u, _ = _setup(name)
    counts = set()
    seen = set()
    for eid in range(1, 2 * u.n + 1):
        a, b = u.edge_sides(eid)
        pair = (min(a, b), max(a, b))
        if pair in seen:
            continue
        seen.add(pair)
        counts.add(len(enumerate_states(u, StarPlacement(starred=pair))))
    assert len(counts) == 1


def test_clock_moves_are_involutions(corpus_universes):
    u = corpus_universes["figure8"]
    stars = default_stars(u)
    inverse = {CW: CCW, CCW: CW}
    for state in enumerate_states(u, stars):
        for direction, successor in clock_moves(u, stars, state):
            back = clock_moves(u, stars, successor)
            assert (inverse[direction], state) in back


def test_clock_move_successors_are_valid_states(corpus_universes):
    u = corpus_universes["k5_2"]
    stars = default_stars(u)
    states = set(enumerate_states(u, stars))
    for state in states:
        for _, successor in clock_moves(u, stars, state):
            assert successor in states


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_clock_lattice_structure(name):
    u, stars = _setup(name)
    lattice = clock_lattice(u, stars)
    assert lattice.clocked_index is not None
    assert lattice.counterclocked_index is not None
    clocked = lattice.states[lattice.clocked_index]
    moves = clock_moves(u, stars, clocked)
    assert moves, "clocked state admits at least one move"
    assert all(direction == CW for direction, _ in moves)
    counterclocked = lattice.states[lattice.counterclocked_index]
    assert all(
        direction == CCW
        for direction, _ in clock_moves(u, stars, counterclocked)
    )
    # arcs come in inverse pairs
    arcs = {(a, b, d) for a, b, d, _ in lattice.moves}
    for a, b, d in arcs:
        assert (b, a, CW if d == CCW else CCW) in arcs


def test_single_state_lattice_is_both_extremes():
    u = build_universe(parse_pd(KINK))
    lattice = clock_lattice(u, default_stars(u))
    assert len(lattice.states) == 1
    assert lattice.clocked_index == lattice.counterclocked_index == 0
    assert lattice.moves == ()
