import pytest

from knotdet.diagram import build_universe, parse_pd
from knotdet.tait import (
    BLACK,
    WHITE,
    checkerboard,
    dual_edge_map,
    orient_universe,
    tait_graph,
)

from conftest import CORPUS, KINK, load
from oracles import proper_two_colorings


def _region_adjacency(u):
    pairs = set()
    for eid in range(1, 2 * u.n + 1):
        a, b = u.edge_sides(eid)
        pairs.add((min(a, b), max(a, b)))
    return sorted(pairs)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_coloring_proper_and_unbounded_white(name, corpus_universes):
    u = corpus_universes[name]
    coloring = checkerboard(u)
    assert coloring.color[0] == WHITE
    for eid in range(1, 2 * u.n + 1):
        a, b = u.edge_sides(eid)
        assert coloring.color[a] != coloring.color[b]


@pytest.mark.parametrize("name,blacks,whites", [("trefoil", 3, 2), ("hopf", 2, 2)])
def test_coloring_against_brute_force(name, blacks, whites, corpus_universes):
    # Oracle: enumerate all proper 2-colorings of the region adjacency
    # graph; exactly two exist and ours is the white-outside one.
    u = corpus_universes[name]
    adjacency = _region_adjacency(u)
    colorings = proper_two_colorings(len(u.regions), adjacency)
    assert len(colorings) == 2
    ours = checkerboard(u)
    encoded = [0 if c == WHITE else 1 for c in ours.color]
    assert encoded in colorings
    assert encoded[0] == 0
    # counts match the expected class sizes (note blacks+whites = n+2)
    assert len(ours.white_regions()) == whites
    assert len(ours.black_regions()) == blacks


def test_flipped_coloring_breaks_convention(corpus_universes):
    u = corpus_universes["trefoil"]
    flipped = checkerboard(u, white_outside=False)
    assert flipped.color[0] == BLACK


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_tait_graph_shape(name, corpus_universes):
    u = corpus_universes[name]
    coloring = checkerboard(u)
    g = tait_graph(u, coloring)
    # one edge per universe edge, bipartite, connected
    assert len(g.edges) == 2 * u.n
    assert len(g.E) + len(g.V) == u.n + 2
    for black, white, _ in g.edges:
        assert coloring.color[black] == BLACK
        assert coloring.color[white] == WHITE
    assert g.is_connected()


def test_trefoil_tait_graph_is_k23(corpus_universes):
    u = corpus_universes["trefoil"]
    g = tait_graph(u, checkerboard(u))
    assert sorted((len(g.E), len(g.V))) == [2, 3]
    # every black-white pair joined exactly once
    pairs = sorted((b, w) for b, w, _ in g.edges)
    assert len(set(pairs)) == 6


def test_hopf_tait_graph_is_4_cycle(corpus_universes):
    u = corpus_universes["hopf"]
    g = tait_graph(u, checkerboard(u))
    assert len(g.E) == len(g.V) == 2
    assert len(g.edges) == 4
    assert all(g.degree(v) == 2 for v in list(g.E) + list(g.V))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_orientation_balanced(name, corpus_universes):
    u = corpus_universes[name]
    directed = orient_universe(u, checkerboard(u))
    for crossing in range(u.n):
        assert directed.out_degree(crossing) == 2
        assert directed.in_degree(crossing) == 2


def test_orientation_black_on_right(corpus_universes):
    u = corpus_universes["trefoil"]
    coloring = checkerboard(u)
    directed = orient_universe(u, coloring)
    for eid in range(1, 2 * u.n + 1):
        tail = directed.tail_dart[eid - 1]
        assert coloring.color[u.face_of_dart[tail]] == BLACK


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_dual_edge_map_is_bijection(name, corpus_universes):
    u = corpus_universes[name]
    coloring = checkerboard(u)
    g = tait_graph(u, coloring)
    directed = orient_universe(u, coloring)
    mapping = dual_edge_map(g, directed)
    assert len(mapping) == 2 * u.n
    assert sorted(mapping.values()) == list(range(1, 2 * u.n + 1))
    # each Tait edge joins exactly the two regions flanking its dual edge
    for index, eid in mapping.items():
        black, white, _ = g.edges[index]
        assert set(u.edge_sides(eid)) == {black, white}


def test_kink_has_loops_in_directed_universe():
    d = parse_pd(KINK)
    u = build_universe(d)
    directed = orient_universe(u, checkerboard(u))
    assert directed.direction == ((0, 0), (0, 0))
    assert directed.is_balanced()
