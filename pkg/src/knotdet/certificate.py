"""Machine-checkable certificate that all determinant routes agree.

For a connected diagram the following quantities coincide: the Kauffman
state count, the arborescence count of the directed universe at every
root, the hypertree counts of the Tait graph on both color classes, the
simplex count of the arborescence triangulation at every root, and the
normalized volume of the root polytope.  For alternating diagrams they
all equal the link determinant, cross-checked against |Alexander(-1)|
(knots) and the Goeritz oracle.

The certificate is a plain dict of ints, bools and strings; serialized
with sorted keys it is byte-identical across runs.
"""

from __future__ import annotations

import json
import os

from .alexander import (
    goeritz_determinant,
    inner_product,
    label_universe,
    state_sum,
)
from .counting import (
    DirectedMultigraph,
    arborescence_count,
    eulerian_tour_count,
    hypertree_set,
)
from .diagram import LinkDiagram, build_universe, check_alternating, component_count
from .errors import ClockTheoremViolation, TooLarge
from .polytope import (
    arborescence_triangulation,
    normalized_volume,
    root_polytope,
    verify_triangulation,
)
from .states import (
    StarPlacement,
    _moves_with_edges,
    clock_lattice,
    default_stars,
    enumerate_states,
)
from .tait import checkerboard, orient_universe, tait_graph

CERT_MAX_POINTS = 16
CERT_MAX_DIM = 8


def _cert_guards() -> tuple[int, int]:
    env = os.environ.get("KDL_GUARD_MAX")
    points = int(env) if env else CERT_MAX_POINTS
    return points, CERT_MAX_DIM


def build_certificate(diagram: LinkDiagram, check_pairs: bool = True) -> dict:
    """Run every route and every structural check; never raises on
    verification failures, which land in ``violations`` instead."""
    violations: list[str] = []
    universe = build_universe(diagram)
    coloring = checkerboard(universe)
    graph = tait_graph(universe, coloring)
    directed = orient_universe(universe, coloring)
    digraph = DirectedMultigraph.from_directed_universe(directed)
    stars = default_stars(universe)
    states = enumerate_states(universe, stars)
    alternating = check_alternating(diagram, universe)
    components = component_count(diagram, universe)
    knot = components == 1
    max_points, max_dim = _cert_guards()

    routes: dict = {"state_count": len(states)}

    # Alexander route (knots only).
    alexander_value = None
    sign_constant = None
    black_hole_steps_ok = None
    labels = None
    if knot:
        labels = label_universe(diagram, universe)
        polynomial = state_sum(universe, stars, labels)
        alexander_value = abs(polynomial.evaluate(-1))
        values = [
            inner_product(s, labels, universe).value().evaluate(-1) for s in states
        ]
        if alternating:
            sign_constant = len({v for v in values}) == 1 and all(
                abs(v) == 1 for v in values
            )
            if not sign_constant:
                violations.append("alternating knot states have mixed signs at t=-1")
    routes["alexander_at_minus1"] = alexander_value

    # Arborescence route, every root.
    per_root = {str(r): arborescence_count(digraph, r) for r in range(digraph.order)}
    routes["arborescences_per_root"] = per_root
    root_independent = len(set(per_root.values())) == 1
    if not root_independent:
        violations.append("arborescence count varies with the root")

    # Hypertree route, both classes.
    try:
        h_black = len(hypertree_set(graph, "E"))
        h_white = len(hypertree_set(graph, "V"))
        routes["hypertrees"] = {"E": h_black, "V": h_white}
    except TooLarge:
        h_black = h_white = None
        routes["hypertrees"] = None

    # Polytope route: triangulation per root, full verification at root 0.
    polytope = root_polytope(graph)
    tri_sizes: dict | None = {}
    tri_report = None
    try:
        for r in range(digraph.order):
            tri = arborescence_triangulation(graph, directed, r)
            tri_sizes[str(r)] = len(tri.simplices)
            if r == 0:
                tri_report = verify_triangulation(
                    tri, polytope, max_points, max_dim, check_pairs=check_pairs
                )
                violations.extend(tri_report["violations"])
        # verify_triangulation already ran the volume oracle.
        volume = tri_report["normalized_volume"] if tri_report else normalized_volume(
            polytope, max_points, max_dim
        )
    except TooLarge as e:
        tri_sizes = None
        tri_report = None
        volume = None
        violations_note = f"polytope routes skipped by guard: {e}"
        routes["guard_note"] = violations_note
    routes["triangulation_simplices_per_root"] = tri_sizes
    routes["normalized_volume"] = volume

    # Goeritz oracle.
    goeritz = goeritz_determinant(diagram, coloring, universe)
    routes["goeritz_determinant"] = goeritz

    # Structural checks.
    region_ok = len(universe.regions) == diagram.n + 2
    if not region_ok:
        violations.append("region count is not n + 2")
    balance_ok = directed.is_balanced()
    if not balance_ok:
        violations.append("directed universe is not balanced with degree 2")

    # BEST identity: with all out-degrees 2 the factorial factors are 1,
    # so the tour count must equal the arborescence count exactly.
    best_ok = None
    if digraph.is_eulerian():
        tours = eulerian_tour_count(digraph, 0)
        best_ok = tours == per_root[str(digraph.arcs[0][0])] and all(
            digraph.out_degree(v) == 2 for v in range(digraph.order)
        )
        if not best_ok:
            violations.append("tour count disagrees with the arborescence count")

    # Star independence: the state count is the same for every admissible
    # star pair (adjacent regions).
    star_counts = set()
    seen_pairs = set()
    for eid in range(1, 2 * universe.n + 1):
        a, b = universe.edge_sides(eid)
        pair = (min(a, b), max(a, b))
        if pair in seen_pairs:
            continue
        seen_pairs.add(pair)
        star_counts.add(len(enumerate_states(universe, StarPlacement(starred=pair))))
    star_independent = len(star_counts) == 1
    if not star_independent:
        violations.append(f"state count depends on star placement: {sorted(star_counts)}")

    # Clock lattice: connected, unique clocked and counterclocked states.
    lattice_connected = clocked_unique = counterclocked_unique = True
    try:
        lattice = clock_lattice(universe, stars)
    except ClockTheoremViolation as e:
        lattice = None
        lattice_connected = clocked_unique = counterclocked_unique = False
        violations.append(f"clock structure violated: {e}")

    if lattice is not None and labels is not None:
        black_hole_steps_ok = True
        for state in lattice.states:
            b_here = inner_product(state, labels, universe).black_holes
            for _, successor, _ in _moves_with_edges(universe, state):
                b_there = inner_product(successor, labels, universe).black_holes
                if abs(b_there - b_here) != 1:
                    black_hole_steps_ok = False
        if not black_hole_steps_ok:
            violations.append("a clock move changed the black-hole count by != 1")

    # Equality verdict: the universal routes always; determinant oracles
    # only when the diagram is alternating.
    equal_set = set()
    equal_set.add(routes["state_count"])
    equal_set.update(per_root.values())
    if routes["hypertrees"] is not None:
        equal_set.update((h_black, h_white))
    if tri_sizes is not None:
        equal_set.update(tri_sizes.values())
    if volume is not None:
        equal_set.add(volume)
    if alternating:
        equal_set.add(goeritz)
        if alexander_value is not None:
            equal_set.add(alexander_value)
    all_equal = len(equal_set) == 1
    if not all_equal:
        violations.append(f"route values disagree: {sorted(equal_set)}")

    checks = {
        "all_routes_equal": all_equal,
        "region_count_is_n_plus_2": region_ok,
        "balanced_in2_out2": balance_ok,
        "best_identity": best_ok,
        "root_independent": root_independent,
        "star_independent": star_independent,
        "clock_lattice_connected": lattice_connected,
        "clocked_state_unique": clocked_unique,
        "counterclocked_state_unique": counterclocked_unique,
        "black_hole_step_is_one": black_hole_steps_ok,
        "alternating_constant_sign": sign_constant,
        "triangulation": (
            None
            if tri_report is None
            else {
                "unimodular": tri_report["unimodular"],
                "volume_match": tri_report["volume_match"],
                "pairwise_faces_ok": tri_report["pairwise_faces_ok"],
                "pairs_checked": tri_report["pairs_checked"],
            }
        ),
    }

    verdict = "pass" if not violations else "fail"
    return {
        "diagram": {
            "hash": diagram.digest(),
            "n": diagram.n,
            "components": components,
            "regions": len(universe.regions),
            "alternating": alternating,
            "determinant_semantics": alternating,
        },
        "routes": routes,
        "checks": checks,
        "violations": violations,
        "verdict": verdict,
    }


def certificate_json(cert: dict) -> str:
    """Canonical serialization: sorted keys, fixed separators, newline end."""
    return json.dumps(cert, sort_keys=True, separators=(",", ":")) + "\n"
