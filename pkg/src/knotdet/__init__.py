"""knotdet: link determinants by independent combinatorial routes.

Given an alternating link diagram in PD code, this package computes the
determinant as

* the number of Kauffman states,
* |Alexander polynomial at -1| (knots),
* the number of spanning arborescences of the directed checkerboard dual,
* the number of hypertrees of the Tait graph (both color classes),
* the size of the arborescence triangulation of the root polytope, which
  equals its normalized volume,

cross-checked against a classical Goeritz-matrix oracle, and emits a
machine-checkable certificate that all routes agree.
"""

from .alexander import (
    CrossingLabels,
    IntPolynomial,
    StateProduct,
    determinant_via_states,
    goeritz_determinant,
    inner_product,
    label_universe,
    state_sum,
)
from .counting import (
    Arborescence,
    DirectedMultigraph,
    Hypertree,
    arborescence_count,
    arborescence_enumerate,
    eulerian_tour_count,
    hypertree_set,
    root_independence_check,
    spanning_tree_enumerate,
)
from .diagram import (
    Crossing,
    LinkDiagram,
    Region,
    Universe,
    build_universe,
    check_alternating,
    component_count,
    parse_pd,
)
from .polytope import (
    LatticePoint,
    RootPolytope,
    Simplex,
    Triangulation,
    arborescence_triangulation,
    normalized_volume,
    root_polytope,
    tree_simplex,
    verify_triangulation,
)
from .states import (
    ClockLattice,
    KauffmanState,
    StarPlacement,
    clock_lattice,
    clock_moves,
    default_stars,
    enumerate_states,
)
from .tait import (
    DirectedUniverse,
    FaceColoring,
    TaitGraph,
    checkerboard,
    dual_edge_map,
    orient_universe,
    tait_graph,
)

__version__ = "0.1.0"

__all__ = [
    "Arborescence",
    "ClockLattice",
    "Crossing",
    "CrossingLabels",
    "DirectedMultigraph",
    "DirectedUniverse",
    "FaceColoring",
    "Hypertree",
    "IntPolynomial",
    "KauffmanState",
    "LatticePoint",
    "LinkDiagram",
    "Region",
    "RootPolytope",
    "Simplex",
    "StarPlacement",
    "StateProduct",
    "TaitGraph",
    "Triangulation",
    "Universe",
    "arborescence_count",
    "arborescence_enumerate",
    "arborescence_triangulation",
    "build_universe",
    "check_alternating",
    "checkerboard",
    "clock_lattice",
    "clock_moves",
    "component_count",
    "default_stars",
    "determinant_via_states",
    "dual_edge_map",
    "enumerate_states",
    "eulerian_tour_count",
    "goeritz_determinant",
    "hypertree_set",
    "inner_product",
    "label_universe",
    "normalized_volume",
    "orient_universe",
    "parse_pd",
    "root_independence_check",
    "root_polytope",
    "spanning_tree_enumerate",
    "state_sum",
    "tait_graph",
    "tree_simplex",
    "verify_triangulation",
]
