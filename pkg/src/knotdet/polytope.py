"""Root polytope of a bipartite graph and its arborescence triangulation.

The root polytope of a bipartite graph with classes E and V is the convex
hull of the points ``e + v`` (standard basis vectors) over edges ev.  All
geometry is done in a unimodular coordinate chart of the affine hull:
each block of coordinates sums to 1 on the polytope, so dropping the
first coordinate of each block maps the lattice of the hull isomorphically
onto ``Z^dim`` with ``dim = |E| + |V| - 2``.  In these coordinates the
normalized volume of a lattice simplex is an integer determinant, and a
unimodular simplex has volume exactly 1.

A spanning tree of the graph spans a maximal simplex.  Each spanning
arborescence of the directed universe yields one: remove its arcs, take
the Tait-graph duals of the remaining universe edges, and the result is a
spanning tree whose simplex belongs to the triangulation.

``normalized_volume`` is an independent brute-force oracle: it builds its
own pulling decomposition of the hull (facet enumeration plus recursion)
with exact rational arithmetic and never touches the arborescence
machinery, so certifying a triangulation against it is a genuine
dual-route check.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ._linalg import bareiss_determinant
from .counting import arborescence_enumerate, DirectedMultigraph
from .errors import DegenerateSimplex, TooLarge
from .tait import DirectedUniverse, TaitGraph, dual_edge_map

DEFAULT_MAX_POINTS = 10
DEFAULT_MAX_DIM = 6


def _points_guard(value: int, limit: int | None) -> None:
    if limit is None:
        env = os.environ.get("KDL_GUARD_MAX")
        limit = int(env) if env else DEFAULT_MAX_POINTS
    if value > limit:
        raise TooLarge(f"{value} polytope vertices exceed guard {limit}")


def _dim_guard(value: int, limit: int | None) -> None:
    if limit is None:
        limit = DEFAULT_MAX_DIM
    if value > limit:
        raise TooLarge(f"dimension {value} exceeds guard {limit}")


@dataclass(frozen=True)
class LatticePoint:
    """0/1 vector indexed by E then V; exactly one 1 in each block."""

    coordinates: tuple[int, ...]


@dataclass(frozen=True)
class RootPolytope:
    graph: TaitGraph
    vertices: tuple[LatticePoint, ...]  # one per graph edge, in edge order
    dim: int
    coordinate_labels: tuple[object, ...]
    block_size: int  # |E|; first block of coordinates

    def reduced(self, point: LatticePoint) -> tuple[int, ...]:
        """Drop the first coordinate of each block (unimodular chart)."""
        c = point.coordinates
        e = self.block_size
        return tuple(c[1:e] + c[e + 1:])


@dataclass(frozen=True)
class Simplex:
    """Maximal simplex spanned by the points of a spanning tree's edges."""

    vertices: tuple[LatticePoint, ...]
    tree_edges: tuple[int, ...]  # edge indices into the graph's edge list


@dataclass(frozen=True)
class Triangulation:
    simplices: tuple[Simplex, ...]


def root_polytope(g: TaitGraph) -> RootPolytope:
    """Convex hull of one 0/1 point per edge of a connected bipartite graph."""
    if not g.is_connected():
        raise ValueError("root polytope needs a connected graph")
    labels = tuple(list(g.E) + list(g.V))
    index = {v: i for i, v in enumerate(labels)}
    e_size = len(g.E)
    points = []
    for black, white, _ in g.edges:
        coords = [0] * len(labels)
        coords[index[black]] = 1
        coords[index[white]] = 1
        points.append(LatticePoint(coordinates=tuple(coords)))
    dim = len(g.E) + len(g.V) - 2
    return RootPolytope(
        graph=g,
        vertices=tuple(points),
        dim=dim,
        coordinate_labels=labels,
        block_size=e_size,
    )


def affine_rank(points: list[tuple[int, ...]]) -> int:
    """Dimension of the affine span of integer points."""
    if not points:
        return -1
    base = points[0]
    rows = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    from ._linalg import integer_rank

    return integer_rank(rows) if rows else 0


def _simplex_volume(p: RootPolytope, vertex_points: list[LatticePoint]) -> int:
    base = p.reduced(vertex_points[0])
    rows = [
        [a - b for a, b in zip(p.reduced(q), base)]
        for q in vertex_points[1:]
    ]
    if len(rows) != p.dim:
        return 0
    return abs(bareiss_determinant(rows))


def tree_simplex(g: TaitGraph, tree_edges) -> Simplex:
    """Simplex on the lattice points of a spanning tree's edges.

    Raises DegenerateSimplex when the edge set is not a spanning tree
    (wrong size, or a cycle makes the points affinely dependent).
    """
    p = root_polytope(g)
    return _tree_simplex_in(p, tree_edges)


def _tree_simplex_in(p: RootPolytope, tree_edges) -> Simplex:
    tree = tuple(sorted(tree_edges))
    if len(set(tree)) != len(tree):
        raise DegenerateSimplex("repeated edge index")
    if len(tree) != p.dim + 1:
        raise DegenerateSimplex(
            f"{len(tree)} edges cannot span a {p.dim}-dimensional simplex"
        )
    points = [p.vertices[i] for i in tree]
    if _simplex_volume(p, points) == 0:
        raise DegenerateSimplex("edge set contains a cycle")
    return Simplex(vertices=tuple(points), tree_edges=tree)


def arborescence_triangulation(
    g: TaitGraph,
    du: DirectedUniverse,
    root: int,
    max_vertices: int | None = None,
    max_arcs: int | None = None,
) -> Triangulation:
    """One simplex per spanning arborescence of the directed universe.

    The arcs outside an arborescence dualize to a spanning tree of the
    Tait graph; its simplex joins the triangulation.  The simplex count is
    therefore the arborescence count, for every choice of root.
    """
    p = root_polytope(g)
    edge_of_universe = {eid: idx for idx, eid in dual_edge_map(g, du).items()}
    digraph = DirectedMultigraph.from_directed_universe(du)
    simplices = []
    for arb in arborescence_enumerate(digraph, root, max_vertices, max_arcs):
        inside = set(arb.arc_indices)
        tree = sorted(
            edge_of_universe[arc_index + 1]
            for arc_index in range(len(digraph.arcs))
            if arc_index not in inside
        )
        simplices.append(_tree_simplex_in(p, tree))
    return Triangulation(simplices=tuple(simplices))


# ---------------------------------------------------------------------------
# Independent volume oracle: pulling decomposition with exact rationals.
# ---------------------------------------------------------------------------


def _frac_rank(rows: list[list[Fraction]]) -> int:
    m = [row[:] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _nullspace_vector(rows: list[list[Fraction]], width: int) -> list[Fraction] | None:
    """One nonzero vector orthogonal to all rows (rank must be width - 1)."""
    m = [row[:] for row in rows]
    pivots = []
    rank = 0
    for col in range(width):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        m[rank] = [a / pv for a in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    if rank != width - 1:
        return None
    free = next(c for c in range(width) if c not in pivots)
    vec = [Fraction(0)] * width
    vec[free] = Fraction(1)
    for r, col in enumerate(pivots):
        vec[col] = -m[r][free]
    return vec


def _solve_affine(basis: list[list[Fraction]], target: list[Fraction]) -> list[Fraction]:
    """Coefficients expressing `target` in the row space of `basis`."""
    k = len(basis)
    dim = len(target)
    m = [[basis[i][j] for i in range(k)] for j in range(dim)]
    t = list(target)
    row = 0
    for col in range(k):
        pivot = None
        for i in range(row, dim):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            raise ValueError("basis rows are dependent")
        m[row], m[pivot] = m[pivot], m[row]
        t[row], t[pivot] = t[pivot], t[row]
        pv = m[row][col]
        m[row] = [a / pv for a in m[row]]
        t[row] = t[row] / pv
        for i in range(dim):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
                t[i] = t[i] - f * t[row]
        row += 1
    for i in range(row, dim):
        if t[i] != 0:
            raise ValueError("target outside span")
    return t[:k]


def _to_intrinsic(tagged: list[tuple[int, tuple[Fraction, ...]]]):
    """Re-coordinatize tagged points inside their own affine hull."""
    base = tagged[0][1]
    basis: list[list[Fraction]] = []
    for _, q in tagged[1:]:
        d = [a - b for a, b in zip(q, base)]
        if _frac_rank(basis + [d]) > len(basis):
            basis.append(d)
    out = []
    for idx, q in tagged:
        d = [a - b for a, b in zip(q, base)]
        coords = _solve_affine(basis, d) if basis else []
        out.append((idx, tuple(coords)))
    return out


def _hull_facets(tagged: list[tuple[int, tuple[Fraction, ...]]], k: int):
    """Facet point sets (as positions into `tagged`) of a full-dim hull."""
    m = len(tagged)
    facets: dict[frozenset, list[int]] = {}
    for subset in combinations(range(m), k):
        pts = [tagged[i][1] for i in subset]
        base = pts[0]
        rows = [[a - b for a, b in zip(q, base)] for q in pts[1:]]
        if _frac_rank(rows) != k - 1:
            continue
        normal = _nullspace_vector(rows, k)
        if normal is None:
            continue
        c = sum(a * b for a, b in zip(normal, base))
        positive = negative = False
        on = []
        for pos in range(m):
            value = sum(a * b for a, b in zip(normal, tagged[pos][1])) - c
            if value > 0:
                positive = True
            elif value < 0:
                negative = True
            else:
                on.append(pos)
        if positive and negative:
            continue
        if not positive and not negative:
            continue
        facets.setdefault(frozenset(on), sorted(on))
    return [facets[key] for key in sorted(facets, key=sorted)]


def _pull_triangulate(tagged, k):
    """Triangulate conv(tagged) (affine dimension k) recursively.

    Cone from the lexicographically smallest point over triangulations of
    the facets that avoid it; returns lists of original point indices.
    """
    if k == 0:
        return [[tagged[0][0]]]
    apex_pos = min(range(len(tagged)), key=lambda i: (tagged[i][1], tagged[i][0]))
    simplices = []
    for facet in _hull_facets(tagged, k):
        if apex_pos in facet:
            continue
        sub = [tagged[i] for i in facet]
        for s in _pull_triangulate(_to_intrinsic(sub), k - 1):
            simplices.append([tagged[apex_pos][0]] + s)
    return simplices


def _distinct_points(p: RootPolytope):
    """(point, representative edge index) for each distinct vertex point."""
    seen: dict[tuple[int, ...], int] = {}
    for idx, point in enumerate(p.vertices):
        seen.setdefault(point.coordinates, idx)
    return [(edge_idx, coords) for coords, edge_idx in seen.items()]


def _oracle_simplices(p: RootPolytope) -> list[list[int]]:
    tagged = [
        (edge_idx, tuple(Fraction(x) for x in p.reduced(LatticePoint(coordinates=coords))))
        for edge_idx, coords in _distinct_points(p)
    ]
    rank = _frac_rank(
        [
            [a - b for a, b in zip(q, tagged[0][1])]
            for _, q in tagged[1:]
        ]
    )
    if rank != p.dim:
        return []
    return _pull_triangulate(tagged, p.dim)


def normalized_volume(
    p: RootPolytope,
    max_points: int | None = None,
    max_dim: int | None = None,
) -> int:
    """Exact normalized volume of the root polytope (brute-force oracle).

    Facet-recursion pulling decomposition over exact rationals; the sum of
    the integer determinants of the resulting lattice simplices is the
    normalized volume.  Returns 0 for hulls that are not full-dimensional.
    """
    distinct = {point.coordinates for point in p.vertices}
    _points_guard(len(distinct), max_points)
    _dim_guard(p.dim, max_dim)
    total = 0
    for simplex_indices in _oracle_simplices(p):
        points = [p.vertices[i] for i in simplex_indices]
        total += _simplex_volume(p, points)
    return total


def pulling_triangulation(
    p: RootPolytope,
    max_points: int | None = None,
    max_dim: int | None = None,
) -> Triangulation:
    """A concrete triangulation for graphs with no diagram attached.

    Every maximal simplex in a root polytope is spanned by a tree's edge
    points, so the pulling decomposition yields tree simplices directly.
    """
    distinct = {point.coordinates for point in p.vertices}
    _points_guard(len(distinct), max_points)
    _dim_guard(p.dim, max_dim)
    simplices = []
    for simplex_indices in sorted(_oracle_simplices(p)):
        simplices.append(_tree_simplex_in(p, sorted(simplex_indices)))
    return Triangulation(simplices=tuple(simplices))


# ---------------------------------------------------------------------------
# Triangulation verification.
# ---------------------------------------------------------------------------


def _barycentric_matrix(p: RootPolytope, simplex: Simplex):
    """Inverse of the homogeneous vertex matrix.

    Unimodular lattice simplices have determinant +-1, so the inverse is
    integer; non-unimodular input falls back to Fraction entries.
    """
    d = p.dim
    cols = [list(p.reduced(v)) + [1] for v in simplex.vertices]
    size = d + 1
    m = [[Fraction(cols[j][i]) for j in range(size)] for i in range(size)]
    inv = [[Fraction(1 if i == j else 0) for j in range(size)] for i in range(size)]
    for col in range(size):
        pivot = None
        for i in range(col, size):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            raise DegenerateSimplex("simplex vertices are affinely dependent")
        m[col], m[pivot] = m[pivot], m[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        pv = m[col][col]
        m[col] = [a / pv for a in m[col]]
        inv[col] = [a / pv for a in inv[col]]
        for i in range(size):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
                inv[i] = [a - f * b for a, b in zip(inv[i], inv[col])]
    if all(x.denominator == 1 for row in inv for x in row):
        return [[int(x) for x in row] for row in inv]
    return inv


def _barycentric(p, matrix, point_coords):
    hom = list(point_coords) + [1]
    return [sum(row[i] * hom[i] for i in range(len(hom))) for row in matrix]


def _common_face_certificate(p, s1, s2, bary1, bary2) -> bool:
    """Try to certify that s1 and s2 meet exactly in their common face.

    Let g1 (resp. g2) be the sum of s1's (s2's) barycentric coordinates
    over its non-shared vertices; both vanish on the shared face, g1 is 1
    at every non-shared vertex of s1, g2 likewise on s2.  A functional
    a*g2 - b*g1 with a, b > 0 separates the simplices along the common
    face when it is negative at s1's non-shared vertices and positive at
    s2's; such a, b exist iff

        alpha = max g2 over non-shared vertices of s1,
        beta  = max g1 over non-shared vertices of s2

    satisfy alpha <= 0, beta <= 0, or alpha * beta < 1.  The test is
    sound; when it is inconclusive the exact fallback decides.
    """
    shared = set(v.coordinates for v in s1.vertices) & set(
        v.coordinates for v in s2.vertices
    )
    non_shared_1 = [
        i for i, v in enumerate(s1.vertices) if v.coordinates not in shared
    ]
    non_shared_2 = [
        j for j, v in enumerate(s2.vertices) if v.coordinates not in shared
    ]
    if not non_shared_1 or not non_shared_2:
        # Identical vertex sets: the intersection is the whole simplex, an
        # improper common face (the duplicate is caught by the volume sum).
        return not non_shared_1 and not non_shared_2

    alpha = None
    for i in non_shared_1:
        values = _barycentric(p, bary2, p.reduced(s1.vertices[i]))
        g2 = sum(values[j] for j in non_shared_2)
        alpha = g2 if alpha is None else max(alpha, g2)
    beta = None
    for j in non_shared_2:
        values = _barycentric(p, bary1, p.reduced(s2.vertices[j]))
        g1 = sum(values[i] for i in non_shared_1)
        beta = g1 if beta is None else max(beta, g1)
    return alpha <= 0 or beta <= 0 or alpha * beta < 1


def _scale_to_int(row) -> list[int]:
    from math import lcm

    denominators = [x.denominator for x in row if isinstance(x, Fraction)]
    if not denominators:
        return [int(x) for x in row]
    scale = lcm(*denominators) if len(denominators) > 1 else denominators[0]
    return [int(x * scale) for x in row]


def _intersection_inside_face(p, s1, s2, bary1, bary2) -> bool:
    """Exact fallback: conv(s1) ∩ conv(s2) ⊆ conv(shared vertices)?

    The intersection, in s1's barycentric coordinates, is the polytope
    lam >= 0, sum(lam) = 1, C lam >= 0 with C mapping to s2-barycentrics.
    Its vertices are basic solutions of d tight constraints plus the
    normalization; a feasible one with weight on a non-shared vertex of s1
    witnesses a point outside the common face.  All arithmetic is integer
    Cramer on Bareiss determinants.
    """
    d = p.dim
    size = d + 1
    shared2 = {w.coordinates for w in s2.vertices}
    shared_flags = [v.coordinates in shared2 for v in s1.vertices]
    columns = [_barycentric(p, bary2, p.reduced(v)) for v in s1.vertices]
    c_rows = [
        _scale_to_int([columns[j][i] for j in range(size)]) for i in range(size)
    ]
    lam_rows = [[1 if j == i else 0 for j in range(size)] for i in range(size)]
    constraints = lam_rows + c_rows
    ones = [1] * size

    for subset in combinations(range(len(constraints)), d):
        m = [constraints[i] for i in subset] + [ones]
        det = bareiss_determinant(m)
        if det == 0:
            continue
        sign = 1 if det > 0 else -1
        numerators = []
        feasible = True
        for col in range(size):
            m_col = [row[:col] + [0 if r < d else 1] + row[col + 1:]
                     for r, row in enumerate(m)]
            numerators.append(bareiss_determinant(m_col))
        if any(n * sign < 0 for n in numerators):
            continue
        for row in c_rows:
            if sum(row[i] * numerators[i] for i in range(size)) * sign < 0:
                feasible = False
                break
        if not feasible:
            continue
        if any(numerators[i] != 0 and not shared_flags[i] for i in range(size)):
            return False
    return True


def verify_triangulation(
    tri: Triangulation,
    p: RootPolytope,
    max_points: int | None = None,
    max_dim: int | None = None,
    check_pairs: bool = True,
) -> dict:
    """Certify a triangulation: unimodular simplices, exact volume cover,
    pairwise intersections equal to common faces.

    Returns a report dict; violations are listed, never raised.
    """
    violations: list[str] = []
    volumes = []
    for i, s in enumerate(tri.simplices):
        v = _simplex_volume(p, list(s.vertices))
        volumes.append(v)
        if v != 1:
            violations.append(f"simplex {i} has normalized volume {v}")
    unimodular = all(v == 1 for v in volumes)

    oracle = normalized_volume(p, max_points, max_dim)
    volume_match = sum(volumes) == oracle
    if not volume_match:
        violations.append(
            f"simplex volumes sum to {sum(volumes)}, polytope volume is {oracle}"
        )

    pairwise_ok = True
    if check_pairs:
        matrices = [_barycentric_matrix(p, s) for s in tri.simplices]
        for i, j in combinations(range(len(tri.simplices)), 2):
            s1, s2 = tri.simplices[i], tri.simplices[j]
            if _common_face_certificate(p, s1, s2, matrices[i], matrices[j]):
                continue
            if not _intersection_inside_face(p, s1, s2, matrices[i], matrices[j]):
                pairwise_ok = False
                violations.append(
                    f"simplices {i} and {j} do not meet in a common face"
                )
    report = {
        "unimodular": unimodular,
        "volume_match": volume_match,
        "simplex_count": len(tri.simplices),
        "normalized_volume": oracle,
        "pairwise_faces_ok": pairwise_ok,
        "pairs_checked": bool(check_pairs),
        "violations": violations,
        "passed": unimodular and volume_match and pairwise_ok,
    }
    return report
