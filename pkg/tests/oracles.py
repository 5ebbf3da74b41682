"""Independent brute-force oracles.

Everything here recomputes a quantity by a route different from the one
used in the package, so tests can pin expected values without trusting
the code under test.
"""

from fractions import Fraction
from itertools import combinations, permutations


def permanent(matrix):
    """Permanent of a square 0/1 matrix by permutation expansion."""
    n = len(matrix)
    total = 0
    for perm in permutations(range(n)):
        product = 1
        for i in range(n):
            product *= matrix[i][perm[i]]
            if product == 0:
                break
        total += product
    return total


def proper_two_colorings(num_regions, adjacent_pairs):
    """All proper black/white assignments of the region-adjacency graph."""
    out = []
    for mask in range(2 ** num_regions):
        colors = [(mask >> i) & 1 for i in range(num_regions)]
        if all(colors[a] != colors[b] for a, b in adjacent_pairs):
            out.append(colors)
    return out


def spanning_trees_by_subsets(num_vertices, edges):
    """Spanning trees as sorted edge-index tuples, by subset filtering."""
    trees = []
    for subset in combinations(range(len(edges)), num_vertices - 1):
        parent = list(range(num_vertices))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for idx in subset:
            a, b = edges[idx]
            ra, rb = find(a), find(b)
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        if ok:
            trees.append(tuple(subset))
    return trees


def arborescences_by_subsets(order, arcs, root):
    """Spanning in-trees to `root` as sorted arc-index tuples."""
    if order == 1:
        return [()]
    found = []
    for subset in combinations(range(len(arcs)), order - 1):
        out_arc = {}
        ok = True
        for idx in subset:
            tail, head = arcs[idx]
            if tail == root or tail in out_arc or tail == head:
                ok = False
                break
            out_arc[tail] = head
        if not ok or len(out_arc) != order - 1:
            continue
        for v in range(order):
            if v == root:
                continue
            cur, steps = v, 0
            while cur != root and steps <= order:
                if cur not in out_arc:
                    ok = False
                    break
                cur = out_arc[cur]
                steps += 1
            if not ok or cur != root:
                ok = False
                break
        if ok:
            found.append(tuple(subset))
    return found


def eulerian_tours_brute(order, arcs, start_arc):
    """Count tours using every arc once, starting along `start_arc`."""
    out_arcs = {}
    for idx, (tail, _) in enumerate(arcs):
        out_arcs.setdefault(tail, []).append(idx)
    used = [False] * len(arcs)
    start_vertex = arcs[start_arc][0]

    def walk(vertex, remaining):
        if remaining == 0:
            return 1 if vertex == start_vertex else 0
        total = 0
        for idx in out_arcs.get(vertex, []):
            if not used[idx]:
                used[idx] = True
                total += walk(arcs[idx][1], remaining - 1)
                used[idx] = False
        return total

    used[start_arc] = True
    return walk(arcs[start_arc][1], len(arcs) - 1)


def kirchhoff_tree_count(num_vertices, edges):
    """Undirected spanning-tree count: Laplacian minor over Fractions."""
    lap = [[Fraction(0)] * num_vertices for _ in range(num_vertices)]
    for a, b in edges:
        lap[a][a] += 1
        lap[b][b] += 1
        lap[a][b] -= 1
        lap[b][a] -= 1
    m = [row[1:] for row in lap[1:]]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        pv = m[col][col]
        for i in range(col + 1, n):
            if m[i][col] != 0:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    assert det.denominator == 1
    return int(det)


def _poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = ea + eb
            out[key] = out.get(key, 0) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def _poly_add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c != 0}


def alexander_leibniz(universe, stars, labels):
    """Alexander polynomial as a determinant, with permutation signs.

    Rows are crossings, columns the non-starred regions; the entry is the
    sum of corner labels of that region at that crossing.  The Leibniz
    expansion with sign(pi) is independent of the black-hole sign rule, so
    agreement with the state sum (up to global sign) is a genuine check.
    """
    n = universe.n
    region_ids = sorted(
        r for r in range(len(universe.regions)) if r not in stars.starred
    )
    column = {r: i for i, r in enumerate(region_ids)}
    matrix = [[{} for _ in region_ids] for _ in range(n)]
    for k in range(n):
        for corner in range(4):
            region = universe.quadrant_region(k, corner)
            if region in stars.starred:
                continue
            coefficient, power = labels.labels[k][corner]
            matrix[k][column[region]] = _poly_add(
                matrix[k][column[region]], {power: coefficient}
            )
    total = {}
    for perm in permutations(range(n)):
        inversions = sum(
            1 for i, j in combinations(range(n), 2) if perm[i] > perm[j]
        )
        term = {0: -1 if inversions % 2 else 1}
        for i in range(n):
            term = _poly_mul(term, matrix[i][perm[i]])
            if not term:
                break
        total = _poly_add(total, term)
    return total


def polynomials_equal_up_to_unit(a: dict, b: dict) -> bool:
    """a == +- t^k b?"""
    if not a or not b:
        return a == b
    shift_a, shift_b = min(a), min(b)
    na = {e - shift_a: c for e, c in a.items()}
    nb = {e - shift_b: c for e, c in b.items()}
    return na == nb or na == {e: -c for e, c in nb.items()}
