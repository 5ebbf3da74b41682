"""Exact integer linear algebra helpers.

Everything here works on plain Python ints (arbitrary precision); no
floating point is used anywhere in the package's counting or geometry.
"""

from __future__ import annotations

from fractions import Fraction


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Bareiss' algorithm keeps every intermediate value an exact integer
    (each division is exact), with only polynomial bit growth.
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in rows]
    for row in m:
        if len(row) != n:
            raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def integer_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix, computed exactly over the rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
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
        if rank == len(m):
            break
    return rank


def solve_integer_system(basis: list[list[int]], target: list[int]) -> list[int] | None:
    """Solve ``sum_i x_i * basis[i] == target`` for integer x, or None.

    `basis` rows must be linearly independent.  Used to express lattice
    vectors in a unimodular lattice basis, where the solution is integral
    whenever it exists.
    """
    k = len(basis)
    dim = len(target)
    m = [[Fraction(basis[i][j]) for i in range(k)] for j in range(dim)]
    t = [Fraction(v) for v in target]
    # Gaussian elimination on the dim x k system (augmented with t).
    row = 0
    pivots = []
    for col in range(k):
        pivot = None
        for i in range(row, dim):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return None
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
        pivots.append(col)
        row += 1
    # Consistency rows beyond the pivots must vanish.
    for i in range(row, dim):
        if t[i] != 0:
            return None
    sol = [t[i] for i in range(k)]
    out = []
    for v in sol:
        if v.denominator != 1:
            return None
        out.append(int(v))
    return out


def cofactor_determinant(rows: list[list[int]]) -> int:
    """Naive cofactor-expansion determinant (exponential; tiny inputs only).

    Kept as an in-package cross-check that elimination never rounds.
    """
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        a = rows[0][j]
        if a == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = a * cofactor_determinant(minor)
        total += term if j % 2 == 0 else -term
    return total
