"""Exact linear algebra over the integers.

Matrices are lists (or tuples) of equal-length rows of Python ints, so
entries may grow without bound; nothing here ever rounds or overflows.
This module knows nothing about matroids or exterior algebra: it provides
the Hermite/Smith machinery that canonicalizes subgroups of Z^n.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence

Row = Sequence[int]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and g == a*x + b*y."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


class _Echelon:
    """Integer row echelon form maintained incrementally.

    Rows are kept with strictly increasing pivot columns; inserting a vector
    either reduces it to zero or adds one row.  ``canonical()`` finishes the
    reduction to the unique Hermite normal form.
    """

    __slots__ = ("width", "rows", "pivots")

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    def insert(self, vec: Iterable[int]) -> None:
        vec = list(vec)
        width = self.width
        rows, pivots = self.rows, self.pivots
        j = 0
        while j < width:
            if not vec[j]:
                j += 1
                continue
            where = bisect_left(pivots, j)
            if where < len(pivots) and pivots[where] == j:
                row = rows[where]
                a, b = row[j], vec[j]
                if b % a == 0:
                    q = b // a
                    for jj in range(j, width):
                        vec[jj] -= q * row[jj]
                else:
                    g, x, y = xgcd(a, b)
                    a_g, b_g = a // g, b // g
                    for jj in range(j, width):
                        aa, bb = row[jj], vec[jj]
                        row[jj] = x * aa + y * bb
                        vec[jj] = a_g * bb - b_g * aa
                # vec[j] is now 0; continue reducing the remainder
            else:
                rows.insert(where, vec)
                pivots.insert(where, j)
                return
        # fully reduced to zero

    def reduce(self, vec: Iterable[int]) -> list[int]:
        """Reduce vec against the echelon rows as far as integer multiples
        allow, without modifying the echelon.  Membership in the row span is
        equivalent to the result being zero."""
        vec = list(vec)
        for row, j in zip(self.rows, self.pivots):
            if vec[j] and vec[j] % row[j] == 0:
                q = vec[j] // row[j]
                for jj in range(j, self.width):
                    vec[jj] -= q * row[jj]
        return vec

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        """Hermite normal form rows: pivots positive, entries above each
        pivot reduced into [0, pivot).

        Each row is reduced against the rows below it in ascending pivot
        order; a lower row is zero at all earlier pivot columns, so later
        reductions never disturb columns already reduced.
        """
        rows, pivots = self.rows, self.pivots
        for i in range(len(rows)):
            if rows[i][pivots[i]] < 0:
                rows[i] = [-v for v in rows[i]]
        for k in range(len(rows)):
            for i in range(k + 1, len(rows)):
                p = pivots[i]
                q = rows[k][p] // rows[i][p]  # floor puts remainder in [0, pivot)
                if q:
                    row_i = rows[i]
                    rows[k] = [a - q * b for a, b in zip(rows[k], row_i)]
        return tuple(tuple(r) for r in rows)


def hermite_normal_form(rows: Iterable[Row], width: int) -> tuple[tuple[int, ...], ...]:
    """Canonical row-style HNF of the subgroup of Z^width spanned by rows.

    Zero rows are dropped; two generating sets span the same subgroup iff
    their HNFs are identical tuples.

    >>> hermite_normal_form([(2, 4), (1, 2)], 2)
    ((1, 2),)
    >>> hermite_normal_form([(0, 0)], 2)
    ()
    """
    ech = _Echelon(width)
    for r in rows:
        ech.insert(r)
    return ech.canonical()


def left_kernel(rows: Sequence[Row], width: int) -> tuple[tuple[int, ...], ...]:
    """Basis (HNF) of {u in Z^r : u * M == 0} for M with r rows.

    Computed by reducing [M | I] and reading off the rows whose M-part
    vanished; the result is automatically saturated.
    """
    r = len(rows)
    ech = _Echelon(width + r)
    for i, row in enumerate(rows):
        aug = list(row) + [0] * r
        aug[width + i] = 1
        ech.insert(aug)
    kernel = [row[width:] for row, p in zip(ech.rows, ech.pivots) if p >= width]
    return hermite_normal_form(kernel, r)


def right_kernel(rows: Sequence[Row], width: int) -> tuple[tuple[int, ...], ...]:
    """Basis (HNF) of {x in Z^width : M * x == 0}, i.e. vectors orthogonal
    to every row."""
    cols = [[row[j] for row in rows] for j in range(width)]
    return left_kernel(cols, len(rows))


def transpose(rows: Sequence[Row]) -> list[list[int]]:
    return [list(col) for col in zip(*rows)] if rows else []


def smith_normal_form(rows: Sequence[Row], width: int) -> tuple[list[int], list[list[int]]]:
    """Elementary divisors of M plus a unimodular coordinate matrix.

    Returns (divisors, coords) where divisors = [d1, d2, ...] with
    d1 | d2 | ... (positive, one per nonzero diagonal entry) and coords is a
    width x width unimodular matrix whose rows c_1..c_m form a basis of
    Z^width such that the row span of M equals span{d_i * c_i}.  Hence
    rows coords[:len(divisors)] give a basis of the saturation of the row
    span, and coords[len(divisors):] project to a basis of the torsion-free
    part of the quotient.
    """
    mat = [list(r) for r in rows]
    n = len(mat)
    m = width
    coords = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def col_add(j_src: int, j_dst: int, q: int) -> None:
        # mat col j_dst += q * col j_src; inverse op on coords rows:
        # row j_src -= q * row j_dst
        for row in mat:
            row[j_dst] += q * row[j_src]
        coords[j_src] = [a - q * b for a, b in zip(coords[j_src], coords[j_dst])]

    def col_swap(j1: int, j2: int) -> None:
        for row in mat:
            row[j1], row[j2] = row[j2], row[j1]
        coords[j1], coords[j2] = coords[j2], coords[j1]

    divisors: list[int] = []
    s = 0
    while s < n and s < m:
        # locate a smallest-magnitude nonzero entry in the trailing block
        best = None
        for i in range(s, n):
            for j in range(s, m):
                v = abs(mat[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, bi, bj = best
        mat[s], mat[bi] = mat[bi], mat[s]
        if bj != s:
            col_swap(s, bj)
        while True:
            # clear column s below the pivot (row ops are free: they do not
            # change the row span or the coordinate matrix)
            dirty = False
            for i in range(s + 1, n):
                if mat[i][s]:
                    a, b = mat[s][s], mat[i][s]
                    if b % a == 0:
                        q = b // a
                        mat[i] = [x - q * y for x, y in zip(mat[i], mat[s])]
                    else:
                        g, x, y = xgcd(a, b)
                        a_g, b_g = a // g, b // g
                        rs, ri = mat[s], mat[i]
                        mat[s] = [x * p + y * q2 for p, q2 in zip(rs, ri)]
                        mat[i] = [a_g * q2 - b_g * p for p, q2 in zip(rs, ri)]
                        dirty = True
            # clear row s right of the pivot
            for j in range(s + 1, m):
                if mat[s][j]:
                    a, b = mat[s][s], mat[s][j]
                    if b % a == 0:
                        col_add(s, j, -(b // a))
                    else:
                        # bring gcd into the pivot, then retry
                        g, x, y = xgcd(a, b)
                        # col_s' = x*col_s + y*col_j needs a compound op;
                        # emulate with the standard 2-column unimodular move
                        _unimodular_col_pair(mat, coords, s, j, a, b)
                        dirty = True
            if not dirty and all(mat[i][s] == 0 for i in range(s + 1, n)) and all(
                mat[s][j] == 0 for j in range(s + 1, m)
            ):
                break
        if mat[s][s] < 0:
            mat[s] = [-v for v in mat[s]]
        d = mat[s][s]
        # enforce divisibility d | every remaining entry
        fixed = False
        for i in range(s + 1, n):
            for j in range(s + 1, m):
                if mat[i][j] % d:
                    mat[s] = [x + y for x, y in zip(mat[s], mat[i])]
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue  # redo this pivot with the enlarged row
        divisors.append(d)
        s += 1
    return divisors, coords


def _unimodular_col_pair(mat, coords, j1, j2, a, b):
    """Replace (col j1, col j2) by (x*c1 + y*c2, -(b/g)*c1 + (a/g)*c2) where
    g, x, y = xgcd(a, b); updates coords with the inverse row operation."""
    g, x, y = xgcd(a, b)
    a_g, b_g = a // g, b // g
    for row in mat:
        p, q = row[j1], row[j2]
        row[j1] = x * p + y * q
        row[j2] = a_g * q - b_g * p
    # inverse of [[x, -b/g], [y, a/g]] is [[a/g, b/g], [-y, x]] (det = 1)
    c1, c2 = coords[j1], coords[j2]
    coords[j1] = [a_g * p + b_g * q for p, q in zip(c1, c2)]
    coords[j2] = [-y * p + x * q for p, q in zip(c1, c2)]


def matrix_rank(rows: Sequence[Row], width: int) -> int:
    """Rank over Q of an integer matrix (fraction-free elimination)."""
    return len(hermite_normal_form(rows, width))


def determinant(rows: Sequence[Row]) -> int:
    """Exact determinant via Bareiss fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    mat = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k]:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


def dot(u: Row, v: Row) -> int:
    return sum(a * b for a, b in zip(u, v))
