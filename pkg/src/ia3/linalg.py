"""Exact linear algebra over Z and Q on dense list-of-list matrices.

Sizes in this project stay small (240 x 162 at the largest), so everything
is done with arbitrary-precision integers: fraction-free elimination for
ranks and solving, and elementary row/column operations with recorded
unimodular transforms for the Smith normal form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("dimension mismatch")
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(row) for row in zip(*a)] if a else []


def _as_int_rows(mat: Sequence[Sequence]) -> List[List[int]]:
    rows = []
    for row in mat:
        scaled = []
        scale = 1
        for x in row:
            if isinstance(x, Fraction):
                scale = scale * x.denominator // _gcd(scale, x.denominator)
        for x in row:
            scaled.append(int(x * scale) if isinstance(x, Fraction) else int(x) * scale)
        rows.append(scaled)
    return rows


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _bareiss(rows: List[List[int]], pivot_limit: int) -> tuple[int, List[int], List[List[int]]]:
    """Fraction-free elimination in place; pivots are chosen only among the
    first `pivot_limit` columns (extra columns ride along as right-hand sides).

    Returns (rank, pivot column list, echelon rows in elimination order).
    Row scaling by prior pivots keeps all entries integral (each is, up to
    sign, a minor of the input).
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    rank = 0
    prev = 1
    pivots: List[int] = []
    used_cols: set[int] = set()
    for _ in range(min(m, pivot_limit)):
        best = None
        for i in range(rank, m):
            row = rows[i]
            for j in range(pivot_limit):
                if j in used_cols:
                    continue
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        rows[rank], rows[pi] = rows[pi], rows[rank]
        piv_row = rows[rank]
        piv = piv_row[pj]
        for i in range(rank + 1, m):
            row = rows[i]
            factor = row[pj]
            # Sylvester's identity makes both divisions exact; the factor == 0
            # rows must still be rescaled or later divisions break.
            if factor:
                for j in range(n):
                    row[j] = (piv * row[j] - factor * piv_row[j]) // prev
            elif piv != prev:
                for j in range(n):
                    row[j] = piv * row[j] // prev
        prev = piv
        pivots.append(pj)
        used_cols.add(pj)
        rank += 1
    return rank, pivots, rows


def rank_exact(mat: Sequence[Sequence]) -> int:
    """Rank over Q, by fraction-free (Bareiss) elimination."""
    rows = _as_int_rows(mat)
    if not rows or not rows[0]:
        return 0
    rank, _, _ = _bareiss(rows, len(rows[0]))
    return rank


def rank_mod_p(mat: Sequence[Sequence], p: int = 1_000_003) -> int:
    """Rank over F_p; a cheap probabilistic cross-check of rank_exact."""
    rows = [[int(x) % p for x in row] for row in _as_int_rows(mat)]
    m = len(rows)
    n = len(rows[0]) if m else 0
    rank = 0
    for j in range(n):
        piv = next((i for i in range(rank, m) if rows[i][j]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][j], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(m):
            if i != rank and rows[i][j]:
                f = rows[i][j]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def in_span(v: Sequence, mat: Sequence[Sequence]) -> Optional[List[Fraction]]:
    """Coefficients c with mat @ c == v over Q, or None if v is not in the
    column span. `mat` is given row-wise; v indexes its rows."""
    m = len(mat)
    if m == 0 or len(v) != m:
        raise ValueError("shape mismatch between vector and matrix rows")
    n = len(mat[0])
    # clearing denominators row by row keeps each equation intact
    aug = _as_int_rows([list(mat[i]) + [v[i]] for i in range(m)])
    rank, pivots, rows = _bareiss(aug, n)
    for i in range(rank, m):
        if rows[i][n]:
            return None
    coeffs = [Fraction(0)] * n
    for i in range(rank - 1, -1, -1):
        row = rows[i]
        acc = Fraction(row[n])
        for j2 in pivots[i + 1:]:
            if row[j2]:
                acc -= row[j2] * coeffs[j2]
        coeffs[pivots[i]] = acc / row[pivots[i]]
    return coeffs


def invert(mat: Sequence[Sequence]) -> List[List[Fraction]]:
    """Inverse of a square matrix over Q; raises on a singular input."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("invert expects a square matrix")
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        scale = 1 / work[col][col]
        work[col] = [x * scale for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


@dataclass
class SmithForm:
    """U @ A @ V == diag(factors), with U, V unimodular."""

    factors: List[int]
    U: Matrix
    V: Matrix
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len([d for d in self.factors if d])

    def cokernel_rank(self) -> int:
        return self.shape[0] - self.rank

    def torsion(self) -> List[int]:
        return [d for d in self.factors if d not in (0, 1)]


def snf(mat: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form over Z with recorded transforms.

    Pivot selection takes a least-absolute-value entry of the working
    submatrix, which keeps intermediate entries small on the sparse integer
    matrices this project produces.
    """
    a = [[int(x) for x in row] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = identity(m)
    v = identity(n)
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            a[t], a[bi] = a[bi], a[t]
            u[t], u[bi] = u[bi], u[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
            for row in v:
                row[t], row[bj] = row[bj], row[t]
        dirty = False
        for i in range(t + 1, m):
            q = a[i][t] // a[t][t]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                u[i] = [x - q * y for x, y in zip(u[i], u[t])]
            if a[i][t]:
                dirty = True
        for j in range(t + 1, n):
            q = a[t][j] // a[t][t]
            if q:
                for row in a:
                    row[j] -= q * row[t]
                for row in v:
                    row[j] -= q * row[t]
            if a[t][j]:
                dirty = True
        if dirty:
            continue
        piv = a[t][t]
        bad = next(
            ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % piv),
            None,
        )
        if bad is not None:
            i = bad[0]
            a[t] = [x + y for x, y in zip(a[t], a[i])]
            u[t] = [x + y for x, y in zip(u[t], u[i])]
            continue
        if piv < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    factors = [a[i][i] for i in range(min(m, n))]
    return SmithForm(factors=factors, U=u, V=v, shape=(m, n))
