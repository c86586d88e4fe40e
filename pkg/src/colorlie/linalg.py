"""Dense exact linear algebra over Q(q).

Matrices are lists of rows of :class:`~colorlie.scalars.Scalar`.  Subspaces are
represented canonically by reduced row-echelon bases (pivot entries 1, rows
ordered by pivot column), so two subspaces are equal iff their canonical
bases are equal.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple

from .scalars import ONE, ZERO, Scalar

Vector = List[Scalar]
Matrix = List[Vector]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def shape(a: Matrix, cols: int | None = None) -> Tuple[int, int]:
    return len(a), (len(a[0]) if a else (cols or 0))


def matmul(a: Matrix, b: Matrix, inner: int | None = None, cols: int | None = None) -> Matrix:
    """Product ``a @ b``; ``cols`` gives the column count when ``b`` has no rows."""
    n = len(a)
    m = len(b[0]) if b else (cols or 0)
    k = len(b)
    out = zeros(n, m)
    for i in range(n):
        row = a[i]
        acc = out[i]
        for t in range(k):
            c = row[t]
            if c.is_zero():
                continue
            brow = b[t]
            for j in range(m):
                v = brow[j]
                if not v.is_zero():
                    acc[j] = acc[j] + c * v
    return out


def matvec(a: Matrix, v: Vector) -> Vector:
    out = []
    for row in a:
        acc = ZERO
        for c, x in zip(row, v):
            if not c.is_zero() and not x.is_zero():
                acc = acc + c * x
        out.append(acc)
    return out


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a: Matrix, c) -> Matrix:
    return [[x * c for x in row] for row in a]


def transpose(a: Matrix, cols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def rref(rows: Sequence[Vector]) -> Tuple[Matrix, List[int]]:
    """Reduced row-echelon form of the row space; returns (nonzero rows, pivots)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        p = None
        for i in range(r, len(m)):
            if not m[i][c].is_zero():
                p = i
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        if not inv.is_one():
            m[r] = [x * inv if not x.is_zero() else x for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if not f.is_zero():
                    row = m[i]
                    for j in range(c, ncols):
                        if not prow[j].is_zero():
                            row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a: Matrix) -> int:
    return len(_echelon_pivots(a))


def _echelon_pivots(a: Matrix) -> List[int]:
    # forward elimination only; enough for ranks
    m = [list(r) for r in a]
    if not m:
        return []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = None
        for i in range(r, len(m)):
            if not m[i][c].is_zero():
                p = i
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        prow = m[r]
        inv = prow[c].inverse()
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if not f.is_zero():
                f = f * inv
                row = m[i]
                for j in range(c, ncols):
                    if not prow[j].is_zero():
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return pivots


def nullspace(a: Matrix, ncols: int | None = None) -> Matrix:
    """Canonical basis (RREF rows) of ``{v : a v = 0}``."""
    n = len(a[0]) if a else (ncols or 0)
    red, pivots = rref(a) if a else ([], [])
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for row, p in zip(red, pivots):
            if not row[f].is_zero():
                v[p] = -row[f]
        basis.append(v)
    return canonical_basis(basis, n)


def canonical_basis(vectors: Sequence[Vector], n: int) -> Matrix:
    red, _ = rref(vectors) if vectors else ([], [])
    return red


def det(a: Matrix) -> Scalar:
    m = [list(r) for r in a]
    n = len(m)
    d = ONE
    for c in range(n):
        p = None
        for i in range(c, n):
            if not m[i][c].is_zero():
                p = i
                break
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        piv = m[c][c]
        d = d * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            f = m[i][c]
            if not f.is_zero():
                f = f * inv
                for j in range(c, n):
                    if not m[c][j].is_zero():
                        m[i][j] = m[i][j] - f * m[c][j]
    return d


class EchelonBasis:
    """Incrementally maintained echelon basis for membership tests."""

    def __init__(self, n: int):
        self.n = n
        self.rows: List[Vector] = []
        self.pivots: List[int] = []

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if not f.is_zero():
                for j in range(self.n):
                    if not row[j].is_zero():
                        v[j] = v[j] - f * row[j]
        return v

    def add(self, v: Sequence[Scalar]) -> bool:
        """Insert ``v``; return True when it was independent of the basis."""
        w = self.reduce(v)
        for j, x in enumerate(w):
            if not x.is_zero():
                inv = x.inverse()
                w = [y * inv if not y.is_zero() else y for y in w]
                self.rows.append(w)
                self.pivots.append(j)
                return True
        return False

    def contains(self, v: Sequence[Scalar]) -> bool:
        return all(x.is_zero() for x in self.reduce(v))

    def __len__(self):
        return len(self.rows)
