"""Exact linear algebra over the rationals for small dense systems.

Everything in the engine that counts dimensions goes through these
routines; no floating point is allowed anywhere near a Hom space.
Matrices are lists of lists of ints/Fractions, row major.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(rows: int, cols: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> list[list[Fraction]]:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def mat_mul(a, b) -> list[list[Fraction]]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    if a and len(a[0]) != inner:
        raise ValueError("shape mismatch in mat_mul")
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += aik * bk[j]
    return out


def mat_vec(a, v) -> list[Fraction]:
    if a and len(a[0]) != len(v):
        raise ValueError("shape mismatch in mat_vec")
    return [sum((row[j] * v[j] for j in range(len(v)) if v[j]), Fraction(0)) for row in a]


def transpose(a) -> list[list[Fraction]]:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def _echelon(m: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (in place on a copy) and pivot columns."""
    m = [[Fraction(x) for x in row] for row in m]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(m) -> int:
    if not m or not m[0]:
        return 0
    return len(_echelon(m)[1])


def nullity(m, cols: int | None = None) -> int:
    if cols is None:
        cols = len(m[0]) if m else 0
    return cols - rank(m)


def nullspace(m, cols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column."""
    if cols is None:
        cols = len(m[0]) if m else 0
    if not m or cols == 0:
        return [list(row) for row in identity(cols)]
    ech, pivots = _echelon(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -ech[r][fc]
        basis.append(v)
    return basis


def left_nullspace(m, rows: int | None = None) -> list[list[Fraction]]:
    if rows is None:
        rows = len(m)
    if rows == 0:
        return []
    return nullspace(transpose(m), cols=rows)


def invert(m) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + list(identity(n)[i]) for i, row in enumerate(m)]
    ech, pivots = _echelon(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in ech]


class SpanBasis:
    """Incrementally reduced basis of a subspace of Q^dim.

    add() reduces the vector against the current basis and absorbs any
    remainder; contains() tests membership without mutating.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def _reduce(self, v):
        v = [Fraction(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                for j in range(self.dim):
                    if row[j]:
                        v[j] -= f * row[j]
        return v

    def add(self, v) -> bool:
        """Insert v; returns True when it enlarged the span."""
        v = self._reduce(v)
        p = next((j for j in range(self.dim) if v[j]), None)
        if p is None:
            return False
        pv = v[p]
        v = [x / pv for x in v]
        for row in self.rows:
            if row[p]:
                f = row[p]
                for j in range(self.dim):
                    if v[j]:
                        row[j] -= f * v[j]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def contains(self, v) -> bool:
        return all(x == 0 for x in self._reduce(v))

    @property
    def rank(self) -> int:
        return len(self.rows)
