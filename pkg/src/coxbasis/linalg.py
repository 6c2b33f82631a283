"""Exact linear algebra over scalar fields and polynomial rings.

Scalar matrices (entries Fraction or Quad) get reduced row echelon form,
solving, kernel bases and inversion.  Pivoting always takes the first
nonzero entry in a fixed scan order, so every result is deterministic.

Polynomial matrices get exact determinants: cofactor expansion for size
up to 4, fraction-free Bareiss elimination above that.  Bareiss stays
inside the polynomial ring because every division it performs is by a
previous pivot, which divides exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NoSolution
from .poly import Poly
from .scalars import Scalar, scalar_inverse

Matrix = list[list[Scalar]]


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [list(row) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = scalar_inverse(m[r][c])
        m[r] = [inv * v for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows: Sequence[Sequence[Scalar]], ncols: int | None = None) -> list[list[Scalar]]:
    """Basis of the right kernel, one vector per free column, in column order."""
    if ncols is None:
        if not rows:
            raise ValueError("kernel of an empty matrix needs an explicit column count")
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(1) if j == i else Fraction(0) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis: list[list[Scalar]] = []
    for f in free:
        v: list[Scalar] = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        basis.append(v)
    return basis


def solve_linear(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> tuple[list[Scalar], list[list[Scalar]]]:
    """Solve A x = b exactly.

    Returns a particular solution (free variables set to zero) together
    with a kernel basis.  Raises NoSolution when the system is infeasible.
    """
    if len(rows) != len(rhs):
        raise ValueError("matrix and right-hand side disagree on row count")
    if not rows:
        return [], []
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        raise NoSolution("linear system is inconsistent")
    particular: list[Scalar] = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        particular[pc] = red[r][ncols]
    kernel = kernel_basis([row[:ncols] for row in red[:len(pivots)]] or [[Fraction(0)] * ncols], ncols)
    return particular, kernel


def invert_matrix(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix inversion needs a square matrix")
    aug = [list(r) + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


class PolyMatrix:
    """A rectangular matrix of polynomials with exact determinants."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence[Poly]]) -> None:
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged polynomial matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", len(rows[0]) if rows else 0)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PolyMatrix is immutable")

    def entry(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    def minor(self, drop_row: int, drop_col: int) -> "PolyMatrix":
        return PolyMatrix([
            [e for j, e in enumerate(row) if j != drop_col]
            for i, row in enumerate(self.rows) if i != drop_row
        ])

    def det(self, method: str = "auto") -> Poly:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            raise ValueError("determinant of an empty matrix")
        if method == "auto":
            method = "cofactor" if self.nrows <= 4 else "bareiss"
        if method == "cofactor":
            return _det_cofactor(self.rows)
        if method == "bareiss":
            return _det_bareiss(self.rows)
        raise ValueError("unknown determinant method %r" % method)


def _det_cofactor(rows: list[list[Poly]]) -> Poly:
    n = len(rows)
    nvars = rows[0][0].nvars
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    out = Poly.zero(nvars)
    for i in range(n):
        entry = rows[i][0]
        if entry.is_zero:
            continue
        sub = [[rows[r][c] for c in range(1, n)] for r in range(n) if r != i]
        term = entry * _det_cofactor(sub)
        out = out + term if i % 2 == 0 else out - term
    return out


def _det_bareiss(rows: list[list[Poly]]) -> Poly:
    n = len(rows)
    nvars = rows[0][0].nvars
    m = [list(r) for r in rows]
    sign = 1
    prev = Poly.constant(nvars, Fraction(1))
    for k in range(n - 1):
        if m[k][k].is_zero:
            swap = None
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    swap = i
                    break
            if swap is None:
                return Poly.zero(nvars)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.divide_exact(prev)
            m[i][k] = Poly.zero(nvars)
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return result if sign == 1 else -result
