"""Dense exact linear algebra over the rationals.

Everything here computes with `fractions.Fraction`; no floating point is
accepted or produced anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContractViolation, DegenerateFormError

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise ContractViolation(
        f"expected an exact rational (int or Fraction), got {type(value).__name__}"
    )


def vector(entries: Iterable) -> tuple[Fraction, ...]:
    return tuple(as_scalar(x) for x in entries)


def vec_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_scale(c, a: Sequence[Fraction]) -> tuple[Fraction, ...]:
    c = as_scalar(c)
    return tuple(c * x for x in a)


def is_zero_vector(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        if rows:
            cols = len(rows[0])
            for row in rows:
                if len(row) != cols:
                    raise ContractViolation("ragged matrix rows")
        elif cols is None:
            raise ContractViolation("empty matrix needs an explicit column count")
        self.rows = len(rows)
        self.cols = cols
        self._e = rows

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            if rows is None:
                raise ContractViolation("empty column list needs an explicit row count")
            return cls.zero(rows, 0)
        n = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        return self._e[i][j]

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._e[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self._e[i][j] for i in range(self.rows))

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)], cols=self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ContractViolation("matrix shape mismatch in product")
        return Matrix(
            [
                [
                    sum((self._e[i][k] * other._e[k][j] for k in range(self.cols)), ZERO)
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ],
            cols=other.cols,
        )

    def mat_vec(self, v: Sequence) -> tuple[Fraction, ...]:
        v = vector(v)
        if len(v) != self.cols:
            raise ContractViolation("matrix/vector shape mismatch")
        return tuple(
            sum((self._e[i][j] * v[j] for j in range(self.cols)), ZERO)
            for i in range(self.rows)
        )

    def scaled(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix([[c * x for x in row] for row in self._e], cols=self.cols)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self._e[i][j] == self._e[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def is_diagonal(self) -> bool:
        return all(
            self._e[i][j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self._e[i][i] for i in range(min(self.rows, self.cols)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._e == other._e
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._e)
        return f"Matrix({self.rows}x{self.cols}: {body})"


@dataclass(frozen=True)
class LinearSolution:
    """One solution of A x = b; `unique` is False when the kernel is nonzero."""

    vector: tuple[Fraction, ...]
    unique: bool


def _echelon(aug: list[list[Fraction]], cols: int) -> list[int]:
    """In-place reduced row echelon form of `aug`; returns pivot column list.

    `cols` counts the coefficient columns; anything beyond is augmentation.
    """
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, len(aug)):
            if aug[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        p = aug[r][c]
        if p != 1:
            aug[r] = [x / p for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    return pivots


def solve_linear(a: Matrix, b: Sequence) -> LinearSolution | None:
    """Solve A x = b exactly.

    Returns None when the system is inconsistent.  When the solution space is
    an affine subspace of positive dimension, one solution is returned (free
    variables set to zero) with unique=False.
    """
    b = vector(b)
    if len(b) != a.rows:
        raise ContractViolation("right-hand side length does not match row count")
    aug = [list(a.row(i)) + [b[i]] for i in range(a.rows)]
    pivots = _echelon(aug, a.cols)
    rank = len(pivots)
    for i in range(rank, a.rows):
        if aug[i][a.cols] != 0:
            return None
    x = [ZERO] * a.cols
    for r, c in enumerate(pivots):
        x[c] = aug[r][a.cols]
    return LinearSolution(tuple(x), unique=(rank == a.cols))


def nullspace(a: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the kernel of A, as a list of coordinate vectors."""
    if a.rows == 0:
        return [tuple(Matrix.identity(a.cols).row(i)) for i in range(a.cols)]
    aug = [list(a.row(i)) for i in range(a.rows)]
    pivots = _echelon(aug, a.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * a.cols
        v[free] = ONE
        for r, c in enumerate(pivots):
            v[c] = -aug[r][free]
        basis.append(tuple(v))
    return basis


def rank(a: Matrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    aug = [list(a.row(i)) for i in range(a.rows)]
    return len(_echelon(aug, a.cols))


def invert(a: Matrix) -> Matrix:
    if a.rows != a.cols:
        raise ContractViolation("only square matrices can be inverted")
    n = a.rows
    aug = [list(a.row(i)) + list(Matrix.identity(n).row(i)) for i in range(n)]
    pivots = _echelon(aug, n)
    if len(pivots) != n:
        raise ContractViolation("matrix is singular")
    return Matrix([row[n:] for row in aug], cols=n)


def diagonalize_form(b: Matrix) -> tuple[Matrix, tuple[Fraction, ...]]:
    """Congruence-diagonalize a symmetric non-degenerate form.

    Returns (P, d) with P invertible and P^T B P = diag(d), every d_i nonzero.
    Symmetric Gaussian reduction; when the whole remaining diagonal is zero an
    isotropic pivot is repaired by adding a column with nonzero coupling onto
    the pivot column (char 0, so the repaired diagonal entry 2*B_ij != 0).
    """
    if b.rows != b.cols:
        raise ContractViolation("form matrix must be square")
    if not b.is_symmetric():
        raise ContractViolation("form matrix must be symmetric")
    n = b.rows
    m = [list(b.row(i)) for i in range(n)]
    p = [list(Matrix.identity(n).row(i)) for i in range(n)]

    def swap_cols(i, j):
        for r in range(n):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        m[i], m[j] = m[j], m[i]
        for r in range(n):
            p[r][i], p[r][j] = p[r][j], p[r][i]

    def add_col(dst, src, c):
        # col_dst += c * col_src, mirrored on rows to stay congruent
        for r in range(n):
            m[r][dst] += c * m[r][src]
        for q in range(n):
            m[dst][q] += c * m[src][q]
        for r in range(n):
            p[r][dst] += c * p[r][src]

    for r in range(n):
        if m[r][r] == 0:
            pivot = next((j for j in range(r + 1, n) if m[j][j] != 0), None)
            if pivot is not None:
                swap_cols(r, pivot)
            else:
                pair = next(
                    (
                        (i, j)
                        for i in range(r, n)
                        for j in range(i + 1, n)
                        if m[i][j] != 0
                    ),
                    None,
                )
                if pair is None:
                    kernel = nullspace(b)
                    raise DegenerateFormError(
                        "form is degenerate", witness=kernel[0] if kernel else None
                    )
                i, j = pair
                add_col(i, j, ONE)
                if i != r:
                    swap_cols(r, i)
        piv = m[r][r]
        for j in range(r + 1, n):
            if m[r][j] != 0:
                add_col(j, r, -m[r][j] / piv)

    d = tuple(m[i][i] for i in range(n))
    return Matrix(p, cols=n), d
