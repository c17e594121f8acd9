"""Exact dense linear algebra over Q(i).

Plain Gaussian elimination with exact division; at the sizes this package
handles (at most a few dozen rows) there is no need for fraction-free
variants or pivoting heuristics.  Kernel bases are returned in the canonical
rref-derived form so that results are deterministic and comparable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import ONE, ZERO, Scalar, as_scalar

Vector = tuple[Scalar, ...]


def vec(entries) -> Vector:
    return tuple(as_scalar(e) for e in entries)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def add_vectors(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def scale_vector(c: Scalar, v: Vector) -> Vector:
    return tuple(c * a for a in v)


class Matrix:
    """An immutable rows x cols matrix of Scalars."""

    def __init__(self, rows):
        self.entries: tuple[Vector, ...] = tuple(vec(r) for r in rows)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns) -> "Matrix":
        cols = [vec(c) for c in columns]
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        return Matrix(
            [
                [
                    sum((self[i, k] * other[k, j] for k in range(self.cols)), ZERO)
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ]
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([add_vectors(a, b) for a, b in zip(self.entries, other.entries, strict=True)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [add_vectors(a, scale_vector(-ONE, b)) for a, b in zip(self.entries, other.entries, strict=True)]
        )

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix([scale_vector(c, r) for r in self.entries])

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(
            sum((self[i, j] * v[j] for j in range(self.cols)), ZERO) for i in range(self.rows)
        )

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)])

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in r) for r in self.entries)
        return f"Matrix[{body}]"


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q(i)^n given by an explicit independent basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Vector) -> bool:
        if not self.basis:
            return all(not x for x in v)
        m = Matrix.from_columns(self.basis)
        return solve(m, v) is not None


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form with rank and pivot columns."""
    work = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = next((i for i in range(r, m.rows) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][c].inverse()
        work[r] = [inv * x for x in work[r]]
        for i in range(m.rows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Matrix(work) if m.rows else m, r, pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix) -> Subspace:
    """Basis of {v : m v = 0}, one vector per free column of rref(m)."""
    reduced, rk, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for row_idx, pc in enumerate(pivots):
            v[pc] = -reduced[row_idx, free]
        basis.append(tuple(v))
    assert len(basis) == m.cols - rk
    return Subspace(m.cols, tuple(basis))


def image_basis(m: Matrix) -> Subspace:
    """Basis of the column space: the pivot columns of m."""
    _, _, pivots = rref(m)
    return Subspace(m.rows, tuple(m.column(j) for j in pivots))


def solve(m: Matrix, rhs: Vector) -> Vector | None:
    """A particular solution of m x = rhs, or None if inconsistent."""
    if len(rhs) != m.rows:
        raise ValueError("rhs length does not match row count")
    augmented = Matrix([list(row) + [rhs[i]] for i, row in enumerate(m.entries)])
    reduced, _, pivots = rref(augmented)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for row_idx, pc in enumerate(pivots):
        x[pc] = reduced[row_idx, m.cols]
    return tuple(x)


def invert(m: Matrix) -> Matrix | None:
    """Exact inverse, or None for a singular (or non-square) input."""
    if m.rows != m.cols:
        return None
    n = m.rows
    identity = Matrix.identity(n)
    augmented = Matrix([list(m.row(i)) + list(identity.row(i)) for i in range(n)])
    reduced, _, pivots = rref(augmented)
    # a pivot in the identity block means the left block is rank deficient
    if pivots[:n] != list(range(n)):
        return None
    return Matrix([reduced.row(i)[n:] for i in range(n)])


def stack_columns(vectors) -> Matrix:
    """Matrix whose columns are the given vectors."""
    return Matrix.from_columns(list(vectors))


def extend_to_spanning(base: list[Vector], candidates: list[Vector]) -> list[Vector]:
    """Greedy rref extension: candidates that enlarge span(base), in order."""
    chosen: list[Vector] = []
    current = list(base)
    current_rank = rank(Matrix(current)) if current else 0
    for v in candidates:
        trial = current + [v]
        r = rank(Matrix(trial))
        if r > current_rank:
            chosen.append(v)
            current = trial
            current_rank = r
    return chosen
