"""Exact rational scalars, vectors, matrices, and row spaces.

Everything in this module (and in the rest of the package) computes over
``fractions.Fraction``: no floating point, no tolerances.  Matrices are
immutable dense row-major arrays; subspaces are canonical reduced
row-echelon bases, so two equal subspaces compare equal structurally.

Indexing is 0-based throughout.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "Fraction",
    "parse_rational",
    "format_rational",
    "as_fraction",
    "Matrix",
    "matrix_product",
    "determinant_adjugate",
    "nullspace",
    "solve_linear",
    "Subspace",
]


# ---------------------------------------------------------------------------
# rational scalars


def parse_rational(text: str) -> Fraction:
    """Parse a rational from its canonical string form ``"p/q"`` or ``"p"``."""
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Render a rational in lowest terms as ``"p/q"``, or ``"p"`` when q == 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions, or ``"p/q"`` strings to a Fraction.

    Floats are rejected: converting one would silently commit to its
    binary expansion and break the exactness guarantee.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int, or 'p/q' string")
    return Fraction(value)


def _as_row(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(as_fraction(v) for v in values)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(_as_row(row) for row in entries)
        self.entries: tuple[tuple[Fraction, ...], ...] = rows
        self.rows: int = len(rows)
        self.cols: int = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != self.cols:
                raise ValueError("ragged rows in matrix constructor")

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        z = Fraction(0)
        return cls([[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)])

    # -- basic protocol ------------------------------------------------------
    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self.entries[i][j]
        return self.entries[key]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(format_rational(v) for v in row) for row in self.entries
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __mul__(self, other: "Matrix") -> "Matrix":
        return matrix_product(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shape mismatch in addition")
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shape mismatch in subtraction")
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def scaled(self, c) -> "Matrix":
        c = as_fraction(c)
        return Matrix([[c * v for v in row] for row in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product (vector as coordinates, length == cols)."""
        vec = _as_row(vector)
        if len(vec) != self.cols:
            raise ValueError("vector length does not match matrix columns")
        return tuple(
            sum((row[j] * vec[j] for j in range(self.cols)), Fraction(0))
            for row in self.entries
        )


def matrix_product(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product; raises on inner-dimension mismatch."""
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    bt = b.transpose().entries
    return Matrix(
        [
            [sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt]
            for row in a.entries
        ]
    )


# ---------------------------------------------------------------------------
# elimination helpers


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list).

    Pivoting takes the leftmost nonzero column, first nonzero row — exact
    arithmetic needs no magnitude-based pivot choice.
    """
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _determinant(entries: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by exact Gaussian elimination with row swaps."""
    n = len(entries)
    rows = [list(row) for row in entries]
    det = Fraction(1)
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        inv = Fraction(1) / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[c])]
    return det


def _inverse(m: Matrix) -> Optional[Matrix]:
    """Exact inverse via Gauss-Jordan, or None when singular."""
    n = m.rows
    aug = [list(m.entries[i]) + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    aug, pivots = _rref(aug)
    if pivots != list(range(n)):
        return None
    return Matrix([row[n:] for row in aug])


def determinant_adjugate(m: Matrix) -> tuple[Fraction, Matrix]:
    """Return ``(det, adj)`` with ``m * adj^T == det * identity`` exactly.

    ``adj`` is the cofactor matrix: ``adj[i][j]`` is (-1)^(i+j) times the
    (i,j) minor of ``m``.  For invertible input it is obtained from the
    inverse; for singular input, by direct minor expansion.
    """
    if m.rows != m.cols:
        raise ValueError("determinant_adjugate requires a square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1), Matrix([])
    det = _determinant(m.entries)
    if det != 0:
        inv = _inverse(m)
        # m^-1 = adj^T / det, so adj = det * (m^-1)^T.
        return det, inv.transpose().scaled(det)
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [
                [m.entries[a][b] for b in range(n) if b != j]
                for a in range(n)
                if a != i
            ]
            sign = Fraction(-1) if (i + j) % 2 else Fraction(1)
            row.append(sign * _determinant(minor))
        cof.append(row)
    return det, Matrix(cof)


def nullspace(m: Matrix) -> "Subspace":
    """Canonical basis of the right kernel ``{v : m v = 0}``."""
    rows = [list(r) for r in m.entries]
    rows, pivots = _rref(rows)
    ncols = m.cols
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return Subspace.from_rows(ncols, basis)


def solve_linear(m: Matrix, rhs: Sequence) -> Optional[tuple[Fraction, ...]]:
    """One particular solution of ``m x = rhs``, or None when inconsistent."""
    vec = _as_row(rhs)
    if len(vec) != m.rows:
        raise ValueError("right-hand side length does not match matrix rows")
    aug = [list(m.entries[i]) + [vec[i]] for i in range(m.rows)]
    aug, pivots = _rref(aug)
    if m.cols in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [Fraction(0)] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][-1]
    return tuple(x)


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of Q^n held as a canonical RREF basis matrix.

    Canonicality makes equality structural: any two generating sets with the
    same span produce the identical basis matrix.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Matrix):
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def from_rows(cls, ambient_dim: int, rows: Iterable[Sequence]) -> "Subspace":
        mat = [list(_as_row(r)) for r in rows]
        for row in mat:
            if len(row) != ambient_dim:
                raise ValueError("generator length does not match ambient dimension")
        mat, _ = _rref(mat)
        mat = [row for row in mat if any(v != 0 for v in row)]
        return cls(ambient_dim, Matrix(mat) if mat else Matrix.zero(0, ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zero(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.basis.entries

    def coordinates(self, vector: Sequence) -> Optional[tuple[Fraction, ...]]:
        """Coefficients of ``vector`` in the basis rows, or None if outside."""
        vec = _as_row(vector)
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        if self.dim == 0:
            return () if all(v == 0 for v in vec) else None
        return solve_linear(self.basis.transpose(), vec)

    def contains(self, vector: Sequence) -> bool:
        return self.coordinates(vector) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.rows())

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_rows(
            self.ambient_dim, list(self.rows()) + list(other.rows())
        )

    def intersection(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked-transpose system."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        # v in both spans  <=>  v = A^T x = B^T y; solve [A^T | -B^T] z = 0.
        a_t = self.basis.transpose()
        b_t = other.basis.transpose()
        stacked = Matrix(
            [
                list(a_t.entries[i]) + [-v for v in b_t.entries[i]]
                for i in range(self.ambient_dim)
            ]
        )
        combos = nullspace(stacked)
        vectors = []
        for z in combos.rows():
            x = z[: self.dim]
            vectors.append(a_t.apply(x))
        return Subspace.from_rows(self.ambient_dim, vectors)

    def orthogonal_complement(self, gram: Matrix) -> "Subspace":
        """All v with ``b G v == 0`` for every basis row b (form with Gram G)."""
        if gram.rows != self.ambient_dim or gram.cols != self.ambient_dim:
            raise ValueError("Gram matrix shape does not match ambient dimension")
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return nullspace(matrix_product(self.basis, gram))
