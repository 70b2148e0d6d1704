"""Structure-constant algebras and their identity checkers.

An :class:`Algebra` is a finite-dimensional algebra over the exact rationals
given by its structure constants ``gamma[i][j][k]`` (the coefficient of basis
vector k in the product ``e_i e_j``).  Elements are plain coordinate tuples
of Fractions.

The checkers report witnesses, never just booleans: a failing identity comes
back with the exact tuple and residual that broke it.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import kernels
from .linalg import (
    Matrix,
    Subspace,
    as_fraction,
    format_rational,
    parse_rational,
)

__all__ = [
    "CheckReport",
    "Algebra",
    "basis_element",
    "zero_element",
    "multiply",
    "jacobian",
    "check_anticommutative",
    "check_malcev",
    "check_lie",
    "subalgebra_closure",
    "is_subalgebra",
    "is_ideal",
    "derived_series",
    "multiplication_envelope_dim",
    "tensor_centralizer",
    "restrict_to_subspace",
    "random_element",
    "random_anticommutative_algebra",
    "algebra_to_dict",
    "algebra_from_dict",
    "load_algebra",
    "save_algebra",
]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a verification: ``ok`` plus an explicit witness on failure.

    ``checks`` optionally carries named sub-results for composite reports.
    """

    ok: bool
    witness: Optional[dict] = None
    checks: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


class Algebra:
    """Immutable structure-constant algebra over the rationals."""

    __slots__ = ("dim", "basis", "gamma")

    def __init__(self, dim: int, basis: Sequence[str], gamma):
        if len(basis) != dim:
            raise ValueError("basis label count does not match dimension")
        table = tuple(
            tuple(tuple(as_fraction(c) for c in gamma[i][j]) for j in range(dim))
            for i in range(dim)
        )
        for i in range(dim):
            for j in range(dim):
                if len(table[i][j]) != dim:
                    raise ValueError("structure-constant table has wrong shape")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis", tuple(str(b) for b in basis))
        object.__setattr__(self, "gamma", table)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("Algebra instances are immutable")

    @classmethod
    def from_products(cls, dim: int, basis: Sequence[str], products) -> "Algebra":
        """Build from sparse entries ``(i, j, k, coefficient)``; rest are zero."""
        table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, value in products:
            table[i][j][k] += as_fraction(value)
        return cls(dim, basis, table)

    def product(self, i: int, j: int) -> tuple[Fraction, ...]:
        """Product of two basis elements, as a coordinate vector."""
        return self.gamma[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Algebra)
            and self.dim == other.dim
            and self.basis == other.basis
            and self.gamma == other.gamma
        )

    def __repr__(self) -> str:
        return f"Algebra(dim={self.dim}, basis={list(self.basis)})"

    def format_element(self, vector: Sequence[Fraction]) -> str:
        parts = []
        for c, label in zip(vector, self.basis):
            if c:
                parts.append(f"{format_rational(c)}*{label}")
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# element arithmetic


def zero_element(alg: Algebra) -> tuple[Fraction, ...]:
    return tuple(Fraction(0) for _ in range(alg.dim))


def basis_element(alg: Algebra, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1 if j == i else 0) for j in range(alg.dim))


def _coerce(alg: Algebra, u: Sequence) -> tuple[Fraction, ...]:
    vec = tuple(as_fraction(c) for c in u)
    if len(vec) != alg.dim:
        raise ValueError("element length does not match algebra dimension")
    return vec


def add(u: Sequence, v: Sequence, scale=1) -> tuple[Fraction, ...]:
    s = as_fraction(scale)
    return tuple(a + s * b for a, b in zip(u, v))


def multiply(alg: Algebra, u: Sequence, v: Sequence) -> tuple[Fraction, ...]:
    """Bilinear extension of the structure constants."""
    uu, vv = _coerce(alg, u), _coerce(alg, v)
    out = [Fraction(0)] * alg.dim
    for i, a in enumerate(uu):
        if not a:
            continue
        row = alg.gamma[i]
        for j, b in enumerate(vv):
            if not b:
                continue
            ab = a * b
            vec = row[j]
            for k in range(alg.dim):
                if vec[k]:
                    out[k] += ab * vec[k]
    return tuple(out)


def jacobian(alg: Algebra, x: Sequence, y: Sequence, z: Sequence) -> tuple[Fraction, ...]:
    """J(x, y, z) = (xy)z + (yz)x + (zx)y."""
    xy_z = multiply(alg, multiply(alg, x, y), z)
    yz_x = multiply(alg, multiply(alg, y, z), x)
    zx_y = multiply(alg, multiply(alg, z, x), y)
    return tuple(a + b + c for a, b, c in zip(xy_z, yz_x, zx_y))


# ---------------------------------------------------------------------------
# identity checkers


def check_anticommutative(alg: Algebra) -> CheckReport:
    """gamma[i][j][k] == -gamma[j][i][k] for every index triple."""
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in range(alg.dim):
                if alg.gamma[i][j][k] != -alg.gamma[j][i][k]:
                    return CheckReport(
                        ok=False,
                        witness={"kind": "index-triple", "indices": (i, j, k)},
                    )
    return CheckReport(ok=True)


def _mal1_residual(alg, x, y, z):
    """Residual of the defining identity J(x, y, xz) - J(x, y, z)x."""
    lhs = jacobian(alg, x, y, multiply(alg, x, z))
    rhs = multiply(alg, jacobian(alg, x, y, z), x)
    return tuple(a - b for a, b in zip(lhs, rhs))


def check_malcev(alg: Algebra, samples: int = 200, seed: int = 0) -> CheckReport:
    """Verify the Malcev identities; requires an anticommutative algebra.

    Two complementary checks run:

    * the four-variable multilinear identity
      ``((xy)z)t + ((yz)t)x + ((zt)x)y + ((tx)y)z = (xz)(yt)``
      exhaustively on all basis 4-tuples (sufficient, by multilinearity);
    * the defining identity ``J(x, y, xz) = J(x, y, z)x`` — quadratic in x,
      so basis tuples do not suffice — on ``samples`` seeded pseudo-random
      rational triples.
    """
    anti = check_anticommutative(alg)
    if not anti.ok:
        raise ValueError(
            f"check_malcev requires an anticommutative algebra; "
            f"violated at indices {anti.witness['indices']}"
        )
    hit = kernels.mal_exhaustive_witness(alg.gamma)
    if hit is not None:
        a, b, c, d, residual = hit
        return CheckReport(
            ok=False,
            witness={
                "kind": "four-linear",
                "indices": (a, b, c, d),
                "residual": residual,
            },
        )
    rng = random.Random(seed)
    for index in range(samples):
        x = random_element(rng, alg.dim)
        y = random_element(rng, alg.dim)
        z = random_element(rng, alg.dim)
        residual = _mal1_residual(alg, x, y, z)
        if any(residual):
            return CheckReport(
                ok=False,
                witness={
                    "kind": "defining-sampled",
                    "sample": index,
                    "elements": (x, y, z),
                    "residual": residual,
                },
            )
    return CheckReport(ok=True)


def check_lie(alg: Algebra) -> CheckReport:
    """Jacobian vanishes on all basis triples (multilinear, so exhaustive)."""
    anti = check_anticommutative(alg)
    if not anti.ok:
        raise ValueError("check_lie requires an anticommutative algebra")
    for i, j, k in itertools.product(range(alg.dim), repeat=3):
        value = jacobian(
            alg, basis_element(alg, i), basis_element(alg, j), basis_element(alg, k)
        )
        if any(value):
            return CheckReport(
                ok=False,
                witness={
                    "kind": "jacobian",
                    "indices": (i, j, k),
                    "residual": value,
                },
            )
    return CheckReport(ok=True)


# ---------------------------------------------------------------------------
# subspace machinery


def subalgebra_closure(alg: Algebra, generators: Subspace) -> Subspace:
    """Smallest multiplication-closed subspace containing the generators."""
    if generators.ambient_dim != alg.dim:
        raise ValueError("generator ambient dimension does not match algebra")
    current = generators
    while True:
        rows = list(current.rows())
        products = [
            multiply(alg, u, v) for u in rows for v in rows
        ]
        grown = Subspace.from_rows(alg.dim, rows + products)
        if grown.dim == current.dim:
            return current
        current = grown


def is_subalgebra(alg: Algebra, s: Subspace) -> bool:
    rows = s.rows()
    return all(s.contains(multiply(alg, u, v)) for u in rows for v in rows)


def is_ideal(alg: Algebra, s: Subspace) -> bool:
    """True iff the subspace absorbs multiplication on both sides."""
    rows = s.rows()
    for i in range(alg.dim):
        e = basis_element(alg, i)
        for v in rows:
            if not s.contains(multiply(alg, e, v)):
                return False
            if not s.contains(multiply(alg, v, e)):
                return False
    return True


def _square(alg: Algebra, s: Subspace) -> Subspace:
    rows = s.rows()
    return Subspace.from_rows(
        alg.dim, [multiply(alg, u, v) for u in rows for v in rows]
    )


def derived_series(alg: Algebra, s: Subspace) -> list[Subspace]:
    """Chain s, s^2, (s^2)^2, ... until it stabilizes.

    The series reaches the zero subspace exactly when s is solvable.
    Requires s to be closed under multiplication.
    """
    if not is_subalgebra(alg, s):
        raise ValueError("derived_series requires a multiplication-closed subspace")
    chain = [s]
    while True:
        nxt = _square(alg, chain[-1])
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)
        if nxt.dim == 0:
            return chain


def _flatten_matrix(m: Matrix) -> tuple[Fraction, ...]:
    return tuple(v for row in m.entries for v in row)


def multiplication_envelope_dim(alg: Algebra) -> int:
    """Dimension of the associative operator algebra generated by all
    left-multiplication operators.

    A full envelope (dimension dim^2) certifies that the algebra acts
    irreducibly on itself, hence is simple.
    """
    n = alg.dim
    if n == 0:
        return 0
    left_ops = [
        Matrix([[alg.gamma[i][j][k] for j in range(n)] for k in range(n)])
        for i in range(n)
    ]
    span = Subspace.from_rows(n * n, [_flatten_matrix(op) for op in left_ops])
    mats = [op for op in left_ops if not op.is_zero()]
    while True:
        new_mats = []
        for a in mats:
            for b in mats:
                p = a * b
                flat = _flatten_matrix(p)
                if not span.contains(flat):
                    span = span.sum(Subspace.from_rows(n * n, [flat]))
                    new_mats.append(p)
                    if span.dim == n * n:
                        return span.dim
        if not new_mats:
            return span.dim
        mats.extend(new_mats)


def tensor_centralizer(alg: Algebra) -> Subspace:
    """All l in A(x)A with [l, a] = 0 for every a, as a subspace of Q^(n^2).

    The action is slot-wise right multiplication extended linearly:
    [x(x)y, a] = xa(x)y + x(x)ya.  Coordinates flatten e_i(x)e_j to i*n + j.
    """
    n = alg.dim
    rows = []
    for c in range(n):
        # constraint block: for each output pair (p, q), a linear form in l
        block = [[Fraction(0)] * (n * n) for _ in range(n * n)]
        for i in range(n):
            for j in range(n):
                col = i * n + j
                for k in range(n):
                    coeff = alg.gamma[i][c][k]
                    if coeff:
                        block[k * n + j][col] += coeff
                    coeff = alg.gamma[j][c][k]
                    if coeff:
                        block[i * n + k][col] += coeff
        rows.extend(block)
    return nullspace_of_rows(rows, n * n)


def nullspace_of_rows(rows, ncols: int) -> Subspace:
    from .linalg import nullspace

    nonzero = [row for row in rows if any(row)]
    if not nonzero:
        return Subspace.full(ncols)
    return nullspace(Matrix(nonzero))


def restrict_to_subspace(
    alg: Algebra, s: Subspace, labels: Optional[Sequence[str]] = None
) -> Algebra:
    """The algebra induced on a multiplication-closed subspace, in its basis.

    Raises when a product of basis rows escapes the subspace.
    """
    rows = s.rows()
    m = len(rows)
    table = [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]
    for a in range(m):
        for b in range(m):
            prod = multiply(alg, rows[a], rows[b])
            coords = s.coordinates(prod)
            if coords is None:
                raise ValueError(
                    f"subspace is not closed: product of rows {a} and {b} escapes"
                )
            table[a][b] = list(coords)
    if labels is None:
        labels = [f"v{i}" for i in range(m)]
    return Algebra(m, labels, table)


# ---------------------------------------------------------------------------
# randomness (seeded, reproducible)


def random_element(rng: random.Random, dim: int) -> tuple[Fraction, ...]:
    """Small random rational coordinates; exercises denominators too."""
    return tuple(
        Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(dim)
    )


def random_anticommutative_algebra(rng: random.Random, dim: int) -> Algebra:
    """Random anticommutative structure constants with small entries."""
    table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(dim):
                value = Fraction(rng.randint(-2, 2))
                table[i][j][k] = value
                table[j][i][k] = -value
    return Algebra(dim, [f"e{i}" for i in range(dim)], table)


# ---------------------------------------------------------------------------
# serialization


def algebra_to_dict(alg: Algebra) -> dict:
    products = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in range(alg.dim):
                value = alg.gamma[i][j][k]
                if value:
                    products.append([i, j, k, format_rational(value)])
    return {"dim": alg.dim, "basis": list(alg.basis), "products": products}


def algebra_from_dict(data: dict) -> Algebra:
    dim = int(data["dim"])
    basis = data.get("basis") or [f"e{i}" for i in range(dim)]
    products = [
        (int(i), int(j), int(k), parse_rational(str(value)))
        for i, j, k, value in data.get("products", [])
    ]
    for i, j, k, _ in products:
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise ValueError(f"product entry ({i},{j},{k}) out of range for dim {dim}")
    return Algebra.from_products(dim, basis, products)


def save_algebra(alg: Algebra, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(algebra_to_dict(alg), handle, indent=1, sort_keys=True)
        handle.write("\n")


def load_algebra(path) -> Algebra:
    with open(path, "r", encoding="utf-8") as handle:
        return algebra_from_dict(json.load(handle))
