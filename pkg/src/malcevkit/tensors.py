"""Order-2 and order-3 tensors over an algebra, and their residual calculus.

Tensors are dense coefficient arrays over the exact rationals.  The module
provides the two flips (transposition of a 2-tensor, cyclic rotation of a
3-tensor), slot-wise multiplication actions — including the formal-unit slot
action used by non-unital Yang-Baxter calculus — the Yang-Baxter residual in
both its loop form and its matrix form, the determinant/trace residual for
the nondegenerate case, and the five-term multiplication obstruction for
antisymmetric tensors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .algebra import Algebra
from .linalg import Matrix, as_fraction, format_rational, parse_rational

__all__ = [
    "Tensor2",
    "Tensor3",
    "UNIT",
    "FormalUnit",
    "tau",
    "xi",
    "split_symmetric",
    "derivation_action2",
    "derivation_action3",
    "slot_action",
    "slot_multiply2",
    "slot_multiply3",
    "cybe_residual",
    "um_residual",
    "gamma_matrices",
    "cybe_matrix_residual",
    "det_trace_residual",
    "DetTraceReport",
    "tensor2_to_dict",
    "tensor2_from_dict",
    "tensor3_to_dict",
    "tensor3_from_dict",
]


class Tensor2:
    """Element of A(x)A: dense dim x dim coefficient array.

    The coefficient matrix of ``t = sum c_ij e_i(x)e_j`` is exactly the
    matrix handed to the matrix-form residuals.
    """

    __slots__ = ("dim", "coeff")

    def __init__(self, dim: int, coeff):
        rows = tuple(tuple(as_fraction(c) for c in row) for row in coeff)
        if len(rows) != dim or any(len(row) != dim for row in rows):
            raise ValueError("coefficient array shape does not match dim")
        self.dim = dim
        self.coeff = rows

    @classmethod
    def zero(cls, dim: int) -> "Tensor2":
        return cls(dim, [[Fraction(0)] * dim for _ in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable) -> "Tensor2":
        coeff = [[Fraction(0)] * dim for _ in range(dim)]
        for i, j, value in entries:
            coeff[i][j] += as_fraction(value)
        return cls(dim, coeff)

    def matrix(self) -> Matrix:
        return Matrix(self.coeff)

    def entries(self) -> list[tuple[int, int, Fraction]]:
        return [
            (i, j, c)
            for i, row in enumerate(self.coeff)
            for j, c in enumerate(row)
            if c
        ]

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.coeff for c in row)

    def add(self, other: "Tensor2", scale=1) -> "Tensor2":
        s = as_fraction(scale)
        return Tensor2(
            self.dim,
            [
                [a + s * b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.coeff, other.coeff)
            ],
        )

    def scaled(self, scale) -> "Tensor2":
        s = as_fraction(scale)
        return Tensor2(self.dim, [[s * c for c in row] for row in self.coeff])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tensor2)
            and self.dim == other.dim
            and self.coeff == other.coeff
        )

    def __hash__(self):
        return hash((self.dim, self.coeff))

    def __repr__(self) -> str:
        body = ", ".join(
            f"({i},{j}): {format_rational(c)}" for i, j, c in self.entries()
        )
        return f"Tensor2(dim={self.dim}, {{{body or '0'}}})"


class Tensor3:
    """Element of A(x)A(x)A: dense dim^3 coefficient array."""

    __slots__ = ("dim", "coeff")

    def __init__(self, dim: int, coeff):
        cube = tuple(
            tuple(tuple(as_fraction(c) for c in row) for row in plane)
            for plane in coeff
        )
        if len(cube) != dim or any(
            len(plane) != dim or any(len(row) != dim for row in plane)
            for plane in cube
        ):
            raise ValueError("coefficient array shape does not match dim")
        self.dim = dim
        self.coeff = cube

    @classmethod
    def zero(cls, dim: int) -> "Tensor3":
        return cls(
            dim,
            [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)],
        )

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable) -> "Tensor3":
        coeff = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, value in entries:
            coeff[i][j][k] += as_fraction(value)
        return cls(dim, coeff)

    def entries(self) -> list[tuple[int, int, int, Fraction]]:
        return [
            (i, j, k, c)
            for i, plane in enumerate(self.coeff)
            for j, row in enumerate(plane)
            for k, c in enumerate(row)
            if c
        ]

    def is_zero(self) -> bool:
        return all(c == 0 for plane in self.coeff for row in plane for c in row)

    def add(self, other: "Tensor3", scale=1) -> "Tensor3":
        s = as_fraction(scale)
        return Tensor3(
            self.dim,
            [
                [
                    [a + s * b for a, b in zip(ra, rb)]
                    for ra, rb in zip(pa, pb)
                ]
                for pa, pb in zip(self.coeff, other.coeff)
            ],
        )

    def scaled(self, scale) -> "Tensor3":
        s = as_fraction(scale)
        return Tensor3(
            self.dim,
            [[[s * c for c in row] for row in plane] for plane in self.coeff],
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tensor3)
            and self.dim == other.dim
            and self.coeff == other.coeff
        )

    def __repr__(self) -> str:
        body = ", ".join(
            f"({i},{j},{k}): {format_rational(c)}"
            for i, j, k, c in self.entries()
        )
        return f"Tensor3(dim={self.dim}, {{{body or '0'}}})"


# ---------------------------------------------------------------------------
# flips and symmetrization


def tau(t: Tensor2) -> Tensor2:
    """Leg swap: sum a_i(x)b_i -> sum b_i(x)a_i (matrix transpose)."""
    return Tensor2(
        t.dim,
        [[t.coeff[j][i] for j in range(t.dim)] for i in range(t.dim)],
    )


def xi(t: Tensor3) -> Tensor3:
    """Cyclic rotation: a(x)b(x)c -> b(x)c(x)a; xi^3 = identity."""
    n = t.dim
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j, k, c in t.entries():
        out[j][k][i] += c
    return Tensor3(n, out)


def split_symmetric(t: Tensor2) -> tuple[Tensor2, Tensor2]:
    """(s, n) with s = (t + tau(t))/2 symmetric, n = (t - tau(t))/2."""
    tt = tau(t)
    half = Fraction(1, 2)
    return t.add(tt).scaled(half), t.add(tt, -1).scaled(half)


# ---------------------------------------------------------------------------
# actions


def derivation_action2(alg: Algebra, t: Tensor2, a: Sequence) -> Tensor2:
    """[t, a]: slot-wise right multiplication, summed over both slots."""
    return slot_multiply2(alg, t, 0, a, "right").add(
        slot_multiply2(alg, t, 1, a, "right")
    )


def derivation_action3(alg: Algebra, t: Tensor3, a: Sequence) -> Tensor3:
    """[t, a] on a 3-tensor: right multiplication summed over the 3 slots."""
    out = slot_multiply3(alg, t, 0, a, "right")
    out = out.add(slot_multiply3(alg, t, 1, a, "right"))
    return out.add(slot_multiply3(alg, t, 2, a, "right"))


def slot_multiply2(
    alg: Algebra, t: Tensor2, slot: int, vector: Sequence, side: str
) -> Tensor2:
    """Multiply one slot of a 2-tensor by an element, left or right."""
    n = t.dim
    vec = tuple(as_fraction(c) for c in vector)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i, j, c in t.entries():
        old = (i, j)[slot]
        for m, cm in enumerate(vec):
            if not cm:
                continue
            prod = alg.gamma[old][m] if side == "right" else alg.gamma[m][old]
            for k in range(n):
                if prod[k]:
                    if slot == 0:
                        out[k][j] += c * cm * prod[k]
                    else:
                        out[i][k] += c * cm * prod[k]
    return Tensor2(n, out)


def slot_multiply3(
    alg: Algebra, t: Tensor3, slot: int, vector: Sequence, side: str
) -> Tensor3:
    """Multiply one slot of a 3-tensor by an element, left or right."""
    n = t.dim
    vec = tuple(as_fraction(c) for c in vector)
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j, k, c in t.entries():
        idx = [i, j, k]
        old = idx[slot]
        for m, cm in enumerate(vec):
            if not cm:
                continue
            prod = alg.gamma[old][m] if side == "right" else alg.gamma[m][old]
            for p in range(n):
                if prod[p]:
                    idx[slot] = p
                    out[idx[0]][idx[1]][idx[2]] += c * cm * prod[p]
        idx[slot] = old
    return Tensor3(n, out)


class FormalUnit:
    """Formal identity slot factor: leaves its tensor slot untouched.

    It never multiplies into the algebra, so slot actions stay well defined
    for non-unital algebras.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNIT"


UNIT = FormalUnit()

SlotFactor = Union[FormalUnit, Sequence]


def slot_action(
    alg: Algebra, t: Tensor3, u1: SlotFactor, u2: SlotFactor, u3: SlotFactor
) -> Tensor3:
    """Right-multiply each slot by its factor; the formal unit is skipped."""
    out = t
    for slot, factor in enumerate((u1, u2, u3)):
        if isinstance(factor, FormalUnit):
            continue
        out = slot_multiply3(alg, out, slot, factor, "right")
    return out


# ---------------------------------------------------------------------------
# Yang-Baxter residuals


def cybe_residual(alg: Algebra, r: Tensor2) -> Tensor3:
    """Classical Yang-Baxter residual of r = sum a_i(x)b_i, computed as the
    non-unital triple sum

        sum_ij  a_i a_j (x) b_i (x) b_j  -  a_i (x) a_j b_i (x) b_j
              + a_i (x) a_j (x) b_i b_j .

    r solves the equation iff the result is identically zero.
    """
    if r.dim != alg.dim:
        raise ValueError("tensor dimension does not match algebra")
    n = alg.dim
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    terms = r.entries()
    for p, q, c1 in terms:
        for u, v, c2 in terms:
            c = c1 * c2
            prod = alg.gamma[p][u]
            for k in range(n):
                if prod[k]:
                    out[k][q][v] += c * prod[k]
            prod = alg.gamma[u][q]
            for k in range(n):
                if prod[k]:
                    out[p][k][v] -= c * prod[k]
            prod = alg.gamma[q][v]
            for k in range(n):
                if prod[k]:
                    out[p][u][k] += c * prod[k]
    return Tensor3(n, out)


def um_residual(
    alg: Algebra,
    r: Tensor2,
    a: Sequence,
    b: Sequence,
    slot_variant: str = "statement",
) -> Tensor3:
    """Five-term obstruction S(a, b) attached to an antisymmetric tensor.

    With C the Yang-Baxter residual of r and all slot factors acting by
    right multiplication:

        S(a,b) = (C(1(x)b(x)1))(1(x)a(x)1) - C(ab(x)1(x)1)
                 - (C(1(x)1(x)a))(1(x)1(x)b) - C(b(x)1(x)a) + C(a(x)b(x)1)

    ``slot_variant="proof"`` moves the first term's pair of actions from the
    middle slot to the first slot: (C(b(x)1(x)1))(a(x)1(x)1).  The two
    variants genuinely differ; both are exposed and the default is
    "statement".

    Requires tau(r) == -r.
    """
    if slot_variant not in ("statement", "proof"):
        raise ValueError("slot_variant must be 'statement' or 'proof'")
    if not tau(r).add(r).is_zero():
        raise ValueError("um_residual requires an antisymmetric tensor")
    c = cybe_residual(alg, r)
    ab = _multiply_elements(alg, a, b)
    if slot_variant == "statement":
        s1 = slot_multiply3(
            alg, slot_multiply3(alg, c, 1, b, "right"), 1, a, "right"
        )
    else:
        s1 = slot_multiply3(
            alg, slot_multiply3(alg, c, 0, b, "right"), 0, a, "right"
        )
    s2 = slot_multiply3(alg, c, 0, ab, "right")
    s3 = slot_multiply3(alg, slot_multiply3(alg, c, 2, a, "right"), 2, b, "right")
    s4 = slot_multiply3(alg, slot_multiply3(alg, c, 0, b, "right"), 2, a, "right")
    s5 = slot_multiply3(alg, slot_multiply3(alg, c, 0, a, "right"), 1, b, "right")
    return s1.add(s2, -1).add(s3, -1).add(s4, -1).add(s5)


def _multiply_elements(alg: Algebra, u: Sequence, v: Sequence):
    from .algebra import multiply

    return multiply(alg, u, v)


# ---------------------------------------------------------------------------
# matrix-form residuals


def gamma_matrices(alg: Algebra) -> list[Matrix]:
    """The structure-constant matrices: (G_k)[i][j] = gamma[i][j][k]."""
    n = alg.dim
    return [
        Matrix([[alg.gamma[i][j][k] for j in range(n)] for i in range(n)])
        for k in range(n)
    ]


def cybe_matrix_residual(lam: Matrix, gammas: Sequence[Matrix]) -> Tensor3:
    """Matrix route to the Yang-Baxter residual coordinates.

    For the coefficient matrix L of a 2-tensor, entry (k, s, n) is

        (L^T G_k L)_{sn} + (L G_s L)_{kn} + (L G_n L^T)_{ks}

    and the result's zero-set coincides with the loop route's
    ``cybe_residual`` (the coordinates of the same 3-tensor).
    """
    n = lam.rows
    if lam.cols != n or len(gammas) != n:
        raise ValueError("matrix residue needs a square matrix and n matrices")
    lt = lam.transpose()
    first = [lt * g * lam for g in gammas]
    second = [lam * g * lam for g in gammas]
    third = [lam * g * lt for g in gammas]
    out = [
        [
            [
                first[k][s, m] + second[s][k, m] + third[m][k, s]
                for m in range(n)
            ]
            for s in range(n)
        ]
        for k in range(n)
    ]
    return Tensor3(n, out)


@dataclass(frozen=True)
class DetTraceReport:
    """Values det(L)*bracket_k plus the two factors separately."""

    values: tuple[Fraction, ...]
    determinant: Fraction
    brackets: tuple[Fraction, ...]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)


def det_trace_residual(lam: Matrix, gammas: Sequence[Matrix]) -> DetTraceReport:
    """The k-indexed values det(L) * (sum_l 2(L G_l)_{kl} + (L^T G_k)_{ll}).

    The values vanish identically whenever L is singular; for nonsingular L
    the bracket factor is the binding constraint.
    """
    from .linalg import determinant_adjugate

    n = lam.rows
    if lam.cols != n or len(gammas) != n:
        raise ValueError("matrix residue needs a square matrix and n matrices")
    det, _ = determinant_adjugate(lam)
    lt = lam.transpose()
    prods = [lam * g for g in gammas]
    traces = [lt * g for g in gammas]
    brackets = []
    for k in range(n):
        acc = Fraction(0)
        for l in range(n):
            acc += 2 * prods[l][k, l]
            acc += traces[k][l, l]
        brackets.append(acc)
    return DetTraceReport(
        values=tuple(det * b for b in brackets),
        determinant=det,
        brackets=tuple(brackets),
    )


# ---------------------------------------------------------------------------
# serialization


def tensor2_to_dict(t: Tensor2) -> dict:
    return {
        "dim": t.dim,
        "entries": [[i, j, format_rational(c)] for i, j, c in t.entries()],
    }


def tensor2_from_dict(data: dict) -> Tensor2:
    dim = int(data["dim"])
    return Tensor2.from_entries(
        dim,
        [
            (int(i), int(j), parse_rational(str(value)))
            for i, j, value in data.get("entries", [])
        ],
    )


def tensor3_to_dict(t: Tensor3) -> dict:
    return {
        "dim": t.dim,
        "entries": [
            [i, j, k, format_rational(c)] for i, j, k, c in t.entries()
        ],
    }


def tensor3_from_dict(data: dict) -> Tensor3:
    dim = int(data["dim"])
    return Tensor3.from_entries(
        dim,
        [
            (int(i), int(j), int(k), parse_rational(str(value)))
            for i, j, k, value in data.get("entries", [])
        ],
    )
