"""Comultiplications, dual algebras, Drinfeld doubles, and certificates.

A :class:`Comultiplication` is a linear map from an algebra to its tensor
square.  Dualizing it yields the dual algebra on functionals; gluing the
algebra and its dual with the four coregular actions yields the Drinfeld
double, carried here with its canonical symmetric pairing.

The module exposes the definition-level bialgebra checker (membership of
the double in the Malcev variety) plus the two element-wise compatibility
residuals that characterize it, and the structural certificates for the
two classification branches: a self-orthogonal square-zero radical in the
triangular case, and a two-ideal decomposition in the semisimple case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import (
    Algebra,
    CheckReport,
    basis_element,
    check_anticommutative,
    check_malcev,
    is_ideal,
    is_subalgebra,
    multiplication_envelope_dim,
    multiply,
    restrict_to_subspace,
)
from .linalg import (
    Matrix,
    Subspace,
    as_fraction,
    format_rational,
    nullspace,
    parse_rational,
)
from .tensors import (
    Tensor2,
    Tensor3,
    derivation_action2,
    slot_multiply2,
    slot_multiply3,
    tau,
)

__all__ = [
    "Comultiplication",
    "DrinfeldDouble",
    "dual_algebra",
    "coboundary_delta",
    "reconstructed_coboundary",
    "bimodule_actions",
    "drinfeld_double",
    "form_q_report",
    "is_malcev_bialgebra",
    "dual_malcev_report",
    "compat1_residual",
    "compat2_residual",
    "compat1_sweep",
    "compat2_sweep",
    "dual_to_primal_map",
    "graph_subspace",
    "radical_certificate",
    "SemisimpleDecomposition",
    "semisimple_decomposition",
    "ideal_projection_V",
    "comultiplication_to_dict",
    "comultiplication_from_dict",
]


class Comultiplication:
    """Linear map A -> A(x)A stored as one 2-tensor per basis element."""

    __slots__ = ("dim", "d")

    def __init__(self, dim: int, images: Sequence[Tensor2]):
        images = tuple(images)
        if len(images) != dim or any(t.dim != dim for t in images):
            raise ValueError("comultiplication images have wrong shape")
        self.dim = dim
        self.d = images

    @classmethod
    def zero(cls, dim: int) -> "Comultiplication":
        return cls(dim, [Tensor2.zero(dim) for _ in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable) -> "Comultiplication":
        coeff = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for a, j, k, value in entries:
            coeff[a][j][k] += as_fraction(value)
        return cls(dim, [Tensor2(dim, plane) for plane in coeff])

    def apply(self, vector: Sequence) -> Tensor2:
        """Image of a general element, by linearity."""
        vec = tuple(as_fraction(c) for c in vector)
        if len(vec) != self.dim:
            raise ValueError("vector length does not match comultiplication")
        out = Tensor2.zero(self.dim)
        for a, c in enumerate(vec):
            if c:
                out = out.add(self.d[a], c)
        return out

    def scaled(self, scale) -> "Comultiplication":
        return Comultiplication(self.dim, [t.scaled(scale) for t in self.d])

    def entries(self) -> list[tuple[int, int, int, Fraction]]:
        return [
            (a, j, k, c)
            for a, t in enumerate(self.d)
            for j, k, c in t.entries()
        ]

    def is_zero(self) -> bool:
        return all(t.is_zero() for t in self.d)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Comultiplication)
            and self.dim == other.dim
            and all(a.coeff == b.coeff for a, b in zip(self.d, other.d))
        )

    def __repr__(self) -> str:
        return f"Comultiplication(dim={self.dim}, {len(self.entries())} entries)"


# ---------------------------------------------------------------------------
# dual algebra and coboundary comultiplications


def dual_algebra(delta: Comultiplication, labels: Optional[Sequence[str]] = None) -> Algebra:
    """The algebra on functionals with product <fg, a> = <f(x)g, Delta(a)>.

    Structure constants on the dual basis: (e_i* e_j*)(e_a) = d[a][i][j].
    """
    n = delta.dim
    table = [
        [
            [delta.d[a].coeff[i][j] for a in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    if labels is None:
        labels = [f"e{i}*" for i in range(n)]
    return Algebra(n, labels, table)


def coboundary_delta(alg: Algebra, r: Tensor2) -> Comultiplication:
    """The coboundary comultiplication a -> [r, a] (slot-wise right action)."""
    if r.dim != alg.dim:
        raise ValueError("tensor dimension does not match algebra")
    return Comultiplication(
        alg.dim,
        [
            derivation_action2(alg, r, basis_element(alg, a))
            for a in range(alg.dim)
        ],
    )


def reconstructed_coboundary(alg: Algebra, r: Tensor2) -> Comultiplication:
    """Alternative route to the coboundary map for antisymmetric r:

        a  ->  sum_i (a_i a)(x)b_i + b_i(x)(a a_i)   for r = sum a_i(x)b_i.

    For antisymmetric r over an anticommutative algebra this agrees with
    ``coboundary_delta`` coefficient-for-coefficient; it is the form in
    which the comultiplication is read back off a radical-complement graph.
    """
    n = alg.dim
    images = []
    for a in range(n):
        ea = basis_element(alg, a)
        coeff = [[Fraction(0)] * n for _ in range(n)]
        for p, q, c in r.entries():
            left = multiply(alg, basis_element(alg, p), ea)
            for k, ck in enumerate(left):
                if ck:
                    coeff[k][q] += c * ck
            right = multiply(alg, ea, basis_element(alg, p))
            for k, ck in enumerate(right):
                if ck:
                    coeff[q][k] += c * ck
        images.append(Tensor2(n, coeff))
    return Comultiplication(n, images)


# ---------------------------------------------------------------------------
# coregular actions and the double


def bimodule_actions(
    alg: Algebra, delta: Comultiplication, f: Sequence, a: Sequence
) -> tuple:
    """The four coregular actions between A and A*.

    Returns ``(f > a, a < f, f <| a, a |> f)`` where, writing <,> for the
    canonical pairing and Delta(a) = sum a1 (x) a2:

    * ``f > a  = sum a1 <f, a2>``          (primal vector)
    * ``a < f  = sum <f, a1> a2``          (primal vector)
    * ``<f <| a, b> = <f, a b>``           (dual vector)
    * ``<a |> f, b> = <f, b a>``           (dual vector)
    """
    n = alg.dim
    fv = tuple(as_fraction(c) for c in f)
    av = tuple(as_fraction(c) for c in a)
    da = delta.apply(av)
    to_a = tuple(
        sum((da.coeff[j][k] * fv[k] for k in range(n)), Fraction(0))
        for j in range(n)
    )
    from_a = tuple(
        sum((fv[j] * da.coeff[j][k] for j in range(n)), Fraction(0))
        for k in range(n)
    )
    f_hooked = tuple(
        _pair(fv, multiply(alg, av, basis_element(alg, b))) for b in range(n)
    )
    a_hooked = tuple(
        _pair(fv, multiply(alg, basis_element(alg, b), av)) for b in range(n)
    )
    return to_a, from_a, f_hooked, a_hooked


def _pair(f: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(f, v)), Fraction(0))


@dataclass(frozen=True)
class DrinfeldDouble:
    """The 2n-dimensional double: primal block first, dual block second."""

    algebra: Algebra
    primal: Algebra
    delta: Comultiplication
    q: Matrix

    @property
    def n(self) -> int:
        return self.primal.dim

    def primal_block(self) -> Subspace:
        n, n2 = self.n, 2 * self.n
        return Subspace.from_rows(
            n2,
            [[Fraction(1 if j == i else 0) for j in range(n2)] for i in range(n)],
        )

    def dual_block(self) -> Subspace:
        n, n2 = self.n, 2 * self.n
        return Subspace.from_rows(
            n2,
            [
                [Fraction(1 if j == n + i else 0) for j in range(n2)]
                for i in range(n)
            ],
        )

    def q_value(self, u: Sequence, v: Sequence) -> Fraction:
        uv = tuple(as_fraction(c) for c in u)
        vv = tuple(as_fraction(c) for c in v)
        return _pair(self.q.apply(vv), uv)


def drinfeld_double(alg: Algebra, delta: Comultiplication) -> DrinfeldDouble:
    """Glue A and A* along the four coregular actions.

    Basis order: e_0..e_{n-1} primal, then the dual basis with labels
    suffixed "*".  The canonical pairing has Gram matrix [[0, I], [I, 0]].
    """
    if delta.dim != alg.dim:
        raise ValueError("comultiplication dimension does not match algebra")
    n = alg.dim
    nn = 2 * n
    table = [[[Fraction(0)] * nn for _ in range(nn)] for _ in range(nn)]
    # primal x primal: the original algebra
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[i][j][k] = alg.gamma[i][j][k]
    # dual x dual: the dual algebra
    for i in range(n):
        for j in range(n):
            for a in range(n):
                value = delta.d[a].coeff[i][j]
                if value:
                    table[n + i][n + j][n + a] = value
    # mixed products via the coregular actions
    for p in range(n):
        for j in range(n):
            # e_p . e_j* = (a < f) + (a |> f)
            dp = delta.d[p].coeff
            for k in range(n):
                if dp[j][k]:
                    table[p][n + j][k] += dp[j][k]
            for c in range(n):
                value = alg.gamma[c][p][j]
                if value:
                    table[p][n + j][n + c] += value
    for i in range(n):
        for q in range(n):
            # e_i* . e_q = (f > a) + (f <| a)
            dq = delta.d[q].coeff
            for u in range(n):
                if dq[u][i]:
                    table[n + i][q][u] += dq[u][i]
            for c in range(n):
                value = alg.gamma[q][c][i]
                if value:
                    table[n + i][q][n + c] += value
    labels = list(alg.basis) + [f"{b}*" for b in alg.basis]
    double = Algebra(nn, labels, table)
    gram = Matrix(
        [[Fraction(1 if abs(i - j) == n else 0) for j in range(nn)] for i in range(nn)]
    )
    return DrinfeldDouble(algebra=double, primal=alg, delta=delta, q=gram)


def form_q_report(dd: DrinfeldDouble) -> CheckReport:
    """Symmetry, nondegeneracy, and associativity of the canonical pairing."""
    q = dd.q
    nn = 2 * dd.n
    checks = {"symmetric": q == q.transpose()}
    if not checks["symmetric"]:
        return CheckReport(ok=False, witness={"kind": "symmetry"}, checks=checks)
    from .linalg import determinant_adjugate

    det, _ = determinant_adjugate(q)
    checks["nondegenerate"] = det != 0
    if not checks["nondegenerate"]:
        return CheckReport(
            ok=False, witness={"kind": "nondegeneracy"}, checks=checks
        )
    alg = dd.algebra
    checks["associative"] = True
    for i in range(nn):
        ei = basis_element(alg, i)
        for j in range(nn):
            ej = basis_element(alg, j)
            ij = multiply(alg, ei, ej)
            for k in range(nn):
                ek = basis_element(alg, k)
                lhs = dd.q_value(ij, ek)
                rhs = dd.q_value(ei, multiply(alg, ej, ek))
                if lhs != rhs:
                    checks["associative"] = False
                    return CheckReport(
                        ok=False,
                        witness={
                            "kind": "associativity",
                            "indices": (i, j, k),
                            "lhs": lhs,
                            "rhs": rhs,
                        },
                        checks=checks,
                    )
    return CheckReport(ok=True, checks=checks)


def is_malcev_bialgebra(
    alg: Algebra,
    delta: Comultiplication,
    samples: int = 200,
    seed: int = 0,
    double: Optional[DrinfeldDouble] = None,
) -> CheckReport:
    """Definition-level check: the double lies in the Malcev variety.

    Builds the double and verifies anticommutativity (exhaustive) and the
    Malcev identities (exhaustive four-linear sweep plus seeded sampling of
    the defining identity).  The caller is expected to hand in a Malcev
    algebra; only the double is re-verified here.  A prebuilt double may be
    passed to avoid reconstructing it.
    """
    dd = double if double is not None else drinfeld_double(alg, delta)
    anti = check_anticommutative(dd.algebra)
    if not anti.ok:
        return CheckReport(
            ok=False,
            witness=dict(anti.witness, stage="double-anticommutative"),
            checks={"anticommutative": False, "malcev": None},
        )
    mal = check_malcev(dd.algebra, samples=samples, seed=seed)
    if not mal.ok:
        return CheckReport(
            ok=False,
            witness=dict(mal.witness, stage="double-malcev"),
            checks={"anticommutative": True, "malcev": False},
        )
    return CheckReport(ok=True, checks={"anticommutative": True, "malcev": True})


def dual_malcev_report(
    delta: Comultiplication, samples: int = 200, seed: int = 0
) -> CheckReport:
    """Anticommutativity plus Malcev identities of the dual algebra."""
    dual = dual_algebra(delta)
    anti = check_anticommutative(dual)
    if not anti.ok:
        return CheckReport(
            ok=False,
            witness=dict(anti.witness, stage="dual-anticommutative"),
            checks={"anticommutative": False, "malcev": None},
        )
    mal = check_malcev(dual, samples=samples, seed=seed)
    if not mal.ok:
        return CheckReport(
            ok=False,
            witness=dict(mal.witness, stage="dual-malcev"),
            checks={"anticommutative": True, "malcev": False},
        )
    return CheckReport(ok=True, checks={"anticommutative": True, "malcev": True})


# ---------------------------------------------------------------------------
# element-wise compatibility residuals


def compat1_residual(
    alg: Algebra,
    delta: Comultiplication,
    a: Sequence,
    b: Sequence,
    c: Sequence,
) -> Tensor2:
    """First compatibility residual (trilinear, 2-tensor valued).

    Derived by expanding the four-linear Malcev identity on the double with
    one functional and three algebra elements and projecting onto the
    primal block.  Writing D for the comultiplication and using slot
    notation (slot index, factor, side), the residual is

        D(a)(b r0)(c r0) + D(b)(c r0)(a l1) + D(c)(b l1)(a l1)
        + tau(D((ab)c)) + tau(D(bc))(a r0) + D(a)(bc r1)
        + tau(D(c))(a r0)(b r0) + D(a)(b r0)(c r1) + D(b)(a l1)(c r1)
        - D(b)(ac r0) - D(ac)(b l1)

    where ``r0`` = right multiplication on the first slot, ``l1`` = left
    multiplication on the second slot, and so on.  It vanishes for all
    triples exactly when the primal-block obstruction of the double does.
    """
    av = tuple(as_fraction(x) for x in a)
    bv = tuple(as_fraction(x) for x in b)
    cv = tuple(as_fraction(x) for x in c)
    da, db, dc = delta.apply(av), delta.apply(bv), delta.apply(cv)
    ab = multiply(alg, av, bv)
    bc = multiply(alg, bv, cv)
    ac = multiply(alg, av, cv)

    t1 = slot_multiply2(alg, slot_multiply2(alg, da, 0, bv, "right"), 0, cv, "right")
    t2 = slot_multiply2(alg, slot_multiply2(alg, db, 0, cv, "right"), 1, av, "left")
    t3 = slot_multiply2(alg, slot_multiply2(alg, dc, 1, bv, "left"), 1, av, "left")
    t4 = tau(delta.apply(multiply(alg, ab, cv)))
    t5 = slot_multiply2(alg, tau(delta.apply(bc)), 0, av, "right")
    t6 = slot_multiply2(alg, da, 1, bc, "right")
    t7 = slot_multiply2(alg, slot_multiply2(alg, tau(dc), 0, av, "right"), 0, bv, "right")
    t8 = slot_multiply2(alg, slot_multiply2(alg, da, 0, bv, "right"), 1, cv, "right")
    t9 = slot_multiply2(alg, slot_multiply2(alg, db, 1, av, "left"), 1, cv, "right")
    t10 = slot_multiply2(alg, db, 0, ac, "right")
    t11 = slot_multiply2(alg, delta.apply(ac), 1, bv, "left")

    out = t1
    for term in (t2, t3, t4, t5, t6, t7, t8, t9):
        out = out.add(term)
    return out.add(t10, -1).add(t11, -1)


def _d_otimes_1(delta: Comultiplication, t: Tensor2) -> Tensor3:
    n = t.dim
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for u, v, c in t.entries():
        for j, k, cc in delta.d[u].entries():
            out[j][k][v] += c * cc
    return Tensor3(n, out)


def _one_otimes_d(delta: Comultiplication, t: Tensor2) -> Tensor3:
    n = t.dim
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for u, v, c in t.entries():
        for j, k, cc in delta.d[v].entries():
            out[u][j][k] += c * cc
    return Tensor3(n, out)


def _swap23(t: Tensor3) -> Tensor3:
    n = t.dim
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j, k, c in t.entries():
        out[i][k][j] += c
    return Tensor3(n, out)


def _pair_contract(alg: Algebra, dp: Tensor2, dq: Tensor2) -> Tensor3:
    """(1 x tau x 1)(dp (x) dq), then multiply the last two legs."""
    n = dp.dim
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j, c1 in dp.entries():
        for k, l, c2 in dq.entries():
            c = c1 * c2
            prod = alg.gamma[j][l]
            for m in range(n):
                if prod[m]:
                    out[i][k][m] += c * prod[m]
    return Tensor3(n, out)


def compat2_residual(
    alg: Algebra, delta: Comultiplication, a: Sequence, b: Sequence
) -> Tensor3:
    """Second compatibility residual (bilinear, 3-tensor valued).

    Compares (1(x)D)D(ab) against the ten-term expansion in D(a), D(b),
    their composites with D, the slot actions of a and b, and the two
    terms that contract a pair of comultiplication legs back into the
    algebra.  Zero for all pairs on a bialgebra, nonzero with a witness
    otherwise.
    """
    av = tuple(as_fraction(x) for x in a)
    bv = tuple(as_fraction(x) for x in b)
    da, db = delta.apply(av), delta.apply(bv)
    lhs = _one_otimes_d(delta, delta.apply(multiply(alg, av, bv)))
    d_db = _one_otimes_d(delta, db)
    dd_b = _d_otimes_1(delta, db)
    dd_a = _d_otimes_1(delta, da)
    d_da = _one_otimes_d(delta, da)

    t1 = slot_multiply3(alg, d_db, 2, av, "left")
    t2 = _d_otimes_1(delta, slot_multiply2(alg, db, 0, av, "left"))
    t3 = _swap23(slot_multiply3(alg, dd_b, 2, av, "left"))
    t4 = _swap23(slot_multiply3(alg, dd_b, 0, av, "right"))
    t5 = slot_multiply3(alg, dd_a, 0, bv, "right")
    t6 = slot_multiply3(alg, dd_a, 2, bv, "right")
    t7 = _swap23(_d_otimes_1(delta, slot_multiply2(alg, da, 0, bv, "right")))
    t8 = slot_multiply3(alg, d_da, 1, bv, "left")
    t9 = _swap23(_pair_contract(alg, db, da))
    t10 = _pair_contract(alg, da, db)

    out = lhs.add(t1, -1).add(t2, -1).add(t3).add(t4, -1)
    out = out.add(t5, -1).add(t6, -1).add(t7).add(t8)
    return out.add(t9, -1).add(t10, -1)


def compat1_sweep(alg: Algebra, delta: Comultiplication) -> CheckReport:
    """First compatibility residual over all basis triples (exhaustive)."""
    n = alg.dim
    for a in range(n):
        ea = basis_element(alg, a)
        for b in range(n):
            eb = basis_element(alg, b)
            for c in range(n):
                residual = compat1_residual(alg, delta, ea, eb, basis_element(alg, c))
                if not residual.is_zero():
                    return CheckReport(
                        ok=False,
                        witness={
                            "kind": "compat1",
                            "indices": (a, b, c),
                            "residual": residual.entries(),
                        },
                    )
    return CheckReport(ok=True)


def compat2_sweep(alg: Algebra, delta: Comultiplication) -> CheckReport:
    """Second compatibility residual over all basis pairs (exhaustive)."""
    n = alg.dim
    for a in range(n):
        ea = basis_element(alg, a)
        for b in range(n):
            residual = compat2_residual(alg, delta, ea, basis_element(alg, b))
            if not residual.is_zero():
                return CheckReport(
                    ok=False,
                    witness={
                        "kind": "compat2",
                        "indices": (a, b),
                        "residual": residual.entries(),
                    },
                )
    return CheckReport(ok=True)


# ---------------------------------------------------------------------------
# dual-to-primal maps, graphs, and certificates


def dual_to_primal_map(
    alg: Algebra, delta: Comultiplication, t: Tensor2
) -> tuple[Matrix, CheckReport]:
    """The map f -> sum f(p_i) q_i for t = sum p_i (x) q_i, with its
    homomorphism report.

    The matrix sends the coordinate vector of a functional (on the dual
    basis) to element coordinates: column i is the image of e_i*.  The
    report checks phi(f g) == phi(f) phi(g) for all dual basis pairs, with
    the dual product taken from the supplied comultiplication.
    """
    if t.dim != alg.dim or delta.dim != alg.dim:
        raise ValueError("dimension mismatch in dual_to_primal_map")
    n = alg.dim
    phi = t.matrix().transpose()
    dual = dual_algebra(delta)
    witness = None
    for i in range(n):
        fi = phi.column(i)
        for j in range(n):
            fj = phi.column(j)
            product_coords = dual.gamma[i][j]  # f_i f_j on the dual basis
            lhs = phi.apply(product_coords)
            rhs = multiply(alg, fi, fj)
            if lhs != rhs:
                witness = {
                    "kind": "homomorphism",
                    "indices": (i, j),
                    "lhs": lhs,
                    "rhs": rhs,
                }
                break
        if witness:
            break
    return phi, CheckReport(ok=witness is None, witness=witness)


def graph_subspace(dd: DrinfeldDouble, phi: Matrix, sign: int) -> Subspace:
    """The subspace {f + sign * phi(f)} of the double, f over the dual block."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = dd.n
    if phi.rows != n or phi.cols != n:
        raise ValueError("phi must be n x n")
    rows = []
    for i in range(n):
        image = phi.column(i)
        row = [as_fraction(sign) * image[k] for k in range(n)]
        row += [Fraction(1 if j == i else 0) for j in range(n)]
        rows.append(row)
    return Subspace.from_rows(2 * n, rows)


def radical_certificate(dd: DrinfeldDouble, s: Subspace) -> CheckReport:
    """Five-way certificate for a square-zero self-orthogonal radical.

    Checks: s is an ideal of the double; s.s == 0; s equals its orthogonal
    complement under the canonical pairing; dim s == n; s meets the primal
    block trivially.
    """
    alg = dd.algebra
    checks = {}
    witness = None

    checks["ideal"] = is_ideal(alg, s)
    if not checks["ideal"] and witness is None:
        witness = {"kind": "not-an-ideal"}

    rows = s.rows()
    square_zero = True
    for u in rows:
        for v in rows:
            if any(multiply(alg, u, v)):
                square_zero = False
                break
        if not square_zero:
            break
    checks["square_zero"] = square_zero
    if not square_zero and witness is None:
        witness = {"kind": "nonzero-square"}

    perp = s.orthogonal_complement(dd.q)
    checks["self_orthogonal"] = perp == s
    if not checks["self_orthogonal"] and witness is None:
        witness = {"kind": "not-self-orthogonal", "perp_dim": perp.dim}

    checks["dimension"] = s.dim == dd.n
    if not checks["dimension"] and witness is None:
        witness = {"kind": "wrong-dimension", "dim": s.dim}

    meet = s.intersection(dd.primal_block())
    checks["primal_intersection"] = meet.dim == 0
    if not checks["primal_intersection"] and witness is None:
        witness = {"kind": "meets-primal-block", "dim": meet.dim}

    return CheckReport(ok=all(checks.values()), witness=witness, checks=checks)


@dataclass(frozen=True)
class SemisimpleDecomposition:
    """Result of the two-ideal split of a double, with its certificate."""

    report: CheckReport
    double: DrinfeldDouble
    delta: Comultiplication
    m1: Subspace
    m2: Subspace


def semisimple_decomposition(alg: Algebra, r: Tensor2) -> SemisimpleDecomposition:
    """Split the double of (alg, -[r, .]) into the two graph ideals.

    M1 is the graph of the map built from t = r, M2 from t = -tau(r), both
    with sign -1.  The certificate checks: both are ideals, they intersect
    trivially, M1.M2 == 0, each has dimension n, each restricts to an
    algebra with full multiplication envelope (simplicity certificate), and
    the canonical pairing vanishes between them.
    """
    delta = coboundary_delta(alg, r).scaled(-1)
    dd = drinfeld_double(alg, delta)
    phi1, _ = dual_to_primal_map(alg, delta, r)
    phi2, _ = dual_to_primal_map(alg, delta, tau(r).scaled(-1))
    m1 = graph_subspace(dd, phi1, -1)
    m2 = graph_subspace(dd, phi2, -1)

    checks = {}
    witness = None
    checks["m1_ideal"] = is_ideal(dd.algebra, m1)
    checks["m2_ideal"] = is_ideal(dd.algebra, m2)
    if not (checks["m1_ideal"] and checks["m2_ideal"]) and witness is None:
        witness = {"kind": "not-an-ideal"}

    meet = m1.intersection(m2)
    checks["trivial_intersection"] = meet.dim == 0
    if not checks["trivial_intersection"] and witness is None:
        witness = {"kind": "ideals-intersect", "dim": meet.dim}

    cross_zero = True
    for u in m1.rows():
        for v in m2.rows():
            if any(multiply(dd.algebra, u, v)) or any(multiply(dd.algebra, v, u)):
                cross_zero = False
                break
        if not cross_zero:
            break
    checks["cross_products_zero"] = cross_zero
    if not cross_zero and witness is None:
        witness = {"kind": "nonzero-cross-product"}

    checks["dimensions"] = m1.dim == alg.dim and m2.dim == alg.dim
    if not checks["dimensions"] and witness is None:
        witness = {"kind": "wrong-dimension", "dims": (m1.dim, m2.dim)}

    q_zero = all(
        dd.q_value(u, v) == 0 for u in m1.rows() for v in m2.rows()
    )
    checks["pairing_orthogonal"] = q_zero
    if not q_zero and witness is None:
        witness = {"kind": "pairing-not-orthogonal"}

    envelopes_full = False
    if checks["dimensions"] and checks["m1_ideal"] and checks["m2_ideal"]:
        alg1 = restrict_to_subspace(dd.algebra, m1)
        alg2 = restrict_to_subspace(dd.algebra, m2)
        envelopes_full = (
            multiplication_envelope_dim(alg1) == alg.dim**2
            and multiplication_envelope_dim(alg2) == alg.dim**2
        )
    checks["envelopes_full"] = envelopes_full
    if not envelopes_full and witness is None:
        witness = {"kind": "envelope-not-full"}

    report = CheckReport(ok=all(checks.values()), witness=witness, checks=checks)
    return SemisimpleDecomposition(
        report=report, double=dd, delta=delta, m1=m1, m2=m2
    )


def ideal_projection_V(
    dd: DrinfeldDouble, u: Subspace
) -> tuple[Subspace, CheckReport]:
    """Project an ideal of the double onto the primal block.

    Returns V = {a : a + f in u for some functional f} as a subspace of the
    primal algebra, with a report verifying that V is a subalgebra and that
    the annihilator of V inside the dual block kills u from both sides.
    Raises when u is not an ideal.
    """
    if not is_ideal(dd.algebra, u):
        raise ValueError("ideal_projection_V requires an ideal of the double")
    n = dd.n
    v = Subspace.from_rows(n, [row[:n] for row in u.rows()])

    checks = {"subalgebra": is_subalgebra(dd.primal, v)}
    witness = None
    if not checks["subalgebra"]:
        witness = {"kind": "projection-not-a-subalgebra"}

    # annihilator of V inside the dual block, embedded into the double
    if v.dim:
        ann = nullspace(v.basis)
    else:
        ann = Subspace.full(n)
    embedded = Subspace.from_rows(
        2 * n, [[Fraction(0)] * n + list(row) for row in ann.rows()]
    )
    kills = True
    for f in embedded.rows():
        for w in u.rows():
            if any(multiply(dd.algebra, f, w)) or any(multiply(dd.algebra, w, f)):
                kills = False
                break
        if not kills:
            break
    checks["annihilator_kills_ideal"] = kills
    if not kills and witness is None:
        witness = {"kind": "annihilator-action-nonzero"}

    return v, CheckReport(ok=all(checks.values()), witness=witness, checks=checks)


# ---------------------------------------------------------------------------
# serialization


def comultiplication_to_dict(delta: Comultiplication) -> dict:
    return {
        "dim": delta.dim,
        "entries": [
            [a, j, k, format_rational(c)] for a, j, k, c in delta.entries()
        ],
    }


def comultiplication_from_dict(data: dict) -> Comultiplication:
    dim = int(data["dim"])
    return Comultiplication.from_entries(
        dim,
        [
            (int(a), int(j), int(k), parse_rational(str(value)))
            for a, j, k, value in data.get("entries", [])
        ],
    )
