"""The seven-dimensional simple non-Lie Malcev algebra and its pipelines.

Builds the standard-basis multiplication table, its distinguished
subalgebras (including the four-dimensional one on h, x, y', z), the
five-parameter family of Yang-Baxter solutions with fixed symmetric part,
symplectic-form checks, the inverse-Gram construction of antisymmetric
solutions from symplectic subalgebras, and the two staged classification
pipelines (triangular radical / semisimple two-ideal split) over the
Drinfeld double.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional, Sequence

from .algebra import (
    Algebra,
    CheckReport,
    algebra_from_dict,
    basis_element,
    check_anticommutative,
    check_malcev,
)
from .bialgebra import (
    Comultiplication,
    coboundary_delta,
    compat1_sweep,
    compat2_sweep,
    drinfeld_double,
    dual_malcev_report,
    dual_to_primal_map,
    graph_subspace,
    ideal_projection_V,
    is_malcev_bialgebra,
    radical_certificate,
    semisimple_decomposition,
)
from .linalg import Matrix, Subspace, as_fraction, determinant_adjugate, parse_rational
from .serialize import jsonable
from .tensors import (
    Tensor2,
    cybe_matrix_residual,
    cybe_residual,
    gamma_matrices,
    tau,
    tensor2_from_dict,
)

__all__ = [
    "BASIS_LABELS",
    "M4_INDICES",
    "build_m7",
    "build_subalgebra",
    "FamilyParams",
    "random_params",
    "family_r0",
    "family_r",
    "family_symmetric_part",
    "SymplecticForm",
    "symplectic_form",
    "symplectic_check",
    "r_from_symplectic",
    "StageReport",
    "PipelineReport",
    "pipeline_triangular",
    "pipeline_triangular_from_tensor",
    "pipeline_semisimple",
    "pipeline_semisimple_from_tensor",
    "data_path",
    "load_m7_fixture",
    "load_form_fixture",
    "load_family_zero_fixture",
]

BASIS_LABELS = ("h", "x", "x'", "y", "y'", "z", "z'")

#: indices of h, x, y', z — the 4-dimensional non-Lie subalgebra
M4_INDICES = (0, 1, 4, 5)

# products e_i e_j = sum_k c e_k, listed once; the mirror (j,i,-c) is implied
_M7_PRODUCTS = (
    (0, 1, 1, 2),  # h x  = 2x
    (0, 2, 2, -2),  # h x' = -2x'
    (0, 3, 3, 2),  # h y  = 2y
    (0, 4, 4, -2),  # h y' = -2y'
    (0, 5, 5, 2),  # h z  = 2z
    (0, 6, 6, -2),  # h z' = -2z'
    (1, 2, 0, 1),  # x x' = h
    (3, 4, 0, 1),  # y y' = h
    (5, 6, 0, 1),  # z z' = h
    (1, 3, 6, 2),  # x y  = 2z'
    (3, 5, 2, 2),  # y z  = 2x'
    (5, 1, 4, 2),  # z x  = 2y'
    (2, 4, 5, -2),  # x' y' = -2z
    (4, 6, 1, -2),  # y' z' = -2x
    (6, 2, 3, -2),  # z' x' = -2y
)


def build_m7() -> Algebra:
    """The 7-dimensional simple non-Lie Malcev algebra, basis h,x,x',y,y',z,z'."""
    products = []
    for i, j, k, c in _M7_PRODUCTS:
        products.append((i, j, k, Fraction(c)))
        products.append((j, i, k, Fraction(-c)))
    return Algebra.from_products(7, BASIS_LABELS, products)


def build_subalgebra(alg: Algebra, indices: Sequence[int]) -> tuple[Subspace, Algebra]:
    """Span of the selected basis indices plus the restricted product table.

    The restricted algebra keeps the given index order as its basis order.
    Raises when some product of selected basis elements escapes the span,
    naming the escaping product.
    """
    idx = list(indices)
    if len(set(idx)) != len(idx):
        raise ValueError("duplicate basis indices")
    if any(i < 0 or i >= alg.dim for i in idx):
        raise ValueError("basis index out of range")
    n = len(idx)
    selected = set(idx)
    table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for a, ia in enumerate(idx):
        for b, ib in enumerate(idx):
            prod = alg.gamma[ia][ib]
            for k, c in enumerate(prod):
                if c and k not in selected:
                    raise ValueError(
                        f"span{{{', '.join(alg.basis[i] for i in idx)}}} is not "
                        f"closed: {alg.basis[ia]}·{alg.basis[ib]} = "
                        f"{alg.format_element(prod)} escapes the span"
                    )
            for k, gi in enumerate(idx):
                table[a][b][k] = prod[gi]
    rows = [
        [Fraction(1 if j == i else 0) for j in range(alg.dim)] for i in sorted(idx)
    ]
    sub = Subspace.from_rows(alg.dim, rows)
    labels = [alg.basis[i] for i in idx]
    return sub, Algebra(n, labels, table)


# ---------------------------------------------------------------------------
# the five-parameter solution family


@dataclass(frozen=True)
class FamilyParams:
    """Free coefficients of the antisymmetric part of the solution family.

    The x(x)z coefficient is not free: it is forced to -2*a15.
    """

    a12: Fraction = Fraction(0)
    a15: Fraction = Fraction(0)
    a16: Fraction = Fraction(0)
    a25: Fraction = Fraction(0)
    a56: Fraction = Fraction(0)

    def as_fractions(self) -> "FamilyParams":
        return FamilyParams(
            as_fraction(self.a12),
            as_fraction(self.a15),
            as_fraction(self.a16),
            as_fraction(self.a25),
            as_fraction(self.a56),
        )


def random_params(rng: random.Random) -> FamilyParams:
    """Reproducible random rational parameter vector."""

    def coeff() -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 4))

    return FamilyParams(coeff(), coeff(), coeff(), coeff(), coeff())


def family_r0(p: FamilyParams) -> Tensor2:
    """Antisymmetric part of the family: the five free wedge terms plus the
    forced -2*a15 coefficient on x(x)z - z(x)x."""
    p = p.as_fractions()
    pairs = (
        (0, 1, p.a12),  # h ^ x
        (0, 4, p.a15),  # h ^ y'
        (0, 5, p.a16),  # h ^ z
        (1, 4, p.a25),  # x ^ y'
        (1, 5, -2 * p.a15),  # x ^ z, forced
        (4, 5, p.a56),  # y' ^ z
    )
    entries = []
    for i, j, c in pairs:
        if c:
            entries.append((i, j, c))
            entries.append((j, i, -c))
    return Tensor2.from_entries(7, entries)


def family_symmetric_part() -> Tensor2:
    """Fixed non-antisymmetric part: (1/4)h(x)h + x(x)x' + y'(x)y + z(x)z'."""
    return Tensor2.from_entries(
        7,
        [
            (0, 0, Fraction(1, 4)),
            (1, 2, Fraction(1)),
            (4, 3, Fraction(1)),
            (5, 6, Fraction(1)),
        ],
    )


def family_r(p: FamilyParams) -> Tensor2:
    """Full family member: antisymmetric part plus the fixed symmetric part."""
    return family_r0(p).add(family_symmetric_part())


# ---------------------------------------------------------------------------
# symplectic forms on subalgebras


@dataclass(frozen=True)
class SymplecticForm:
    """A bilinear form on a multiplication-closed span of basis vectors."""

    indices: tuple[int, ...]
    subspace: Subspace
    algebra: Algebra
    gram: Matrix


def symplectic_form(alg: Algebra, indices: Sequence[int], gram: Matrix) -> SymplecticForm:
    sub, restricted = build_subalgebra(alg, indices)
    n = len(tuple(indices))
    if gram.rows != n or gram.cols != n:
        raise ValueError("Gram matrix size does not match the subalgebra")
    return SymplecticForm(tuple(indices), sub, restricted, gram)


def symplectic_check(
    sub: Algebra, gram: Matrix, indices: Optional[Sequence[int]] = None
) -> CheckReport:
    """Skew-symmetry, nondegeneracy, and the cyclic identity on all triples.

    When the subalgebra is the distinguished 4-dimensional one (indices
    h, x, y', z), additionally reports the scalar test
    gram(y', h) == 2*gram(x, z) and asserts it is equivalent to the cyclic
    identity.
    """
    n = sub.dim
    if gram.rows != n or gram.cols != n:
        raise ValueError("Gram matrix size does not match the subalgebra")
    checks: dict = {}
    witness = None

    checks["skew"] = gram == gram.transpose().scaled(-1)
    if not checks["skew"]:
        witness = {"kind": "not-skew"}

    det, _ = determinant_adjugate(gram)
    checks["nondegenerate"] = det != 0
    if not checks["nondegenerate"] and witness is None:
        witness = {"kind": "degenerate"}

    cyclic_ok = True
    cyclic_witness = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                total = (
                    _form_value(sub, gram, sub.gamma[i][j], k)
                    + _form_value(sub, gram, sub.gamma[j][k], i)
                    + _form_value(sub, gram, sub.gamma[k][i], j)
                )
                if total != 0:
                    cyclic_ok = False
                    cyclic_witness = {
                        "kind": "cyclic-identity",
                        "indices": (i, j, k),
                        "value": total,
                    }
                    break
            if not cyclic_ok:
                break
        if not cyclic_ok:
            break
    checks["cyclic"] = cyclic_ok
    if not cyclic_ok and witness is None:
        witness = cyclic_witness

    if (
        indices is not None
        and tuple(indices) == M4_INDICES
        and checks["skew"]
        and checks["nondegenerate"]
    ):
        # local order (h, x, y', z): the single scalar test
        scalar_ok = gram[2, 0] == 2 * gram[1, 3]
        checks["scalar_condition"] = scalar_ok
        checks["scalar_equivalence"] = scalar_ok == cyclic_ok
        if not checks["scalar_equivalence"] and witness is None:
            witness = {"kind": "scalar-test-disagrees-with-cyclic-identity"}

    return CheckReport(ok=all(checks.values()), witness=witness, checks=checks)


def _form_value(sub: Algebra, gram: Matrix, vector: Sequence[Fraction], k: int) -> Fraction:
    return sum((vector[m] * gram[m, k] for m in range(sub.dim)), Fraction(0))


def r_from_symplectic(alg: Algebra, basis: Sequence[Sequence], gram: Matrix) -> Tensor2:
    """Antisymmetric solution from a symplectic subalgebra: the inverse-Gram
    tensor r = sum_{ij} (gram^-1)_{ij} b_i (x) b_j in ambient coordinates.

    The construction is verified, not trusted: the result must be
    antisymmetric and must annihilate the Yang-Baxter residual, otherwise a
    "correspondence-construction failed" error carries the witness.
    """
    rows = [tuple(as_fraction(c) for c in row) for row in basis]
    m = len(rows)
    if gram.rows != m or gram.cols != m:
        raise ValueError("Gram matrix size does not match the basis")
    det, adj = determinant_adjugate(gram)
    if det == 0:
        raise ValueError("correspondence-construction failed: degenerate form")
    inv = adj.transpose().scaled(Fraction(1) / det)
    n = alg.dim
    coeff = [[Fraction(0)] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            c = inv[i, j]
            if not c:
                continue
            for p, cp in enumerate(rows[i]):
                if not cp:
                    continue
                for q, cq in enumerate(rows[j]):
                    if cq:
                        coeff[p][q] += c * cp * cq
    r = Tensor2(n, coeff)
    if not tau(r).add(r).is_zero():
        raise ValueError(
            "correspondence-construction failed: result is not antisymmetric; "
            f"first asymmetric entry {tau(r).add(r).entries()[0]}"
        )
    residual = cybe_residual(alg, r)
    if not residual.is_zero():
        raise ValueError(
            "correspondence-construction failed: Yang-Baxter residual nonzero; "
            f"first entry {residual.entries()[0]}"
        )
    return r


# ---------------------------------------------------------------------------
# staged pipelines


@dataclass(frozen=True)
class StageReport:
    stage: str
    ok: bool
    witness: Optional[dict] = None

    def to_jsonable(self) -> dict:
        out = {"stage": self.stage, "ok": self.ok}
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        return out


@dataclass(frozen=True)
class PipelineReport:
    stages: tuple[StageReport, ...]

    @property
    def ok(self) -> bool:
        return all(stage.ok for stage in self.stages)

    def __bool__(self) -> bool:
        return self.ok

    def stage(self, name: str) -> Optional[StageReport]:
        for stage in self.stages:
            if stage.stage == name:
                return stage
        return None

    def to_jsonable(self) -> list[dict]:
        return [stage.to_jsonable() for stage in self.stages]


def _triangular_stages(
    alg: Algebra, r: Tensor2, samples: int, seed: int
) -> list[StageReport]:
    stages: list[StageReport] = []

    anti = tau(r).add(r).is_zero()
    stages.append(
        StageReport(
            "antisymmetry",
            anti,
            None if anti else {"first_entry": tau(r).add(r).entries()[0]},
        )
    )
    if not anti:
        return stages

    residual = cybe_residual(alg, r)
    ok = residual.is_zero()
    stages.append(
        StageReport(
            "yang-baxter", ok, None if ok else {"first_entry": residual.entries()[0]}
        )
    )
    if not ok:
        return stages

    delta = coboundary_delta(alg, r)
    dd = drinfeld_double(alg, delta)
    bial = is_malcev_bialgebra(alg, delta, samples=samples, seed=seed, double=dd)
    stages.append(StageReport("coboundary-bialgebra", bial.ok, bial.witness))
    if not bial.ok:
        return stages

    phi, hom = dual_to_primal_map(alg, delta, tau(r))
    stages.append(StageReport("dual-map-homomorphism", hom.ok, hom.witness))
    if not hom.ok:
        return stages

    s = graph_subspace(dd, phi, -1)
    ok = s.dim == alg.dim
    stages.append(
        StageReport("radical-graph", ok, None if ok else {"dim": s.dim})
    )
    if not ok:
        return stages

    cert = radical_certificate(dd, s)
    stages.append(
        StageReport(
            "radical-certificate",
            cert.ok,
            None if cert.ok else dict(cert.witness or {}, checks=cert.checks),
        )
    )
    return stages


def pipeline_triangular_from_tensor(
    alg: Algebra, r: Tensor2, samples: int = 200, seed: int = 0
) -> PipelineReport:
    """Triangular classification from an explicit antisymmetric tensor."""
    return PipelineReport(tuple(_triangular_stages(alg, r, samples, seed)))


def pipeline_triangular(
    b_indices: Sequence[int],
    gram: Matrix,
    samples: int = 200,
    seed: int = 0,
) -> PipelineReport:
    """Full triangular pipeline from a symplectic datum on the 7-dim algebra:

    subalgebra -> symplectic check -> inverse-Gram tensor -> coboundary
    bialgebra -> dual-map homomorphism -> radical graph -> radical
    certificate.  Stops at the first failing stage.
    """
    alg = build_m7()
    stages: list[StageReport] = []

    try:
        _, sub = build_subalgebra(alg, b_indices)
    except ValueError as exc:
        stages.append(StageReport("subalgebra", False, {"error": str(exc)}))
        return PipelineReport(tuple(stages))
    stages.append(StageReport("subalgebra", True))

    form = symplectic_check(sub, gram, indices=b_indices)
    stages.append(
        StageReport(
            "symplectic-form",
            form.ok,
            None if form.ok else dict(form.witness or {}, checks=form.checks),
        )
    )
    if not form.ok:
        return PipelineReport(tuple(stages))

    basis_rows = [basis_element(alg, i) for i in b_indices]
    try:
        r = r_from_symplectic(alg, basis_rows, gram)
    except ValueError as exc:
        stages.append(StageReport("correspondence-tensor", False, {"error": str(exc)}))
        return PipelineReport(tuple(stages))
    stages.append(StageReport("correspondence-tensor", True))

    stages.extend(_triangular_stages(alg, r, samples, seed))
    return PipelineReport(tuple(stages))


def _semisimple_stages(
    alg: Algebra, r: Tensor2, samples: int, seed: int
) -> list[StageReport]:
    stages: list[StageReport] = []

    residual = cybe_residual(alg, r)
    ok = residual.is_zero()
    stages.append(
        StageReport(
            "yang-baxter", ok, None if ok else {"first_entry": residual.entries()[0]}
        )
    )
    if not ok:
        return stages

    delta = coboundary_delta(alg, r).scaled(-1)
    dd = drinfeld_double(alg, delta)
    bial = is_malcev_bialgebra(alg, delta, samples=samples, seed=seed, double=dd)
    stages.append(StageReport("coboundary-bialgebra", bial.ok, bial.witness))
    if not bial.ok:
        return stages

    dual = dual_malcev_report(delta, samples=samples, seed=seed)
    c1 = compat1_sweep(alg, delta)
    c2 = compat2_sweep(alg, delta) if c1.ok and dual.ok else CheckReport(ok=True)
    cross_ok = dual.ok and c1.ok and c2.ok
    cross_witness = None
    if not cross_ok:
        cross_witness = (dual.witness or c1.witness or c2.witness)
    stages.append(StageReport("compatibility-residuals", cross_ok, cross_witness))
    if not cross_ok:
        return stages

    dec = semisimple_decomposition(alg, r)
    stages.append(
        StageReport(
            "ideal-decomposition",
            dec.report.ok,
            None
            if dec.report.ok
            else dict(dec.report.witness or {}, checks=dec.report.checks),
        )
    )
    if not dec.report.ok:
        return stages

    v, vrep = ideal_projection_V(dec.double, dec.m2)
    ok = vrep.ok and v.dim == 4
    stages.append(
        StageReport(
            "ideal-projection",
            ok,
            None if ok else {"dim": v.dim, "checks": vrep.checks},
        )
    )
    if not ok:
        return stages

    matrix_residual = cybe_matrix_residual(r.matrix(), gamma_matrices(alg))
    ok = matrix_residual.is_zero()
    stages.append(
        StageReport(
            "matrix-form-residual",
            ok,
            None if ok else {"first_entry": matrix_residual.entries()[0]},
        )
    )
    return stages


def pipeline_semisimple_from_tensor(
    alg: Algebra, r: Tensor2, samples: int = 200, seed: int = 0
) -> PipelineReport:
    """Semisimple classification from an explicit solution tensor."""
    return PipelineReport(tuple(_semisimple_stages(alg, r, samples, seed)))


def pipeline_semisimple(
    p: FamilyParams, samples: int = 200, seed: int = 0
) -> PipelineReport:
    """Full semisimple pipeline for one member of the solution family:

    family tensor -> Yang-Baxter -> coboundary bialgebra (negated sign) ->
    compatibility residual cross-check -> two-ideal decomposition ->
    projection of the second ideal (must have dimension 4) -> matrix-form
    residual.  Stops at the first failing stage.
    """
    alg = build_m7()
    r = family_r(p)
    stages = [StageReport("family-tensor", True)]
    stages.extend(_semisimple_stages(alg, r, samples, seed))
    return PipelineReport(tuple(stages))


# ---------------------------------------------------------------------------
# shipped fixtures


def data_path(name: str):
    """Path-like handle to a shipped data file."""
    return resources.files("malcevkit").joinpath("data").joinpath(name)


def load_m7_fixture() -> Algebra:
    with data_path("m7.json").open("r", encoding="utf-8") as fh:
        return algebra_from_dict(json.load(fh))


def load_form_fixture(source) -> tuple[tuple[int, ...], Matrix]:
    """Read a form fixture: {"indices": [...], "gram": [[i, j, "p/q"], ...]}.

    Gram entries are in local coordinates of the listed basis indices.
    """
    if hasattr(source, "open"):
        with source.open("r", encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        with open(source, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    indices = tuple(int(i) for i in data["indices"])
    n = len(indices)
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i, j, value in data["gram"]:
        entries[int(i)][int(j)] = parse_rational(str(value))
    return indices, Matrix(entries)


def load_family_zero_fixture() -> Tensor2:
    with data_path("theorem5_zero.json").open("r", encoding="utf-8") as fh:
        return tensor2_from_dict(json.load(fh))
