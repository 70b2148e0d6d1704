"""Comultiplications, doubles, compatibility residuals, certificates."""

from fractions import Fraction as F

import pytest

from malcevkit import (
    Comultiplication,
    M4_INDICES,
    Subspace,
    Tensor2,
    bimodule_actions,
    build_m7,
    build_subalgebra,
    coboundary_delta,
    compat1_residual,
    compat1_sweep,
    compat2_residual,
    compat2_sweep,
    comultiplication_from_dict,
    comultiplication_to_dict,
    cybe_residual,
    drinfeld_double,
    dual_algebra,
    dual_malcev_report,
    dual_to_primal_map,
    family_r,
    FamilyParams,
    form_q_report,
    graph_subspace,
    ideal_projection_V,
    is_malcev_bialgebra,
    r_from_symplectic,
    radical_certificate,
    reconstructed_coboundary,
    semisimple_decomposition,
    split_symmetric,
    tau,
)
from malcevkit.linalg import Matrix


def basis(i, dim=7):
    return tuple(F(1) if t == i else F(0) for t in range(dim))


@pytest.fixture(scope="module")
def m7():
    return build_m7()


@pytest.fixture(scope="module")
def family_zero_delta(m7):
    """Comultiplication attached to the parameter-free family solution."""
    return coboundary_delta(m7, family_r(FamilyParams())).scaled(-1)


@pytest.fixture(scope="module")
def m4_triangular(m7):
    """Tensor and comultiplication from the 4-dim symplectic fixture."""
    gram = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    sub, _ = build_subalgebra(m7, M4_INDICES)
    r = r_from_symplectic(m7, sub.rows(), gram)
    return r, coboundary_delta(m7, r)


FAMILY_ZERO_ENTRIES = {
    1: [(0, 1, F(-1, 2)), (1, 0, F(1, 2))],
    2: [(0, 2, F(-1, 2)), (2, 0, F(1, 2))],
    3: [(0, 3, F(1, 2)), (2, 6, F(2)), (3, 0, F(-1, 2)), (6, 2, F(-2))],
    4: [(0, 4, F(1, 2)), (1, 5, F(2)), (4, 0, F(-1, 2)), (5, 1, F(-2))],
    5: [(0, 5, F(-1, 2)), (5, 0, F(1, 2))],
    6: [(0, 6, F(-1, 2)), (6, 0, F(1, 2))],
}


class TestComultiplication:
    def test_zero(self):
        d = Comultiplication.zero(3)
        assert d.is_zero()
        assert d.apply(basis(0, 3)).is_zero()

    def test_from_entries_accumulates(self):
        d = Comultiplication.from_entries(2, [(0, 0, 1, F(1)), (0, 0, 1, F(2))])
        assert d.d[0].coeff[0][1] == F(3)

    def test_apply_is_linear(self, family_zero_delta):
        d = family_zero_delta
        v = tuple(F(k + 1) for k in range(7))
        expected = Tensor2.zero(7)
        for a, c in enumerate(v):
            expected = expected.add(d.d[a], c)
        assert d.apply(v) == expected

    def test_scaled_and_eq(self, family_zero_delta):
        twice = family_zero_delta.scaled(2)
        assert twice != family_zero_delta
        assert twice.scaled(F(1, 2)) == family_zero_delta

    def test_family_zero_images(self, family_zero_delta):
        d = family_zero_delta
        assert d.d[0].is_zero()
        for a, entries in FAMILY_ZERO_ENTRIES.items():
            assert d.d[a].entries() == entries, a

    def test_reconstruction_route_agrees_on_antisymmetric_input(self, m7):
        _, skew = split_symmetric(family_r(FamilyParams(F(1), F(2), F(0), F(-1), F(3))))
        assert reconstructed_coboundary(m7, skew) == coboundary_delta(m7, skew)

    def test_dict_roundtrip(self, family_zero_delta):
        data = comultiplication_to_dict(family_zero_delta)
        assert data["dim"] == 7
        assert comultiplication_from_dict(data) == family_zero_delta


class TestDualAlgebra:
    def test_labels(self, family_zero_delta):
        dual = dual_algebra(family_zero_delta)
        assert dual.basis == tuple(f"e{i}*" for i in range(7))
        named = dual_algebra(family_zero_delta, labels=list("abcdefg"))
        assert named.basis == tuple("abcdefg")

    def test_family_zero_products(self, family_zero_delta):
        dual = dual_algebra(family_zero_delta)
        expected = {
            (0, 1, 1): F(-1, 2),  # h* x*  = -x*/2
            (1, 0, 1): F(1, 2),
            (1, 5, 4): F(2),      # x* z*  = 2 y'*
            (5, 1, 4): F(-2),
            (2, 6, 3): F(2),      # x'* z'* = 2 y*
            (6, 2, 3): F(-2),
            (0, 3, 3): F(1, 2),
            (0, 4, 4): F(1, 2),
            (0, 5, 5): F(-1, 2),
        }
        for (i, j, k), value in expected.items():
            assert dual.gamma[i][j][k] == value, (i, j, k)

    def test_dual_is_malcev_for_family_zero(self, family_zero_delta):
        report = dual_malcev_report(family_zero_delta, samples=20)
        assert report.ok
        assert report.checks == {"anticommutative": True, "malcev": True}


class TestBimoduleActions:
    def test_toy_comultiplication(self, m7):
        # Delta(h) = x(x)y - y(x)x, zero elsewhere
        toy = Comultiplication.from_entries(7, [(0, 1, 3, F(1)), (0, 3, 1, F(-1))])
        to_a, from_a, f_hook, a_hook = bimodule_actions(m7, toy, basis(1), basis(0))
        assert to_a == tuple(-v for v in basis(3))      # x* > h  = -y
        assert from_a == basis(3)                        # h < x*  = y
        assert f_hook == tuple(2 * v for v in basis(1))  # x* <| h = 2 x*
        assert a_hook == tuple(-2 * v for v in basis(1))  # h |> x* = -2 x*

        to_a, from_a, _, _ = bimodule_actions(m7, toy, basis(3), basis(0))
        assert to_a == basis(1)                          # y* > h  = x
        assert from_a == tuple(-v for v in basis(1))     # h < y*  = -x

    def test_pairing_adjunction(self, m7, family_zero_delta):
        # <f <| a, b> must equal <f, a b> by construction; cross-check a case
        _, _, f_hook, _ = bimodule_actions(
            m7, family_zero_delta, basis(0), basis(1)
        )
        for b in range(7):
            from malcevkit import multiply

            prod = multiply(m7, basis(1), basis(b))
            assert f_hook[b] == prod[0]


class TestDrinfeldDouble:
    def test_shape_and_labels(self, m7, family_zero_delta):
        dd = drinfeld_double(m7, family_zero_delta)
        assert dd.n == 7
        assert dd.algebra.dim == 14
        assert dd.algebra.basis[:7] == m7.basis
        assert dd.algebra.basis[7:] == tuple(f"{b}*" for b in m7.basis)

    def test_primal_block_embeds_the_algebra(self, m7, family_zero_delta):
        dd = drinfeld_double(m7, family_zero_delta)
        for i in range(7):
            for j in range(7):
                for k in range(7):
                    assert dd.algebra.gamma[i][j][k] == m7.gamma[i][j][k]
                assert all(
                    dd.algebra.gamma[i][j][7 + k] == 0 for k in range(7)
                )

    def test_dual_block_embeds_the_dual(self, m7, family_zero_delta):
        dd = drinfeld_double(m7, family_zero_delta)
        dual = dual_algebra(family_zero_delta)
        for i in range(7):
            for j in range(7):
                for a in range(7):
                    assert dd.algebra.gamma[7 + i][7 + j][7 + a] == dual.gamma[i][j][a]
                assert all(dd.algebra.gamma[7 + i][7 + j][k] == 0 for k in range(7))

    def test_mixed_products(self, m7, family_zero_delta):
        dd = drinfeld_double(m7, family_zero_delta)
        g = dd.algebra.gamma

        def only(i, j, expected):
            assert [(k, v) for k, v in enumerate(g[i][j]) if v] == expected

        only(0, 8, [(8, F(-2))])                  # h . x*  = -2 x*
        only(1, 7, [(1, F(-1, 2)), (9, F(-1))])   # x . h*  = -x/2 - x'*
        only(8, 1, [(0, F(-1, 2)), (7, F(-2))])   # x* . x  = -h/2 - 2 h*
        only(7, 0, [])                            # h* . h  = 0
        only(8, 12, [(11, F(2))])                 # x* . z* = 2 y'*

    def test_pairing_gram_and_values(self, m7, family_zero_delta):
        dd = drinfeld_double(m7, family_zero_delta)
        assert dd.q == Matrix(
            [
                [F(1) if abs(i - j) == 7 else F(0) for j in range(14)]
                for i in range(14)
            ]
        )
        assert dd.q_value(basis(0, 14), basis(7, 14)) == 1
        assert dd.q_value(basis(7, 14), basis(0, 14)) == 1
        assert dd.q_value(basis(0, 14), basis(8, 14)) == 0
        assert dd.q_value(basis(0, 14), basis(1, 14)) == 0

    def test_block_subspaces(self, m7, family_zero_delta):
        dd = drinfeld_double(m7, family_zero_delta)
        assert dd.primal_block().dim == 7
        assert dd.dual_block().dim == 7
        assert dd.primal_block().intersection(dd.dual_block()).dim == 0

    def test_form_q_report(self, m7, family_zero_delta):
        dd = drinfeld_double(m7, family_zero_delta)
        report = form_q_report(dd)
        assert report.ok
        assert report.checks == {
            "symmetric": True,
            "nondegenerate": True,
            "associative": True,
        }


def perturbed(delta, extra_entries):
    images = list(delta.d)
    images[0] = images[0].add(Tensor2.from_entries(7, extra_entries))
    return Comultiplication(7, images)


class TestBialgebraChecks:
    def test_zero_comultiplication_passes(self, m7):
        report = is_malcev_bialgebra(m7, Comultiplication.zero(7), samples=10)
        assert report.ok

    def test_family_zero_passes_all_four(self, m7, family_zero_delta):
        d = family_zero_delta
        assert is_malcev_bialgebra(m7, d, samples=20).ok
        assert dual_malcev_report(d, samples=20).ok
        assert compat1_sweep(m7, d).ok
        assert compat2_sweep(m7, d).ok

    def test_triangular_passes_all_four(self, m7, m4_triangular):
        _, d = m4_triangular
        assert is_malcev_bialgebra(m7, d, samples=20).ok
        assert dual_malcev_report(d, samples=20).ok
        assert compat1_sweep(m7, d).ok
        assert compat2_sweep(m7, d).ok

    def test_raw_corruption_fails_all_four(self, m7, family_zero_delta):
        bad = perturbed(family_zero_delta, [(1, 1, F(1))])

        double_rep = is_malcev_bialgebra(m7, bad, samples=10)
        assert not double_rep.ok
        assert double_rep.witness == {
            "kind": "index-triple",
            "indices": (0, 8, 1),
            "stage": "double-anticommutative",
        }

        dual_rep = dual_malcev_report(bad, samples=10)
        assert not dual_rep.ok
        assert dual_rep.witness["stage"] == "dual-anticommutative"
        assert dual_rep.witness["indices"] == (1, 1, 0)

        c1 = compat1_sweep(m7, bad)
        assert not c1.ok
        assert c1.witness["indices"] == (0, 0, 0)
        assert c1.witness["residual"] == [(1, 1, F(8))]

        c2 = compat2_sweep(m7, bad)
        assert not c2.ok
        assert c2.witness["indices"] == (0, 0)
        assert c2.witness["residual"] == [(1, 0, 1, F(2)), (1, 1, 0, F(2))]

    def test_antisymmetric_corruption_fails_all_four(self, m7, family_zero_delta):
        bad = perturbed(family_zero_delta, [(1, 3, F(1)), (3, 1, F(-1))])

        double_rep = is_malcev_bialgebra(m7, bad, samples=10)
        assert not double_rep.ok
        assert double_rep.witness["stage"] == "double-malcev"
        assert double_rep.witness["indices"] == (0, 0, 1, 8)
        assert [(k, v) for k, v in enumerate(double_rep.witness["residual"]) if v] == [
            (6, F(-4))
        ]

        dual_rep = dual_malcev_report(bad, samples=10)
        assert not dual_rep.ok
        assert dual_rep.witness["stage"] == "dual-malcev"
        assert dual_rep.witness["indices"] == (0, 1, 2, 6)

        c1 = compat1_sweep(m7, bad)
        assert not c1.ok
        assert c1.witness["indices"] == (0, 0, 1)
        assert c1.witness["residual"] == [(1, 6, F(-4)), (6, 1, F(-4))]

        c2 = compat2_sweep(m7, bad)
        assert not c2.ok
        assert c2.witness["indices"] == (0, 0)
        assert c2.witness["residual"] == [
            (1, 3, 6, F(-2)),
            (1, 6, 3, F(-2)),
            (2, 1, 6, F(4)),
            (2, 6, 1, F(4)),
            (3, 1, 6, F(2)),
            (3, 6, 1, F(2)),
            (6, 1, 2, F(-4)),
            (6, 2, 1, F(-4)),
        ]

    def test_residuals_are_trilinear_and_bilinear(self, m7, family_zero_delta):
        bad = perturbed(family_zero_delta, [(1, 3, F(1)), (3, 1, F(-1))])
        a, b, c = basis(0), basis(0), basis(1)
        doubled = tuple(2 * v for v in a)
        assert compat1_residual(m7, bad, doubled, b, c) == compat1_residual(
            m7, bad, a, b, c
        ).scaled(2)
        assert compat2_residual(m7, bad, doubled, b) == compat2_residual(
            m7, bad, a, b
        ).scaled(2)


class TestCoboundaryEquivalence:
    """Flatness of an antisymmetric tensor tracks the double being Malcev."""

    def test_flat_wedge_gives_bialgebra(self, m7):
        wedge = Tensor2.from_entries(7, [(0, 1, F(1)), (1, 0, F(-1))])
        assert cybe_residual(m7, wedge).is_zero()
        assert is_malcev_bialgebra(m7, coboundary_delta(m7, wedge), samples=20).ok

    def test_non_flat_wedge_fails(self, m7):
        wedge = Tensor2.from_entries(7, [(1, 3, F(1)), (3, 1, F(-1))])
        assert not cybe_residual(m7, wedge).is_zero()
        report = is_malcev_bialgebra(m7, coboundary_delta(m7, wedge), samples=10)
        assert not report.ok
        assert report.witness["indices"] == (0, 0, 8, 10)
        assert [(k, v) for k, v in enumerate(report.witness["residual"]) if v] == [
            (6, F(16))
        ]


class TestDualToPrimal:
    def test_homomorphism_with_swapped_tensor(self, m7, m4_triangular):
        r, d = m4_triangular
        phi, report = dual_to_primal_map(m7, d, tau(r))
        assert report.ok
        # images of the dual basis: columns of phi
        assert phi.column(0) == basis(1)
        assert phi.column(1) == tuple(-v for v in basis(0))
        assert phi.column(2) == basis(7)[:7] and not any(phi.column(2))
        assert phi.column(4) == basis(5)
        assert phi.column(5) == tuple(-v for v in basis(4))

    def test_unswapped_tensor_is_not_a_homomorphism(self, m7, m4_triangular):
        r, d = m4_triangular
        _, report = dual_to_primal_map(m7, d, r)
        assert not report.ok
        assert report.witness["kind"] == "homomorphism"
        assert report.witness["indices"] == (0, 1)

    def test_dimension_mismatch(self, m7, family_zero_delta):
        with pytest.raises(ValueError):
            dual_to_primal_map(m7, family_zero_delta, Tensor2.zero(3))

    def test_graph_subspace_rows(self, m7, m4_triangular):
        r, d = m4_triangular
        dd = drinfeld_double(m7, d)
        phi, _ = dual_to_primal_map(m7, d, tau(r))
        s = graph_subspace(dd, phi, -1)
        assert s.dim == 7

        def row(*pairs):
            out = [F(0)] * 14
            for idx, val in pairs:
                out[idx] = F(val)
            return out

        expected = Subspace.from_rows(
            14,
            [
                row((1, -1), (7, 1)),    # h*  - x
                row((0, 1), (8, 1)),     # x*  + h
                row((9, 1)),             # x'*
                row((10, 1)),            # y*
                row((5, -1), (11, 1)),   # y'* - z
                row((4, 1), (12, 1)),    # z*  + y'
                row((13, 1)),            # z'*
            ],
        )
        assert s == expected

    def test_graph_subspace_validations(self, m7, family_zero_delta):
        dd = drinfeld_double(m7, family_zero_delta)
        with pytest.raises(ValueError):
            graph_subspace(dd, Matrix.identity(7), 2)
        with pytest.raises(ValueError):
            graph_subspace(dd, Matrix.identity(3), 1)


class TestRadicalCertificate:
    def test_triangular_graph_is_certified(self, m7, m4_triangular):
        r, d = m4_triangular
        dd = drinfeld_double(m7, d)
        phi, _ = dual_to_primal_map(m7, d, tau(r))
        cert = radical_certificate(dd, graph_subspace(dd, phi, -1))
        assert cert.ok
        assert cert.checks == {
            "ideal": True,
            "square_zero": True,
            "self_orthogonal": True,
            "dimension": True,
            "primal_intersection": True,
        }

    def test_primal_block_is_rejected(self, m7, m4_triangular):
        _, d = m4_triangular
        dd = drinfeld_double(m7, d)
        cert = radical_certificate(dd, dd.primal_block())
        assert not cert.ok
        assert cert.witness == {"kind": "not-an-ideal"}
        assert cert.checks == {
            "ideal": False,
            "square_zero": False,
            "self_orthogonal": True,
            "dimension": True,
            "primal_intersection": False,
        }


@pytest.fixture(scope="module")
def decomposition(m7):
    return semisimple_decomposition(m7, family_r(FamilyParams()))


class TestSemisimpleDecomposition:

    def test_all_checks_pass(self, decomposition):
        assert decomposition.report.ok
        assert decomposition.report.checks == {
            "m1_ideal": True,
            "m2_ideal": True,
            "trivial_intersection": True,
            "cross_products_zero": True,
            "dimensions": True,
            "pairing_orthogonal": True,
            "envelopes_full": True,
        }

    def test_ideals_span_the_double(self, decomposition):
        assert decomposition.m1.dim == 7
        assert decomposition.m2.dim == 7
        assert decomposition.m1.sum(decomposition.m2).dim == 14

    def test_projections(self, m7, decomposition):
        dd = decomposition.double
        v1, rep1 = ideal_projection_V(dd, decomposition.m1)
        v2, rep2 = ideal_projection_V(dd, decomposition.m2)
        assert rep1.ok and rep2.ok
        assert rep1.checks == {"subalgebra": True, "annihilator_kills_ideal": True}
        assert v1 == Subspace.from_rows(7, [basis(0), basis(2), basis(3), basis(6)])
        assert v2 == Subspace.from_rows(7, [basis(0), basis(1), basis(4), basis(5)])
        assert v1.dim == 4 and v2.dim == 4

    def test_projection_requires_an_ideal(self, decomposition):
        dd = decomposition.double
        with pytest.raises(ValueError):
            ideal_projection_V(dd, dd.primal_block())

    def test_delta_sign_convention(self, m7, decomposition):
        assert decomposition.delta == coboundary_delta(
            m7, family_r(FamilyParams())
        ).scaled(-1)
