"""Command-line surface: subcommands, JSON reports, exit codes."""

import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from malcevkit import (
    Algebra,
    FamilyParams,
    M4_INDICES,
    Tensor2,
    algebra_to_dict,
    build_m7,
    coboundary_delta,
    comultiplication_to_dict,
    data_path,
    drinfeld_double,
    family_r,
    load_algebra,
    r_from_symplectic,
    split_symmetric,
    tensor2_to_dict,
)
from malcevkit.cli import main
from malcevkit.linalg import Matrix


@pytest.fixture(scope="module")
def m7():
    return build_m7()


@pytest.fixture(scope="module")
def m7_path(tmp_path_factory, m7):
    path = tmp_path_factory.mktemp("cli") / "m7.json"
    path.write_text(json.dumps(algebra_to_dict(m7)), encoding="utf-8")
    return str(path)


def write_tensor(tmp_path, tensor, name="t.json"):
    path = tmp_path / name
    path.write_text(json.dumps(tensor2_to_dict(tensor)), encoding="utf-8")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out else None
    return code, report, captured.err


class TestIdentities:
    def test_m7(self, capsys, m7_path):
        code, report, err = run_cli(capsys, "identities", m7_path, "--samples", "20")
        assert code == 0
        assert report["anticommutative"] is True
        assert report["lie"] is False
        assert report["malcev"] is True
        assert set(report["witnesses"]) == {"lie"}
        assert report["witnesses"]["lie"]["indices"] == [0, 1, 3]
        assert report["witnesses"]["lie"]["residual"][6] == "12"
        assert "identities:" in err and "malcev=True" in err

    def test_corrupted_magnitude(self, capsys, m7, tmp_path):
        gamma = [[list(v) for v in row] for row in m7.gamma]
        gamma[1][3][6] = F(3)
        gamma[3][1][6] = F(-3)
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps(algebra_to_dict(Algebra(7, m7.basis, gamma))),
            encoding="utf-8",
        )
        code, report, _ = run_cli(capsys, "identities", str(path), "--samples", "5")
        assert code == 0
        assert report["anticommutative"] is True
        assert report["malcev"] is False
        witness = report["witnesses"]["malcev"]
        assert witness["kind"] == "four-linear"
        assert witness["indices"] == [0, 1, 2, 6]
        assert witness["residual"][6] == "4"

    def test_one_sided_corruption_reports_not_anticommutative(
        self, capsys, m7, tmp_path
    ):
        gamma = [[list(v) for v in row] for row in m7.gamma]
        gamma[1][3][6] = F(3)  # only one side touched
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps(algebra_to_dict(Algebra(7, m7.basis, gamma))),
            encoding="utf-8",
        )
        code, report, _ = run_cli(capsys, "identities", str(path), "--samples", "5")
        assert code == 0
        assert report["anticommutative"] is False
        assert report["malcev"] is False
        assert report["witnesses"]["malcev"]["kind"] == "not-anticommutative"

    def test_zero_dimensional_algebra(self, capsys, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text(
            json.dumps({"dim": 0, "basis": [], "products": []}), encoding="utf-8"
        )
        code, report, _ = run_cli(capsys, "identities", str(path))
        assert code == 0
        assert report["anticommutative"] and report["lie"] and report["malcev"]
        assert report["witnesses"] == {}


class TestCybe:
    def test_shipped_family_zero_fixture(self, capsys, m7_path):
        code, report, err = run_cli(
            capsys, "cybe", m7_path, str(data_path("theorem5_zero.json"))
        )
        assert code == 0
        assert report["is_solution"] is True
        assert report["nonzero_components"] == []
        assert report["matrix_form"]["is_zero"] is True
        assert report["det_trace"]["is_zero"] is True
        assert report["det_trace"]["determinant"] == "0"
        assert report["zero_sets_agree"] is True
        assert "is_solution=True" in err

    def test_simple_tensor_fails(self, capsys, m7_path, tmp_path):
        t = write_tensor(tmp_path, Tensor2.from_entries(7, [(0, 1, F(1))]))
        code, report, _ = run_cli(capsys, "cybe", m7_path, t)
        assert code == 0
        assert report["is_solution"] is False
        assert report["nonzero_components"] == [[0, 1, 1, "-2"]]
        assert report["matrix_form"]["is_zero"] is False
        assert report["zero_sets_agree"] is True

    def test_zero_tensor(self, capsys, m7_path, tmp_path):
        t = write_tensor(tmp_path, Tensor2.zero(7))
        code, report, _ = run_cli(capsys, "cybe", m7_path, t)
        assert code == 0
        assert report["is_solution"] is True

    def test_dimension_mismatch_is_input_error(self, capsys, m7_path, tmp_path):
        t = write_tensor(tmp_path, Tensor2.zero(3))
        code, report, err = run_cli(capsys, "cybe", m7_path, t)
        assert code == 2
        assert report is None
        assert "dimension mismatch" in err


class TestDouble:
    def test_family_tensor_negative_coboundary(self, capsys, m7_path, tmp_path):
        t = write_tensor(tmp_path, family_r(FamilyParams()))
        code, report, err = run_cli(
            capsys,
            "double",
            m7_path,
            "--tensor",
            t,
            "--coboundary",
            "-1",
            "--samples",
            "20",
        )
        assert code == 0
        assert report["bialgebra"] is True
        assert report["checks"] == {"anticommutative": True, "malcev": True}
        assert report["witness"] is None
        assert report["dual_malcev"]["ok"] is True
        assert report["compat1"]["ok"] is True
        assert report["compat2"]["ok"] is True
        assert report["pairing"]["ok"] is True
        assert report["equivalence_agrees"] is True
        # the family tensor is not antisymmetric: no obstruction section
        assert "coboundary_obstruction" not in report
        assert "bialgebra=True" in err

    def test_comultiplication_file_input(self, capsys, m7, m7_path, tmp_path):
        delta = coboundary_delta(m7, family_r(FamilyParams())).scaled(-1)
        path = tmp_path / "delta.json"
        path.write_text(
            json.dumps(comultiplication_to_dict(delta)), encoding="utf-8"
        )
        code, report, _ = run_cli(
            capsys, "double", m7_path, "--delta", str(path), "--samples", "10"
        )
        assert code == 0
        assert report["bialgebra"] is True
        assert report["equivalence_agrees"] is True

    def test_perturbed_comultiplication_fails_consistently(
        self, capsys, m7, m7_path, tmp_path
    ):
        delta = coboundary_delta(m7, family_r(FamilyParams())).scaled(-1)
        images = list(delta.d)
        images[0] = images[0].add(Tensor2.from_entries(7, [(1, 1, F(1))]))
        from malcevkit import Comultiplication

        bad = Comultiplication(7, images)
        path = tmp_path / "delta.json"
        path.write_text(json.dumps(comultiplication_to_dict(bad)), encoding="utf-8")
        code, report, _ = run_cli(
            capsys, "double", m7_path, "--delta", str(path), "--samples", "5"
        )
        assert code == 0
        assert report["bialgebra"] is False
        assert report["witness"]["stage"] == "double-anticommutative"
        assert report["dual_malcev"]["ok"] is False
        assert report["compat1"]["ok"] is False
        assert report["compat2"]["ok"] is False
        assert report["equivalence_agrees"] is True

    def test_antisymmetric_tensor_gets_obstruction_section(
        self, capsys, m7, m7_path, tmp_path
    ):
        _, skew = split_symmetric(family_r(FamilyParams()))
        t = write_tensor(tmp_path, skew)
        code, report, _ = run_cli(
            capsys,
            "double",
            m7_path,
            "--tensor",
            t,
            "--coboundary",
            "+1",
            "--samples",
            "5",
        )
        assert code == 0
        section = report["coboundary_obstruction"]
        assert section["variant"] == "statement"
        assert section["vanishes"] is True
        assert section["witness"] is None

        code, report, _ = run_cli(
            capsys,
            "double",
            m7_path,
            "--tensor",
            t,
            "--coboundary",
            "+1",
            "--slot-variant",
            "proof",
            "--samples",
            "5",
        )
        assert code == 0
        section = report["coboundary_obstruction"]
        assert section["variant"] == "proof"
        assert section["vanishes"] is False
        assert section["witness"]["indices"] == [0, 0]
        assert section["witness"]["first_entry"] == [0, 1, 2, "-1"]

    def test_triangular_tensor_runs_clean_with_obstruction(
        self, capsys, m7, m7_path, tmp_path
    ):
        gram = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
        basis = [
            tuple(F(1) if k == i else F(0) for k in range(7)) for i in M4_INDICES
        ]
        r = r_from_symplectic(m7, basis, gram)
        t = write_tensor(tmp_path, r)
        code, report, _ = run_cli(
            capsys,
            "double",
            m7_path,
            "--tensor",
            t,
            "--coboundary",
            "+1",
            "--samples",
            "20",
        )
        assert code == 0
        assert report["bialgebra"] is True
        assert report["equivalence_agrees"] is True
        assert report["coboundary_obstruction"]["vanishes"] is True

    def test_export_roundtrip(self, capsys, m7, m7_path, tmp_path):
        t = write_tensor(tmp_path, family_r(FamilyParams()))
        out = tmp_path / "double.json"
        code, report, _ = run_cli(
            capsys,
            "double",
            m7_path,
            "--tensor",
            t,
            "--coboundary",
            "-1",
            "--samples",
            "5",
            "--export",
            str(out),
        )
        assert code == 0
        assert report["export"] == str(out)
        exported = load_algebra(out)
        delta = coboundary_delta(m7, family_r(FamilyParams())).scaled(-1)
        assert exported == drinfeld_double(m7, delta).algebra
        assert exported.basis[7] == "h*"

    def test_tensor_without_sign_is_input_error(self, capsys, m7_path, tmp_path):
        t = write_tensor(tmp_path, family_r(FamilyParams()))
        code, report, err = run_cli(capsys, "double", m7_path, "--tensor", t)
        assert code == 2
        assert report is None
        assert "--coboundary is required" in err


class TestClassify:
    def test_triangular_mode(self, capsys, m7, m7_path, tmp_path):
        gram = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
        basis = [
            tuple(F(1) if k == i else F(0) for k in range(7)) for i in M4_INDICES
        ]
        t = write_tensor(tmp_path, r_from_symplectic(m7, basis, gram))
        code, report, err = run_cli(
            capsys, "classify", m7_path, t, "--mode", "triangular", "--samples", "20"
        )
        assert code == 0
        assert report["mode"] == "triangular"
        assert report["ok"] is True
        assert [s["stage"] for s in report["stages"]] == [
            "antisymmetry",
            "yang-baxter",
            "coboundary-bialgebra",
            "dual-map-homomorphism",
            "radical-graph",
            "radical-certificate",
        ]
        assert "classify[triangular]: ok" in err

    def test_semisimple_mode(self, capsys, m7_path, tmp_path):
        t = write_tensor(tmp_path, family_r(FamilyParams()))
        code, report, err = run_cli(
            capsys, "classify", m7_path, t, "--mode", "semisimple", "--samples", "20"
        )
        assert code == 0
        assert report["ok"] is True
        assert [s["stage"] for s in report["stages"]] == [
            "yang-baxter",
            "coboundary-bialgebra",
            "compatibility-residuals",
            "ideal-decomposition",
            "ideal-projection",
            "matrix-form-residual",
        ]
        assert "classify[semisimple]: ok" in err

    def test_wrong_mode_fails_with_stage_name(self, capsys, m7_path, tmp_path):
        t = write_tensor(tmp_path, family_r(FamilyParams()))
        code, report, err = run_cli(
            capsys, "classify", m7_path, t, "--mode", "triangular", "--samples", "5"
        )
        assert code == 0
        assert report["ok"] is False
        assert report["stages"][0]["stage"] == "antisymmetry"
        assert "failed at stage 'antisymmetry'" in err

    def test_dimension_guard(self, capsys, tmp_path):
        path = tmp_path / "small.json"
        path.write_text(
            json.dumps({"dim": 2, "basis": ["a", "b"], "products": []}),
            encoding="utf-8",
        )
        t = write_tensor(tmp_path, Tensor2.zero(2))
        code, report, err = run_cli(
            capsys, "classify", str(path), t, "--mode", "semisimple"
        )
        assert code == 2
        assert "dimension-7" in err


class TestInvariants:
    def test_m7_centralizer_line(self, capsys, m7_path):
        code, report, err = run_cli(capsys, "invariants", m7_path)
        assert code == 0
        assert report["dimension"] == 1
        assert report["basis"] == [
            [
                [0, 0, "1"],
                [1, 2, "2"],
                [2, 1, "2"],
                [3, 4, "2"],
                [4, 3, "2"],
                [5, 6, "2"],
                [6, 5, "2"],
            ]
        ]
        assert "dimension 1" in err

    def test_abelian_pair_has_full_centralizer(self, capsys, tmp_path):
        path = tmp_path / "abelian.json"
        path.write_text(
            json.dumps({"dim": 2, "basis": ["a", "b"], "products": []}),
            encoding="utf-8",
        )
        code, report, _ = run_cli(capsys, "invariants", str(path))
        assert code == 0
        assert report["dimension"] == 4
        assert report["basis"] == [
            [[0, 0, "1"]],
            [[0, 1, "1"]],
            [[1, 0, "1"]],
            [[1, 1, "1"]],
        ]


class TestInputHandling:
    def test_missing_file(self, capsys):
        code, report, err = run_cli(capsys, "identities", "/nonexistent/alg.json")
        assert code == 2
        assert report is None
        assert "file not found" in err

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"dim": 2,', encoding="utf-8")
        code, _, err = run_cli(capsys, "identities", str(path))
        assert code == 2
        assert "line" in err and "column" in err

    def test_wrong_shape(self, capsys, tmp_path):
        path = tmp_path / "odd.json"
        path.write_text(json.dumps({"products": "nope"}), encoding="utf-8")
        code, _, err = run_cli(capsys, "identities", str(path))
        assert code == 2
        assert "not a valid algebra file" in err

    def test_output_is_deterministic(self, capsys, m7_path):
        _, first, _ = run_cli(capsys, "identities", m7_path, "--samples", "10")
        code = main(["identities", m7_path, "--samples", "10"])
        second_raw = capsys.readouterr().out
        assert code == 0
        assert json.dumps(first, sort_keys=True, indent=2) + "\n" == second_raw

    def test_console_script(self, m7_path):
        proc = subprocess.run(
            [sys.executable, "-m", "malcevkit.cli", "identities", m7_path,
             "--samples", "5"],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["malcev"] is True
        assert "identities:" in proc.stderr
