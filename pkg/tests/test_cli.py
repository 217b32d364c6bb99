"""End-to-end tests of the command line interface."""

from __future__ import annotations

import json
import shutil

import pytest
from click.testing import CliRunner

from fuscat.cli import main
from fuscat.data_io import bundled_path
from fuscat.reporting import parse_report


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def broken_algebra(tmp_path):
    """A copy of a bundled algebra with one multiplication entry corrupted."""
    shutil.copy(bundled_path("toric_code.cat"), tmp_path / "toric_code.cat")
    text = bundled_path("toric_code_one_e.alg").read_text()
    bad = text.replace("0 0 0 0 1 0", "0 0 0 0 5 0", 1)
    assert bad != text
    path = tmp_path / "broken.alg"
    path.write_text(bad)
    return path


def machine_reports(output):
    return [parse_report(line) for line in output.strip().splitlines()]


class TestExitCodes:
    def test_bundled_category_passes(self, runner):
        res = runner.invoke(main, ["check-category", "fibonacci"])
        assert res.exit_code == 0
        assert "PASS" in res.output

    def test_bundled_algebra_passes(self, runner):
        res = runner.invoke(main, ["check-algebra", "toric_code_one_e"])
        assert res.exit_code == 0

    def test_broken_algebra_fails(self, runner, broken_algebra):
        res = runner.invoke(main, ["check-algebra", str(broken_algebra)])
        assert res.exit_code == 1
        assert "FAIL" in res.output

    def test_missing_file_is_io_error(self, runner):
        res = runner.invoke(main, ["check-category", "/no/such/file.cat"])
        assert res.exit_code == 2

    def test_unknown_bundled_name_is_io_error(self, runner):
        res = runner.invoke(main, ["check-algebra", "not_a_real_algebra"])
        assert res.exit_code == 2

    def test_algebra_with_nontrivial_twist_on_support_passes(self, runner):
        # valid symmetric special Frobenius algebra despite theta = -1 on
        # one of its summands
        res = runner.invoke(main, ["check-algebra", "ising_one_psi"])
        assert res.exit_code == 0


class TestMachineFormat:
    def test_reports_parse_line_by_line(self, runner):
        res = runner.invoke(
            main, ["torus", "toric_code_one_e", "--format", "machine"])
        assert res.exit_code == 0
        reports = machine_reports(res.output)
        assert [r.kind for r in reports] == ["modular_invariance"]
        for rep in reports:
            assert rep.passed

    def test_invariance_report_carries_table(self, runner):
        res = runner.invoke(
            main, ["torus", "toric_code_one_e", "--format", "machine"])
        rep = [r for r in machine_reports(res.output)
               if r.kind == "modular_invariance"][0]
        assert rep.data["z"] == [[1, 1, 0, 0], [1, 1, 0, 0],
                                 [0, 0, 0, 0], [0, 0, 0, 0]]

    def test_lines_are_single_json_objects(self, runner):
        res = runner.invoke(
            main, ["check-algebra", "fibonacci_cardy", "--format", "machine"])
        for line in res.output.strip().splitlines():
            json.loads(line)


class TestTolerance:
    def test_flag_is_recorded_in_report(self, runner):
        res = runner.invoke(
            main, ["check-category", "fibonacci", "--tolerance", "1e-3"])
        assert res.exit_code == 0
        assert "1.0e-03" in res.output

    def test_env_variable_is_honored(self, runner):
        res = runner.invoke(main, ["check-category", "fibonacci"],
                            env={"FUSCAT_TOLERANCE": "1e-3"})
        assert res.exit_code == 0
        assert "1.0e-03" in res.output

    def test_non_numeric_env_is_usage_error(self, runner):
        res = runner.invoke(main, ["check-category", "fibonacci"],
                            env={"FUSCAT_TOLERANCE": "tight"})
        assert res.exit_code == 2


class TestTables:
    def test_torus_prints_labeled_matrix(self, runner):
        res = runner.invoke(main, ["torus", "su2_4_even"])
        assert res.exit_code == 0
        assert "torus Z" in res.output
        assert "PASS" in res.output

    def test_annulus_prints_per_label_matrices(self, runner):
        res = runner.invoke(main, ["annulus", "ising_cardy"])
        assert res.exit_code == 0
        for name in ("A_1", "A_psi", "A_sigma"):
            assert name in res.output

    def test_modules_lists_boundaries(self, runner):
        res = runner.invoke(main, ["modules", "toric_code_one_e"])
        assert res.exit_code == 0
        assert "count: 2" in res.output

    def test_modules_machine_report(self, runner):
        res = runner.invoke(
            main, ["modules", "su2_4_even", "--format", "machine"])
        reports = machine_reports(res.output)
        listing = [r for r in reports if r.kind == "module_list"][0]
        assert listing.data["count"] == 4


class TestDefects:
    def test_regular_pair_reduces_to_torus(self, runner):
        res = runner.invoke(
            main, ["defects", "toric_code_one_e", "--format", "machine"])
        assert res.exit_code == 0
        reports = machine_reports(res.output)
        listing = [r for r in reports if r.kind == "defect_list"][0]
        assert len(listing.data["defects"]) == 4
        assert listing.data["z"] == [[1, 1, 0, 0], [1, 1, 0, 0],
                                     [0, 0, 0, 0], [0, 0, 0, 0]]
        cert = [r for r in reports if r.kind == "modular_invariance"][0]
        assert cert.passed

    def test_indexed_pair_gets_reduced_certificate(self, runner):
        res = runner.invoke(
            main, ["defects", "toric_code_one_e",
                   "--left", "0", "--right", "1", "--format", "machine"])
        assert res.exit_code == 0
        kinds = [r.kind for r in machine_reports(res.output)]
        assert "defect_table" in kinds
        assert "modular_invariance" not in kinds

    def test_defect_index_out_of_range(self, runner):
        res = runner.invoke(
            main, ["defects", "toric_code_one_e", "--left", "9"])
        assert res.exit_code == 2

    def test_defect_spec_must_be_index_or_regular(self, runner):
        res = runner.invoke(
            main, ["defects", "toric_code_one_e", "--left", "all"])
        assert res.exit_code == 2

    def test_table_mode_prints_fusion(self, runner):
        res = runner.invoke(main, ["defects", "toric_code_one_e"])
        assert res.exit_code == 0
        assert "simple defects" in res.output
        assert "fusion" in res.output
        assert "defect Z" in res.output


class TestExplicitCategoryOption:
    def test_algebra_file_with_separate_category(self, runner, tmp_path):
        # strip the meta category line; supply it on the command line instead
        text = bundled_path("fibonacci_cardy.alg").read_text()
        lines = [l for l in text.splitlines()
                 if not l.startswith("category =")]
        path = tmp_path / "standalone.alg"
        path.write_text("\n".join(lines) + "\n")
        res = runner.invoke(
            main, ["check-algebra", str(path), "--category", "fibonacci"])
        assert res.exit_code == 0
