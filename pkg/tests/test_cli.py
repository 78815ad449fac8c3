import json

import numpy as np
import pytest

from ctqw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_petersen_csv_table(self, capsys):
        code, out, err = run(
            capsys, "compute", "--graph", "petersen", "--t-max", "10", "--samples", "201"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "t,stratum,re,im,prob"
        assert len(lines) == 1 + 201 * 3
        first = lines[1].split(",")
        assert first[:2] == ["0", "0"] and float(first[2]) == 1.0
        assert "max conservation defect" in err

    def test_k2_final_row_is_cos_pi(self, capsys):
        code, out, _ = run(
            capsys,
            "compute", "--graph", "complete:2",
            "--t-max", "3.14159265358979", "--samples", "2",
        )
        assert code == 0
        last_q0 = out.strip().splitlines()[-2].split(",")
        re, im = float(last_q0[2]), float(last_q0[3])
        assert re == pytest.approx(-1.0, abs=1e-12)
        assert im == pytest.approx(0.0, abs=1e-12)

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run(capsys, "compute", "--graph", "no/such/file.edges")
        assert code == 2
        assert "InvalidEdgeList" in err

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys,
            "compute", "--graph", "cycle:6", "--samples", "5", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["kappa"] == [1, 2, 2, 1]
        assert len(payload["times"]) == 5
        assert payload["values"][0][0] == [1.0, 0.0]

    def test_output_file_and_bit_stability(self, capsys, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            code, _, _ = run(
                capsys,
                "compute", "--graph", "johnson:7,2",
                "--samples", "50", "--output", str(p),
            )
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_edge_list_input(self, capsys, tmp_path):
        path = tmp_path / "square.edges"
        path.write_text("# C4\n4 4\n0 1\n1 2\n2 3\n3 0\n")
        code, out, _ = run(
            capsys, "compute", "--graph", str(path), "--origin", "1", "--samples", "3"
        )
        assert code == 0
        assert len(out.strip().splitlines()) == 1 + 3 * 3

    def test_bad_grid_exit_2(self, capsys):
        code, _, err = run(capsys, "compute", "--graph", "petersen", "--samples", "1")
        assert code == 2
        code, _, err = run(capsys, "compute", "--graph", "petersen", "--t-max", "-1")
        assert code == 2

    def test_non_qd_origin_uses_krylov_levels(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--graph", "path:5", "--origin", "1", "--samples", "3"
        )
        assert code == 0
        # krylov dimension for a 5-path from the second vertex is 4
        strata = {line.split(",")[1] for line in out.strip().splitlines()[1:]}
        assert strata == {"0", "1", "2", "3"}


class TestVerify:
    def test_johnson_passes_with_flag(self, capsys):
        code, out, _ = run(capsys, "verify", "--graph", "johnson:7,2", "--tol", "1e-8")
        assert code == 0
        assert "oracle strata" in out and "PASS" in out
        assert "paper-typo-suspect" in out

    def test_icosahedron_closed_form(self, capsys):
        code, out, _ = run(capsys, "verify", "--graph", "appendix:icosahedron")
        assert code == 0
        assert "closed-form q0" in out
        assert "VERIFY PASS" in out

    def test_path_from_second_vertex(self, capsys):
        code, out, _ = run(capsys, "verify", "--graph", "path:5", "--origin", "1")
        assert code == 0
        assert "oracle q0" in out

    def test_srg_without_construction(self, capsys):
        code, out, _ = run(capsys, "verify", "--graph", "srg:16,5,0,2")
        assert code == 0
        assert "closed-form q0" in out

    def test_tight_tolerance_fails(self, capsys):
        code, out, _ = run(capsys, "verify", "--graph", "petersen", "--tol", "1e-16")
        assert code == 1
        assert "VERIFY FAIL" in out


class TestStieltjes:
    def test_measure_and_eval(self, capsys):
        code, out, _ = run(
            capsys, "stieltjes", "--graph", "petersen", "--eval", "4", "--eval", "2+1j"
        )
        assert code == 0
        measure = json.loads(out.splitlines()[0])
        assert np.allclose(measure["nodes"], [-2.0, 1.0, 3.0], atol=1e-9)
        assert np.allclose(measure["weights"], [0.4, 0.5, 0.1], atol=1e-9)
        assert "G_cf=0.333333333333" in out

    def test_pole_adjacent_point(self, capsys):
        code, _, err = run(capsys, "stieltjes", "--graph", "petersen", "--eval", "3")
        assert code == 2
        assert "PoleProximity" in err


class TestCatalogCommand:
    def test_listing(self, capsys):
        code, out, _ = run(capsys, "catalog")
        assert code == 0
        lines = out.strip().splitlines()
        ids = [line.split("\t")[0] for line in lines]
        assert "petersen" in ids
        assert sum(1 for i in ids if i.startswith("appendix:")) >= 10

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "catalog")
        _, second, _ = run(capsys, "catalog")
        assert first == second


class TestExitCodes:
    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "compute", "--graph", "fancy:3")
        assert code == 2

    def test_bad_eval_literal(self, capsys):
        code, _, err = run(capsys, "stieltjes", "--graph", "petersen", "--eval", "zap")
        assert code == 2


def test_walk_log_env_sets_level(capsys, monkeypatch):
    import logging

    monkeypatch.setenv("WALK_LOG", "DEBUG")
    root = logging.getLogger()
    old = root.level
    try:
        code, _, _ = run(capsys, "catalog")
        assert code == 0
        assert root.level == logging.DEBUG
    finally:
        root.setLevel(old)
