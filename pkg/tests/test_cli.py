"""
COMMAND LINE TESTS
==================
Drives ``cli.main.main`` with an in-memory stdout and checks output and
exit codes.
"""

import io
import json

import pytest

from cli.main import build_parser, main
from common.errors import EXIT_CAP, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def write_code(tmp_path, name, p, gen):
    path = tmp_path / name
    path.write_text(json.dumps({"p": p, "n": len(gen[0]), "gen": gen}))
    return str(path)


class TestConstruct:

    def test_ternary_cbar(self):
        code, text = run("construct", "--p", "3", "--m", "2", "--coeffs", "a8,a1", "--which", "cbar")
        assert code == EXIT_OK
        data = json.loads(text)
        assert (data["n"], data["k"]) == (9, 4)
        assert data["provenance"]["s"] == 1

    def test_binary_extended(self):
        code, text = run("construct", "--p", "2", "--m", "6", "--coeffs", "0,a1,0,0", "--which", "extended")
        assert code == EXIT_OK
        data = json.loads(text)
        assert (data["n"], data["k"]) == (72, 8)

    def test_missing_function(self):
        code, _ = run("construct", "--p", "3", "--m", "2")
        assert code == EXIT_USAGE

    def test_bad_coefficient(self):
        code, _ = run("construct", "--p", "3", "--m", "2", "--coeffs", "x1,a1")
        assert code == EXIT_USAGE

    def test_composite_characteristic(self):
        code, _ = run("construct", "--p", "4", "--m", "2", "--coeffs", "a1,a1")
        assert code == EXIT_PRECONDITION

    def test_affine_function(self, tmp_path, gf9):
        path = tmp_path / "f.json"
        path.write_text(json.dumps({"field": gf9.to_dict(), "table": gf9.trace_table.tolist()}))
        code, _ = run("construct", "--p", "3", "--m", "2", "--table", str(path))
        assert code == EXIT_PRECONDITION

    def test_bad_field_in_table_file(self, tmp_path):
        path = tmp_path / "f.json"
        path.write_text(json.dumps({"field": {"p": 3, "m": 2, "poly": [2, 0, 1]}, "table": [0] * 9}))
        code, _ = run("construct", "--p", "3", "--m", "2", "--table", str(path))
        assert code == EXIT_USAGE

    def test_pretty(self):
        code, text = run("--format", "pretty", "construct", "--p", "3", "--m", "2",
                         "--coeffs", "a8,a1", "--which", "cstar")
        assert code == EXIT_OK
        assert text.startswith("cstar [8,3]")


class TestAnalyze:

    def test_identity(self, tmp_path):
        path = write_code(tmp_path, "id.json", 3, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        code, text = run("analyze", path)
        assert code == EXIT_OK
        summary = json.loads(text)["summary"]
        assert summary["d"] == 1
        assert summary["lcd"] is True
        assert summary["self_orthogonal"] is False

    def test_cbar_pretty(self, tmp_path):
        _, cbar = run("construct", "--p", "3", "--m", "2", "--coeffs", "a8,a1")
        path = tmp_path / "cbar.json"
        path.write_text(cbar)
        code, text = run("--format", "pretty", "analyze", str(path))
        assert code == EXIT_OK
        lines = text.splitlines()
        assert lines[0] == "weight,count"
        assert "6,66" in lines
        assert "d=3" in lines
        assert "self_orthogonal=true" in lines
        assert "dual [9,5,3] almostoptimal(sphere-packing)" in lines

    def test_csv(self, tmp_path):
        path = write_code(tmp_path, "tetra.json", 3, [[1, 0, 1, 1], [0, 1, 1, 2]])
        code, text = run("--format", "csv", "analyze", path)
        assert code == EXIT_OK
        assert text == "weight,count\n0,1\n3,8\n"

    def test_malformed(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("[1, 2")
        code, _ = run("analyze", str(path))
        assert code == EXIT_USAGE


class TestVerify:

    def test_worked_example(self):
        code, text = run("verify", "--p", "3", "--m", "2", "--coeffs", "a8,a1",
                         "--targets", "table,dual,extended,lcd", "--samples", "20")
        assert code == EXIT_OK
        reports = [json.loads(line) for line in text.splitlines()]
        assert [r["target"] for r in reports] == ["table", "dual", "extended", "lcd"]
        assert all(r["verdict"] == "Pass" for r in reports)

    def test_all_alphas(self):
        code, text = run("verify", "--p", "3", "--m", "2", "--coeffs", "a8,a1",
                         "--targets", "walsh", "--all-alphas")
        assert code == EXIT_OK
        assert len(text.splitlines()) == 4

    def test_unknown_target(self):
        code, _ = run("verify", "--p", "3", "--m", "2", "--coeffs", "a8,a1", "--targets", "bogus")
        assert code == EXIT_USAGE


class TestScan:

    def test_cap(self):
        code, _ = run("scan", "--p", "5", "--m", "5", "--count", "1")
        assert code == EXIT_CAP

    def test_summary_line(self):
        code, text = run("--seed", "3", "scan", "--p", "3", "--m", "2", "--count", "5",
                         "--targets", "table,walsh")
        assert code == EXIT_OK
        summary = json.loads(text.splitlines()[-1])["summary"]
        assert summary["specs"] == 5

    def test_count_and_exhaustive_exclusive(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["scan", "--p", "3", "--m", "2", "--count", "2", "--exhaustive"])


class TestSelfDual:

    def test_from_cstar(self, tmp_path):
        _, cstar = run("construct", "--p", "3", "--m", "2", "--coeffs", "a8,a1", "--which", "cstar")
        path = tmp_path / "cstar.json"
        path.write_text(cstar)
        code, text = run("selfdual", str(path))
        assert code == EXIT_OK
        data = json.loads(text)
        assert (data["n"], data["k"]) == (8, 4)

    def test_length_condition(self, tmp_path):
        path = write_code(tmp_path, "c.json", 3, [[1, 1, 1, 0, 0, 0, 0, 0, 0, 0]])
        code, text = run("selfdual", path)
        assert code == EXIT_OK
        assert json.loads(text) == {"self_dual": False, "n": 10, "violated": "n ≢ 0 mod 4"}

    def test_not_self_orthogonal(self, tmp_path):
        path = write_code(tmp_path, "c.json", 3, [[1, 0, 0, 0]])
        code, _ = run("selfdual", path)
        assert code == EXIT_PRECONDITION


class TestFieldInfo:

    def test_json(self):
        code, text = run("field-info", "--p", "3", "--m", "2")
        assert code == EXIT_OK
        data = json.loads(text)
        assert data["q"] == 9
        assert data["poly"] == [1, 0, 1]
        assert data["primitive_count"] == 4

    def test_reducible_poly(self):
        code, _ = run("field-info", "--p", "3", "--m", "2", "--poly", "2,0,1")
        assert code == EXIT_PRECONDITION

    def test_pretty_lists_every_element(self):
        code, text = run("--format", "pretty", "field-info", "--p", "2", "--m", "3")
        assert code == EXIT_OK
        assert len(text.splitlines()) == 1 + 8
