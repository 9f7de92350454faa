"""
Interchange files: codes, functions, CycInts, reports.
"""

import json

import pytest

from algebra.cyclo import CycInt
from codes.linear_code import LinearCode, WeightDistribution
from common.errors import MalformedInput, UsageError
from formats.codec import (
    code_to_json,
    cycint_from_json,
    cycint_to_json,
    function_to_json,
    load_code,
    load_function,
    parse_coeffs,
    report_lines,
    spec_to_json,
    weights_csv,
)
from verify import VerifyReport


class TestCoefficients:

    def test_alpha_powers(self, gf9):
        spec = parse_coeffs(gf9, "a8,a1")
        assert spec.coeffs[0] == gf9.one
        assert spec.coeffs[1] == gf9.alpha_pow(1)

    def test_zero_token(self, gf9):
        assert parse_coeffs(gf9, "0, a3").coeffs[0] == gf9.zero

    @pytest.mark.parametrize("raw", ["b1,a2", "a,a1", "1,a1", ""])
    def test_rejects_bad_tokens(self, gf9, raw):
        with pytest.raises(UsageError):
            parse_coeffs(gf9, raw)


class TestCodes:

    def test_code_file_roundtrip(self, tmp_path, ternary_bundle):
        path = tmp_path / "cbar.json"
        path.write_text(code_to_json(ternary_bundle.cbar))
        loaded = load_code(path)
        assert (loaded.n, loaded.k) == (9, 4)
        assert loaded.contains(ternary_bundle.cbar)
        assert loaded.provenance["which"] == "cbar"

    def test_dependent_rows_are_reduced(self, tmp_path):
        path = tmp_path / "code.json"
        path.write_text(json.dumps({"p": 3, "n": 3, "gen": [[1, 2, 0], [2, 1, 0]]}))
        assert load_code(path).k == 1

    def test_k_in_output(self):
        data = json.loads(code_to_json(LinearCode(2, [[1, 1, 0], [0, 1, 1]])))
        assert data["k"] == 2
        assert data["gen"] == [[1, 1, 0], [0, 1, 1]]

    @pytest.mark.parametrize(
        "payload",
        [
            "{not json",
            json.dumps({"p": 3, "n": 4, "gen": [[1, 0, 0]]}),
            json.dumps({"p": 1, "n": 1, "gen": [[1]]}),
            json.dumps({"n": 2, "gen": [[1, 0]]}),
        ],
    )
    def test_malformed(self, tmp_path, payload):
        path = tmp_path / "bad.json"
        path.write_text(payload)
        with pytest.raises(MalformedInput):
            load_code(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(MalformedInput):
            load_code(tmp_path / "absent.json")

    def test_weights_csv(self):
        dist = WeightDistribution.from_weights(4, {0: 1, 3: 8})
        assert weights_csv(dist) == "weight,count\n0,1\n3,8\n"


class TestFunctions:

    def test_table_file(self, tmp_path, ternary_example):
        path = tmp_path / "f.json"
        path.write_text(function_to_json(ternary_example))
        loaded = load_function(path)
        assert loaded.table.tolist() == ternary_example.table.tolist()
        assert loaded.ctx == ternary_example.ctx

    def test_quadratic_spec_file(self, tmp_path, gf9, ternary_example):
        path = tmp_path / "spec.json"
        path.write_text(spec_to_json(parse_coeffs(gf9, "a8,a1")))
        assert load_function(path).table.tolist() == ternary_example.table.tolist()

    def test_not_a_function(self, tmp_path):
        path = tmp_path / "f.json"
        path.write_text(json.dumps({"table": [0, 1]}))
        with pytest.raises(MalformedInput):
            load_function(path)

    def test_reducible_field_poly(self, tmp_path):
        # x^2 + 2 = (x + 1)(x + 2) over GF(3)
        path = tmp_path / "f.json"
        path.write_text(json.dumps({"field": {"p": 3, "m": 2, "poly": [2, 0, 1]}, "table": [0] * 9}))
        with pytest.raises(MalformedInput, match="bad field"):
            load_function(path)

    def test_composite_field_in_spec_file(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps({"field": {"p": 4, "m": 1}, "coeffs": [[0, 1]]}))
        with pytest.raises(MalformedInput):
            load_function(path)

    def test_short_table(self, tmp_path, gf9):
        path = tmp_path / "f.json"
        path.write_text(json.dumps({"field": gf9.to_dict(), "table": [0] * 5}))
        with pytest.raises(MalformedInput):
            load_function(path)


class TestCycInt:

    def test_roundtrip(self):
        x = CycInt(3, (5, -2))
        assert cycint_from_json(cycint_to_json(x)) == x

    def test_non_decimal_coords(self):
        with pytest.raises(MalformedInput):
            cycint_from_json('{"p": 3, "coords": ["1", "x"]}')


class TestReports:

    def test_one_line_per_report(self):
        r = VerifyReport.not_applicable("dual", {"p": 3}, "needs m + s >= 3")
        lines = report_lines([r, r]).splitlines()
        assert len(lines) == 2
        assert json.loads(lines[0])["verdict"] == "NotApplicable"
