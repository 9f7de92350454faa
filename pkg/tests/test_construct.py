"""
CONSTRUCTION TESTS
==================
  - cbar / cf / cstar / extended shapes and generator rows
  - the ternary worked example
  - the binary bent example
  - degenerate inputs
"""

import numpy as np
import pytest

from codes.construct import build, build_extended, cbar_matrix, construct_bundle, g1_matrix
from codes.linear_code import enumerate_weights, gram_rank, is_lcd, is_self_orthogonal
from codes.macwilliams import macwilliams
from codes.self_dual import extend_to_self_dual
from common.errors import DegenerateRows
from functions.pfunction import PFunction
from verify.worked_example import CBAR_ENUMERATOR, reproduce


class TestShapes:

    def test_ternary_shapes(self, ternary_bundle):
        b = ternary_bundle
        assert (b.cbar.n, b.cbar.k) == (9, 4)
        assert (b.cf.n, b.cf.k) == (9, 3)
        assert (b.cstar.n, b.cstar.k) == (8, 3)
        assert (b.extended.n, b.extended.k) == (13, 4)

    def test_row_order(self, ternary_example):
        g = cbar_matrix(ternary_example)
        assert g[0].tolist() == [1] * 9
        assert g[1].tolist() == ternary_example.table.tolist()
        assert g[2].tolist() == ternary_example.ctx.trace_table.tolist()

    def test_g1_adds_one_to_f(self, ternary_example):
        g, g1 = cbar_matrix(ternary_example), g1_matrix(ternary_example)
        assert ((g1[1] - g[1]) % 3 == 1).all()
        assert (g1[[0, 2, 3]] == g[[0, 2, 3]]).all()

    def test_extended_leads_with_identity(self, ternary_bundle):
        gen = ternary_bundle.extended.gen
        assert (gen[:, :4] == np.eye(4, dtype=np.int64)).all()

    def test_last_column_is_zero_element(self, ternary_bundle):
        # x = 0 contributes only the all-ones entry
        assert ternary_bundle.cbar.gen[:, -1].tolist() == [1, 0, 0, 0]

    def test_provenance(self, ternary_bundle):
        prov = ternary_bundle.extended.provenance
        assert prov["which"] == "extended"
        assert (prov["p"], prov["m"], prov["s"]) == (3, 2, 1)
        assert prov["balanced"] is False

    def test_build_dispatch(self, ternary_example, ternary_profile):
        assert build(ternary_example, "cstar", ternary_profile).n == 8


class TestWorkedExample:

    def test_cbar_enumerator(self, ternary_bundle):
        dist = enumerate_weights(ternary_bundle.cbar)
        assert dist.enumerator() == CBAR_ENUMERATOR
        assert dist.min_distance == 3

    def test_cbar_dual(self, ternary_bundle):
        dual = macwilliams(enumerate_weights(ternary_bundle.cbar), 4, 3)
        assert dual.min_distance == 3
        assert dual.counts[3] == 6

    def test_cstar(self, ternary_bundle):
        dist = enumerate_weights(ternary_bundle.cstar)
        assert dist.min_distance == 3
        assert is_self_orthogonal(ternary_bundle.cstar)

    def test_self_dual_from_cstar(self, ternary_bundle):
        result = extend_to_self_dual(ternary_bundle.cstar)
        assert result.found
        assert (result.code.n, result.code.k) == (8, 4)
        assert gram_rank(result.code)[0] == 0
        # every ternary self-dual [8, 4] code is equivalent to the tetracode squared
        assert enumerate_weights(result.code).enumerator() == "1+16z^3+64z^6"

    def test_extended_is_lcd(self, ternary_bundle):
        assert is_lcd(ternary_bundle.extended)

    def test_extended_dual(self, ternary_bundle):
        ext = ternary_bundle.extended
        dual = macwilliams(enumerate_weights(ext), ext.k, 3)
        assert (ext.n, ext.n - ext.k, dual.min_distance) == (13, 9, 3)

    def test_reproduce_over_all_alphas(self):
        runs = reproduce()
        assert len(runs) == 4
        assert any(run.cbar_matches for run in runs)
        for run in runs:
            if run.cbar_matches:
                assert run.cstar_params == [8, 3, 3]
                assert run.cstar_self_orthogonal
                assert run.self_dual_gram_rank == 0


class TestBinaryBent:

    def test_shapes(self, binary_bent, binary_bent_profile):
        bundle = construct_bundle(binary_bent, binary_bent_profile)
        assert (bundle.cbar.n, bundle.cbar.k) == (64, 8)
        assert (bundle.extended.n, bundle.extended.k) == (72, 8)

    def test_bent_weight_distribution(self, binary_bent, binary_bent_profile):
        bundle = construct_bundle(binary_bent, binary_bent_profile)
        dist = enumerate_weights(bundle.cbar)
        assert dist.nonzero() == {0: 1, 28: 64, 32: 126, 36: 64, 64: 1}
        dual = macwilliams(dist, 8, 2)
        assert dual.min_distance == 4

    def test_binary_extended_is_lcd(self, binary_bent, binary_bent_profile):
        bundle = construct_bundle(binary_bent, binary_bent_profile)
        assert is_self_orthogonal(bundle.cbar)
        assert is_lcd(bundle.extended)

    def test_plain_extension_has_dual_distance_two(self, binary_bent):
        plain = build_extended(binary_bent, transformed=False)
        dual = macwilliams(enumerate_weights(plain), plain.k, 2)
        assert dual.min_distance == 2


class TestDegenerate:

    def test_affine_function_rejected(self, gf9):
        # f = tr(x) repeats a trace row
        with pytest.raises(DegenerateRows):
            construct_bundle(PFunction(gf9, gf9.trace_table.copy()))

    def test_zero_function_rejected(self, gf9):
        with pytest.raises(DegenerateRows):
            construct_bundle(PFunction(gf9, [0] * 9))
