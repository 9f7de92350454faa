"""
Solution counts N_t: brute force against the closed forms.
"""

import itertools

import numpy as np
import pytest

from algebra.gf import field_new
from functions.pfunction import PFunction, QuadraticSpec
from functions.solutions import count_solutions, expected_solutions
from functions.walsh import analyse


def _profiles(p, m, count, seed):
    ctx = field_new(p, m)
    rng = np.random.default_rng(seed)
    width = (m + 1) // 2 + 1
    for _ in range(count):
        spec = QuadraticSpec.from_indices(ctx, rng.integers(0, ctx.q, size=width).tolist())
        yield analyse(spec.to_function())


class TestClosedForm:

    @pytest.mark.parametrize("p,m", [(3, 2), (3, 3), (5, 2), (2, 4)])
    def test_every_triple(self, p, m):
        for profile in _profiles(p, m, 4, seed=p + m):
            ctx = profile.ctx
            for a, j, t in itertools.product(range(p), range(ctx.q), range(p)):
                b = ctx.element(j)
                assert count_solutions(profile.f, a, b, t) == expected_solutions(profile, a, b, t), (
                    profile.f.label, a, j, t,
                )

    def test_counts_partition_the_field(self, ternary_profile):
        ctx = ternary_profile.ctx
        for a, j in itertools.product(range(3), range(ctx.q)):
            b = ctx.element(j)
            assert sum(count_solutions(ternary_profile.f, a, b, t) for t in range(3)) == ctx.q

    def test_a_zero(self, ternary_profile):
        ctx = ternary_profile.ctx
        assert expected_solutions(ternary_profile, 0, ctx.zero, 0) == 9
        assert expected_solutions(ternary_profile, 0, ctx.zero, 1) == 0
        assert expected_solutions(ternary_profile, 0, ctx.one, 2) == 3

    def test_not_plateaued_has_no_closed_form(self):
        ctx = field_new(2, 4)
        table = [0] * 16
        table[0] = 1
        profile = analyse(PFunction(ctx, table))
        assert expected_solutions(profile, 1, ctx.one, 1) is None
