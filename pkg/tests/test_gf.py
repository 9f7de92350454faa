"""
FINITE FIELD TESTS
==================
  - field_new validation and defaults
  - canonical element order
  - trace values and linearity
  - arithmetic laws
  - primitive elements
"""

import itertools
from math import gcd

import numpy as np
import pytest

from algebra.gf import arith, default_poly, field_new, is_irreducible, trace
from common.errors import DivisionByZero, FieldTooLarge, NonPrime, NoPrimitiveElement, ReduciblePoly


class TestFieldNew:

    def test_gf2(self):
        ctx = field_new(2, 1)
        assert ctx.q == 2
        assert list(ctx.alpha) == [1]
        assert [list(x) for x in ctx.elements()] == [[1], [0]]

    def test_gf9_with_x2_plus_1(self):
        ctx = field_new(3, 2, [1, 0, 1])
        assert ctx.poly == (1, 0, 1)
        assert ctx.q == 9

    def test_default_poly_is_least_irreducible(self):
        assert default_poly(3, 2) == [1, 0, 1]
        assert default_poly(2, 3) == [1, 0, 1, 1]

    def test_non_prime(self):
        with pytest.raises(NonPrime):
            field_new(4, 1)

    def test_reducible_poly(self):
        # x^2 + 2 = (x + 1)(x + 2) over GF(3)
        with pytest.raises(ReduciblePoly):
            field_new(3, 2, [2, 0, 1])

    def test_non_monic_poly(self):
        with pytest.raises(ReduciblePoly):
            field_new(3, 2, [1, 0, 2])

    def test_field_cap(self):
        with pytest.raises(FieldTooLarge):
            field_new(2, 17)

    def test_non_primitive_alpha(self):
        # theta with theta^2 = -1 has order 4 in GF(9)*
        with pytest.raises(NoPrimitiveElement):
            field_new(3, 2, [1, 0, 1], alpha=[0, 1])

    def test_irreducibility_by_degree(self):
        assert is_irreducible([1, 1, 1], 2)
        assert not is_irreducible([1, 0, 1], 2)


class TestCanonicalOrder:

    @pytest.mark.parametrize("p,m", [(2, 4), (3, 2), (3, 3), (5, 2), (7, 1)])
    def test_each_element_once_zero_last(self, p, m):
        ctx = field_new(p, m)
        elems = [tuple(x) for x in ctx.elements()]
        assert len(set(elems)) == ctx.q
        assert elems[-1] == (0,) * m
        assert elems[0] == (1,) + (0,) * (m - 1)

    def test_index_is_alpha_power(self, gf9):
        for i in range(gf9.q - 1):
            assert gf9.element(i) == gf9.pow(gf9.alpha, i)

    def test_index_of_roundtrip(self, gf9):
        for i, x in enumerate(gf9.elements()):
            assert gf9.index_of(x) == i


class TestTrace:

    def test_trace_zero(self, gf9):
        assert trace(gf9, gf9.zero) == 0

    def test_trace_theta(self, gf9):
        assert trace(gf9, (0, 1)) == 0

    def test_trace_one(self, gf9):
        assert trace(gf9, gf9.one) == 2

    @pytest.mark.parametrize("p,m", [(2, 5), (3, 3), (5, 2)])
    def test_kernel_size(self, p, m):
        ctx = field_new(p, m)
        assert int(np.count_nonzero(ctx.trace_table == 0)) == p ** (m - 1)

    def test_frobenius_sum_oracle(self, gf9):
        for x in gf9.elements():
            acc = gf9.zero
            for i in range(gf9.m):
                acc = gf9.add(acc, gf9.pow(x, gf9.p ** i))
            assert acc == gf9.from_int(trace(gf9, x))

    def test_linearity(self):
        ctx = field_new(3, 3)
        elems = ctx.elements()
        for x, y in itertools.product(elems[::4], elems[::3]):
            assert trace(ctx, ctx.add(x, y)) == (trace(ctx, x) + trace(ctx, y)) % 3
        for c, x in itertools.product(range(3), elems):
            assert trace(ctx, ctx.mul(ctx.from_int(c), x)) == c * trace(ctx, x) % 3

    def test_trace_products_matches_pointwise(self, gf9):
        table = gf9.trace_products([0, 3, gf9.zero_index])
        elems = gf9.elements()
        for r, row in enumerate([0, 3, gf9.zero_index]):
            d = gf9.element(row)
            assert table[r].tolist() == [trace(gf9, gf9.mul(d, x)) for x in elems]


class TestArithmetic:
    """Field laws on GF(9) with modulus x^2 + 1."""

    def setup_method(self):
        self.ctx = field_new(3, 2, [1, 0, 1])

    def test_theta_squared(self):
        """theta^2 = -1 = 2."""
        theta = (0, 1)
        assert arith(self.ctx, "mul", theta, theta) == self.ctx.from_int(2)

    def test_inverse(self):
        ctx = field_new(5, 2)
        for x in ctx.elements()[:-1]:
            assert ctx.mul(x, arith(ctx, "inv", x)) == ctx.one

    def test_inverse_of_zero(self):
        with pytest.raises(DivisionByZero):
            arith(self.ctx, "inv", self.ctx.zero)

    def test_lagrange(self, gf64):
        assert arith(gf64, "pow", gf64.alpha, gf64.q - 1) == gf64.one

    def test_distributive(self):
        ctx = self.ctx
        for x, y, z in itertools.product(ctx.elements(), repeat=3):
            left = ctx.mul(x, ctx.add(y, z))
            right = ctx.add(ctx.mul(x, y), ctx.mul(x, z))
            assert left == right

    def test_neg(self):
        for x in self.ctx.elements():
            assert arith(self.ctx, "add", x, arith(self.ctx, "neg", x)) == self.ctx.zero


class TestPrimitiveElements:

    @pytest.mark.parametrize("p,m", [(3, 2), (2, 4), (5, 2)])
    def test_count_is_euler_phi(self, p, m):
        ctx = field_new(p, m)
        n = ctx.q - 1
        assert len(ctx.primitive_elements()) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)

    def test_with_alpha_reorders(self, gf9):
        other = gf9.primitive_elements()[1]
        ctx = gf9.with_alpha(other)
        assert ctx.alpha == other
        assert ctx.element(1) == other
        assert ctx.poly == gf9.poly
