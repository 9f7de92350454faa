"""
CYCLOTOMIC INTEGER TESTS
========================
  - ring arithmetic and normal form
  - Gauss sums and sqrt(p*) powers
  - Galois automorphisms
  - rational extraction
"""

import pytest

from algebra.characters import expected_field_gauss_sum, field_quad_gauss_sum
from algebra.cyclo import (
    CycInt,
    as_rational_int,
    cyc,
    legendre,
    pstar,
    quad_gauss_sum,
    sigma,
    sqrt_pstar_pow,
)
from algebra.gf import field_new
from common.errors import EvenPrime, MixedRootOrder, NotAUnit

PRIMES = [3, 5, 7, 11, 13]


class TestArithmetic:

    def test_zeta_power_cycle(self):
        z = CycInt.zeta_pow(5, 1)
        assert z ** 5 == CycInt.from_int(5, 1)

    def test_sum_of_roots_is_minus_one(self):
        total = CycInt.zero(7)
        for j in range(1, 7):
            total = total + CycInt.zeta_pow(7, j)
        assert total == CycInt.from_int(7, -1)

    def test_int_coercion(self):
        x = CycInt.zeta_pow(3, 1)
        assert (x + 2) - 2 == x
        assert 3 * x == x + x + x

    def test_mixed_root_order(self):
        with pytest.raises(MixedRootOrder):
            CycInt.zeta_pow(3, 1) + CycInt.zeta_pow(5, 1)

    def test_dispatch(self):
        a = cyc("zeta_pow", 5, 2)
        b = cyc("from_int", 5, 3)
        assert cyc("add", a, b) == a + b
        assert cyc("mul", a, b) == a * 3

    def test_binary_ring_is_integers(self):
        assert (CycInt.zeta_pow(2, 1)).as_rational_int() == -1
        assert (CycInt.from_int(2, 6) * CycInt.from_int(2, -7)).as_rational_int() == -42

    def test_dict_roundtrip(self):
        x = quad_gauss_sum(5) * 12345678901234567
        data = x.to_dict()
        assert all(isinstance(c, str) for c in data["coords"])
        assert CycInt.from_dict(data) == x


class TestGaussSums:

    @pytest.mark.parametrize("p", PRIMES)
    def test_square_is_pstar(self, p):
        g = quad_gauss_sum(p)
        assert g * g == CycInt.from_int(p, pstar(p))

    @pytest.mark.parametrize("p", PRIMES)
    def test_sigma_equivariance(self, p):
        g = quad_gauss_sum(p)
        for a in range(1, p):
            assert sigma(a, g) == g * legendre(a, p)

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_sqrt_pstar_powers(self, p):
        for e in range(6):
            assert sqrt_pstar_pow(p, e) * sqrt_pstar_pow(p, e) == CycInt.from_int(p, pstar(p) ** e)

    def test_pstar_sign(self):
        assert pstar(3) == -3
        assert pstar(5) == 5
        with pytest.raises(EvenPrime):
            pstar(2)

    @pytest.mark.parametrize("p,m", [(3, 1), (3, 2), (3, 3), (5, 2), (7, 2)])
    def test_field_gauss_sum(self, p, m):
        ctx = field_new(p, m)
        assert field_quad_gauss_sum(ctx) == expected_field_gauss_sum(p, m)


class TestAutomorphisms:

    def test_sigma_is_ring_map(self):
        x = CycInt.zeta_pow(7, 1) + 3
        y = CycInt.zeta_pow(7, 4) * 2
        for a in range(1, 7):
            assert sigma(a, x * y) == sigma(a, x) * sigma(a, y)
            assert sigma(a, x + y) == sigma(a, x) + sigma(a, y)

    def test_not_a_unit(self):
        with pytest.raises(NotAUnit):
            CycInt.zeta_pow(5, 1).sigma(10)

    def test_conj_is_sigma_minus_one(self):
        x = CycInt.zeta_pow(5, 2) + 4
        assert x.conj() == x.sigma(4)


class TestRationalExtraction:

    def test_rational(self):
        assert as_rational_int(CycInt.from_int(11, -9)) == -9

    def test_irrational(self):
        assert as_rational_int(quad_gauss_sum(5)) is None

    def test_norm_of_gauss_sum(self):
        g = quad_gauss_sum(13)
        assert (g * g.conj()).as_rational_int() == 13

    def test_approx_matches(self):
        g = quad_gauss_sum(5)
        assert abs(g.approx() - 5 ** 0.5) < 1e-9
