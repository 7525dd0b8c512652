import pytest

from qseries.oracle import (
    bilateral_theta,
    count_bipartitions,
    count_regular,
    divisor_count_difference,
    lattice_a,
    naive_euler,
)
from qseries.qfunctions import (
    bipartition_series,
    borwein_a,
    euler_f,
    pk_series,
    ramanujan_theta,
    regular_series,
    septic_ABC,
)
from qseries.series import EXACT, TruncatedSeries, mod_ring


class TestEulerF:
    def test_frozen_prefixes(self):
        assert euler_f(1, 13).coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)
        assert euler_f(2, 5).coeffs == (1, 0, -1, 0, -1)

    def test_against_naive_product(self):
        for k in range(1, 51):
            assert euler_f(k, 500) == naive_euler(k, 500), k

    def test_index_scaling(self):
        for k in (2, 3, 7, 49):
            n = 90
            inner = euler_f(1, -(-n // k))
            assert inner.substitute_power(k).truncate(n) == euler_f(k, n)

    def test_validation(self):
        with pytest.raises(ValueError):
            euler_f(0, 10)
        with pytest.raises(ValueError):
            euler_f(1, 0)


class TestPkSeries:
    def test_partition_numbers(self):
        assert pk_series(-1, 10).coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30)

    def test_fifth_power_value(self):
        assert pk_series(5, 4).coeffs[3] == 10

    def test_ninth_power_value(self):
        assert pk_series(9, 5).coeffs[4] == -90

    def test_zero_power_rejected(self):
        with pytest.raises(ValueError):
            pk_series(0, 10)


class TestRamanujanTheta:
    def test_pentagonal_specialization(self):
        assert ramanujan_theta((1, 2), 120) == euler_f(1, 120)

    def test_frozen_prefixes(self):
        assert ramanujan_theta((1, 6), 8).coeffs == (1, -1, 0, 0, 0, 0, -1, 0)
        t = ramanujan_theta((3, 4), 8)
        assert t.coeffs[:5] == (1, 0, 0, -1, -1)

    def test_against_bilateral_oracle(self):
        for spec in ((1, 6), (2, 5), (3, 4), (1, 1), (2, 2), (5, 9)):
            assert ramanujan_theta(spec, 150) == bilateral_theta(*spec, 150)

    def test_validation(self):
        with pytest.raises(ValueError):
            ramanujan_theta((0, 3), 10)


class TestBorweinA:
    def test_frozen_prefix(self):
        assert borwein_a(1, 8).coeffs == (1, 6, 0, 6, 6, 0, 0, 12)

    def test_against_lattice_oracle(self):
        assert list(borwein_a(1, 120).coeffs) == lattice_a(120)

    def test_against_divisor_oracle(self):
        a = borwein_a(1, 200)
        for n in range(1, 200):
            assert a.coeffs[n] == 6 * divisor_count_difference(n), n

    def test_argument_power(self):
        n = 100
        inner = borwein_a(1, -(-n // 3))
        assert inner.substitute_power(3).truncate(n) == borwein_a(3, n)

    def test_cubic_dissection(self):
        # a(q) = a(q^3) + 6q f9^3/f3
        n = 200
        lhs = borwein_a(1, n)
        rhs = borwein_a(3, n) + (euler_f(9, n) ** 3 / euler_f(3, n)
                                 ).shift(1, cap=n).scalar_mul(6)
        assert lhs == rhs

    def test_euler_cube_identity(self):
        # f1^3 = f3 a(q^3) - 3q f9^3
        n = 200
        lhs = euler_f(1, n) ** 3
        rhs = (euler_f(3, n) * borwein_a(3, n)
               - (euler_f(9, n) ** 3).shift(1, cap=n).scalar_mul(3))
        assert lhs == rhs


class TestSepticABC:
    def test_constant_terms(self):
        a, b, c = septic_ABC(40)
        assert a.coeffs[0] == b.coeffs[0] == c.coeffs[0] == 1

    def test_quintic_combination(self):
        # B^5/(AC^4) - A^5/(B^4 C) - q^3 C^5/(A^4 B) = 3q
        n = 60
        a, b, c = septic_ABC(n)
        lhs = (b ** 5 / (a * c ** 4) - a ** 5 / (b ** 4 * c)
               - (c ** 5 / (a ** 4 * b)).shift(3, cap=n))
        assert lhs == TruncatedSeries.monomial(EXACT, n, 1, 3)

    def test_degree_seven_combination(self):
        # B^7/C^7 - q A^7/B^7 + q^5 C^7/A^7 = 14q f1^4/f7^4 + f1^8/f7^8 + 57q^2
        n = 60
        a, b, c = septic_ABC(n)
        lhs = (b ** 7 / c ** 7 - (a ** 7 / b ** 7).shift(1, cap=n)
               + (c ** 7 / a ** 7).shift(5, cap=n))
        f1, f7 = euler_f(1, n), euler_f(7, n)
        rhs = ((f1 ** 4 / f7 ** 4).shift(1, cap=n).scalar_mul(14)
               + f1 ** 8 / f7 ** 8
               + TruncatedSeries.monomial(EXACT, n, 2, 57))
        assert lhs == rhs

    def test_seven_dissection_of_euler(self):
        # f1 = f49 (B(q^7)/C(q^7) - q A(q^7)/B(q^7) - q^2 + q^5 C(q^7)/A(q^7))
        n = 140
        inner = -(-n // 7)
        a, b, c = septic_ABC(inner)
        a7 = a.substitute_power(7).truncate(n)
        b7 = b.substitute_power(7).truncate(n)
        c7 = c.substitute_power(7).truncate(n)
        bracket = (b7 / c7 - (a7 / b7).shift(1, cap=n)
                   - TruncatedSeries.monomial(EXACT, n, 2)
                   + (c7 / a7).shift(5, cap=n))
        assert euler_f(49, n) * bracket == euler_f(1, n)


class TestSevenDissectionLemmas:
    def test_fifth_power_on_7n_plus_3(self):
        n = 80
        lhs = pk_series(5, 7 * n + 3).extract(7, 3)
        f1, f7 = euler_f(1, n), euler_f(7, n)
        rhs = ((f1 ** 4 * f7).scalar_mul(10)
               + (f7 ** 5).shift(1, cap=n).scalar_mul(49))
        assert lhs.first_mismatch(rhs) is None

    def test_seventh_power_on_7n(self):
        n = 80
        lhs = pk_series(7, 7 * n).extract(7, 0)
        f1, f7 = euler_f(1, n), euler_f(7, n)
        rhs = (f1 ** 8 / f7
               + (f7 ** 3 * f1 ** 4).shift(1, cap=n).scalar_mul(49))
        assert lhs.first_mismatch(rhs) is None

    def test_ninth_power_on_7n_plus_4(self):
        n = 80
        lhs = pk_series(9, 7 * n + 4).extract(7, 4)
        f1, f7 = euler_f(1, n), euler_f(7, n)
        rhs = ((f1 ** 8 * f7).scalar_mul(-90)
               + (f1 ** 4 * f7 ** 5).shift(1, cap=n).scalar_mul(-882)
               + (f7 ** 9).shift(2, cap=n).scalar_mul(-2401))
        assert lhs.first_mismatch(rhs) is None


class TestPartitionFamilies:
    def test_regular_prefix(self):
        assert regular_series(2, 6).coeffs == (1, 1, 1, 2, 2, 3)

    def test_regular_nonnegative(self):
        assert all(v >= 0 for v in regular_series(7, 200).coeffs)

    def test_regular_large_index_is_partition_series(self):
        n = 30
        assert regular_series(97, n) == pk_series(-1, n)

    def test_regular_matches_count_oracle(self):
        for ell in (2, 3, 5, 15, 27):
            assert list(regular_series(ell, 300).coeffs) == count_regular(ell, 300)

    def test_bipartition_prefix(self):
        # direct enumeration gives B(0)=1, B(1)=2, B(2)=4
        assert bipartition_series(2, 15, 3).coeffs == (1, 2, 4)

    def test_bipartition_is_regular_convolution(self):
        n = 120
        bs = regular_series(2, n)
        bt = regular_series(15, n)
        assert bipartition_series(2, 15, n) == bs * bt

    def test_bipartition_matches_count_oracle(self):
        assert list(bipartition_series(7, 11, 250).coeffs) == \
            count_bipartitions(7, 11, 250)

    def test_known_vanishing_coefficient(self):
        series = bipartition_series(2, 15, 9, mod_ring(5))
        assert series.coeffs[8] == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            regular_series(1, 10)
        with pytest.raises(ValueError):
            bipartition_series(1, 15, 10)
