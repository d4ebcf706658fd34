"""Tests for base-field p-adic scalars."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlab.core.exceptions import PrecisionError
from rlab.core.padic import PadicScalar, gcd_valuation

PREC = 8
MODULUS = 3**PREC


class TestConstruction:
    """Normalization of p^v * unit mod p^N."""

    def test_from_int_splits_valuation(self):
        x = PadicScalar.from_int(3, 18, PREC)
        assert x.valuation == 2
        assert x.unit == 2
        assert x.abs_prec == PREC

    def test_zero_has_valuation_at_precision(self):
        x = PadicScalar.from_int(3, 3**PREC, PREC)
        assert x.is_zero()
        assert x.valuation == PREC
        assert repr(x) == f"O(3^{PREC})"

    def test_from_fraction_negative_valuation(self):
        x = PadicScalar.from_fraction(3, Fraction(1, 3), PREC)
        assert x.valuation == -1
        assert x.unit == 1

    def test_digits_least_significant_first(self):
        x = PadicScalar.from_int(3, 5, 3)
        assert x.digits == [2, 1, 0]

    def test_residue_beyond_precision(self):
        x = PadicScalar.from_int(3, 5, 3)
        with pytest.raises(PrecisionError, match="residue mod 3\\^4"):
            x.residue(4)

    def test_to_int_rejects_non_integral(self):
        x = PadicScalar.from_fraction(3, Fraction(1, 3), PREC)
        with pytest.raises(ValueError, match="not p-integral"):
            x.to_int()


class TestArithmetic:
    """Ring operations agree with integer arithmetic modulo p^N."""

    @given(st.integers(), st.integers())
    @settings(deadline=None)
    def test_add_matches_integers(self, a, b):
        x = PadicScalar.from_int(3, a, PREC)
        y = PadicScalar.from_int(3, b, PREC)
        assert (x + y).residue(PREC) == (a + b) % MODULUS

    @given(st.integers(), st.integers())
    @settings(deadline=None)
    def test_mul_matches_integers(self, a, b):
        x = PadicScalar.from_int(3, a, PREC)
        y = PadicScalar.from_int(3, b, PREC)
        assert (x * y).residue(PREC) == (a * b) % MODULUS

    @given(st.integers(min_value=1), st.integers(min_value=1, max_value=10**6))
    @settings(deadline=None)
    def test_division_inverts_multiplication(self, a, b):
        x = PadicScalar.from_int(3, a, PREC)
        y = PadicScalar.from_int(3, b, PREC)
        assert (x * y) / y == x

    def test_division_by_zero_raises(self):
        x = PadicScalar.from_int(3, 1, PREC)
        zero = PadicScalar.from_int(3, 0, PREC)
        with pytest.raises(PrecisionError, match="indistinguishable from 0"):
            x / zero

    def test_division_loses_relative_precision(self):
        x = PadicScalar.from_int(3, 1, PREC)
        y = PadicScalar.from_int(3, 9, PREC)
        q = x / y
        assert q.valuation == -2
        assert q.relative_precision == PREC - 2

    def test_scale_p_shifts_precision(self):
        x = PadicScalar.from_int(3, 2, PREC).scale_p(-3)
        assert x.valuation == -3
        assert x.abs_prec == PREC - 3

    def test_integer_coercion(self):
        x = PadicScalar.from_int(3, 7, PREC)
        assert x - 7 == 0
        assert 2 * x == 14

    def test_mixed_primes_rejected(self):
        with pytest.raises(ValueError, match="different primes"):
            PadicScalar.from_int(3, 1, PREC) + PadicScalar.from_int(5, 1, PREC)


def test_gcd_valuation():
    assert gcd_valuation(3, [9, 27, 0]) == 2
    assert gcd_valuation(3, [2, 9]) == 0
    assert gcd_valuation(3, [0, 0]) == -1
