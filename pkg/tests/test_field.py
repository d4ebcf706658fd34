"""Tests for field descriptions, towers and elements."""
from fractions import Fraction

import pytest

from rlab.core.exceptions import (
    DomainError,
    FieldDescriptionError,
    PrecisionError,
    PrecisionWarning,
)
from rlab.core.field import (
    FieldDesc,
    KElement,
    default_precision,
    from_pi_digits,
    make_field,
    norm_abs,
    pi_digits,
    random_element,
    trace_abs,
)
from rlab.core.presets import F0


class TestFieldDesc:
    """Validation of field descriptions."""

    def test_default_precision(self):
        assert default_precision(1, 2) == 40
        assert default_precision(2, 6) == 120

    def test_coefficients_padded_to_f(self):
        desc = FieldDesc(p=3, n=0, eisenstein=(3, 1), unram_poly=(2, 2, 1))
        assert desc.f == 2
        assert desc.eisenstein == ((3, 0), (1, 0))

    def test_non_prime_rejected(self):
        with pytest.raises(FieldDescriptionError, match="not prime"):
            FieldDesc(p=4, n=0, eisenstein=(2, 1)).validate()

    def test_constant_term_valuation_two_rejected(self):
        with pytest.raises(FieldDescriptionError, match="not Eisenstein"):
            FieldDesc(p=3, n=1, eisenstein=(9, 0, 1)).validate()

    def test_unit_middle_coefficient_rejected(self):
        with pytest.raises(FieldDescriptionError, match="coefficient of X\\^1"):
            FieldDesc(p=3, n=0, eisenstein=(3, 1, 1)).validate()

    def test_non_monic_rejected(self):
        with pytest.raises(FieldDescriptionError, match="monic"):
            FieldDesc(p=3, n=0, eisenstein=(3, 0, 2)).validate()

    def test_reducible_unram_poly_rejected(self):
        # X^2 - 1 splits mod 3
        with pytest.raises(FieldDescriptionError, match="reducible"):
            FieldDesc(p=3, n=0, eisenstein=(3, 1), unram_poly=(-1, 0, 1)).validate()

    def test_low_precision_warns(self):
        with pytest.warns(PrecisionWarning, match="below the default"):
            FieldDesc(p=3, n=1, eisenstein=(3, 3, 1), work_prec=10).validate()

    def test_missing_root_of_unity(self):
        # Q_3 has no cube root of unity
        with pytest.raises(FieldDescriptionError, match="not present"):
            make_field(FieldDesc(p=3, n=1, eisenstein=(3, 1)))

    def test_fingerprint_depends_on_precision(self):
        same = FieldDesc(p=3, n=1, eisenstein=(3, 3, 1), work_prec=40)
        other = FieldDesc(p=3, n=1, eisenstein=(3, 3, 1), work_prec=50)
        assert same.fingerprint() == F0.fingerprint()
        assert other.fingerprint() != F0.fingerprint()


class TestTower:
    """Constants of Q_3(zeta_3)."""

    def test_invariants(self, f0):
        assert (f0.p, f0.e, f0.f, f0.degree) == (3, 2, 1, 2)
        assert f0.different_exponent == 1
        assert f0.pth_power_level == 3

    def test_pi_is_a_root(self, f0):
        pi = f0.pi
        assert pi * pi + pi * 3 + 3 == 0

    def test_zeta_is_one_plus_pi(self, f0):
        zeta = f0.zeta
        assert zeta == f0.pi + 1
        assert zeta**3 == 1
        assert zeta != 1

    def test_eps_is_pi_power_over_p(self, f0):
        assert f0.eps * 3 == f0.pi_power(2)

    def test_with_precision(self, f0):
        higher = f0.with_precision(60)
        assert higher.prec == 60
        assert higher.same_field(f0)


class TestKElement:
    """Arithmetic, valuations, trace and norm."""

    def test_coordinate_count_checked(self, f0):
        with pytest.raises(ValueError, match="expected 2 coordinates"):
            KElement(f0, [1, 2, 3])

    def test_valuations(self, f0):
        three = f0.from_int(3)
        assert three.pi_valuation() == 2
        assert f0.pi.ord() == Fraction(1, 2)
        assert not f0.pi.is_unit()
        assert f0.zeta.is_unit()

    def test_pi_division(self, f0):
        assert f0.pi.mul_pi_power(-1) == 1
        assert f0.from_int(3).mul_pi_power(-2) == f0.eps_inv

    def test_trace_and_norm_of_pi(self, f0):
        assert f0.pi.trace() == -3
        assert f0.pi.norm() == 3
        assert f0.one.trace() == 2

    def test_absolute_trace_and_norm(self, f0):
        assert trace_abs(f0.from_int(5)) == 10
        assert norm_abs(f0.from_int(5)) == 25
        # pi^2 = -3 pi - 3
        assert trace_abs(f0.pi_power(2)) == 3
        assert trace_abs(f0.zeta) == -1
        assert norm_abs(f0.zeta) == 1

    @pytest.mark.parametrize("seed", range(5))
    def test_inverse(self, f0, seed):
        x = random_element(f0, "nonzero", seed)
        assert x * x.inv() == 1

    @pytest.mark.parametrize("seed", range(5))
    def test_norm_multiplicative(self, f0, seed):
        x = random_element(f0, "nonzero", seed)
        y = random_element(f0, "nonzero", seed + 100)
        assert (x * y).norm() == x.norm() * y.norm()

    def test_inverse_of_zero(self, f0):
        with pytest.raises(PrecisionError, match="indistinguishable from 0"):
            KElement.zero(f0).inv()

    def test_fraction_coercion(self, f0):
        third = KElement.from_fraction(f0, Fraction(1, 3))
        assert third.shift == -1
        assert third * 3 == 1
        assert not third.is_integral()

    def test_to_int_requires_base_field(self, f0):
        assert f0.from_int(7).to_int() == 7
        with pytest.raises(DomainError, match="does not lie in Q_p"):
            f0.pi.to_int()

    def test_elements_unhashable(self, f0):
        with pytest.raises(TypeError):
            hash(f0.one)


class TestPiDigits:
    """Canonical pi-adic expansions."""

    @pytest.mark.parametrize("seed", range(5))
    def test_roundtrip(self, f0, seed):
        x = random_element(f0, "integral", seed)
        back = from_pi_digits(f0, pi_digits(x, 6))
        diff = x - back
        assert diff.is_zero() or diff.pi_valuation() >= 6

    def test_digits_of_three(self, f0):
        # 3 = -pi^2 - 3 pi, so modulo pi^3 it is 2 pi^2
        assert pi_digits(f0.from_int(3), 3) == ((0,), (0,), (2,))

    def test_non_integral_rejected(self, f0):
        with pytest.raises(DomainError, match="integral"):
            pi_digits(f0.pi.inv(), 2)


class TestRandomElement:
    """Seeded sampling used by the property suites."""

    def test_deterministic(self, f0):
        assert random_element(f0, "unit", 7) == random_element(f0, "unit", 7)

    def test_principal_bound(self, f0):
        x = random_element(f0, "principal", 3, Fraction(1))
        assert (x - 1).is_zero() or (x - 1).ord() >= 1

    def test_unit(self, f0):
        for seed in range(5):
            assert random_element(f0, "unit", seed).is_unit()

    def test_unknown_kind(self, f0):
        with pytest.raises(ValueError, match="unknown sampling constraint"):
            random_element(f0, "prime", 0)
