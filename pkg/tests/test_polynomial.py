"""Tests for polynomials over O_K, lifts and Hensel lifting."""
import pytest

from rlab.core.exceptions import ConvergenceError, DomainError
from rlab.core.field import KElement, random_element
from rlab.core.polynomial import (
    KPolynomial,
    canonical_poly_lift,
    eval_deriv,
    eval_poly,
    find_zeta,
    hensel_root,
    poly_lift,
)


class TestKPolynomial:

    def test_eisenstein_vanishes_at_pi(self, f0):
        assert KPolynomial.eisenstein(f0)(f0.pi) == 0

    def test_cyclotomic(self, f0):
        phi = KPolynomial.cyclotomic(f0, 1)
        assert [c.to_int() for c in phi.coeffs] == [1, 1, 1]
        assert phi(f0.zeta) == 0

    def test_product(self, f0):
        plus = KPolynomial.from_ints(f0, [1, 1])
        minus = KPolynomial.from_ints(f0, [-1, 1])
        assert (plus * minus)(f0.pi) == f0.pi * f0.pi - 1

    def test_sum_pads_degrees(self, f0):
        total = KPolynomial.from_ints(f0, [1]) + KPolynomial.from_ints(f0, [0, 0, 1])
        assert total.degree == 2
        assert total(f0.from_int(2)) == 5

    def test_derivative(self, f0):
        cube = KPolynomial.from_ints(f0, [0, 0, 0, 1])
        assert cube.derivative()(f0.from_int(2)) == 12

    def test_eval_poly_and_derivative(self, f0):
        eisenstein = KPolynomial.eisenstein(f0)
        assert eval_poly(eisenstein, f0.pi).is_zero()
        # 2 pi + 3 generates the different
        assert eval_deriv(eisenstein, f0.pi) == f0.pi * 2 + 3
        assert eval_deriv(eisenstein, f0.pi).pi_valuation() == f0.different_exponent


class TestLifts:
    """g(pi) = x for the canonical and alternative primes."""

    @pytest.mark.parametrize("seed", range(4))
    def test_canonical(self, f0, seed):
        x = random_element(f0, "integral", seed)
        assert canonical_poly_lift(x)(f0.pi) == x
        assert eval_poly(canonical_poly_lift(x), f0.pi) == x

    @pytest.mark.parametrize("seed", range(4))
    def test_alternative_prime(self, f0, seed):
        prime = f0.pi * (f0.pi + 1)
        x = random_element(f0, "integral", seed)
        assert poly_lift(x, prime)(prime) == x

    def test_non_prime_rejected(self, f0):
        with pytest.raises(DomainError, match="not a prime element"):
            poly_lift(f0.one, f0.from_int(3))

    def test_non_integral_rejected(self, f0):
        with pytest.raises(DomainError, match="integral"):
            canonical_poly_lift(f0.pi.inv())


class TestHensel:

    def test_square_root_of_seven(self, f0):
        f = KPolynomial.from_ints(f0, [-7, 0, 1])
        root = hensel_root(f, f0.from_int(1))
        assert root * root == 7

    def test_vanishing_derivative(self, f0):
        f = KPolynomial.from_ints(f0, [0, 0, 1])
        with pytest.raises(ConvergenceError, match="vanishes"):
            hensel_root(f, KElement.zero(f0))

    def test_bad_start(self, f0):
        # 2 is not a square mod 3
        f = KPolynomial.from_ints(f0, [-2, 0, 1])
        with pytest.raises(ConvergenceError, match="no quadratic convergence"):
            hensel_root(f, f0.from_int(1))


class TestFindZeta:

    def test_level_one(self, f0):
        assert find_zeta(f0, 1) == f0.pi + 1

    def test_level_zero(self, f0):
        assert find_zeta(f0, 0) == 1

    def test_absent(self, f0, q3):
        assert find_zeta(f0, 2) is None
        assert find_zeta(q3, 1) is None

    @pytest.mark.slow
    def test_fifth_roots(self, q5):
        zeta = q5.zeta
        assert zeta**5 == 1
        assert zeta != 1
