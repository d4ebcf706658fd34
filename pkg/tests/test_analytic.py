"""Tests for the p-adic logarithm and exponential."""
from fractions import Fraction

import pytest

from rlab.core.analytic import exp_budget, exp_eta, log_budget, pexp, plog
from rlab.core.exceptions import ConvergenceError, DomainError
from rlab.core.field import random_element


class TestBudgets:
    """Certified truncation points."""

    def test_log_budget(self):
        budget = log_budget(3, Fraction(1), 20)
        assert budget.term_count == 21
        assert budget.tail_bound == 20

    def test_exp_budget(self):
        budget = exp_budget(3, Fraction(1), 20)
        assert budget.term_count == 38
        assert budget.tail_bound == 20

    def test_extra_terms(self):
        assert exp_budget(3, Fraction(1), 20, extra_terms=5).term_count == 43


class TestLog:

    def test_log_of_four(self, f0):
        # log 4 = 3 mod 9
        assert plog(f0.from_int(4)).residue(2) == (3, 0)

    def test_log_of_one(self, f0):
        assert plog(f0.one).is_zero()

    def test_non_principal_rejected(self, f0):
        with pytest.raises(DomainError, match="ord\\(x - 1\\)"):
            plog(f0.pi)

    @pytest.mark.parametrize("seed", range(4))
    def test_homomorphism(self, f0, seed):
        x = random_element(f0, "principal", seed)
        y = random_element(f0, "principal", seed + 50)
        assert plog(x * y) == plog(x) + plog(y)


class TestExp:

    @pytest.mark.parametrize("seed", range(4))
    def test_inverts_log(self, f0, seed):
        x = random_element(f0, "principal", seed, Fraction(1))
        assert pexp(plog(x)) == x

    def test_exp_of_zero(self, f0):
        assert pexp(f0.from_int(0)) == 1

    def test_homomorphism(self, f0):
        three = f0.from_int(3)
        assert pexp(three) * pexp(-three) == 1

    def test_boundary_rejected(self, f0):
        # ord(pi) = 1/2 = 1/(p-1)
        with pytest.raises(ConvergenceError, match="ord\\(x\\) = 1/2"):
            pexp(f0.pi)

    def test_extra_terms_do_not_change_value(self, f0):
        x = f0.pi_power(2) * f0.zeta
        assert pexp(x, extra_terms=10) == pexp(x)


class TestExpEta:

    def test_guarded_scale(self, f0):
        with pytest.raises(DomainError, match="2/\\(p-1\\)"):
            exp_eta(f0.pi_power(1), f0.one, symbol_guard=True)

    def test_non_integral_argument(self, f0):
        with pytest.raises(DomainError, match="integral"):
            exp_eta(f0.from_int(3), f0.pi.inv())

    def test_value(self, f0):
        three = f0.from_int(3)
        assert exp_eta(three, f0.from_int(2), symbol_guard=True) == pexp(f0.from_int(6))
