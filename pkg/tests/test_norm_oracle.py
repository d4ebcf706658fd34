"""Tests for the norm-group oracle."""
import pytest

from rlab.core.exceptions import DomainError, UnsupportedParametersError
from rlab.core.field import random_element
from rlab.core.norm_oracle import (
    NORM_SAMPLE_BUDGET,
    NormOracle,
    _permutation_sign,
    build_extension,
    check_parameters,
    class_coordinates,
    norm_L_to_K,
)
from rlab.core.reciprocity import CyclotomicContext, hilbert_symbol
from rlab.core.utils import sen_domain_bound


@pytest.fixture(scope="module")
def oracle(f0):
    return NormOracle(f0)


class TestParameters:

    def test_supported(self):
        check_parameters(3, 1)
        check_parameters(5, 1)

    @pytest.mark.parametrize("p,n", [(7, 2), (3, 2), (7, 1), (3, 0)])
    def test_unsupported(self, p, n):
        with pytest.raises(UnsupportedParametersError, match="supports p in"):
            check_parameters(p, n)

    def test_field_without_zeta(self, q3):
        with pytest.raises(UnsupportedParametersError):
            NormOracle(q3)

    def test_default_budget(self, oracle):
        assert oracle.budget == NORM_SAMPLE_BUDGET


class TestKummerExtension:

    def test_degenerate_for_cubes(self, f0):
        assert build_extension(f0, f0.from_int(-1)).degenerate
        assert not build_extension(f0, f0.zeta).degenerate

    def test_norm_of_gamma(self, f0):
        ext = build_extension(f0, f0.zeta)
        assert norm_L_to_K(ext, ext.gamma) == f0.zeta

    def test_norm_of_base_element(self, f0):
        ext = build_extension(f0, f0.zeta)
        x = ext.element([f0.from_int(2)])
        assert norm_L_to_K(ext, x) == 8

    def test_permutation_sign(self):
        assert _permutation_sign([0, 1, 2]) == 1
        assert _permutation_sign([1, 0, 2]) == -1
        assert _permutation_sign([1, 2, 0]) == 1


class TestClassSpace:
    """V = K*/(K*)^3 for Q_3(zeta_3) has dimension 4."""

    def test_dimension(self, oracle):
        assert oracle.space.dim == 4

    def test_coordinates(self, f0, oracle):
        assert oracle.space.coordinates(f0.pi) == (1, 0, 0, 0)
        assert oracle.space.coordinates(f0.from_int(8)) == (0, 0, 0, 0)

    def test_coordinates_are_a_homomorphism(self, f0, oracle):
        space = oracle.space
        x = random_element(f0, "nonzero", 1)
        y = random_element(f0, "nonzero", 2)
        combined = tuple((a + b) % 3 for a, b in zip(space.coordinates(x), space.coordinates(y)))
        assert space.coordinates(x * y) == combined

    def test_zero_rejected(self, f0, oracle):
        with pytest.raises(DomainError, match="indistinguishable from 0"):
            oracle.space.coordinates(f0.from_int(0))

    @pytest.mark.parametrize("seed", range(3))
    def test_cubes_have_zero_coordinates(self, f0, oracle, seed):
        x = random_element(f0, "nonzero", seed)
        assert class_coordinates(oracle.space, x**3) == (0, 0, 0, 0)
        assert class_coordinates(oracle.space, x) == oracle.space.coordinates(x)


class TestVerdicts:

    def test_four_is_not_a_norm_for_zeta(self, f0, oracle):
        assert not oracle.is_norm(f0.from_int(4), f0.zeta)

    def test_everything_is_a_norm_for_cubes(self, f0, oracle):
        assert oracle.is_norm(f0.from_int(4), f0.from_int(-1))
        assert oracle.subgroup(f0.from_int(-1)).rank == 4

    def test_beta_is_a_norm(self, f0, oracle):
        assert oracle.is_norm(f0.zeta, f0.zeta)
        assert oracle.is_norm(f0.from_int(8), f0.zeta)

    def test_norm_subgroup_has_index_p(self, f0, oracle):
        assert oracle.subgroup(f0.zeta).rank == 3

    def test_verdict_json(self, f0, oracle):
        verdict = oracle.verdict(f0.from_int(4), f0.zeta, ("4", "zeta"))
        assert verdict.to_json() == {
            "alpha": "4",
            "beta": "zeta",
            "is_norm": False,
            "rank": 3,
        }

    @pytest.mark.parametrize("seed", range(3))
    def test_agrees_with_symbol(self, f0, f0_ctx, oracle, seed):
        alpha = random_element(f0, "principal", seed, sen_domain_bound(f0))
        beta = random_element(f0, "nonzero", seed + 7)
        symbol = hilbert_symbol(f0_ctx, alpha, beta)
        assert oracle.is_norm(alpha, beta) == symbol.is_trivial()

    @pytest.mark.parametrize("seed", range(3))
    def test_agrees_with_symbol_for_another_prime(self, f0, oracle, seed):
        other = CyclotomicContext.create(f0, pi=f0.pi * f0.zeta)
        alpha = random_element(f0, "principal", seed, sen_domain_bound(f0))
        beta = random_element(f0, "nonzero", seed + 7)
        symbol = hilbert_symbol(other, alpha, beta)
        assert oracle.is_norm(alpha, beta) == symbol.is_trivial()
