"""Tests for differential forms and the exponential maps."""
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlab.core.exceptions import DomainError
from rlab.core.exp_map import (
    DifferentialForm,
    FormExpression,
    d,
    diagram_contexts,
    dlog,
    exp2_eval,
    kernel_check,
    leibniz_redecomposition,
    norm_diagram_sides,
    random_form_expression,
    rewrite_to_zeta,
    trace_form,
)
from rlab.core.field import random_element
from rlab.core.reciprocity import CyclotomicContext


@pytest.fixture(scope="module")
def cubic(cubic_embedding):
    return cubic_embedding.tower


class TestDifferentials:
    """O_K dpi modulo e'(pi) dpi."""

    def test_d_pi(self, f0):
        assert d(f0.pi) == DifferentialForm.from_coefficient(f0, f0.one)

    def test_different_kills_forms(self, cubic):
        # e'(pi) has pi-valuation 11 in the cubic radical tower
        assert cubic.different_exponent == 11
        assert DifferentialForm.from_coefficient(cubic, cubic.pi_power(11)).is_zero()
        assert not DifferentialForm.from_coefficient(cubic, cubic.pi_power(10)).is_zero()

    @pytest.mark.parametrize("seed", range(3))
    def test_leibniz(self, cubic, seed):
        rng = random.Random(seed)
        x = random_element(cubic, "integral", rng)
        y = random_element(cubic, "integral", rng)
        assert d(x * y) == d(x).scale(y) + d(y).scale(x)

    @pytest.mark.parametrize("seed", range(3))
    def test_dlog_additive(self, cubic, seed):
        rng = random.Random(seed)
        x = random_element(cubic, "unit", rng)
        y = random_element(cubic, "unit", rng)
        assert dlog(x * y) == dlog(x) + dlog(y)

    def test_dlog_needs_unit(self, f0):
        with pytest.raises(DomainError, match="needs a unit"):
            dlog(f0.pi)


class TestFormExpression:

    def test_non_unit_second_slot(self, f0):
        with pytest.raises(DomainError, match="must be a unit"):
            FormExpression(((f0.one, f0.pi),))

    def test_non_integral_coefficient(self, f0):
        with pytest.raises(DomainError, match="must be integral"):
            FormExpression(((f0.pi.inv(), f0.zeta),))

    def test_empty_needs_field(self, f0):
        with pytest.raises(ValueError, match="explicit field"):
            FormExpression().to_form()
        assert FormExpression().to_form(f0).is_zero()

    def test_db_and_dlog_do_not_mix(self, f0):
        a = FormExpression(((f0.one, f0.zeta),))
        b = FormExpression(((f0.one, f0.zeta),), db=True)
        with pytest.raises(ValueError, match="cannot add"):
            a + b

    @pytest.mark.parametrize("seed", range(3))
    def test_leibniz_redecomposition(self, cubic, seed):
        rng = random.Random(seed)
        for db in (False, True):
            expr = random_form_expression(cubic, rng, size=2, db=db)
            assert leibniz_redecomposition(expr, rng).to_form() == expr.to_form()


class TestExpEval:
    """exp_eta observed through the pairing over Q_3(zeta_3)."""

    def test_dlog_zeta(self, f0, f0_ctx):
        expr = FormExpression(((f0.one, f0.zeta),))
        assert exp2_eval(f0_ctx, f0.from_int(3), expr).c == 2

    def test_d_zeta(self, f0, f0_ctx):
        # 1 dzeta contributes {exp(3 zeta), zeta}, and Tr(zeta) = -1
        expr = FormExpression(((f0.one, f0.zeta),), db=True)
        assert exp2_eval(f0_ctx, f0.from_int(3), expr).c == 2

    def test_small_eta_rejected(self, f0, f0_ctx):
        expr = FormExpression(((f0.one, f0.zeta),))
        with pytest.raises(DomainError, match="ord\\(eta\\)"):
            exp2_eval(f0_ctx, f0.pi, expr)

    @pytest.mark.parametrize("seed", range(4))
    def test_kernel_vanishes(self, f0, f0_ctx, seed):
        a = random_element(f0, "unit", seed)
        assert kernel_check(f0_ctx, a).is_trivial()

    def test_kernel_needs_unit(self, f0, f0_ctx):
        with pytest.raises(DomainError, match="needs a unit"):
            kernel_check(f0_ctx, f0.pi)


class TestRewrite:

    @pytest.mark.parametrize("seed", range(3))
    def test_rewrite_to_zeta(self, f0, f0_ctx, seed):
        expr = random_form_expression(f0, random.Random(seed))
        a = rewrite_to_zeta(f0_ctx, expr)
        assert dlog(f0_ctx.zeta).scale(a) == expr.to_form()

    @given(st.integers(min_value=0, max_value=10**6))
    @settings(deadline=None, max_examples=10)
    def test_rewrite_keeps_the_symbol(self, f0, f0_ctx, seed):
        expr = random_form_expression(f0, random.Random(seed))
        a = rewrite_to_zeta(f0_ctx, expr)
        rewritten = FormExpression(((a, f0_ctx.zeta),))
        eta = f0.from_int(3)
        assert exp2_eval(f0_ctx, eta, rewritten) == exp2_eval(f0_ctx, eta, expr)

    def test_needs_cyclotomic_presentation(self, cubic):
        ctx = CyclotomicContext.create(cubic)
        expr = FormExpression(((cubic.one, cubic.zeta),))
        with pytest.raises(DomainError, match="pi = zeta - 1"):
            rewrite_to_zeta(ctx, expr)


@pytest.mark.slow
class TestNormDiagram:
    """Relative trace of forms against the norm of symbols."""

    def test_contexts_share_zeta(self, cubic_embedding):
        ctx_k, ctx_big = diagram_contexts(cubic_embedding)
        assert ctx_big.zeta == cubic_embedding.embed(ctx_k.zeta)

    @pytest.mark.parametrize("seed", range(2))
    def test_square_commutes(self, cubic_embedding, seed):
        rng = random.Random(seed)
        sub, big = cubic_embedding.sub, cubic_embedding.tower
        eta = sub.from_int(3)
        a = random_element(big, "integral", rng)
        b = random_element(sub, "unit", rng)
        top, bottom = norm_diagram_sides(cubic_embedding, eta, a, b)
        assert top == bottom

    def test_trace_form_moves_to_subfield(self, cubic_embedding):
        sub, big = cubic_embedding.sub, cubic_embedding.tower
        b = cubic_embedding.embed(sub.zeta)
        expr = FormExpression(((big.pi, b),))
        traced = trace_form(expr, cubic_embedding)
        assert traced.terms[0][0].is_zero()
        assert traced.terms[0][1] == sub.zeta

    def test_trace_form_rejects_big_slot(self, cubic_embedding):
        big = cubic_embedding.tower
        expr = FormExpression(((big.one, big.one + big.pi),))
        with pytest.raises(DomainError, match="does not lie in the subfield"):
            trace_form(expr, cubic_embedding)
