"""Tests for element expressions."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlab.core.exceptions import DomainError, ExpressionSyntaxError, PrecisionError
from rlab.core.expr import (
    SYMBOLS,
    BinOp,
    Neg,
    Num,
    Pow,
    Sym,
    evaluate_expr,
    evaluate_source,
    format_expr,
    parse_expr,
    tokenize,
)


def expressions():
    leaves = st.one_of(
        st.builds(Num, st.integers(min_value=0, max_value=10**6)),
        st.builds(Sym, st.sampled_from(SYMBOLS)),
    )

    def extend(children):
        return st.one_of(
            st.builds(BinOp, st.sampled_from("+-*/"), children, children),
            st.builds(Pow, children, st.integers(min_value=-5, max_value=5)),
            st.builds(Neg, children),
        )

    return st.recursive(leaves, extend, max_leaves=12)


class TestParse:

    def test_sum(self):
        assert parse_expr("1+p") == BinOp("+", Num(1), Sym("p"))

    def test_power_binds_tighter(self):
        assert parse_expr("zeta^2*pi") == BinOp("*", Pow(Sym("zeta"), 2), Sym("pi"))

    def test_unary_minus(self):
        assert parse_expr("-p^2") == Neg(Pow(Sym("p"), 2))

    def test_negative_exponent(self):
        assert parse_expr("pi^-1") == Pow(Sym("pi"), -1)

    def test_left_associative(self):
        assert parse_expr("1 - 2 - 3") == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))

    def test_token_columns(self):
        columns = [tok.column for tok in tokenize("1 + zeta")]
        assert columns == [1, 3, 5, 9]

    @given(expressions())
    @settings(deadline=None, max_examples=200)
    def test_format_parses_back(self, node):
        assert parse_expr(format_expr(node)) == node


class TestSyntaxErrors:
    """Messages carry the 1-based column of the offending token."""

    @pytest.mark.parametrize(
        "src,column,message",
        [
            ("1+*p", 3, "expected a number"),
            ("(1+p", 1, "unbalanced '\\('"),
            ("1+p)", 4, "unbalanced '\\)'"),
            ("x", 1, "unknown token 'x'"),
            ("2 $", 3, "unknown token '\\$'"),
            ("", 1, "found end of input"),
            ("p^q", 3, "unknown token 'q'"),
            ("p^pi", 3, "an integer exponent"),
            ("2 3", 3, "expected an operator"),
        ],
    )
    def test_reported(self, src, column, message):
        with pytest.raises(ExpressionSyntaxError, match=message) as excinfo:
            parse_expr(src)
        assert excinfo.value.column == column
        assert f"at column {column}" in str(excinfo.value)


class TestEvaluate:

    def test_one_plus_p(self, f0):
        assert evaluate_source("1+p", f0) == 4

    def test_symbols(self, f0):
        assert evaluate_source("zeta - pi", f0) == 1
        assert evaluate_source("pi^-1 * pi", f0) == 1
        assert evaluate_source("u", f0) == 0

    def test_fraction(self, f0):
        assert evaluate_source("1/3", f0) * 3 == 1

    def test_precision_capped(self, f0):
        assert evaluate_source("1+p", f0, 10).prec == 10
        assert evaluate_source("1+p", f0).prec == f0.prec

    def test_zeta_needs_level(self, q3):
        with pytest.raises(DomainError, match="n = 0"):
            evaluate_source("zeta", q3)

    def test_division_by_zero(self, f0):
        with pytest.raises(PrecisionError, match="indistinguishable from 0"):
            evaluate_source("1/(p-3)", f0)

    def test_ast_evaluation(self, f0):
        node = BinOp("*", Pow(Sym("zeta"), 2), Sym("pi"))
        assert evaluate_expr(node, f0) == f0.zeta * f0.zeta * f0.pi


class TestNodes:

    def test_num_non_negative(self):
        with pytest.raises(ValueError, match="non-negative"):
            Num(-1)

    def test_unknown_symbol(self):
        with pytest.raises(ValueError, match="unknown symbol"):
            Sym("e")
