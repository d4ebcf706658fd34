"""Element expressions: tokenizer, recursive-descent parser, printer, evaluator.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | factor
    factor := atom ("^" signed-integer)?
    atom   := integer | "p" | "pi" | "zeta" | "u" | "(" expr ")"

Expressions evaluate in O_K[1/p]; domain checks are left to the caller.
"""

import re
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Optional, Union

from rlab.core.exceptions import ExpressionSyntaxError
from rlab.core.field import FieldTower, KElement

SYMBOLS = ("p", "pi", "zeta", "u")

TOKEN_PATTERN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


class Token(NamedTuple):
    kind: str  # 'int', 'name', 'op' or 'end'
    text: str
    column: int


@dataclass(frozen=True)
class Num:
    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("Num holds non-negative integers; use Neg for signs")


@dataclass(frozen=True)
class Sym:
    name: str

    def __post_init__(self) -> None:
        if self.name not in SYMBOLS:
            raise ValueError(f"unknown symbol {self.name!r}")


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "ElementExpr"
    right: "ElementExpr"


@dataclass(frozen=True)
class Pow:
    base: "ElementExpr"
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: "ElementExpr"


ElementExpr = Union[Num, Sym, BinOp, Pow, Neg]


def tokenize(src: str) -> Iterator[Token]:
    pos = 0
    while pos < len(src):
        match = TOKEN_PATTERN.match(src, pos)
        if match is None:
            # only trailing whitespace remains
            break
        number, name, op = match.groups()
        start = match.start(match.lastindex or 0)
        column = start + 1
        if number is not None:
            yield Token("int", number, column)
        elif name is not None:
            if name not in SYMBOLS:
                raise ExpressionSyntaxError(f"unknown token {name!r}", column)
            yield Token("name", name, column)
        elif op is not None:
            if op not in "+-*/^()":
                raise ExpressionSyntaxError(f"unknown token {op!r}", column)
            yield Token("op", op, column)
        pos = match.end()
    yield Token("end", "", len(src.rstrip()) + 1)


class _Parser:
    def __init__(self, src: str):
        self.tokens: List[Token] = list(tokenize(src))
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.token
        self.index += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.token.kind == "op" and self.token.text == text:
            self.index += 1
            return True
        return False

    def fail(self, expected: str) -> ExpressionSyntaxError:
        tok = self.token
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return ExpressionSyntaxError(f"expected {expected}, found {found}", tok.column)

    def parse(self) -> ElementExpr:
        node = self.expr()
        if self.token.kind != "end":
            if self.token.text == ")":
                raise ExpressionSyntaxError("unbalanced ')'", self.token.column)
            raise self.fail("an operator")
        return node

    def expr(self) -> ElementExpr:
        node = self.term()
        while self.token.kind == "op" and self.token.text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> ElementExpr:
        node = self.unary()
        while self.token.kind == "op" and self.token.text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> ElementExpr:
        if self.accept("-"):
            return Neg(self.unary())
        return self.factor()

    def factor(self) -> ElementExpr:
        base = self.atom()
        if self.accept("^"):
            negative = self.accept("-")
            if self.token.kind != "int":
                raise self.fail("an integer exponent")
            value = int(self.advance().text)
            return Pow(base, -value if negative else value)
        return base

    def atom(self) -> ElementExpr:
        tok = self.token
        if tok.kind == "int":
            self.advance()
            return Num(int(tok.text))
        if tok.kind == "name":
            self.advance()
            return Sym(tok.text)
        if self.accept("("):
            node = self.expr()
            if not self.accept(")"):
                if self.token.kind == "end":
                    raise ExpressionSyntaxError("unbalanced '('", tok.column)
                raise self.fail("')'")
            return node
        raise self.fail("a number, symbol or '('")


def parse_expr(src: str) -> ElementExpr:
    """Parse an element expression.

    Raises:
        ExpressionSyntaxError: With the 1-based column of the offending token
    """
    return _Parser(src).parse()


_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}


def _precedence(node: ElementExpr) -> int:
    if isinstance(node, BinOp):
        return _PRECEDENCE[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def format_expr(node: ElementExpr) -> str:
    """Print an AST so that parsing the output gives the same AST back."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Neg):
        inner = format_expr(node.operand)
        if _precedence(node.operand) < 3:
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, Pow):
        base = format_expr(node.base)
        if _precedence(node.base) < 5:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    level = _PRECEDENCE[node.op]
    left = format_expr(node.left)
    if _precedence(node.left) < level:
        left = f"({left})"
    right = format_expr(node.right)
    # operators associate to the left
    if _precedence(node.right) <= level:
        right = f"({right})"
    return f"{left} {node.op} {right}"


def evaluate_expr(
    node: ElementExpr, tower: FieldTower, prec: Optional[int] = None
) -> KElement:
    """Value of an expression in O_K[1/p], known mod p^prec at best.

    Raises:
        PrecisionError: On division by an element indistinguishable from 0
        DomainError: If ``zeta`` is used in a field with n = 0
    """
    target = tower.prec if prec is None else prec
    value = _evaluate(node, tower)
    return value.with_precision(min(value.prec, target))


def _evaluate(node: ElementExpr, tower: FieldTower) -> KElement:
    if isinstance(node, Num):
        return KElement.from_int(tower, node.value, tower.exact_prec)
    if isinstance(node, Sym):
        if node.name == "p":
            return KElement.from_int(tower, tower.p, tower.exact_prec)
        if node.name == "pi":
            return tower.pi
        if node.name == "u":
            return tower.u
        return tower.zeta
    if isinstance(node, Neg):
        return -_evaluate(node.operand, tower)
    if isinstance(node, Pow):
        return _evaluate(node.base, tower) ** node.exponent
    left = _evaluate(node.left, tower)
    right = _evaluate(node.right, tower)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return left / right


def evaluate_source(src: str, tower: FieldTower, prec: Optional[int] = None) -> KElement:
    return evaluate_expr(parse_expr(src), tower, prec)
