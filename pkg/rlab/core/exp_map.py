"""Differential forms of O_K and the exponential maps exp_eta.

The module of differentials of O_K is cyclic, generated by d(pi) with the
single relation e'(pi) d(pi) = 0. A DifferentialForm stores its
coefficient as canonical pi-adic digits modulo (e'(pi)) = (pi^delta).
exp_eta of a degree-one form is observed through the Hilbert pairing:

    exp_eta(a db/b) = {exp(eta a), b}  and  exp_eta(a db) = {exp(eta a b), b}.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from rlab.core.analytic import exp_eta
from rlab.core.exceptions import DomainError
from rlab.core.field import (
    Digit,
    FieldTower,
    KElement,
    from_pi_digits,
    pi_digits,
    random_element,
)
from rlab.core.polynomial import canonical_poly_lift, eval_deriv
from rlab.core.reciprocity import CyclotomicContext, SymbolValue, hilbert_symbol
from rlab.core.subfield import (
    SubfieldEmbedding,
    in_subfield,
    relative_trace,
)


@dataclass(frozen=True, eq=False)
class DifferentialForm:
    """The class of coeff * d(pi) in O_K d(pi) / (e'(pi) d(pi))."""

    tower: FieldTower
    digits: Tuple[Digit, ...]

    @classmethod
    def from_coefficient(cls, tower: FieldTower, coeff: KElement) -> "DifferentialForm":
        if not coeff.is_integral():
            raise DomainError(f"form coefficient must be integral, got {coeff!r}")
        return cls(tower, pi_digits(coeff, tower.different_exponent))

    @classmethod
    def zero(cls, tower: FieldTower) -> "DifferentialForm":
        return cls(tower, ((0,) * tower.f,) * tower.different_exponent)

    @property
    def coeff(self) -> KElement:
        """Canonical representative of the coefficient."""
        return from_pi_digits(self.tower, self.digits)

    def is_zero(self) -> bool:
        return not any(any(d) for d in self.digits)

    def __add__(self, other: "DifferentialForm") -> "DifferentialForm":
        return DifferentialForm.from_coefficient(self.tower, self.coeff + other.coeff)

    def __neg__(self) -> "DifferentialForm":
        return DifferentialForm.from_coefficient(self.tower, -self.coeff)

    def __sub__(self, other: "DifferentialForm") -> "DifferentialForm":
        return self + (-other)

    def scale(self, x: KElement) -> "DifferentialForm":
        """Multiply by an integral element of O_K."""
        return DifferentialForm.from_coefficient(self.tower, self.coeff * x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return self.tower.same_field(other.tower) and self.digits == other.digits

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"DifferentialForm({self.coeff!r} dpi)"


def d(b: KElement) -> DifferentialForm:
    """db = B'(pi) dpi for the canonical lift B of b."""
    if not b.is_integral():
        raise DomainError(f"d needs an integral element, got {b!r}")
    lift = canonical_poly_lift(b)
    return DifferentialForm.from_coefficient(b.tower, eval_deriv(lift, b.tower.pi))


def dlog(b: KElement) -> DifferentialForm:
    """db / b for a unit b."""
    if not b.is_unit():
        raise DomainError(f"dlog needs a unit, got {b!r}")
    return d(b).scale(b.inv())


@dataclass(frozen=True, eq=False)
class FormExpression:
    """sum a_i db_i/b_i, or sum a_i db_i when ``db`` is True."""

    terms: Tuple[Tuple[KElement, KElement], ...] = ()
    db: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(tuple(t) for t in self.terms))
        for a, b in self.terms:
            if not b.is_unit():
                raise DomainError(f"second slot must be a unit, got {b!r}")
            if not a.is_integral():
                raise DomainError(f"coefficient must be integral, got {a!r}")

    def to_form(self, tower: Optional[FieldTower] = None) -> DifferentialForm:
        if not self.terms:
            if tower is None:
                raise ValueError("an empty expression needs an explicit field")
            return DifferentialForm.zero(tower)
        total: Optional[DifferentialForm] = None
        for a, b in self.terms:
            piece = d(b).scale(a) if self.db else dlog(b).scale(a)
            total = piece if total is None else total + piece
        assert total is not None
        return total

    def symbol_terms(self) -> List[Tuple[KElement, KElement]]:
        """(a', b) pairs with exp_eta(form) = sum {exp(eta a'), b}."""
        if self.db:
            return [(a * b, b) for a, b in self.terms]
        return list(self.terms)

    def __add__(self, other: "FormExpression") -> "FormExpression":
        if self.db != other.db:
            raise ValueError("cannot add dlog and d expressions")
        return FormExpression(self.terms + other.terms, self.db)


def exp1(eta: KElement, a: KElement) -> KElement:
    """exp_eta on O_K: exp(eta a), with the symbol-level guard on eta."""
    return exp_eta(eta, a, symbol_guard=True)


def _check_eta(eta: KElement) -> None:
    if eta.is_zero():
        return
    bound = Fraction(2, eta.tower.p - 1)
    if eta.ord() < bound:
        raise DomainError(f"ord(eta) = {eta.ord()} < 2/(p-1) = {bound}")


def exp2_eval(ctx: CyclotomicContext, eta: KElement, expr: FormExpression) -> SymbolValue:
    """Pairing of exp_eta(expr) with the Hilbert symbol, as a SymbolValue."""
    _check_eta(eta)
    total = ctx.trivial()
    for a, b in expr.symbol_terms():
        total = total + hilbert_symbol(ctx, exp1(eta, a), b)
    return total


def kernel_check(ctx: CyclotomicContext, a: KElement) -> SymbolValue:
    """exp_p(p da) = {exp(p^2 a), a}; vanishes for every unit a."""
    if not a.is_unit():
        raise DomainError(f"kernel check needs a unit, got {a!r}")
    eta = KElement.from_int(ctx.tower, ctx.p)
    return exp2_eval(ctx, eta, FormExpression(((eta, a),), db=True))


def trace_form(expr: FormExpression, emb: SubfieldEmbedding) -> FormExpression:
    """sum Tr_{K/k}(a_i) db_i/b_i over k; each b_i must lie in k."""
    terms = []
    for a, b in expr.terms:
        b_sub = in_subfield(b, emb)
        if b_sub is None:
            raise DomainError(f"second slot {b!r} does not lie in the subfield")
        if expr.db:
            # a db = (a b) db/b
            a = a * b
        terms.append((relative_trace(a, emb), b_sub))
    return FormExpression(tuple(terms))


def diagram_contexts(
    emb: SubfieldEmbedding,
) -> Tuple[CyclotomicContext, CyclotomicContext]:
    """Contexts for k and K sharing the root of unity fixed in k."""
    ctx_k = CyclotomicContext.create(emb.sub)
    ctx_big = CyclotomicContext.create(emb.tower, zeta=emb.embed(ctx_k.zeta))
    return ctx_k, ctx_big


def norm_diagram_sides(
    emb: SubfieldEmbedding, eta: KElement, a: KElement, b: KElement
) -> Tuple[SymbolValue, SymbolValue]:
    """Both routes of the norm diagram for (eta in k, a in O_K, b in O_k^*).

    Top: {exp(eta a), b} over K. Bottom: {exp(eta Tr a), b} over k, using
    N_{K/k} exp(eta a) = exp(eta Tr_{K/k} a).
    """
    ctx_k, ctx_big = diagram_contexts(emb)
    eta_big = emb.embed(eta)
    b_big = emb.embed(b)
    top = hilbert_symbol(ctx_big, exp1(eta_big, a), b_big)
    bottom = hilbert_symbol(ctx_k, exp1(eta, relative_trace(a, emb)), b)
    return top, bottom


def norm_diagram_check(
    emb: SubfieldEmbedding, eta: KElement, a: KElement, b: KElement
) -> bool:
    top, bottom = norm_diagram_sides(emb, eta, a, b)
    return top == bottom


def rewrite_to_zeta(ctx: CyclotomicContext, expr: FormExpression) -> KElement:
    """a with expr = a dzeta/zeta, for a field presented with pi = zeta - 1."""
    tower = ctx.tower
    if ctx.pi is not tower.pi or ctx.zeta != tower.pi + 1:
        raise DomainError("rewrite needs the presentation pi = zeta - 1")
    form = expr.to_form(tower)
    # dpi = dzeta = zeta * dzeta/zeta
    return form.scale(ctx.zeta).coeff


def leibniz_redecomposition(
    expr: FormExpression, rng: random.Random
) -> FormExpression:
    """An equivalent decomposition obtained from one Leibniz rewrite.

    dlog terms: a dlog b1 = a dlog(b1 b2) - a dlog b2.
    d terms: a db1 = (a/b2) d(b1 b2) - (a b1/b2) db2.
    """
    if not expr.terms:
        return expr
    index = rng.randrange(len(expr.terms))
    a, b1 = expr.terms[index]
    b2 = random_element(a.tower, "unit", rng)
    if expr.db:
        inv = b2.inv()
        new = ((a * inv, b1 * b2), (-(a * b1 * inv), b2))
    else:
        new = ((a, b1 * b2), (-a, b2))
    terms = expr.terms[:index] + new + expr.terms[index + 1:]
    return FormExpression(terms, expr.db)


def random_form_expression(
    tower: FieldTower, rng: random.Random, size: int = 2, db: bool = False
) -> FormExpression:
    terms: Sequence[Tuple[KElement, KElement]] = [
        (random_element(tower, "integral", rng), random_element(tower, "unit", rng))
        for _ in range(size)
    ]
    return FormExpression(tuple(terms), db)
