"""Explicit reciprocity: the Hilbert symbol through a trace formula.

For alpha with ord(alpha - 1) >= 2/(p-1), a unit beta = g(pi) and
zeta_{p^n} = h(pi), the symbol (alpha, beta) = zeta^c where

    c = p^-n * Tr_{K/Q_p}( zeta / h'(pi) * g'(pi) / beta * log(alpha) )  mod p^n.

Taking g = h gives the Artin-Hasse form c = p^-n Tr(log alpha); taking
g(T) = T (beta = pi) gives the Iwasawa form.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Optional

from rlab.core.analytic import plog
from rlab.core.exceptions import DomainError, NonIntegralTraceError, PrecisionError
from rlab.core.field import FieldTower, KElement, trace_abs
from rlab.core.polynomial import (
    KPolynomial,
    canonical_poly_lift,
    eval_deriv,
    eval_poly,
    poly_lift,
)


@dataclass(frozen=True)
class SymbolValue:
    """zeta_{p^n}^c, stored as the exponent c in [0, p^n)."""

    c: int
    n: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", int(self.c) % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p**self.n

    def is_trivial(self) -> bool:
        return self.c == 0

    def _check(self, other: "SymbolValue") -> None:
        if (other.p, other.n) != (self.p, self.n):
            raise ValueError("symbol values of different levels cannot be combined")

    def __add__(self, other: "SymbolValue") -> "SymbolValue":
        self._check(other)
        return SymbolValue(self.c + other.c, self.n, self.p)

    def __sub__(self, other: "SymbolValue") -> "SymbolValue":
        self._check(other)
        return SymbolValue(self.c - other.c, self.n, self.p)

    def __neg__(self) -> "SymbolValue":
        return SymbolValue(-self.c, self.n, self.p)

    def __mul__(self, k: int) -> "SymbolValue":
        return SymbolValue(self.c * k, self.n, self.p)

    __rmul__ = __mul__

    def to_json(self) -> Dict[str, Any]:
        return {"c": self.c, "modulus": self.modulus, "zeta_power": f"zeta^{self.c}"}


@dataclass(frozen=True, eq=False)
class CyclotomicContext:
    """Fixed zeta_{p^n}, prime element pi and lift h with h(pi) = zeta."""

    tower: FieldTower
    zeta: KElement
    pi: KElement
    h: KPolynomial
    n: int

    @classmethod
    def create(
        cls,
        tower: FieldTower,
        n: Optional[int] = None,
        pi: Optional[KElement] = None,
        zeta: Optional[KElement] = None,
    ) -> "CyclotomicContext":
        """Context for level n (default: the field's level).

        Args:
            tower: The field K
            n: Level with 1 <= n <= the field's level
            pi: Alternative prime element (default: the tower's pi)
            zeta: Alternative primitive p^n-th root of unity
        """
        top = tower.desc.n
        level = top if n is None else n
        if level < 1 or level > top:
            raise DomainError(
                f"level n = {level} is outside 1..{top} for this field"
            )
        if zeta is None:
            zeta = tower.zeta ** (tower.p ** (top - level))
        prime = tower.pi if pi is None else pi
        if prime.pi_valuation() != 1:
            raise DomainError(
                f"ord(pi) = {prime.ord()}, a prime element needs ord 1/{tower.e}"
            )
        h = poly_lift(zeta, prime)
        return cls(tower, zeta, prime, h, level)

    @property
    def p(self) -> int:
        return self.tower.p

    @cached_property
    def h_prime(self) -> KElement:
        return eval_deriv(self.h, self.pi)

    @cached_property
    def base_factor(self) -> KElement:
        """zeta / h'(pi)."""
        return self.zeta / self.h_prime

    def lift(self, x: KElement) -> KPolynomial:
        """Polynomial g over O_{K_0} with g(pi) = x."""
        if self.pi is self.tower.pi:
            return canonical_poly_lift(x)
        return poly_lift(x, self.pi)

    def trivial(self) -> SymbolValue:
        return SymbolValue(0, self.n, self.p)

    @cached_property
    def reference(self) -> "CyclotomicContext":
        """Context on the prime where the g(T) = T form gives (alpha, pi).

        That prime is zeta - 1 when it is a prime element of K, and the
        tower's pi otherwise. The root of unity is shared with this context.
        """
        tower = self.tower
        prime = tower.pi
        candidate = self.zeta - 1
        if candidate.pi_valuation() == 1 and candidate != tower.pi:
            prime = candidate
        if prime is self.pi or prime == self.pi:
            return self
        return CyclotomicContext.create(tower, self.n, pi=prime, zeta=self.zeta)


def _check_alpha(ctx: CyclotomicContext, alpha: KElement) -> bool:
    """Validate Sen's domain; returns False when alpha = 1."""
    diff = alpha - 1
    if diff.is_zero():
        return False
    bound = Fraction(2, ctx.p - 1)
    if diff.ord() < bound:
        raise DomainError(
            f"ord(alpha - 1) = {diff.ord()} < 2/(p-1) = {bound}"
        )
    return True


def _symbol_from_trace(ctx: CyclotomicContext, factor: KElement, alpha: KElement) -> SymbolValue:
    n = ctx.n
    t = trace_abs(factor * plog(alpha))
    if t.abs_prec < 2 * n + 5:
        raise PrecisionError(
            f"trace known only mod p^{t.abs_prec}, need p^{2 * n + 5} before dividing by p^{n}"
        )
    if t.is_zero():
        return ctx.trivial()
    if t.valuation < n:
        raise NonIntegralTraceError(
            f"trace has ord_p = {t.valuation} < n = {n}; the symbol exponent is not integral"
        )
    return SymbolValue(t.scale_p(-n).residue(n), n, ctx.p)


def sen_symbol(
    ctx: CyclotomicContext, alpha: KElement, beta: KElement, g: KPolynomial
) -> SymbolValue:
    """(alpha, beta) for a unit beta with lift g(pi) = beta."""
    if not beta.is_unit():
        raise DomainError(f"beta must be a unit, got ord(beta) = {beta.ord()}")
    if eval_poly(g, ctx.pi) != beta:
        raise DomainError("lift g does not satisfy g(pi) = beta")
    if not _check_alpha(ctx, alpha):
        return ctx.trivial()
    factor = ctx.base_factor * eval_deriv(g, ctx.pi) / beta
    return _symbol_from_trace(ctx, factor, alpha)


def artin_hasse(ctx: CyclotomicContext, alpha: KElement) -> SymbolValue:
    """(alpha, zeta_{p^n}) = zeta^(Tr(log alpha) / p^n)."""
    if not _check_alpha(ctx, alpha):
        return ctx.trivial()
    return _symbol_from_trace(ctx, KElement.from_int(ctx.tower, 1), alpha)


def iwasawa_prime(ctx: CyclotomicContext, alpha: KElement) -> SymbolValue:
    """(alpha, pi) for the context's prime element.

    The g(T) = T form of the trace formula is applied on the reference
    prime only. Any other prime pi' = pi_ref * w adds (alpha, w), which the
    unit formula computes.
    """
    if not _check_alpha(ctx, alpha):
        return ctx.trivial()
    ref = ctx.reference
    value = _symbol_from_trace(ref, ref.base_factor / ref.pi, alpha)
    if ref is not ctx:
        w = ctx.pi / ref.pi
        value = value + sen_symbol(ref, alpha, w, ref.lift(w))
    return value


def hilbert_symbol(ctx: CyclotomicContext, alpha: KElement, beta: KElement) -> SymbolValue:
    """(alpha, beta) for any nonzero beta = pi^m * u."""
    if beta.is_zero():
        raise DomainError("beta is indistinguishable from 0")
    m = beta.pi_valuation()
    if ctx.pi is ctx.tower.pi:
        u = beta.mul_pi_power(-m)
    else:
        u = beta * ctx.pi ** (-m)
    value = sen_symbol(ctx, alpha, u, ctx.lift(u))
    if m:
        value = value + iwasawa_prime(ctx, alpha) * m
    return value
