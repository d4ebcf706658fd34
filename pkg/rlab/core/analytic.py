"""p-adic logarithm and exponential with certified truncation.

Term counts come from closed-form lower bounds on the valuation of the
series terms, so every returned value is a proven congruence modulo its
stated precision.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional

from rlab.core.exceptions import ConvergenceError, DomainError
from rlab.core.field import KElement


@dataclass(frozen=True)
class SeriesBudget:
    """Truncation data for a power series evaluation.

    Attributes:
        target_prec: Absolute precision the sum must reach
        term_count: Index of the last summed term
        tail_bound: Lower bound on ord_p of every discarded term
    """

    target_prec: int
    term_count: int
    tail_bound: Fraction


def _floor_log(p: int, k: int) -> int:
    j = 0
    while p ** (j + 1) <= k:
        j += 1
    return j


def log_budget(p: int, r: Fraction, target: int, extra_terms: int = 0) -> SeriesBudget:
    """Terms of sum (-1)^(k+1) y^k / k needed when ord(y) = r.

    ord(y^k/k) >= k*r - j for p^j <= k < p^(j+1), so within each such block
    only k < (target + j)/r contribute below the target.
    """
    r = Fraction(r)
    count = 0
    j = 0
    while p**j <= (target + j) / r:
        last = min(p ** (j + 1) - 1, ceil((target + j) / r) - 1)
        count = max(count, last)
        j += 1
    count = max(count, 1) + extra_terms
    k = count + 1
    tail = k * r - _floor_log(p, k)
    return SeriesBudget(target, count, Fraction(max(tail, target)))


def exp_budget(p: int, r: Fraction, target: int, extra_terms: int = 0) -> SeriesBudget:
    """Terms of sum x^k / k! needed when ord(x) = r > 1/(p-1).

    ord(x^k/k!) = k*r - (k - s_p(k))/(p-1) >= k*(r - 1/(p-1)) + 1/(p-1).
    """
    r = Fraction(r)
    delta = Fraction(1, p - 1)
    count = max(ceil((target - delta) / (r - delta)) - 1, 0) + extra_terms
    k = count + 1
    tail = k * (r - delta) + delta
    return SeriesBudget(target, count, Fraction(max(tail, target)))


def plog(x: KElement, target: Optional[int] = None, extra_terms: int = 0) -> KElement:
    """p-adic logarithm of a principal unit.

    Raises:
        DomainError: If ord(x - 1) <= 0
    """
    tower = x.tower
    y = x - 1
    goal = x.prec if target is None else target
    if y.is_zero():
        return KElement.zero(tower, min(goal, x.prec))
    r = y.ord()
    if r <= 0:
        raise DomainError(f"log needs ord(x - 1) > 0, got ord(x - 1) = {r}")
    budget = log_budget(tower.p, r, goal, extra_terms)
    work = goal + _floor_log(tower.p, budget.term_count) + 2
    y = y.with_precision(work)
    power = y
    total = y
    for k in range(2, budget.term_count + 1):
        power = power * y
        term = power.divide_int(k)
        total = total - term if k % 2 == 0 else total + term
    return total.with_precision(min(total.prec, goal, x.prec))


def pexp(x: KElement, target: Optional[int] = None, extra_terms: int = 0) -> KElement:
    """p-adic exponential.

    Raises:
        ConvergenceError: Unless ord(x) > 1/(p-1), naming the valuation
    """
    tower = x.tower
    goal = x.prec if target is None else target
    if x.is_zero():
        return KElement.from_int(tower, 1, min(goal, x.prec))
    r = x.ord()
    delta = Fraction(1, tower.p - 1)
    if r <= delta:
        raise ConvergenceError(
            f"exp needs ord(x) > 1/(p-1) = {delta}, got ord(x) = {r}"
        )
    budget = exp_budget(tower.p, r, goal, extra_terms)
    work = goal + ceil(Fraction(budget.term_count, tower.p - 1)) + 2
    lifted = x.with_precision(work)
    term = KElement.from_int(tower, 1, work)
    total = term
    for k in range(1, budget.term_count + 1):
        term = (term * lifted).divide_int(k)
        total = total + term
    return total.with_precision(min(total.prec, goal, x.prec))


def exp_eta(
    eta: KElement,
    a: KElement,
    symbol_guard: bool = False,
    target: Optional[int] = None,
) -> KElement:
    """exp(eta * a) for integral a.

    Args:
        eta: Scale with ord(eta) > 1/(p-1)
        a: Integral element
        symbol_guard: Also require ord(eta) >= 2/(p-1), the bound under
            which exp_eta extends to symbols
        target: Optional target precision
    """
    if not a.is_integral():
        raise DomainError(f"exp_eta needs an integral argument, got {a!r}")
    p = eta.tower.p
    if symbol_guard and not eta.is_zero():
        bound = Fraction(2, p - 1)
        if eta.ord() < bound:
            raise DomainError(
                f"ord(eta) = {eta.ord()} < 2/(p-1) = {bound}"
            )
    return pexp(eta * a, target)
