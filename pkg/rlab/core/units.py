"""Teichmueller representatives and p-th power tests for units of K."""

import itertools
from fractions import Fraction
from math import ceil
from typing import List, Optional, Tuple

from sympy import mod_inverse

from rlab.core.analytic import pexp, plog
from rlab.core.exceptions import DomainError, PrecisionError
from rlab.core.field import FieldTower, KElement, digit_element, pi_digits


def teichmuller(x: KElement) -> KElement:
    """The (q-1)-st root of unity congruent to the unit x modulo pi."""
    if not x.is_unit():
        raise DomainError(f"Teichmueller representative needs a unit, got {x!r}")
    tower = x.tower
    t = digit_element(tower, x.residue_digit(), x.prec)
    for _ in range(tower.e * x.prec + 2):
        nxt = t**tower.q
        if nxt == t:
            return nxt
        t = nxt
    raise PrecisionError("Teichmueller iteration did not stabilize")


def _root_exponent(tower: FieldTower) -> int:
    # k with k*p = 1 mod (q - 1), so (w^k)^p = w on roots of unity of order q - 1
    if tower.q == 2:
        return 1
    return int(mod_inverse(tower.p, tower.q - 1))


def _candidate_depth(tower: FieldTower) -> int:
    c = tower.pth_power_level
    return max(ceil(Fraction(c + 1, tower.p)), c + 1 - tower.e, 1)


def principal_pth_powers(tower: FieldTower) -> List[Tuple[KElement, KElement]]:
    """Pairs (y, y^p) over the principal units y = 1 + sum_{0<i<j} r_i pi^i.

    y^p modulo pi^(c+1) depends only on y modulo pi^j, so these pairs cover
    every class of p-th powers of principal units at that level.
    """
    depth = _candidate_depth(tower)
    out = []
    for digits in itertools.product(tower.digits, repeat=depth - 1):
        y = tower.one
        for i, digit in enumerate(digits, start=1):
            if any(digit):
                y = y + digit_element(tower, digit) * tower.pi_power(i)
        y = y.with_precision(tower.prec)
        out.append((y, y**tower.p))
    return out


def pth_power_test(u: KElement) -> Tuple[bool, Optional[KElement]]:
    """Decide whether the unit u is a p-th power in K.

    Returns:
        (True, w) with w^p = u, or (False, None)
    """
    if not u.is_unit():
        raise DomainError(f"p-th power test needs a unit, got {u!r}")
    tower = u.tower
    p = tower.p
    omega = teichmuller(u)
    root_omega = omega ** _root_exponent(tower)
    w = u * omega.inv()
    if w == 1:
        return True, root_omega
    bound = Fraction(p, p - 1)
    if (w - 1).ord() > bound:
        return True, root_omega * pexp(plog(w).divide_int(p))
    for y, yp in tower.pth_power_table:
        z = w * yp.inv()
        if z == 1:
            return True, root_omega * y
        if (z - 1).ord() > bound:
            return True, root_omega * y * pexp(plog(z).divide_int(p))
    return False, None


def is_pth_power(x: KElement) -> bool:
    """Fast p-th power membership for any nonzero x.

    x = pi^m * v is a p-th power iff p | m and v^(q-1), a principal unit,
    lies in the precomputed residue set of p-th powers modulo pi^(c+1).
    """
    m, v = x.unit_part()
    if m % x.tower.p:
        return False
    tower = x.tower
    key = pi_digits(v ** (tower.q - 1), tower.pth_power_level + 1)
    return key in tower.pth_power_residues
