"""Rendering elements, forms and Laurent elements for reports."""

from typing import Any, Dict, List

from sympy.ntheory import digits as base_digits

from rlab.core.field import KElement
from rlab.core.higher_local import LaurentElement
from rlab.core.utils import centered


def digit_string(value: int, p: int) -> str:
    """Base-p digits of a non-negative integer, most significant first."""
    if value == 0:
        return "0"
    digits = base_digits(value, p)[1:]
    sep = "" if p <= 10 else "."
    return sep.join(str(d) for d in digits)


def _monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("pi" if i == 1 else f"pi^{i}")
    if j:
        parts.append("u" if j == 1 else f"u^{j}")
    return "*".join(parts)


def format_element(x: KElement) -> str:
    """A readable expression for x that parses back to the same value.

    Coordinates are printed as centered integers on the basis pi^i u^j,
    with the common power of p factored out.
    """
    if x.is_zero():
        return "0"
    tower = x.tower
    modulus = tower.p ** (x.prec - x.shift)
    terms: List[str] = []
    for k, c in enumerate(x.coeffs):
        c = centered(c, modulus)
        if not c:
            continue
        i, j = divmod(k, tower.f)
        mono = _monomial(i, j)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not terms:
            terms.append(f"-{body}" if c < 0 else body)
        else:
            terms.append(f"- {body}" if c < 0 else f"+ {body}")
    text = " ".join(terms)
    if x.shift == 0:
        return text
    power = "p" if abs(x.shift) == 1 else f"p^{abs(x.shift)}"
    if x.shift < 0:
        return f"({text})/{power}"
    return f"{power}*({text})"


def element_to_json(x: KElement) -> Dict[str, Any]:
    """Coordinates as base-p digit strings, plus shift, precision and a readable form."""
    return {
        "coordinates": [digit_string(c, x.tower.p) for c in x.coeffs],
        "shift": x.shift,
        "precision": x.prec,
        "expr": format_element(x),
    }


def format_laurent(x: LaurentElement) -> str:
    """Terms as ``(coeff)@k``, in increasing exponent order."""
    if x.is_zero():
        return "0"
    return " + ".join(
        f"({format_element(c)})@{k}" for k, c in sorted(x.coeffs.items())
    )
