"""Polynomials over O_K, lifts of elements and Hensel lifting."""

from fractions import Fraction
from math import ceil
from typing import List, Optional, Sequence

from sympy import Poly, Symbol, cyclotomic_poly

from rlab.core.exceptions import ConvergenceError, DomainError, PrecisionError
from rlab.core.field import FieldTower, KElement, digit_element
from rlab.core.linalg import column_matrix, solve


class KPolynomial:
    """Polynomial with KElement coefficients, little-endian."""

    def __init__(self, tower: FieldTower, coeffs: Sequence[KElement]):
        self.tower = tower
        self.coeffs = tuple(coeffs) if coeffs else (KElement.zero(tower),)

    @classmethod
    def from_ints(cls, tower: FieldTower, coeffs: Sequence[int],
                  prec: Optional[int] = None) -> "KPolynomial":
        prec = tower.exact_prec if prec is None else prec
        return cls(tower, [KElement.from_int(tower, c, prec) for c in coeffs])

    @classmethod
    def eisenstein(cls, tower: FieldTower) -> "KPolynomial":
        """The defining Eisenstein polynomial e(X) over O_{K_0}."""
        return cls(tower, [tower.k0_element(c) for c in tower.desc.eisenstein])

    @classmethod
    def cyclotomic(cls, tower: FieldTower, n: int) -> "KPolynomial":
        """The p^n-th cyclotomic polynomial."""
        x = Symbol("x")
        big_endian = Poly(cyclotomic_poly(tower.p**n, x), x).all_coeffs()
        return cls.from_ints(tower, [int(c) for c in reversed(big_endian)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: KElement) -> KElement:
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> "KPolynomial":
        if len(self.coeffs) == 1:
            return KPolynomial(self.tower, [KElement.zero(self.tower, self.tower.exact_prec)])
        return KPolynomial(
            self.tower, [c.scale_int(i) for i, c in enumerate(self.coeffs) if i > 0]
        )

    def with_precision(self, prec: int) -> "KPolynomial":
        return KPolynomial(self.tower, [c.with_precision(prec) for c in self.coeffs])

    def __add__(self, other: "KPolynomial") -> "KPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        zero = KElement.zero(self.tower, self.tower.exact_prec)
        out = []
        for i in range(size):
            a = self.coeffs[i] if i < len(self.coeffs) else zero
            b = other.coeffs[i] if i < len(other.coeffs) else zero
            out.append(a + b)
        return KPolynomial(self.tower, out)

    def __mul__(self, other: "KPolynomial") -> "KPolynomial":
        zero = KElement.zero(self.tower, self.tower.exact_prec)
        out: List[KElement] = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return KPolynomial(self.tower, out)

    def __repr__(self) -> str:
        return f"KPolynomial({list(self.coeffs)!r})"


def eval_poly(g: KPolynomial, x: KElement) -> KElement:
    return g(x)


def eval_deriv(g: KPolynomial, x: KElement) -> KElement:
    return g.derivative()(x)


def canonical_poly_lift(x: KElement) -> KPolynomial:
    """The degree < e polynomial over O_{K_0} whose value at pi is x.

    Raises:
        DomainError: If x is not integral
    """
    if not x.is_integral():
        raise DomainError(f"canonical lift needs an integral element, got {x!r}")
    tower = x.tower
    f, d = tower.f, tower.degree
    coeffs = []
    for i in range(tower.e):
        row = list(x.coeffs[i * f:(i + 1) * f]) + [0] * (d - f)
        coeffs.append(KElement(tower, row, x.shift, x.prec))
    return KPolynomial(tower, coeffs)


def poly_lift(x: KElement, prime: KElement) -> KPolynomial:
    """Degree < e polynomial g over O_{K_0} with g(prime) = x.

    Expresses x on the basis {u^j prime^i} by p-adic elimination.
    """
    tower = x.tower
    if prime.pi_valuation() != 1:
        raise DomainError(f"{prime!r} is not a prime element")
    if prime is tower.pi:
        return canonical_poly_lift(x)
    if not x.is_integral():
        raise DomainError(f"polynomial lift needs an integral element, got {x!r}")
    basis = []
    prime_power = tower.one
    for _ in range(tower.e):
        u_power = tower.one
        for _ in range(tower.f):
            basis.append(u_power * prime_power)
            u_power = u_power * tower.u
        prime_power = prime_power * prime
    solution = solve(column_matrix(basis), x.scalars())
    coeffs = []
    for i in range(tower.e):
        acc = KElement.zero(tower, tower.exact_prec)
        u_power = tower.one
        for j in range(tower.f):
            acc = acc + KElement.from_scalar(tower, solution[i * tower.f + j]) * u_power
            u_power = u_power * tower.u
        coeffs.append(acc)
    return KPolynomial(tower, coeffs)


def hensel_root(
    f: KPolynomial, x0: KElement, prec: Optional[int] = None, max_iter: int = 0
) -> KElement:
    """Newton-lift an approximate root of f.

    Args:
        f: Polynomial over O_K
        x0: Approximation with ord f(x0) > 2 ord f'(x0)
        prec: Target absolute precision (default: the tower's working precision)
        max_iter: Iteration cap (default: enough for quadratic convergence)

    Returns:
        Root known to absolute precision ``prec``

    Raises:
        ConvergenceError: If the starting point gives no quadratic convergence
    """
    tower = x0.tower
    target = tower.prec if prec is None else prec
    fx = f(x0)
    dfx = f.derivative()(x0)
    if dfx.is_zero():
        raise ConvergenceError("no quadratic convergence: f'(x0) vanishes")
    v = dfx.ord()
    if not fx.is_zero() and fx.ord() <= 2 * v:
        raise ConvergenceError(
            f"no quadratic convergence: ord f(x0) = {fx.ord()} <= "
            f"2 ord f'(x0) = {2 * v}"
        )
    work = target + 2 * ceil(v) + 4
    g = f.with_precision(work)
    dg = g.derivative()
    x = x0.with_precision(work)
    stop = target + v
    limit = max_iter or (tower.e * work).bit_length() + 5
    for _ in range(limit):
        fx = g(x)
        if fx.is_zero() or fx.ord() >= stop:
            return x.with_precision(target)
        x = (x - fx / dg(x)).with_precision(work)
    raise ConvergenceError(f"Newton iteration did not reach precision {target}")


def find_zeta(tower: FieldTower, n: int) -> Optional[KElement]:
    """A primitive p^n-th root of unity in K, or None when K has none.

    Searches x = 1 + r pi^k + ... digit by digit, pruning branches whose
    value f(x) is too large for x to approximate a root, then Hensel-lifts.
    """
    if n == 0:
        return tower.one.with_precision(tower.prec)
    p, e = tower.p, tower.e
    phi = p ** (n - 1) * (p - 1)
    if e % phi:
        return None
    k = e // phi
    f = KPolynomial.cyclotomic(tower, n).with_precision(tower.prec)
    df = f.derivative()
    different = n - Fraction(1, p - 1)
    depth = ceil(2 * different * e) + k + 2

    def search(x: KElement, m: int) -> Optional[KElement]:
        fx = f(x)
        dfx = df(x)
        if fx.is_zero():
            return x.with_precision(tower.prec)
        if not dfx.is_zero() and fx.ord() > 2 * dfx.ord():
            try:
                return hensel_root(f, x)
            except (ConvergenceError, PrecisionError):
                return None
        bound = min(different + Fraction(m, e), Fraction(2 * m, e))
        if fx.ord() < bound or m >= depth:
            return None
        step = tower.pi_power(m)
        for digit in tower.digits:
            candidate = x + digit_element(tower, digit) * step if any(digit) else x
            root = search(candidate, m + 1)
            if root is not None:
                return root
        return None

    for digit in tower.digits:
        if not any(digit):
            continue
        start = tower.one + digit_element(tower, digit) * tower.pi_power(k)
        root = search(start, k + 1)
        if root is not None:
            return root
    return None
