"""Two-step p-adic fields K = K_0(pi) and their elements.

K_0/Q_p is unramified of degree f, generated by a root u of ``unram_poly``;
K/K_0 is totally ramified of degree e, generated by a root pi of an
Eisenstein polynomial.  Elements are stored on the Z_p-basis
``{pi^i u^j : i < e, j < f}`` of O_K (flat index ``i*f + j``) together with
a common power of p and an absolute precision: a KElement with coordinates
``c``, shift ``s`` and precision ``N`` is ``p^s * sum(c_k b_k)`` modulo
``p^N O_K``.
"""

import hashlib
import itertools
import json
import random
import warnings
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from math import ceil
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import ZZ, Matrix, isprime, mod_inverse
from sympy.polys.galoistools import gf_from_int_poly, gf_irreducible_p

from rlab.core.exceptions import (
    DomainError,
    FieldDescriptionError,
    PrecisionError,
    PrecisionWarning,
)
from rlab.core.padic import PadicScalar, gcd_valuation

Coefficient = Union[int, Sequence[int]]
Digit = Tuple[int, ...]

DEFAULT_MIN_PRECISION = 40


def default_precision(n: int, e: int) -> int:
    """Default working precision max(40, 10*n*e)."""
    return max(DEFAULT_MIN_PRECISION, 10 * n * e)


@dataclass(frozen=True)
class FieldDesc:
    """Defining data of a field K = K_0(pi).

    Attributes:
        p: Residue characteristic
        n: Level of the root of unity zeta_{p^n} required in K (0 for none)
        eisenstein: Little-endian coefficients of e(X); each entry is an
            integer or a list of O_{K_0}-coordinates
        unram_poly: Little-endian monic polynomial over Z defining K_0
        work_prec: Working precision N_w (None selects the default)
    """

    p: int
    n: int
    eisenstein: Tuple[Coefficient, ...]
    unram_poly: Tuple[int, ...] = (0, 1)
    work_prec: Optional[int] = None

    def __post_init__(self) -> None:
        unram = tuple(int(c) for c in self.unram_poly)
        f = max(len(unram) - 1, 1)
        coeffs = []
        for coeff in self.eisenstein:
            if isinstance(coeff, int):
                coords = [coeff] + [0] * (f - 1)
            else:
                coords = [int(c) for c in coeff]
                if len(coords) > f:
                    raise FieldDescriptionError(
                        f"eisenstein coefficient {list(coeff)} has more than f = {f} "
                        "coordinates"
                    )
                coords += [0] * (f - len(coords))
            coeffs.append(tuple(coords))
        object.__setattr__(self, "unram_poly", unram)
        object.__setattr__(self, "eisenstein", tuple(coeffs))

    @property
    def f(self) -> int:
        return len(self.unram_poly) - 1

    @property
    def e(self) -> int:
        return len(self.eisenstein) - 1

    @property
    def degree(self) -> int:
        return self.e * self.f

    @property
    def precision(self) -> int:
        if self.work_prec is not None:
            return self.work_prec
        return default_precision(self.n, self.e)

    def validate(self) -> None:
        """Check the invariants, naming the one that fails."""
        p = self.p
        if not isprime(p):
            raise FieldDescriptionError(f"p = {p} is not prime")
        if self.n < 0:
            raise FieldDescriptionError(f"n = {self.n} must be non-negative")
        if len(self.unram_poly) < 2 or self.unram_poly[-1] != 1:
            raise FieldDescriptionError("unram_poly must be monic of degree >= 1")
        big_endian = list(reversed(self.unram_poly))
        if self.f > 1 and not gf_irreducible_p(gf_from_int_poly(big_endian, p), p, ZZ):
            raise FieldDescriptionError(
                f"unram_poly {list(self.unram_poly)} is reducible mod {p}"
            )
        if self.e < 1:
            raise FieldDescriptionError("eisenstein polynomial must have degree >= 1")
        leading = self.eisenstein[-1]
        if leading != (1,) + (0,) * (self.f - 1):
            raise FieldDescriptionError("eisenstein polynomial must be monic")
        for i, coords in enumerate(self.eisenstein[:-1]):
            if any(c % p for c in coords):
                raise FieldDescriptionError(
                    f"coefficient of X^{i} has ord_p = 0, not Eisenstein"
                )
        v = gcd_valuation(p, list(self.eisenstein[0]))
        if v != 1:
            shown = "infinity" if v < 0 else str(v)
            raise FieldDescriptionError(
                f"constant term ord_p = {shown}, not Eisenstein"
            )
        if self.work_prec is not None:
            if self.work_prec < 1:
                raise FieldDescriptionError(
                    f"precision = {self.work_prec} must be positive"
                )
            if self.work_prec < default_precision(self.n, self.e):
                warnings.warn(
                    f"working precision {self.work_prec} is below the default "
                    f"{default_precision(self.n, self.e)}",
                    PrecisionWarning,
                )

    def to_dict(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "n": self.n,
            "unram_poly": list(self.unram_poly),
            "eisenstein": [list(c) for c in self.eisenstein],
            "precision": self.precision,
        }

    def fingerprint(self) -> str:
        """SHA-256 of the canonical JSON form."""
        canonical = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class FieldTower:
    """A validated field with cached multiplication data.

    Use :func:`make_field` rather than constructing this directly.
    """

    def __init__(self, desc: FieldDesc):
        self.desc = desc
        self.p = desc.p
        self.f = desc.f
        self.e = desc.e
        self.degree = desc.degree
        self.q = desc.p**desc.f
        self.prec = desc.precision
        # Constants are held well beyond any working precision.
        self.exact_prec = 2 * self.prec + 20
        self._k0_modulus = list(desc.unram_poly)
        self._eisenstein = [list(c) for c in desc.eisenstein]
        self.mul_table = self._build_mul_table()
        self.trace_vector = self._build_trace_vector()
        self._pi_powers: Dict[int, "KElement"] = {}
        self._eps_inv_powers: Dict[int, "KElement"] = {}
        self._roots_of_unity: Dict[int, Optional["KElement"]] = {}

    # -- construction helpers -------------------------------------------

    def _k0_mul(self, a: List[int], b: List[int]) -> List[int]:
        f = self.f
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        g = self._k0_modulus
        for t in range(2 * f - 2, f - 1, -1):
            c = prod[t]
            if c:
                for i in range(f):
                    prod[t - f + i] -= c * g[i]
                prod[t] = 0
        return prod[:f]

    def _basis_product(self, k1: int, k2: int) -> List[int]:
        f, e = self.f, self.e
        i1, j1 = divmod(k1, f)
        i2, j2 = divmod(k2, f)
        unit_a = [0] * f
        unit_b = [0] * f
        unit_a[j1] = 1
        unit_b[j2] = 1
        grid = [[0] * f for _ in range(2 * e - 1)]
        grid[i1 + i2] = self._k0_mul(unit_a, unit_b)
        for t in range(2 * e - 2, e - 1, -1):
            c = grid[t]
            if any(c):
                for i in range(e):
                    term = self._k0_mul(self._eisenstein[i], c)
                    grid[t - e + i] = [x - y for x, y in zip(grid[t - e + i], term)]
                grid[t] = [0] * f
        flat = []
        for i in range(e):
            flat.extend(grid[i])
        return flat

    def _build_mul_table(self) -> List[List[List[Tuple[int, int]]]]:
        d = self.degree
        table = []
        for k1 in range(d):
            row = []
            for k2 in range(d):
                product = self._basis_product(k1, k2)
                row.append([(k, c) for k, c in enumerate(product) if c])
            table.append(row)
        return table

    def _build_trace_vector(self) -> List[int]:
        out = []
        for k in range(self.degree):
            total = 0
            for m in range(self.degree):
                for idx, c in self.mul_table[k][m]:
                    if idx == m:
                        total += c
            out.append(total)
        return out

    # -- identity -------------------------------------------------------

    @property
    def key(self) -> Tuple[object, ...]:
        """Identity of the field independent of working precision."""
        return (self.p, self.desc.n, self.desc.unram_poly, self.desc.eisenstein)

    def same_field(self, other: "FieldTower") -> bool:
        return self is other or self.key == other.key

    def with_precision(self, prec: int) -> "FieldTower":
        """The same field at another working precision."""
        return make_field(replace(self.desc, work_prec=prec))

    def __repr__(self) -> str:
        return (
            f"FieldTower(p={self.p}, e={self.e}, f={self.f}, n={self.desc.n}, "
            f"prec={self.prec})"
        )

    # -- constants ------------------------------------------------------

    def element(self, coeffs: Sequence[int], shift: int = 0,
                prec: Optional[int] = None) -> "KElement":
        return KElement(self, coeffs, shift, prec)

    def from_int(self, value: int, prec: Optional[int] = None) -> "KElement":
        return KElement.from_int(self, value, prec)

    def k0_element(self, coords: Sequence[int], prec: Optional[int] = None) -> "KElement":
        """Element of O_{K_0} with the given u-coordinates."""
        coeffs = [0] * self.degree
        for j, c in enumerate(coords):
            coeffs[j] = c
        return KElement(self, coeffs, 0, self.exact_prec if prec is None else prec)

    @cached_property
    def one(self) -> "KElement":
        return KElement.from_int(self, 1, self.exact_prec)

    @cached_property
    def pi(self) -> "KElement":
        if self.e >= 2:
            coeffs = [0] * self.degree
            coeffs[self.f] = 1
            return KElement(self, coeffs, 0, self.exact_prec)
        # e == 1: pi is the root of X + a_0
        return self.k0_element([-c for c in self._eisenstein[0]])

    @cached_property
    def u(self) -> "KElement":
        if self.f >= 2:
            return self.k0_element([0, 1] + [0] * (self.f - 2))
        return self.k0_element([-self._k0_modulus[0]])

    @cached_property
    def eps(self) -> "KElement":
        """The unit pi^e / p."""
        coeffs: List[int] = []
        for coords in self._eisenstein[:-1]:
            coeffs.extend(-c // self.p for c in coords)
        return KElement(self, coeffs, 0, self.exact_prec)

    @cached_property
    def eps_inv(self) -> "KElement":
        return self.eps._unit_inverse()

    def pi_power(self, k: int) -> "KElement":
        if k not in self._pi_powers:
            self._pi_powers[k] = self.one if k == 0 else self.pi**k
        return self._pi_powers[k]

    def eps_inv_power(self, k: int) -> "KElement":
        if k not in self._eps_inv_powers:
            self._eps_inv_powers[k] = self.one if k == 0 else self.eps_inv**k
        return self._eps_inv_powers[k]

    def root_of_unity(self, n: int) -> Optional["KElement"]:
        """Cached primitive p^n-th root of unity, or None when absent."""
        if n not in self._roots_of_unity:
            from rlab.core.polynomial import find_zeta

            self._roots_of_unity[n] = find_zeta(self, n)
        return self._roots_of_unity[n]

    @property
    def zeta(self) -> "KElement":
        """The fixed zeta_{p^n} for the level named in the description."""
        if self.desc.n == 0:
            raise DomainError("zeta is not available: the field has n = 0")
        zeta = self.root_of_unity(self.desc.n)
        if zeta is None:
            raise FieldDescriptionError(
                f"zeta_{self.p}^{self.desc.n} is not present in the described field"
            )
        return zeta

    @cached_property
    def different_exponent(self) -> int:
        """delta with (e'(pi)) = (pi^delta)."""
        from rlab.core.polynomial import KPolynomial

        return KPolynomial.eisenstein(self).derivative()(self.pi).pi_valuation()

    @cached_property
    def pth_power_level(self) -> int:
        """c = floor(e*p/(p-1)); principal units at pi-level > c are p-th powers."""
        return (self.e * self.p) // (self.p - 1)

    @cached_property
    def pth_power_table(self) -> List[Tuple["KElement", "KElement"]]:
        """Pairs (y, y^p) for principal units y representing U^1 / U^(j)."""
        from rlab.core.units import principal_pth_powers

        return principal_pth_powers(self)

    @cached_property
    def pth_power_residues(self) -> frozenset:
        """pi-digits modulo pi^(c+1) of all p-th powers of principal units."""
        level = self.pth_power_level + 1
        return frozenset(pi_digits(yp, level) for _, yp in self.pth_power_table)

    @cached_property
    def digits(self) -> List[Digit]:
        """Digit set for pi-adic expansions: u-coordinate vectors in [0, p)."""
        return [tuple(reversed(t)) for t in itertools.product(range(self.p), repeat=self.f)]


def make_field(desc: FieldDesc) -> FieldTower:
    """Validate a description and build its tower.

    Raises:
        FieldDescriptionError: If an invariant fails, including the absence
            of zeta_{p^n} when n >= 1
    """
    desc.validate()
    tower = FieldTower(desc)
    if desc.n >= 1 and tower.root_of_unity(desc.n) is None:
        raise FieldDescriptionError(
            f"zeta_{desc.p}^{desc.n} is not present in the described field"
        )
    return tower


class KElement:
    """An element of K known modulo p^prec O_K."""

    __slots__ = ("tower", "coeffs", "shift", "prec")

    def __init__(
        self,
        tower: FieldTower,
        coeffs: Sequence[int],
        shift: int = 0,
        prec: Optional[int] = None,
    ):
        if prec is None:
            prec = tower.prec
        if len(coeffs) != tower.degree:
            raise ValueError(
                f"expected {tower.degree} coordinates, got {len(coeffs)}"
            )
        p = tower.p
        span = prec - shift
        cs: Tuple[int, ...]
        if span <= 0:
            cs, shift = (0,) * tower.degree, prec
        else:
            modulus = p**span
            reduced = [c % modulus for c in coeffs]
            t = gcd_valuation(p, reduced)
            if t < 0:
                cs, shift = (0,) * tower.degree, prec
            elif t:
                cs, shift = tuple(c // p**t for c in reduced), shift + t
            else:
                cs = tuple(reduced)
        self.tower = tower
        self.coeffs = cs
        self.shift = shift
        self.prec = prec

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, tower: FieldTower, prec: Optional[int] = None) -> "KElement":
        return cls(tower, [0] * tower.degree, 0, prec)

    @classmethod
    def from_int(cls, tower: FieldTower, value: int,
                 prec: Optional[int] = None) -> "KElement":
        coeffs = [0] * tower.degree
        coeffs[0] = value
        return cls(tower, coeffs, 0, prec)

    @classmethod
    def from_fraction(cls, tower: FieldTower, value: Fraction,
                      prec: Optional[int] = None) -> "KElement":
        value = Fraction(value)
        return cls.from_int(tower, value.numerator, prec).divide_int(value.denominator)

    @classmethod
    def from_scalar(cls, tower: FieldTower, s: PadicScalar) -> "KElement":
        """Embed a base-field scalar."""
        coeffs = [0] * tower.degree
        coeffs[0] = s.unit
        return cls(tower, coeffs, s.valuation, s.abs_prec)

    @classmethod
    def from_scalars(cls, tower: FieldTower,
                     scalars: Sequence[PadicScalar]) -> "KElement":
        prec = min(s.abs_prec for s in scalars)
        shift = min(s.valuation for s in scalars)
        coeffs = [s.unit * tower.p ** (s.valuation - shift) for s in scalars]
        return cls(tower, coeffs, shift, prec)

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _leading_row(self) -> int:
        f = self.tower.f
        for i in range(self.tower.e):
            if any(c % self.tower.p for c in self.coeffs[i * f:(i + 1) * f]):
                return i
        raise AssertionError("normalized element has no unit coordinate")

    def pi_valuation(self) -> int:
        """Valuation in powers of pi (e * ord_p)."""
        if self.is_zero():
            raise PrecisionError(
                f"valuation of an element indistinguishable from 0 mod "
                f"{self.tower.p}^{self.prec}"
            )
        return self.shift * self.tower.e + self._leading_row()

    def ord(self) -> Fraction:
        """ord_p normalized by ord_p(p) = 1."""
        return Fraction(self.pi_valuation(), self.tower.e)

    def is_integral(self) -> bool:
        return self.is_zero() or self.shift >= 0

    def is_unit(self) -> bool:
        if self.is_zero() or self.shift != 0:
            return False
        return any(c % self.tower.p for c in self.coeffs[: self.tower.f])

    def residue_digit(self) -> Digit:
        """Digit r with self = r mod pi (self integral)."""
        f = self.tower.f
        if self.is_zero() or self.shift > 0:
            return (0,) * f
        if self.shift < 0:
            raise DomainError(f"element {self!r} is not integral")
        return tuple(c % self.tower.p for c in self.coeffs[:f])

    def scalars(self) -> List[PadicScalar]:
        """Coordinates as base-field scalars."""
        return [
            PadicScalar.make(self.tower.p, c, self.shift, self.prec) for c in self.coeffs
        ]

    def residue(self, k: int) -> Tuple[int, ...]:
        """Coordinates modulo p^k (requires integrality and enough precision)."""
        if not self.is_integral():
            raise DomainError(f"element {self!r} is not integral")
        if k > self.prec:
            raise PrecisionError(
                f"element known mod p^{self.prec}, residue mod p^{k} requested"
            )
        modulus = self.tower.p**k
        scale = self.tower.p ** max(self.shift, 0)
        if self.is_zero():
            return (0,) * self.tower.degree
        return tuple((c * scale) % modulus for c in self.coeffs)

    def to_int(self) -> int:
        """Integer representative of an element of Z_p."""
        if any(self.coeffs[1:]):
            raise DomainError(f"element {self!r} does not lie in Q_p")
        return self.scalars()[0].to_int()

    def key(self) -> Tuple[object, ...]:
        return (self.tower.key, self.coeffs, self.shift, self.prec)

    # -- precision ------------------------------------------------------

    def with_precision(self, prec: int) -> "KElement":
        """Same representative, re-labelled as known mod p^prec.

        Raising the precision treats the stored representative as exact.
        """
        return KElement(self.tower, self.coeffs, self.shift, prec)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other: object) -> "KElement":
        if isinstance(other, KElement):
            if not self.tower.same_field(other.tower):
                raise ValueError("cannot combine elements of different fields")
            return other
        if isinstance(other, int):
            return KElement.from_int(self.tower, other, max(self.prec, 1))
        if isinstance(other, Fraction):
            return KElement.from_fraction(self.tower, other, self.prec + 64)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "KElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.tower.p
        shift = min(self.shift, other.shift)
        prec = min(self.prec, other.prec)
        sa = p ** (self.shift - shift)
        sb = p ** (other.shift - shift)
        coeffs = [a * sa + b * sb for a, b in zip(self.coeffs, other.coeffs)]
        return KElement(self.tower, coeffs, shift, prec)

    __radd__ = __add__

    def __neg__(self) -> "KElement":
        return KElement(self.tower, [-c for c in self.coeffs], self.shift, self.prec)

    def __sub__(self, other: object) -> "KElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "KElement":
        return (-self) + other

    def __mul__(self, other: object) -> "KElement":
        if isinstance(other, int):
            return self.scale_int(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        shift = self.shift + other.shift
        prec = min(self.prec + other.shift, other.prec + self.shift)
        out = [0] * self.tower.degree
        table = self.tower.mul_table
        for k1, c1 in enumerate(self.coeffs):
            if not c1:
                continue
            row = table[k1]
            for k2, c2 in enumerate(other.coeffs):
                if not c2:
                    continue
                prod = c1 * c2
                for k, t in row[k2]:
                    out[k] += prod * t
        return KElement(self.tower, out, shift, prec)

    __rmul__ = __mul__

    def scale_int(self, m: int) -> "KElement":
        """Multiply by an exact integer."""
        if m == 0:
            return KElement.zero(self.tower, self.prec)
        v = 0
        p = self.tower.p
        while m % p == 0:
            m //= p
            v += 1
        return KElement(
            self.tower, [c * m for c in self.coeffs], self.shift + v, self.prec + v
        )

    def divide_int(self, m: int) -> "KElement":
        """Divide by an exact nonzero integer; p-power factors cost precision."""
        if m == 0:
            raise ZeroDivisionError("division by zero")
        v = 0
        p = self.tower.p
        while m % p == 0:
            m //= p
            v += 1
        span = self.prec - self.shift
        if span <= 0 or self.is_zero():
            return KElement.zero(self.tower, self.prec - v)
        m_inv = int(mod_inverse(m % p**span, p**span))
        return KElement(
            self.tower, [c * m_inv for c in self.coeffs], self.shift - v, self.prec - v
        )

    def scale_p(self, k: int) -> "KElement":
        """Multiply by the exact power p^k (k may be negative)."""
        return KElement(self.tower, self.coeffs, self.shift + k, self.prec + k)

    def mul_pi_power(self, k: int) -> "KElement":
        """Multiply by pi^k; negative k divides, using pi^-m = pi^b eps^-a / p^a."""
        if k == 0:
            return self
        tower = self.tower
        if k > 0:
            return self * tower.pi_power(k)
        m = -k
        a = -(-m // tower.e)
        b = a * tower.e - m
        out = self
        if b:
            out = out * tower.pi_power(b)
        out = out * tower.eps_inv_power(a)
        return out.scale_p(-a)

    def unit_part(self) -> Tuple[int, "KElement"]:
        """Return (m, w) with self = pi^m * w and w a unit."""
        m = self.pi_valuation()
        return m, self.mul_pi_power(-m)

    def _unit_inverse(self) -> "KElement":
        tower = self.tower
        prec = self.prec
        one = KElement.from_int(tower, 1, prec)
        y = self ** (tower.q - 2) if tower.q > 2 else one
        for _ in range((tower.e * max(prec, 1)).bit_length() + 3):
            r = one - self * y
            if r.is_zero():
                return y.with_precision(prec)
            y = y + y * r
        raise PrecisionError("unit inverse did not converge")

    def inv(self) -> "KElement":
        """Multiplicative inverse.

        Raises:
            PrecisionError: If the element is indistinguishable from 0
        """
        if self.is_zero():
            raise PrecisionError(
                f"inverse of an element indistinguishable from 0 mod "
                f"{self.tower.p}^{self.prec}"
            )
        s = self.shift
        unscaled = KElement(self.tower, self.coeffs, 0, self.prec - s)
        i0 = unscaled.pi_valuation()
        w = unscaled.mul_pi_power(-i0) if i0 else unscaled
        y = w._unit_inverse()
        if i0:
            y = y.mul_pi_power(-i0)
        return y.scale_p(-s)

    def __truediv__(self, other: object) -> "KElement":
        if isinstance(other, int):
            return self.divide_int(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other: object) -> "KElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int) -> "KElement":
        if k < 0:
            return self.inv() ** (-k)
        result: Optional[KElement] = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        if result is None:
            return KElement.from_int(self.tower, 1, max(self.prec, self.tower.prec))
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (int, Fraction, KElement)):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    # -- trace and norm -------------------------------------------------

    def trace(self) -> PadicScalar:
        """Tr_{K/Q_p}: trace of multiplication on the Q_p-basis."""
        total = sum(c * t for c, t in zip(self.coeffs, self.tower.trace_vector))
        return PadicScalar.make(self.tower.p, total, self.shift, self.prec)

    def multiplication_matrix(self) -> List[List[int]]:
        """Integer matrix of multiplication by the unscaled coordinates."""
        d = self.tower.degree
        rows = [[0] * d for _ in range(d)]
        table = self.tower.mul_table
        for k1, c in enumerate(self.coeffs):
            if not c:
                continue
            for m in range(d):
                for k, t in table[k1][m]:
                    rows[k][m] += c * t
        return rows

    def norm(self) -> PadicScalar:
        """N_{K/Q_p}: determinant of the multiplication matrix."""
        p, d = self.tower.p, self.tower.degree
        if self.is_zero():
            bound = self.prec * d
            return PadicScalar(p, 0, bound, bound)
        det = int(Matrix(self.multiplication_matrix()).det(method="bareiss"))
        s = self.shift
        return PadicScalar.make(p, det, s * d, self.prec - s + s * d)

    def __repr__(self) -> str:
        if self.is_zero():
            return f"O({self.tower.p}^{self.prec})"
        return f"{self.tower.p}^{self.shift}*{list(self.coeffs)} + O({self.tower.p}^{self.prec})"


def trace_abs(x: KElement) -> PadicScalar:
    return x.trace()


def norm_abs(x: KElement) -> PadicScalar:
    return x.norm()


def digit_element(tower: FieldTower, digit: Digit, prec: Optional[int] = None) -> KElement:
    """The O_{K_0} element with u-coordinates ``digit``."""
    return tower.k0_element(digit, tower.exact_prec if prec is None else prec)


def pi_digits(x: KElement, m: int) -> Tuple[Digit, ...]:
    """Canonical pi-adic digits of an integral element modulo pi^m.

    Raises:
        DomainError: If x is not integral
        PrecisionError: If x is not known modulo pi^m
    """
    if not x.is_integral():
        raise DomainError(f"pi-adic digits need an integral element, got {x!r}")
    out = []
    y = x
    for i in range(m):
        if y.prec < 1:
            raise PrecisionError(
                f"element not known to {m} pi-adic digits (lost at digit {i})"
            )
        digit = y.residue_digit()
        out.append(digit)
        if any(digit):
            y = y - digit_element(x.tower, digit)
        y = y.mul_pi_power(-1)
    return tuple(out)


def from_pi_digits(tower: FieldTower, digits: Sequence[Digit],
                   prec: Optional[int] = None) -> KElement:
    total = KElement.zero(tower, tower.exact_prec)
    for i, digit in enumerate(digits):
        if any(digit):
            total = total + digit_element(tower, digit) * tower.pi_power(i)
    return total.with_precision(tower.prec if prec is None else prec)


def random_element(
    tower: FieldTower,
    kind: str = "integral",
    seed: Union[int, random.Random, None] = None,
    min_ord: Union[Fraction, int, None] = None,
) -> KElement:
    """Deterministic random element for test harnesses.

    Args:
        tower: Field to sample from
        kind: 'integral', 'unit', 'principal' (ord(x - 1) >= min_ord) or
            'nonzero' (pi^m times a unit)
        seed: Integer seed or a random.Random to draw from
        min_ord: Lower bound on ord(x - 1) for principal units (default 1/e)
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    p, f, prec = tower.p, tower.f, tower.prec
    bound = p**prec
    coeffs = [rng.randrange(bound) for _ in range(tower.degree)]
    if kind == "integral":
        return KElement(tower, coeffs, 0, prec)
    if kind == "unit":
        if all(c % p == 0 for c in coeffs[:f]):
            coeffs[0] += rng.randrange(1, p)
        return KElement(tower, coeffs, 0, prec)
    if kind == "principal":
        r = Fraction(1, tower.e) if min_ord is None else Fraction(min_ord)
        t = max(1, ceil(r * tower.e))
        return KElement(tower, coeffs, 0, prec).mul_pi_power(t) + 1
    if kind == "nonzero":
        unit = random_element(tower, "unit", rng)
        return unit.mul_pi_power(rng.randrange(0, 2 * tower.e))
    raise ValueError(f"unknown sampling constraint: {kind}")
