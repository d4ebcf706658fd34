"""Base-field p-adic numbers with absolute precision tracking.

A PadicScalar stores ``p^valuation * unit`` known modulo ``p^abs_prec``.
The unit is kept reduced modulo ``p^(abs_prec - valuation)`` and prime to
p; a value indistinguishable from zero has ``unit == 0`` and
``valuation == abs_prec``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Union

from sympy import mod_inverse, multiplicity

from rlab.core.exceptions import PrecisionError

Number = Union[int, "PadicScalar"]


@dataclass(frozen=True)
class PadicScalar:
    """An element of Q_p known to absolute precision p^abs_prec."""

    p: int
    unit: int
    valuation: int
    abs_prec: int

    @classmethod
    def make(cls, p: int, value: int, shift: int, prec: int) -> "PadicScalar":
        """Normalize ``value * p^shift`` known modulo ``p^prec``."""
        span = prec - shift
        if span <= 0:
            return cls(p, 0, prec, prec)
        value = int(value) % p**span
        if value == 0:
            return cls(p, 0, prec, prec)
        v = int(multiplicity(p, value))
        return cls(p, value // p**v, shift + v, prec)

    @classmethod
    def from_int(cls, p: int, value: int, prec: int) -> "PadicScalar":
        return cls.make(p, value, 0, prec)

    @classmethod
    def from_fraction(cls, p: int, value: Fraction, prec: int) -> "PadicScalar":
        """Exact rational (denominator valuation allowed) known mod p^prec."""
        value = Fraction(value)
        num, den = value.numerator, value.denominator
        if num == 0:
            return cls(p, 0, prec, prec)
        vd = int(multiplicity(p, den))
        vn = int(multiplicity(p, num))
        den_unit = den // p**vd
        num_unit = num // p**vn
        shift = vn - vd
        span = prec - shift
        if span <= 0:
            return cls(p, 0, prec, prec)
        modulus = p**span
        return cls.make(p, num_unit * int(mod_inverse(den_unit, modulus)), shift, prec)

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return self.unit == 0

    @property
    def relative_precision(self) -> int:
        return self.abs_prec - self.valuation

    @property
    def digits(self) -> List[int]:
        """Base-p digits of the unit part, least significant first."""
        out = []
        u = self.unit
        for _ in range(self.relative_precision):
            u, r = divmod(u, self.p)
            out.append(r)
        return out

    def to_int(self) -> int:
        """Integer representative in [0, p^abs_prec); requires integrality."""
        if self.valuation < 0:
            raise ValueError(f"{self} is not p-integral")
        if self.abs_prec <= 0:
            return 0
        return (self.unit * self.p**self.valuation) % self.p**self.abs_prec

    def residue(self, k: int) -> int:
        """Representative modulo p^k; raises when p^k exceeds the precision."""
        if k > self.abs_prec:
            raise PrecisionError(
                f"value known mod {self.p}^{self.abs_prec}, residue mod "
                f"{self.p}^{k} requested"
            )
        return self.to_int() % self.p**k

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other: Number) -> "PadicScalar":
        if isinstance(other, PadicScalar):
            if other.p != self.p:
                raise ValueError("cannot mix different primes")
            return other
        if isinstance(other, int):
            return PadicScalar.from_int(self.p, other, max(self.abs_prec, 0) + 64)
        return NotImplemented

    def __add__(self, other: Number) -> "PadicScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.abs_prec, other.abs_prec)
        shift = min(self.valuation, other.valuation)
        value = self.unit * self.p ** (self.valuation - shift) + other.unit * self.p ** (
            other.valuation - shift
        )
        return PadicScalar.make(self.p, value, shift, prec)

    __radd__ = __add__

    def __neg__(self) -> "PadicScalar":
        return PadicScalar.make(self.p, -self.unit, self.valuation, self.abs_prec)

    def __sub__(self, other: Number) -> "PadicScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "PadicScalar":
        return (-self) + other

    def __mul__(self, other: Number) -> "PadicScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.abs_prec + other.valuation, other.abs_prec + self.valuation)
        return PadicScalar.make(
            self.p, self.unit * other.unit, self.valuation + other.valuation, prec
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "PadicScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise PrecisionError(
                f"division by a value indistinguishable from 0 mod "
                f"{self.p}^{other.abs_prec}"
            )
        rel = min(self.relative_precision, other.relative_precision)
        shift = self.valuation - other.valuation
        if self.is_zero():
            prec = self.abs_prec - other.valuation
            return PadicScalar(self.p, 0, prec, prec)
        modulus = self.p**rel
        unit = self.unit * int(mod_inverse(other.unit % modulus, modulus))
        return PadicScalar.make(self.p, unit, shift, shift + rel)

    def scale_p(self, k: int) -> "PadicScalar":
        """Multiply by the exact power p^k (k may be negative)."""
        return PadicScalar(self.p, self.unit, self.valuation + k, self.abs_prec + k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (int, PadicScalar)):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if self.is_zero():
            return f"O({self.p}^{self.abs_prec})"
        return (
            f"{self.unit}*{self.p}^{self.valuation} + O({self.p}^{self.abs_prec})"
        )


def gcd_valuation(p: int, values: List[int]) -> int:
    """Largest k with p^k dividing every nonzero entry, or -1 if all are zero."""
    g = 0
    for value in values:
        g = gcd(g, value)
    if g == 0:
        return -1
    return int(multiplicity(p, g))
