"""A truncated model of O_K{{T}} and the residue maps to K.

Laurent elements live in a fixed exponent window [-M, M]; products that
would leave it raise LaurentWindowError. Forms over K{{T}} are kept in a
normal form with dT/T in the last slot, and symbols are handled only in
the decomposable shape {x_1, ..., x_q, T} with every x_i in K.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple, Union

from rlab.core.exceptions import DomainError, LaurentWindowError, OutOfModelError
from rlab.core.exp_map import FormExpression, exp1, exp2_eval
from rlab.core.field import FieldTower, KElement
from rlab.core.reciprocity import CyclotomicContext, SymbolValue, hilbert_symbol

DEFAULT_WINDOW = 8


class LaurentElement:
    """sum_{|i| <= M} c_i T^i with integral coefficients c_i in O_K."""

    __slots__ = ("tower", "window", "coeffs")

    def __init__(
        self,
        tower: FieldTower,
        coeffs: Dict[int, KElement],
        window: int = DEFAULT_WINDOW,
    ):
        kept: Dict[int, KElement] = {}
        for k, c in coeffs.items():
            if c.is_zero():
                continue
            if abs(k) > window:
                raise LaurentWindowError(
                    f"exponent {k} lies outside the window [-{window}, {window}]"
                )
            if not c.is_integral():
                raise DomainError(f"Laurent coefficient of T^{k} is not integral")
            kept[k] = c
        self.tower = tower
        self.window = window
        self.coeffs = kept

    @classmethod
    def constant(cls, x: KElement, window: int = DEFAULT_WINDOW) -> "LaurentElement":
        return cls(x.tower, {0: x}, window)

    @classmethod
    def monomial(cls, x: KElement, k: int, window: int = DEFAULT_WINDOW) -> "LaurentElement":
        return cls(x.tower, {k: x}, window)

    @classmethod
    def T(cls, tower: FieldTower, window: int = DEFAULT_WINDOW) -> "LaurentElement":
        return cls(tower, {1: tower.one}, window)

    @classmethod
    def zero(cls, tower: FieldTower, window: int = DEFAULT_WINDOW) -> "LaurentElement":
        return cls(tower, {}, window)

    def coefficient(self, k: int) -> KElement:
        if k in self.coeffs:
            return self.coeffs[k]
        return KElement.zero(self.tower, self.tower.exact_prec)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return all(k == 0 for k in self.coeffs)

    def _check(self, other: "LaurentElement") -> None:
        if other.window != self.window:
            raise LaurentWindowError(
                f"windows differ: [-{self.window}, {self.window}] and "
                f"[-{other.window}, {other.window}]"
            )

    def __add__(self, other: "LaurentElement") -> "LaurentElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return LaurentElement(self.tower, out, self.window)

    def __neg__(self) -> "LaurentElement":
        return LaurentElement(
            self.tower, {k: -c for k, c in self.coeffs.items()}, self.window
        )

    def __sub__(self, other: "LaurentElement") -> "LaurentElement":
        return self + (-other)

    def __mul__(self, other: Union["LaurentElement", KElement]) -> "LaurentElement":
        if isinstance(other, KElement):
            return LaurentElement(
                self.tower, {k: c * other for k, c in self.coeffs.items()}, self.window
            )
        return laurent_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        terms = ", ".join(f"{c!r}@{k}" for k, c in sorted(self.coeffs.items()))
        return f"LaurentElement([{terms}], M={self.window})"


def laurent_mul(x: LaurentElement, y: LaurentElement) -> LaurentElement:
    """Convolution product; fails loudly when the result leaves the window."""
    x._check(y)
    out: Dict[int, KElement] = {}
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            term = a * b
            out[i + j] = out[i + j] + term if i + j in out else term
    return LaurentElement(x.tower, out, x.window)


Slot = Union[KElement, str]
T_SLOT = "T"


@dataclass(frozen=True, eq=False)
class WedgeTerm:
    """coeff * dlog(base) ^ dT/T."""

    coeff: LaurentElement
    base: KElement


class HLForm:
    """A homogeneous form over O_K{{T}} in normal form.

    Degree 1: dT_part * dT/T + dpi_part * dpi. Degree 2: a sum of
    WedgeTerms. Wedges with no dT/T factor vanish, since the differentials
    of K are all multiples of dpi.
    """

    def __init__(
        self,
        tower: FieldTower,
        degree: int,
        dT_part: Optional[LaurentElement] = None,
        dpi_part: Optional[LaurentElement] = None,
        wedge_terms: Sequence[WedgeTerm] = (),
        window: int = DEFAULT_WINDOW,
    ):
        if degree not in (1, 2):
            raise ValueError(f"forms of degree {degree} are not modelled")
        if degree == 2 and (dT_part is not None or dpi_part is not None):
            raise ValueError("a degree-2 form has no degree-1 parts")
        if degree == 1 and wedge_terms:
            raise ValueError("a degree-1 form has no wedge terms")
        self.tower = tower
        self.degree = degree
        self.window = window
        self.dT_part = dT_part if dT_part is not None else LaurentElement.zero(tower, window)
        self.dpi_part = dpi_part if dpi_part is not None else LaurentElement.zero(tower, window)
        self.wedge_terms = tuple(wedge_terms)

    @classmethod
    def wedge(cls, coeff: LaurentElement, first: Slot, second: Slot) -> "HLForm":
        """coeff * w(first) ^ w(second), where a slot is T (dT/T) or b (dlog b)."""
        tower = coeff.tower
        if first == T_SLOT and second == T_SLOT:
            return cls(tower, 2, window=coeff.window)
        if first != T_SLOT and second != T_SLOT:
            return cls(tower, 2, window=coeff.window)
        if first == T_SLOT:
            # dT/T ^ dlog b = -dlog b ^ dT/T
            assert isinstance(second, KElement)
            return cls(tower, 2, wedge_terms=[WedgeTerm(-coeff, second)], window=coeff.window)
        assert isinstance(first, KElement)
        return cls(tower, 2, wedge_terms=[WedgeTerm(coeff, first)], window=coeff.window)

    def __add__(self, other: "HLForm") -> "HLForm":
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degrees")
        if self.degree == 1:
            return HLForm(
                self.tower,
                1,
                dT_part=self.dT_part + other.dT_part,
                dpi_part=self.dpi_part + other.dpi_part,
                window=self.window,
            )
        return HLForm(
            self.tower, 2, wedge_terms=self.wedge_terms + other.wedge_terms, window=self.window
        )

    def has_dT(self) -> bool:
        if self.degree == 1:
            return not self.dT_part.is_zero()
        return any(not w.coeff.is_zero() for w in self.wedge_terms)


def residue_form(omega: HLForm) -> Union[KElement, FormExpression]:
    """Residue along T: the T^0 coefficient of the dT/T component.

    Degree 1 gives an element of O_K; degree 2 gives a FormExpression
    sum a_i db_i/b_i over K (reduce it with ``to_form``).
    """
    if omega.degree == 1:
        return omega.dT_part.coefficient(0)
    terms = tuple(
        (w.coeff.coefficient(0), w.base)
        for w in omega.wedge_terms
        if not w.coeff.coefficient(0).is_zero()
    )
    return FormExpression(terms)


Entry = Union[KElement, LaurentElement, str]


class MilnorSymbol:
    """A formal symbol {x_1, ..., x_q}; the string "T" stands for the variable."""

    def __init__(self, entries: Sequence[Entry]):
        self.entries: Tuple[Entry, ...] = tuple(entries)

    def __len__(self) -> int:
        return len(self.entries)

    @staticmethod
    def _constant(entry: Entry) -> KElement:
        if isinstance(entry, KElement):
            return entry
        if isinstance(entry, LaurentElement) and entry.is_constant():
            return entry.coefficient(0)
        raise OutOfModelError(f"entry {entry!r} is not T-free; symbol is outside the model")

    def normalize_T_last(self) -> Tuple[int, "MilnorSymbol"]:
        """Move the single T entry to the last slot; returns (sign, symbol)."""
        positions = [i for i, x in enumerate(self.entries) if isinstance(x, str)]
        if len(positions) != 1 or self.entries[positions[0]] != T_SLOT:
            raise OutOfModelError("symbol must contain T exactly once")
        i = positions[0]
        rest = [self._constant(x) for j, x in enumerate(self.entries) if j != i]
        swaps = len(self.entries) - 1 - i
        sign = -1 if swaps % 2 else 1
        return sign, MilnorSymbol(rest + [T_SLOT])


def residue_symbol(sym: MilnorSymbol) -> MilnorSymbol:
    """{x_1, ..., x_q, T} -> {x_1, ..., x_q}; a sign is absorbed into x_1.

    Raises:
        OutOfModelError: Unless the symbol is decomposable with T-free x_i
    """
    sign, normal = sym.normalize_T_last()
    entries = list(normal.entries[:-1])
    if not entries:
        raise OutOfModelError("the residue of {T} alone is not modelled")
    if sign < 0:
        entries[0] = entries[0].inv()
    return MilnorSymbol(entries)


def residue_diagram_sides(
    ctx: CyclotomicContext,
    eta: KElement,
    a: KElement,
    b: KElement,
    t_first: bool = False,
    window: int = DEFAULT_WINDOW,
) -> Tuple[SymbolValue, SymbolValue]:
    """Both routes around the residue square for a dlog b ^ dT/T.

    Form route: residue_form, then exp_eta over K and the pairing.
    Symbol route: exp_eta over K{{T}} to {exp(eta a), b, T}, then
    residue_symbol and the pairing. With ``t_first`` the input is
    a dT/T ^ dlog b and the symbol is {exp(eta a), T, b}.
    """
    coeff = LaurentElement.constant(a, window)
    if t_first:
        omega = HLForm.wedge(coeff, T_SLOT, b)
        sym = MilnorSymbol([exp1(eta, a), T_SLOT, b])
    else:
        omega = HLForm.wedge(coeff, b, T_SLOT)
        sym = MilnorSymbol([exp1(eta, a), b, T_SLOT])
    residue = residue_form(omega)
    assert isinstance(residue, FormExpression)
    form_route = exp2_eval(ctx, eta, residue)
    reduced = residue_symbol(sym)
    alpha, beta = reduced.entries
    symbol_route = hilbert_symbol(ctx, alpha, beta)
    return form_route, symbol_route


def residue_diagram_check(
    ctx: CyclotomicContext,
    eta: KElement,
    a: KElement,
    b: KElement,
    t_first: bool = False,
) -> bool:
    form_route, symbol_route = residue_diagram_sides(ctx, eta, a, b, t_first)
    return form_route == symbol_route
