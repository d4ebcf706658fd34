"""Embedded subfields k of K, relative coordinates and relative traces."""

from functools import cached_property
from typing import List, Optional

from rlab.core.exceptions import FieldDescriptionError, PrecisionError
from rlab.core.field import FieldTower, KElement
from rlab.core.linalg import column_matrix, solve
from rlab.core.padic import PadicScalar


class SubfieldEmbedding:
    """An embedding k -> K given by the images of k's generators pi_k and u_k.

    Args:
        sub: The subfield k
        tower: The field K
        pi_image: Image of pi_k in K
        u_image: Image of u_k in K (defaults to 0 when k has f = 1)

    Raises:
        FieldDescriptionError: If the images do not satisfy k's defining
            polynomials or the degrees are incompatible
    """

    def __init__(
        self,
        sub: FieldTower,
        tower: FieldTower,
        pi_image: KElement,
        u_image: Optional[KElement] = None,
    ):
        if sub.p != tower.p:
            raise FieldDescriptionError(
                f"subfield prime {sub.p} differs from field prime {tower.p}"
            )
        if tower.e % sub.e or tower.f % sub.f:
            raise FieldDescriptionError(
                f"subfield with e = {sub.e}, f = {sub.f} cannot embed into a field "
                f"with e = {tower.e}, f = {tower.f}"
            )
        if u_image is None:
            if sub.f > 1:
                raise FieldDescriptionError("u_image is required when the subfield has f > 1")
            u_image = KElement.from_int(tower, -sub.desc.unram_poly[0], tower.exact_prec)
        self.sub = sub
        self.tower = tower
        self.pi_image = pi_image
        self.u_image = u_image
        self._validate()

    @classmethod
    def identity(cls, tower: FieldTower) -> "SubfieldEmbedding":
        return cls(tower, tower, tower.pi, tower.u)

    def _embed_k0(self, coords) -> KElement:
        acc = KElement.zero(self.tower, self.tower.exact_prec)
        power = self.tower.one
        for c in coords:
            if c:
                acc = acc + power.scale_int(c)
            power = power * self.u_image
        return acc

    def _validate(self) -> None:
        residual = KElement.zero(self.tower, self.tower.exact_prec)
        power = self.tower.one
        for c in self.sub.desc.unram_poly:
            residual = residual + power.scale_int(c)
            power = power * self.u_image
        if not residual.is_zero():
            raise FieldDescriptionError("u_image does not satisfy the subfield unram_poly")
        residual = KElement.zero(self.tower, self.tower.exact_prec)
        power = self.tower.one
        for coords in self.sub.desc.eisenstein:
            residual = residual + self._embed_k0(coords) * power
            power = power * self.pi_image
        if not residual.is_zero():
            raise FieldDescriptionError(
                "pi_image does not satisfy the subfield Eisenstein polynomial"
            )
        if self.pi_image.pi_valuation() != self.tower.e // self.sub.e:
            raise FieldDescriptionError(
                f"pi_image has pi-valuation {self.pi_image.pi_valuation()}, "
                f"expected {self.tower.e // self.sub.e}"
            )

    @property
    def relative_degree(self) -> int:
        return self.tower.degree // self.sub.degree

    @cached_property
    def _basis_images(self) -> List[KElement]:
        out = []
        pi_power = self.tower.one
        for _ in range(self.sub.e):
            u_power = self.tower.one
            for _ in range(self.sub.f):
                out.append(u_power * pi_power)
                u_power = u_power * self.u_image
            pi_power = pi_power * self.pi_image
        return out

    @cached_property
    def relative_basis(self) -> List[KElement]:
        """{pi_K^a u_K^b : a < e/e', b < f/f'} as a basis of K over k."""
        out = []
        tower = self.tower
        for a in range(tower.e // self.sub.e):
            for b in range(tower.f // self.sub.f):
                out.append(tower.pi_power(a) * tower.u**b)
        return out

    @cached_property
    def coordinate_matrix(self) -> List[List[PadicScalar]]:
        columns = []
        for beta in self.relative_basis:
            for gamma in self._basis_images:
                columns.append(gamma * beta)
        return column_matrix(columns)

    def embed(self, y: KElement) -> KElement:
        """Image in K of an element of k."""
        if not y.tower.same_field(self.sub):
            raise ValueError("element does not belong to the subfield")
        acc = KElement.zero(self.tower, self.tower.exact_prec)
        for c, image in zip(y.coeffs, self._basis_images):
            if c:
                acc = acc + image.scale_int(c)
        return acc.scale_p(y.shift).with_precision(y.prec)


def relative_coordinates(x: KElement, emb: SubfieldEmbedding) -> List[KElement]:
    """Coordinates of x on the relative basis, as elements of k.

    Raises:
        PrecisionError: If the linear system is singular at working precision
    """
    if not x.tower.same_field(emb.tower):
        raise ValueError("element does not belong to the embedding's field")
    solution = solve(emb.coordinate_matrix, x.scalars())
    d_sub = emb.sub.degree
    out = []
    for t in range(emb.relative_degree):
        chunk = solution[t * d_sub:(t + 1) * d_sub]
        if all(s.is_zero() for s in chunk):
            prec = min(s.abs_prec for s in chunk)
            out.append(KElement.zero(emb.sub, prec))
        else:
            out.append(KElement.from_scalars(emb.sub, chunk))
    return out


def relative_trace(x: KElement, emb: SubfieldEmbedding) -> KElement:
    """Tr_{K/k}(x) as an element of k."""
    total: Optional[KElement] = None
    for t, beta in enumerate(emb.relative_basis):
        coord = relative_coordinates(x * beta, emb)[t]
        total = coord if total is None else total + coord
    if total is None:
        raise PrecisionError("empty relative basis")
    return total


def in_subfield(x: KElement, emb: SubfieldEmbedding) -> Optional[KElement]:
    """The preimage of x in k, or None when x does not lie in k."""
    coords = relative_coordinates(x, emb)
    if all(c.is_zero() for c in coords[1:]):
        return coords[0]
    return None
