"""Linear algebra over Z_p and over F_p."""

from typing import TYPE_CHECKING, List, Optional, Sequence

from sympy import GF
from sympy.polys.matrices import DomainMatrix

from rlab.core.exceptions import PrecisionError
from rlab.core.padic import PadicScalar

if TYPE_CHECKING:
    from rlab.core.field import KElement


def column_matrix(columns: Sequence["KElement"]) -> List[List[PadicScalar]]:
    """Matrix whose j-th column holds the coordinates of ``columns[j]``."""
    coords = [c.scalars() for c in columns]
    return [[coords[j][i] for j in range(len(columns))] for i in range(len(coords[0]))]


def solve(matrix: List[List[PadicScalar]], rhs: List[PadicScalar]) -> List[PadicScalar]:
    """Solve ``matrix @ x = rhs`` by Gaussian elimination.

    The pivot in each column is the entry of smallest valuation, which keeps
    the precision lost to divisions as small as possible.

    Raises:
        PrecisionError: If a column has no pivot distinguishable from 0
    """
    n = len(matrix)
    rows = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot: Optional[int] = None
        for r in range(col, n):
            entry = rows[r][col]
            if entry.is_zero():
                continue
            if pivot is None or entry.valuation < rows[pivot][col].valuation:
                pivot = r
        if pivot is None:
            raise PrecisionError(f"singular system: no pivot in column {col}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        head = rows[col][col]
        for r in range(col + 1, n):
            entry = rows[r][col]
            if entry.is_zero():
                continue
            factor = entry / head
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    solution: List[PadicScalar] = [rows[0][n]] * n
    for col in range(n - 1, -1, -1):
        acc = rows[col][n]
        for k in range(col + 1, n):
            acc = acc - rows[col][k] * solution[k]
        solution[col] = acc / rows[col][col]
    return solution


class FpRowSpace:
    """Incrementally built row space over F_p, kept in reduced echelon form."""

    def __init__(self, p: int, dim: int):
        self.p = p
        self.dim = dim
        self.domain = GF(p, symmetric=False)
        self._rows: List[List[int]] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _matrix(self, rows: Sequence[Sequence[int]]) -> DomainMatrix:
        field = self.domain
        entries = [[field(x % self.p) for x in row] for row in rows]
        return DomainMatrix(entries, (len(entries), self.dim), field)

    def add(self, vector: Sequence[int]) -> bool:
        """Insert a vector; returns True if it increased the rank."""
        reduced, pivots = self._matrix(self._rows + [list(vector)]).rref()
        if len(pivots) == self.rank:
            return False
        rows = reduced.to_list()[: len(pivots)]
        self._rows = [[int(x) % self.p for x in row] for row in rows]
        return True

    def contains(self, vector: Sequence[int]) -> bool:
        return self._matrix(self._rows + [list(vector)]).rank() == self.rank

    def basis(self) -> List[List[int]]:
        return [list(row) for row in self._rows]


def fp_rank(vectors: Sequence[Sequence[int]], p: int) -> int:
    if not vectors:
        return 0
    space = FpRowSpace(p, len(vectors[0]))
    return space._matrix(vectors).rank()
