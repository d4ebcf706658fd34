"""Norm-group oracle for the triviality of level-one Hilbert symbols.

(alpha, beta) = 1 exactly when alpha is a norm from L = K(beta^(1/p)).
The oracle decides this without any reciprocity formula: it computes the
class of alpha in V = K*/(K*)^p by exhaustive search over an explicit
basis, and the norm subgroup N(L*)(K*)^p / (K*)^p as the F_p-span of
the classes of sampled norms, which local class field theory says has
index p.
"""

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from rlab.core.exceptions import (
    DomainError,
    OracleError,
    UnsupportedParametersError,
)
from rlab.core.field import FieldTower, KElement, digit_element, pi_digits, random_element
from rlab.core.linalg import FpRowSpace
from rlab.core.units import is_pth_power

SUPPORTED_PRIMES = (3, 5)
NORM_SAMPLE_BUDGET = 200

LElement = Tuple[KElement, ...]


@dataclass(frozen=True, eq=False)
class KummerExtension:
    """L = K(gamma) with gamma^p = beta; elements are coefficient p-vectors."""

    base: FieldTower
    beta: KElement
    degenerate: bool

    @property
    def p(self) -> int:
        return self.base.p

    def element(self, coeffs: Sequence[KElement]) -> LElement:
        zero = KElement.zero(self.base, self.base.exact_prec)
        padded = list(coeffs) + [zero] * (self.p - len(coeffs))
        return tuple(padded[: self.p])

    @property
    def gamma(self) -> LElement:
        return self.element([KElement.zero(self.base, self.base.exact_prec), self.base.one])

    def multiply(self, x: LElement, y: LElement) -> LElement:
        p = self.p
        out: List[Optional[KElement]] = [None] * p
        for i, a in enumerate(x):
            if a.is_zero():
                continue
            for j, b in enumerate(y):
                if b.is_zero():
                    continue
                term = a * b
                k = i + j
                if k >= p:
                    term = term * self.beta
                    k -= p
                out[k] = term if out[k] is None else out[k] + term
        zero = KElement.zero(self.base, self.base.exact_prec)
        return tuple(zero if c is None else c for c in out)

    def multiplication_matrix(self, x: LElement) -> List[List[KElement]]:
        """Column j holds x * gamma^j on the basis 1, gamma, ..., gamma^(p-1)."""
        p = self.p
        rows: List[List[KElement]] = [[x[0]] * p for _ in range(p)]
        for k in range(p):
            for j in range(p):
                i = k - j
                rows[k][j] = x[i] if i >= 0 else x[i + p] * self.beta
        return rows


def build_extension(tower: FieldTower, beta: KElement) -> KummerExtension:
    """The Kummer extension K(beta^(1/p)); degenerate when beta is a p-th power."""
    if beta.is_zero():
        raise DomainError("beta is indistinguishable from 0")
    return KummerExtension(tower, beta, is_pth_power(beta))


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def norm_L_to_K(ext: KummerExtension, x: LElement) -> KElement:
    """Determinant of multiplication by x, by permutation expansion over K."""
    matrix = ext.multiplication_matrix(x)
    p = ext.p
    total: Optional[KElement] = None
    for perm in permutations(range(p)):
        term: Optional[KElement] = None
        for row, col in enumerate(perm):
            entry = matrix[row][col]
            if entry.is_zero():
                term = None
                break
            term = entry if term is None else term * entry
        if term is None:
            continue
        if _permutation_sign(perm) < 0:
            term = -term
        total = term if total is None else total + term
    if total is None:
        raise DomainError("norm of an element indistinguishable from 0")
    return total


class ClassSpace:
    """An explicit basis of V = K*/(K*)^p with exhaustive coordinates.

    Generators: pi, then 1 + u^j pi^i for 1 <= i < c with p not dividing i,
    then 1 + r pi^c for the first digit r making it a non-p-th power.
    """

    def __init__(self, tower: FieldTower):
        if tower.desc.n < 1:
            raise UnsupportedParametersError("the class space needs zeta_p in K")
        self.tower = tower
        self.p = tower.p
        self.level = tower.pth_power_level
        # units only matter modulo pi^(c+1); coarse pi-division costs one p-digit each
        self.prec = self.level + 4
        self.generators = self._ladder()
        self.dim = len(self.generators)
        expected = tower.degree + 2
        if self.dim != expected:
            raise OracleError(
                f"generator ladder has {self.dim} elements, expected {expected}"
            )
        self._check_independence()

    def truncate(self, x: KElement) -> KElement:
        return x.with_precision(min(x.prec, self.prec))

    def _ladder(self) -> List[KElement]:
        tower = self.tower
        gens = [self.truncate(tower.pi)]
        u_power = tower.one
        u_powers = []
        for _ in range(tower.f):
            u_powers.append(u_power)
            u_power = u_power * tower.u
        for i in range(1, self.level):
            if i % self.p == 0:
                continue
            for u_j in u_powers:
                gens.append(self.truncate(tower.one + u_j * tower.pi_power(i)))
        top = tower.pi_power(self.level)
        for digit in tower.digits:
            if not any(digit):
                continue
            candidate = self.truncate(tower.one + digit_element(tower, digit) * top)
            if not is_pth_power(candidate):
                gens.append(candidate)
                break
        return gens

    @cached_property
    def _unit_products(self) -> Dict[Tuple[int, ...], KElement]:
        """T[v] = prod g_i^(v_i) over the unit generators, raised to q - 1."""
        q = self.tower.q
        units = self.generators[1:]
        table: Dict[Tuple[int, ...], KElement] = {}
        for v in itertools.product(range(self.p), repeat=len(units)):
            # build from the vector with the last nonzero entry decremented
            last = max((i for i, x in enumerate(v) if x), default=None)
            if last is None:
                table[v] = self.truncate(self.tower.one)
                continue
            prev = list(v)
            prev[last] -= 1
            table[v] = table[tuple(prev)] * units[last]
        return {v: x ** (q - 1) for v, x in table.items()}

    def _check_independence(self) -> None:
        # a nonzero pi-exponent below p already rules out a p-th power
        level = self.level + 1
        residues = self.tower.pth_power_residues
        for v, tv in self._unit_products.items():
            if any(v) and pi_digits(tv, level) in residues:
                raise OracleError(f"generator classes are dependent: {[0] + list(v)}")

    def coordinates(self, x: KElement) -> Tuple[int, ...]:
        """Exponent vector of the class of x modulo p-th powers."""
        if x.is_zero():
            raise DomainError("class of an element indistinguishable from 0")
        m, w = x.unit_part()
        first = m % self.p
        target = self.truncate(w) ** (self.tower.q - 1)
        level = self.level + 1
        residues = self.tower.pth_power_residues
        for v in self._unit_products:
            minus = tuple((-k) % self.p for k in v)
            candidate = target * self._unit_products[minus]
            if pi_digits(candidate, level) in residues:
                return (first,) + v
        raise OracleError(f"no class coordinates found for {x!r}")


def class_coordinates(space: ClassSpace, u: KElement) -> Tuple[int, ...]:
    return space.coordinates(u)


@dataclass
class NormSubgroup:
    """F_p-span of the classes of sampled norms."""

    space: FpRowSpace
    samples: int = 0
    full: bool = False

    @property
    def rank(self) -> int:
        return self.space.dim if self.full else self.space.rank

    def contains(self, coords: Sequence[int]) -> bool:
        return self.full or self.space.contains(coords)


def _norm_samples(ext: KummerExtension, seed: int):
    tower = ext.base
    zero = KElement.zero(tower, tower.exact_prec)
    one = tower.one
    gamma = ext.gamma
    yield gamma
    yield ext.element([-one, one])
    power = gamma
    for _ in range(1, ext.p):
        yield tuple(c + one if i == 0 else c for i, c in enumerate(power))
        power = ext.multiply(power, gamma)
    yield ext.element([tower.pi, one])
    for digit in tower.digits:
        if any(digit):
            yield ext.element([digit_element(tower, digit), one])
    for k in range(1, tower.pth_power_level + 1):
        yield ext.element([one, tower.pi_power(k)])
        yield ext.element([one, zero, tower.pi_power(k)])
    rng = random.Random(seed)
    while True:
        yield ext.element(
            [random_element(tower, "integral", rng) for _ in range(ext.p)]
        )


def norm_subgroup(
    space: ClassSpace,
    ext: KummerExtension,
    budget: int = NORM_SAMPLE_BUDGET,
    seed: int = 0,
) -> NormSubgroup:
    """Span of the classes of norms from L, of rank dim - 1.

    Raises:
        OracleError: If the sampled norms reach the full space or the
            budget runs out below rank dim - 1
    """
    group = NormSubgroup(FpRowSpace(space.p, space.dim))
    if ext.degenerate:
        group.full = True
        return group
    target = space.dim - 1
    for x in _norm_samples(ext, seed):
        if group.samples >= budget:
            break
        group.samples += 1
        if all(c.is_zero() for c in x):
            continue
        norm = norm_L_to_K(ext, x)
        if norm.is_zero():
            continue
        group.space.add(class_coordinates(space, norm))
        if group.space.rank > target:
            raise OracleError(
                f"norm classes span all of V (rank {group.space.rank}); "
                "the index of the norm group must be p"
            )
        if group.space.rank == target:
            return group
    raise OracleError(
        f"norm subgroup reached rank {group.space.rank} < {target} after "
        f"{group.samples} samples"
    )


@dataclass
class OracleVerdict:
    """Outcome of a norm query, serialized for reports."""

    alpha: str
    beta: str
    is_norm: bool
    rank: int
    details: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "is_norm": self.is_norm,
            "rank": self.rank,
        }


def check_parameters(p: int, n: int) -> None:
    """Reject parameters the oracle does not cover."""
    if p not in SUPPORTED_PRIMES or n != 1:
        raise UnsupportedParametersError(
            f"norm oracle supports p in {SUPPORTED_PRIMES} with n = 1, got p = {p}, n = {n}"
        )


class NormOracle:
    """Caches the class space of a field and the norm subgroup of each beta."""

    def __init__(self, tower: FieldTower, budget: int = NORM_SAMPLE_BUDGET):
        check_parameters(tower.p, tower.desc.n)
        self.tower = tower
        self.budget = budget
        self._space: Optional[ClassSpace] = None
        self._subgroups: Dict[Tuple[Any, ...], NormSubgroup] = {}

    @property
    def space(self) -> ClassSpace:
        if self._space is None:
            self._space = ClassSpace(self.tower)
        return self._space

    def subgroup(self, beta: KElement) -> NormSubgroup:
        key = beta.key()
        if key not in self._subgroups:
            ext = build_extension(self.tower, beta)
            self._subgroups[key] = norm_subgroup(self.space, ext, self.budget)
        return self._subgroups[key]

    def is_norm(self, alpha: KElement, beta: KElement) -> bool:
        if alpha.is_zero():
            raise DomainError("alpha is indistinguishable from 0")
        return self.subgroup(beta).contains(class_coordinates(self.space, alpha))

    def verdict(self, alpha: KElement, beta: KElement, labels: Tuple[str, str]) -> OracleVerdict:
        result = self.is_norm(alpha, beta)
        return OracleVerdict(labels[0], labels[1], result, self.subgroup(beta).rank)


def is_norm(tower: FieldTower, alpha: KElement, beta: KElement) -> bool:
    """Whether alpha is a norm from K(beta^(1/p)); p in {3, 5}, n = 1 only."""
    return NormOracle(tower).is_norm(alpha, beta)
