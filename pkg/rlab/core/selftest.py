"""Seeded property suites over a configured field.

Every suite derives its seed from the run seed and its own name, and every
property derives its own generator from the suite seed, so suites and
properties can run in any order (or alone) and still draw the same samples.
A failing property stops at its first counterexample and records it.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional

from rlab.core.analytic import pexp, plog
from rlab.core.config import FieldConfig
from rlab.core.exceptions import ConvergenceError, LaurentWindowError, PrecisionError, RlabError
from rlab.core.exp_map import (
    FormExpression,
    d,
    diagram_contexts,
    dlog,
    exp2_eval,
    kernel_check,
    leibniz_redecomposition,
    norm_diagram_check,
    random_form_expression,
    rewrite_to_zeta,
    trace_form,
)
from rlab.core.field import (
    FieldTower,
    KElement,
    from_pi_digits,
    norm_abs,
    pi_digits,
    random_element,
    trace_abs,
)
from rlab.core.higher_local import LaurentElement, laurent_mul, residue_diagram_check
from rlab.core.norm_oracle import SUPPORTED_PRIMES, NormOracle
from rlab.core.polynomial import KPolynomial
from rlab.core.reciprocity import (
    CyclotomicContext,
    artin_hasse,
    hilbert_symbol,
    iwasawa_prime,
    sen_symbol,
)
from rlab.core.result_types import PropertyOutcome, SuiteResult
from rlab.core.subfield import SubfieldEmbedding
from rlab.core.units import is_pth_power, pth_power_test, teichmuller
from rlab.core.utils import default_eta, derive_seed, sen_domain_bound
from rlab.utils.serialization import format_element

Sample = Dict[str, Any]
SuiteFn = Callable[["SuiteContext"], List[PropertyOutcome]]

SUITES: Dict[str, SuiteFn] = {}


def suite(name: str) -> Callable[[SuiteFn], SuiteFn]:
    def register(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn

    return register


@dataclass
class SuiteContext:
    """What a suite sees: the field, its seed and the sample count."""

    config: FieldConfig
    seed: int
    samples: int

    @property
    def tower(self) -> FieldTower:
        return self.config.tower

    @cached_property
    def ctx(self) -> CyclotomicContext:
        return CyclotomicContext.create(self.tower)

    @property
    def has_zeta(self) -> bool:
        return self.tower.desc.n >= 1

    def rng(self, prop: str) -> random.Random:
        return random.Random(derive_seed(self.seed, prop))


def describe(value: Any) -> Any:
    """JSON-friendly rendering of a sample value."""
    if isinstance(value, KElement):
        return format_element(value)
    if isinstance(value, FormExpression):
        return {
            "db": value.db,
            "terms": [[format_element(a), format_element(b)] for a, b in value.terms],
        }
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return repr(value)


def check_property(
    name: str,
    samples: int,
    draw: Callable[[int], Sample],
    predicate: Callable[..., bool],
) -> PropertyOutcome:
    """Run predicate(**draw(i)) for i < samples, stopping at the first failure.

    Domain errors count as failures and are echoed with the sample;
    precision exhaustion propagates.
    """
    outcome = PropertyOutcome(name)
    for index in range(samples):
        sample = draw(index)
        error: Optional[str] = None
        try:
            ok = predicate(**sample)
        except PrecisionError:
            raise
        except RlabError as e:
            ok = False
            error = f"{type(e).__name__}: {e}"
        outcome.checked += 1
        if not ok:
            outcome.passed = False
            counterexample: Dict[str, Any] = {"index": index}
            counterexample.update({k: describe(v) for k, v in sample.items()})
            if error:
                counterexample["error"] = error
            outcome.counterexample = counterexample
            break
    return outcome


def skipped(names: List[str], reason: str) -> List[PropertyOutcome]:
    return [PropertyOutcome(name, skipped=reason) for name in names]


def _exp_domain(tower: FieldTower) -> Fraction:
    # smallest pi-adic valuation strictly above 1/(p-1)
    return Fraction(tower.e // (tower.p - 1) + 1, tower.e)


def _small(tower: FieldTower, rng: random.Random) -> KElement:
    """Random element with ord > 1/(p-1)."""
    t = tower.e // (tower.p - 1) + 1
    return random_element(tower, "integral", rng).mul_pi_power(t)


def _sen_alpha(tower: FieldTower, rng: random.Random) -> KElement:
    return random_element(tower, "principal", rng, sen_domain_bound(tower))


# -- arith ---------------------------------------------------------------


@suite("arith")
def arith_suite(sc: SuiteContext) -> List[PropertyOutcome]:
    tower = sc.tower
    n = sc.samples

    def triple(prop: str) -> Callable[[int], Sample]:
        rng = sc.rng(prop)
        return lambda i: {
            "x": random_element(tower, "integral", rng),
            "y": random_element(tower, "integral", rng),
            "z": random_element(tower, "integral", rng),
        }

    def nonzero_pair(prop: str) -> Callable[[int], Sample]:
        rng = sc.rng(prop)
        return lambda i: {
            "x": random_element(tower, "nonzero", rng),
            "y": random_element(tower, "nonzero", rng),
        }

    def unit(prop: str) -> Callable[[int], Sample]:
        rng = sc.rng(prop)
        return lambda i: {"u": random_element(tower, "unit", rng)}

    def pth_power_agreement(u: KElement) -> bool:
        found, witness = pth_power_test(u)
        if found != is_pth_power(u):
            return False
        if found and witness is not None and witness ** tower.p != u:
            return False
        return is_pth_power(u**tower.p)

    def teichmuller_root(u: KElement) -> bool:
        t = teichmuller(u)
        return t ** (tower.q - 1) == 1 and t.residue_digit() == u.residue_digit()

    def digits_roundtrip(x: KElement, y: KElement, z: KElement) -> bool:
        m = 2 * tower.e
        back = from_pi_digits(tower, pi_digits(x, m))
        diff = x - back
        return diff.is_zero() or diff.pi_valuation() >= m

    return [
        check_property(
            "mul_associative", n, triple("mul_associative"),
            lambda x, y, z: (x * y) * z == x * (y * z),
        ),
        check_property(
            "distributive", n, triple("distributive"),
            lambda x, y, z: x * (y + z) == x * y + x * z,
        ),
        check_property(
            "inverse", n, nonzero_pair("inverse"),
            lambda x, y: x * x.inv() == 1 and (x / y) * y == x,
        ),
        check_property(
            "trace_additive", n, triple("trace_additive"),
            lambda x, y, z: trace_abs(x + y) == trace_abs(x) + trace_abs(y),
        ),
        check_property(
            "norm_multiplicative", n, nonzero_pair("norm_multiplicative"),
            lambda x, y: norm_abs(x * y) == norm_abs(x) * norm_abs(y),
        ),
        check_property("pi_digits_roundtrip", n, triple("pi_digits_roundtrip"), digits_roundtrip),
        check_property("pth_power_agreement", n, unit("pth_power_agreement"), pth_power_agreement),
        check_property("teichmuller", n, unit("teichmuller"), teichmuller_root),
    ]


# -- analytic ------------------------------------------------------------


@suite("analytic")
def analytic_suite(sc: SuiteContext) -> List[PropertyOutcome]:
    tower = sc.tower
    n = sc.samples
    bound = _exp_domain(tower)

    def principal_pair(prop: str) -> Callable[[int], Sample]:
        rng = sc.rng(prop)
        return lambda i: {
            "x": random_element(tower, "principal", rng, bound),
            "y": random_element(tower, "principal", rng, bound),
        }

    def small_pair(prop: str) -> Callable[[int], Sample]:
        rng = sc.rng(prop)
        return lambda i: {"a": _small(tower, rng), "b": _small(tower, rng)}

    def boundary_rejected(w: KElement) -> bool:
        x = w.mul_pi_power(tower.e // (tower.p - 1))
        try:
            pexp(x)
        except ConvergenceError:
            return True
        return False

    outcomes = [
        check_property(
            "log_homomorphism", n, principal_pair("log_homomorphism"),
            lambda x, y: plog(x * y) == plog(x) + plog(y),
        ),
        check_property(
            "exp_log_inverse", n, principal_pair("exp_log_inverse"),
            lambda x, y: pexp(plog(x)) == x,
        ),
        check_property(
            "log_exp_inverse", n, small_pair("log_exp_inverse"),
            lambda a, b: plog(pexp(a)) == a,
        ),
        check_property(
            "exp_homomorphism", n, small_pair("exp_homomorphism"),
            lambda a, b: pexp(a + b) == pexp(a) * pexp(b),
        ),
        check_property(
            "tail_certified", n, small_pair("tail_certified"),
            lambda a, b: pexp(a, extra_terms=10) == pexp(a)
            and plog(1 + b, extra_terms=10) == plog(1 + b),
        ),
    ]
    if tower.e % (tower.p - 1) == 0:
        rng = sc.rng("exp_boundary_rejected")
        outcomes.append(
            check_property(
                "exp_boundary_rejected", n,
                lambda i: {"w": random_element(tower, "unit", rng)},
                boundary_rejected,
            )
        )
    else:
        outcomes += skipped(
            ["exp_boundary_rejected"], "no element has ord exactly 1/(p-1)"
        )
    return outcomes


# -- bilinearity ---------------------------------------------------------

BILINEARITY = [
    "multiplicative_first",
    "multiplicative_second",
    "inverse_first",
    "inverse_second",
]


@suite("bilinearity")
def bilinearity_suite(sc: SuiteContext) -> List[PropertyOutcome]:
    if not sc.has_zeta:
        return skipped(BILINEARITY, "field has n = 0")
    tower, ctx, n = sc.tower, sc.ctx, sc.samples

    def draw(prop: str) -> Callable[[int], Sample]:
        rng = sc.rng(prop)
        return lambda i: {
            "a1": _sen_alpha(tower, rng),
            "a2": _sen_alpha(tower, rng),
            "b1": random_element(tower, "nonzero", rng),
            "b2": random_element(tower, "nonzero", rng),
        }

    def h(alpha: KElement, beta: KElement):
        return hilbert_symbol(ctx, alpha, beta)

    return [
        check_property(
            "multiplicative_first", n, draw("multiplicative_first"),
            lambda a1, a2, b1, b2: h(a1 * a2, b1) == h(a1, b1) + h(a2, b1),
        ),
        check_property(
            "multiplicative_second", n, draw("multiplicative_second"),
            lambda a1, a2, b1, b2: h(a1, b1 * b2) == h(a1, b1) + h(a1, b2),
        ),
        check_property(
            "inverse_first", n, draw("inverse_first"),
            lambda a1, a2, b1, b2: h(a1.inv(), b1) == -h(a1, b1),
        ),
        check_property(
            "inverse_second", n, draw("inverse_second"),
            lambda a1, a2, b1, b2: h(a1, b1.inv()) == -h(a1, b1),
        ),
    ]


# -- lifts ---------------------------------------------------------------

LIFTS = ["lift_independence", "prime_independence", "zeta_specialization", "pi_specialization"]


@suite("lifts")
def lifts_suite(sc: SuiteContext) -> List[PropertyOutcome]:
    if not sc.has_zeta:
        return skipped(LIFTS, "field has n = 0")
    tower, ctx, n = sc.tower, sc.ctx, sc.samples
    eisenstein = KPolynomial.eisenstein(tower)
    alt = CyclotomicContext.create(tower, pi=tower.pi * (tower.one + tower.pi))

    def draw(prop: str) -> Callable[[int], Sample]:
        rng = sc.rng(prop)
        return lambda i: {
            "alpha": _sen_alpha(tower, rng),
            "beta": random_element(tower, "unit", rng),
            "r": [
                tower.k0_element([rng.randrange(tower.p**4) for _ in range(tower.f)])
                for _ in range(tower.e)
            ],
        }

    def lift_independence(alpha: KElement, beta: KElement, r: List[KElement]) -> bool:
        g = ctx.lift(beta)
        perturbed = g + eisenstein * KPolynomial(tower, r)
        return sen_symbol(ctx, alpha, beta, perturbed) == sen_symbol(ctx, alpha, beta, g)

    def prime_independence(alpha: KElement, beta: KElement, r: List[KElement]) -> bool:
        nonunit = beta * tower.pi
        return hilbert_symbol(alt, alpha, nonunit) == hilbert_symbol(ctx, alpha, nonunit)

    return [
        check_property("lift_independence", n, draw("lift_independence"), lift_independence),
        check_property("prime_independence", n, draw("prime_independence"), prime_independence),
        check_property(
            "zeta_specialization", n, draw("zeta_specialization"),
            lambda alpha, beta, r: sen_symbol(ctx, alpha, ctx.zeta, ctx.h)
            == artin_hasse(ctx, alpha),
        ),
        check_property(
            "pi_specialization", n, draw("pi_specialization"),
            lambda alpha, beta, r: hilbert_symbol(ctx, alpha, alt.pi)
            == iwasawa_prime(alt, alpha),
        ),
    ]


# -- kernel --------------------------------------------------------------


@suite("kernel")
def kernel_suite(sc: SuiteContext) -> List[PropertyOutcome]:
    if not sc.has_zeta:
        return skipped(["kernel_vanishes"], "field has n = 0")
    rng = sc.rng("kernel_vanishes")
    tower = sc.tower
    return [
        check_property(
            "kernel_vanishes", sc.samples,
            lambda i: {"a": random_element(tower, "unit", rng)},
            lambda a: kernel_check(sc.ctx, a).is_trivial(),
        )
    ]


# -- norm-diagram --------------------------------------------------------


@suite("norm-diagram")
def norm_diagram_suite(sc: SuiteContext) -> List[PropertyOutcome]:
    names = ["norm_trace_square", "trace_form_square"]
    if not sc.has_zeta:
        return skipped(names, "field has n = 0")
    emb = sc.config.embedding or SubfieldEmbedding.identity(sc.tower)
    sub, tower = emb.sub, emb.tower
    eta = default_eta(sub)
    ctx_k, ctx_big = diagram_contexts(emb)

    def draw(prop: str) -> Callable[[int], Sample]:
        rng = sc.rng(prop)
        return lambda i: {
            "a": random_element(tower, "integral", rng),
            "b": random_element(sub, "unit", rng),
        }

    def trace_form_square(a: KElement, b: KElement) -> bool:
        expr = FormExpression(((a, emb.embed(b)),))
        top = exp2_eval(ctx_big, emb.embed(eta), expr)
        bottom = exp2_eval(ctx_k, eta, trace_form(expr, emb))
        return top == bottom

    return [
        check_property(
            "norm_trace_square", sc.samples, draw("norm_trace_square"),
            lambda a, b: norm_diagram_check(emb, eta, a, b),
        ),
        check_property("trace_form_square", sc.samples, draw("trace_form_square"), trace_form_square),
    ]


# -- residue-diagram -----------------------------------------------------


@suite("residue-diagram")
def residue_diagram_suite(sc: SuiteContext) -> List[PropertyOutcome]:
    tower = sc.tower
    window_rng = sc.rng("laurent_window")
    window = 8

    def laurent_window(i: int, j: int) -> bool:
        x = LaurentElement.monomial(tower.one, i, window)
        y = LaurentElement.monomial(tower.one, j, window)
        try:
            product = laurent_mul(x, y)
        except LaurentWindowError:
            return abs(i + j) > window
        return abs(i + j) <= window and product == LaurentElement.monomial(
            tower.one, i + j, window
        )

    outcomes = [
        check_property(
            "laurent_window", sc.samples,
            lambda k: {
                "i": window_rng.randint(-window, window),
                "j": window_rng.randint(-window, window),
            },
            laurent_window,
        )
    ]
    if not sc.has_zeta:
        return outcomes + skipped(["residue_square"], "field has n = 0")
    rng = sc.rng("residue_square")
    eta = default_eta(tower)
    outcomes.append(
        check_property(
            "residue_square", sc.samples,
            lambda i: {
                "a": random_element(tower, "integral", rng),
                "b": random_element(tower, "unit", rng),
                "t_first": i % 2 == 1,
            },
            lambda a, b, t_first: residue_diagram_check(sc.ctx, eta, a, b, t_first),
        )
    )
    return outcomes


# -- oracle-concordance --------------------------------------------------


@suite("oracle-concordance")
def oracle_suite(sc: SuiteContext) -> List[PropertyOutcome]:
    names = ["symbol_matches_norm", "norm_rank"]
    tower = sc.tower
    if tower.p not in SUPPORTED_PRIMES or tower.desc.n != 1:
        return skipped(names, f"oracle covers p in {SUPPORTED_PRIMES} with n = 1")
    oracle = NormOracle(tower)
    zeta = sc.ctx.zeta
    fixed = [zeta, zeta * zeta, -zeta]

    def draw(prop: str) -> Callable[[int], Sample]:
        rng = sc.rng(prop)
        return lambda i: {
            "alpha": _sen_alpha(tower, rng),
            "beta": fixed[i] if i < len(fixed) else random_element(tower, "unit", rng),
        }

    def norm_rank(alpha: KElement, beta: KElement) -> bool:
        group = oracle.subgroup(beta)
        return group.full or group.rank == oracle.space.dim - 1

    return [
        check_property(
            "symbol_matches_norm", sc.samples, draw("symbol_matches_norm"),
            lambda alpha, beta: hilbert_symbol(sc.ctx, alpha, beta).is_trivial()
            == oracle.is_norm(alpha, beta),
        ),
        check_property("norm_rank", sc.samples, draw("norm_rank"), norm_rank),
    ]


# -- forms ---------------------------------------------------------------


@suite("forms")
def forms_suite(sc: SuiteContext) -> List[PropertyOutcome]:
    tower, n = sc.tower, sc.samples

    def pair(prop: str, kind: str) -> Callable[[int], Sample]:
        rng = sc.rng(prop)
        return lambda i: {
            "x": random_element(tower, kind, rng),
            "y": random_element(tower, kind, rng),
        }

    outcomes = [
        check_property(
            "d_leibniz", n, pair("d_leibniz", "integral"),
            lambda x, y: d(x * y) == d(x).scale(y) + d(y).scale(x),
        ),
        check_property(
            "dlog_additive", n, pair("dlog_additive", "unit"),
            lambda x, y: dlog(x * y) == dlog(x) + dlog(y),
        ),
    ]

    def expression(prop: str) -> Callable[[int], Sample]:
        rng = sc.rng(prop)
        return lambda i: {
            "expr": random_form_expression(tower, rng, size=2, db=i % 2 == 1),
            "seed": rng.randrange(2**32),
        }

    outcomes.append(
        check_property(
            "form_class_invariance", n, expression("form_class_invariance"),
            lambda expr, seed: leibniz_redecomposition(
                expr, random.Random(seed)
            ).to_form() == expr.to_form(),
        )
    )
    if not sc.has_zeta:
        return outcomes + skipped(
            ["leibniz_invariance", "rewrite_to_zeta"], "field has n = 0"
        )
    eta = default_eta(tower)
    outcomes.append(
        check_property(
            "leibniz_invariance", n, expression("leibniz_invariance"),
            lambda expr, seed: exp2_eval(sc.ctx, eta, expr)
            == exp2_eval(sc.ctx, eta, leibniz_redecomposition(expr, random.Random(seed))),
        )
    )
    if sc.ctx.zeta == tower.pi + 1:

        def rewrite(expr: FormExpression, seed: int) -> bool:
            a = rewrite_to_zeta(sc.ctx, expr)
            if dlog(sc.ctx.zeta).scale(a) != expr.to_form():
                return False
            rewritten = FormExpression(((a, sc.ctx.zeta),))
            return exp2_eval(sc.ctx, eta, rewritten) == exp2_eval(sc.ctx, eta, expr)

        outcomes.append(
            check_property("rewrite_to_zeta", n, expression("rewrite_to_zeta"), rewrite)
        )
    else:
        outcomes += skipped(["rewrite_to_zeta"], "field is not presented with pi = zeta - 1")
    return outcomes


# -- runner --------------------------------------------------------------


def suite_names(name: str) -> List[str]:
    """Expand 'all' into every suite name, in registration order."""
    if name == "all":
        return list(SUITES)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return [name]


def run_suite(config: FieldConfig, name: str, seed: int, samples: int) -> SuiteResult:
    suite_seed = derive_seed(seed, name)
    properties = SUITES[name](SuiteContext(config, suite_seed, samples))
    failed = [prop.name for prop in properties if not prop.passed]
    checked = sum(1 for prop in properties if not prop.skipped)
    if failed:
        message = f"{name}: {len(failed)} of {checked} properties failed"
    else:
        message = f"{name}: {checked} properties passed"
    return SuiteResult(
        success=not failed,
        message=message,
        suite=name,
        seed=suite_seed,
        samples=samples,
        properties=properties,
    )


def run_selftest(config: FieldConfig, name: str, seed: int, samples: int) -> List[SuiteResult]:
    return [run_suite(config, suite_name, seed, samples) for suite_name in suite_names(name)]
