"""Theorem-verification harness.

Every check is a pure function of a 64-bit instance seed.  It builds its
instance with the seeded generators and asserts one family of identities
exactly; a failing identity raises :class:`Counterexample` carrying the
witness so it can be written out and replayed.
"""

from __future__ import annotations

import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import generators as gen
from . import matrix as mx
from . import operator as op
from . import scalar as sc
from .matrix import BicomplexMatrix, ComplexMatrix

SUITES = ("scalar", "nilpotent", "idempotent", "operator")


class Counterexample(AssertionError):
    def __init__(self, identity: str, detail: str = "", witness: Optional[BicomplexMatrix] = None,
                 certificate: Optional[dict] = None):
        super().__init__(f"{identity}: {detail}" if detail else identity)
        self.identity = identity
        self.detail = detail
        self.witness = witness
        self.certificate = certificate or {}


def expect(condition: bool, identity: str, detail: str = "", *,
           witness: Optional[BicomplexMatrix] = None, certificate: Optional[dict] = None) -> None:
    if not condition:
        raise Counterexample(identity, detail, witness, certificate)


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    statement: str
    run: Callable[[int], None]
    # run only for instance 0 (fixed regressions)
    once: bool = False


@dataclass
class Failure:
    check: str
    instance: int
    seed: int
    identity: str
    detail: str
    witness: Optional[BicomplexMatrix] = None
    certificate: dict = field(default_factory=dict)


@dataclass
class CheckResult:
    check: str
    suite: str
    instances: int
    failures: list[Failure]

    @property
    def passed(self) -> bool:
        return not self.failures


# -- instance helpers -------------------------------------------------------------

MAX_N = 6


def _rng(seed: int) -> gen.SplitMix64:
    return gen.SplitMix64(seed)


def random_scalar(rng: gen.SplitMix64, bound: int = 10) -> sc.BicomplexScalar:
    q = [gen._bounded_rational(rng, bound) for _ in range(4)]
    return sc.from_real_quad(*q)


def nilpotent_pair(seed: int, n: Optional[int] = None) -> tuple[BicomplexMatrix, int, int]:
    """Composite ``e1*M1 + e2*M2`` with certified component indices."""
    rng = _rng(seed)
    n = n or rng.randint(1, MAX_N)
    k1, k2 = rng.randint(1, n), rng.randint(1, n)
    m1 = gen.gen_nilpotent(gen.GenSpec(rng.next_u64(), n, gen.Nilpotent(k1))).matrix
    m2 = gen.gen_nilpotent(gen.GenSpec(rng.next_u64(), n, gen.Nilpotent(k2))).matrix
    return mx.compose(m1, m2), k1, k2


def idempotent_pair(seed: int) -> tuple[BicomplexMatrix, BicomplexMatrix]:
    rng = _rng(seed)
    n = rng.randint(1, MAX_N)

    def one() -> BicomplexMatrix:
        comps = [gen.gen_idempotent(gen.GenSpec(rng.next_u64(), n, gen.Idempotent(rng.randint(0, n)))).matrix
                 for _ in range(2)]
        return mx.compose(*comps)

    return one(), one()


def orthogonal_idempotent_pair(seed: int) -> tuple[BicomplexMatrix, BicomplexMatrix]:
    """Idempotents A, B with ``AB = BA = 0``, built on complementary ranges per component."""
    rng = _rng(seed)
    n = rng.randint(1, MAX_N)
    comps = []
    for _ in range(2):
        r = rng.randint(0, n)
        s = rng.randint(0, n - r)
        comps.append(gen.gen_orthogonal_idempotents(rng.next_u64(), n, r, s))
    (a1, b1), (a2, b2) = comps
    return mx.compose(a1, a2), mx.compose(b1, b2)


def arbitrary_operator(seed: int, n: Optional[int] = None, max_n: int = 5) -> op.BicomplexOperator:
    rng = _rng(seed)
    n = n or rng.randint(1, max_n)
    t1 = gen.gen_arbitrary(gen.GenSpec(rng.next_u64(), n, gen.Arbitrary(), entry_bound=3)).matrix
    t2 = gen.gen_arbitrary(gen.GenSpec(rng.next_u64(), n, gen.Arbitrary(), entry_bound=3)).matrix
    return op.BicomplexOperator(n, t1, t2)


def random_basis(seed: int, n: int) -> op.Basis:
    q = gen.gen_invertible(gen.GenSpec(seed, n, gen.Invertible())).matrix
    return op.Basis.from_matrix(q)


# -- worked example ------------------------------------------------------

def example_t1() -> ComplexMatrix:
    """``T1(z1, z2, z3) = (z3 + z2, z3, 0)`` in the standard basis."""
    return ComplexMatrix.from_rows([[0, 1, 1], [0, 0, 1], [0, 0, 0]])


def example_t2() -> ComplexMatrix:
    """``T2(w1, w2, w3) = (w1, 0, w3)``."""
    return mx.diag([1, 0, 1])


def example_operator() -> op.BicomplexOperator:
    return op.BicomplexOperator(3, example_t1(), example_t2())


# -- scalar checks ------------------------------------------------------------------

def check_scalar_identities(seed: int) -> None:
    expect(sc.add(sc.E1, sc.E2) == sc.ONE, "e1 + e2 = 1")
    expect(sc.mul(sc.E1, sc.E2) == sc.ZERO, "e1 e2 = 0")
    expect(sc.mul(sc.E2, sc.E1) == sc.ZERO, "e2 e1 = 0")
    for k in range(1, 11):
        expect(sc.pow(sc.E1, k) == sc.E1, "e1^k = e1", f"k={k}")
        expect(sc.pow(sc.E2, k) == sc.E2, "e2^k = e2", f"k={k}")
    expect(sc.mul(sc.I1, sc.I1) == -sc.ONE, "i1^2 = -1")
    expect(sc.mul(sc.I2, sc.I2) == -sc.ONE, "i2^2 = -1")
    expect(sc.from_real_quad(Fraction(1, 2), 0, 0, Fraction(1, 2)) == sc.E1, "e1 = (1 + i1 i2)/2")
    expect(sc.from_real_quad(Fraction(1, 2), 0, 0, Fraction(-1, 2)) == sc.E2, "e2 = (1 - i1 i2)/2")


def check_scalar_round_trip(seed: int) -> None:
    rng = _rng(seed)
    quad = [gen._bounded_rational(rng, 50) for _ in range(4)]
    x = sc.from_real_quad(*quad)
    z1, z2 = sc.to_cartesian_pair(x)
    expect(sc.from_cartesian_pair(z1, z2) == x, "from_cartesian(to_cartesian(x)) = x", str(quad))
    expect(list(sc.to_real_quad(x)) == quad, "to_real_quad(from_real_quad(u)) = u", str(quad))


def check_scalar_ring_laws(seed: int) -> None:
    rng = _rng(seed)
    a, b, c = random_scalar(rng), random_scalar(rng), random_scalar(rng)
    expect(a + b == b + a, "a + b = b + a")
    expect(a * b == b * a, "a b = b a")
    expect((a + b) + c == a + (b + c), "(a + b) + c = a + (b + c)")
    expect((a * b) * c == a * (b * c), "(a b) c = a (b c)")
    expect(a * (b + c) == a * b + a * c, "a (b + c) = a b + a c")
    expect(a * sc.ONE == a and a + sc.ZERO == a, "identities")


def check_scalar_inverse(seed: int) -> None:
    rng = _rng(seed)
    x = random_scalar(rng)
    cls = sc.classify(x)
    if cls is sc.ScalarClass.INVERTIBLE:
        expect(x * sc.inverse(x) == sc.ONE, "x inverse(x) = 1", str(x))
    # zero divisors: a with minus = 0 times b with plus = 0 vanishes
    a = sc.BicomplexScalar(sc.ZERO_C, x.plus or sc.ONE_C)
    b = sc.BicomplexScalar(x.minus or sc.ONE_C, sc.ZERO_C)
    expect(sc.classify(a) is sc.ScalarClass.ZERO_DIVISOR, "classify(minus=0) = zero divisor")
    expect(sc.classify(a * b) is sc.ScalarClass.ZERO, "zero divisor product = 0")


# -- nilpotent checks -----------------------------------------------------------------

def check_example_regression(seed: int) -> None:
    t1, t2 = example_t1(), example_t2()
    expect(mx.nilpotency_index(t1) == 3, "T1 has index 3")
    expect(not mx.matrix_power(t1, 2).is_zero(), "T1^2 != 0")
    expect(mx.matrix_power(t1, 3).is_zero(), "T1^3 = 0")
    expect(t2 @ t2 == t2, "T2^2 = T2")
    expect(mx.nilpotency_index(t2) is None, "T2 is not nilpotent")
    t = example_operator()
    report = op.is_nilpotent_operator(t)
    expect(not report.is_nilpotent, "T = e1 T1 + e2 T2 is not nilpotent")
    sing = op.is_singular_operator(t)
    expect(sing.minus_singular and sing.plus_singular, "T1 and T2 are singular")


def check_index_theorem(seed: int) -> None:
    a, k1, k2 = nilpotent_pair(seed)
    cert = {"index": max(k1, k2), "component_indices": [k1, k2]}
    report = mx.nilpotency(a)
    expect(report.is_nilpotent, "components nilpotent => composite nilpotent",
           witness=a, certificate=cert)
    expect(report.component_indices == (k1, k2), "component indices match certificate",
           f"got {report.component_indices}, expected {(k1, k2)}", witness=a, certificate=cert)
    k = max(k1, k2)
    expect(report.index == k, "index = max(k1, k2)", f"got {report.index}, expected {k}",
           witness=a, certificate=cert)
    expect(mx.power(a, k).is_zero(), "A^index = 0", witness=a, certificate=cert)
    if k > 1:
        expect(not mx.power(a, k - 1).is_zero(), "A^(index-1) != 0", witness=a, certificate=cert)
    expect(k in report.component_indices, "some component attains the composite index",
           witness=a, certificate=cert)


def check_nilpotent_singular(seed: int) -> None:
    a, k1, k2 = nilpotent_pair(seed)
    sing = mx.is_singular(a)
    expect(sing.det_minus.is_zero() and sing.det_plus.is_zero(),
           "nilpotent => det(A-) = det(A+) = 0", witness=a,
           certificate={"index": max(k1, k2), "component_indices": [k1, k2]})


def check_singular_attribution(seed: int) -> None:
    """One invertible component, one nilpotent (hence singular) component."""
    rng = _rng(seed)
    n = rng.randint(1, MAX_N)
    inv = gen.gen_invertible(gen.GenSpec(rng.next_u64(), n, gen.Invertible())).matrix
    nil = gen.gen_nilpotent(gen.GenSpec(rng.next_u64(), n, gen.Nilpotent(rng.randint(1, n)))).matrix
    singular_side = "plus" if rng.below(2) else "minus"
    a = mx.compose(inv, nil) if singular_side == "plus" else mx.compose(nil, inv)
    sing = mx.is_singular(a)
    expect(sing.singular, "one singular component => singular", witness=a)
    expect(sing.components == (singular_side,), "singular component attributed correctly",
           f"got {sing.components}, expected ({singular_side!r},)", witness=a)


# -- operator checks ------------------------------------------------------------------

def check_power_decomposition(seed: int) -> None:
    rng = _rng(seed)
    t = arbitrary_operator(rng.next_u64())
    k = rng.randint(0, 8)
    pk = op.power(t, k)
    iterated = op.identity_operator(t.dim)
    for _ in range(k):
        iterated = op.compose(iterated, t)
    expect(pk == iterated, "T^k = k-fold composition", f"k={k}", witness=t.as_matrix())
    componentwise = mx.compose(mx.matrix_power(t.t1, k), mx.matrix_power(t.t2, k))
    expect(pk.as_matrix() == componentwise, "T^k = e1 T1^k + e2 T2^k", f"k={k}", witness=t.as_matrix())


def check_apply_compose(seed: int) -> None:
    rng = _rng(seed)
    s = arbitrary_operator(rng.next_u64(), max_n=4)
    t = arbitrary_operator(rng.next_u64(), n=s.dim)
    v = op.BicomplexVector(tuple(random_scalar(rng, 5) for _ in range(s.dim)))
    lhs = op.apply(op.compose(s, t), v)
    rhs = op.apply(s, op.apply(t, v))
    expect(lhs == rhs, "(S o T)(v) = S(T(v))")
    tv = op.apply(t, v)
    expect(tv.minus == mx_vec(t.t1, v.minus) and tv.plus == mx_vec(t.t2, v.plus),
           "T(v) = e1 T1 v- + e2 T2 v+")


def mx_vec(m: ComplexMatrix, v) -> tuple:
    return (m @ ComplexMatrix(len(v), 1, tuple(v))).entries


def check_basis_invariance(seed: int) -> None:
    rng = _rng(seed)
    if rng.below(2):
        a, _, _ = nilpotent_pair(rng.next_u64())
    else:
        a, _ = idempotent_pair(rng.next_u64())
    t = op.BicomplexOperator.from_matrix(a)
    basis = random_basis(rng.next_u64(), t.dim)
    b = op.matrix_in_basis(t, basis)
    expect(mx.is_idempotent(b) == mx.is_idempotent(a), "idempotency is basis independent", witness=a)
    expect(mx.nilpotency(b) == mx.nilpotency(a), "nilpotency and index are basis independent", witness=a)
    sa, sb = mx.is_singular(a), mx.is_singular(b)
    expect((sa.minus_singular, sa.plus_singular) == (sb.minus_singular, sb.plus_singular),
           "singularity is basis independent", witness=a)


# -- idempotent checks ----------------------------------------------------------------

def check_idempotent_battery(seed: int) -> None:
    a, b = idempotent_pair(seed)
    expect(mx.is_idempotent(a), "A^2 = A", witness=a)
    expect(mx.power(a, 2) == a, "is_idempotent(A) <=> A^2 = A", witness=a)
    expect(mx.is_idempotent(mx.complement(a)), "I - A idempotent", witness=a)
    expect(mx.is_idempotent(mx.section_e1(a)), "e1 A idempotent", witness=a)
    expect(mx.is_idempotent(mx.section_e2(a)), "e2 A idempotent", witness=a)
    expect(mx.is_idempotent(mx.mix(a, b)), "e1 A + e2 B idempotent", witness=a)
    expect(mx.is_idempotent(mx.complement_section_e1(a)), "e1 (I - A) idempotent", witness=a)
    expect(mx.is_idempotent(mx.complement_section_e2(a)), "e2 (I - A) idempotent", witness=a)
    expect(mx.section_e1(a) + mx.section_e2(a) == a, "e1 A + e2 A = A", witness=a)
    expect(mx.mul(mx.section_e1(a), mx.section_e2(b)).is_zero(), "(e1 A)(e2 B) = 0", witness=a)


def check_orthogonal_sum(seed: int) -> None:
    a, b = orthogonal_idempotent_pair(seed)
    expect(mx.mul(a, b).is_zero() and mx.mul(b, a).is_zero(), "AB = BA = 0", witness=a)
    expect(mx.is_idempotent(a + b), "A, B idempotent with AB = BA = 0 => A + B idempotent",
           witness=a + b)


def check_idempotent_criterion(seed: int) -> None:
    rng = _rng(seed)
    n = rng.randint(1, MAX_N)
    comps = []
    for _ in range(2):
        if rng.below(2):
            comps.append(gen.gen_idempotent(gen.GenSpec(rng.next_u64(), n, gen.Idempotent(rng.randint(0, n)))).matrix)
        else:
            comps.append(gen.gen_arbitrary(gen.GenSpec(rng.next_u64(), n, gen.Arbitrary(), entry_bound=2)).matrix)
    a = mx.compose(*comps)
    components = mx.is_idempotent_component(a.minus) and mx.is_idempotent_component(a.plus)
    expect(mx.is_idempotent(a) == components, "A idempotent <=> A- and A+ idempotent", witness=a)
    expect(mx.is_idempotent(a) == (mx.power(a, 2) == a), "is_idempotent(A) <=> A^2 = A", witness=a)
    t = op.BicomplexOperator.from_matrix(a)
    expect(op.is_idempotent_operator(t) == (op.compose(t, t) == t), "T idempotent <=> T o T = T", witness=a)


def check_product_property(seed: int) -> None:
    """S o T idempotent iff S1 T1 and S2 T2 idempotent (literal componentwise form)."""
    s, t = idempotent_pair(seed)
    st = mx.mul(s, t)
    expect(mx.is_idempotent(st) == (mx.is_idempotent_component(s.minus @ t.minus)
                                    and mx.is_idempotent_component(s.plus @ t.plus)),
           "S T idempotent <=> S1 T1, S2 T2 idempotent", witness=st)


CHECKS: tuple[Check, ...] = (
    Check("scalar.identities", "scalar", "e1 + e2 = 1, e1 e2 = 0, e_i^k = e_i", check_scalar_identities, once=True),
    Check("scalar.round_trip", "scalar", "cartesian <-> idempotent round trip", check_scalar_round_trip),
    Check("scalar.ring_laws", "scalar", "commutative ring laws", check_scalar_ring_laws),
    Check("scalar.inverse", "scalar", "inverses and zero divisors", check_scalar_inverse),
    Check("nilpotent.example", "nilpotent", "worked example: components singular, T not nilpotent",
          check_example_regression, once=True),
    Check("nilpotent.index", "nilpotent", "index(e1 T1 + e2 T2) = max(k1, k2)", check_index_theorem),
    Check("nilpotent.singular", "nilpotent", "nilpotent => both components singular", check_nilpotent_singular),
    Check("operator.singular_attribution", "operator", "singular iff some component singular",
          check_singular_attribution),
    Check("operator.power", "operator", "T^n = e1 T1^n + e2 T2^n", check_power_decomposition),
    Check("operator.apply", "operator", "application and composition act componentwise", check_apply_compose),
    Check("operator.basis", "operator", "[T]_B = e1 [T1]_B + e2 [T2]_B preserves predicates",
          check_basis_invariance),
    Check("idempotent.battery", "idempotent", "I-A, e1 A, e2 A, e1 A + e2 B, e_i (I-A) idempotent",
          check_idempotent_battery),
    Check("idempotent.orthogonal_sum", "idempotent", "AB = BA = 0 => A + B idempotent", check_orthogonal_sum),
    Check("idempotent.criterion", "idempotent", "A idempotent <=> components idempotent",
          check_idempotent_criterion),
    Check("idempotent.product", "idempotent", "S T idempotent <=> S1 T1, S2 T2 idempotent",
          check_product_property),
)


def select(suite: str) -> list[Check]:
    if suite == "all":
        return list(CHECKS)
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    return [c for c in CHECKS if c.suite == suite]


def instance_seed(seed: int, check_name: str, index: int) -> int:
    return gen.derive_seed(seed ^ zlib.crc32(check_name.encode()), index)


def _run_one(args: tuple[str, int, int]) -> Optional[Failure]:
    name, seed, index = args
    check = next(c for c in CHECKS if c.name == name)
    s = instance_seed(seed, name, index)
    try:
        check.run(s)
    except Counterexample as exc:
        return Failure(name, index, s, exc.identity, exc.detail, exc.witness, exc.certificate)
    return None


def run_checks(checks: Iterable[Check], instances: int, seed: int, jobs: int = 1) -> list[CheckResult]:
    """Run each check over ``instances`` seeded instances; output order is seed-stable."""
    results = []
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for check in checks:
            count = 1 if check.once else instances
            tasks = [(check.name, seed, i) for i in range(count)]
            outcomes = pool.map(_run_one, tasks) if pool else map(_run_one, tasks)
            failures = [f for f in outcomes if f is not None]
            results.append(CheckResult(check.name, check.suite, count, failures))
    finally:
        if pool:
            pool.shutdown()
    return results


# -- instance files -------------------------------------------------------------------

def check_instance(a: BicomplexMatrix, certificate: Optional[dict] = None) -> list[str]:
    """Re-verify a stored instance; returns the failing identities (empty on success).

    Structural identities are always checked on square input; a certificate
    adds the claims it makes (``index``/``component_indices`` for nilpotent
    instances, ``rank`` for idempotent ones, ``det`` for invertible ones).
    """
    certificate = certificate or {}
    failures = []

    def claim(ok: bool, identity: str) -> None:
        if not ok:
            failures.append(identity)

    if not a.is_square:
        return failures
    claim(mx.power(a, 2) == mx.mul(a, a), "A^2 = A A")
    claim(mx.is_idempotent(a) == (mx.power(a, 2) == a), "is_idempotent(A) <=> A^2 = A")
    report = mx.nilpotency(a)
    sing = mx.is_singular(a)
    if report.is_nilpotent:
        claim(sing.minus_singular and sing.plus_singular, "nilpotent => det(A-) = det(A+) = 0")
    if "component_indices" in certificate:
        k1, k2 = certificate["component_indices"]
        claim(report.component_indices == (k1, k2),
              f"component indices = ({k1}, {k2}) [got {report.component_indices}]")
    if "index" in certificate:
        k = certificate["index"]
        claim(mx.power(a, k).is_zero(), f"A^{k} = 0 (certified index {k})")
        if k > 1:
            claim(not mx.power(a, k - 1).is_zero(), f"A^{k - 1} != 0 (certified index {k})")
        claim(report.index == k, f"index(A) = {k} [got {report.index}]")
    if "rank" in certificate:
        r1, r2 = certificate["rank"]
        claim(mx.is_idempotent(a), "A^2 = A (certified idempotent)")
        claim(a.minus.trace() == sc.RationalComplex(Fraction(r1)), f"trace(A-) = rank = {r1}")
        claim(a.plus.trace() == sc.RationalComplex(Fraction(r2)), f"trace(A+) = rank = {r2}")
    if "det" in certificate:
        dm, dp = (sc.parse_complex(d) for d in certificate["det"])
        claim(sing.det_minus == dm, f"det(A-) = {certificate['det'][0]}")
        claim(sing.det_plus == dp, f"det(A+) = {certificate['det'][1]}")
    return failures
