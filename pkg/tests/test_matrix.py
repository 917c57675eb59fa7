from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicomplex import generators as gen
from bicomplex import matrix as mx
from bicomplex import scalar as sc
from bicomplex.matrix import BicomplexMatrix, ComplexMatrix

from oracles import cofactor_det, naive_matmul, quad_matmul

N3 = ComplexMatrix.from_rows([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
D = mx.diag([1, 0, 1])

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
cplx = st.builds(sc.RationalComplex, small, small)


def square(n):
    return st.lists(cplx, min_size=n * n, max_size=n * n).map(
        lambda e: ComplexMatrix(n, n, tuple(e)))


any_square = st.integers(1, 4).flatmap(square)
pair_of_squares = st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n)))


def arbitrary(seed, n, bound=5):
    return gen.gen_arbitrary(gen.GenSpec(seed, n, gen.Arbitrary(), entry_bound=bound)).matrix


def bicomplex_arbitrary(seed, n):
    return mx.compose(arbitrary(seed, n), arbitrary(seed + 1, n))


# -- construction ---------------------------------------------------------------

def test_complex_matrix_shape_checks():
    with pytest.raises(mx.ShapeMismatch):
        ComplexMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(mx.ShapeMismatch):
        ComplexMatrix(0, 1, ())
    with pytest.raises(mx.ShapeMismatch):
        ComplexMatrix(2, 2, (sc.ZERO_C,) * 3)


def test_compose_examples():
    eye = mx.bicomplex_identity(2)
    assert mx.compose(mx.identity(2), mx.identity(2)) == eye
    a = mx.compose(mx.diag([1, 0]), mx.diag([0, 1]))
    assert a.entry(0, 0) == sc.E1
    assert a.entry(1, 1) == sc.E2
    assert a.entry(0, 1) == sc.ZERO
    assert mx.decompose(a) == (mx.diag([1, 0]), mx.diag([0, 1]))
    with pytest.raises(mx.ShapeMismatch):
        mx.compose(mx.identity(2), mx.identity(3))


def test_compose_from_cartesian_grid():
    z1 = ComplexMatrix.from_rows([[1, 0], [0, 2]])
    z2 = ComplexMatrix.from_rows([[0, 1], [sc.I_C, 0]])
    a = mx.from_cartesian(z1, z2)
    for i in range(2):
        for j in range(2):
            assert a.entry(i, j) == sc.from_cartesian_pair(z1[i, j], z2[i, j])
    assert mx.from_scalars(a.entries()) == a


# -- add / mul / scalar_mul -------------------------------------------------------

def test_add_examples():
    a = bicomplex_arbitrary(1, 3)
    assert a + mx.bicomplex_zeros(3) == a
    x, y = arbitrary(5, 3), arbitrary(6, 3)
    assert mx.compose(x, mx.zeros(3)) + mx.compose(mx.zeros(3), y) == mx.compose(x, y)
    with pytest.raises(mx.ShapeMismatch):
        mx.add(a, mx.bicomplex_zeros(2))


def test_add_matches_entrywise_scalar_add():
    a, b = bicomplex_arbitrary(11, 3), bicomplex_arbitrary(13, 3)
    s = mx.add(a, b)
    for i in range(3):
        for j in range(3):
            assert s.entry(i, j) == sc.add(a.entry(i, j), b.entry(i, j))


def test_mul_examples():
    a = bicomplex_arbitrary(2, 3)
    assert a @ mx.bicomplex_identity(3) == a
    x, y, z = arbitrary(1, 2), arbitrary(2, 2), arbitrary(3, 2)
    assert mx.compose(x, y) @ mx.compose(mx.zeros(2), z) == mx.compose(mx.zeros(2), y @ z)
    with pytest.raises(mx.ShapeMismatch):
        mx.mul(mx.bicomplex_zeros(2, 3), mx.bicomplex_zeros(2, 3))


def _quads(a: BicomplexMatrix):
    return [[sc.to_real_quad(x) for x in row] for row in a.entries()]


@pytest.mark.parametrize("seed", range(5))
def test_mul_matches_cartesian_brute_force(seed):
    a, b = bicomplex_arbitrary(seed, 2), bicomplex_arbitrary(seed + 100, 2)
    assert _quads(mx.mul(a, b)) == quad_matmul(_quads(a), _quads(b))


def test_mul_rectangular_matches_cartesian_brute_force():
    a = mx.compose(ComplexMatrix.from_rows([[1, 2, 3], [0, sc.I_C, -1]]),
                   ComplexMatrix.from_rows([[0, 1, "1/2"], [2, 0, 1]]))
    b = mx.compose(ComplexMatrix.from_rows([[1], [2], [3]]),
                   ComplexMatrix.from_rows([[sc.I_C], [0], [5]]))
    assert mx.mul(a, b).shape == (2, 1)
    assert _quads(mx.mul(a, b)) == quad_matmul(_quads(a), _quads(b))


@given(pair_of_squares)
@settings(max_examples=40)
def test_integer_kernel_matmul_matches_naive(pair):
    a, b = pair
    assert (a @ b).to_rows() == naive_matmul(a.to_rows(), b.to_rows())


def test_scalar_mul_examples():
    a = bicomplex_arbitrary(3, 3)
    x, y = a.minus, a.plus
    assert mx.scalar_mul(sc.ONE, a) == a
    assert mx.scalar_mul(sc.E1, a) == mx.compose(x, mx.zeros(3))
    assert mx.scalar_mul(sc.E2, a) == mx.compose(mx.zeros(3), y)


def test_scalar_mul_matches_entrywise_scalar_mul():
    a = bicomplex_arbitrary(4, 2)
    s = sc.from_real_quad(1, -2, Fraction(1, 3), 5)
    b = mx.scalar_mul(s, a)
    for i in range(2):
        for j in range(2):
            assert b.entry(i, j) == sc.mul(s, a.entry(i, j))


# -- power ----------------------------------------------------------------------

def test_power_examples():
    eye = mx.bicomplex_identity(3)
    assert mx.power(eye, 9) == eye
    assert mx.power(mx.compose(N3, D), 3) == mx.compose(mx.zeros(3), D)
    a = bicomplex_arbitrary(7, 4)
    assert mx.power(a, 2) == mx.mul(a, a)
    assert mx.power(a, 0) == mx.bicomplex_identity(4)
    with pytest.raises(mx.NotSquare):
        mx.power(mx.bicomplex_zeros(2, 3), 2)


@pytest.mark.parametrize("k", range(0, 9))
def test_power_equals_iterated_mul(k):
    a = bicomplex_arbitrary(21, 3)
    acc = mx.bicomplex_identity(3)
    for _ in range(k):
        acc = mx.mul(acc, a)
    assert mx.power(a, k) == acc
    assert mx.power(a, k) == mx.compose(mx.matrix_power(a.minus, k), mx.matrix_power(a.plus, k))


# -- determinant ------------------------------------------------------------------

def test_determinant_examples():
    assert mx.determinant(mx.identity(3)) == sc.ONE_C
    assert mx.determinant(D) == sc.ZERO_C
    assert mx.determinant(ComplexMatrix.from_rows([[1, 2], [3, 4]])) == sc.RationalComplex(-2)
    assert cofactor_det([[sc.RationalComplex(1), sc.RationalComplex(2)],
                         [sc.RationalComplex(3), sc.RationalComplex(4)]]) == sc.RationalComplex(-2)
    with pytest.raises(mx.NotSquare):
        mx.determinant(ComplexMatrix.from_rows([[1, 2]]))


def test_determinant_needs_row_swap():
    m = ComplexMatrix.from_rows([[0, 1, 2], [0, 3, 4], [5, 6, 7]])
    assert mx.determinant(m) == cofactor_det(m.to_rows())


@given(any_square)
@settings(max_examples=80)
def test_determinant_matches_cofactor_expansion(m):
    assert mx.determinant(m) == cofactor_det(m.to_rows())


@given(pair_of_squares)
@settings(max_examples=40)
def test_determinant_is_multiplicative(pair):
    a, b = pair
    assert mx.determinant(a @ b) == mx.determinant(a) * mx.determinant(b)


@given(any_square)
@settings(max_examples=40)
def test_inverse(m):
    if mx.determinant(m).is_zero():
        with pytest.raises(mx.SingularMatrix):
            mx.inverse(m)
    else:
        assert m @ mx.inverse(m) == mx.identity(m.rows)


# -- predicates -------------------------------------------------------------------

def test_is_singular_examples():
    assert not mx.is_singular(mx.bicomplex_identity(3))
    rep = mx.is_singular(mx.compose(N3, D))
    assert rep.singular and rep.minus_singular and rep.plus_singular
    rep = mx.is_singular(mx.compose(mx.identity(2), mx.diag([1, 0])))
    assert rep.singular and rep.components == ("plus",)
    assert rep.det_minus == sc.ONE_C and rep.det_plus == sc.ZERO_C


def test_is_idempotent_examples():
    assert mx.is_idempotent(mx.bicomplex_identity(3))
    assert mx.is_idempotent(mx.compose(D, D))
    assert not mx.is_idempotent(mx.compose(N3, N3))
    with pytest.raises(mx.NotSquare):
        mx.is_idempotent(mx.bicomplex_zeros(1, 2))


@pytest.mark.parametrize("seed", range(10))
def test_idempotent_criterion(seed):
    rng = gen.SplitMix64(seed)
    n = rng.randint(1, 5)
    parts = []
    for _ in range(2):
        if rng.below(2):
            parts.append(gen.gen_idempotent(gen.GenSpec(rng.next_u64(), n, gen.Idempotent(rng.randint(0, n)))).matrix)
        else:
            parts.append(arbitrary(rng.next_u64(), n, bound=2))
    a = mx.compose(*parts)
    expected = all(p @ p == p for p in parts)
    assert mx.is_idempotent(a) == expected == (mx.power(a, 2) == a)


def test_nilpotency_examples():
    for n in (1, 3, 5):
        rep = mx.nilpotency(mx.bicomplex_zeros(n))
        assert rep.is_nilpotent and rep.index == 1
    rep = mx.nilpotency(mx.compose(N3, N3))
    assert rep == mx.NilpotencyReport(True, 3, (3, 3))
    rep = mx.nilpotency(mx.compose(N3, D))
    assert not rep.is_nilpotent and rep.index is None
    assert rep.component_indices == (3, None)


@pytest.mark.parametrize("k1,k2", [(1, 4), (4, 1), (2, 3), (3, 3), (4, 4)])
def test_nilpotency_index_is_max(k1, k2):
    m1 = gen.gen_nilpotent(gen.GenSpec(k1 * 10 + k2, 4, gen.Nilpotent(k1))).matrix
    m2 = gen.gen_nilpotent(gen.GenSpec(k2 * 10 + k1, 4, gen.Nilpotent(k2))).matrix
    a = mx.compose(m1, m2)
    rep = mx.nilpotency(a)
    k = max(k1, k2)
    assert rep == mx.NilpotencyReport(True, k, (k1, k2))
    assert mx.power(a, k).is_zero()
    if k > 1:
        assert not mx.power(a, k - 1).is_zero()
    sing = mx.is_singular(a)
    assert sing.minus_singular and sing.plus_singular


def test_singular_but_not_nilpotent_witness():
    a = mx.compose(N3, D)
    assert mx.is_singular(a).components == ("minus", "plus")
    assert not mx.nilpotency(a).is_nilpotent


# -- section constructions ----------------------------------------------------------

def idempotent(seed, n, r1, r2):
    return mx.compose(gen.gen_idempotent(gen.GenSpec(seed, n, gen.Idempotent(r1))).matrix,
                      gen.gen_idempotent(gen.GenSpec(seed + 1, n, gen.Idempotent(r2))).matrix)


def test_sections():
    eye = mx.bicomplex_identity(3)
    assert mx.section_e1(eye) == mx.compose(mx.identity(3), mx.zeros(3))
    assert mx.section_e2(eye) == mx.compose(mx.zeros(3), mx.identity(3))
    a = bicomplex_arbitrary(9, 3)
    assert mx.section_e1(a) == mx.scalar_mul(sc.E1, a) == mx.compose(a.minus, mx.zeros(3))
    assert mx.section_e2(a) == mx.scalar_mul(sc.E2, a)
    assert mx.section_e1(a) + mx.section_e2(a) == a
    b = bicomplex_arbitrary(19, 3)
    assert mx.mul(mx.section_e1(a), mx.section_e2(b)).is_zero()


def test_sections_preserve_idempotency():
    a = idempotent(3, 4, 2, 3)
    assert mx.is_idempotent(a)
    assert mx.is_idempotent(mx.section_e1(a))
    assert mx.is_idempotent(mx.section_e2(a))


def test_mix():
    a = bicomplex_arbitrary(1, 3)
    assert mx.mix(a, a) == a
    b = bicomplex_arbitrary(2, 3)
    assert mx.mix(a, b) == mx.compose(a.minus, b.plus)
    assert mx.mix(a, b) == mx.scalar_mul(sc.E1, a) + mx.scalar_mul(sc.E2, b)
    assert mx.is_idempotent(mx.mix(idempotent(1, 4, 1, 2), idempotent(5, 4, 3, 0)))
    with pytest.raises(mx.ShapeMismatch):
        mx.mix(a, mx.bicomplex_zeros(2))


def test_complement():
    eye = mx.bicomplex_identity(3)
    assert mx.complement(eye).is_zero()
    a = bicomplex_arbitrary(4, 3)
    assert mx.complement(mx.complement(a)) == a
    assert mx.is_idempotent(mx.complement(idempotent(8, 5, 2, 4)))
    with pytest.raises(mx.NotSquare):
        mx.complement(mx.bicomplex_zeros(2, 1))


def test_complement_sections():
    eye = mx.bicomplex_identity(2)
    assert mx.complement_section_e1(eye) == mx.bicomplex_zeros(2)
    p = mx.diag([1, 0])
    assert mx.complement_section_e2(mx.compose(p, p)) == mx.compose(mx.zeros(2), mx.diag([0, 1]))
    a = idempotent(12, 5, 3, 1)
    assert mx.is_idempotent(mx.complement_section_e1(a))
    assert mx.is_idempotent(mx.complement_section_e2(a))
    with pytest.raises(mx.NotIdempotent):
        mx.complement_section_e1(mx.compose(N3, N3))
    with pytest.raises(mx.NotIdempotent):
        mx.complement_section_e2(mx.compose(N3, D))


def test_orthogonal_idempotents_sum():
    a1, b1 = gen.gen_orthogonal_idempotents(1, 5, 2, 2)
    a2, b2 = gen.gen_orthogonal_idempotents(2, 5, 1, 3)
    a, b = mx.compose(a1, a2), mx.compose(b1, b2)
    assert (a @ b).is_zero() and (b @ a).is_zero()
    assert mx.is_idempotent(a + b)
