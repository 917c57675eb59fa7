import pytest

from bicomplex import generators as gen
from bicomplex import matrix as mx
from bicomplex import operator as op
from bicomplex import scalar as sc
from bicomplex.operator import BicomplexOperator, BicomplexVector
from bicomplex.verify import arbitrary_operator, example_operator, random_basis


def C(re, im=0):
    return sc.RationalComplex(re, im)


def vec(minus, plus):
    return BicomplexVector.from_components([C(x) for x in minus], [C(x) for x in plus])


def random_vector(seed, n):
    rng = gen.SplitMix64(seed)
    return BicomplexVector.from_components(
        [C(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(n)],
        [C(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(n)])


# -- apply ----------------------------------------------------------------------

def test_apply_identity():
    v = random_vector(1, 4)
    assert op.apply(op.identity_operator(4), v) == v


def test_apply_worked_example():
    t = example_operator()
    w = op.apply(t, vec([1, 1, 1], [1, 1, 1]))
    assert w.minus == (C(2), C(1), C(0))
    assert w.plus == (C(1), C(0), C(1))


def test_apply_worked_example_symbolic_rule():
    # T1(z1, z2, z3) = (z3 + z2, z3, 0), T2(w1, w2, w3) = (w1, 0, w3)
    t = example_operator()
    v = random_vector(5, 3)
    w = op.apply(t, v)
    z, u = v.minus, v.plus
    assert w.minus == (z[2] + z[1], z[2], C(0))
    assert w.plus == (u[0], C(0), u[2])


@pytest.mark.parametrize("seed", range(5))
def test_apply_is_additive(seed):
    t = arbitrary_operator(seed, n=3)
    v, w = random_vector(seed + 10, 3), random_vector(seed + 20, 3)
    assert op.apply(t, v + w) == op.apply(t, v) + op.apply(t, w)


def test_apply_dimension_mismatch():
    with pytest.raises(op.DimensionMismatch):
        op.apply(op.identity_operator(3), random_vector(1, 2))


# -- compose ----------------------------------------------------------------------

def test_compose_identity():
    t = arbitrary_operator(3, n=3)
    assert op.compose(op.identity_operator(3), t) == t
    assert op.compose(t, op.identity_operator(3)) == t


def test_compose_matches_apply_on_basis_vectors():
    s = example_operator()
    t = arbitrary_operator(7, n=3)
    st = op.compose(s, t)
    assert st.t1 == s.t1 @ t.t1
    for j in range(3):
        e = [C(1) if i == j else C(0) for i in range(3)]
        v = BicomplexVector.from_components(e, e)
        assert op.apply(st, v) == op.apply(s, op.apply(t, v))


def test_compose_square():
    t = arbitrary_operator(8, n=3)
    tt = op.compose(t, t)
    assert (tt.t1, tt.t2) == (t.t1 @ t.t1, t.t2 @ t.t2)


@pytest.mark.parametrize("seed", range(4))
def test_compose_associative_and_matches_apply(seed):
    r, s, t = (arbitrary_operator(seed * 3 + i, n=3) for i in range(3))
    assert op.compose(op.compose(r, s), t) == op.compose(r, op.compose(s, t))
    v = random_vector(seed, 3)
    assert op.apply(op.compose(s, t), v) == op.apply(s, op.apply(t, v))


def test_compose_dimension_mismatch():
    with pytest.raises(op.DimensionMismatch):
        op.compose(op.identity_operator(2), op.identity_operator(3))


# -- add / scale ------------------------------------------------------------------

def test_add_and_scale():
    t = arbitrary_operator(4, n=3)
    assert op.add(t, op.zero_operator(3)) == t
    assert op.scale(1, t) == t
    two = op.scale(2, t)
    assert two.t1.entries == tuple(C(2) * z for z in t.t1.entries)
    assert two.t2 == t.t2.scale(2)
    i_t = op.scale(sc.I_C, t)
    assert i_t.t1 == t.t1.scale(sc.I_C)


def test_scale_rejects_bicomplex_scalar():
    with pytest.raises(TypeError):
        op.scale(sc.E1, op.identity_operator(2))


# -- power / powers_equal -----------------------------------------------------------

def test_power_examples():
    t = example_operator()
    assert op.power(t, 1) == t
    t3 = op.power(t, 3)
    assert t3.t1.is_zero()
    assert t3.t2 == t.t2
    assert op.power(t, 0) == op.identity_operator(3)


@pytest.mark.parametrize("k", range(0, 7))
def test_power_is_iterated_compose(k):
    t = arbitrary_operator(17, n=3)
    acc = op.identity_operator(3)
    for _ in range(k):
        acc = op.compose(acc, t)
    assert op.power(t, k) == acc


def test_powers_equal():
    t = example_operator()
    assert op.powers_equal(t, t, 4)
    swapped = BicomplexOperator(3, t.t2, t.t1)
    assert not op.powers_equal(t, swapped, 1)
    n1 = gen.gen_nilpotent(gen.GenSpec(1, 4, gen.Nilpotent(3))).matrix
    n2 = gen.gen_nilpotent(gen.GenSpec(2, 4, gen.Nilpotent(2))).matrix
    s = BicomplexOperator(4, n1, n2)
    u = BicomplexOperator(4, n2, n1)
    assert s != u
    assert op.powers_equal(s, u, 3)
    assert not op.powers_equal(s, u, 2)
    with pytest.raises(ValueError):
        op.powers_equal(s, u, 0)


# -- basis change -------------------------------------------------------------------

def test_matrix_in_standard_basis():
    t = arbitrary_operator(2, n=3)
    assert op.matrix_in_basis(t, op.Basis.standard(3)) == mx.compose(t.t1, t.t2)


def test_basis_rejects_singular():
    with pytest.raises(mx.SingularMatrix):
        op.Basis.from_matrix(mx.diag([1, 0]))


def test_basis_dimension_mismatch():
    with pytest.raises(op.DimensionMismatch):
        op.matrix_in_basis(op.identity_operator(2), op.Basis.standard(3))


@pytest.mark.parametrize("seed", range(6))
def test_similarity_preserves_nilpotency_index(seed):
    rng = gen.SplitMix64(seed)
    n = rng.randint(2, 5)
    t = BicomplexOperator(n, *(gen.gen_nilpotent(gen.GenSpec(rng.next_u64(), n,
                                                             gen.Nilpotent(rng.randint(1, n)))).matrix
                               for _ in range(2)))
    b = op.matrix_in_basis(t, random_basis(rng.next_u64(), n))
    assert mx.nilpotency(b) == mx.nilpotency(t.as_matrix())


@pytest.mark.parametrize("seed", range(6))
def test_similarity_preserves_idempotency(seed):
    rng = gen.SplitMix64(seed)
    n = rng.randint(2, 5)
    t = BicomplexOperator(n, *(gen.gen_idempotent(gen.GenSpec(rng.next_u64(), n,
                                                              gen.Idempotent(rng.randint(0, n)))).matrix
                               for _ in range(2)))
    b = op.matrix_in_basis(t, random_basis(rng.next_u64(), n))
    assert mx.is_idempotent(b)


# -- predicates -------------------------------------------------------------------

def test_worked_example_predicates():
    t = example_operator()
    rep = op.is_nilpotent_operator(t)
    assert not rep.is_nilpotent
    assert rep.component_indices[0] == 3
    assert mx.is_idempotent_component(t.t2)
    assert not op.is_idempotent_operator(t)
    assert op.is_singular_operator(t).components == ("minus", "plus")


def test_zero_operator_predicates():
    z = op.zero_operator(4)
    assert op.is_nilpotent_operator(z).index == 1
    assert op.is_idempotent_operator(z)
    assert op.is_singular_operator(z).singular
    assert z.is_zero()


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_composite_index_and_corollary(k):
    rng = gen.SplitMix64(k)
    n = 5
    k_other = rng.randint(1, k)
    m1 = gen.gen_nilpotent(gen.GenSpec(rng.next_u64(), n, gen.Nilpotent(k))).matrix
    m2 = gen.gen_nilpotent(gen.GenSpec(rng.next_u64(), n, gen.Nilpotent(k_other))).matrix
    t = BicomplexOperator(n, m2, m1) if rng.below(2) else BicomplexOperator(n, m1, m2)
    rep = op.is_nilpotent_operator(t)
    assert rep.index == k
    assert k in rep.component_indices
    if k > 1:
        assert not op.power(t, k - 1).is_zero()


def test_idempotency_transfer():
    s = BicomplexOperator(3, mx.diag([1, 0, 0]), mx.diag([0, 1, 1]))
    assert op.is_idempotent_operator(s)
    assert op.compose(s, s) == s


def test_orthogonal_sum_is_idempotent_operator():
    a1, b1 = gen.gen_orthogonal_idempotents(3, 4, 1, 2)
    a2, b2 = gen.gen_orthogonal_idempotents(4, 4, 2, 2)
    s, t = BicomplexOperator(4, a1, a2), BicomplexOperator(4, b1, b2)
    assert op.compose(s, t).is_zero() and op.compose(t, s).is_zero()
    assert op.is_idempotent_operator(op.add(s, t))


def test_equality_is_componentwise():
    t = arbitrary_operator(9, n=2)
    assert t == BicomplexOperator(2, t.t1, t.t2)
    assert t != BicomplexOperator(2, t.t1, t.t2 + mx.identity(2))


def test_operator_shape_checks():
    with pytest.raises(op.DimensionMismatch):
        BicomplexOperator(2, mx.identity(2), mx.identity(3))
    with pytest.raises(op.DimensionMismatch):
        BicomplexOperator.from_matrix(mx.bicomplex_zeros(2, 3))
