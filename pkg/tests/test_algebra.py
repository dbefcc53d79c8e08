import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nlie.algebra import (
    NLieAlgebra,
    bracket_eval,
    change_basis,
    classify_subspace,
    direct_sum,
    fundamental_identity_residual,
    generated_subalgebra,
    ideal_closure,
    quotient,
    sort_with_sign,
    span,
    subalgebra_as_algebra,
    summand_subspaces,
    validate_algebra,
    whole,
    zero,
)
from nlie.catalog import STANDARD_NAMES, build, example_3_1, example_3_2, simple_algebra
from nlie.errors import FieldMismatchError, PreconditionError
from nlie.generators import random_algebra, random_invertible
from nlie.linalg import Field, Subspace

import oracles


def test_sort_with_sign():
    assert sort_with_sign((2, 1, 3)) == (-1, (1, 2, 3))
    assert sort_with_sign((3, 1, 2)) == (1, (1, 2, 3))
    assert sort_with_sign((1, 1, 2))[0] == 0


def test_table_validation(qq):
    with pytest.raises(ValueError):
        NLieAlgebra(2, 3, qq, (((1, 0), (1, 0, 0)),))
    with pytest.raises(ValueError):
        NLieAlgebra(2, 3, qq, (((0, 3), (1, 0, 0)),))
    with pytest.raises(ValueError):
        NLieAlgebra(1, 3, qq, ())


def test_from_products_absorbs_sign(qq):
    a = NLieAlgebra.from_products(3, 4, qq, {(3, 2, 4): {1: 1}})
    assert a == example_3_1(qq).__class__.from_products(3, 4, qq, {(2, 3, 4): {1: -1}})


# -- brackets ------------------------------------------------------------------


def test_example_brackets(qq):
    a = example_3_1(qq)
    assert bracket_eval(a, [a.e(2), a.e(3), a.e(4)]) == a.e(1)
    assert bracket_eval(a, [a.e(3), a.e(2), a.e(4)]) == tuple(-x for x in a.e(1))
    assert bracket_eval(a, [a.e(2), a.e(2), a.e(3)]) == a.zero_vector()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_simple_table(n, qq):
    a = simple_algebra(n, qq)
    for i in range(1, n + 2):
        args = [a.e(j) for j in range(1, n + 2) if j != i]
        assert bracket_eval(a, args) == a.e(i)


def test_simple_2_explicit(qq):
    a = simple_algebra(2, qq)
    assert bracket_eval(a, [a.e(2), a.e(3)]) == a.e(1)
    assert bracket_eval(a, [a.e(1), a.e(3)]) == a.e(2)
    assert bracket_eval(a, [a.e(1), a.e(2)]) == a.e(3)


def test_bracket_arity_errors(qq):
    a = example_3_1(qq)
    with pytest.raises(ValueError):
        bracket_eval(a, [a.e(1), a.e(2)])
    with pytest.raises(FieldMismatchError):
        bracket_eval(a, [(1, 0), a.e(2), a.e(3)])


def _rand_vec(rng, f, d):
    if f.is_finite:
        return tuple(rng.randrange(f.modulus) for _ in range(d))
    return tuple(f(rng.randint(-3, 3)) for _ in range(d))


@pytest.mark.parametrize("name", ["simple:2", "simple:3", "example_3_1", "example_3_2", "nilpotent:3:5"])
@pytest.mark.parametrize("spec", ["q", "gf:3"])
def test_bracket_matches_naive_expansion(name, spec):
    f = Field.from_spec(spec)
    a = build(name, f)
    rng = random.Random(1)
    for _ in range(15):
        args = [_rand_vec(rng, f, a.dim) for _ in range(a.arity)]
        assert bracket_eval(a, args) == oracles.naive_bracket(a, args)


@given(st.integers(0, 10**6))
def test_antisymmetry_and_multilinearity(seed):
    rng = random.Random(seed)
    f = Field.gf(rng.choice([3, 5]))
    a = build(rng.choice(["simple:2", "simple:3", "example_3_1", "example_3_2"]), f)
    args = [_rand_vec(rng, f, a.dim) for _ in range(a.arity)]
    base = bracket_eval(a, args)
    i, j = rng.sample(range(a.arity), 2)
    swapped = list(args)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert bracket_eval(a, swapped) == tuple(f(-x) for x in base)
    repeated = list(args)
    repeated[j] = repeated[i]
    assert not any(bracket_eval(a, repeated))
    y = _rand_vec(rng, f, a.dim)
    alpha, beta = rng.randrange(f.modulus), rng.randrange(f.modulus)
    mixed = list(args)
    mixed[0] = tuple(f(alpha * u + beta * v) for u, v in zip(args[0], y))
    other = [y] + list(args[1:])
    expect = tuple(f(alpha * u + beta * v) for u, v in zip(base, bracket_eval(a, other)))
    assert bracket_eval(a, mixed) == expect


# -- validation ----------------------------------------------------------------


@pytest.mark.parametrize("name", STANDARD_NAMES)
@pytest.mark.parametrize("spec", ["q", "gf:2", "gf:3", "gf:5"])
def test_catalog_validates(name, spec):
    assert validate_algebra(build(name, Field.from_spec(spec))).ok


def test_broken_simple_is_caught(qq):
    # [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = -e3 here
    products = {(1, 2): {3: 1}, (1, 3): {1: 1}}
    a = NLieAlgebra.from_products(2, 3, qq, products)
    rep = validate_algebra(a)
    assert not rep.ok and rep.violations
    v = rep.violations[0]
    xs = [a.e(i) for i in v.xs]
    ys = [a.e(i) for i in v.ys]
    assert fundamental_identity_residual(a, xs, ys) == v.residual and any(v.residual)


@pytest.mark.parametrize("name", ["simple:3", "example_3_2", "simple:2+simple:2"])
def test_fundamental_identity_on_random_vectors(name, qq):
    a = build(name, qq)
    rng = random.Random(5)
    for _ in range(10):
        xs = [_rand_vec(rng, qq, a.dim) for _ in range(a.arity)]
        ys = [_rand_vec(rng, qq, a.dim) for _ in range(a.arity - 1)]
        assert not any(fundamental_identity_residual(a, xs, ys))


# -- subspaces inside the algebra ----------------------------------------------


def test_generated_subalgebra_examples(qq):
    a = example_3_1(qq)
    assert generated_subalgebra(a, [a.e(2), a.e(3), a.e(4)]) == whole(a)
    assert generated_subalgebra(a, [a.e(1)]) == span(a, [a.e(1)])
    g = [(1, 1, 0, 0), a.e(3)]
    assert generated_subalgebra(a, g) == span(a, g)


def test_classify_examples(qq, gf2):
    a = example_3_1(qq)
    role = classify_subspace(a, span(a, [a.e(1)]))
    assert role.is_subalgebra and role.is_ideal and role.is_abelian_ideal

    b = example_3_2(gf2)
    role = classify_subspace(b, span(b, [b.e(2), b.e(3), b.e(4), b.e(5)]))
    assert not role.is_subalgebra
    assert role.witness.args == (b.e(2), b.e(3), b.e(4))
    assert role.witness.value == b.e(1)


def test_plus_hyperplane_is_subalgebra_not_ideal(qq):
    n = 3
    a = simple_algebra(n, qq)
    plus = tuple(1 if j < 2 else 0 for j in range(n + 1))
    a1p = span(a, [plus] + [a.e(j) for j in range(3, n + 2)])
    role = classify_subspace(a, a1p)
    assert role.is_subalgebra and not role.is_ideal


def test_role_implications(gf2):
    a = example_3_2(gf2)
    from nlie.linalg import enumerate_subspaces

    for s in enumerate_subspaces(a.dim, gf2):
        r = classify_subspace(a, s)
        assert (not r.is_abelian_ideal) or r.is_ideal
        assert (not r.is_ideal) or r.is_subalgebra


def test_small_subspaces_are_subalgebras(gf3):
    a = simple_algebra(3, gf3)
    from nlie.linalg import enumerate_subspaces

    for s in enumerate_subspaces(a.dim, gf3, dims=range(a.arity)):
        assert classify_subspace(a, s).is_subalgebra


def test_ideal_closure(qq):
    a = example_3_2(qq)
    assert ideal_closure(a, [a.e(5)]) == span(a, [a.e(1), a.e(2), a.e(5)])


# -- quotients, sums, subalgebras ----------------------------------------------


def test_quotient_examples(qq):
    a = example_3_1(qq)
    q, pi = quotient(a, span(a, [a.e(1)]))
    assert q.dim == 3 and q.is_abelian
    z, _ = quotient(a, whole(a))
    assert z.dim == 0
    b = example_3_2(qq)
    q2, _ = quotient(b, span(b, [b.e(1), b.e(2)]))
    assert q2.dim == 3 and q2.is_abelian


def test_quotient_requires_ideal(qq):
    a = example_3_1(qq)
    with pytest.raises(PreconditionError):
        quotient(a, span(a, [a.e(2)]))


@given(st.integers(0, 10**6))
def test_projection_is_homomorphism(seed):
    rng = random.Random(seed)
    f = Field.gf(3)
    a = build(rng.choice(["example_3_2", "nilpotent:2:3", "simple:2+abelian:2:1"]), f)
    from nlie.frattini import enumerate_substructures

    ideals = enumerate_substructures(a).ideals
    i = rng.choice(ideals)
    q, pi = quotient(a, i)
    args = [_rand_vec(rng, f, a.dim) for _ in range(a.arity)]
    assert pi(bracket_eval(a, args)) == bracket_eval(q, [pi(x) for x in args])


def test_direct_sum_examples(qq):
    s = direct_sum(NLieAlgebra.abelian(2, 2, qq), NLieAlgebra.abelian(2, 3, qq))
    assert s == NLieAlgebra.abelian(2, 5, qq)
    t = direct_sum(simple_algebra(2, qq), simple_algebra(2, qq))
    assert t.dim == 6
    for part in summand_subspaces(simple_algebra(2, qq), simple_algebra(2, qq)):
        assert part.dim == 3 and classify_subspace(t, part).is_ideal
    mixed = [t.e(1), t.e(4)]
    assert not any(bracket_eval(t, mixed))


def test_direct_sum_mismatch(qq):
    with pytest.raises(FieldMismatchError):
        direct_sum(simple_algebra(2, qq), simple_algebra(3, qq))
    with pytest.raises(FieldMismatchError):
        direct_sum(simple_algebra(2, qq), simple_algebra(2, Field.gf(3)))


def test_subalgebra_as_algebra(qq):
    b = example_3_2(qq)
    c = span(b, [b.e(1), b.e(2), b.e(3), b.e(4)])
    sub, inc = subalgebra_as_algebra(b, c)
    assert sub == example_3_1(qq)
    assert inc.image(whole(sub)) == c
    with pytest.raises(PreconditionError):
        subalgebra_as_algebra(b, span(b, [b.e(2), b.e(3), b.e(4)]))


@given(st.integers(0, 10**6))
def test_change_basis_preserves_validity(seed):
    rng = random.Random(seed)
    f = Field.gf(rng.choice([2, 3]))
    a = build(rng.choice(["simple:2", "example_3_1", "nilpotent:2:3"]), f)
    p = random_invertible(rng, f, a.dim)
    b = change_basis(a, p)
    assert validate_algebra(b).ok
    cols = list(zip(*p))
    args = [cols[k] for k in range(a.arity)]
    from nlie.linalg import mat_vec

    # the new e_k is the old column k of p
    assert mat_vec(p, bracket_eval(b, [b.e(k + 1) for k in range(a.arity)]), f) == bracket_eval(a, args)


@given(st.integers(0, 10**6))
def test_random_algebras_validate(seed):
    rng = random.Random(seed)
    f = Field.gf(rng.choice([2, 3]))
    a = random_algebra(rng, rng.choice([2, 3]), rng.randint(0, 4), f)
    assert validate_algebra(a).ok


def test_zero_dimensional_algebra(qq):
    a = NLieAlgebra.abelian(3, 0, qq)
    assert validate_algebra(a).ok
    assert whole(a) == zero(a)
