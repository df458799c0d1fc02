from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from partcat.category import (
    check_factorization,
    check_factorization_uniqueness,
    check_normal_category,
    cone_check,
    cone_product,
    enumerate_all_normal_cones,
    generate_semigroup,
    is_associative,
    check_regular,
)
from partcat.core import (
    NotSingularError,
    SetPartition,
    Subset,
    Transformation,
    enumerate_partitions,
    enumerate_singular,
    idempotents,
    image_set,
    in_sandwich,
    is_cross_section,
    kernel,
    refines,
)
from partcat.powerset import (
    DualCategory,
    DualMorphism,
    HFunctor,
    PowersetCategory,
    SetMorphism,
    compose_set_morphisms,
    dual_compose,
    dual_inclusion_test,
    dual_morphism,
    dual_morphism_apply,
    dual_objects,
    h_equal,
    h_extensionally_equal,
    h_morphism,
    h_object,
    h_set_dump,
    natural_transformations_equal,
    normal_factorize_set,
    powerset_objects,
    principal_cone,
    set_inclusion,
    transformation_of_cone,
)

T = lambda *xs: Transformation(xs)  # noqa: E731
S3 = lambda *xs: Subset(3, xs)  # noqa: E731


@pytest.fixture(scope="module")
def p3():
    return PowersetCategory(3)


@pytest.fixture(scope="module")
def dual3():
    return DualCategory(3)


@pytest.mark.parametrize("n, count", [(2, 2), (3, 6), (4, 14)])
def test_object_counts(n, count):
    objs = powerset_objects(n)
    assert len(objs) == count == len(set(objs))


def test_objects_are_non_empty_and_proper():
    with pytest.raises(ValueError):
        Subset(3, ())
    with pytest.raises(ValueError):
        Subset(3, (0, 1, 2))
    with pytest.raises(ValueError):
        powerset_objects(1)


def test_set_morphism_validation():
    with pytest.raises(ValueError):
        SetMorphism(S3(0, 1), S3(2), (2,))
    with pytest.raises(ValueError):
        SetMorphism(S3(0, 1), S3(2), (2, 0))


def test_factorization_of_an_injection():
    f = SetMorphism(S3(0, 1), S3(1, 2), (2, 1))
    nf = normal_factorize_set(f)
    assert nf.retraction == SetMorphism(S3(0, 1), S3(0, 1), (0, 1))
    assert nf.isomorphism == f
    assert nf.inclusion == set_inclusion(S3(1, 2), S3(1, 2))


def test_factorization_of_a_constant():
    f = SetMorphism(S3(0, 1), S3(1, 2), (2, 2))
    nf = normal_factorize_set(f)
    assert nf.retraction.target == S3(0)
    assert nf.isomorphism == SetMorphism(S3(0), S3(2), (2,))
    assert nf.inclusion == set_inclusion(S3(2), S3(1, 2))
    assert normal_factorize_set(f, "max").retraction.target == S3(1)


def test_every_set_morphism_factorizes(p3):
    for f in p3.morphisms():
        nf = normal_factorize_set(f)
        assert check_factorization(p3, f, nf) == []
        assert len(set(nf.isomorphism.values)) == len(nf.isomorphism.values)
    assert check_factorization_uniqueness(p3).passed


@pytest.mark.parametrize("n", [3, 4])
def test_powerset_is_normal(n):
    report = check_normal_category(PowersetCategory(n), associativity=(n == 3))
    assert report.passed, report.failures()


def test_composition_of_set_morphisms():
    f = SetMorphism(S3(0, 1), S3(0, 2), (0, 2))
    g = SetMorphism(S3(0, 2), S3(1), (1, 1))
    assert compose_set_morphisms(f, g) == SetMorphism(S3(0, 1), S3(1), (1, 1))
    with pytest.raises(ValueError):
        compose_set_morphisms(g, f)


# principal cones

def test_principal_cone_of_an_idempotent(p3):
    rho = principal_cone(p3, T(0, 0, 2))
    assert rho.vertex == S3(0, 2)
    assert rho[S3(0, 2)] == p3.identity(S3(0, 2))
    assert rho.m_set == {S3(0, 2), S3(1, 2)}


def test_principal_cone_of_a_constant(p3):
    rho = principal_cone(p3, T(1, 1, 1))
    assert rho.vertex == S3(1)
    assert all(set(f.values) == {1} for f in rho.components)


def test_principal_cone_needs_a_singular_map(p3):
    with pytest.raises(NotSingularError):
        principal_cone(p3, T(2, 0, 1))


def test_principal_cone_facts_n3(p3):
    for a in enumerate_singular(3):
        rho = principal_cone(p3, a)
        assert cone_check(p3, rho) and rho.is_normal
        assert transformation_of_cone(rho) == a
        for A in p3.objects:
            assert p3.is_iso(rho[A]) == is_cross_section(kernel(a), A.members)
        assert (cone_product(p3, rho, rho) == rho) == a.is_idempotent


def test_principal_cones_multiply_like_maps_n3(p3):
    rho = {a: principal_cone(p3, a) for a in enumerate_singular(3)}
    for a, b in product(rho, repeat=2):
        assert cone_product(p3, rho[a], rho[b]) == rho[a * b]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(enumerate_singular(4)), st.sampled_from(enumerate_singular(4)))
def test_principal_cones_multiply_like_maps_sampled_n4(a, b):
    C = _p4()
    assert cone_product(C, principal_cone(C, a), principal_cone(C, b)) == principal_cone(C, a * b)


_cache = {}


def _p4():
    if "p4" not in _cache:
        _cache["p4"] = PowersetCategory(4)
    return _cache["p4"]


def test_every_normal_cone_is_principal_n3(p3):
    cones = enumerate_all_normal_cones(p3)
    principal = {principal_cone(p3, a) for a in enumerate_singular(3)}
    assert len(cones) == 21 and set(cones) == principal


def test_principal_closure_n3(p3):
    sg = generate_semigroup(p3, [principal_cone(p3, a) for a in enumerate_singular(3)])
    assert len(sg.elements) == 21 and is_associative(sg.table)
    reg = check_regular(sg.table)
    assert reg.regular and len(reg.witnesses) == 21


# H-functors

def test_h_object_examples():
    h = HFunctor.of(T(0, 0, 2))
    assert h_object(h, S3(0, 1)) == {T(0, 0, 0), T(0, 0, 1), T(1, 1, 0), T(1, 1, 1)}
    assert h_object(HFunctor.of(T(1, 1, 1)), S3(2)) == {T(2, 2, 2)}


def test_h_object_is_monotone(p3):
    for k in enumerate_partitions(3, non_identity_only=True):
        h = HFunctor(k)
        for A, B in product(p3.objects, repeat=2):
            if A.issubset(B):
                assert h_object(h, A) <= h_object(h, B)


@pytest.mark.parametrize("n", [3, 4])
def test_h_object_matches_ideal_membership(n):
    # a lies in H(e; A) iff a is in eS (that is, e a = a) and Im a lies in A
    for e in idempotents(n):
        members = [a for a in enumerate_singular(n) if e * a == a]
        for A in powerset_objects(n):
            expected = {a for a in members if image_set(a) <= set(A.members)}
            assert h_object(HFunctor.of(e), A) == expected


def test_h_functor_needs_non_identity_kernel():
    with pytest.raises(ValueError):
        HFunctor(SetPartition(3, [(0,), (1,), (2,)]))


def test_h_morphism_example(p3):
    h = HFunctor.of(T(0, 0, 2))
    g = SetMorphism(S3(0, 1), S3(0, 2), (0, 2))
    assert h_morphism(h, g)[T(0, 0, 1)] == T(0, 0, 2)
    ident = p3.identity(S3(0, 1))
    assert all(a == b for a, b in h_morphism(h, ident).items())


def test_h_morphism_lands_in_target(p3):
    for k in enumerate_partitions(3, non_identity_only=True):
        h = HFunctor(k)
        for g in p3.morphisms():
            assert set(h_morphism(h, g).values()) <= h_object(h, g.target)


def test_h_equality_examples(p3):
    e, f = T(0, 0, 2), T(1, 1, 2)
    assert h_equal(HFunctor.of(e), HFunctor.of(e))
    assert h_equal(HFunctor.of(e), HFunctor.of(f))
    assert h_extensionally_equal(HFunctor.of(e), HFunctor.of(f), p3.objects)
    assert not h_equal(HFunctor.of(e), HFunctor.of(T(0, 1, 1)))


def test_h_equality_is_extensional_n3(p3):
    for e, f in product(idempotents(3), repeat=2):
        assert h_equal(HFunctor.of(e), HFunctor.of(f)) == h_extensionally_equal(
            HFunctor.of(e), HFunctor.of(f), p3.objects
        )


def test_h_set_dump_is_canonical():
    dump = h_set_dump(HFunctor.of(T(0, 0, 2)), S3(0, 1))
    assert dump == {
        "kernel": [[0, 1], [2]],
        "subset": [0, 1],
        "members": [[0, 0, 0], [0, 0, 1], [1, 1, 0], [1, 1, 1]],
    }


# the normal dual

@pytest.mark.parametrize("n, count", [(3, 4), (4, 14)])
def test_dual_object_counts(n, count):
    assert len(dual_objects(n)) == count


def test_dual_object_representative():
    h = HFunctor(SetPartition(3, [(0, 1, 2)]))
    assert h.representative == T(0, 0, 0)


def test_dual_morphism_apply_examples():
    e, f, v = T(0, 0, 2), T(0, 1, 1), T(0, 2, 2)
    assert in_sandwich(v, f, e)
    m = dual_morphism(e, v, f)
    comp = dual_morphism_apply(m, S3(0, 2))
    assert comp[T(0, 0, 0)] == T(0, 0, 0)
    for C in powerset_objects(3):
        for a, b in dual_morphism_apply(m, C).items():
            assert b == v * a and b in h_object(m.target, C)


def test_dual_morphism_by_source_idempotent_is_identity_on_h_sets():
    e, f = T(0, 0, 2), T(0, 0, 0)
    m = dual_morphism(e, e, e)
    for C in powerset_objects(3):
        assert all(a == b for a, b in dual_morphism_apply(m, C).items())
    assert dual_inclusion_test(m)
    # a coarser kernel on the source side: an inclusion H(f) into H(e)
    assert refines(kernel(e), kernel(f))
    assert dual_inclusion_test(dual_morphism(f, f, e))


def test_dual_morphism_rejects_outside_sandwich():
    with pytest.raises(ValueError):
        dual_morphism(T(0, 0, 2), T(1, 1, 1), T(0, 1, 1))


def test_inclusion_test_on_comparable_idempotents():
    for e, f in product(idempotents(3), repeat=2):
        if refines(kernel(f), kernel(e)):
            assert e == f * e
            assert dual_inclusion_test(dual_morphism(e, e, f))


def test_incomparable_kernels_have_no_inclusion(dual3):
    for c, d in product(dual3.objects, repeat=2):
        if not refines(d.kernel, c.kernel):
            assert not any(dual_inclusion_test(m) for m in dual3.hom(c, d))


def test_dual_composition_matches_components(dual3):
    # composing hats agrees with composing the natural transformations componentwise
    subsets = powerset_objects(3)
    for a, b, c in product(dual3.objects, repeat=3):
        for m1 in dual3.hom(a, b):
            for m2 in dual3.hom(b, c):
                m = dual_compose(m1, m2)
                for C in subsets:
                    first, second = dual_morphism_apply(m1, C), dual_morphism_apply(m2, C)
                    assert dual_morphism_apply(m, C) == {x: second[y] for x, y in first.items()}


def test_hat_normalization_does_not_change_the_transformation(dual3):
    for e, f in product(idempotents(3), repeat=2):
        for v in enumerate_singular(3):
            if in_sandwich(v, f, e):
                raw = DualMorphism(HFunctor.of(e), HFunctor.of(f), v)
                assert natural_transformations_equal(raw, dual_morphism(e, v, f), powerset_objects(3))


def test_dual_is_normal(dual3):
    report = check_normal_category(dual3, policies=("min", "max"))
    assert report.passed, report.failures()
    assert check_factorization_uniqueness(dual3).passed


def test_dual_order_is_functor_inclusion(dual3):
    for c, d in product(dual3.objects, repeat=2):
        assert dual3.leq(c, d) == all(h_object(c, A) <= h_object(d, A) for A in powerset_objects(3))
        assert dual3.leq(c, d) == refines(d.kernel, c.kernel)
