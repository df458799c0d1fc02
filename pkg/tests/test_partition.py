from itertools import product

import pytest

from partcat.category import (
    NotASubobjectError,
    check_factorization,
    check_factorization_uniqueness,
    check_normal_category,
    cone_check,
    cone_product,
    epimorphic_part,
)
from partcat.core import SetPartition, SizeMismatchError
from partcat.partition import (
    PartitionCategory,
    PartitionMorphism,
    as_point_map,
    compose_morphisms,
    functions_on_blocks,
    hom,
    identity_cone_at,
    identity_morphism,
    inclusion,
    is_inclusion,
    is_isomorphism,
    normal_factorize,
    object_leq,
    retraction,
)

P = lambda *bs: SetPartition(sum(len(b) for b in bs), bs)  # noqa: E731
ONE = P((0, 1, 2))
A = P((0, 1), (2,))
B = P((0, 2), (1,))
C_ = P((0,), (1, 2))


@pytest.fixture(scope="module")
def pi3():
    return PartitionCategory(3)


@pytest.fixture(scope="module")
def pi4():
    return PartitionCategory(4)


def test_object_order_examples():
    assert object_leq(A, A)
    assert object_leq(ONE, A)
    assert not object_leq(A, B) and not object_leq(B, A)
    with pytest.raises(SizeMismatchError):
        object_leq(ONE, SetPartition(4, [(0, 1, 2, 3)]))


def test_hom_sizes():
    assert len(hom(A, ONE)) == 2
    assert all(len(hom(ONE, q)) == 1 for q in (ONE, A, B, C_))
    assert len(hom(A, C_)) == 4
    assert len(set(hom(A, C_))) == 4


def test_bad_block_maps_rejected():
    with pytest.raises(ValueError):
        PartitionMorphism(A, ONE, (0, 0))
    with pytest.raises(ValueError):
        PartitionMorphism(A, ONE, (2,))


def test_worked_composition():
    f = PartitionMorphism(A, ONE, (0,))
    g = PartitionMorphism(ONE, C_, (0, 0))
    h = compose_morphisms(f, g)
    assert (h.source, h.target, h.eta) == (A, C_, (0, 0))
    assert compose_morphisms(identity_morphism(A), h) == h
    with pytest.raises(ValueError):
        compose_morphisms(g, f)


def test_inclusions_compose():
    lo, mid, hi = SetPartition(4, [(0, 1, 2, 3)]), SetPartition(4, [(0, 1), (2, 3)]), SetPartition(4, [(0,), (1,), (2, 3)])
    assert compose_morphisms(inclusion(lo, mid), inclusion(mid, hi)) == inclusion(lo, hi)


def test_inclusion_and_retraction_example():
    assert inclusion(A, A) == identity_morphism(A) == retraction(A, A)
    j = inclusion(ONE, A)
    assert j.eta == (0, 0)
    z = retraction(ONE, A)
    assert z.source == A and z.target == ONE and z.eta == (0,)  # {0,1,2} goes to the block holding 0
    with pytest.raises(NotASubobjectError):
        inclusion(A, B)
    with pytest.raises(NotASubobjectError):
        retraction(A, ONE)


@pytest.mark.parametrize("n", [3, 4])
def test_retraction_law(n):
    C = PartitionCategory(n)
    for a, b in product(C.objects, repeat=2):
        if C.leq(a, b):
            assert compose_morphisms(inclusion(a, b), retraction(a, b)) == identity_morphism(a)


def test_inclusions_are_exactly_the_flagged_morphisms(pi3):
    for a, b in product(pi3.objects, repeat=2):
        flagged = [f for f in pi3.hom(a, b) if is_inclusion(f)]
        assert len(flagged) == (1 if object_leq(a, b) else 0)


def test_worked_factorization():
    f = PartitionMorphism(A, A, (0, 0))
    nf = normal_factorize(f)
    sigma = nf.inclusion.source
    gamma = nf.retraction.target
    assert sigma == ONE and gamma == ONE
    assert nf.retraction.eta == (0,)
    assert nf.isomorphism.eta == (0,)
    assert nf.inclusion == inclusion(ONE, A)
    assert compose_morphisms(compose_morphisms(nf.retraction, nf.isomorphism), nf.inclusion) == f


def test_factorization_of_an_isomorphism():
    f = PartitionMorphism(A, A, (0, 1))
    nf = normal_factorize(f)
    assert nf.retraction == identity_morphism(A) and nf.inclusion == identity_morphism(A)
    assert nf.isomorphism == f
    g = PartitionMorphism(B, C_, (1, 0))
    assert is_isomorphism(g)
    nf = normal_factorize(g)
    assert nf.isomorphism == g


def test_isomorphism_examples():
    assert is_isomorphism(identity_morphism(A))
    assert not is_isomorphism(PartitionMorphism(A, C_, (0, 0)))


def test_factorization_rejects_unknown_policy():
    with pytest.raises(ValueError):
        normal_factorize(identity_morphism(A), policy="middle")


@pytest.mark.parametrize("n", [3, 4])
def test_every_morphism_factorizes(n):
    C = PartitionCategory(n)
    for f in C.morphisms():
        for policy in ("min", "max"):
            nf = normal_factorize(f, policy)
            assert check_factorization(C, f, nf) == []
            assert is_isomorphism(nf.isomorphism)
            assert not nf.retraction.target.is_identity and not nf.inclusion.source.is_identity


def test_normal_category_three_points(pi3):
    report = check_normal_category(pi3, policies=("min", "max"))
    assert report.passed, report.failures()
    assert check_factorization_uniqueness(pi3).passed


def test_epimorphic_part_of_worked_example(pi3):
    f = PartitionMorphism(A, A, (0, 0))
    fo = epimorphic_part(pi3, f)
    assert fo == PartitionMorphism(A, ONE, (0,))


def test_identity_cones(pi3):
    for p in pi3.objects:
        gamma = identity_cone_at(pi3, p)
        assert gamma.vertex == p and gamma[p] == identity_morphism(p)
        assert cone_check(pi3, gamma) and gamma.is_normal
        assert cone_product(pi3, gamma, gamma) == gamma
    gamma = identity_cone_at(pi3, A)
    assert len(gamma.components) == 4


def test_block_map_action_is_precomposition(pi3):
    # acting by f then g agrees with acting by the composite, for every function on blocks
    for a, b, c in product(pi3.objects, repeat=3):
        for alpha in functions_on_blocks(a):
            for f in pi3.hom(a, b):
                for g in pi3.hom(b, c):
                    assert compose_morphisms(f, g).act(alpha) == g.act(f.act(alpha))


def test_distinct_block_maps_act_differently(pi3):
    for a, b in product(pi3.objects, repeat=2):
        actions = {tuple(f.act(al) for al in functions_on_blocks(a)) for f in pi3.hom(a, b)}
        assert len(actions) == len(pi3.hom(a, b))


def test_inclusion_is_inclusion_of_function_sets(pi3):
    # each function on blocks of a, viewed as a map X -> X, is unchanged by the inclusion into b
    for a, b in product(pi3.objects, repeat=2):
        if object_leq(a, b):
            j = inclusion(a, b)
            for alpha in functions_on_blocks(a):
                assert as_point_map(b, j.act(alpha)) == as_point_map(a, alpha)


def test_partition_category_four_points_sizes(pi4):
    assert len(pi4.objects) == 14
    assert sum(1 for _ in pi4.morphisms()) == sum(
        len(a.blocks) ** len(b.blocks) for a, b in product(pi4.objects, repeat=2)
    )
