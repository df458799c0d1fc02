from itertools import product

import pytest

from partcat.category import check_factorization, check_factorization_uniqueness, check_normal_category
from partcat.core import (
    SetPartition,
    Transformation,
    enumerate_singular,
    factorization_idempotents,
    image_set,
    in_sandwich,
    kernel,
    refines,
)
from partcat.iso import _raw_sandwiches, eta_from_carrier
from partcat.right_ideal import (
    RightIdealCategory,
    RightIdealObject,
    compose_lambda,
    ideal_leq,
    lambda_equal,
    lambda_from,
    lambda_hom,
    normal_factorize_lambda,
    raw_lambda_equal,
)

T = lambda *xs: Transformation(xs)  # noqa: E731


@pytest.fixture(scope="module")
def r3():
    return RightIdealCategory(3)


def obj(*blocks):
    return RightIdealObject(SetPartition(sum(len(b) for b in blocks), blocks))


def test_objects_keyed_by_kernel():
    assert RightIdealObject(kernel(T(0, 0, 2))) == RightIdealObject(kernel(T(1, 1, 2)))
    assert obj((0, 1), (2,)).representative == T(0, 0, 2)


def test_lambda_equality_examples():
    e, f, v = T(0, 0, 2), T(0, 0, 0), T(0, 0, 0)
    m = lambda_from(e, v, f)
    assert lambda_equal(m, m)
    # same translation presented through a different idempotent of the source class
    e2 = T(1, 1, 2)
    assert lambda_from(e2, v * e2, f) == lambda_from(e, v * e, f)
    assert not lambda_equal(m, lambda_from(e, T(0, 0, 2), e))


def test_lambda_from_validates():
    with pytest.raises(ValueError):
        lambda_from(T(0, 1, 1), T(0, 0, 2), T(0, 0, 2))  # first argument idempotent but v outside f S e
    with pytest.raises(ValueError):
        lambda_from(T(1, 0, 0), T(0, 0, 0), T(0, 0, 0))


def test_equality_criteria_agree_n3():
    # structural equality, the raw criterion on triples and equality of block maps all coincide
    raw = _raw_sandwiches(3)
    for t1, t2 in product(raw, repeat=2):
        structural = lambda_from(*t1) == lambda_from(*t2)
        by_eta = (kernel(t1[0]), kernel(t1[2]), eta_from_carrier(*t1)) == (
            kernel(t2[0]), kernel(t2[2]), eta_from_carrier(*t2)
        )
        assert structural == raw_lambda_equal(t1, t2) == by_eta


def test_hom_examples(r3):
    assert len(lambda_hom(obj((0, 1), (2,)), obj((0, 1, 2)))) == 2
    top = obj((0, 1, 2))
    assert len(lambda_hom(top, top)) == 1
    for c, d in product(r3.objects, repeat=2):
        ms = lambda_hom(c, d)
        assert len(set(ms)) == len(ms)
        assert all(in_sandwich(m.carrier, d.representative, c.representative) for m in ms)


def test_hom_is_the_quotient_of_the_sandwich(r3):
    for c, d in product(r3.objects, repeat=2):
        e, f = c.representative, d.representative
        quotient = {lambda_from(e, v, f) for v in enumerate_singular(3) if in_sandwich(v, f, e)}
        assert quotient == set(lambda_hom(c, d))


def test_identity_composition(r3):
    for m in r3.morphisms():
        assert compose_lambda(r3.identity(m.source), m) == m
        assert compose_lambda(m, r3.identity(m.target)) == m
    a, b = r3.objects[1], r3.objects[2]
    with pytest.raises(ValueError):
        compose_lambda(r3.hom(a, b)[0], r3.hom(a, b)[0])


def test_composition_is_translation_product(r3):
    # acting on x by the composite is acting by the first carrier, then the second
    for a, b, c in product(r3.objects, repeat=3):
        for m1 in r3.hom(a, b):
            for m2 in r3.hom(b, c):
                m = compose_lambda(m1, m2)
                assert m.carrier == m2.carrier * m1.carrier * a.representative


def test_object_order(r3):
    for c, d in product(r3.objects, repeat=2):
        e, f = c.representative, d.representative
        contained = all(any(f * s == e * t for s in enumerate_singular(3)) for t in enumerate_singular(3))
        assert ideal_leq(c, d) == contained == refines(d.kernel, c.kernel)


def test_factorization_of_an_inclusion(r3):
    c, d = obj((0, 1, 2)), obj((0, 1), (2,))
    m = r3.inclusion(c, d)
    nf = normal_factorize_lambda(m)
    assert nf.retraction == r3.identity(c)
    assert nf.inclusion == m


def test_every_translation_factorizes(r3):
    for m in r3.morphisms():
        for policy in ("min", "max"):
            assert check_factorization(r3, m, normal_factorize_lambda(m, policy)) == []
    assert check_factorization_uniqueness(r3).passed


def test_factorization_idempotents():
    for m in RightIdealCategory(3).morphisms():
        e, v = m.source.representative, m.carrier
        for policy in ("min", "max"):
            g, h = factorization_idempotents(e, v, policy)
            assert g * g == g and h * h == h
            assert g * e == e * g == g
            assert image_set(g) == image_set(v) and kernel(h) == kernel(v)


@pytest.mark.parametrize("n", [3, 4])
def test_right_ideal_category_is_normal(n):
    report = check_normal_category(RightIdealCategory(n), associativity=(n == 3), policies=("min", "max"))
    assert report.passed, report.failures()
