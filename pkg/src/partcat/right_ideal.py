"""The category of principal right ideals eS of S = T_X.

An object is keyed by the kernel of its idempotent generators (eS = fS iff
the kernels agree). A morphism eS -> fS is the left translation by some v in
f S e; carriers are normalized to ``v * e0`` with e0 the canonical idempotent
of the source kernel, which makes equality of morphisms structural.
"""

from dataclasses import dataclass
from functools import cached_property

from .category import FiniteCategory, NormalFactorization, NotASubobjectError, make_cone
from .core import (
    SetPartition,
    Transformation,
    canonical_idempotent,
    enumerate_partitions,
    factorization_idempotents,
    green_R,
    in_sandwich,
    kernel,
    refines,
    translations,
)


@dataclass(frozen=True)
class RightIdealObject:
    kernel: SetPartition

    @cached_property
    def representative(self):
        return canonical_idempotent(self.kernel)

    def encode(self):
        return self.kernel.encode()


@dataclass(frozen=True)
class LambdaMorphism:
    source: RightIdealObject
    target: RightIdealObject
    carrier: Transformation

    def encode(self):
        return {
            "source_kernel": self.source.encode(),
            "carrier": self.carrier.encode(),
            "target_kernel": self.target.encode(),
        }


def lambda_from(e, v, f):
    """The translation eS -> fS by ``v``; requires idempotents e, f and v in f S e."""
    if not (e.is_idempotent and f.is_idempotent):
        raise ValueError("object data must be idempotent")
    if not in_sandwich(v, f, e):
        raise ValueError(f"{v} is not in f S e")
    src = RightIdealObject(kernel(e))
    return LambdaMorphism(src, RightIdealObject(kernel(f)), v * src.representative)


def raw_lambda_equal(t1, t2):
    """Equality of translations given as raw triples (e, u, f), (e', v, f').

    Equal iff e R e', f R f', u in f S e, v in f' S e' and u = v e.
    """
    (e, u, f), (e2, v, f2) = t1, t2
    return (
        green_R(e, e2) and green_R(f, f2)
        and in_sandwich(u, f, e) and in_sandwich(v, f2, e2)
        and u == v * e
    )


def lambda_equal(m1, m2):
    return m1 == m2


def compose_lambda(m1, m2):
    """m1: eS -> fS then m2: fS -> gS; the carrier is (carrier of m2)(carrier of m1)."""
    if m1.target != m2.source:
        raise ValueError("translations are not composable")
    return LambdaMorphism(m1.source, m2.target, m2.carrier * m1.carrier * m1.source.representative)


def lambda_hom(a, b):
    return [LambdaMorphism(a, b, v) for v in translations(a.kernel, b.kernel)]


def ideal_leq(a, b):
    """eS inside fS iff ker f refines ker e."""
    return refines(b.kernel, a.kernel)


def normal_factorize_lambda(m, policy="min"):
    """Retraction eS -> gS, isomorphism gS -> hS by the carrier, inclusion hS -> fS.

    g is an idempotent with the carrier's image lying below e; h is an
    idempotent with the carrier's kernel.
    """
    e, f, v = m.source.representative, m.target.representative, m.carrier
    g, h = factorization_idempotents(e, v, policy)
    ret = lambda_from(e, g, g)
    iso = lambda_from(g, v, h)
    inc = lambda_from(h, h, f)
    return NormalFactorization(ret, iso, inc, compose_lambda(ret, iso))


class RightIdealCategory(FiniteCategory):
    name = "right ideal category"

    def __init__(self, n):
        self.n = n
        super().__init__([RightIdealObject(k) for k in enumerate_partitions(n, non_identity_only=True)])

    def _hom(self, c, d):
        return lambda_hom(c, d)

    def hom_size(self, c, d):
        return len(c.kernel.blocks) ** len(d.kernel.blocks)

    def compose(self, f, g):
        return compose_lambda(f, g)

    def identity(self, c):
        return LambdaMorphism(c, c, c.representative)

    def leq(self, c, d):
        return ideal_leq(c, d)

    def inclusion(self, c, d):
        if not ideal_leq(c, d):
            raise NotASubobjectError("ideal is not contained in the other")
        return LambdaMorphism(c, d, c.representative)

    def factorize(self, f, policy="min"):
        return normal_factorize_lambda(f, policy)

    def identity_cone(self, c):
        # component at d is the translation by e0 d0: blocks of c go to the d-block of their minimum
        e = c.representative
        comps = [LambdaMorphism(d, c, e * d.representative) for d in self.objects]
        return make_cone(self, c, comps)
