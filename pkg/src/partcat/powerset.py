"""The power-set category, its principal cones, H-functors and the normal dual.

Objects of the power-set category are the non-empty proper subsets of X and
morphisms are plain functions between them. A transformation ``a`` of T_X
gives the principal cone whose component at A is ``a`` restricted to A.

The normal dual has one object per non-identity partition ``k`` (the H-functor
of any idempotent with kernel ``k``); a morphism ``H(e) -> H(f)`` is a natural
transformation ``a -> v a`` determined by a hat ``v`` in ``f T_X e``.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .category import FiniteCategory, NormalFactorization, NotASubobjectError, make_cone
from .core import (
    SetPartition,
    Subset,
    Transformation,
    canonical_idempotent,
    enumerate_partitions,
    enumerate_singular,
    factorization_idempotents,
    image,
    image_set,
    in_sandwich,
    kernel,
    refines,
    translations,
)


@dataclass(frozen=True)
class SetMorphism:
    source: Subset
    target: Subset
    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) != len(self.source):
            raise ValueError("function table must be total on the source")
        if any(v not in self.target for v in values):
            raise ValueError("function value outside the target")
        object.__setattr__(self, "values", values)

    def __call__(self, x):
        return self.values[self.source.positions[x]]

    def encode(self):
        return {"source": self.source.encode(), "target": self.target.encode(), "map": list(self.values)}


def powerset_objects(n):
    """Non-empty proper subsets of {0..n-1}, by size and then lexicographically."""
    if n < 2:
        raise ValueError("need at least two points")
    out = []
    for size in range(1, n):
        for bits in product((0, 1), repeat=n):
            if sum(bits) == size:
                out.append(Subset(n, [x for x in range(n) if bits[x]]))
    return sorted(out, key=lambda s: (len(s), s.members))


def compose_set_morphisms(f, g):
    if f.target != g.source:
        raise ValueError("morphisms are not composable")
    return SetMorphism(f.source, g.target, tuple(g(y) for y in f.values))


def set_inclusion(a, b):
    if not a.issubset(b):
        raise NotASubobjectError(f"{a.members} is not contained in {b.members}")
    return SetMorphism(a, b, a.members)


def normal_factorize_set(f, policy="min"):
    """Collapse each fiber of ``f`` to one representative, biject onto the image, include.

    ``policy`` picks the fiber minimum or maximum as representative.
    """
    pick = {"min": min, "max": max}[policy]
    fibers = {}
    for x, y in zip(f.source.members, f.values):
        fibers.setdefault(y, []).append(x)
    reps = {y: pick(xs) for y, xs in fibers.items()}
    small = Subset(f.source.n, reps.values())
    im = Subset(f.source.n, fibers)
    ret = SetMorphism(f.source, small, tuple(reps[y] for y in f.values))
    iso = SetMorphism(small, im, tuple(f(x) for x in small.members))
    inc = set_inclusion(im, f.target)
    return NormalFactorization(ret, iso, inc, compose_set_morphisms(ret, iso))


def restrict(a, source, target):
    return SetMorphism(source, target, tuple(a(x) for x in source.members))


class PowersetCategory(FiniteCategory):
    name = "power-set category"

    def __init__(self, n):
        self.n = n
        super().__init__(powerset_objects(n))

    def _hom(self, c, d):
        return [SetMorphism(c, d, vals) for vals in product(d.members, repeat=len(c))]

    def hom_size(self, c, d):
        return len(d) ** len(c)

    def compose(self, f, g):
        return compose_set_morphisms(f, g)

    def identity(self, c):
        return SetMorphism(c, c, c.members)

    def leq(self, c, d):
        return c.issubset(d)

    def inclusion(self, c, d):
        return set_inclusion(c, d)

    def factorize(self, f, policy="min"):
        return normal_factorize_set(f, policy)

    def identity_cone(self, c):
        e = Transformation(tuple(x if x in c else c.members[0] for x in range(self.n)))
        return principal_cone(self, e)


def principal_cone(C, a):
    """Cone with vertex Im a whose component at A is the restriction of ``a`` to A."""
    vertex = image(a)
    return make_cone(C, vertex, [restrict(a, A, vertex) for A in C.objects])


def transformation_of_cone(gamma):
    """Read a cone of the power-set category back as the map x -> gamma({x})(x)."""
    n = gamma.vertex.n
    return Transformation(tuple(gamma[Subset(n, (x,))](x) for x in range(n)))


@dataclass(frozen=True)
class HFunctor:
    """H(e; -) for any idempotent ``e`` with the given kernel."""

    kernel: SetPartition

    def __post_init__(self):
        if self.kernel.is_identity:
            raise ValueError("H-functors need a non-identity kernel")

    @cached_property
    def representative(self):
        return canonical_idempotent(self.kernel)

    @classmethod
    def of(cls, e):
        return cls(kernel(e))

    def encode(self):
        return self.kernel.encode()


def h_object(h, A):
    """H(e; A): singular maps whose kernel contains ker e and whose image lies in A."""
    allowed = set(A.members)
    return frozenset(
        a for a in enumerate_singular(h.kernel.n)
        if refines(h.kernel, kernel(a)) and image_set(a) <= allowed
    )


def h_morphism(h, g):
    """Action of H(e; g) for g: A -> B: post-compose each member with g."""
    return {a: Transformation(tuple(g(y) for y in a.images)) for a in h_object(h, g.source)}


def h_equal(h1, h2):
    return h1.kernel == h2.kernel


def h_extensionally_equal(h1, h2, objects):
    return all(h_object(h1, A) == h_object(h2, A) for A in objects)


def h_set_dump(h, A):
    return {
        "kernel": h.kernel.encode(),
        "subset": A.encode(),
        "members": sorted(a.encode() for a in h_object(h, A)),
    }


def dual_objects(n):
    return [HFunctor(k) for k in enumerate_partitions(n, non_identity_only=True)]


@dataclass(frozen=True)
class DualMorphism:
    """Natural transformation H(e) -> H(f), a -> v a, stored with its normalized hat ``v``."""

    source: HFunctor
    target: HFunctor
    hat: Transformation

    def encode(self):
        return {"source": self.source.encode(), "target": self.target.encode(), "hat": self.hat.encode()}


def dual_morphism(e, v, f):
    """The natural transformation H(e) -> H(f) with hat ``v``, which must lie in f T_X e."""
    if not in_sandwich(v, f, e):
        raise ValueError(f"{v} is not in f T_X e")
    src = HFunctor(kernel(e))
    return DualMorphism(src, HFunctor(kernel(f)), v * src.representative)


def dual_morphism_apply(m, C):
    """Component at C: a -> v a, i.e. x -> a(v(x))."""
    v = m.hat
    return {a: v * a for a in h_object(m.source, C)}


def natural_transformations_equal(m1, m2, objects):
    return (m1.source, m1.target) == (m2.source, m2.target) and all(
        dual_morphism_apply(m1, C) == dual_morphism_apply(m2, C) for C in objects
    )


def dual_inclusion_test(m):
    """True iff the transformation is an inclusion of functors: e = f v for the representatives."""
    e, f = m.source.representative, m.target.representative
    return e == f * m.hat


def is_identity_component(m, C):
    return all(a == b for a, b in dual_morphism_apply(m, C).items())


def dual_compose(m1, m2):
    """m1 then m2; the hat is (hat of m2)(hat of m1) in left-to-right order."""
    if m1.target != m2.source:
        raise ValueError("dual morphisms are not composable")
    return DualMorphism(m1.source, m2.target, m2.hat * m1.hat * m1.source.representative)


class DualCategory(FiniteCategory):
    """The normal dual of the power-set category, with the order of functor inclusion."""

    name = "normal dual"

    def __init__(self, n):
        self.n = n
        self.subsets = powerset_objects(n)
        super().__init__(dual_objects(n))
        self._sets = {(h, A): h_object(h, A) for h in self.objects for A in self.subsets}

    def _hom(self, c, d):
        return [DualMorphism(c, d, v) for v in translations(c.kernel, d.kernel)]

    def hom_size(self, c, d):
        return len(c.kernel.blocks) ** len(d.kernel.blocks)

    def compose(self, f, g):
        return dual_compose(f, g)

    def identity(self, c):
        return DualMorphism(c, c, c.representative)

    def leq(self, c, d):
        return all(self._sets[c, A] <= self._sets[d, A] for A in self.subsets)

    def inclusion(self, c, d):
        if not self.leq(c, d):
            raise NotASubobjectError("H-functor is not contained in the other")
        return DualMorphism(c, d, c.representative)

    def factorize(self, m, policy="min"):
        e, v = m.source.representative, m.hat
        g, h = factorization_idempotents(e, v, policy)
        ret = dual_morphism(e, g, g)
        iso = dual_morphism(g, v, h)
        inc = self.inclusion(HFunctor(kernel(h)), m.target)
        return NormalFactorization(ret, iso, inc, dual_compose(ret, iso))

    def identity_cone(self, c):
        e = c.representative
        return make_cone(self, c, [DualMorphism(d, c, e * d.representative) for d in self.objects])

    def h_object(self, h, A):
        return self._sets[h, A]
