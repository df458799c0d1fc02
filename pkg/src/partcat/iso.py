"""Functors between the three normal categories, materialized as tables and audited.

G sends the right ideal eS to the partition ker e and the translation by v to
the block map "block of x under f  ->  block of xv under e". P does the same
from the normal dual; Q goes back from partitions to H-functors.
"""

from dataclasses import dataclass, field
from itertools import product

from .category import Check, CheckReport
from .core import (
    Transformation,
    enumerate_singular,
    idempotents,
    image_set,
    in_sandwich,
    kernel,
)
from .partition import PartitionCategory, PartitionMorphism
from .powerset import DualCategory, DualMorphism, HFunctor, dual_morphism
from .right_ideal import RightIdealCategory, lambda_from


def eta_from_carrier(e, v, f):
    """Block map ker f -> ker e: the block of x in Im f goes to the block of xv."""
    if not in_sandwich(v, f, e):
        raise ValueError(f"{v} is not in f S e")
    pf, pe = kernel(f), kernel(e)
    eta = [None] * len(pf.blocks)
    for x in sorted(image_set(f)):
        eta[pf.labels[x]] = pe.labels[v(x)]
    return tuple(eta)


def carrier_from_eta(eta, e, f):
    """The induced v in f S e with ``eta_from_carrier(e, v, f) == eta``.

    v sends y to the point of Im e lying in the block eta assigns to the
    block of y f.
    """
    pf, pe = kernel(f), kernel(e)
    if len(eta) != len(pf.blocks) or any(not 0 <= i < len(pe.blocks) for i in eta):
        raise ValueError("block map does not match the kernels")
    rep = {pe.labels[a]: a for a in image_set(e)}
    return Transformation(tuple(rep[eta[pf.labels[f(y)]]] for y in range(f.n)))


@dataclass
class FunctorWitness:
    """A functor written out as finite tables.

    ``raw`` optionally lists (description, canonical source morphism, image
    computed straight from the raw description) for the well-definedness audit.
    """

    name: str
    source: object
    target: object
    object_map: dict
    morphism_map: dict
    raw: list = field(default_factory=list)


def _raw_sandwiches(n):
    """All (e, v, f) with e, f idempotent and v in f S e."""
    singular = enumerate_singular(n)
    out = []
    for e in idempotents(n):
        for f in idempotents(n):
            for v in singular:
                if in_sandwich(v, f, e):
                    out.append((e, v, f))
    return out


def functor_G(n, raw=True):
    src, tgt = RightIdealCategory(n), PartitionCategory(n)
    objects = {c: c.kernel for c in src.objects}
    morphisms = {}
    for m in src.morphisms():
        e, f = m.source.representative, m.target.representative
        morphisms[m] = PartitionMorphism(m.source.kernel, m.target.kernel, eta_from_carrier(e, m.carrier, f))
    entries = []
    if raw:
        for e, v, f in _raw_sandwiches(n):
            image = PartitionMorphism(kernel(e), kernel(f), eta_from_carrier(e, v, f))
            entries.append(((e, v, f), lambda_from(e, v, f), image))
    return FunctorWitness("G", src, tgt, objects, morphisms, entries)


def functor_P(n, raw=True, source=None, target=None):
    src = source or DualCategory(n)
    tgt = target or PartitionCategory(n)
    objects = {h: h.kernel for h in src.objects}
    morphisms = {}
    for m in src.morphisms():
        e, f = m.source.representative, m.target.representative
        morphisms[m] = PartitionMorphism(m.source.kernel, m.target.kernel, eta_from_carrier(e, m.hat, f))
    entries = []
    if raw:
        for e, v, f in _raw_sandwiches(n):
            image = PartitionMorphism(kernel(e), kernel(f), eta_from_carrier(e, v, f))
            entries.append(((e, v, f), dual_morphism(e, v, f), image))
    return FunctorWitness("P", src, tgt, objects, morphisms, entries)


def functor_Q(n, source=None, target=None):
    src = source or PartitionCategory(n)
    tgt = target or DualCategory(n)
    objects = {p: HFunctor(p) for p in src.objects}
    morphisms = {}
    for m in src.morphisms():
        hs, ht = objects[m.source], objects[m.target]
        v = carrier_from_eta(m.eta, hs.representative, ht.representative)
        morphisms[m] = DualMorphism(hs, ht, v)
    return FunctorWitness("Q", src, tgt, objects, morphisms)


def _audit(name, items, pred):
    n = 0
    for item in items:
        n += 1
        if not pred(item):
            return Check(name, False, n, item)
    return Check(name, True, n)


def verify_functor(w):
    """Audit a functor table: well-definedness, functoriality, inclusions and the four isomorphism clauses."""
    S, T, F, Fm = w.source, w.target, w.object_map, w.morphism_map
    report = CheckReport(f"functor {w.name}")
    t_objects = set(T.objects)

    def well_defined(m):
        if m not in Fm:
            return False
        img = Fm[m]
        return img.source == F[m.source] and img.target == F[m.target] and img in T.hom(F[m.source], F[m.target])

    check = _audit("well-defined", S.morphisms(), well_defined)
    if check.passed:
        check = _audit("well-defined", [c for c in S.objects], lambda c: c in F and F[c] in t_objects)
    if check.passed and w.raw:
        check = _audit("well-defined", w.raw, lambda r: Fm.get(r[1]) == r[2])
        check.count += len(Fm)
    report.checks.append(check)
    report.checks.append(_audit(
        "preserves identities", S.objects, lambda c: Fm[S.identity(c)] == T.identity(F[c])
    ))

    def composable():
        for a, b, c in product(S.objects, repeat=3):
            for f in S.hom(a, b):
                for g in S.hom(b, c):
                    yield f, g

    report.checks.append(_audit(
        "preserves composition", composable(),
        lambda p: Fm[S.compose(*p)] == T.compose(Fm[p[0]], Fm[p[1]]),
    ))
    comparable = [(a, b) for a, b in product(S.objects, repeat=2) if S.leq(a, b)]
    report.checks.append(_audit(
        "preserves inclusions", comparable,
        lambda p: T.leq(F[p[0]], F[p[1]]) and Fm[S.inclusion(*p)] == T.inclusion(F[p[0]], F[p[1]]),
    ))
    images = [F[c] for c in S.objects]
    report.checks.append(Check(
        "v-injective", len(set(images)) == len(images), len(images),
        None if len(set(images)) == len(images) else images,
    ))
    missing = [d for d in T.objects if d not in set(images)]
    report.checks.append(Check("v-surjective", not missing, len(T.objects), missing[0] if missing else None))
    pairs = list(product(S.objects, repeat=2))
    report.checks.append(_audit(
        "full", pairs,
        lambda p: {Fm[m] for m in S.hom(*p)} == set(T.hom(F[p[0]], F[p[1]])),
    ))
    report.checks.append(_audit(
        "faithful", pairs,
        lambda p: len({Fm[m] for m in S.hom(*p)}) == len(S.hom(*p)),
    ))
    report.checks.append(_audit(
        "order isomorphism", pairs, lambda p: S.leq(*p) == T.leq(F[p[0]], F[p[1]])
    ))
    return report


def composite_is_identity(first, second):
    """Check that ``first`` followed by ``second`` is the identity functor on first's source."""
    S = first.source
    objs = all(second.object_map[first.object_map[c]] == c for c in S.objects)
    bad = next((m for m in S.morphisms() if second.morphism_map[first.morphism_map[m]] != m), None)
    return Check(
        f"{second.name} after {first.name} is the identity",
        objs and bad is None,
        len(S.objects) + len(first.morphism_map),
        bad,
    )


def check_factorization_transport(w):
    """The epimorphic part computed in the source, pushed through the functor, matches the target's own."""
    S, T, Fm = w.source, w.target, w.morphism_map
    return _audit(
        f"{w.name} transports epimorphic parts",
        S.morphisms(),
        lambda m: Fm[S.epimorphic_part(m)] == T.epimorphic_part(Fm[m])
        and Fm[S.factorize(m).inclusion] == T.factorize(Fm[m]).inclusion,
    )


def hom_cardinalities_match(w):
    S, T, F = w.source, w.target, w.object_map
    return _audit(
        f"{w.name} hom-set sizes agree",
        list(product(S.objects, repeat=2)),
        lambda p: len(S.hom(*p)) == len(T.hom(F[p[0]], F[p[1]])),
    )
