"""The partition category.

Objects are non-identity partitions ``p`` of {0..n-1}, standing for the set of
functions from the blocks of ``p`` into X. A morphism ``p1 -> p2`` is carried
by a block map ``eta: blocks(p2) -> blocks(p1)`` and acts on those functions by
precomposition, ``alpha -> eta then alpha``. Hence ``p1 <= p2`` exactly when
``p2`` refines ``p1``.
"""

from dataclasses import dataclass
from itertools import product

from .category import FiniteCategory, NormalFactorization, NotASubobjectError, make_cone
from .core import SetPartition, SizeMismatchError, enumerate_partitions, refines


@dataclass(frozen=True)
class PartitionMorphism:
    source: SetPartition
    target: SetPartition
    eta: tuple

    def __post_init__(self):
        eta = tuple(self.eta)
        if len(eta) != len(self.target.blocks):
            raise ValueError("block map must have one entry per target block")
        if any(not 0 <= i < len(self.source.blocks) for i in eta):
            raise ValueError("block map entry out of range")
        object.__setattr__(self, "eta", eta)

    def encode(self):
        return {"source": self.source.encode(), "target": self.target.encode(), "eta": list(self.eta)}

    def act(self, alpha):
        """Image of a function alpha (tuple indexed by source blocks) under precomposition."""
        return tuple(alpha[i] for i in self.eta)


def object_leq(a, b):
    if a.n != b.n:
        raise SizeMismatchError(f"partitions on {a.n} and {b.n} points")
    return refines(b, a)


def compose_morphisms(f, g):
    if f.target != g.source:
        raise ValueError("morphisms are not composable")
    return _trusted(f.source, g.target, tuple(f.eta[j] for j in g.eta))


def _trusted(source, target, eta):
    # composites of valid morphisms are valid, so skip the constructor checks
    m = object.__new__(PartitionMorphism)
    object.__setattr__(m, "source", source)
    object.__setattr__(m, "target", target)
    object.__setattr__(m, "eta", eta)
    return m


def identity_morphism(p):
    return PartitionMorphism(p, p, tuple(range(len(p.blocks))))


def hom(a, b):
    return [PartitionMorphism(a, b, eta) for eta in product(range(len(a.blocks)), repeat=len(b.blocks))]


def inclusion(a, b):
    if not object_leq(a, b):
        raise NotASubobjectError(f"{a} is not below {b}")
    return PartitionMorphism(a, b, tuple(a.labels[blk[0]] for blk in b.blocks))


def retraction(a, b):
    """Retraction b -> a for a <= b: each block of a goes to the block of b holding its minimum."""
    if not object_leq(a, b):
        raise NotASubobjectError(f"{a} is not below {b}")
    return PartitionMorphism(b, a, tuple(b.labels[blk[0]] for blk in a.blocks))


def is_isomorphism(f):
    return len(f.eta) == len(f.source.blocks) and len(set(f.eta)) == len(f.eta)


def is_inclusion(f):
    return object_leq(f.source, f.target) and f == inclusion(f.source, f.target)


def normal_factorize(f, policy="min"):
    """Split ``f`` as retraction, isomorphism, inclusion.

    The middle object merges the blocks of the target that ``eta`` sends to
    the same place; the first object absorbs every block of the source missed
    by ``eta`` into one distinguished hit block (the hit block of least minimum
    under ``policy="min"``, of greatest minimum under ``"max"``).
    """
    p1, p2, eta = f.source, f.target, f.eta
    n = p1.n
    merged = SetPartition.from_labels([eta[p2.labels[x]] for x in range(n)])
    hit = sorted(set(eta))
    if policy == "min":
        anchor = hit[0]
    elif policy == "max":
        anchor = hit[-1]
    else:
        raise ValueError(f"unknown policy {policy!r}")
    missed = [x for i, blk in enumerate(p1.blocks) if i not in hit for x in blk]
    coarse_blocks = [p1.blocks[i] + (tuple(missed) if i == anchor else ()) for i in hit]
    coarse = SetPartition(n, coarse_blocks)
    zeta = [None] * len(coarse.blocks)
    for i in hit:
        zeta[coarse.labels[p1.blocks[i][0]]] = i
    ret = PartitionMorphism(p1, coarse, zeta)
    u = tuple(coarse.labels[p1.blocks[eta[p2.labels[blk[0]]]][0]] for blk in merged.blocks)
    iso = PartitionMorphism(coarse, merged, u)
    inc = inclusion(merged, p2)
    return NormalFactorization(ret, iso, inc, compose_morphisms(ret, iso))


def identity_cone_at(C, p):
    """Normal cone with vertex ``p`` whose component at ``p`` is the identity.

    The component at ``q`` sends each block of ``p`` to the block of ``q``
    containing its minimum element.
    """
    comps = [PartitionMorphism(q, p, tuple(q.labels[blk[0]] for blk in p.blocks)) for q in C.objects]
    return make_cone(C, p, comps)


class PartitionCategory(FiniteCategory):
    name = "partition category"

    def __init__(self, n):
        self.n = n
        super().__init__(enumerate_partitions(n, non_identity_only=True))

    def _hom(self, c, d):
        return hom(c, d)

    def hom_size(self, c, d):
        return len(c.blocks) ** len(d.blocks)

    def compose(self, f, g):
        return compose_morphisms(f, g)

    def identity(self, c):
        return identity_morphism(c)

    def leq(self, c, d):
        return object_leq(c, d)

    def inclusion(self, c, d):
        return inclusion(c, d)

    def retraction(self, c, d):
        return retraction(c, d)

    def factorize(self, f, policy="min"):
        return normal_factorize(f, policy)

    def identity_cone(self, c):
        return identity_cone_at(self, c)


def functions_on_blocks(p):
    """The elements of the object ``p``: all functions from blocks of p into X, as tuples."""
    return list(product(range(p.n), repeat=len(p.blocks)))


def as_point_map(p, alpha):
    """The map X -> X that sends x to alpha of the block containing x."""
    return tuple(alpha[p.labels[x]] for x in range(p.n))
