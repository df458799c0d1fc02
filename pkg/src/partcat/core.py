"""Finite combinatorics over the base set {0, ..., n-1}.

Partitions, transformations (composed left to right: ``x(st) = (xs)t``),
kernels, images, idempotents and Green's L/R relations of the semigroup T_X
of non-invertible self-maps.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import comb, prod


class InvalidSizeError(ValueError):
    pass


class SizeMismatchError(ValueError):
    pass


class NotSingularError(ValueError):
    pass


class CrossSectionError(ValueError):
    pass


def _check_size(n, minimum=2):
    if not isinstance(n, int) or n < minimum:
        raise InvalidSizeError(f"base set size must be an integer >= {minimum}, got {n!r}")


@dataclass(frozen=True)
class SetPartition:
    """A partition of {0, ..., n-1}, kept in canonical form.

    Blocks are sorted internally and ordered by their minimum element, so two
    partitions are equal exactly when they describe the same equivalence.
    """

    n: int
    blocks: tuple
    labels: tuple = field(init=False, repr=False, compare=False)
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else -1))
        labels = [None] * self.n
        for i, block in enumerate(blocks):
            if not block:
                raise ValueError("partition blocks must be non-empty")
            for x in block:
                if not 0 <= x < self.n:
                    raise ValueError(f"element {x} outside base set of size {self.n}")
                if labels[x] is not None:
                    raise ValueError(f"element {x} occurs in two blocks")
                labels[x] = i
        if None in labels:
            raise ValueError("blocks do not cover the base set")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "_hash", hash((self.n, blocks)))

    def __hash__(self):
        return self._hash

    @classmethod
    def from_labels(cls, labels):
        """Partition whose blocks are the fibers of ``labels`` (any hashables)."""
        fibers = {}
        for x, key in enumerate(labels):
            fibers.setdefault(key, []).append(x)
        return cls(len(labels), tuple(fibers.values()))

    def __len__(self):
        return len(self.blocks)

    def block_of(self, x):
        return self.blocks[self.labels[x]]

    @property
    def is_identity(self):
        return len(self.blocks) == self.n

    @property
    def rgs(self):
        """Restricted-growth string; equal to ``labels`` because of canonical order."""
        return self.labels

    def encode(self):
        return [list(b) for b in self.blocks]

    def __str__(self):
        return "|".join("".join(map(str, b)) if self.n <= 10 else ",".join(map(str, b)) for b in self.blocks)


def canonicalize(p):
    return SetPartition(p.n, p.blocks)


def _restricted_growth_strings(n):
    def extend(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(top + 2):
            prefix.append(v)
            yield from extend(prefix, max(top, v))
            prefix.pop()

    yield from extend([0], 0)


def enumerate_partitions(n, non_identity_only=False):
    """All partitions of {0..n-1}, lexicographic in restricted-growth order."""
    _check_size(n)
    parts = (SetPartition.from_labels(s) for s in _restricted_growth_strings(n))
    return [p for p in parts if not (non_identity_only and p.is_identity)]


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def refines(p, q):
    """True iff every block of ``p`` lies inside a block of ``q`` (p is contained in q as relations)."""
    if p.n != q.n:
        raise SizeMismatchError(f"partitions on {p.n} and {q.n} points")
    return all(len({q.labels[x] for x in block}) == 1 for block in p.blocks)


@dataclass(frozen=True)
class Subset:
    n: int
    members: tuple
    positions: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        if not members:
            raise ValueError("subset must be non-empty")
        if len(members) == self.n:
            raise ValueError("subset must be proper")
        if members[0] < 0 or members[-1] >= self.n:
            raise ValueError(f"members outside base set of size {self.n}")
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "positions", {x: i for i, x in enumerate(members)})

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return x in self.positions

    def issubset(self, other):
        return all(x in other.positions for x in self.members)

    def encode(self):
        return list(self.members)


@dataclass(frozen=True)
class Transformation:
    """A self-map of {0..n-1}; ``images[x]`` is the image of x.

    ``s * t`` is the left-to-right product: apply s, then t.
    """

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        n = len(images)
        if n == 0 or any(not 0 <= y < n for y in images):
            raise ValueError(f"not a self-map of a {n}-point set: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        return compose(self, other)

    @property
    def is_singular(self):
        return len(set(self.images)) < len(self.images)

    @property
    def is_idempotent(self):
        return all(self.images[y] == y for y in self.images)

    def encode(self):
        return list(self.images)

    def __repr__(self):
        return f"Transformation({list(self.images)})"


def compose(s, t):
    """Left-to-right product ``st``: x -> (x s) t."""
    if s.n != t.n:
        raise SizeMismatchError(f"transformations on {s.n} and {t.n} points")
    ti = t.images
    return Transformation(tuple(ti[y] for y in s.images))


def constant(n, k):
    return Transformation((k,) * n)


def identity_map(n):
    return Transformation(tuple(range(n)))


@lru_cache(maxsize=None)
def kernel(t):
    return SetPartition.from_labels(t.images)


@lru_cache(maxsize=None)
def image(t):
    if not t.is_singular:
        raise NotSingularError(f"{t} is a bijection, not an element of T_X")
    return Subset(t.n, t.images)


def image_set(t):
    """Image as a frozenset; defined for any self-map."""
    return frozenset(t.images)


@lru_cache(maxsize=None)
def enumerate_singular(n):
    """All n^n - n! non-bijective self-maps, in lexicographic order of image tuples."""
    _check_size(n)
    out = []
    for images in product(range(n), repeat=n):
        if len(set(images)) < n:
            out.append(Transformation(images))
    return tuple(out)


def all_self_maps(n):
    return (Transformation(images) for images in product(range(n), repeat=n))


def cross_sections(p):
    return [Subset(p.n, choice) for choice in product(*p.blocks)]


def min_cross_section(p):
    return Subset(p.n, tuple(b[0] for b in p.blocks))


def is_cross_section(p, members):
    members = list(members)
    return len(members) == len(p.blocks) and len({p.labels[x] for x in members}) == len(p.blocks)


def idempotent_from(p, cross_section):
    members = cross_section.members if isinstance(cross_section, Subset) else tuple(cross_section)
    if not is_cross_section(p, members):
        raise CrossSectionError(f"{members} is not a cross-section of {p.encode()}")
    rep = {p.labels[a]: a for a in members}
    return Transformation(tuple(rep[p.labels[x]] for x in range(p.n)))


def canonical_idempotent(p):
    """Idempotent with kernel ``p`` sending each block to its minimum."""
    return idempotent_from(p, min_cross_section(p))


@lru_cache(maxsize=None)
def idempotents(n):
    return tuple(t for t in enumerate_singular(n) if t.is_idempotent)


def idempotent_count_formula(n):
    """Number of idempotent self-maps (including the identity)."""
    return sum(comb(n, k) * k ** (n - k) for k in range(1, n + 1))


def green_R(a, b):
    return kernel(a) == kernel(b)


def green_L(a, b):
    return image_set(a) == image_set(b)


@lru_cache(maxsize=None)
def _multiples(a, side):
    """First witness eps (in enumeration order) for each product a*eps or eps*a."""
    out = {}
    for eps in all_self_maps(a.n):
        out.setdefault(a * eps if side == "right" else eps * a, eps)
    return out


def divides_left_oracle(a, b):
    """Some self-map eps with ``a * eps == b``, by exhaustive search, else None."""
    return _multiples(a, "right").get(b)


def divides_right_oracle(a, b):
    """Some self-map eps with ``eps * a == b``, by exhaustive search, else None."""
    return _multiples(a, "left").get(b)


def in_sandwich(v, f, e):
    """Membership ``v in f S e`` for S = T_X: kernel(f) refines kernel(v) and Im v inside Im e."""
    return refines(kernel(f), kernel(v)) and image_set(v) <= image_set(e)


def sandwich(f, e):
    """All elements of ``f T_X e``, by filtering T_X."""
    return [v for v in enumerate_singular(e.n) if in_sandwich(v, f, e)]


def translations(src, tgt):
    """Normalized carriers ``v`` with kernel(tgt) refining kernel(v) and Im v in the min cross-section of src.

    These are exactly the elements of ``f T_X e`` for the canonical idempotents
    e, f of ``src`` and ``tgt``; one per block map ``tgt -> src``.
    """
    targets = [b[0] for b in src.blocks]
    out = []
    for choice in product(targets, repeat=len(tgt.blocks)):
        out.append(Transformation(tuple(choice[tgt.labels[x]] for x in range(tgt.n))))
    return out


def factorization_idempotents(e, v, policy="min"):
    """Idempotents (g, h) with g L v, g below e, and h R v.

    ``policy`` picks the lexicographically least ("min") or greatest ("max")
    candidate; both give the same epimorphic part.
    """
    pool = idempotents(e.n)
    if policy == "max":
        pool = pool[::-1]
    elif policy != "min":
        raise ValueError(f"unknown policy {policy!r}")
    im_v = image_set(v)
    g = next((g for g in pool if image_set(g) == im_v and g * e == g and e * g == g), None)
    h = next((h for h in pool if kernel(h) == kernel(v)), None)
    assert g is not None and h is not None, f"no factorization idempotents for {v} over {e}"
    return g, h


def count_singular(n):
    return n ** n - prod(range(1, n + 1))

