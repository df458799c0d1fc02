"""Finite categories with subobjects, normal factorizations and normal cones.

Composition is diagrammatic throughout: ``C.compose(f, g)`` is "f, then g"
and needs ``f.target == g.source``. Morphisms are hashable values carrying
``source`` and ``target`` attributes; hom-sets are materialized on first use.
"""

from dataclasses import dataclass, field
from itertools import product
from math import prod

import numpy as np


class CategoryError(Exception):
    pass


class NotASubobjectError(CategoryError):
    pass


class CategoryNotNormalError(CategoryError):
    pass


class MalformedConeError(CategoryError):
    pass


class PreconditionError(CategoryError):
    pass


class ResourceBoundError(CategoryError):
    pass


@dataclass(frozen=True)
class NormalFactorization:
    retraction: object
    isomorphism: object
    inclusion: object
    epimorphic_part: object


@dataclass
class Check:
    """Outcome of one exhaustive check; ``counterexample`` holds the first failure."""

    name: str
    passed: bool
    count: int = 0
    counterexample: object = None

    def __bool__(self):
        return self.passed


@dataclass
class CheckReport:
    title: str
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self):
        return [c for c in self.checks if not c.passed]


class FiniteCategory:
    """Base class for an extensionally materialized finite category with subobjects.

    Subclasses provide ``_hom``, ``compose``, ``identity``, ``leq`` and
    ``inclusion``; normal categories also provide ``factorize`` and
    ``identity_cone``.
    """

    name = "category"

    def __init__(self, objects):
        self.objects = tuple(objects)
        self.index = {c: i for i, c in enumerate(self.objects)}
        self._homs = {}
        self._epi = {}
        self._iso = {}
        self._fo = {}

    def _hom(self, c, d):
        raise NotImplementedError

    def hom(self, c, d):
        key = (c, d)
        if key not in self._homs:
            self._homs[key] = tuple(self._hom(c, d))
        return self._homs[key]

    def hom_size(self, c, d):
        return len(self.hom(c, d))

    def morphisms(self):
        for c in self.objects:
            for d in self.objects:
                yield from self.hom(c, d)

    def compose(self, f, g):
        raise NotImplementedError

    def identity(self, c):
        raise NotImplementedError

    def leq(self, c, d):
        raise NotImplementedError

    def inclusion(self, c, d):
        raise NotImplementedError

    def factorize(self, f, policy="min"):
        raise CategoryNotNormalError(f"{self.name} supplies no normal factorization")

    def identity_cone(self, c):
        raise NotImplementedError(f"{self.name} supplies no identity cone")

    def is_inclusion(self, f):
        return self.leq(f.source, f.target) and f == self.inclusion(f.source, f.target)

    def is_mono(self, f):
        c = f.source
        for a in self.objects:
            seen = {}
            for g in self.hom(a, c):
                k = self.compose(g, f)
                if k in seen:
                    return False
                seen[k] = g
        return True

    def is_epi(self, f):
        if f not in self._epi:
            d = f.target
            ok = True
            for b in self.objects:
                images = [self.compose(f, g) for g in self.hom(d, b)]
                if len(set(images)) != len(images):
                    ok = False
                    break
            self._epi[f] = ok
        return self._epi[f]

    def inverse(self, f):
        if f not in self._iso:
            one_c, one_d = self.identity(f.source), self.identity(f.target)
            self._iso[f] = next(
                (g for g in self.hom(f.target, f.source)
                 if self.compose(f, g) == one_c and self.compose(g, f) == one_d),
                None,
            )
        return self._iso[f]

    def is_iso(self, f):
        return self.inverse(f) is not None

    def is_retraction(self, e):
        c, d = e.target, e.source
        if not self.leq(c, d):
            return False
        return self.compose(self.inclusion(c, d), e) == self.identity(c)

    def epimorphic_part(self, f):
        if f not in self._fo:
            self._fo[f] = self.factorize(f).epimorphic_part
        return self._fo[f]


def epimorphic_part(C, f):
    return C.epimorphic_part(f)


def check_factorization(C, f, nf):
    """Problems with a proposed normal factorization of ``f`` (empty list when valid)."""
    problems = []
    e, u, j = nf.retraction, nf.isomorphism, nf.inclusion
    if e.source != f.source or j.target != f.target or e.target != u.source or u.target != j.source:
        return ["factors do not chain"]
    if C.compose(C.compose(e, u), j) != f:
        problems.append("recomposition differs")
    if not C.is_retraction(e):
        problems.append("first factor is not a retraction")
    if not C.is_iso(u):
        problems.append("middle factor is not an isomorphism")
    if not C.is_inclusion(j):
        problems.append("last factor is not an inclusion")
    if nf.epimorphic_part != C.compose(e, u):
        problems.append("epimorphic part is not retraction then isomorphism")
    return problems


def _check(name, items, pred):
    n, bad = 0, None
    for item in items:
        n += 1
        if not pred(item):
            bad = item
            break
    return Check(name, bad is None, n, bad)


def composition_tables(C):
    """Index tables ``T[a, b, c][i, j]`` = index in hom(a, c) of hom(a,b)[i] then hom(b,c)[j]."""
    pos = {}
    for a in C.objects:
        for c in C.objects:
            pos[a, c] = {m: i for i, m in enumerate(C.hom(a, c))}
    tables = {}
    for a, b, c in product(C.objects, repeat=3):
        left, right = C.hom(a, b), C.hom(b, c)
        lookup = pos[a, c]
        t = np.empty((len(left), len(right)), dtype=np.int64)
        for i, f in enumerate(left):
            for j, g in enumerate(right):
                t[i, j] = lookup[C.compose(f, g)]
        tables[a, b, c] = t
    return tables


def check_associativity(C, tables=None):
    tables = tables or composition_tables(C)
    objs = C.objects
    # global index of hom(x, d) inside the concatenation of hom(x, -) over all d
    offset = {}
    for x in objs:
        total = 0
        for d in objs:
            offset[x, d] = total
            total += C.hom_size(x, d)

    def row(x, y):
        """Tables [x, y, d] for every d, side by side, with values made global in hom(x, -)."""
        return np.concatenate([tables[x, y, d] + offset[x, d] for d in objs], axis=1)

    count = 0
    for a, b, c in product(objs, repeat=3):
        abc = tables[a, b, c]
        if abc.size == 0:
            continue
        acd, bcd, abd = row(a, c), row(b, c), row(a, b)
        if bcd.shape[1] == 0:
            continue
        # (f g) h against f (g h), for every d at once
        left = acd[abc[:, :, None], np.arange(acd.shape[1])[None, None, :]]
        right = abd[np.arange(abd.shape[0])[:, None, None], bcd[None, :, :]]
        count += left.size
        if not np.array_equal(left, right):
            i, j, k = map(int, np.argwhere(left != right)[0])
            d = next(d for d in objs if offset[c, d] <= k < offset[c, d] + C.hom_size(c, d))
            h = C.hom(c, d)[k - offset[c, d]]
            return Check("associativity", False, count, (C.hom(a, b)[i], C.hom(b, c)[j], h))
    return Check("associativity", True, count)


def check_category_with_subobjects(C, associativity=True):
    """Exhaustively verify the category laws and the three subobject axioms."""
    report = CheckReport(f"{C.name}: category with subobjects")
    objs = C.objects
    tables = composition_tables(C) if associativity else None

    def units(f):
        return C.compose(C.identity(f.source), f) == f and C.compose(f, C.identity(f.target)) == f

    report.checks.append(_check("identity laws", C.morphisms(), units))
    if associativity:
        report.checks.append(check_associativity(C, tables))
    pairs = list(product(objs, repeat=2))
    report.checks.append(_check(
        "order is a partial order",
        product(objs, repeat=3),
        lambda t: C.leq(t[0], t[0])
        and (not (C.leq(t[0], t[1]) and C.leq(t[1], t[0])) or t[0] == t[1])
        and (not (C.leq(t[0], t[1]) and C.leq(t[1], t[2])) or C.leq(t[0], t[2])),
    ))

    def one_inclusion(p):
        c, d = p
        flagged = [f for f in C.hom(c, d) if C.is_inclusion(f)]
        return len(flagged) == (1 if C.leq(c, d) else 0)

    report.checks.append(_check("strict preorder of inclusions", pairs, one_inclusion))
    comparable = [(c, d) for c, d in pairs if C.leq(c, d)]
    report.checks.append(_check(
        "inclusions form a subcategory",
        [(c, d, e) for c, d in comparable for e in objs if C.leq(d, e)],
        lambda t: C.compose(C.inclusion(t[0], t[1]), C.inclusion(t[1], t[2])) == C.inclusion(t[0], t[2])
        and C.inclusion(t[0], t[0]) == C.identity(t[0]),
    ))
    report.checks.append(_check(
        "inclusions are monomorphisms", comparable, lambda p: C.is_mono(C.inclusion(*p))
    ))

    def closure(t):
        a, b, c = t
        f, g = C.inclusion(a, c), C.inclusion(b, c)
        return all(C.is_inclusion(h) for h in C.hom(a, b) if C.compose(h, g) == f)

    report.checks.append(_check(
        "factor through inclusion is inclusion",
        [(a, b, c) for a, c in comparable for b in objs if C.leq(b, c)],
        closure,
    ))
    return report


def check_normal_category(C, associativity=True, policies=("min",)):
    report = check_category_with_subobjects(C, associativity)
    report.title = f"{C.name}: normal category"

    def factorizes(f):
        return all(not check_factorization(C, f, C.factorize(f, policy)) for policy in policies)

    report.checks.append(_check("normal factorization", C.morphisms(), factorizes))
    report.checks.append(_check(
        "epimorphic parts are epimorphisms", C.morphisms(), lambda f: C.is_epi(C.epimorphic_part(f))
    ))

    def identity_cone(c):
        gamma = C.identity_cone(c)
        return gamma.vertex == c and gamma[c] == C.identity(c) and cone_check(C, gamma) and gamma.is_normal

    report.checks.append(_check("identity cone at every object", C.objects, identity_cone))
    return report


def check_factorization_uniqueness(C, policies=("min", "max")):
    """Different tie-break policies must give the same epimorphic part and inclusion."""

    def same(f):
        results = [C.factorize(f, p) for p in policies]
        return all(r.epimorphic_part == results[0].epimorphic_part and r.inclusion == results[0].inclusion
                   for r in results)

    return _check("epimorphic part independent of factorization", C.morphisms(), same)


@dataclass(frozen=True)
class Cone:
    """Components ``gamma(c): c -> vertex`` listed in the category's object order."""

    vertex: object
    components: tuple
    m_set: frozenset = field(default=frozenset(), compare=False, repr=False)
    _by_source: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_source", {f.source: f for f in self.components})

    def __getitem__(self, c):
        return self._by_source[c]

    @property
    def is_normal(self):
        return bool(self.m_set)

    def encode(self):
        enc = getattr(self.vertex, "encode", None)
        return {
            "vertex": enc() if enc else self.vertex,
            "components": [f.encode() for f in self.components],
        }


def make_cone(C, vertex, components):
    """Build a cone, checking component shapes and caching the isomorphism set."""
    if isinstance(components, dict):
        components = [components[c] for c in C.objects]
    components = tuple(components)
    if len(components) != len(C.objects):
        raise MalformedConeError("cone must have one component per object")
    for c, f in zip(C.objects, components):
        if f.source != c or f.target != vertex:
            raise MalformedConeError(f"component at {c} is not a morphism into the vertex {vertex}")
    m_set = frozenset(c for c, f in zip(C.objects, components) if C.is_iso(f))
    return Cone(vertex, components, m_set)


def cone_check(C, gamma):
    """Compatibility with inclusions: j(c', c) then gamma(c) equals gamma(c') whenever c' <= c."""
    for c in C.objects:
        gc = gamma[c]
        for c2 in C.objects:
            if c2 != c and C.leq(c2, c) and C.compose(C.inclusion(c2, c), gc) != gamma[c2]:
                return False
    return True


def cone_star_epi(C, gamma, f):
    """The cone with components gamma(a) then f, for an epimorphism f out of the vertex."""
    if f.source != gamma.vertex:
        raise PreconditionError("morphism does not start at the cone vertex")
    if not C.is_epi(f):
        raise PreconditionError(f"{f} is not an epimorphism")
    return make_cone(C, f.target, [C.compose(g, f) for g in gamma.components])


def cone_product(C, gamma, sigma):
    """Product of normal cones: gamma(a) followed by the epimorphic part of sigma at gamma's vertex."""
    fo = C.epimorphic_part(sigma[gamma.vertex])
    return make_cone(C, fo.target, [C.compose(g, fo) for g in gamma.components])


@dataclass
class ConeSemigroup:
    elements: list
    table: np.ndarray

    def index(self, cone):
        return self.elements.index(cone)

    def to_data(self):
        return {"elements": [c.encode() for c in self.elements], "table": self.table.tolist()}


def generate_semigroup(C, seeds, bound=100_000):
    """Closure of ``seeds`` under the cone product, with its product table."""
    elements, where = [], {}

    def add(cone):
        if cone not in where:
            if len(elements) >= bound:
                raise ResourceBoundError(f"cone closure exceeds {bound} elements")
            where[cone] = len(elements)
            elements.append(cone)
        return where[cone]

    for s in seeds:
        add(s)
    products = {}
    done = 0
    while done < len(elements):
        k = done
        done += 1
        for i in range(done):
            products[k, i] = add(cone_product(C, elements[k], elements[i]))
            products[i, k] = add(cone_product(C, elements[i], elements[k]))
    m = len(elements)
    table = np.empty((m, m), dtype=np.int64)
    for (i, j), v in products.items():
        table[i, j] = v
    return ConeSemigroup(elements, table)


def is_associative(table):
    t = np.asarray(table)
    m = len(t)
    left = t[t, :]
    right = t[np.arange(m)[:, None, None], t[None, :, :]]
    return bool(np.array_equal(left, right))


@dataclass
class Regularity:
    regular: bool
    witnesses: dict
    failing: list


def check_regular(table):
    """For each x look for y with x y x = x."""
    t = np.asarray(table)
    witnesses, failing = {}, []
    for x in range(len(t)):
        hits = np.nonzero(t[t[x, :], x] == x)[0]
        if hits.size:
            witnesses[x] = int(hits[0])
        else:
            failing.append(x)
    return Regularity(not failing, witnesses, failing)


def idempotent_indices(table):
    t = np.asarray(table)
    return [i for i in range(len(t)) if t[i, i] == i]


def right_ideals(table):
    """Principal right ideals xS^1 by element index; x R y iff the ideals are equal."""
    t = np.asarray(table)
    return [frozenset(t[x].tolist()) | {x} for x in range(len(t))]


def enumerate_all_normal_cones(C, bound=1_000_000, method="prune"):
    """Every normal cone of ``C``, grouped by vertex in object order.

    ``method="product"`` filters the full product of hom-sets; ``"prune"``
    walks the same assignments depth-first, larger objects first, and cuts a
    branch as soon as an inclusion-compatibility condition fails. Both raise
    ResourceBoundError once more than ``bound`` candidates would be visited.
    """
    if method == "product":
        return _cones_by_product(C, bound)
    if method != "prune":
        raise ValueError(f"unknown method {method!r}")
    order = sorted(C.objects, key=lambda c: -sum(C.leq(x, c) for x in C.objects))
    above = {c: [d for d in order[:i] if C.leq(c, d)] for i, c in enumerate(order)}
    below = {c: [d for d in order[:i] if C.leq(d, c)] for i, c in enumerate(order)}
    memo = {}

    def res(c, d, f):
        key = (c, d, f)
        if key not in memo:
            memo[key] = C.compose(C.inclusion(c, d), f)
        return memo[key]

    visited = 0
    out = []
    for vertex in C.objects:
        chosen = {}

        def extend(i):
            nonlocal visited
            if i == len(order):
                gamma = make_cone(C, vertex, chosen)
                if gamma.is_normal:
                    out.append(gamma)
                return
            c = order[i]
            ups = above[c]
            candidates = [res(c, ups[0], chosen[ups[0]])] if ups else C.hom(c, vertex)
            for f in candidates:
                visited += 1
                if visited > bound:
                    raise ResourceBoundError(f"cone search exceeds bound {bound}")
                if all(res(c, d, chosen[d]) == f for d in ups[1:]) and all(
                    res(d, c, f) == chosen[d] for d in below[c]
                ):
                    chosen[c] = f
                    extend(i + 1)
                    del chosen[c]

        extend(0)
    return out


def _cones_by_product(C, bound):
    total = sum(prod(len(C.hom(c, d)) for c in C.objects) for d in C.objects)
    if total > bound:
        raise ResourceBoundError(f"{total} candidate assignments exceed bound {bound}")
    out = []
    for d in C.objects:
        homs = [C.hom(c, d) for c in C.objects]
        for comps in product(*homs):
            gamma = make_cone(C, d, comps)
            if gamma.is_normal and cone_check(C, gamma):
                out.append(gamma)
    return out


def h_set(C, gamma, c):
    """H(gamma; c): the cones gamma * f° for f from the vertex of gamma to c."""
    return frozenset(cone_star_epi(C, gamma, C.epimorphic_part(f)) for f in C.hom(gamma.vertex, c))


def h_functor(C, gamma):
    """H(gamma; -) as tables: object sets, and for every morphism g the induced map of sets."""
    objects = {c: h_set(C, gamma, c) for c in C.objects}
    arrows = {}
    for c in C.objects:
        for d in C.objects:
            for g in C.hom(c, d):
                action = {}
                for f in C.hom(gamma.vertex, c):
                    src = cone_star_epi(C, gamma, C.epimorphic_part(f))
                    dst = cone_star_epi(C, gamma, C.epimorphic_part(C.compose(f, g)))
                    if action.setdefault(src, dst) != dst:
                        raise CategoryError(f"H-functor action at {g} is not well defined")
                arrows[g] = action
    return objects, arrows
