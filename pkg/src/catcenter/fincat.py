"""Finite categories given by explicit tables, with functors and natural
transformations between them.

Morphism equality is identifier equality, so every commuting-diagram check
in the rest of the package reduces to comparing table entries.
"""
from __future__ import annotations

import itertools

import yaml

from .report import MalformedError, Report


def freeze(x):
    """Make parsed values hashable: lists become tuples, recursively."""
    if isinstance(x, list):
        return tuple(freeze(v) for v in x)
    return x


def thaw(x):
    if isinstance(x, tuple):
        return [thaw(v) for v in x]
    return x


class FinCategory:
    """A finite category stored as tables.

    ``hom`` maps (source, target) to an ordered tuple of morphism ids; pairs
    that are absent have an empty hom-set.  ``compose`` maps (g, f) to g∘f.
    """

    def __init__(self, objects, hom, compose, identity, name=""):
        self.name = name
        self.objects = tuple(objects)
        self.hom = {}
        for (a, b), ms in hom.items():
            if ms:
                self.hom[(a, b)] = tuple(ms)
        self.compose_table = dict(compose)
        self.identity = dict(identity)
        self._src = {}
        self._tgt = {}
        morphisms = []
        for a in self.objects:
            for b in self.objects:
                for m in self.hom.get((a, b), ()):
                    if m not in self._src:
                        morphisms.append(m)
                    self._src.setdefault(m, a)
                    self._tgt.setdefault(m, b)
        # morphisms listed under undeclared objects still get indexed so the
        # validator can report them
        for (a, b), ms in self.hom.items():
            for m in ms:
                if m not in self._src:
                    morphisms.append(m)
                    self._src[m] = a
                    self._tgt[m] = b
        self.morphisms = tuple(morphisms)
        self._obj_index = {o: i for i, o in enumerate(self.objects)}
        self._mor_index = {m: i for i, m in enumerate(self.morphisms)}

    # -- access -----------------------------------------------------------
    def homset(self, a, b):
        return self.hom.get((a, b), ())

    def src(self, f):
        try:
            return self._src[f]
        except KeyError:
            raise MalformedError(f"unknown morphism {f!r}") from None

    def tgt(self, f):
        try:
            return self._tgt[f]
        except KeyError:
            raise MalformedError(f"unknown morphism {f!r}") from None

    def id(self, a):
        try:
            return self.identity[a]
        except KeyError:
            raise MalformedError(f"no identity for object {a!r}") from None

    def compose(self, g, f):
        """g∘f (f first)."""
        try:
            return self.compose_table[(g, f)]
        except KeyError:
            raise MalformedError(f"composite of {g!r} after {f!r} undefined") from None

    def compose_path(self, *ms):
        """Compose a path given left to right in diagram order (first applied first)."""
        out = ms[0]
        for m in ms[1:]:
            out = self.compose(m, out)
        return out

    def has_object(self, a):
        return a in self._obj_index

    def has_morphism(self, f):
        return f in self._src

    def index(self, x):
        return self._obj_index.get(x, self._mor_index.get(x))

    def inverse(self, f):
        """Two-sided inverse of f, or None."""
        a, b = self.src(f), self.tgt(f)
        for g in self.homset(b, a):
            if self.compose(g, f) == self.id(a) and self.compose(f, g) == self.id(b):
                return g
        return None

    def composable_pairs(self):
        for f in self.morphisms:
            for g in self.morphisms:
                if self._src[g] == self._tgt[f]:
                    yield g, f

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.hom == other.hom
            and self.compose_table == other.compose_table
            and self.identity == other.identity
        )

    __hash__ = object.__hash__

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FinCategory{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    # -- serialization ----------------------------------------------------
    def to_spec(self):
        homs = [
            [thaw(a), thaw(b), [thaw(m) for m in self.homset(a, b)]]
            for a in self.objects
            for b in self.objects
            if self.homset(a, b)
        ]
        compose = [
            [thaw(g), thaw(f), thaw(self.compose_table[(g, f)])]
            for g, f in self.composable_pairs()
            if (g, f) in self.compose_table
        ]
        return {
            "objects": [thaw(o) for o in self.objects],
            "homs": homs,
            "compose": compose,
            "identities": [[thaw(o), thaw(self.identity[o])] for o in self.objects if o in self.identity],
        }

    @classmethod
    def from_spec(cls, spec, name=""):
        try:
            objects = [freeze(o) for o in spec["objects"]]
            hom = {}
            for a, b, ms in spec.get("homs", []):
                hom.setdefault((freeze(a), freeze(b)), [])
                hom[(freeze(a), freeze(b))].extend(freeze(m) for m in ms)
            compose = {(freeze(g), freeze(f)): freeze(h) for g, f, h in spec.get("compose", [])}
            identity = {freeze(o): freeze(m) for o, m in spec.get("identities", [])}
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedError(f"bad category spec: {e}") from None
        return cls(objects, hom, compose, identity, name=name)


def dump_spec(data):
    """Deterministic text form for spec dictionaries."""
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=None, allow_unicode=True, width=100)


def category_to_text(c):
    return dump_spec(c.to_spec())


def category_from_text(text, name=""):
    return FinCategory.from_spec(yaml.safe_load(text), name=name)


# -- builders ---------------------------------------------------------------
def identity_name(x):
    return f"1_{x}"


def discrete_category(elements, name=""):
    elements = list(elements)
    if not elements:
        raise ValueError("a category needs at least one object")
    if len(set(elements)) != len(elements):
        raise ValueError("duplicate objects")
    hom = {(e, e): [identity_name(e)] for e in elements}
    ident = {e: identity_name(e) for e in elements}
    comp = {(identity_name(e), identity_name(e)): identity_name(e) for e in elements}
    return FinCategory(elements, hom, comp, ident, name=name)


def category_from_generators(objects, arrows, name=""):
    """Free-ish builder for thin categories: ``arrows`` lists (name, src, tgt)
    and every parallel pair is identified, so composites are forced."""
    objects = list(objects)
    hom = {(a, a): [identity_name(a)] for a in objects}
    for nm, a, b in arrows:
        hom.setdefault((a, b), [])
        hom[(a, b)].append(nm)
    ident = {a: identity_name(a) for a in objects}
    comp = {}
    for (b, c), gs in hom.items():
        for (a, b2), fs in hom.items():
            if b2 != b:
                continue
            target = hom.get((a, c))
            if not target:
                raise ValueError(f"no morphism {a!r}->{c!r} to hold a composite")
            for g in gs:
                for f in fs:
                    if g == ident[b]:
                        comp[(g, f)] = f
                    elif f == ident[a]:
                        comp[(g, f)] = g
                    else:
                        comp[(g, f)] = target[0]
    return FinCategory(objects, hom, comp, ident, name=name)


def one_object_category(elements, mult, unit, name=""):
    """The one-object category of a finite monoid (morphisms = elements)."""
    hom = {("*", "*"): list(elements)}
    comp = {(g, f): mult(g, f) for g in elements for f in elements}
    return FinCategory(["*"], hom, comp, {"*": unit}, name=name)


# -- validation -------------------------------------------------------------
def validate_category(c):
    r = Report(f"category {c.name}".strip())
    r.law("well-formed")
    seen_obj = set()
    for o in c.objects:
        if o in seen_obj:
            r.malformed("well-formed", o, "duplicate object")
        seen_obj.add(o)
    if not c.objects:
        r.malformed("well-formed", None, "empty object set")
    owner = {}
    for (a, b), ms in c.hom.items():
        if a not in seen_obj or b not in seen_obj:
            r.malformed("well-formed", (a, b), "hom-set over undeclared object")
        for m in ms:
            if m in owner and owner[m] != (a, b):
                r.malformed("well-formed", m, f"morphism listed in hom{owner[m]} and hom{(a, b)}")
            elif m in owner:
                r.malformed("well-formed", m, "morphism listed twice")
            owner.setdefault(m, (a, b))
    for o in c.objects:
        i = c.identity.get(o)
        if i is None:
            r.malformed("well-formed", o, "missing identity")
        elif i not in owner:
            r.malformed("well-formed", o, f"identity {i!r} is dangling")
        elif owner[i] != (o, o):
            r.malformed("well-formed", o, f"identity {i!r} is not an endomorphism of {o!r}")
    for (g, f), h in c.compose_table.items():
        if g not in owner or f not in owner:
            r.malformed("well-formed", (g, f), "compose entry for unknown morphisms")
    for g, f in c.composable_pairs():
        if (g, f) not in c.compose_table:
            r.malformed("well-formed", (g, f), "compose table not total")
            continue
        h = c.compose_table[(g, f)]
        if h not in owner:
            r.malformed("well-formed", (g, f), f"composite {h!r} is dangling")
        elif owner[h] != (c.src(f), c.tgt(g)):
            r.malformed("well-formed", (g, f), f"composite {h!r} has type {owner[h]}, expected {(c.src(f), c.tgt(g))}")
    if r.has_malformed:
        return r

    r.law("left unit").law("right unit").law("associativity")
    for f in c.morphisms:
        a, b = c.src(f), c.tgt(f)
        r.check("left unit", c.compose(c.id(b), f) == f, (b, f))
        r.check("right unit", c.compose(f, c.id(a)) == f, (a, f))
    for g, f in c.composable_pairs():
        gf = c.compose(g, f)
        for h in c.morphisms:
            if c.src(h) == c.tgt(g):
                if c.compose(h, gf) != c.compose(c.compose(h, g), f):
                    r.check("associativity", False, (h, g, f))
    return r


# -- functors ---------------------------------------------------------------
class Functor:
    def __init__(self, source, target, object_map, morphism_map, name=""):
        self.source = source
        self.target = target
        self.object_map = dict(object_map)
        self.morphism_map = dict(morphism_map)
        self.name = name

    def on_obj(self, a):
        return self.object_map[a]

    def on_mor(self, f):
        return self.morphism_map[f]

    def __eq__(self, other):
        if not isinstance(other, Functor):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.object_map == other.object_map
            and self.morphism_map == other.morphism_map
        )

    __hash__ = object.__hash__

    def __repr__(self):
        return f"<Functor {self.name or ''}>"


def identity_functor(c):
    return Functor(c, c, {o: o for o in c.objects}, {m: m for m in c.morphisms}, name=f"Id_{c.name}")


def compose_functors(g, f):
    """g∘f."""
    if f.target != g.source:
        raise ValueError("functors are not composable")
    return Functor(
        f.source,
        g.target,
        {a: g.object_map[f.object_map[a]] for a in f.source.objects},
        {m: g.morphism_map[f.morphism_map[m]] for m in f.source.morphisms},
        name=f"{g.name}∘{f.name}",
    )


def check_functor(F):
    r = Report(f"functor {F.name}".strip())
    C, D = F.source, F.target
    r.law("well-typed")
    for a in C.objects:
        if a not in F.object_map or not D.has_object(F.object_map[a]):
            r.malformed("well-typed", a, "object has no valid image")
    for m in C.morphisms:
        fm = F.morphism_map.get(m)
        if fm is None or not D.has_morphism(fm):
            r.malformed("well-typed", m, "morphism has no valid image")
    if r.has_malformed:
        return r
    r.law("sources and targets").law("identities").law("composition")
    for m in C.morphisms:
        fm = F.morphism_map[m]
        ok = D.src(fm) == F.object_map[C.src(m)] and D.tgt(fm) == F.object_map[C.tgt(m)]
        r.check("sources and targets", ok, m)
    if not r.ok:
        return r
    for a in C.objects:
        r.check("identities", F.morphism_map[C.id(a)] == D.id(F.object_map[a]), a)
    for g, f in C.composable_pairs():
        lhs = F.morphism_map[C.compose(g, f)]
        rhs = D.compose(F.morphism_map[g], F.morphism_map[f])
        r.check("composition", lhs == rhs, (g, f))
    return r


class NatTransf:
    def __init__(self, source, target, components, name=""):
        self.source = source  # Functor
        self.target = target  # Functor
        self.components = dict(components)
        self.name = name

    def __getitem__(self, a):
        return self.components[a]


def identity_nat(F):
    return NatTransf(F, F, {a: F.target.id(F.object_map[a]) for a in F.source.objects})


def vcompose_nat(beta, alpha):
    """beta·alpha, alpha first."""
    if alpha.target != beta.source:
        raise ValueError("natural transformations are not composable")
    D = alpha.source.target
    comps = {a: D.compose(beta.components[a], alpha.components[a]) for a in alpha.source.source.objects}
    return NatTransf(alpha.source, beta.target, comps)


def check_nat(alpha):
    F, G = alpha.source, alpha.target
    if F.source != G.source or F.target != G.target:
        raise ValueError("natural transformation between non-parallel functors")
    C, D = F.source, F.target
    r = Report(f"natural transformation {alpha.name}".strip())
    r.law("well-typed")
    for a in C.objects:
        c = alpha.components.get(a)
        if c is None or not D.has_morphism(c):
            r.malformed("well-typed", a, "missing component")
        elif D.src(c) != F.object_map[a] or D.tgt(c) != G.object_map[a]:
            r.malformed("well-typed", a, "component has wrong type")
    if r.has_malformed:
        return r
    r.law("naturality")
    for m in C.morphisms:
        a, b = C.src(m), C.tgt(m)
        lhs = D.compose(G.morphism_map[m], alpha.components[a])
        rhs = D.compose(alpha.components[b], F.morphism_map[m])
        r.check("naturality", lhs == rhs, m)
    return r


def all_triples(c):
    """Composable triples (h, g, f) in canonical order."""
    for g, f in c.composable_pairs():
        for h in c.morphisms:
            if c.src(h) == c.tgt(g):
                yield h, g, f


def product_category(c, d, name=""):
    """c × d with pair identifiers."""
    objects = list(itertools.product(c.objects, d.objects))
    hom = {}
    for (a, x) in objects:
        for (b, y) in objects:
            ms = [(f, g) for f in c.homset(a, b) for g in d.homset(x, y)]
            if ms:
                hom[((a, x), (b, y))] = ms
    comp = {}
    for (g1, f1) in c.composable_pairs():
        for (g2, f2) in d.composable_pairs():
            comp[((g1, g2), (f1, f2))] = (c.compose(g1, f1), d.compose(g2, f2))
    ident = {(a, x): (c.id(a), d.id(x)) for (a, x) in objects}
    return FinCategory(objects, hom, comp, ident, name=name)
