"""Strict 2-categories, deloopings, lax/colax functors between them,
(co)lax transformations and modifications.

Pasting conventions used throughout the package:

* ``K.h(a, b, c)`` is the horizontal composite a∘b∘c.  Reading a string
  diagram left to right gives exactly this order.
* ``K.v(a, b, c)`` is the vertical composite with ``a`` applied first, i.e.
  a string diagram read top to bottom.
* ``K.i(x)`` is the identity 2-cell on the 1-cell ``x``.
"""
from __future__ import annotations

import itertools
from functools import reduce

from .fincat import FinCategory, freeze, thaw, validate_category
from .moncat import MonCat
from .report import MalformedError, NotEnumerable, Report

STAR = "*"


class TwoCategory:
    """Interface shared by every strict 2-category in the package."""

    zero_cells: tuple = ()
    name = ""

    # 1-cells
    def src0(self, x):
        raise NotImplementedError

    def tgt0(self, x):
        raise NotImplementedError

    def id1(self, a):
        raise NotImplementedError

    def comp1(self, g, f):
        raise NotImplementedError

    def one_cells(self, a, b):
        raise NotImplementedError

    def is_one_cell(self, x):
        raise NotImplementedError

    # 2-cells
    def hom(self, a, b):
        raise NotImplementedError

    def dom(self, alpha):
        raise NotImplementedError

    def cod(self, alpha):
        raise NotImplementedError

    def id2(self, x):
        raise NotImplementedError

    def vcomp(self, beta, alpha):
        raise NotImplementedError

    def hcomp(self, beta, alpha):
        raise NotImplementedError

    def two_cells(self, x, y):
        raise NotImplementedError

    def is_two_cell(self, alpha):
        raise NotImplementedError

    # pasting helpers
    def i(self, *xs):
        """Identity 2-cell on the composite 1-cell xs[0]∘xs[1]∘..."""
        return self.id2(self.c1(*xs))

    def c1(self, *xs):
        return reduce(self.comp1, xs)

    def h(self, *cells):
        return reduce(self.hcomp, cells)

    def v(self, *cells):
        """Vertical composite, first argument applied first."""
        return reduce(lambda acc, b: self.vcomp(b, acc), cells)

    def inverse2(self, alpha):
        return self.hom(self.src0(self.dom(alpha)), self.tgt0(self.dom(alpha))).inverse(alpha)

    def endo_cells(self, a):
        return self.one_cells(a, a)

    def enumerable(self):
        try:
            for a in self.zero_cells:
                for b in self.zero_cells:
                    self.one_cells(a, b)
            return True
        except NotEnumerable:
            return False


class Deloop(TwoCategory):
    """One 0-cell, 1-cells the objects of ``moncat``, 2-cells its morphisms.

    Horizontal composition is the reversed tensor: g∘f := f⊗g.  Build with
    ``delooping`` to get the convention g∘f = g⊗f instead.
    """

    def __init__(self, moncat, pool=None, name=""):
        self.moncat = moncat
        self.base = moncat.base
        self.zero_cells = (STAR,)
        self.pool = pool  # (one_cells, two_cells) for matrix substrates
        self.name = name or f"Del({moncat.name})"

    def with_pool(self, one_cells, two_cells=()):
        return Deloop(self.moncat, pool=(tuple(one_cells), tuple(two_cells)), name=self.name)

    def src0(self, x):
        return STAR

    tgt0 = src0

    def id1(self, a):
        return self.moncat.unit

    def comp1(self, g, f):
        return self.moncat.tensor(f, g)

    def one_cells(self, a=STAR, b=STAR):
        if self.moncat.is_table:
            return self.base.objects
        if self.pool is None:
            raise NotEnumerable("matrix 2-category without a candidate pool")
        return self.pool[0]

    def is_one_cell(self, x):
        return self.base.has_object(x)

    def hom(self, a=STAR, b=STAR):
        return self.base

    def dom(self, alpha):
        return self.base.src(alpha)

    def cod(self, alpha):
        return self.base.tgt(alpha)

    def id2(self, x):
        return self.base.id(x)

    def vcomp(self, beta, alpha):
        return self.base.compose(beta, alpha)

    def hcomp(self, beta, alpha):
        return self.moncat.tensor_mor(alpha, beta)

    def two_cells(self, x, y):
        if self.moncat.is_table:
            return self.base.homset(x, y)
        if self.pool is None:
            raise NotEnumerable("matrix 2-category without a candidate pool")
        return tuple(m for m in self.pool[1] if m.cols == x and m.rows == y)

    def is_two_cell(self, alpha):
        return self.base.has_morphism(alpha)

    def inverse2(self, alpha):
        return self.base.inverse(alpha)

    def __eq__(self, other):
        return isinstance(other, Deloop) and self.moncat == other.moncat

    __hash__ = object.__hash__

    def __repr__(self):
        return f"<Deloop {self.name}>"


def deloop_moncat(C, pool=None):
    """The delooping in which horizontal composition is the reversed tensor:
    hcomp(y, x) = x⊗y."""
    return Deloop(C, pool=pool, name=f"Del({C.name})")


def delooping(C, pool=None):
    """Delooping of C with horizontal composition g∘f = g⊗f (the delooping of
    the reversed category, so strings read left to right match tensor
    factors left to right)."""
    return Deloop(C.reversed(), pool=pool, name=f"B({C.name})")


def moncat_of_deloop(K):
    """Recover the monoidal category whose ``delooping`` is K."""
    if not isinstance(K, Deloop):
        raise MalformedError("not a one-object delooping")
    return K.moncat.reversed()


class TableTwoCat(TwoCategory):
    """A finite strict 2-category stored as tables.

    1-cell and 2-cell identifiers must be unique across hom-categories so
    that endpoints can be recovered from the identifier alone.
    """

    def __init__(self, zero_cells, homs, comp1, hcomp, units, name=""):
        self.zero_cells = tuple(zero_cells)
        self.homs = dict(homs)
        self.comp1_table = dict(comp1)
        self.hcomp_table = dict(hcomp)
        self.units = dict(units)
        self.name = name
        self._cell0 = {}
        self._cell1 = {}
        for (a, b), cat in self.homs.items():
            for x in cat.objects:
                self._cell0[x] = (a, b)
            for m in cat.morphisms:
                self._cell1[m] = (a, b)

    @classmethod
    def from_functions(cls, zero_cells, homs, comp1, hcomp, units, name=""):
        """Tabulate horizontal composition from callables over every
        composable pair."""
        c1, c2 = {}, {}
        for a, b, c in itertools.product(zero_cells, repeat=3):
            h1, h2 = homs.get((a, b)), homs.get((b, c))
            if h1 is None or h2 is None:
                continue
            for g in h2.objects:
                for f in h1.objects:
                    c1[(g, f)] = comp1(g, f)
            for beta in h2.morphisms:
                for alpha in h1.morphisms:
                    c2[(beta, alpha)] = hcomp(beta, alpha)
        return cls(zero_cells, homs, c1, c2, units, name=name)

    def _hom_of1(self, x):
        try:
            return self._cell0[x]
        except KeyError:
            raise MalformedError(f"unknown 1-cell {x!r}") from None

    def _hom_of2(self, alpha):
        try:
            return self._cell1[alpha]
        except KeyError:
            raise MalformedError(f"unknown 2-cell {alpha!r}") from None

    def src0(self, x):
        return self._hom_of1(x)[0]

    def tgt0(self, x):
        return self._hom_of1(x)[1]

    def id1(self, a):
        return self.units[a]

    def comp1(self, g, f):
        try:
            return self.comp1_table[(g, f)]
        except KeyError:
            raise MalformedError(f"1-cells {g!r}, {f!r} not composable") from None

    def one_cells(self, a, b):
        h = self.homs.get((a, b))
        return h.objects if h is not None else ()

    def is_one_cell(self, x):
        return x in self._cell0

    def hom(self, a, b):
        h = self.homs.get((a, b))
        if h is None:
            raise MalformedError(f"no 1-cells from {a!r} to {b!r}")
        return h

    def dom(self, alpha):
        return self.homs[self._hom_of2(alpha)].src(alpha)

    def cod(self, alpha):
        return self.homs[self._hom_of2(alpha)].tgt(alpha)

    def id2(self, x):
        return self.homs[self._hom_of1(x)].id(x)

    def vcomp(self, beta, alpha):
        return self.homs[self._hom_of2(alpha)].compose(beta, alpha)

    def hcomp(self, beta, alpha):
        try:
            return self.hcomp_table[(beta, alpha)]
        except KeyError:
            raise MalformedError(f"2-cells {beta!r}, {alpha!r} not horizontally composable") from None

    def two_cells(self, x, y):
        return self.homs[self._hom_of1(x)].homset(x, y)

    def is_two_cell(self, alpha):
        return alpha in self._cell1

    def inverse2(self, alpha):
        return self.homs[self._hom_of2(alpha)].inverse(alpha)

    def __repr__(self):
        return f"<TableTwoCat {self.name}: {len(self.zero_cells)} 0-cells>"

    # -- serialization ----------------------------------------------------
    def to_spec(self):
        return {
            "zero_cells": [thaw(a) for a in self.zero_cells],
            "homs": [
                [thaw(a), thaw(b), self.homs[(a, b)].to_spec()]
                for a in self.zero_cells for b in self.zero_cells if (a, b) in self.homs
            ],
            "comp1": [[thaw(g), thaw(f), thaw(h)] for (g, f), h in self.comp1_table.items()],
            "hcomp": [[thaw(b), thaw(a), thaw(c)] for (b, a), c in self.hcomp_table.items()],
            "units": [[thaw(a), thaw(self.units[a])] for a in self.zero_cells],
        }

    @classmethod
    def from_spec(cls, spec, name=""):
        homs = {(freeze(a), freeze(b)): FinCategory.from_spec(s) for a, b, s in spec["homs"]}
        comp1 = {(freeze(g), freeze(f)): freeze(h) for g, f, h in spec["comp1"]}
        hcomp = {(freeze(b), freeze(a)): freeze(c) for b, a, c in spec["hcomp"]}
        units = {freeze(a): freeze(x) for a, x in spec["units"]}
        return cls([freeze(a) for a in spec["zero_cells"]], homs, comp1, hcomp, units, name=name)


def as_table(K):
    """Tabulate a finite delooping as a TableTwoCat (identifiers unchanged)."""
    if isinstance(K, TableTwoCat):
        return K
    if not K.enumerable():
        raise NotEnumerable("only finite 2-categories can be tabulated")
    return TableTwoCat.from_functions(
        K.zero_cells, {(STAR, STAR): K.base}, K.comp1, K.hcomp, {STAR: K.id1(STAR)}, name=K.name
    )


def trivial_moncat():
    base = FinCategory(["I"], {("I", "I"): ["1_I"]}, {("1_I", "1_I"): "1_I"}, {"I": "1_I"}, name="1")
    return MonCat(base, {("I", "I"): "I"}, {("1_I", "1_I"): "1_I"}, "I", name="1")


#: The trivial 2-category: one 0-cell, one 1-cell, one 2-cell.
ONE = delooping(trivial_moncat())


def composable_pairs1(K):
    """(g, f) with f: A->B and g: B->C, in canonical order."""
    for a, b, c in itertools.product(K.zero_cells, repeat=3):
        for f in K.one_cells(a, b):
            for g in K.one_cells(b, c):
                yield g, f


def composable_triples1(K):
    for a, b, c, d in itertools.product(K.zero_cells, repeat=4):
        for f in K.one_cells(a, b):
            for g in K.one_cells(b, c):
                for h in K.one_cells(c, d):
                    yield h, g, f


def all_one_cells(K):
    for a, b in itertools.product(K.zero_cells, repeat=2):
        for x in K.one_cells(a, b):
            yield x


def all_two_cells(K):
    """2-cells between 1-cells of K, in canonical order."""
    for a, b in itertools.product(K.zero_cells, repeat=2):
        xs = K.one_cells(a, b)
        for x in xs:
            for y in xs:
                for alpha in K.two_cells(x, y):
                    yield alpha


def validate_twocat(K):
    """Strictness of horizontal composition and the interchange law,
    checked exhaustively on finite (or pooled) 2-categories."""
    r = Report(f"2-category {K.name}".strip())
    if isinstance(K, TableTwoCat):
        for key, cat in K.homs.items():
            sub = validate_category(cat)
            r.merge(sub, f"hom{key}: ")
        if not r.ok:
            return r
    r.law("units").law("associativity of 1-cells").law("associativity of 2-cells")
    r.law("identity 2-cells").law("interchange").law("typing")
    for a in K.zero_cells:
        ia = K.id1(a)
        for b in K.zero_cells:
            for f in K.one_cells(a, b):
                r.check("units", K.comp1(f, ia) == f and K.comp1(K.id1(b), f) == f, f)
    for g, f in composable_pairs1(K):
        gf = K.comp1(g, f)
        r.check("identity 2-cells", K.hcomp(K.id2(g), K.id2(f)) == K.id2(gf), (g, f))
        if K.src0(gf) != K.src0(f) or K.tgt0(gf) != K.tgt0(g):
            r.check("typing", False, (g, f), "composite 1-cell has the wrong endpoints")
    for h, g, f in composable_triples1(K):
        r.check("associativity of 1-cells", K.comp1(K.comp1(h, g), f) == K.comp1(h, K.comp1(g, f)), (h, g, f))
    # 2-cell level: every composable pair of 2-cells
    cells = {}
    for a, b in itertools.product(K.zero_cells, repeat=2):
        cells[(a, b)] = [al for x in K.one_cells(a, b) for y in K.one_cells(a, b) for al in K.two_cells(x, y)]
    for a, b, c in itertools.product(K.zero_cells, repeat=3):
        for beta in cells[(b, c)]:
            for alpha in cells[(a, b)]:
                ba = K.hcomp(beta, alpha)
                ok = K.dom(ba) == K.comp1(K.dom(beta), K.dom(alpha)) and K.cod(ba) == K.comp1(K.cod(beta), K.cod(alpha))
                r.check("typing", ok, (beta, alpha))
                for a2 in cells[(a, b)]:
                    if K.dom(a2) != K.cod(alpha):
                        continue
                    for b2 in cells[(b, c)]:
                        if K.dom(b2) != K.cod(beta):
                            continue
                        lhs = K.vcomp(K.hcomp(b2, a2), ba)
                        rhs = K.hcomp(K.vcomp(b2, beta), K.vcomp(a2, alpha))
                        if lhs != rhs:
                            r.check("interchange", False, ((b2, beta), (a2, alpha)))
    for a, b, c, d in itertools.product(K.zero_cells, repeat=4):
        for g3 in cells[(c, d)]:
            for g2 in cells[(b, c)]:
                for g1 in cells[(a, b)]:
                    if K.hcomp(K.hcomp(g3, g2), g1) != K.hcomp(g3, K.hcomp(g2, g1)):
                        r.check("associativity of 2-cells", False, (g3, g2, g1))
    return r


# -- bimodule categories -----------------------------------------------------
class BimoduleCat:
    """A (C, D)-bimodule category M with strict actions c⊳m and m⊲d.

    Tensor conventions: (c⊗c')⊳m = c⊳(c'⊳m) and m⊲(d⊗d') = (m⊲d)⊲d'.
    """

    def __init__(self, left, right, carrier, left_obj, left_mor, right_obj, right_mor, name="", regular_of=None):
        self.left = left
        self.right = right
        self.carrier = carrier
        self.left_obj, self.left_mor = dict(left_obj), dict(left_mor)
        self.right_obj, self.right_mor = dict(right_obj), dict(right_mor)
        self.name = name
        self.regular_of = regular_of

    def lact(self, c, m):
        return self.left_obj[(c, m)]

    def lact_mor(self, gamma, phi):
        return self.left_mor[(gamma, phi)]

    def ract(self, m, d):
        return self.right_obj[(m, d)]

    def ract_mor(self, phi, delta):
        return self.right_mor[(phi, delta)]

    def __repr__(self):
        return f"<BimoduleCat {self.name}>"


def regular_bimodule(C):
    """C acting on itself from both sides by its tensor."""
    B = C.base
    lo = {(c, m): C.tensor(c, m) for c in B.objects for m in B.objects}
    lm = {(g, f): C.tensor_mor(g, f) for g in B.morphisms for f in B.morphisms}
    ro = {(m, d): C.tensor(m, d) for m in B.objects for d in B.objects}
    rm = {(f, g): C.tensor_mor(f, g) for f in B.morphisms for g in B.morphisms}
    return BimoduleCat(C, C, B, lo, lm, ro, rm, name=f"reg({C.name})", regular_of=C)


def endo_moncat(K, a, name=""):
    """End_K(a) as a strict monoidal category with x⊗y := x∘y."""
    cat = K.hom(a, a)
    xs, ms = cat.objects, cat.morphisms
    tobj = {(x, y): K.comp1(x, y) for x in xs for y in xs}
    tmor = {(f, g): K.hcomp(f, g) for f in ms for g in ms}
    return MonCat(cat, tobj, tmor, K.id1(a), name=name or f"End({a})")


def bimodule_from_twocat(K, a, b, name=""):
    """K(a, b) as an (End(b), End(a))-bimodule category: c⊳m = c∘m, m⊲d = m∘d."""
    C, D, M = endo_moncat(K, b), endo_moncat(K, a), K.hom(a, b)
    lo = {(c, m): K.comp1(c, m) for c in C.base.objects for m in M.objects}
    lm = {(g, f): K.hcomp(g, f) for g in C.base.morphisms for f in M.morphisms}
    ro = {(m, d): K.comp1(m, d) for m in M.objects for d in D.base.objects}
    rm = {(f, g): K.hcomp(f, g) for f in M.morphisms for g in D.base.morphisms}
    return BimoduleCat(C, D, M, lo, lm, ro, rm, name=name or f"{K.name}({a},{b})")


def validate_bimodule(Bm):
    r = Report(f"bimodule {Bm.name}".strip())
    C, D, M = Bm.left, Bm.right, Bm.carrier
    CB, DB = C.base, D.base
    r.law("left action: unit").law("left action: associativity").law("left action: functoriality")
    r.law("right action: unit").law("right action: associativity").law("right action: functoriality")
    r.law("middle associativity")
    for m in M.objects:
        r.check("left action: unit", Bm.lact(C.unit, m) == m, m)
        r.check("right action: unit", Bm.ract(m, D.unit) == m, m)
    for f in M.morphisms:
        r.check("left action: unit", Bm.lact_mor(CB.id(C.unit), f) == f, f)
        r.check("right action: unit", Bm.ract_mor(f, DB.id(D.unit)) == f, f)
    for c, c2 in itertools.product(CB.objects, repeat=2):
        for m in M.objects:
            r.check("left action: associativity", Bm.lact(C.tensor(c, c2), m) == Bm.lact(c, Bm.lact(c2, m)), (c, c2, m))
    for d, d2 in itertools.product(DB.objects, repeat=2):
        for m in M.objects:
            r.check("right action: associativity", Bm.ract(m, D.tensor(d, d2)) == Bm.ract(Bm.ract(m, d), d2), (m, d, d2))
    for c in CB.objects:
        for d in DB.objects:
            for m in M.objects:
                r.check("middle associativity", Bm.ract(Bm.lact(c, m), d) == Bm.lact(c, Bm.ract(m, d)), (c, m, d))
    for g, f in itertools.product(CB.morphisms, M.morphisms):
        x = Bm.lact_mor(g, f)
        ok = M.src(x) == Bm.lact(CB.src(g), M.src(f)) and M.tgt(x) == Bm.lact(CB.tgt(g), M.tgt(f))
        r.check("left action: functoriality", ok, (g, f))
    for f, g in itertools.product(M.morphisms, DB.morphisms):
        x = Bm.ract_mor(f, g)
        ok = M.src(x) == Bm.ract(M.src(f), DB.src(g)) and M.tgt(x) == Bm.ract(M.tgt(f), DB.tgt(g))
        r.check("right action: functoriality", ok, (f, g))
    if not r.ok:
        return r
    for (g2, g1), (f2, f1) in itertools.product(list(CB.composable_pairs()), list(M.composable_pairs())):
        lhs = M.compose(Bm.lact_mor(g2, f2), Bm.lact_mor(g1, f1))
        r.check("left action: functoriality", lhs == Bm.lact_mor(CB.compose(g2, g1), M.compose(f2, f1)), ((g2, g1), (f2, f1)))
    for (f2, f1), (g2, g1) in itertools.product(list(M.composable_pairs()), list(DB.composable_pairs())):
        lhs = M.compose(Bm.ract_mor(f2, g2), Bm.ract_mor(f1, g1))
        r.check("right action: functoriality", lhs == Bm.ract_mor(M.compose(f2, f1), DB.compose(g2, g1)), ((f2, f1), (g2, g1)))
    return r


def tag_category(cat, tag, name=""):
    """Copy of ``cat`` with every identifier wrapped as (tag, id)."""
    t = lambda x: (tag, x)  # noqa: E731
    hom = {(t(a), t(b)): [t(m) for m in ms] for (a, b), ms in cat.hom.items()}
    comp = {(t(g), t(f)): t(h) for (g, f), h in cat.compose_table.items()}
    ident = {t(a): t(m) for a, m in cat.identity.items()}
    return FinCategory([t(o) for o in cat.objects], hom, comp, ident, name=name or f"{tag}")


def deloop_bimodule(Bm):
    """Two 0-cells 0 and 1 with K(0,0) = D, K(1,1) = C, K(0,1) = M and no
    1-cells from 1 to 0.  Cells are tagged ('C', x), ('D', x), ('M', x)."""
    C, D, M = Bm.left, Bm.right, Bm.carrier
    homs = {
        (0, 0): tag_category(D.base, "D"),
        (1, 1): tag_category(C.base, "C"),
        (0, 1): tag_category(M, "M"),
    }

    def comp1(g, f):
        (tg, g0), (tf, f0) = g, f
        if tg == "D" and tf == "D":
            return ("D", D.tensor(g0, f0))
        if tg == "C" and tf == "C":
            return ("C", C.tensor(g0, f0))
        if tg == "M" and tf == "D":
            return ("M", Bm.ract(g0, f0))
        if tg == "C" and tf == "M":
            return ("M", Bm.lact(g0, f0))
        raise MalformedError(f"1-cells {g!r}, {f!r} not composable")

    def hcomp(b, a):
        (tb, b0), (ta, a0) = b, a
        if tb == "D" and ta == "D":
            return ("D", D.tensor_mor(b0, a0))
        if tb == "C" and ta == "C":
            return ("C", C.tensor_mor(b0, a0))
        if tb == "M" and ta == "D":
            return ("M", Bm.ract_mor(b0, a0))
        if tb == "C" and ta == "M":
            return ("M", Bm.lact_mor(b0, a0))
        raise MalformedError(f"2-cells {b!r}, {a!r} not composable")

    K = TableTwoCat.from_functions(
        (0, 1), homs, comp1, hcomp, {0: ("D", D.unit), 1: ("C", C.unit)}, name=f"Del({Bm.name})"
    )
    K.bimodule = Bm
    return K


# -- lax / colax functors ---------------------------------------------------
def _lookup(s, *args):
    if s is None:
        return None
    return s[args if len(args) > 1 else args[0]] if isinstance(s, dict) else s(*args)


class LaxFunctor2:
    """A functor between 2-categories with lax structure
    F2(g, f): F(g)∘F(f) ⇒ F(g∘f), F0(A): id ⇒ F(id_A) and/or colax structure
    in the opposite directions.  ``pseudo`` declares that the colax cells are
    inverses of the lax ones (checked, never searched)."""

    def __init__(self, source, target, on0, on1, on2, lax2=None, lax0=None, colax2=None, colax0=None,
                 pseudo=False, name=""):
        self.source = source
        self.target = target
        self._on0, self._on1, self._on2 = on0, on1, on2
        self._lax2, self._lax0 = lax2, lax0
        self._colax2, self._colax0 = colax2, colax0
        self.pseudo = pseudo
        self.name = name
        self.monoidal = None  # LaxMonFunctor this was delooped from, if any

    @property
    def is_lax(self):
        return self._lax2 is not None and self._lax0 is not None

    @property
    def is_colax(self):
        return self._colax2 is not None and self._colax0 is not None

    def on0(self, a):
        return _lookup(self._on0, a)

    def on1(self, x):
        return _lookup(self._on1, x)

    def on2(self, alpha):
        return _lookup(self._on2, alpha)

    def lax2(self, g, f):
        return _lookup(self._lax2, g, f)

    def lax0(self, a):
        return _lookup(self._lax0, a)

    def colax2(self, g, f):
        return _lookup(self._colax2, g, f)

    def colax0(self, a):
        return _lookup(self._colax0, a)

    def __repr__(self):
        return f"<LaxFunctor2 {self.name}>"


def identity_functor2(K):
    F = LaxFunctor2(
        K, K, lambda a: a, lambda x: x, lambda al: al,
        lambda g, f: K.i(g, f), lambda a: K.i(K.id1(a)),
        lambda g, f: K.i(g, f), lambda a: K.i(K.id1(a)),
        pseudo=True, name=f"Id_{K.name}",
    )
    return F


def deloop_functor(F, source=None, target=None):
    """Delooping of a monoidal functor F: E -> C as a functor
    delooping(E) -> delooping(C) (convention g∘f = g⊗f), or between the
    given deloopings.  For raw deloopings the structure cells are flipped."""
    S = source or delooping(F.source)
    T = target or delooping(F.target)
    if S.moncat.is_reversed != T.moncat.is_reversed:
        raise MalformedError("source and target deloopings use different conventions")
    rev = S.moncat.is_reversed

    def order(g, f):
        return (g, f) if rev else (f, g)

    lax2 = (lambda g, f: F.lax2(*order(g, f))) if F.is_lax else None
    colax2 = (lambda g, f: F.colax2(*order(g, f))) if F.is_colax else None
    lax0 = (lambda a: F.lax0) if F.is_lax else None
    colax0 = (lambda a: F.colax0) if F.is_colax else None
    G = LaxFunctor2(S, T, lambda a: STAR, F.on_obj, F.on_mor, lax2, lax0, colax2, colax0,
                    pseudo=F.is_lax and F.is_colax, name=f"Del({F.name})")
    G.monoidal = F
    return G


def bimodule_twist(F, G, K):
    """The pair of functors Del(E) -> Del(B) for twists F: E -> D (landing
    on 0-cell 0) and G: E -> C (landing on 0-cell 1)."""
    E = F.source
    S = delooping(E)

    def make(Fm, tag, zero):
        lax2 = (lambda g, f: (tag, Fm.lax2(g, f))) if Fm.is_lax else None
        colax2 = (lambda g, f: (tag, Fm.colax2(g, f))) if Fm.is_colax else None
        lax0 = (lambda a: (tag, Fm.lax0)) if Fm.is_lax else None
        colax0 = (lambda a: (tag, Fm.colax0)) if Fm.is_colax else None
        out = LaxFunctor2(S, K, lambda a: zero, lambda x: (tag, Fm.on_obj(x)), lambda al: (tag, Fm.on_mor(al)),
                          lax2, lax0, colax2, colax0, pseudo=Fm.is_lax and Fm.is_colax, name=f"{Fm.name}->{zero}")
        out.monoidal = Fm
        return out

    return make(F, "D", 0), make(G, "C", 1)


def compose_functors2(G, F):
    """G∘F with (GF)2 = G(F2)·G2 and (GF)0 = G(F0)·G0 (and the colax duals)."""
    if F.target is not G.source and F.target != G.source:
        raise MalformedError("functors are not composable")
    K = G.target
    lax2 = (lambda g, f: K.v(G.lax2(F.on1(g), F.on1(f)), G.on2(F.lax2(g, f)))) if (F.is_lax and G.is_lax) else None
    lax0 = (lambda a: K.v(G.lax0(F.on0(a)), G.on2(F.lax0(a)))) if (F.is_lax and G.is_lax) else None
    colax2 = (lambda g, f: K.v(G.on2(F.colax2(g, f)), G.colax2(F.on1(g), F.on1(f)))) if (F.is_colax and G.is_colax) else None
    colax0 = (lambda a: K.v(G.on2(F.colax0(a)), G.colax0(F.on0(a)))) if (F.is_colax and G.is_colax) else None
    return LaxFunctor2(F.source, K, lambda a: G.on0(F.on0(a)), lambda x: G.on1(F.on1(x)),
                       lambda al: G.on2(F.on2(al)), lax2, lax0, colax2, colax0,
                       pseudo=F.pseudo and G.pseudo, name=f"{G.name}∘{F.name}")


def check_lax_functor2(F, which=("lax", "colax")):
    """Local functoriality plus the (co)lax associativity/unitality laws.

    Requires the source to be finite or pooled."""
    S, T = F.source, F.target
    r = Report(f"functor {F.name}".strip())
    r.law("well-typed")
    for a, b in itertools.product(S.zero_cells, repeat=2):
        for x in S.one_cells(a, b):
            fx = F.on1(x)
            if not T.is_one_cell(fx) or T.src0(fx) != F.on0(a) or T.tgt0(fx) != F.on0(b):
                r.malformed("well-typed", x, "image of 1-cell has the wrong endpoints")
                continue
            for y in S.one_cells(a, b):
                for al in S.two_cells(x, y):
                    fa = F.on2(al)
                    if not T.is_two_cell(fa) or T.dom(fa) != fx or T.cod(fa) != F.on1(y):
                        r.malformed("well-typed", al, "image of 2-cell has the wrong type")
    if r.has_malformed:
        return r
    r.law("local functoriality")
    for a, b in itertools.product(S.zero_cells, repeat=2):
        xs = S.one_cells(a, b)
        for x in xs:
            r.check("local functoriality", F.on2(S.id2(x)) == T.id2(F.on1(x)), x)
            for y in xs:
                for al in S.two_cells(x, y):
                    for z in xs:
                        for be in S.two_cells(y, z):
                            ok = F.on2(S.vcomp(be, al)) == T.vcomp(F.on2(be), F.on2(al))
                            r.check("local functoriality", ok, (be, al))
    if "lax" in which and F.is_lax:
        _check_structure(F, r, colax=False)
    if "colax" in which and F.is_colax:
        _check_structure(F, r, colax=True)
    if F.pseudo:
        if not (F.is_lax and F.is_colax):
            r.malformed("pseudo: inverses", None, "pseudo functor lacks one of its structures")
            return r
        r.law("pseudo: inverses")
        for g, f in composable_pairs1(S):
            a, b = F.lax2(g, f), F.colax2(g, f)
            ok = T.vcomp(a, b) == T.id2(F.on1(S.comp1(g, f))) and T.vcomp(b, a) == T.i(F.on1(g), F.on1(f))
            r.check("pseudo: inverses", ok, (g, f))
        for a in S.zero_cells:
            u, c = F.lax0(a), F.colax0(a)
            ok = T.vcomp(c, u) == T.id2(T.id1(F.on0(a))) and T.vcomp(u, c) == T.id2(F.on1(S.id1(a)))
            r.check("pseudo: inverses", ok, a)
    return r


def _check_structure(F, r, colax):
    S, T = F.source, F.target
    p = "colax: " if colax else "lax: "
    s2 = F.colax2 if colax else F.lax2
    s0 = F.colax0 if colax else F.lax0
    Fo1, Fo2 = F.on1, F.on2
    r.law(p + "well-typed")
    for g, f in composable_pairs1(S):
        c = s2(g, f)
        src, tgt = T.c1(Fo1(g), Fo1(f)), Fo1(S.comp1(g, f))
        if colax:
            src, tgt = tgt, src
        if not T.is_two_cell(c) or T.dom(c) != src or T.cod(c) != tgt:
            r.malformed(p + "well-typed", (g, f), "structure 2-cell has the wrong type")
    for a in S.zero_cells:
        c = s0(a)
        src, tgt = T.id1(F.on0(a)), Fo1(S.id1(a))
        if colax:
            src, tgt = tgt, src
        if not T.is_two_cell(c) or T.dom(c) != src or T.cod(c) != tgt:
            r.malformed(p + "well-typed", a, "unit 2-cell has the wrong type")
    if r.has_malformed:
        return
    r.law(p + "naturality").law(p + "associativity").law(p + "unitality")
    for a, b, c in itertools.product(S.zero_cells, repeat=3):
        fs, gs = S.one_cells(a, b), S.one_cells(b, c)
        for f, f2 in itertools.product(fs, repeat=2):
            for al in S.two_cells(f, f2):
                for g, g2 in itertools.product(gs, repeat=2):
                    for be in S.two_cells(g, g2):
                        if colax:
                            lhs = T.v(Fo2(S.hcomp(be, al)), s2(g2, f2))
                            rhs = T.v(s2(g, f), T.h(Fo2(be), Fo2(al)))
                        else:
                            lhs = T.v(T.h(Fo2(be), Fo2(al)), s2(g2, f2))
                            rhs = T.v(s2(g, f), Fo2(S.hcomp(be, al)))
                        r.check(p + "naturality", lhs == rhs, (be, al))
    for h, g, f in composable_triples1(S):
        Fh, Ff = Fo1(h), Fo1(f)
        if colax:
            lhs = T.v(s2(h, S.comp1(g, f)), T.h(T.i(Fh), s2(g, f)))
            rhs = T.v(s2(S.comp1(h, g), f), T.h(s2(h, g), T.i(Ff)))
        else:
            lhs = T.v(T.h(T.i(Fh), s2(g, f)), s2(h, S.comp1(g, f)))
            rhs = T.v(T.h(s2(h, g), T.i(Ff)), s2(S.comp1(h, g), f))
        r.check(p + "associativity", lhs == rhs, (h, g, f))
    for a, b in itertools.product(S.zero_cells, repeat=2):
        for f in S.one_cells(a, b):
            Ff = Fo1(f)
            if colax:
                right = T.v(s2(f, S.id1(a)), T.h(T.i(Ff), s0(a)))
                left = T.v(s2(S.id1(b), f), T.h(s0(b), T.i(Ff)))
            else:
                right = T.v(T.h(T.i(Ff), s0(a)), s2(f, S.id1(a)))
                left = T.v(T.h(s0(b), T.i(Ff)), s2(S.id1(b), f))
            r.check(p + "unitality", right == T.i(Ff), ("right", f))
            r.check(p + "unitality", left == T.i(Ff), ("left", f))


# -- transformations ---------------------------------------------------------
class Transformation2:
    """A (co)lax transformation between parallel functors.

    colax: cell(f): χ_B∘F(f) ⇒ G(f)∘χ_A
    lax:   cell(f): G(f)∘χ_A ⇒ χ_B∘F(f)

    ``wrt`` chooses which functor structure (lax or colax) the
    multiplicativity and unitality laws refer to.
    """

    def __init__(self, kind, source, target, one_cells, two_cells, inverses=None, wrt=None, name=""):
        if kind not in ("lax", "colax"):
            raise ValueError("kind must be 'lax' or 'colax'")
        self.kind = kind
        self.source = source
        self.target = target
        self._one = one_cells
        self._two = two_cells
        self._inv = inverses
        if wrt is None:
            wrt = "lax" if (source.is_lax and target.is_lax) else "colax"
        self.wrt = wrt
        self.name = name

    def one(self, a):
        return _lookup(self._one, a)

    def cell(self, f):
        return _lookup(self._two, f)

    def inverse(self, f):
        return _lookup(self._inv, f)

    @property
    def is_pseudo(self):
        return self._inv is not None

    def key(self):
        """Component data over the (finite) domain, used for equality."""
        K = self.source.source
        ones = tuple(self.one(a) for a in K.zero_cells)
        twos = tuple(self.cell(f) for f in all_one_cells(K))
        return (self.kind, ones, twos)

    def __eq__(self, other):
        if not isinstance(other, Transformation2):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"<{self.kind} Transformation2 {self.name}>"


def identity_transformation2(F, kind="colax"):
    T = F.target
    return Transformation2(kind, F, F, lambda a: T.id1(F.on0(a)), lambda f: T.id2(F.on1(f)),
                           inverses=lambda f: T.id2(F.on1(f)), name=f"id_{F.name}")


def _cell_type(t, f):
    """(dom, cod) of the 2-cell component at f."""
    S, T = t.source.source, t.source.target
    F, G = t.source, t.target
    a, b = S.src0(f), S.tgt0(f)
    if t.kind == "colax":
        return T.comp1(t.one(b), F.on1(f)), T.comp1(G.on1(f), t.one(a))
    return T.comp1(G.on1(f), t.one(a)), T.comp1(t.one(b), F.on1(f))


def check_transformation2(t, expect=None):
    if expect is not None and t.kind != expect:
        raise MalformedError(f"expected a {expect} transformation, got {t.kind}")
    F, G = t.source, t.target
    S, T = F.source, F.target
    if G.source is not S and G.source != S:
        raise MalformedError("transformation between non-parallel functors")
    need = F.is_lax and G.is_lax if t.wrt == "lax" else F.is_colax and G.is_colax
    if not need:
        raise MalformedError(f"functors lack the {t.wrt} structure the transformation refers to")
    r = Report(f"{t.kind} transformation {t.name}".strip())
    r.law("well-typed")
    for a in S.zero_cells:
        x = t.one(a)
        if not T.is_one_cell(x) or T.src0(x) != F.on0(a) or T.tgt0(x) != G.on0(a):
            r.malformed("well-typed", a, "1-cell component has the wrong endpoints")
    if r.has_malformed:
        return r
    for f in all_one_cells(S):
        c = t.cell(f)
        d, e = _cell_type(t, f)
        if not T.is_two_cell(c) or T.dom(c) != d or T.cod(c) != e:
            r.malformed("well-typed", f, "2-cell component has the wrong type")
    if r.has_malformed:
        return r

    i, h, v = T.i, T.h, T.v
    one, cell = t.one, t.cell
    colax = t.kind == "colax"
    r.law("naturality").law("multiplicativity").law("unitality")
    for a, b in itertools.product(S.zero_cells, repeat=2):
        for f, f2 in itertools.product(S.one_cells(a, b), repeat=2):
            for al in S.two_cells(f, f2):
                if colax:
                    lhs = v(h(i(one(b)), F.on2(al)), cell(f2))
                    rhs = v(cell(f), h(G.on2(al), i(one(a))))
                else:
                    lhs = v(h(G.on2(al), i(one(a))), cell(f2))
                    rhs = v(cell(f), h(i(one(b)), F.on2(al)))
                r.check("naturality", lhs == rhs, al)
    for g, f in composable_pairs1(S):
        a, c = S.src0(f), S.tgt0(g)
        gf = S.comp1(g, f)
        Ff, Gg = F.on1(f), G.on1(g)
        if colax and t.wrt == "lax":
            lhs = v(h(i(one(c)), F.lax2(g, f)), cell(gf))
            rhs = v(h(cell(g), i(Ff)), h(i(Gg), cell(f)), h(G.lax2(g, f), i(one(a))))
        elif colax:
            lhs = v(cell(gf), h(G.colax2(g, f), i(one(a))))
            rhs = v(h(i(one(c)), F.colax2(g, f)), h(cell(g), i(Ff)), h(i(Gg), cell(f)))
        elif t.wrt == "lax":
            lhs = v(h(G.lax2(g, f), i(one(a))), cell(gf))
            rhs = v(h(i(Gg), cell(f)), h(cell(g), i(Ff)), h(i(one(c)), F.lax2(g, f)))
        else:
            lhs = v(cell(gf), h(i(one(c)), F.colax2(g, f)))
            rhs = v(h(G.colax2(g, f), i(one(a))), h(i(Gg), cell(f)), h(cell(g), i(Ff)))
        r.check("multiplicativity", lhs == rhs, (g, f))
    for a in S.zero_cells:
        ida = S.id1(a)
        if colax and t.wrt == "lax":
            ok = v(h(i(one(a)), F.lax0(a)), cell(ida)) == h(G.lax0(a), i(one(a)))
        elif colax:
            ok = v(cell(ida), h(G.colax0(a), i(one(a)))) == h(i(one(a)), F.colax0(a))
        elif t.wrt == "lax":
            ok = v(h(G.lax0(a), i(one(a))), cell(ida)) == h(i(one(a)), F.lax0(a))
        else:
            ok = v(cell(ida), h(i(one(a)), F.colax0(a))) == h(G.colax0(a), i(one(a)))
        r.check("unitality", ok, a)
    if t.is_pseudo:
        r.law("pseudo: inverses")
        for f in all_one_cells(S):
            c, ci = cell(f), t.inverse(f)
            try:
                ok = T.vcomp(ci, c) == T.id2(T.dom(c)) and T.vcomp(c, ci) == T.id2(T.cod(c))
            except (MalformedError, ValueError, KeyError):
                ok = False
            r.check("pseudo: inverses", ok, f)
    return r


class Modification2:
    def __init__(self, source, target, components, name=""):
        self.source = source
        self.target = target
        self._comp = components
        self.name = name

    def comp(self, a):
        return _lookup(self._comp, a)

    def key(self):
        K = self.source.source.source
        return tuple(self.comp(a) for a in K.zero_cells)

    def __eq__(self, other):
        if not isinstance(other, Modification2):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def identity_modification2(t):
    T = t.source.target
    return Modification2(t, t, lambda a: T.id2(t.one(a)))


def check_modification2(m):
    t1, t2 = m.source, m.target
    if t1.kind != t2.kind:
        raise MalformedError("modification between transformations of different kinds")
    F, G = t1.source, t1.target
    S, T = F.source, F.target
    r = Report("modification")
    r.law("well-typed").law("modification condition")
    for a in S.zero_cells:
        c = m.comp(a)
        if not T.is_two_cell(c) or T.dom(c) != t1.one(a) or T.cod(c) != t2.one(a):
            r.malformed("well-typed", a, "component has the wrong type")
    if r.has_malformed:
        return r
    i, h, v = T.i, T.h, T.v
    for f in all_one_cells(S):
        a, b = S.src0(f), S.tgt0(f)
        if t1.kind == "colax":
            lhs = v(h(m.comp(b), i(F.on1(f))), t2.cell(f))
            rhs = v(t1.cell(f), h(i(G.on1(f)), m.comp(a)))
        else:
            lhs = v(h(i(G.on1(f)), m.comp(a)), t2.cell(f))
            rhs = v(t1.cell(f), h(m.comp(b), i(F.on1(f))))
        r.check("modification condition", lhs == rhs, f)
    return r


def vcompose_modifications(m2, m1):
    T = m1.source.source.target
    return Modification2(m1.source, m2.target, lambda a: T.vcomp(m2.comp(a), m1.comp(a)))


def vcompose_transformations(t2, t1):
    """t2·t1 for t1: F ⇒ G and t2: G ⇒ H."""
    if t1.kind != t2.kind:
        raise MalformedError("cannot compose a lax with a colax transformation")
    if t1.target is not t2.source:
        raise MalformedError("transformations are not composable")
    T = t1.source.target
    S = t1.source.source
    i, h, v = T.i, T.h, T.v

    def one(a):
        return T.comp1(t2.one(a), t1.one(a))

    def cell(f):
        a, b = S.src0(f), S.tgt0(f)
        if t1.kind == "colax":
            return v(h(i(t2.one(b)), t1.cell(f)), h(t2.cell(f), i(t1.one(a))))
        return v(h(t2.cell(f), i(t1.one(a))), h(i(t2.one(b)), t1.cell(f)))

    if not (t1.is_pseudo and t2.is_pseudo):
        inv = None
    else:
        def inv(f):
            a, b = S.src0(f), S.tgt0(f)
            if t1.kind == "colax":
                return v(h(t2.inverse(f), i(t1.one(a))), h(i(t2.one(b)), t1.inverse(f)))
            return v(h(i(t2.one(b)), t1.inverse(f)), h(t2.inverse(f), i(t1.one(a))))

    return Transformation2(t1.kind, t1.source, t2.target, one, cell, inv, wrt=t1.wrt,
                           name=f"{t2.name}·{t1.name}")


def hcompose_transformations(t2, t1):
    """t2∘t1 for t1: F ⇒ G (K -> K') and t2: F' ⇒ G' (K' -> K''), a
    transformation F'F ⇒ G'G.  F' must be a pseudofunctor since the pasting
    uses both its lax and its colax structure."""
    if t1.kind != t2.kind:
        raise MalformedError("cannot compose a lax with a colax transformation")
    Fp, Gp = t2.source, t2.target
    F, G = t1.source, t1.target
    if not (Fp.pseudo and Fp.is_lax and Fp.is_colax and Gp.pseudo):
        raise MalformedError("horizontal composition needs pseudofunctors: the pasting uses both the lax and the colax structure")
    if F.target is not Fp.source and F.target != Fp.source:
        raise MalformedError("transformations are not horizontally composable")
    S = F.source
    T = Fp.target
    i, h, v = T.i, T.h, T.v

    def one(a):
        return T.comp1(t2.one(G.on0(a)), Fp.on1(t1.one(a)))

    def cell(f):
        a, b = S.src0(f), S.tgt0(f)
        x_a, x_b = t1.one(a), t1.one(b)
        Ff, Gf = F.on1(f), G.on1(f)
        if t1.kind == "colax":
            return v(
                h(i(t2.one(G.on0(b))), Fp.lax2(x_b, Ff)),
                h(i(t2.one(G.on0(b))), Fp.on2(t1.cell(f))),
                h(i(t2.one(G.on0(b))), Fp.colax2(Gf, x_a)),
                h(t2.cell(Gf), i(Fp.on1(x_a))),
            )
        return v(
            h(t2.cell(Gf), i(Fp.on1(x_a))),
            h(i(t2.one(G.on0(b))), Fp.lax2(Gf, x_a)),
            h(i(t2.one(G.on0(b))), Fp.on2(t1.cell(f))),
            h(i(t2.one(G.on0(b))), Fp.colax2(x_b, Ff)),
        )

    return Transformation2(t1.kind, compose_functors2(Fp, F), compose_functors2(Gp, G), one, cell,
                           wrt=t1.wrt, name=f"{t2.name}∘{t1.name}")


# -- enumeration -------------------------------------------------------------
def enumerate_transformations(F, G, kind="colax", wrt=None):
    """All (co)lax transformations F ⇒ G by brute force over component
    choices (finite source and target hom-sets required)."""
    S, T = F.source, F.target
    zero = S.zero_cells
    one_choices = [T.one_cells(F.on0(a), G.on0(a)) for a in zero]
    fs = list(all_one_cells(S))
    out = []
    for ones in itertools.product(*one_choices):
        onemap = dict(zip(zero, ones))
        cands = []
        for f in fs:
            a, b = S.src0(f), S.tgt0(f)
            if kind == "colax":
                d, e = T.comp1(onemap[b], F.on1(f)), T.comp1(G.on1(f), onemap[a])
            else:
                d, e = T.comp1(G.on1(f), onemap[a]), T.comp1(onemap[b], F.on1(f))
            cands.append(T.two_cells(d, e))
        for cells in itertools.product(*cands):
            t = Transformation2(kind, F, G, dict(onemap), dict(zip(fs, cells)), wrt=wrt)
            if check_transformation2(t).ok:
                out.append(t)
    return out


def enumerate_modifications(t1, t2):
    S, T = t1.source.source, t1.source.target
    zero = S.zero_cells
    cands = [T.two_cells(t1.one(a), t2.one(a)) for a in zero]
    out = []
    for comps in itertools.product(*cands):
        m = Modification2(t1, t2, dict(zip(zero, comps)))
        if check_modification2(m).ok:
            out.append(m)
    return out


def transformation_category(F, G, kind="colax"):
    """Transformations F ⇒ G and modifications between them as a FinCategory
    (objects are indices into the returned list of transformations)."""
    ts = enumerate_transformations(F, G, kind)
    T = F.target
    S = F.source
    hom, mods = {}, {}
    for i1, t1 in enumerate(ts):
        for i2, t2 in enumerate(ts):
            ms = enumerate_modifications(t1, t2)
            ids = [("mod", i1, i2, m.key()) for m in ms]
            hom[(i1, i2)] = ids
            for k, m in zip(ids, ms):
                mods[k] = m
    comp = {}
    for (i1, i2), fs in hom.items():
        for (j2, j3), gs in hom.items():
            if j2 != i2:
                continue
            for f in fs:
                for g in gs:
                    key = tuple(T.vcomp(gc, fc) for gc, fc in zip(g[3], f[3]))
                    comp[(g, f)] = ("mod", i1, j3, key)
    ident = {i: ("mod", i, i, tuple(T.id2(t.one(a)) for a in S.zero_cells)) for i, t in enumerate(ts)}
    cat = FinCategory(range(len(ts)), hom, comp, ident, name=f"{kind}[{F.name},{G.name}]")
    return ts, cat, mods
