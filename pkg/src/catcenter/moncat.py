"""Strict monoidal categories over table or matrix substrates, lax monoidal
functors, and Yang-Baxter data on a single monoidal category."""
from __future__ import annotations

import itertools

from .fincat import FinCategory, Functor, discrete_category, identity_functor, identity_name, validate_category
from .matrices import MatCategory, kron, swap_matrix
from .report import MalformedError, Report


class MonCat:
    """A strict monoidal category.

    ``tensor_obj`` / ``tensor_mor`` are dicts for table substrates or
    callables for the matrix substrate.  ``is_reversed`` records whether the
    tensor has been flipped relative to the category it was built from.
    """

    def __init__(self, base, tensor_obj, tensor_mor, unit, is_reversed=False, name=""):
        self.base = base
        self.tensor_obj_table = tensor_obj if isinstance(tensor_obj, dict) else None
        self.tensor_mor_table = tensor_mor if isinstance(tensor_mor, dict) else None
        self._tobj = tensor_obj
        self._tmor = tensor_mor
        self.unit = unit
        self.is_reversed = is_reversed
        self.name = name

    @property
    def is_table(self):
        return isinstance(self.base, FinCategory)

    def tensor(self, a, b):
        if self.tensor_obj_table is not None:
            try:
                return self.tensor_obj_table[(a, b)]
            except KeyError:
                raise MalformedError(f"tensor of objects {a!r}, {b!r} undefined") from None
        return self._tobj(a, b)

    def tensor_mor(self, f, g):
        if self.tensor_mor_table is not None:
            try:
                return self.tensor_mor_table[(f, g)]
            except KeyError:
                raise MalformedError(f"tensor of morphisms {f!r}, {g!r} undefined") from None
        return self._tmor(f, g)

    def tensor_many(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = self.tensor(out, x)
        return out

    def reversed(self):
        """The same category with X⊗'Y := Y⊗X; the flag flips."""
        if self.tensor_obj_table is not None:
            tobj = {(b, a): v for (a, b), v in self.tensor_obj_table.items()}
            tmor = {(g, f): v for (f, g), v in self.tensor_mor_table.items()}
        else:
            t, m = self._tobj, self._tmor
            tobj = lambda a, b: t(b, a)  # noqa: E731
            tmor = lambda f, g: m(g, f)  # noqa: E731
        name = self.name[:-4] if self.name.endswith("^rev") else f"{self.name}^rev"
        return MonCat(self.base, tobj, tmor, self.unit, not self.is_reversed, name=name)

    def __eq__(self, other):
        if not isinstance(other, MonCat):
            return NotImplemented
        if self.is_table != other.is_table:
            return False
        if not self.is_table:
            return self is other or (
                self.base == other.base and self.is_reversed == other.is_reversed and self.unit == other.unit
            )
        return (
            self.base == other.base
            and self.tensor_obj_table == other.tensor_obj_table
            and self.tensor_mor_table == other.tensor_mor_table
            and self.unit == other.unit
            and self.is_reversed == other.is_reversed
        )

    __hash__ = object.__hash__

    def __repr__(self):
        return f"<MonCat {self.name}>"

    # -- serialization (table substrate only) -----------------------------
    def to_spec(self):
        from .fincat import thaw

        if not self.is_table:
            raise ValueError("only table monoidal categories serialize to spec files")
        c = self.base
        spec = c.to_spec()
        spec["tensor_obj"] = [[thaw(a), thaw(b), thaw(self.tensor(a, b))] for a in c.objects for b in c.objects]
        spec["tensor_mor"] = [
            [thaw(f), thaw(g), thaw(self.tensor_mor(f, g))] for f in c.morphisms for g in c.morphisms
        ]
        spec["unit"] = thaw(self.unit)
        if self.is_reversed:
            spec["reversed"] = True
        return spec

    @classmethod
    def from_spec(cls, spec, name=""):
        from .fincat import freeze

        base = FinCategory.from_spec(spec, name=name)
        try:
            tobj = {(freeze(a), freeze(b)): freeze(c) for a, b, c in spec["tensor_obj"]}
            tmor = {(freeze(f), freeze(g)): freeze(h) for f, g, h in spec["tensor_mor"]}
            unit = freeze(spec["unit"])
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedError(f"bad monoidal spec: {e}") from None
        return cls(base, tobj, tmor, unit, bool(spec.get("reversed", False)), name=name)


def mat_moncat(p=2, max_prime=7):
    """Finite-dimensional Z/p-vector spaces as matrices under Kronecker product."""
    return MonCat(MatCategory(p, max_prime), lambda a, b: a * b, kron, 1, name=f"Mat(F{p})")


# -- builders ---------------------------------------------------------------
def _monoid_errors(elems, mult):
    errors = []
    for a, b in itertools.product(elems, repeat=2):
        if mult(a, b) not in elems:
            errors.append(("closure", (a, b)))
    if errors:
        return errors, None
    for a, b, c in itertools.product(elems, repeat=3):
        if mult(mult(a, b), c) != mult(a, mult(b, c)):
            errors.append(("associativity", (a, b, c)))
            break
    unit = next((e for e in elems if all(mult(e, x) == x == mult(x, e) for x in elems)), None)
    if unit is None:
        errors.append(("unit", None))
    return errors, unit


def group_moncat(elements, mult, name=""):
    """Discrete monoidal category of a finite monoid.

    ``mult`` may be a callable or a dict keyed by element pairs.
    """
    elements = list(elements)
    m = mult.__getitem__ if isinstance(mult, dict) else mult
    if isinstance(mult, dict):
        missing = [(a, b) for a in elements for b in elements if (a, b) not in mult]
        if missing:
            raise ValueError(f"multiplication table is missing {missing[0]}")
        m = lambda a, b: mult[(a, b)]  # noqa: E731
    errors, unit = _monoid_errors(elements, m)
    if errors:
        kind, where = errors[0]
        raise ValueError(f"not a monoid table: {kind} fails at {where}")
    base = discrete_category(elements, name=name)
    tobj = {(a, b): m(a, b) for a in elements for b in elements}
    tmor = {(identity_name(a), identity_name(b)): identity_name(m(a, b)) for a in elements for b in elements}
    return MonCat(base, tobj, tmor, unit, name=name)


def poset_max_moncat(name="max{0,1}"):
    """The poset 0 < 1 with tensor max and unit 0."""
    objs = [0, 1]
    le = "0<1"
    hom = {(0, 0): ["1_0"], (1, 1): ["1_1"], (0, 1): [le]}
    comp = {("1_0", "1_0"): "1_0", ("1_1", "1_1"): "1_1", (le, "1_0"): le, ("1_1", le): le}
    base = FinCategory(objs, hom, comp, {0: "1_0", 1: "1_1"}, name=name)
    tobj = {(a, b): max(a, b) for a in objs for b in objs}

    def mor(a, b):
        return identity_name(a) if a == b else le

    tmor = {}
    for f in base.morphisms:
        for g in base.morphisms:
            s = max(base.src(f), base.src(g))
            t = max(base.tgt(f), base.tgt(g))
            tmor[(f, g)] = mor(s, t)
    return MonCat(base, tobj, tmor, 0, name=name)


def commutative_monoid_moncat(elements, mult, name=""):
    """One object, morphisms the elements of a commutative monoid; both
    composition and tensor are the monoid product."""
    elements = list(elements)
    errors, unit = _monoid_errors(elements, mult)
    if errors:
        raise ValueError(f"not a monoid: {errors[0]}")
    if any(mult(a, b) != mult(b, a) for a in elements for b in elements):
        raise ValueError("monoid must be commutative to carry a strict tensor")
    base = FinCategory(["*"], {("*", "*"): elements},
                       {(g, f): mult(g, f) for g in elements for f in elements}, {"*": unit}, name=name)
    tmor = {(f, g): mult(f, g) for f in elements for g in elements}
    return MonCat(base, {("*", "*"): "*"}, tmor, "*", name=name)


# -- validation ---------------------------------------------------------------
def validate_moncat(C, pool=None):
    """Check strictness and functoriality of the tensor.

    Table substrates are checked exhaustively.  Matrix substrates need a
    ``pool`` of matrices; objects are then the dimensions occurring in it.
    """
    r = Report(f"monoidal category {C.name}".strip())
    if C.is_table:
        r.merge(validate_category(C.base), "base: ")
        if not r.ok:
            return r
        objs, mors = C.base.objects, C.base.morphisms
    else:
        if pool is None:
            raise MalformedError("matrix substrate needs an explicit pool of matrices")
        mors = list(pool)
        objs = sorted({m.rows for m in mors} | {m.cols for m in mors} | {C.unit})
    B = C.base

    r.law("tensor well-typed")
    for a, b in itertools.product(objs, repeat=2):
        try:
            ab = C.tensor(a, b)
        except MalformedError:
            r.malformed("tensor well-typed", (a, b), "tensor of objects undefined")
            continue
        if not B.has_object(ab):
            r.malformed("tensor well-typed", (a, b), f"tensor {ab!r} is not an object")
    for f, g in itertools.product(mors, repeat=2):
        try:
            fg = C.tensor_mor(f, g)
        except MalformedError:
            r.malformed("tensor well-typed", (f, g), "tensor of morphisms undefined")
            continue
        if not B.has_morphism(fg):
            r.malformed("tensor well-typed", (f, g), f"tensor {fg!r} is not a morphism")
        elif B.src(fg) != C.tensor(B.src(f), B.src(g)) or B.tgt(fg) != C.tensor(B.tgt(f), B.tgt(g)):
            r.malformed("tensor well-typed", (f, g), "tensor of morphisms has the wrong type")
    if r.has_malformed:
        return r

    r.law("unit objects").law("associativity on objects").law("unit morphisms")
    r.law("associativity on morphisms").law("identities").law("interchange")
    for a in objs:
        r.check("unit objects", C.tensor(C.unit, a) == a and C.tensor(a, C.unit) == a, a)
    for a, b, c in itertools.product(objs, repeat=3):
        r.check("associativity on objects", C.tensor(C.tensor(a, b), c) == C.tensor(a, C.tensor(b, c)), (a, b, c))
    iu = B.id(C.unit)
    for f in mors:
        r.check("unit morphisms", C.tensor_mor(iu, f) == f and C.tensor_mor(f, iu) == f, f)
    for f, g, h in itertools.product(mors, repeat=3):
        lhs = C.tensor_mor(C.tensor_mor(f, g), h)
        if lhs != C.tensor_mor(f, C.tensor_mor(g, h)):
            r.check("associativity on morphisms", False, (f, g, h))
    for a, b in itertools.product(objs, repeat=2):
        r.check("identities", C.tensor_mor(B.id(a), B.id(b)) == B.id(C.tensor(a, b)), (a, b))
    pairs = _composable(B, mors)
    for (g, f), (g2, f2) in itertools.product(pairs, repeat=2):
        lhs = B.compose(C.tensor_mor(g, g2), C.tensor_mor(f, f2))
        rhs = C.tensor_mor(B.compose(g, f), B.compose(g2, f2))
        if lhs != rhs:
            r.check("interchange", False, ((g, f), (g2, f2)))
    return r


def _composable(B, mors):
    return [(g, f) for f in mors for g in mors if B.src(g) == B.tgt(f)]


# -- monoidal functors ------------------------------------------------------
class MapFunctor:
    """A functor given by two callables (used over matrix substrates)."""

    def __init__(self, source, target, on_obj, on_mor, name=""):
        self.source = source
        self.target = target
        self.on_obj = on_obj
        self.on_mor = on_mor
        self.name = name


class LaxMonFunctor:
    """F with lax structure F2[X,Y]: F(X)⊗F(Y) -> F(X⊗Y) and F0: I -> F(I),
    optionally a colax structure in the opposite direction.

    ``source`` and ``target`` are MonCats; ``functor`` acts on their bases.
    Structure maps may be dicts or callables.
    """

    def __init__(self, source, target, functor, lax2=None, lax0=None, colax2=None, colax0=None, name=""):
        self.source = source
        self.target = target
        self.functor = functor
        self._lax2, self.lax0 = lax2, lax0
        self._colax2, self.colax0 = colax2, colax0
        self.name = name

    @property
    def is_lax(self):
        return self._lax2 is not None and self.lax0 is not None

    @property
    def is_colax(self):
        return self._colax2 is not None and self.colax0 is not None

    def on_obj(self, x):
        return self.functor.on_obj(x)

    def on_mor(self, f):
        return self.functor.on_mor(f)

    def lax2(self, x, y):
        s = self._lax2
        return s[(x, y)] if isinstance(s, dict) else s(x, y)

    def colax2(self, x, y):
        s = self._colax2
        return s[(x, y)] if isinstance(s, dict) else s(x, y)

    def __repr__(self):
        return f"<LaxMonFunctor {self.name}>"


def _functor_for(source, target, on_obj, on_mor, name):
    if source.is_table and target.is_table:
        return Functor(source.base, target.base,
                       {a: on_obj(a) for a in source.base.objects},
                       {f: on_mor(f) for f in source.base.morphisms}, name=name)
    return MapFunctor(source.base, target.base, on_obj, on_mor, name=name)


def strict_monfunctor(source, target, on_obj, on_mor=None, name=""):
    """A strict monoidal functor: F(X)⊗F(Y) = F(X⊗Y) and F(I) = I on the nose,
    with identity structure maps (both lax and colax, hence strong)."""
    if on_mor is None:
        if not (source.is_table and target.is_table):
            raise ValueError("morphism map required for matrix substrates")
        # discrete categories: identities go to identities
        def on_mor(f, _s=source.base, _t=target.base):
            a = _s.src(f)
            if f != _s.id(a):
                raise ValueError("morphism map required for non-discrete categories")
            return _t.id(on_obj(a))
    F = _functor_for(source, target, on_obj, on_mor, name)
    T = target.base

    def struct(x, y):
        return T.id(F.on_obj(source.tensor(x, y)))

    if source.is_table:
        objs = source.base.objects
        s2 = {(x, y): struct(x, y) for x in objs for y in objs}
    else:
        s2 = struct
    u = T.id(F.on_obj(source.unit))
    return LaxMonFunctor(source, target, F, s2, u, s2, u, name=name)


def identity_monfunctor(C):
    if C.is_table:
        F = identity_functor(C.base)
        objs = C.base.objects
        s2 = {(x, y): C.base.id(C.tensor(x, y)) for x in objs for y in objs}
    else:
        F = MapFunctor(C.base, C.base, lambda x: x, lambda f: f, name="Id")
        s2 = lambda x, y: C.base.id(C.tensor(x, y))  # noqa: E731
    u = C.base.id(C.unit)
    return LaxMonFunctor(C, C, F, s2, u, s2, u, name=f"Id_{C.name}")


def check_lax_monoidal(F, pool=None):
    """Naturality, associativity and unitality of the lax part (and of the
    colax part, and invertibility, when present)."""
    S, T = F.source, F.target
    if not (F.is_lax or F.is_colax):
        raise MalformedError("functor carries neither lax nor colax structure")
    r = Report(f"monoidal functor {F.name}".strip())
    if S.is_table:
        objs, mors = S.base.objects, S.base.morphisms
    else:
        if pool is None:
            raise MalformedError("matrix substrate needs an explicit pool")
        mors = list(pool)
        objs = sorted({m.rows for m in mors} | {m.cols for m in mors} | {S.unit})
    B = T.base
    if isinstance(F.functor, Functor):
        r.merge(_check_functor_quiet(F.functor), "functor: ")
        if not r.ok:
            return r
    fI = F.on_obj(S.unit)
    if not B.has_object(fI):
        raise MalformedError("image of the unit is not an object of the target")

    def typed(m, s, t):
        return B.has_morphism(m) and B.src(m) == s and B.tgt(m) == t

    if F.is_lax:
        r.law("lax: well-typed")
        for x, y in itertools.product(objs, repeat=2):
            m = F.lax2(x, y)
            if not typed(m, T.tensor(F.on_obj(x), F.on_obj(y)), F.on_obj(S.tensor(x, y))):
                r.check("lax: well-typed", False, (x, y), "F2 has the wrong type")
        r.check("lax: unitality", typed(F.lax0, T.unit, fI), "F0", "F0 is not a morphism I -> F(I)")
        if r.ok:
            _check_lax_laws(F, S, T, objs, mors, r, "lax: ", F.lax2, F.lax0, colax=False)
    if F.is_colax:
        r.law("colax: well-typed")
        for x, y in itertools.product(objs, repeat=2):
            m = F.colax2(x, y)
            if not typed(m, F.on_obj(S.tensor(x, y)), T.tensor(F.on_obj(x), F.on_obj(y))):
                r.check("colax: well-typed", False, (x, y), "colax F2 has the wrong type")
        r.check("colax: unitality", typed(F.colax0, fI, T.unit), "F0", "colax F0 is not a morphism F(I) -> I")
        if r.ok:
            _check_lax_laws(F, S, T, objs, mors, r, "colax: ", F.colax2, F.colax0, colax=True)
    if F.is_lax and F.is_colax and r.ok:
        r.law("strong: inverses")
        for x, y in itertools.product(objs, repeat=2):
            a, b = F.lax2(x, y), F.colax2(x, y)
            ok = B.compose(a, b) == B.id(B.src(b)) and B.compose(b, a) == B.id(B.src(a))
            r.check("strong: inverses", ok, (x, y))
        ok = B.compose(F.lax0, F.colax0) == B.id(fI) and B.compose(F.colax0, F.lax0) == B.id(T.unit)
        r.check("strong: inverses", ok, "F0")
    return r


def _check_functor_quiet(Fn):
    from .fincat import check_functor

    return check_functor(Fn)


def _check_lax_laws(F, S, T, objs, mors, r, prefix, s2, s0, colax):
    B, SB = T.base, S.base
    comp = (lambda *ms: B.compose_path(*reversed(ms))) if colax else (lambda *ms: B.compose_path(*ms))
    # comp(a, b, ...) composes in diagram order for the lax direction; for
    # the colax direction the same diagram is read backwards.
    tm = T.tensor_mor
    Fo, Fm = F.on_obj, F.on_mor
    r.law(prefix + "naturality").law(prefix + "associativity").law(prefix + "unitality")
    for f, g in itertools.product(mors, repeat=2):
        a, b = SB.src(f), SB.src(g)
        c, d = SB.tgt(f), SB.tgt(g)
        if colax:
            lhs = B.compose(tm(Fm(f), Fm(g)), s2(a, b))
            rhs = B.compose(s2(c, d), Fm(S.tensor_mor(f, g)))
        else:
            lhs = B.compose(s2(c, d), tm(Fm(f), Fm(g)))
            rhs = B.compose(Fm(S.tensor_mor(f, g)), s2(a, b))
        r.check(prefix + "naturality", lhs == rhs, (f, g))
    for x, y, z in itertools.product(objs, repeat=3):
        idx, idz = B.id(Fo(x)), B.id(Fo(z))
        lhs = comp(tm(s2(x, y), idz), s2(S.tensor(x, y), z))
        rhs = comp(tm(idx, s2(y, z)), s2(x, S.tensor(y, z)))
        r.check(prefix + "associativity", lhs == rhs, (x, y, z))
    for x in objs:
        idx = B.id(Fo(x))
        left = comp(tm(s0, idx), s2(S.unit, x))
        right = comp(tm(idx, s0), s2(x, S.unit))
        r.check(prefix + "unitality", left == idx, ("left", x))
        r.check(prefix + "unitality", right == idx, ("right", x))


# -- Yang-Baxter data on one monoidal category ------------------------------
class YBO1:
    """Components c[X,Y]: X⊗Y -> Y⊗X on a monoidal category (e.g. a braiding)."""

    def __init__(self, carrier, components, name=""):
        self.carrier = carrier
        self._c = components
        self.name = name

    def __call__(self, x, y):
        c = self._c
        return c[(x, y)] if isinstance(c, dict) else c(x, y)


def identity_braiding(C):
    """Identity components; valid exactly when C is symmetric on the nose
    with X⊗Y = Y⊗X (e.g. a commutative discrete group category)."""
    if C.is_table:
        objs = C.base.objects
        return YBO1(C, {(x, y): C.base.id(C.tensor(x, y)) for x in objs for y in objs}, name="id")
    return YBO1(C, lambda x, y: C.base.id(C.tensor(x, y)), name="id")


def swap_braiding(C):
    """The symmetric braiding of the matrix substrate."""
    if C.is_table:
        raise ValueError("swap braiding lives on the matrix substrate")
    p = C.base.p
    if C.is_reversed:
        return YBO1(C, lambda x, y: swap_matrix(y, x, p), name="swap")
    return YBO1(C, lambda x, y: swap_matrix(x, y, p), name="swap")


def check_ybo1(c, pool=None):
    """Checked by delooping: c becomes a Yang-Baxter operator on the identity
    functor of the delooped 2-category."""
    from .bilax import check_ybo, ybo_from_braiding

    if pool is not None and not (isinstance(pool, tuple) and len(pool) == 2 and isinstance(pool[0], tuple)):
        # a flat list of matrices, as for validate_moncat
        pool = list(pool)
        dims = sorted({m.rows for m in pool} | {m.cols for m in pool} | {c.carrier.unit})
        pool = (tuple(dims), tuple(pool))
    return check_ybo(ybo_from_braiding(c, pool=pool))
