"""Half-braidings, twisted centers, and their translation to (co)lax
transformations between deloopings.

Left half-braidings have components σ_X: M⊲F(X) -> G(X)⊳M, right ones
σ̃_X: G(X)⊳M -> M⊲F(X), where F: E -> D and G: E -> C are lax monoidal and
M lives in a (C, D)-bimodule category.
"""
from __future__ import annotations


from .fincat import FinCategory
from .report import MalformedError, Report
from .twocat import (
    Deloop,
    Modification2,
    STAR,
    Transformation2,
    bimodule_twist,
    deloop_bimodule,
    deloop_functor,
    delooping,
    regular_bimodule,
)


class HalfBraiding:
    def __init__(self, bimodule, F, G, carrier, components, side="left", strength="weak", inverses=None):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if strength not in ("weak", "strong"):
            raise ValueError("strength must be 'weak' or 'strong'")
        self.bimodule = bimodule
        self.F, self.G = F, G
        self.carrier = carrier
        self.components = dict(components)
        self.side = side
        self.strength = strength
        self.inverses = dict(inverses) if inverses is not None else None

    def __getitem__(self, x):
        return self.components[x]

    def key(self):
        return (self.side, self.carrier, tuple(sorted(self.components.items(), key=lambda kv: repr(kv[0]))))

    def __eq__(self, other):
        if not isinstance(other, HalfBraiding):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"HalfBraiding({self.side}, {self.strength}, M={self.carrier!r})"


def _braiding_type(Bm, F, G, m, x, side):
    a, b = Bm.ract(m, F.on_obj(x)), Bm.lact(G.on_obj(x), m)
    return (a, b) if side == "left" else (b, a)


def _check_twist(Bm, F, G):
    E = F.source
    if G.source is not E and G.source != E:
        raise MalformedError("twisting functors have different domains")
    if F.target != Bm.right or G.target != Bm.left:
        raise MalformedError("twisting functors do not land in the acting categories")
    if not (F.is_lax and G.is_lax):
        raise MalformedError("twisting functors must be lax monoidal")


def _law_checks(Bm, F, G, m, comp, side, xs=None, only=None):
    """Yield (law, ok, witness) for every instance whose components are all
    available in ``comp`` (a dict, possibly partial)."""
    E, D, C, M = F.source, Bm.right, Bm.left, Bm.carrier
    EB = E.base
    idm = M.id(m)
    has = comp.__contains__
    objs = EB.objects if xs is None else xs
    if only in (None, "naturality"):
        for x in objs:
            for y in objs:
                if not (has(x) and has(y)):
                    continue
                for u in EB.homset(x, y):
                    if side == "left":
                        lhs = M.compose(comp[y], Bm.ract_mor(idm, F.on_mor(u)))
                        rhs = M.compose(Bm.lact_mor(G.on_mor(u), idm), comp[x])
                    else:
                        lhs = M.compose(comp[y], Bm.lact_mor(G.on_mor(u), idm))
                        rhs = M.compose(Bm.ract_mor(idm, F.on_mor(u)), comp[x])
                    yield "naturality", lhs == rhs, u
    if only in (None, "multiplicativity"):
        for y in objs:
            for x in objs:
                yx = E.tensor(y, x)
                if not (has(x) and has(y) and has(yx)):
                    continue
                Fx, Gy = F.on_obj(x), G.on_obj(y)
                if side == "left":
                    lhs = M.compose(comp[yx], Bm.ract_mor(idm, F.lax2(y, x)))
                    rhs = M.compose_path(
                        Bm.ract_mor(comp[y], D.base.id(Fx)),
                        Bm.lact_mor(C.base.id(Gy), comp[x]),
                        Bm.lact_mor(G.lax2(y, x), idm),
                    )
                else:
                    lhs = M.compose(comp[yx], Bm.lact_mor(G.lax2(y, x), idm))
                    rhs = M.compose_path(
                        Bm.lact_mor(C.base.id(Gy), comp[x]),
                        Bm.ract_mor(comp[y], D.base.id(Fx)),
                        Bm.ract_mor(idm, F.lax2(y, x)),
                    )
                yield "multiplicativity", lhs == rhs, (y, x)
    if only in (None, "unit"):
        i = E.unit
        if has(i):
            if side == "left":
                ok = M.compose(comp[i], Bm.ract_mor(idm, F.lax0)) == Bm.lact_mor(G.lax0, idm)
            else:
                ok = M.compose(comp[i], Bm.lact_mor(G.lax0, idm)) == Bm.ract_mor(idm, F.lax0)
            yield "unit", ok, i


def check_half_braiding(h):
    Bm, F, G, m = h.bimodule, h.F, h.G, h.carrier
    _check_twist(Bm, F, G)
    E, M = F.source, Bm.carrier
    r = Report(f"{h.side} half-braiding on {m!r}")
    r.law("well-typed")
    if not M.has_object(m):
        r.malformed("well-typed", m, "carrier is not an object of the bimodule category")
        return r
    for x in h.components:
        if not E.base.has_object(x):
            r.malformed("well-typed", x, "component indexed by a non-object")
    for x in E.base.objects:
        if x not in h.components:
            r.malformed("well-typed", x, "missing component")
            continue
        s = h.components[x]
        a, b = _braiding_type(Bm, F, G, m, x, h.side)
        if not M.has_morphism(s) or M.src(s) != a or M.tgt(s) != b:
            r.malformed("well-typed", x, "component has the wrong source or target")
    if r.has_malformed:
        return r
    r.law("naturality").law("multiplicativity").law("unit")
    for law, ok, w in _law_checks(Bm, F, G, m, h.components, h.side):
        r.check(law, ok, w)
    if h.strength == "strong":
        r.law("invertibility")
        inv = h.inverses or {}
        for x in E.base.objects:
            s, t = h.components[x], inv.get(x)
            ok = (t is not None and M.has_morphism(t) and M.src(t) == M.tgt(s) and M.tgt(t) == M.src(s)
                  and M.compose(t, s) == M.id(M.src(s)) and M.compose(s, t) == M.id(M.tgt(s)))
            r.check("invertibility", ok, x)
    return r


def _search(Bm, F, G, m, side):
    """Backtracking over σ_X, object by object, pruning on every law whose
    components have all been chosen."""
    E, M = F.source, Bm.carrier
    xs = list(E.base.objects)
    if E.unit in xs:  # the unit law pins σ_I first
        xs.remove(E.unit)
        xs.insert(0, E.unit)
    cands = []
    for x in xs:
        a, b = _braiding_type(Bm, F, G, m, x, side)
        cands.append(M.homset(a, b))
    out = []
    chosen = {}

    def consistent(x):
        for _, ok, w in _law_checks(Bm, F, G, m, chosen, side):
            if not ok:
                return False
        return True

    def go(k):
        if k == len(xs):
            out.append(dict(chosen))
            return
        x = xs[k]
        for s in cands[k]:
            chosen[x] = s
            if consistent(x):
                go(k + 1)
            del chosen[x]

    go(0)
    return out


def enumerate_center(Bm, F, G, side="left", strength="weak"):
    """All half-braidings of the given side/strength, grouped by carrier in
    canonical order, together with the center category they form."""
    _check_twist(Bm, F, G)
    M = Bm.carrier
    if not isinstance(M, FinCategory):
        raise MalformedError("center enumeration needs a table substrate")
    E = F.source
    objs = []
    for m in M.objects:
        for comp in _search(Bm, F, G, m, side):
            # keep canonical object order in the component dict
            comp = {x: comp[x] for x in E.base.objects}
            if strength == "strong":
                inv = {x: M.inverse(s) for x, s in comp.items()}
                if any(v is None for v in inv.values()):
                    continue
                objs.append(HalfBraiding(Bm, F, G, m, comp, side, "strong", inv))
            else:
                objs.append(HalfBraiding(Bm, F, G, m, comp, side, "weak"))
    return CenterCategory(Bm, F, G, side, strength, objs)


def is_center_morphism(f, h1, h2):
    """(G(X)⊳f)σ_X = τ_X(f⊲F(X)) for left, (f⊲F(X))σ̃_X = τ̃_X(G(X)⊳f) for right."""
    Bm, F, G = h1.bimodule, h1.F, h1.G
    M = Bm.carrier
    if M.src(f) != h1.carrier or M.tgt(f) != h2.carrier:
        return False
    for x in F.source.base.objects:
        gx, fx = Bm.left.base.id(G.on_obj(x)), Bm.right.base.id(F.on_obj(x))
        if h1.side == "left":
            lhs = M.compose(Bm.lact_mor(gx, f), h1[x])
            rhs = M.compose(h2[x], Bm.ract_mor(f, fx))
        else:
            lhs = M.compose(Bm.ract_mor(f, fx), h1[x])
            rhs = M.compose(h2[x], Bm.lact_mor(gx, f))
        if lhs != rhs:
            return False
    return True


class CenterCategory:
    """Objects are half-braidings (indexed by position); a morphism i -> j is
    tagged ('z', i, j, f) for each carrier morphism f passing the center
    morphism condition."""

    def __init__(self, Bm, F, G, side, strength, objects):
        self.bimodule, self.F, self.G = Bm, F, G
        self.side, self.strength = side, strength
        self.objects = list(objects)
        M = Bm.carrier
        hom, comp = {}, {}
        for i, h1 in enumerate(self.objects):
            for j, h2 in enumerate(self.objects):
                hom[(i, j)] = [("z", i, j, f) for f in M.homset(h1.carrier, h2.carrier) if is_center_morphism(f, h1, h2)]
        for (i, j), fs in hom.items():
            for k in range(len(self.objects)):
                for g in hom[(j, k)]:
                    for f in fs:
                        comp[(g, f)] = ("z", i, k, M.compose(g[3], f[3]))
        ident = {i: ("z", i, i, M.id(h.carrier)) for i, h in enumerate(self.objects)}
        self.category = FinCategory(range(len(self.objects)), hom, comp, ident,
                                    name=f"Z^{strength[0]}_{side[0]}")

    def __len__(self):
        return len(self.objects)

    def index(self, h):
        return self.objects.index(h)

    def summary(self):
        lines = [f"{self.category.name}: {len(self.objects)} object(s)"]
        for i, h in enumerate(self.objects):
            table = ", ".join(f"{x}: {s}" for x, s in h.components.items())
            lines.append(f"  [{i}] M={h.carrier}  σ = {{{table}}}")
        return "\n".join(lines)


def xi_invert(h):
    """(M, σ) -> (M, σ⁻¹), exchanging left and right strong half-braidings."""
    if h.strength != "strong" or h.inverses is None:
        raise MalformedError("only strong half-braidings can be inverted")
    side = "right" if h.side == "left" else "left"
    return HalfBraiding(h.bimodule, h.F, h.G, h.carrier, h.inverses, side, "strong", h.components)


# -- half-braidings as transformations --------------------------------------
def _frame(Bm, F, G, mode):
    if mode is None:
        mode = "delooping" if Bm.regular_of is not None else "bimodule"
    E = F.source
    if mode == "delooping":
        if Bm.regular_of is None:
            raise MalformedError("one-object translation needs a regular bimodule")
        K = delooping(Bm.regular_of)
        S = delooping(E)
        return mode, K, deloop_functor(F, S, K), deloop_functor(G, S, K)
    K = getattr(Bm, "_delooped", None)
    if K is None:
        K = deloop_bimodule(Bm)
        Bm._delooped = K
    Fd, Gd = bimodule_twist(F, G, K)
    return mode, K, Fd, Gd


def center_to_colax(h, mode=None):
    """Left half-braidings become colax transformations, right ones lax
    transformations; strong ones come with inverses (pseudonatural).

    ``mode='delooping'`` (regular bimodules only) targets the one-object
    delooping; ``mode='bimodule'`` targets the two-object delooping of the
    bimodule category, with F landing on 0-cell 0 and G on 0-cell 1."""
    Bm, F, G = h.bimodule, h.F, h.G
    mode, K, Fd, Gd = _frame(Bm, F, G, mode)
    tag = (lambda x: x) if mode == "delooping" else (lambda x: ("M", x))
    kind = "colax" if h.side == "left" else "lax"
    one = {a: tag(h.carrier) for a in Fd.source.zero_cells}
    two = {x: tag(s) for x, s in h.components.items()}
    inv = {x: tag(s) for x, s in h.inverses.items()} if h.inverses is not None else None
    t = Transformation2(kind, Fd, Gd, one, two, inv, wrt="lax", name=f"χ[{h.carrier}]")
    t.mode = mode
    return t


def colax_to_center(t, bimodule=None, strength=None):
    """Inverse of ``center_to_colax``; the bimodule is recovered from the
    target 2-category unless given."""
    F, G = t.source.monoidal, t.target.monoidal
    if F is None or G is None:
        raise MalformedError("transformation is not between delooped monoidal functors")
    K = t.source.target
    if isinstance(K, Deloop):
        if t.source.on0(STAR) != STAR or t.target.on0(STAR) != STAR:
            raise MalformedError("unexpected 0-cell images")
        Bm = bimodule or regular_bimodule(K.moncat.reversed())
        untag = lambda x: x  # noqa: E731
    else:
        Bm = bimodule or getattr(K, "bimodule", None)
        if Bm is None or t.source.on0(STAR) != 0 or t.target.on0(STAR) != 1:
            raise MalformedError("transformation does not match the bimodule delooping pattern")

        def untag(x):
            if not (isinstance(x, tuple) and len(x) == 2 and x[0] == "M"):
                raise MalformedError(f"{x!r} is not a cell of the bimodule hom-category")
            return x[1]
    side = "left" if t.kind == "colax" else "right"
    objs = F.source.base.objects
    comp = {x: untag(t.cell(x)) for x in objs}
    inv = {x: untag(t.inverse(x)) for x in objs} if t.is_pseudo else None
    if strength is None:
        strength = "strong" if inv is not None else "weak"
    return HalfBraiding(Bm, F, G, untag(t.one(STAR)), comp, side, strength, inv)


def morphism_to_modification(f, t1, t2):
    tag = (lambda x: x) if getattr(t1, "mode", "delooping") == "delooping" else (lambda x: ("M", x))
    return Modification2(t1, t2, {STAR: tag(f)})


def modification_to_morphism(a):
    x = a.comp(STAR)
    if getattr(a.source, "mode", "delooping") == "bimodule":
        return x[1]
    return x


# -- composition --------------------------------------------------------------
def unit_center_object(C, F, side="left"):
    """(I, identity) over the twist (F, F) in the regular bimodule of C."""
    Bm = regular_bimodule(C)
    comp = {x: C.base.id(F.on_obj(x)) for x in F.source.base.objects}
    return HalfBraiding(Bm, F, F, C.unit, comp, side, "strong", comp)


def compose_center_objects(n, m):
    """n over (G, H) after m over (F, G): carrier N⊗M with braiding
    (τ_X⊗M)(N⊗σ_X) on the left, (N⊗σ̃_X)(τ̃_X⊗M) on the right."""
    if n.side != m.side:
        raise MalformedError("cannot compose half-braidings of different sides")
    C = m.bimodule.regular_of
    if C is None or n.bimodule.regular_of is None or n.bimodule.regular_of != C:
        raise MalformedError("composition is defined for half-braidings in the same regular bimodule")
    if m.G is not n.F and any(m.G.on_obj(x) != n.F.on_obj(x) for x in m.F.source.base.objects):
        raise MalformedError("twists are not composable")
    B = C.base
    N, M = n.carrier, m.carrier
    comp = {}
    for x in m.F.source.base.objects:
        a = C.tensor_mor(B.id(N), m[x])
        b = C.tensor_mor(n[x], B.id(M))
        comp[x] = B.compose(b, a) if m.side == "left" else B.compose(a, b)
    inv = None
    if n.inverses is not None and m.inverses is not None:
        inv = {}
        for x in comp:
            a = C.tensor_mor(B.id(N), m.inverses[x])
            b = C.tensor_mor(n.inverses[x], B.id(M))
            inv[x] = B.compose(a, b) if m.side == "left" else B.compose(b, a)
    strength = "strong" if inv is not None else "weak"
    return HalfBraiding(m.bimodule, m.F, n.G, C.tensor(N, M), comp, m.side, strength, inv)
