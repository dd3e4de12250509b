"""Adjunctions in finite 2-categories, autonomy, and their use for
inverting and dualizing half-braidings.

Naming follows the usual 2-categorical convention for a 1-cell f: A -> B:

* a left adjoint u: B -> A comes with η: id_A ⇒ u∘f and ε: f∘u ⇒ id_B;
* a right adjoint v: B -> A comes with η̄: id_B ⇒ f∘v and ε̄: v∘f ⇒ id_A.
"""
from __future__ import annotations

from dataclasses import dataclass

from .center import HalfBraiding, center_to_colax, colax_to_center
from .report import MalformedError, Report
from .twocat import (
    Modification2,
    Transformation2,
    all_one_cells,
    check_lax_functor2,
    check_modification2,
    check_transformation2,
    identity_transformation2,
    vcompose_transformations,
)


class InconsistentAdjunction(RuntimeError):
    """Adjunction data produced a non-inverse; the data must be corrupt."""


@dataclass(frozen=True)
class Adjunction:
    f: object
    adjoint: object
    unit: object
    counit: object
    handedness: str  # "left": adjoint is a left adjoint of f


def snake_left(K, f, u, eta, eps):
    first = K.v(K.h(K.i(f), eta), K.h(eps, K.i(f))) == K.i(f)
    return first and K.v(K.h(eta, K.i(u)), K.h(K.i(u), eps)) == K.i(u)


def snake_right(K, f, v, eta, eps):
    first = K.v(K.h(K.i(v), eta), K.h(eps, K.i(v))) == K.i(v)
    return first and K.v(K.h(eta, K.i(f)), K.h(K.i(f), eps)) == K.i(f)


def check_adjunction(K, adj):
    r = Report(f"{adj.handedness} adjunction for {adj.f!r}")
    f, u, eta, eps = adj.f, adj.adjoint, adj.unit, adj.counit
    a, b = K.src0(f), K.tgt0(f)
    if adj.handedness == "left":
        types = (K.dom(eta), K.cod(eta), K.dom(eps), K.cod(eps)) == (K.id1(a), K.comp1(u, f), K.comp1(f, u), K.id1(b))
    else:
        types = (K.dom(eta), K.cod(eta), K.dom(eps), K.cod(eps)) == (K.id1(b), K.comp1(f, u), K.comp1(u, f), K.id1(a))
    r.law("well-typed")
    if not types:
        r.malformed("well-typed", f, "unit or counit has the wrong type")
        return r
    r.law("snake identities")
    snake = snake_left if adj.handedness == "left" else snake_right
    r.check("snake identities", snake(K, f, u, eta, eps), f)
    return r


def find_adjoint(K, f, handedness="left"):
    """Every (u, unit, counit) making u a left (right) adjoint of f, in the
    canonical enumeration order."""
    if not K.is_one_cell(f):
        raise MalformedError(f"{f!r} is not a 1-cell")
    if handedness not in ("left", "right"):
        raise ValueError("handedness must be 'left' or 'right'")
    a, b = K.src0(f), K.tgt0(f)
    out = []
    for u in K.one_cells(b, a):
        if handedness == "left":
            etas = K.two_cells(K.id1(a), K.comp1(u, f))
            epss = K.two_cells(K.comp1(f, u), K.id1(b))
            first = lambda eta, eps: K.v(K.h(K.i(f), eta), K.h(eps, K.i(f))) == K.i(f)  # noqa: E731
            second = lambda eta, eps: K.v(K.h(eta, K.i(u)), K.h(K.i(u), eps)) == K.i(u)  # noqa: E731
        else:
            etas = K.two_cells(K.id1(b), K.comp1(f, u))
            epss = K.two_cells(K.comp1(u, f), K.id1(a))
            first = lambda eta, eps: K.v(K.h(K.i(u), eta), K.h(eps, K.i(u))) == K.i(u)  # noqa: E731
            second = lambda eta, eps: K.v(K.h(eta, K.i(f)), K.h(K.i(f), eps)) == K.i(f)  # noqa: E731
        for eta in etas:
            for eps in epss:
                if first(eta, eps) and second(eta, eps):
                    out.append(Adjunction(f, u, eta, eps, handedness))
    return out


def is_autonomous(K):
    """(True, {f: (left, right)}) with the canonical adjunctions, or
    (False, f) for the first 1-cell lacking an adjoint."""
    cert = {}
    for f in all_one_cells(K):
        left, right = find_adjoint(K, f, "left"), find_adjoint(K, f, "right")
        if not left or not right:
            return False, f
        cert[f] = (left[0], right[0])
    return True, cert


def image_adjunction(F, adj):
    """A pseudofunctor carries an adjunction to an adjunction, with the
    evaluation F0c·F(ε)·F2 and coevaluation F2c·F(η)·F0."""
    if not F.pseudo:
        raise MalformedError("only pseudofunctors preserve adjunctions")
    T, S = F.target, F.source
    f, u = adj.f, adj.adjoint
    a, b = S.src0(f), S.tgt0(f)
    if adj.handedness == "left":
        eta = T.v(F.lax0(a), F.on2(adj.unit), F.colax2(u, f))
        eps = T.v(F.lax2(f, u), F.on2(adj.counit), F.colax0(b))
    else:
        eta = T.v(F.lax0(b), F.on2(adj.unit), F.colax2(f, u))
        eps = T.v(F.lax2(u, f), F.on2(adj.counit), F.colax0(a))
    return Adjunction(F.on1(f), F.on1(u), eta, eps, adj.handedness)


def _require_pseudo(t):
    for F in (t.source, t.target):
        if not (F.pseudo and F.is_lax and F.is_colax):
            raise MalformedError("adjoint inversion needs pseudofunctor twists (hypothesis of the weak = strong result)")
        r = check_lax_functor2(F)
        if not r.ok:
            raise MalformedError(f"twist {F.name} is not a valid pseudofunctor: {r.failed()}")


def _one_object_source(t):
    S = t.source.source
    if len(S.zero_cells) != 1:
        raise MalformedError("adjoint inversion is implemented for deloopings of monoidal categories")
    return S, S.zero_cells[0]


def gamma_components(t, source_adjoints=None):
    """γ_X := (ev∘χ∘FX)·(GX∘χ_{X*}∘FX)·(GX∘χ∘coev) for every 1-cell X of
    the source, with ev/coev the images of the canonical left adjunction
    X* ⊣ X under G and F."""
    if t.kind != "colax":
        raise MalformedError("adjoint inversion acts on colax transformations")
    _require_pseudo(t)
    S, star = _one_object_source(t)
    F, G = t.source, t.target
    T = F.target
    chi = t.one(star)
    out = {}
    for x in all_one_cells(S):
        if source_adjoints is not None and x in source_adjoints:
            adj = source_adjoints[x]
        else:
            found = find_adjoint(S, x, "left")
            if not found:
                raise MalformedError(f"source 1-cell {x!r} has no left adjoint")
            adj = found[0]
        xs = adj.adjoint
        ev = image_adjunction(G, adj).counit  # G(X)G(X*) ⇒ id
        coev = image_adjunction(F, adj).unit  # id ⇒ F(X*)F(X)
        GX, FX = G.on1(x), F.on1(x)
        out[x] = T.v(
            T.h(T.i(GX), T.i(chi), coev),
            T.h(T.i(GX), t.cell(xs), T.i(FX)),
            T.h(ev, T.i(chi), T.i(FX)),
        )
    return out


def invert_colax_via_adjoints(t, source_adjoints=None):
    """The same transformation with inverses γ_X attached (pseudonatural).
    Raises InconsistentAdjunction if some γ_X fails to be a two-sided
    inverse."""
    gam = gamma_components(t, source_adjoints)
    T = t.source.target
    for x, g in gam.items():
        c = t.cell(x)
        if T.vcomp(g, c) != T.id2(T.dom(c)) or T.vcomp(c, g) != T.id2(T.cod(c)):
            raise InconsistentAdjunction(f"γ at {x!r} is not inverse to the component")
    out = Transformation2(t.kind, t.source, t.target, t._one, t._two, gam, wrt=t.wrt, name=t.name)
    out.mode = getattr(t, "mode", "delooping")
    return out


def invert_half_braiding_via_adjoints(h, mode=None):
    """Weak left half-braiding -> strong one, with inverses computed from
    adjunctions of the twisting domain."""
    if h.side != "left":
        raise MalformedError("expects a left half-braiding")
    t = invert_colax_via_adjoints(center_to_colax(h, mode=mode))
    return colax_to_center(t, bimodule=h.bimodule, strength="strong")


# -- duals ------------------------------------------------------------------------
@dataclass
class DualLift:
    transformation: Transformation2
    adjunction: Adjunction
    unit_report: Report
    counit_report: Report
    half_braiding: HalfBraiding = None

    @property
    def ok(self):
        return self.unit_report.ok and self.counit_report.ok


def lift_dual_transformation(t, handedness="right", adj=None):
    """The dual carrier of a pseudonatural colax t: F ⇒ G, as a colax
    transformation G ⇒ F, together with the checks that the (co)unit of the
    adjunction are modifications into/out of the identity."""
    if t.kind != "colax" or not t.is_pseudo:
        raise MalformedError("dual lifting needs a strong (pseudonatural) colax transformation")
    S, star = _one_object_source(t)
    F, G = t.source, t.target
    K = F.target
    m = t.one(star)
    if adj is None:
        found = find_adjoint(K, m, handedness)
        if not found:
            raise MalformedError(f"carrier {m!r} has no {handedness} adjoint")
        adj = found[0]
    d = adj.adjoint
    i, h, v = K.i, K.h, K.v
    cells = {}
    for x in all_one_cells(S):
        GX, FX = G.on1(x), F.on1(x)
        if handedness == "right":
            # *M G(X) -> *M G(X) M *M -> *M M F(X) *M -> F(X) *M
            cells[x] = v(
                h(i(d), i(GX), adj.unit),
                h(i(d), t.inverse(x), i(d)),
                h(adj.counit, i(FX), i(d)),
            )
        else:
            # the mate F(X) u -> u M F(X) u -> u G(X) M u -> u G(X), then invert
            mate = v(
                h(adj.unit, i(FX), i(d)),
                h(i(d), t.cell(x), i(d)),
                h(i(d), i(GX), adj.counit),
            )
            cells[x] = K.inverse2(mate)
            if cells[x] is None:
                raise MalformedError(f"mate at {x!r} is not invertible")
    inv = {x: K.inverse2(c) for x, c in cells.items()}
    if any(c is None for c in inv.values()):
        inv = None
    dual = Transformation2("colax", G, F, {star: d}, cells, inv, wrt=t.wrt, name=f"dual({t.name})")
    dual.mode = getattr(t, "mode", "delooping")
    # (co)unit as modifications between composites and identities
    md, dm = vcompose_transformations(t, dual), vcompose_transformations(dual, t)
    if handedness == "right":
        # η̄: id ⇒ M∘*M over G, ε̄: *M∘M ⇒ id over F
        ur = check_modification2(Modification2(identity_transformation2(G), md, {star: adj.unit}))
        cr = check_modification2(Modification2(dm, identity_transformation2(F), {star: adj.counit}))
    else:
        # η: id ⇒ u∘M over F, ε: M∘u ⇒ id over G
        ur = check_modification2(Modification2(identity_transformation2(F), dm, {star: adj.unit}))
        cr = check_modification2(Modification2(md, identity_transformation2(G), {star: adj.counit}))
    return DualLift(dual, adj, ur, cr)


def lift_dual_to_center(h, handedness="right", adj=None, mode=None):
    """Dual of a strong left half-braiding over (F, G): a left half-braiding
    over (G, F) on the adjoint carrier."""
    if h.side != "left" or h.strength != "strong":
        raise MalformedError("dual lifting needs a strong left half-braiding")
    t = center_to_colax(h, mode=mode)
    res = lift_dual_transformation(t, handedness, adj)
    Bm = h.bimodule
    if Bm.left is not Bm.right and Bm.left != Bm.right:
        raise MalformedError("dual lifting stays inside one bimodule: C and D must agree")
    res.half_braiding = colax_to_center(res.transformation, bimodule=Bm, strength="strong")
    return res


def check_colax_wrt_colax(t):
    """A colax transformation of pseudofunctors checked against their colax
    structures as well (redundant once the lax version passes)."""
    alt = Transformation2(t.kind, t.source, t.target, t._one, t._two, t._inv, wrt="colax", name=t.name)
    return check_transformation2(alt)
