"""Monads, comonads and bimonads in a 2-category, their (co)modules and the
mixed structures built from them, and classical Yetter-Drinfeld modules.

Every law is a pasting recipe evaluated with ``K.h`` (left to right) and
``K.v`` (top to bottom), then compared exactly.  For matrices over a prime
field use ``delooping(mat_moncat(p))`` so that horizontal composition is the
Kronecker product in reading order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from .matrices import Mat, all_matrices, max_candidates, swap_matrix
from .moncat import mat_moncat
from .report import MalformedError, Report
from .twocat import delooping


# -- data -------------------------------------------------------------------------
@dataclass(frozen=True)
class Monad:
    K: object = field(compare=False, repr=False)
    carrier: object
    mult: object
    unit: object


@dataclass(frozen=True)
class Comonad:
    K: object = field(compare=False, repr=False)
    carrier: object
    comult: object
    counit: object


@dataclass(frozen=True)
class Bimonad:
    """A 1-endocell b with μ: bb ⇒ b, η: id ⇒ b, Δ: b ⇒ bb, ε: b ⇒ id and a
    Yang-Baxter cell c: bb ⇒ bb."""

    K: object = field(compare=False, repr=False)
    carrier: object
    mult: object
    unit: object
    comult: object
    counit: object
    ybo: object
    name: str = field(default="", compare=False)

    @property
    def monad(self):
        return Monad(self.K, self.carrier, self.mult, self.unit)

    @property
    def comonad(self):
        return Comonad(self.K, self.carrier, self.comult, self.counit)

    def cells(self):
        return {"mult": self.mult, "unit": self.unit, "comult": self.comult,
                "counit": self.counit, "ybo": self.ybo}

    def replace(self, **kw):
        return replace(self, **kw)


@dataclass(frozen=True)
class ModuleStructure:
    """action: x∘t ⇒ x (right) or t∘x ⇒ x (left)."""

    K: object = field(compare=False, repr=False)
    carrier: object
    monad: Monad
    action: object
    side: str = "right"


@dataclass(frozen=True)
class ComoduleStructure:
    """coaction: x ⇒ x∘d (right) or x ⇒ d∘x (left)."""

    K: object = field(compare=False, repr=False)
    carrier: object
    comonad: Comonad
    coaction: object
    side: str = "right"


def _endocell(K, x):
    if not K.is_one_cell(x) or K.src0(x) != K.tgt0(x):
        raise MalformedError(f"carrier {x!r} is not a 1-endocell")
    return K.src0(x)


def _typed(K, cell, dom, cod):
    try:
        return K.is_two_cell(cell) and K.dom(cell) == dom and K.cod(cell) == cod
    except (MalformedError, ValueError, KeyError):
        return False


# -- monads and comonads -------------------------------------------------------------
def check_monad(m):
    K, t = m.K, m.carrier
    a = _endocell(K, t)
    r = Report(f"monad {t!r}")
    i, h, v = K.i, K.h, K.v
    r.law("well-typed")
    if not (_typed(K, m.mult, K.c1(t, t), t) and _typed(K, m.unit, K.id1(a), t)):
        r.malformed("well-typed", t, "multiplication or unit has the wrong type")
        return r
    mu, eta = m.mult, m.unit
    r.check("associativity", v(h(mu, i(t)), mu) == v(h(i(t), mu), mu), t)
    r.check("left unit", v(h(eta, i(t)), mu) == i(t), t)
    r.check("right unit", v(h(i(t), eta), mu) == i(t), t)
    return r


def check_comonad(d):
    K, x = d.K, d.carrier
    a = _endocell(K, x)
    r = Report(f"comonad {x!r}")
    i, h, v = K.i, K.h, K.v
    r.law("well-typed")
    if not (_typed(K, d.comult, x, K.c1(x, x)) and _typed(K, d.counit, x, K.id1(a))):
        r.malformed("well-typed", x, "comultiplication or counit has the wrong type")
        return r
    de, ep = d.comult, d.counit
    r.check("coassociativity", v(de, h(de, i(x))) == v(de, h(i(x), de)), x)
    r.check("left counit", v(de, h(ep, i(x))) == i(x), x)
    r.check("right counit", v(de, h(i(x), ep)) == i(x), x)
    return r


BIMONAD_LAWS = (
    "left monad distributive law",
    "right monad distributive law",
    "left comonad distributive law",
    "right comonad distributive law",
    "multiplication-comultiplication",
    "counit-multiplication",
    "unit-comultiplication",
    "unit-counit",
)


def _law_thunks(b):
    K, x = b.K, b.carrier
    i, h, v = K.i, K.h, K.v
    mu, eta, de, ep, c = b.mult, b.unit, b.comult, b.counit, b.ybo
    one = i(x)
    a = K.src0(x)
    return [
        lambda: ((v(h(mu, one), c), v(h(eta, one), c)),
                 (v(h(one, c), h(c, one), h(one, mu)), h(one, eta))),
        lambda: ((v(h(one, mu), c), v(h(one, eta), c)),
                 (v(h(c, one), h(one, c), h(mu, one)), h(eta, one))),
        lambda: ((v(c, h(de, one)), v(c, h(ep, one))),
                 (v(h(one, de), h(c, one), h(one, c)), h(one, ep))),
        lambda: ((v(c, h(one, de)), v(c, h(one, ep))),
                 (v(h(de, one), h(one, c), h(c, one)), h(ep, one))),
        lambda: (v(h(de, de), h(one, c, one), h(mu, mu)), v(mu, de)),
        lambda: (h(ep, ep), v(mu, ep)),
        lambda: (h(eta, eta), v(eta, de)),
        lambda: (v(eta, ep), K.id2(K.id1(a))),
    ]


def _law_side(b, k):
    return (BIMONAD_LAWS[k], *_law_thunks(b)[k]())


def bimonad_law_sides(b):
    """(law name, lhs, rhs) for the eight bimonad laws; the unit part of each
    distributive law is folded into the same entry as a pair."""
    return [(name, *f()) for name, f in zip(BIMONAD_LAWS, _law_thunks(b))]


def check_bimonad(b, structure=True, fail_fast=False):
    """The eight bimonad laws, each reported separately; with ``structure``
    the monad and comonad axioms are reported too (prefixed).  ``fail_fast``
    stops at the first failing group, for mutation sweeps."""
    K, x = b.K, b.carrier
    a = _endocell(K, x)
    r = Report(f"bimonad {b.name or x!r}")
    r.law("well-typed")
    xx = K.c1(x, x)
    ok = (_typed(K, b.mult, xx, x) and _typed(K, b.unit, K.id1(a), x) and _typed(K, b.comult, x, xx)
          and _typed(K, b.counit, x, K.id1(a)) and _typed(K, b.ybo, xx, xx))
    if not ok:
        r.malformed("well-typed", x, "structure 2-cell has the wrong type")
        return r
    if structure:
        r.merge(check_monad(b.monad), "monad: ")
        if fail_fast and not r.ok:
            return r
        r.merge(check_comonad(b.comonad), "comonad: ")
        if fail_fast and not r.ok:
            return r
    if fail_fast:
        # cheap laws first
        for k in (7, 5, 6, 4, 0, 1, 2, 3):
            name, lhs, rhs = _law_side(b, k)
            if not r.check(name, lhs == rhs, x):
                return r
        return r
    for name, lhs, rhs in bimonad_law_sides(b):
        r.check(name, lhs == rhs, x)
    return r


def check_nu_bimonad(b):
    """The four compatibilities only (the shape preserved by bilax functors
    with c := ν_{b,b})."""
    r = Report(f"ν-bimonad {b.name or b.carrier!r}")
    for name, lhs, rhs in bimonad_law_sides(b)[4:]:
        r.check(name, lhs == rhs, b.carrier)
    return r


def identity_bimonad(K, a):
    x = K.id1(a)
    e = K.id2(x)
    return Bimonad(K, x, e, e, e, e, e, name=f"id_{a}")


# -- (co)modules ------------------------------------------------------------------
def check_module(m):
    K, x, t, act = m.K, m.carrier, m.monad.carrier, m.action
    mu, eta = m.monad.mult, m.monad.unit
    i, h, v = K.i, K.h, K.v
    r = Report(f"{m.side} module {x!r}")
    r.law("well-typed")
    src = K.c1(x, t) if m.side == "right" else K.c1(t, x)
    if not _typed(K, act, src, x):
        r.malformed("well-typed", x, "action has the wrong type")
        return r
    if m.side == "right":
        r.check("associativity", v(h(act, i(t)), act) == v(h(i(x), mu), act), x)
        r.check("unit", v(h(i(x), eta), act) == i(x), x)
    else:
        r.check("associativity", v(h(i(t), act), act) == v(h(mu, i(x)), act), x)
        r.check("unit", v(h(eta, i(x)), act) == i(x), x)
    return r


def check_comodule(m):
    K, x, d, rho = m.K, m.carrier, m.comonad.carrier, m.coaction
    de, ep = m.comonad.comult, m.comonad.counit
    i, h, v = K.i, K.h, K.v
    r = Report(f"{m.side} comodule {x!r}")
    r.law("well-typed")
    tgt = K.c1(x, d) if m.side == "right" else K.c1(d, x)
    if not _typed(K, rho, x, tgt):
        r.malformed("well-typed", x, "coaction has the wrong type")
        return r
    if m.side == "right":
        r.check("coassociativity", v(rho, h(rho, i(d))) == v(rho, h(i(x), de)), x)
        r.check("counit", v(rho, h(i(x), ep)) == i(x), x)
    else:
        r.check("coassociativity", v(rho, h(i(d), rho)) == v(rho, h(de, i(x))), x)
        r.check("counit", v(rho, h(ep, i(x))) == i(x), x)
    return r


def regular_module(b, side="right"):
    return ModuleStructure(b.K, b.carrier, b.monad, b.mult, side)


def regular_comodule(b, side="right"):
    return ComoduleStructure(b.K, b.carrier, b.comonad, b.comult, side)


# -- pushforwards along (co)lax functors -----------------------------------------------
def _need(F, lax=False, colax=False):
    if lax and not F.is_lax:
        raise MalformedError(f"{F.name} has no lax structure")
    if colax and not F.is_colax:
        raise MalformedError(f"{F.name} has no colax structure")


def push_monad(F, m):
    """F(t) with F(μ)·F2 and F(η)·F0."""
    _need(F, lax=True)
    T, t = F.target, m.carrier
    a = F.source.src0(t)
    return Monad(T, F.on1(t), T.v(F.lax2(t, t), F.on2(m.mult)), T.v(F.lax0(a), F.on2(m.unit)))


def push_comonad(F, d):
    """F(d) with F2c·F(Δ) and F0c·F(ε)."""
    _need(F, colax=True)
    T, x = F.target, d.carrier
    a = F.source.src0(x)
    return Comonad(T, F.on1(x), T.v(F.on2(d.comult), F.colax2(x, x)), T.v(F.on2(d.counit), F.colax0(a)))


def push_bimonad(F, b, ybo=None):
    """F(b) with the transported (co)monad structure and Yang-Baxter cell
    ``ybo`` (a bilax functor passes ν_{b,b})."""
    _need(F, lax=True, colax=True)
    m, d = push_monad(F, b.monad), push_comonad(F, b.comonad)
    c = ybo if ybo is not None else F.on2(b.ybo)
    return Bimonad(F.target, m.carrier, m.mult, m.unit, d.comult, d.counit, c, name=f"{F.name}({b.name})")


def induced_module(F, m, pushed=None):
    _need(F, lax=True)
    T, x, t = F.target, m.carrier, m.monad.carrier
    two = F.lax2(x, t) if m.side == "right" else F.lax2(t, x)
    pm = pushed or push_monad(F, m.monad)
    return ModuleStructure(T, F.on1(x), pm, T.v(two, F.on2(m.action)), m.side)


def induced_comodule(F, m, pushed=None):
    _need(F, colax=True)
    T, x, d = F.target, m.carrier, m.comonad.carrier
    two = F.colax2(x, d) if m.side == "right" else F.colax2(d, x)
    pd = pushed or push_comonad(F, m.comonad)
    return ComoduleStructure(T, F.on1(x), pd, T.v(F.on2(m.coaction), two), m.side)


# -- (co)module structures from transformations -----------------------------------------
def _hypothesis(b):
    K = b.K
    a = K.src0(b.carrier)
    ok = K.h(b.unit, b.unit) == K.v(b.unit, b.comult) and K.v(b.unit, b.counit) == K.id2(K.id1(a))
    if not ok:
        raise MalformedError("bimonad fails η⊗η = Δη or εη = 1, needed for (co)module structures on transformations")


class InternalInconsistency(RuntimeError):
    """Two forms of the same composite disagree."""


def transformation_comodule(phi, b):
    """Left G(b)-comodule on φ_A for a colax φ: F ⇒ G:
    (G(η)∘φ_A)·φ_id·(φ_A∘F0), cross-checked against φ_b·(φ_A∘F(η)F0)."""
    if phi.kind != "colax":
        raise MalformedError("expected a colax transformation")
    _hypothesis(b)
    F, G = phi.source, phi.target
    T = F.target
    x = b.carrier
    a = F.source.src0(x)
    ida = F.source.id1(a)
    pa = phi.one(a)
    first = T.v(T.h(T.i(pa), F.lax0(a)), phi.cell(ida), T.h(G.on2(b.unit), T.i(pa)))
    second = T.v(T.h(T.i(pa), T.v(F.lax0(a), F.on2(b.unit))), phi.cell(x))
    if first != second:
        raise InternalInconsistency("the two forms of the induced coaction differ")
    return ComoduleStructure(T, pa, push_comonad(G, b.comonad), first, "left")


def transformation_module(psi, b):
    """Left G(b)-module on ψ_A for a lax ψ: F ⇒ G:
    (ψ_A∘F0c)·ψ_id·(G(ε)∘ψ_A), cross-checked against (ψ_A∘F0c F(ε))·ψ_b."""
    if psi.kind != "lax":
        raise MalformedError("expected a lax transformation")
    _hypothesis(b)
    F, G = psi.source, psi.target
    T = F.target
    x = b.carrier
    a = F.source.src0(x)
    ida = F.source.id1(a)
    pa = psi.one(a)
    first = T.v(T.h(G.on2(b.counit), T.i(pa)), psi.cell(ida), T.h(T.i(pa), F.colax0(a)))
    second = T.v(psi.cell(x), T.h(T.i(pa), T.v(F.on2(b.counit), F.colax0(a))))
    if first != second:
        raise InternalInconsistency("the two forms of the induced action differ")
    return ModuleStructure(T, pa, push_monad(G, b.monad), first, "left")


# -- module comonads, comodule monads, relative and Hopf modules --------------------------
def check_module_comonad(d, act, b, c):
    """d a comonad acted on by b; ``c`` is c_{d,b} (right) or c_{b,d} (left)."""
    K = d.K
    i, h, v = K.i, K.h, K.v
    r = Report(f"{act.side} module comonad {d.carrier!r}")
    r.law("well-typed")
    if act.carrier != d.carrier or act.monad.carrier != b.carrier:
        r.malformed("well-typed", d.carrier, "action does not act on the comonad by b")
        return r
    x, t = d.carrier, b.carrier
    if act.side == "right":
        lhs = v(h(d.comult, b.comult), h(i(x), c, i(t)), h(act.action, act.action))
        rhs = v(act.action, d.comult)
        lhs2, rhs2 = v(act.action, d.counit), h(d.counit, b.counit)
    else:
        lhs = v(h(b.comult, d.comult), h(i(t), c, i(x)), h(act.action, act.action))
        rhs = v(act.action, d.comult)
        lhs2, rhs2 = v(act.action, d.counit), h(b.counit, d.counit)
    r.check("comultiplication compatibility", lhs == rhs, x)
    r.check("counit compatibility", lhs2 == rhs2, x)
    return r


def check_comodule_monad(t, coact, b, c):
    """t a monad with a b-coaction; ``c`` is c_{b,t} (right) or c_{t,b} (left)."""
    K = t.K
    i, h, v = K.i, K.h, K.v
    r = Report(f"{coact.side} comodule monad {t.carrier!r}")
    r.law("well-typed")
    if coact.carrier != t.carrier or coact.comonad.carrier != b.carrier:
        r.malformed("well-typed", t.carrier, "coaction does not coact on the monad by b")
        return r
    x, y, rho = t.carrier, b.carrier, coact.coaction
    if coact.side == "right":
        lhs = v(h(rho, rho), h(i(x), c, i(y)), h(t.mult, b.mult))
        lhs2, rhs2 = v(t.unit, rho), h(t.unit, b.unit)
    else:
        lhs = v(h(rho, rho), h(i(y), c, i(x)), h(b.mult, t.mult))
        lhs2, rhs2 = v(t.unit, rho), h(b.unit, t.unit)
    r.check("multiplication compatibility", lhs == v(t.mult, rho), x)
    r.check("unit compatibility", lhs2 == rhs2, x)
    return r


def relative_condition(K, act, coact, t_coact, b_mult, c):
    """Right: (⊲⊗μ_b)(1⊗c_{b,t}⊗1)(ρ_x⊗ρ_t) = ρ_x⊲.
    Left:  (μ_b⊗⊳)(1⊗c_{t,b}⊗1)(ρ_t⊗ρ_x) = ρ_x⊳."""
    i, h, v = K.i, K.h, K.v
    x = act.carrier
    bcar = coact.comonad.carrier
    if act.side == "right":
        lhs = v(h(coact.coaction, t_coact), h(i(x), c, i(bcar)), h(act.action, b_mult))
    else:
        lhs = v(h(t_coact, coact.coaction), h(i(bcar), c, i(x)), h(b_mult, act.action))
    return lhs == v(act.action, coact.coaction)


def check_relative_module(act, coact, t_coact, b, c):
    """x a t-module and b-comodule on the same side, t a b-comodule monad
    (coaction ``t_coact``); ``c`` is c_{b,t} (right) or c_{t,b} (left)."""
    K = b.K
    r = Report(f"{act.side} relative module {act.carrier!r}")
    r.law("well-typed")
    if act.side != coact.side or act.carrier != coact.carrier:
        r.malformed("well-typed", act.carrier, "module and comodule structures do not match")
        return r
    r.check("relative compatibility", relative_condition(K, act, coact, t_coact, b.mult, c), act.carrier)
    return r


def check_hopf_bimodule(lact, ract, lcoact, rcoact, b, c_xb, c_bx):
    """The four Hopf-bimodule compatibilities for x over b.  ``c_xb`` is the
    Yang-Baxter cell x∘b ⇒ b∘x, ``c_bx`` the cell b∘x ⇒ x∘b."""
    K = b.K
    i, h, v = K.i, K.h, K.v
    x = lact.carrier
    r = Report(f"Hopf bimodule {x!r}")
    r.law("well-typed")
    if len({lact.carrier, ract.carrier, lcoact.carrier, rcoact.carrier}) != 1:
        r.malformed("well-typed", x, "structures live on different carriers")
        return r
    r.check("right coaction is right linear", relative_condition(K, ract, rcoact, b.comult, b.mult, b.ybo), x)
    r.check("left coaction is left linear", relative_condition(K, lact, lcoact, b.comult, b.mult, b.ybo), x)
    lhs = v(h(lcoact.coaction, b.comult), h(i(b.carrier), c_xb, i(b.carrier)), h(b.mult, ract.action))
    r.check("left coaction is right linear", lhs == v(ract.action, lcoact.coaction), x)
    lhs = v(h(b.comult, rcoact.coaction), h(i(b.carrier), c_bx, i(b.carrier)), h(lact.action, b.mult))
    r.check("right coaction is left linear", lhs == v(lact.action, rcoact.coaction), x)
    return r


# -- λ ----------------------------------------------------------------------------
LAMBDA_LAWS = (
    "lambda: monad left",
    "lambda: monad unit",
    "lambda: comonad",
    "lambda: comonad counit",
)


def make_lambda(b, c=None):
    """λ = (μ⊗1)(1⊗c)(Δ⊗1): bb ⇒ bb."""
    K = b.K
    one = K.i(b.carrier)
    c = b.ybo if c is None else c
    return K.v(K.h(b.comult, one), K.h(one, c), K.h(b.mult, one))


def lambda_law_sides(b, lam):
    K = b.K
    i, h, v = K.i, K.h, K.v
    one = i(b.carrier)
    mu, eta, de, ep = b.mult, b.unit, b.comult, b.counit
    return [
        (LAMBDA_LAWS[0], v(h(mu, one), lam), v(h(one, lam), h(lam, one), h(one, mu))),
        (LAMBDA_LAWS[1], v(h(eta, one), lam), h(one, eta)),
        (LAMBDA_LAWS[2], v(h(one, de), h(lam, one), h(one, lam)), v(lam, h(de, one))),
        (LAMBDA_LAWS[3], v(lam, h(ep, one)), h(one, ep)),
    ]


def check_lambda(b, lam=None):
    """The four mixed distributive laws of λ, plus the two restatements
    (1⊗μ)(λ⊗1)(1⊗Δ) = Δμ and (1⊗ε)λ(1⊗η) = 1."""
    lam = make_lambda(b) if lam is None else lam
    K = b.K
    i, h, v = K.i, K.h, K.v
    one = i(b.carrier)
    r = Report(f"lambda for {b.name or b.carrier!r}")
    for name, lhs, rhs in lambda_law_sides(b, lam):
        r.check(name, lhs == rhs, b.carrier)
    r.check("lambda: bimonad restatement", v(h(one, b.comult), h(lam, one), h(one, b.mult)) == v(b.mult, b.comult), b.carrier)
    r.check("lambda: unit-counit", v(h(one, b.unit), lam, h(one, b.counit)) == one, b.carrier)
    return r


# -- bialgebras over a prime field ---------------------------------------------------
def mat_delooping(p=2):
    return delooping(mat_moncat(p))


def group_algebra(elems, mult, p=2, name=""):
    """The group bialgebra k[G] on basis δ_g (in the given order) with the
    swap as Yang-Baxter cell."""
    n = len(elems)
    idx = {g: k for k, g in enumerate(elems)}
    e = next(g for g in elems if all(mult(g, x) == x and mult(x, g) == x for x in elems))
    mu = [[0] * (n * n) for _ in range(n)]
    de = [[0] * n for _ in range(n * n)]
    for a in elems:
        for b in elems:
            mu[idx[mult(a, b)]][idx[a] * n + idx[b]] = 1
        de[idx[a] * n + idx[a]][idx[a]] = 1
    unit = [[1 if g == e else 0] for g in elems]
    return Bimonad(mat_delooping(p), n, Mat(mu, p), Mat(unit, p), Mat(de, p), Mat([[1] * n], p),
                   swap_matrix(n, n, p), name=name or f"F{p}[G]")


def function_coproduct(elems, mult, p=2):
    """Δ(δ_h) = Σ_{ab=h} δ_a⊗δ_b, the coproduct dual to the group product."""
    n = len(elems)
    idx = {g: k for k, g in enumerate(elems)}
    de = [[0] * n for _ in range(n * n)]
    for a in elems:
        for b in elems:
            de[idx[a] * n + idx[b]][idx[mult(a, b)]] += 1
    return Mat(de, p)


@dataclass(frozen=True)
class YDModule:
    bialgebra: Bimonad = field(compare=False, repr=False)
    dim: int
    action: Mat  # B⊗M -> M
    coaction: Mat  # M -> B⊗M


def _braid(B, x, y):
    return swap_matrix(x, y, B.K.base.p)


def yd_sides(V):
    """Both sides of the YD compatibility and the λ-form of the right side."""
    B, K = V.bialgebra, V.bialgebra.K
    n, m = B.carrier, V.dim
    i, h, v = K.i, K.h, K.v
    lhs = v(h(B.comult, i(m)), h(i(n), _braid(B, n, m)), h(V.action, i(n)),
            h(V.coaction, i(n)), h(i(n), _braid(B, m, n)), h(B.mult, i(m)))
    rhs = v(h(B.comult, V.coaction), h(i(n), B.ybo, i(m)), h(B.mult, V.action))
    alt = v(h(i(n), V.coaction), h(make_lambda(B), i(m)), h(i(n), V.action))
    return lhs, rhs, alt


def check_yd_module(V):
    B = V.bialgebra
    if not isinstance(B.carrier, int):
        raise MalformedError("Yetter-Drinfeld modules need a bialgebra over the matrix substrate")
    r = Report(f"YD module of dim {V.dim}")
    r.merge(check_module(ModuleStructure(B.K, V.dim, B.monad, V.action, "left")), "module: ")
    r.merge(check_comodule(ComoduleStructure(B.K, V.dim, B.comonad, V.coaction, "left")), "comodule: ")
    if not r.ok:
        return r
    lhs, rhs, alt = yd_sides(V)
    if alt != rhs:
        raise InternalInconsistency("the two forms of the YD right-hand side differ")
    r.check("YD compatibility", lhs == rhs, V.dim)
    return r


def enumerate_yd_modules(B, dim=1):
    """Every (action, coaction) on a dim-dimensional carrier satisfying the
    module, comodule and YD axioms, by exhaustive search."""
    p = B.K.base.p
    n = B.carrier
    total = p ** (2 * n * dim * dim)
    if total > max_candidates():
        raise MalformedError(f"{total} candidate pairs exceed the enumeration cap")
    K = B.K
    acts = [a for a in all_matrices(dim, n * dim, p)
            if check_module(ModuleStructure(K, dim, B.monad, a, "left")).ok]
    coacts = [c for c in all_matrices(n * dim, dim, p)
              if check_comodule(ComoduleStructure(K, dim, B.comonad, c, "left")).ok]
    out = []
    for a, c in itertools.product(acts, coacts):
        V = YDModule(B, dim, a, c)
        lhs, rhs, _ = yd_sides(V)
        if lhs == rhs:
            out.append(V)
    return out


def trivial_yd_module(B):
    """The unit object with action ε⊗1 and coaction η⊗1."""
    return YDModule(B, 1, B.counit, B.unit)
