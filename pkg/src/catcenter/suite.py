"""The bundled instances, loaded from ``data/suite.spec``, grouped the way
the acceptance checks consume them."""
from __future__ import annotations

from importlib import resources

from . import groups
from .bimonad import identity_bimonad
from .moncat import identity_monfunctor
from .specfile import parse_text
from .twocat import Deloop, regular_bimodule

#: group name in the suite -> (family text, elements and product)
GROUPS = {
    "z2": groups.cyclic(2),
    "z4": groups.cyclic(4),
    "s3": groups.symmetric(3),
    "d4": groups.dihedral(4),
}


def data_text(name):
    return resources.files("catcenter").joinpath("data", name).read_text(encoding="utf-8")


def load_suite():
    return parse_text(data_text("suite.spec"), "suite.spec")


def center_instances(ws):
    """(label, bimodule, F, G): untwisted group centers, two twisted group
    instances and the poset example where weak and strong centers differ."""
    out = []
    for g in GROUPS:
        C = ws.get(g)
        Id = identity_monfunctor(C)
        out.append((g, regular_bimodule(C), Id, Id))
    for label, f in (("s3/conj-213", "conj-213"), ("z4/neg", "neg-z4"), ("poset/const", "const-poset")):
        F = ws.get(f)
        C = F.source
        out.append((label, regular_bimodule(C), F, identity_monfunctor(C)))
    return out


def bialgebras(ws):
    return [ws.get(n) for n in ws.names("bialgebra")]


def yd_modules(ws):
    return [ws.get(n) for n in ws.names("yd")]


def bilax_functors(ws):
    return [ws.get(n) for n in ws.names("bilax")]


def source_bimonads(Fb, ws):
    """Bimonads in the domain of Fb: the identity at every 0-cell, plus the
    suite bialgebras when the domain is the matrix delooping."""
    S = Fb.source
    out = [identity_bimonad(S, a) for a in S.zero_cells]
    if isinstance(S, Deloop) and not S.moncat.is_table:
        out += [b.replace(K=S) for b in bialgebras(ws) if b.K.base.p == S.base.p]
    return out
