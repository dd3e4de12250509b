"""Structure spec files: a YAML list of named declarations.

Each entry is a mapping with ``name`` and ``kind``.  Kinds and their keys:

  moncat      table: <monoidal table spec> | group: "cyclic 4" | builtin: poset-max / max-monoid
  monfunctor  source, target; one of identity: true, conjugate_by: <elem>,
              on_obj: {x: y}, constant: <obj>
  bialgebra   p; group: "<family> <n>" or dim, mult, unit, comult, counit [, ybo]
  yd          bialgebra, action, coaction
  bilax       from_bimonad: B | constant: B with domain: <moncat or "matrices"> |
              identity: <moncat or "matrices"> | compose: [G, F]
              ("matrices" takes p and pool_dims)

References may appear in any order; cycles and unknown names are errors
reported with file and line.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import yaml

from . import groups
from .bilax import bimonad_to_bilax, compose_bilax, constant_bilax, identity_bilax
from .bimonad import Bimonad, YDModule, group_algebra, mat_delooping
from .matrices import Mat, eye, swap_matrix
from .moncat import (
    MonCat,
    commutative_monoid_moncat,
    group_moncat,
    identity_monfunctor,
    poset_max_moncat,
    strict_monfunctor,
)
from .report import MalformedError
from .twocat import delooping


class SpecError(ValueError):
    def __init__(self, message, path="<spec>", line=None):
        self.path, self.line = path, line
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: {message}")


class _Map(dict):
    line = None
    key_lines = None


class _Loader(yaml.SafeLoader):
    pass


def _construct_mapping(loader, node):
    loader.flatten_mapping(node)
    out = _Map()
    out.line = node.start_mark.line + 1
    out.key_lines = {}
    for k, v in node.value:
        key = loader.construct_object(k, deep=True)
        if key in out:
            raise SpecError(f"duplicate key {key!r}", loader.name, k.start_mark.line + 1)
        out[key] = loader.construct_object(v, deep=True)
        out.key_lines[key] = v.start_mark.line + 1
    return out


_Loader.add_constructor(yaml.resolver.BaseResolver.DEFAULT_MAPPING_TAG, _construct_mapping)

KINDS = ("moncat", "monfunctor", "bialgebra", "yd", "bilax")


@dataclass
class Decl:
    name: str
    kind: str
    data: dict
    path: str
    line: int

    def line_of(self, key):
        return (self.data.key_lines or {}).get(key, self.line)


@dataclass
class Workspace:
    decls: dict = field(default_factory=dict)
    _built: dict = field(default_factory=dict, repr=False)
    _building: set = field(default_factory=set, repr=False)

    def __len__(self):
        return len(self.decls)

    def __contains__(self, name):
        return name in self.decls

    def names(self, kind=None):
        return [n for n, d in self.decls.items() if kind is None or d.kind == kind]

    def add(self, decl):
        if decl.name in self.decls:
            prev = self.decls[decl.name]
            raise SpecError(f"name {decl.name!r} already declared at {prev.path}:{prev.line}", decl.path, decl.line)
        self.decls[decl.name] = decl

    def merge(self, other):
        for d in other.decls.values():
            self.add(d)
        return self

    def get(self, name, kind=None, _ref=None):
        """The built structure; ``_ref`` is (decl, key) of the referring
        entry, used for error locations."""
        if name not in self.decls:
            path, line = ("<workspace>", None) if _ref is None else (_ref[0].path, _ref[0].line_of(_ref[1]))
            raise SpecError(f"unresolved name {name!r}", path, line)
        d = self.decls[name]
        if kind is not None and d.kind not in ((kind,) if isinstance(kind, str) else kind):
            path, line = (d.path, d.line) if _ref is None else (_ref[0].path, _ref[0].line_of(_ref[1]))
            raise SpecError(f"{name!r} is a {d.kind}, expected {kind}", path, line)
        if name not in self._built:
            if name in self._building:
                raise SpecError(f"circular reference through {name!r}", d.path, d.line)
            self._building.add(name)
            try:
                self._built[name] = _BUILDERS[d.kind](self, d)
            except SpecError:
                raise
            except (MalformedError, ValueError, KeyError, TypeError, IndexError) as e:
                raise SpecError(f"cannot build {name!r}: {e}", d.path, d.line) from None
            finally:
                self._building.discard(name)
        return self._built[name]

    def resolve_all(self):
        for n in self.decls:
            self.get(n)
        return self


def parse_text(text, path="<spec>"):
    loader = _Loader(text)
    loader.name = path
    try:
        doc = loader.get_single_data()
    except SpecError:
        raise
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise SpecError(f"syntax error: {getattr(e, 'problem', e)}", path, mark.line + 1 if mark else None) from None
    finally:
        loader.dispose()
    ws = Workspace()
    if doc is None:
        return ws
    if not isinstance(doc, list):
        raise SpecError("a spec file is a list of declarations", path, 1)
    for item in doc:
        if not isinstance(item, dict):
            raise SpecError("each declaration is a mapping with 'name' and 'kind'", path, None)
        line = getattr(item, "line", None)
        for key in ("name", "kind"):
            if key not in item:
                raise SpecError(f"declaration lacks {key!r}", path, line)
        if item["kind"] not in KINDS:
            raise SpecError(f"unknown kind {item['kind']!r}", path, item.key_lines.get("kind", line))
        ws.add(Decl(str(item["name"]), item["kind"], item, path, line))
    # every reference must resolve before anything runs
    for d in ws.decls.values():
        for key, target in _references(d):
            if target not in ws.decls:
                raise SpecError(f"unresolved name {target!r}", path, d.line_of(key))
    return ws


def parse_spec(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_text(text, str(path))


def _references(d):
    x = d.data
    if d.kind == "monfunctor":
        yield "source", x.get("source")
        yield "target", x.get("target", x.get("source"))
    elif d.kind == "yd":
        yield "bialgebra", x.get("bialgebra")
    elif d.kind == "bilax":
        if "from_bimonad" in x:
            yield "from_bimonad", x["from_bimonad"]
        if "constant" in x:
            yield "constant", x["constant"]
            if x.get("domain", "matrices") != "matrices":
                yield "domain", x["domain"]
        if "identity" in x and x["identity"] != "matrices":
            yield "identity", x["identity"]
        if "compose" in x:
            for n in x["compose"] if isinstance(x["compose"], list) else []:
                yield "compose", n


# -- builders ---------------------------------------------------------------------
def group_from_text(text):
    """'cyclic 4', 'symmetric 3', 'dihedral 4', 'cyclic 2 x cyclic 2'."""
    parts = [p.strip() for p in str(text).split(" x ")]
    out = None
    for part in parts:
        words = part.split()
        if len(words) != 2 or not words[1].isdigit():
            raise ValueError(f"group {part!r} is not '<family> <n>'")
        fam, n = words[0], int(words[1])
        make = {"cyclic": groups.cyclic, "symmetric": groups.symmetric, "dihedral": groups.dihedral}.get(fam)
        if make is None:
            raise ValueError(f"unknown group family {fam!r}")
        g = make(n)
        out = g if out is None else groups.product(out, g)
    return out


def _build_moncat(ws, d):
    x = d.data
    given = [k for k in ("table", "group", "builtin") if k in x]
    if len(given) != 1:
        raise SpecError("a moncat needs exactly one of table, group, builtin", d.path, d.line)
    if "table" in x:
        return MonCat.from_spec(x["table"], name=d.name)
    if "group" in x:
        elems, mult = group_from_text(x["group"])
        return group_moncat(elems, mult, name=d.name)
    if x["builtin"] == "poset-max":
        return poset_max_moncat(name=d.name)
    if x["builtin"] == "max-monoid":
        return commutative_monoid_moncat([0, 1], max, name=d.name)
    raise SpecError(f"unknown builtin {x['builtin']!r}", d.path, d.line_of("builtin"))


def _build_monfunctor(ws, d):
    x = d.data
    S = ws.get(x["source"], "moncat", (d, "source"))
    T = ws.get(x.get("target", x["source"]), "moncat", (d, "target"))
    if x.get("identity"):
        return identity_monfunctor(S)
    if "conjugate_by" in x:
        t = x["conjugate_by"]
        elems = S.base.objects
        if t not in elems:
            raise SpecError(f"{t!r} is not an object of {S.name}", d.path, d.line_of("conjugate_by"))
        tinv = next(y for y in elems if S.tensor(t, y) == S.unit)
        F = strict_monfunctor(S, T, lambda g: S.tensor(S.tensor(t, g), tinv), name=d.name)
        return F
    if "on_obj" in x:
        table = dict(x["on_obj"])
        missing = [o for o in S.base.objects if o not in table]
        if missing:
            raise SpecError(f"on_obj misses {missing[0]!r} (arity mismatch)", d.path, d.line_of("on_obj"))
        return strict_monfunctor(S, T, table.__getitem__, name=d.name)
    if "constant" in x:
        c = x["constant"]
        if c != T.unit:
            raise SpecError("a constant strict monoidal functor must hit the unit", d.path, d.line_of("constant"))
        idc = T.base.id(c)
        return strict_monfunctor(S, T, lambda _: c, lambda _: idc, name=d.name)
    raise SpecError("monfunctor needs identity, conjugate_by, on_obj or constant", d.path, d.line)


def _mat(d, key, p, shape=None):
    try:
        m = Mat(d.data[key], p)
    except KeyError:
        raise SpecError(f"missing {key!r}", d.path, d.line) from None
    except (ValueError, TypeError) as e:
        raise SpecError(f"bad matrix {key!r}: {e}", d.path, d.line_of(key)) from None
    if shape is not None and (m.rows, m.cols) != shape:
        raise SpecError(f"{key!r} has shape {m.rows}x{m.cols}, expected {shape[0]}x{shape[1]} (arity mismatch)",
                        d.path, d.line_of(key))
    return m


def _build_bialgebra(ws, d):
    x = d.data
    p = int(x.get("p", 2))
    if "group" in x:
        elems, mult = group_from_text(x["group"])
        return group_algebra(elems, mult, p, name=d.name)
    n = int(x["dim"])
    mult = _mat(d, "mult", p, (n, n * n))
    unit = _mat(d, "unit", p, (n, 1))
    comult = _mat(d, "comult", p, (n * n, n))
    counit = _mat(d, "counit", p, (1, n))
    ybo = _mat(d, "ybo", p, (n * n, n * n)) if "ybo" in x else swap_matrix(n, n, p)
    return Bimonad(mat_delooping(p), n, mult, unit, comult, counit, ybo, name=d.name)


def _build_yd(ws, d):
    B = ws.get(d.data["bialgebra"], "bialgebra", (d, "bialgebra"))
    p, n = B.K.base.p, B.carrier
    act = _mat(d, "action", p)
    m = act.rows
    if act.cols != n * m:
        raise SpecError(f"action has {act.cols} columns, expected {n * m} (arity mismatch)", d.path, d.line_of("action"))
    coact = _mat(d, "coaction", p, (n * m, m))
    return YDModule(B, m, act, coact)


def _matrix_domain(d):
    p = int(d.data.get("p", 2))
    dims = tuple(int(k) for k in d.data.get("pool_dims", (1, 2)))
    K = mat_delooping(p)
    cells = [eye(k, p) for k in dims]
    cells += [Mat([[1] * k], p) for k in dims if k > 1]  # augmentation maps
    cells += [Mat([[1]] * k, p) for k in dims if k > 1]
    if 2 in dims:
        cells += [Mat([[0, 1], [1, 0]], p), Mat([[1, 1], [0, 1]], p)]
    seen, pool2 = set(), []
    for c in cells:
        key = (c.rows, c.cols, c.tolist().__repr__())
        if key not in seen and c.rows in dims and c.cols in dims:
            seen.add(key)
            pool2.append(c)
    return K.with_pool(dims, pool2)


def _swap_ybo(K):
    p = K.base.p
    return lambda g, f: swap_matrix(g, f, p)


def _domain(ws, d, key):
    ref = d.data[key]
    if ref == "matrices":
        K = _matrix_domain(d)
        return K, _swap_ybo(K)
    C = ws.get(ref, "moncat", (d, key))
    K = delooping(C)
    objs = C.base.objects
    if any(C.tensor(a, b) != C.tensor(b, a) for a in objs for b in objs):
        raise SpecError(f"{ref!r} is not commutative; only identity Yang-Baxter operators are built in",
                        d.path, d.line_of(key))
    return K, (lambda g, f: K.i(g, f))


def _build_bilax(ws, d):
    x = d.data
    given = [k for k in ("from_bimonad", "constant", "identity", "compose") if k in x]
    if len(given) != 1:
        raise SpecError("a bilax entry needs exactly one of from_bimonad, constant, identity, compose", d.path, d.line)
    if "from_bimonad" in x:
        B = ws.get(x["from_bimonad"], "bialgebra", (d, "from_bimonad"))
        F = bimonad_to_bilax(B, target_ybo=_swap_ybo(B.K))
    elif "constant" in x:
        B = ws.get(x["constant"], "bialgebra", (d, "constant"))
        x.setdefault("domain", "matrices")
        S, c = _domain(ws, d, "domain")
        F = constant_bilax(S, B, c, _swap_ybo(B.K))
    elif "identity" in x:
        K, c = _domain(ws, d, "identity")
        F = identity_bilax(K, c)
    else:
        pair = x["compose"]
        if not isinstance(pair, list) or len(pair) != 2:
            raise SpecError("compose takes exactly two names [G, F] (arity mismatch)", d.path, d.line_of("compose"))
        G = ws.get(pair[0], "bilax", (d, "compose"))
        F0 = ws.get(pair[1], "bilax", (d, "compose"))
        F = compose_bilax(G, F0)
    F.name = d.name
    F.functor.name = d.name
    return F


_BUILDERS = {
    "moncat": _build_moncat,
    "monfunctor": _build_monfunctor,
    "bialgebra": _build_bialgebra,
    "yd": _build_yd,
    "bilax": _build_bilax,
}


def dump_decls(entries):
    """Deterministic YAML text for a list of declaration dicts."""
    return yaml.safe_dump([dict(e) for e in entries], sort_keys=False, default_flow_style=None,
                          allow_unicode=True, width=100)
