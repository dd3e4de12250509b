import textwrap

import pytest

from catcenter.fincat import validate_category
from catcenter.matrices import max_candidates
from catcenter.moncat import validate_moncat
from catcenter.specfile import SpecError, dump_decls, group_from_text, parse_spec, parse_text
from catcenter.suite import data_text


def spec(text):
    return parse_text(textwrap.dedent(text), "t.spec")


def error_of(text):
    with pytest.raises(SpecError) as e:
        spec(text).resolve_all()
    return e.value


def test_empty_file(tmp_path):
    p = tmp_path / "empty.spec"
    p.write_text("")
    ws = parse_spec(p)
    assert len(ws) == 0 and ws.names() == []


def test_comment_only_file():
    assert len(spec("# nothing here\n")) == 0


def test_bundled_s3(tmp_path):
    p = tmp_path / "s3.spec"
    p.write_text(data_text("s3.spec"))
    ws = parse_spec(p)
    assert ws.names() == ["s3"] and ws.names("moncat") == ["s3"]
    C = ws.get("s3")
    assert len(C.base.objects) == 6
    assert validate_category(C.base).ok and validate_moncat(C).ok


def test_suite_resolves(suite):
    suite.resolve_all()
    assert set(suite.names("bialgebra")) == {"kz2", "kv4"}


def test_unresolved_functor_reference():
    e = error_of("""\
        - name: z2
          kind: moncat
          group: cyclic 2
        - name: yd1
          kind: bilax
          compose: [nope, z2]
        """)
    assert "unresolved name 'nope'" in str(e)
    assert e.line == 6 and e.path == "t.spec"


def test_unresolved_source_line():
    e = error_of("""\
        - name: f
          kind: monfunctor
          source: missing
          identity: true
        """)
    assert e.line == 3 and "missing" in str(e)


def test_forward_references_allowed():
    ws = spec("""\
        - name: f
          kind: monfunctor
          source: z2
          identity: true
        - name: z2
          kind: moncat
          group: cyclic 2
        """)
    F = ws.get("f")
    assert F.source is ws.get("z2")


def test_syntax_error_has_line():
    e = error_of("- name: a\n  kind: moncat\n  group: [cyclic 2\n")
    assert "syntax error" in str(e) and e.line is not None


def test_duplicate_name():
    e = error_of("""\
        - name: a
          kind: moncat
          group: cyclic 2
        - name: a
          kind: moncat
          group: cyclic 4
        """)
    assert "already declared at t.spec:1" in str(e) and e.line == 4


def test_duplicate_key():
    e = error_of("- name: a\n  kind: moncat\n  kind: moncat\n")
    assert "duplicate key 'kind'" in str(e) and e.line == 3


def test_unknown_kind():
    e = error_of("- name: a\n  kind: groupoid\n")
    assert "unknown kind" in str(e) and e.line == 2


def test_missing_name():
    assert "lacks 'name'" in str(error_of("- kind: moncat\n  group: cyclic 2\n"))


def test_not_a_list():
    assert "list of declarations" in str(error_of("name: a\n"))


def test_wrong_kind_reference():
    e = error_of("""\
        - name: z2
          kind: moncat
          group: cyclic 2
        - name: v
          kind: yd
          bialgebra: z2
          action: [[1, 1]]
          coaction: [[1], [0]]
        """)
    assert "is a moncat, expected bialgebra" in str(e) and e.line == 6


def test_matrix_arity_mismatch():
    e = error_of("""\
        - name: b
          kind: bialgebra
          p: 2
          group: cyclic 2
        - name: v
          kind: yd
          bialgebra: b
          action: [[1, 1, 0]]
          coaction: [[1], [0]]
        """)
    assert "arity mismatch" in str(e) and e.line == 8


def test_compose_arity_mismatch():
    e = error_of("""\
        - name: z2
          kind: moncat
          group: cyclic 2
        - name: i
          kind: bilax
          identity: z2
        - name: c
          kind: bilax
          compose: [i, i, i]
        """)
    assert "arity mismatch" in str(e) and e.line == 9


def test_on_obj_arity_mismatch():
    e = error_of("""\
        - name: z2
          kind: moncat
          group: cyclic 2
        - name: f
          kind: monfunctor
          source: z2
          on_obj: {0: 0}
        """)
    assert "arity mismatch" in str(e) and e.line == 7


def test_cycle_detected():
    e = error_of("""\
        - name: a
          kind: bilax
          compose: [b, b]
        - name: b
          kind: bilax
          compose: [a, a]
        """)
    assert "circular" in str(e)


def test_explicit_bialgebra_matches_group_algebra(suite):
    ws = spec("""\
        - name: b
          kind: bialgebra
          p: 2
          dim: 2
          mult: [[1, 0, 0, 1], [0, 1, 1, 0]]
          unit: [[1], [0]]
          comult: [[1, 0], [0, 0], [0, 0], [0, 1]]
          counit: [[1, 1]]
        """)
    b, kz2 = ws.get("b"), suite.get("kz2")
    assert (b.mult, b.unit, b.comult, b.counit, b.ybo) == (kz2.mult, kz2.unit, kz2.comult, kz2.counit, kz2.ybo)


def test_group_text():
    elems, _ = group_from_text("cyclic 2 x cyclic 2")
    assert len(elems) == 4
    with pytest.raises(ValueError):
        group_from_text("cyclic")
    with pytest.raises(ValueError):
        group_from_text("alternating 4")


def test_dump_round_trip():
    entries = [{"name": "z4", "kind": "moncat", "group": "cyclic 4"}]
    ws = parse_text(dump_decls(entries))
    assert ws.names() == ["z4"] and len(ws.get("z4").base.objects) == 4


def test_candidate_cap_from_environment(monkeypatch):
    monkeypatch.setenv("CATCENTER_MAX_CANDIDATES", "17")
    assert max_candidates() == 17
    monkeypatch.setenv("CATCENTER_MAX_CANDIDATES", "many")
    with pytest.raises(ValueError):
        max_candidates()
