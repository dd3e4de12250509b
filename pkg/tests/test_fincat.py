import itertools

import pytest
from hypothesis import given, strategies as st

from catcenter import groups
from catcenter.fincat import (
    FinCategory,
    NatTransf,
    category_from_generators,
    category_from_text,
    category_to_text,
    check_functor,
    check_nat,
    compose_functors,
    discrete_category,
    Functor,
    identity_functor,
    identity_nat,
    one_object_category,
    validate_category,
    vcompose_nat,
)


def s3_monoid():
    elems, mult = groups.symmetric(3)
    return one_object_category(elems, mult, "123", name="S3")


def test_trivial_category_passes():
    c = discrete_category(["e"])
    assert validate_category(c).ok
    assert len(c.objects) == 1 and len(c.morphisms) == 1


def test_discrete_two_objects():
    c = discrete_category(["e", "g"])
    assert validate_category(c).ok
    assert len(c.morphisms) == 2


def test_discrete_s3_counts():
    elems, _ = groups.symmetric(3)
    c = discrete_category(elems)
    # oracle: a discrete category has exactly one morphism per object
    assert len(c.objects) == len(set(elems)) == 6
    assert len(c.morphisms) == len(c.objects)


def test_empty_object_set_rejected():
    with pytest.raises(ValueError):
        discrete_category([])


def test_wrong_source_composite_is_malformed():
    c = category_from_generators(["A", "B"], [("f", "A", "B")])
    table = dict(c.compose_table)
    table[("f", "1_A")] = "1_B"  # f∘1_A must be A -> B
    bad = FinCategory(c.objects, c.hom, table, c.identity)
    r = validate_category(bad)
    assert not r.ok and r.has_malformed
    assert "associativity" not in r.laws  # law checks are skipped on malformed input


def test_associativity_failure_is_a_law_violation():
    # one-object monoid table where (ab)c != a(bc)
    elems = ["e", "a", "b"]
    mult = {("e", x): x for x in elems} | {(x, "e"): x for x in elems}
    mult |= {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"}
    c = FinCategory(["*"], {("*", "*"): elems}, mult, {"*": "e"})
    r = validate_category(c)
    assert not r.has_malformed
    assert r.failed() == ["associativity"]
    # the witness is a concrete failing triple
    h, g, f = r.violations("associativity")[0].witness
    assert mult[(h, mult[(g, f)])] != mult[(mult[(h, g)], f)]


def test_identity_functor_and_nat():
    c = s3_monoid()
    F = identity_functor(c)
    assert check_functor(F).ok
    assert check_nat(identity_nat(F)).ok


def test_identity_swap_breaks_identity_preservation():
    c = discrete_category(["e", "g"])
    F = Functor(c, c, {"e": "e", "g": "g"}, {"1_e": "1_g", "1_g": "1_e"})
    r = check_functor(F)
    assert not r.ok
    assert "sources and targets" in r.failed() or "identities" in r.failed()


def test_nat_on_nonparallel_functors_rejected():
    c, d = discrete_category(["e"]), discrete_category(["x", "y"])
    F = Functor(c, d, {"e": "x"}, {"1_e": "1_x"})
    G = Functor(d, d, {"x": "x", "y": "y"}, {"1_x": "1_x", "1_y": "1_y"})
    with pytest.raises(ValueError):
        check_nat(NatTransf(F, G, {"e": "1_x"}))


def test_spec_round_trip_is_exact():
    c = s3_monoid()
    text = category_to_text(c)
    back = category_from_text(text)
    assert back == c
    assert category_to_text(back) == text


# -- properties ---------------------------------------------------------------
def cyclic_monoid(n):
    elems, mult = groups.cyclic(n)
    return one_object_category(elems, mult, 0, name=f"Z{n}")


def _is_monoid(elems, table, unit):
    units = all(table[(unit, x)] == x and table[(x, unit)] == x for x in elems)
    assoc = all(table[(table[(x, y)], z)] == table[(x, table[(y, z)])]
                for x, y, z in itertools.product(elems, repeat=3))
    return units and assoc


@given(st.integers(2, 5), st.data())
def test_single_cell_mutation_agrees_with_brute_force(n, data):
    c = cyclic_monoid(n)
    assert validate_category(c).ok
    key = data.draw(st.sampled_from(sorted(c.compose_table)))
    old = c.compose_table[key]
    new = data.draw(st.sampled_from([m for m in c.morphisms if m != old]))
    table = dict(c.compose_table)
    table[key] = new
    r = validate_category(FinCategory(c.objects, c.hom, table, c.identity))
    assert r.ok == _is_monoid(c.morphisms, table, 0)
    if 0 in key:
        # a corrupted unit row can never be repaired
        assert not r.ok


def test_some_mutations_give_another_valid_category():
    # Z/2 with 1*1 := 1 is the monoid ({0,1}, max)
    c = cyclic_monoid(2)
    table = dict(c.compose_table)
    table[(1, 1)] = 1
    assert validate_category(FinCategory(c.objects, c.hom, table, c.identity)).ok


@given(st.integers(1, 6), st.integers(0, 5), st.integers(0, 5))
def test_composite_of_monoid_endofunctors_is_a_functor(n, a, b):
    c = cyclic_monoid(n)
    # multiplication by a and b are endomorphisms of Z/n
    Fa = Functor(c, c, {"*": "*"}, {m: (a * m) % n for m in c.morphisms})
    Fb = Functor(c, c, {"*": "*"}, {m: (b * m) % n for m in c.morphisms})
    assert check_functor(Fa).ok and check_functor(Fb).ok
    assert check_functor(compose_functors(Fa, Fb)).ok


@given(st.integers(1, 5), st.integers(0, 4), st.integers(0, 4))
def test_vertical_composite_of_nats_is_natural(n, i, j):
    c = cyclic_monoid(n)
    F = identity_functor(c)
    # in a commutative monoid every element is a natural endo-transformation of Id
    a = NatTransf(F, F, {"*": i % n})
    b = NatTransf(F, F, {"*": j % n})
    assert check_nat(a).ok and check_nat(b).ok
    ba = vcompose_nat(b, a)
    assert check_nat(ba).ok
    assert ba["*"] == (i + j) % n


def test_s3_associativity_oracle():
    elems, mult = groups.symmetric(3)
    assert all(mult(mult(x, y), z) == mult(x, mult(y, z)) for x, y, z in itertools.product(elems, repeat=3))
    assert validate_category(s3_monoid()).ok
