import itertools

import pytest

from catcenter import groups
from catcenter.center import center_to_colax, compose_center_objects, enumerate_center
from catcenter.fincat import validate_category
from catcenter.moncat import group_moncat, identity_monfunctor, strict_monfunctor
from catcenter.report import MalformedError
from catcenter.twocat import (
    ONE,
    STAR,
    Modification2,
    Transformation2,
    all_one_cells,
    as_table,
    check_lax_functor2,
    check_modification2,
    check_transformation2,
    deloop_bimodule,
    deloop_functor,
    deloop_moncat,
    delooping,
    enumerate_transformations,
    hcompose_transformations,
    identity_functor2,
    identity_modification2,
    identity_transformation2,
    moncat_of_deloop,
    regular_bimodule,
    transformation_category,
    trivial_moncat,
    validate_bimodule,
    validate_twocat,
    vcompose_transformations,
)


def gm(name, g):
    e, m = g
    return group_moncat(e, m, name=name)


Z2 = gm("Z2", groups.cyclic(2))
Z4 = gm("Z4", groups.cyclic(4))
S3 = gm("S3", groups.symmetric(3))


def test_trivial_delooping():
    K = deloop_moncat(trivial_moncat())
    assert len(K.zero_cells) == 1
    assert len(list(all_one_cells(K))) == 1
    assert validate_twocat(K).ok
    assert validate_twocat(ONE).ok


def test_z2_delooping_counts():
    K = deloop_moncat(Z2)
    assert len(K.zero_cells) == 1
    assert len(list(all_one_cells(K))) == 2
    assert len(K.base.morphisms) == 2
    assert validate_twocat(K).ok


def test_raw_delooping_reverses_tensor():
    K = deloop_moncat(S3)
    objs = S3.base.objects
    assert all(K.comp1(y, x) == S3.tensor(x, y) for x in objs for y in objs)
    assert validate_twocat(as_table(K)).ok


def test_delooping_is_invertible_on_its_image():
    for C in (Z2, Z4, S3):
        assert moncat_of_deloop(delooping(C)) == C


def test_regular_bimodule_delooping():
    Bm = regular_bimodule(Z2)
    assert validate_bimodule(Bm).ok
    K = deloop_bimodule(Bm)
    assert K.zero_cells == (0, 1)
    assert len(K.one_cells(0, 1)) == 2
    assert validate_twocat(K).ok


def test_hom_from_1_to_0_is_empty():
    K = deloop_bimodule(regular_bimodule(Z2))
    assert len(K.one_cells(1, 0)) == 0


def test_no_strict_composition_with_one_cell_from_1_to_0():
    """Adding a single 1-cell z: 1 -> 0 to the delooping of the regular Z/2
    bimodule cannot be made strictly associative, whatever z∘m and m∘z are."""
    K = deloop_bimodule(regular_bimodule(Z2))
    Ds, Cs, Ms = K.one_cells(0, 0), K.one_cells(1, 1), K.one_cells(0, 1)
    z = "z"
    ends = {z: (1, 0)}
    for x in all_one_cells(K):
        ends[x] = (K.src0(x), K.tgt0(x))
    cells = list(ends)
    found = 0
    for phi in itertools.product(Ds, repeat=len(Ms)):  # z∘m
        for psi in itertools.product(Cs, repeat=len(Ms)):  # m∘z
            zm, mz = dict(zip(Ms, phi)), dict(zip(Ms, psi))

            def comp(g, f):
                if g == z and f in Ms:
                    return zm[f]
                if f == z and g in Ms:
                    return mz[g]
                if g == z or f == z:
                    return z  # z∘c and d∘z stay in hom(1, 0) = {z}
                return K.comp1(g, f)

            ok = True
            for h, g, f in itertools.product(cells, repeat=3):
                if ends[f][1] != ends[g][0] or ends[g][1] != ends[h][0]:
                    continue
                if comp(comp(h, g), f) != comp(h, comp(g, f)):
                    ok = False
                    break
            found += ok
    assert found == 0


def test_identity_functor_transformation_modification():
    K = delooping(S3)
    Id = identity_functor2(K)
    assert check_lax_functor2(Id).ok
    t = identity_transformation2(Id)
    assert check_transformation2(t).ok
    assert check_modification2(identity_modification2(t)).ok


def test_corrupted_colax_transformation_names_the_pair():
    K = delooping(Z4)
    Id = identity_functor2(K)
    # component 1: the colax transformation with carrier 1 and identity cells
    t = Transformation2("colax", Id, Id, {STAR: 1}, {x: K.base.id((1 + x) % 4) for x in range(4)})
    assert check_transformation2(t).ok
    bad = {x: K.base.id((1 + x) % 4) for x in range(4)}
    bad[2] = K.base.id(1)  # wrong type
    r = check_transformation2(Transformation2("colax", Id, Id, {STAR: 1}, bad))
    assert not r.ok


def test_kind_mismatch_rejected():
    K = delooping(Z2)
    Id = identity_functor2(K)
    t = identity_transformation2(Id, "colax")
    with pytest.raises(MalformedError):
        check_transformation2(t, expect="lax")


def test_center_object_gives_valid_transformation():
    Id = identity_monfunctor(Z2)
    for h in enumerate_center(regular_bimodule(Z2), Id, Id).objects:
        assert check_transformation2(center_to_colax(h)).ok


def test_vertical_composition():
    K = delooping(S3)
    Id = identity_functor2(K)
    ident = identity_transformation2(Id)
    ts = enumerate_transformations(Id, Id, "colax")
    for t in ts:
        assert vcompose_transformations(ident, t).key() == t.key()
        for s in ts:
            assert check_transformation2(vcompose_transformations(s, t)).ok


def test_vertical_composition_kind_mismatch():
    K = delooping(Z2)
    Id = identity_functor2(K)
    with pytest.raises(MalformedError):
        vcompose_transformations(identity_transformation2(Id, "lax"), identity_transformation2(Id, "colax"))


def test_hcompose_matches_center_composition():
    Id = identity_monfunctor(Z2)
    objs = enumerate_center(regular_bimodule(Z2), Id, Id, "left", "strong").objects
    for n, m in itertools.product(objs, repeat=2):
        tn, tm = center_to_colax(n), center_to_colax(m)
        hc = hcompose_transformations(tn, tm)
        assert check_transformation2(hc).ok
        nm = compose_center_objects(n, m)
        assert hc.one(STAR) == nm.carrier
        assert all(hc.cell(x) == nm.components[x] for x in Z2.base.objects)


def test_hcompose_rejects_strictly_lax():
    from catcenter.twocat import LaxFunctor2

    K = delooping(Z2)
    Id = identity_functor2(K)
    lax = LaxFunctor2(K, K, Id.on0, Id.on1, Id.on2, Id.lax2, Id.lax0, name="lax")
    t = identity_transformation2(lax, "colax")
    with pytest.raises(MalformedError):
        hcompose_transformations(t, t)


@pytest.mark.parametrize("C", [Z2, Z4, S3], ids=["Z2", "Z4", "S3"])
def test_transformation_category_is_a_category(C):
    K = delooping(C)
    Id = identity_functor2(K)
    ts, cat, _ = transformation_category(Id, Id)
    objs = C.base.objects
    central = [g for g in objs if all(C.tensor(g, x) == C.tensor(x, g) for x in objs)]
    assert len(ts) == len(central)
    assert validate_category(cat).ok


def test_twisted_functor_is_pseudo():
    elems, mult = groups.symmetric(3)
    F = strict_monfunctor(S3, S3, lambda g: mult(mult("213", g), "213"), name="conj")
    K = delooping(S3)
    assert check_lax_functor2(deloop_functor(F, K, K)).ok


def test_modification_check_failure():
    K = delooping(Z2)
    Id = identity_functor2(K)
    t = identity_transformation2(Id)
    # a component of the wrong type
    r = check_modification2(Modification2(t, t, {STAR: K.base.id(1)}))
    assert not r.ok
