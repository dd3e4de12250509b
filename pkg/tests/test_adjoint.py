import pytest

from catcenter import groups
from catcenter.adjoint import (
    Adjunction,
    check_adjunction,
    check_colax_wrt_colax,
    find_adjoint,
    image_adjunction,
    invert_half_braiding_via_adjoints,
    is_autonomous,
    lift_dual_to_center,
)
from catcenter.center import (
    center_to_colax,
    check_half_braiding,
    compose_center_objects,
    enumerate_center,
    is_center_morphism,
    unit_center_object,
    xi_invert,
)
from catcenter.moncat import (
    commutative_monoid_moncat,
    group_moncat,
    identity_monfunctor,
    poset_max_moncat,
    strict_monfunctor,
)
from catcenter.report import MalformedError
from catcenter.twocat import ONE, STAR, all_one_cells, deloop_functor, delooping, regular_bimodule


def gm(name, g):
    e, m = g
    return group_moncat(e, m, name=name)


def test_identity_is_self_adjoint():
    K = delooping(gm("S3", groups.symmetric(3)))
    e = K.id1(STAR)
    for side in ("left", "right"):
        adj = find_adjoint(K, e, side)[0]
        assert adj.adjoint == e
        assert adj.unit == K.i(e) and adj.counit == K.i(e)
        assert check_adjunction(K, adj).ok


def test_adjoints_in_s3_are_inverses():
    elems, mult = groups.symmetric(3)
    K = delooping(gm("S3", (elems, mult)))
    for g in elems:
        for side in ("left", "right"):
            found = find_adjoint(K, g, side)
            assert len(found) == 1
            ginv = found[0].adjoint
            assert mult(g, ginv) == mult(ginv, g) == "123"


def test_max_monoid_one_has_no_adjoint():
    K = delooping(poset_max_moncat())
    assert find_adjoint(K, 1, "left") == [] and find_adjoint(K, 1, "right") == []
    ok, witness = is_autonomous(K)
    assert not ok and witness == 1


@pytest.mark.parametrize("g", [groups.cyclic(2), groups.cyclic(4), groups.symmetric(3), groups.dihedral(4)])
def test_group_deloopings_are_autonomous(g):
    ok, cert = is_autonomous(delooping(gm("G", g)))
    assert ok and len(cert) == len(g[0])


def test_trivial_twocat_autonomous():
    assert is_autonomous(ONE)[0]


def test_non_one_cell_rejected():
    K = delooping(gm("Z2", groups.cyclic(2)))
    with pytest.raises(MalformedError):
        find_adjoint(K, 7)


def test_broken_adjunction_fails_snake():
    C = commutative_monoid_moncat([0, 1], max, name="max")
    K = delooping(C)
    adj = Adjunction("*", "*", 1, 1, "left")  # 1·1 = 1 ≠ identity 0
    assert not check_adjunction(K, adj).ok


def test_pseudofunctor_image_of_adjunction():
    C = gm("S3", groups.symmetric(3))
    elems, mult = groups.symmetric(3)
    K = delooping(C)
    F = deloop_functor(strict_monfunctor(C, C, lambda g: mult(mult("213", g), "213"), name="conj"), K, K)
    for g in all_one_cells(K):
        for side in ("left", "right"):
            adj = find_adjoint(K, g, side)[0]
            assert check_adjunction(K, image_adjunction(F, adj)).ok


def instances():
    out = []
    for n, g in (("Z4", groups.cyclic(4)), ("S3", groups.symmetric(3)), ("D4", groups.dihedral(4))):
        C = gm(n, g)
        out.append((n, C, identity_monfunctor(C)))
    elems, mult = groups.symmetric(3)
    C = gm("S3", (elems, mult))
    out.append(("S3-conj", C, strict_monfunctor(C, C, lambda g: mult(mult("213", g), "213"), name="conj")))
    return out


@pytest.mark.parametrize("label,C,F", instances(), ids=[i[0] for i in instances()])
def test_weak_center_upgrades_to_strong(label, C, F):
    Bm = regular_bimodule(C)
    G = identity_monfunctor(C)
    weak = enumerate_center(Bm, F, G, "left", "weak")
    strong = enumerate_center(Bm, F, G, "left", "strong")
    upgraded = [invert_half_braiding_via_adjoints(h) for h in weak.objects]
    for u in upgraded:
        assert check_half_braiding(u).ok
        assert check_half_braiding(xi_invert(u)).ok
        assert check_colax_wrt_colax(center_to_colax(u)).ok
    assert set(upgraded) == set(strong.objects)
    assert [u.inverses for u in upgraded] == [s.inverses for s in strong.objects]


def test_upgrade_of_identity_is_identity():
    C = gm("Z2", groups.cyclic(2))
    Id = identity_monfunctor(C)
    u = invert_half_braiding_via_adjoints(unit_center_object(C, Id))
    assert u.inverses == u.components


def test_upgrade_rejects_non_pseudo_twist():
    from catcenter.fincat import identity_functor
    from catcenter.moncat import LaxMonFunctor

    M = commutative_monoid_moncat([0, 1], max, name="max")
    lax_only = LaxMonFunctor(M, M, identity_functor(M.base), {("*", "*"): 0}, 0, name="lax")
    Bm = regular_bimodule(M)
    h = enumerate_center(Bm, lax_only, lax_only, "left", "weak").objects[0]
    with pytest.raises(MalformedError):
        invert_half_braiding_via_adjoints(h)


@pytest.mark.parametrize("handedness", ["right", "left"])
def test_dual_lift_in_z4(handedness):
    C = gm("Z4", groups.cyclic(4))
    Id = identity_monfunctor(C)
    Bm = regular_bimodule(C)
    strong = enumerate_center(Bm, Id, Id, "left", "strong").objects
    for h in strong:
        res = lift_dual_to_center(h, handedness)
        d = res.half_braiding
        assert res.ok  # unit and counit are modifications
        assert check_half_braiding(d).ok
        assert d.carrier == (-h.carrier) % 4
        assert all(s == C.base.id(C.tensor(d.carrier, x)) for x, s in d.components.items())
        assert lift_dual_to_center(d, handedness).half_braiding.carrier == h.carrier
        # evaluation as a center morphism *M∘M -> unit
        ev = compose_center_objects(d, h)
        unit = unit_center_object(C, Id)
        assert ev.carrier == unit.carrier
        assert is_center_morphism(C.base.id(0), ev, unit)


def test_dual_of_unit_is_unit():
    C = gm("S3", groups.symmetric(3))
    Id = identity_monfunctor(C)
    u = unit_center_object(C, Id)
    assert lift_dual_to_center(u).half_braiding == u


def test_dual_lift_twisted_s3():
    _, C, F = instances()[3]
    G = identity_monfunctor(C)
    for h in enumerate_center(regular_bimodule(C), F, G, "left", "strong").objects:
        res = lift_dual_to_center(h)
        assert res.ok and check_half_braiding(res.half_braiding).ok
        assert res.half_braiding.F is G and res.half_braiding.G is F
