import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from catcenter import groups
from catcenter.bimonad import (
    BIMONAD_LAWS,
    ComoduleStructure,
    ModuleStructure,
    YDModule,
    check_bimonad,
    check_comodule,
    check_comodule_monad,
    check_hopf_bimodule,
    check_lambda,
    check_module,
    check_module_comonad,
    check_relative_module,
    check_yd_module,
    enumerate_yd_modules,
    function_coproduct,
    group_algebra,
    identity_bimonad,
    induced_comodule,
    induced_module,
    make_lambda,
    push_comonad,
    push_monad,
    regular_comodule,
    regular_module,
    trivial_yd_module,
    transformation_comodule,
    transformation_module,
    yd_sides,
)
from catcenter.center import center_to_colax, enumerate_center
from catcenter.matrices import Mat, eye, swap_matrix
from catcenter.moncat import group_moncat, identity_monfunctor
from catcenter.report import MalformedError
from catcenter.twocat import (
    STAR,
    delooping,
    identity_functor2,
    identity_transformation2,
    regular_bimodule,
)

KZ2 = group_algebra(*groups.cyclic(2), name="kz2")
KV4 = group_algebra(*groups.product(groups.cyclic(2), groups.cyclic(2)), name="kv4")


# -- an independent oracle: bialgebra axioms in ordinary linear-map notation ----------
def A(m):
    return np.array(m.tolist(), dtype=np.int64)


def comp(*maps, p=2):
    """Composite of linear maps, rightmost applied first."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = m @ out
    return out % p


def kr(*ms):
    out = ms[0]
    for m in ms[1:]:
        out = np.kron(out, m)
    return out


def oracle_bialgebra(b):
    n = b.carrier
    m, u, d, e = A(b.mult), A(b.unit), A(b.comult), A(b.counit)
    t = A(swap_matrix(n, n, 2))
    I = np.eye(n, dtype=np.int64)
    one = np.eye(1, dtype=np.int64)
    eq = np.array_equal
    return {
        "assoc": eq(comp(m, kr(m, I)), comp(m, kr(I, m))),
        "unit": eq(comp(m, kr(u, I)), I) and eq(comp(m, kr(I, u)), I),
        "coassoc": eq(comp(kr(d, I), d), comp(kr(I, d), d)),
        "counit": eq(comp(kr(e, I), d), I) and eq(comp(kr(I, e), d), I),
        "delta-mu": eq(comp(d, m), comp(kr(m, m), kr(I, t, I), kr(d, d))),
        "eps-mu": eq(comp(e, m), kr(e, e)),
        "delta-eta": eq(comp(d, u), kr(u, u)),
        "eps-eta": eq(comp(e, u), one),
    }


@pytest.mark.parametrize("b", [KZ2, KV4], ids=["kz2", "kv4"])
def test_group_algebras_pass_all_laws(b):
    assert all(oracle_bialgebra(b).values())
    r = check_bimonad(b)
    assert r.ok
    assert all(law in r.laws for law in BIMONAD_LAWS)


def test_kz2_structure_matrices():
    # basis (δ_0, δ_1): μ is the group product, Δ diagonal, ε ≡ 1, η = δ_0
    assert KZ2.mult.tolist() == [[1, 0, 0, 1], [0, 1, 1, 0]]
    assert KZ2.comult.tolist() == [[1, 0], [0, 0], [0, 0], [0, 1]]
    assert KZ2.counit.tolist() == [[1, 1]]
    assert KZ2.unit.tolist() == [[1], [0]]


def test_identity_bimonad_passes():
    K = delooping(group_moncat(*groups.cyclic(2), name="Z2"))
    assert check_bimonad(identity_bimonad(K, STAR)).ok


def test_function_coproduct_breaks_first_compatibility():
    b = KZ2.replace(comult=function_coproduct(*groups.cyclic(2)))
    assert not oracle_bialgebra(b)["delta-mu"]
    r = check_bimonad(b)
    assert "multiplication-comultiplication" in r.failed()


def test_mistyped_cell_is_malformed():
    r = check_bimonad(KZ2.replace(mult=eye(2, 2)))
    assert r.has_malformed


def test_carrier_must_be_endocell():
    with pytest.raises(MalformedError):
        check_bimonad(KZ2.replace(carrier=STAR))


def _flip(m, i, j):
    rows = m.tolist()
    rows[i][j] ^= 1
    return Mat(rows, 2)


@pytest.mark.parametrize("b", [KZ2, KV4], ids=["kz2", "kv4"])
def test_every_single_cell_mutation_fails(b):
    for key, m in b.cells().items():
        for i, j in itertools.product(range(m.rows), range(m.cols)):
            bad = b.replace(**{key: _flip(m, i, j)})
            assert not check_bimonad(bad, fail_fast=True).ok, (key, i, j)


@given(st.sampled_from(["mult", "unit", "comult", "counit", "ybo"]), st.data())
def test_mutation_full_report_agrees_with_fail_fast(key, data):
    m = KZ2.cells()[key]
    i = data.draw(st.integers(0, m.rows - 1))
    j = data.draw(st.integers(0, m.cols - 1))
    bad = KZ2.replace(**{key: _flip(m, i, j)})
    full = check_bimonad(bad)
    assert not full.ok
    assert full.ok == check_bimonad(bad, fail_fast=True).ok
    # the oracle sees the same failure for structure mutations
    if key != "ybo":
        assert not all(oracle_bialgebra(bad).values())


# -- pushforwards and induced structures ------------------------------------------------
def test_identity_functor_pushforward_is_identity():
    F = identity_functor2(KZ2.K)
    # the matrix delooping needs a pool for the functor checks, but push
    # operations only evaluate cells
    assert push_monad(F, KZ2.monad) == KZ2.monad
    assert push_comonad(F, KZ2.comonad) == KZ2.comonad
    assert induced_module(F, regular_module(KZ2)) == regular_module(KZ2)
    assert induced_comodule(F, regular_comodule(KZ2)) == regular_comodule(KZ2)


def test_regular_module_and_comodule():
    assert check_module(regular_module(KZ2)).ok
    assert check_module(regular_module(KZ2, "left")).ok
    assert check_comodule(regular_comodule(KZ2)).ok
    assert check_comodule(regular_comodule(KZ2, "left")).ok


def test_transformation_structures_from_center_object():
    C = group_moncat(*groups.cyclic(2), name="Z2")
    Id = identity_monfunctor(C)
    K = delooping(C)
    b = identity_bimonad(K, STAR)
    for h in enumerate_center(regular_bimodule(C), Id, Id, "left", "strong").objects:
        phi = center_to_colax(h)
        assert check_comodule(transformation_comodule(phi, b)).ok
    t = identity_transformation2(identity_functor2(K), "lax")
    m = transformation_module(t, b)
    assert check_module(m).ok


def test_identity_transformation_coaction_is_unit():
    C = group_moncat(*groups.cyclic(2), name="Z2")
    K = delooping(C)
    b = identity_bimonad(K, STAR)
    t = identity_transformation2(identity_functor2(K), "colax")
    co = transformation_comodule(t, b)
    assert co.coaction == K.h(b.unit, K.i(t.one(STAR)))


# -- module comonads, comodule monads, relative and Hopf modules ---------------------------
@pytest.mark.parametrize("b", [KZ2, KV4], ids=["kz2", "kv4"])
def test_bimonad_over_itself(b):
    assert check_module_comonad(b.comonad, regular_module(b), b, b.ybo).ok
    assert check_module_comonad(b.comonad, regular_module(b, "left"), b, b.ybo).ok
    assert check_comodule_monad(b.monad, regular_comodule(b), b, b.ybo).ok
    assert check_comodule_monad(b.monad, regular_comodule(b, "left"), b, b.ybo).ok
    for side in ("right", "left"):
        r = check_relative_module(regular_module(b, side), regular_comodule(b, side), b.comult, b, b.ybo)
        assert r.ok
    r = check_hopf_bimodule(regular_module(b, "left"), regular_module(b), regular_comodule(b, "left"),
                            regular_comodule(b), b, b.ybo, b.ybo)
    assert r.ok and len(r.laws) == 5


def test_trivial_carrier_cases():
    K = delooping(group_moncat(*groups.cyclic(2), name="Z2"))
    b = identity_bimonad(K, STAR)
    e = b.mult
    act = ModuleStructure(K, b.carrier, b.monad, e)
    co = ComoduleStructure(K, b.carrier, b.comonad, e)
    assert check_module_comonad(b.comonad, act, b, e).ok
    assert check_comodule_monad(b.monad, co, b, e).ok
    assert check_relative_module(act, co, e, b, e).ok


def test_column_swaps_keep_grouplike_module_comonads():
    # Δ is diagonal on the group basis, so any action sending basis vectors
    # to basis vectors satisfies both compatibilities
    for i, j in itertools.combinations(range(4), 2):
        a = A(KZ2.mult)
        a[:, [i, j]] = a[:, [j, i]]
        act = ModuleStructure(KZ2.K, 2, KZ2.monad, Mat(a, 2))
        assert check_module_comonad(KZ2.comonad, act, KZ2, KZ2.ybo).ok


def test_cell_flip_breaks_module_comonad():
    a = A(KZ2.mult)
    a[0, 1] ^= 1  # δ_0⊗δ_1 now goes to δ_0 + δ_1, which is not grouplike
    act = ModuleStructure(KZ2.K, 2, KZ2.monad, Mat(a, 2))
    r = check_module_comonad(KZ2.comonad, act, KZ2, KZ2.ybo)
    assert r.failed() == ["comultiplication compatibility", "counit compatibility"]


# -- λ ---------------------------------------------------------------------------------
@pytest.mark.parametrize("b", [KZ2, KV4], ids=["kz2", "kv4"])
def test_lambda_laws(b):
    assert check_lambda(b, make_lambda(b)).ok


def test_lambda_of_identity_bimonad_is_identity():
    K = delooping(group_moncat(*groups.cyclic(2), name="Z2"))
    b = identity_bimonad(K, STAR)
    lam = make_lambda(b)
    assert lam == K.i(b.carrier, b.carrier)
    assert check_lambda(b, lam).ok


def test_lambda_with_identity_nu_reduces():
    lam = make_lambda(KZ2, eye(4, 2))
    assert lam == KZ2.K.h(KZ2.K.v(KZ2.comult, KZ2.mult), KZ2.K.i(2))


# the only ν on kz2 breaking exactly one of the four distributive laws
# (found by a search over all 2^16 candidates)
ONE_LAW_BREAKERS = [
    ([[1, 0, 1, 0], [0, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]], "right monad distributive law"),
    ([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 0, 0], [0, 1, 0, 1]], "left monad distributive law"),
]


@pytest.mark.parametrize("c,law", ONE_LAW_BREAKERS)
def test_lambda_from_broken_nu_fails(c, law):
    b = KZ2.replace(ybo=Mat(c, 2))
    dl = [n for n in check_bimonad(b, structure=False).failed() if "distributive" in n]
    assert dl == [law]
    failed = check_lambda(b).failed()
    assert "lambda: monad left" in failed


# -- Yetter-Drinfeld ----------------------------------------------------------------------
def oracle_yd_dim1():
    """All (action, coaction) on k over F2[Z/2], checked with plain numpy."""
    m, u, d, e = A(KZ2.mult), A(KZ2.unit), A(KZ2.comult), A(KZ2.counit)
    t21, t12 = A(swap_matrix(2, 1, 2)), A(swap_matrix(1, 2, 2))
    I2, I1 = np.eye(2, dtype=np.int64), np.eye(1, dtype=np.int64)
    found = []
    for a_ in itertools.product(range(2), repeat=2):
        for c_ in itertools.product(range(2), repeat=2):
            a = np.array([a_])
            c = np.array([[c_[0]], [c_[1]]])
            module = np.array_equal(comp(a, kr(m, I1)), comp(a, kr(I2, a))) and np.array_equal(comp(a, kr(u, I1)), I1)
            comodule = np.array_equal(comp(kr(d, I1), c), comp(kr(I2, c), c)) and np.array_equal(comp(kr(e, I1), c), I1)
            if not (module and comodule):
                continue
            # Σ h1 v(-1) ⊗ h2·v(0) = Σ (h1·v)(-1) h2 ⊗ (h1·v)(0)
            lhs = comp(kr(m, a), kr(I2, A(swap_matrix(2, 2, 2)), I1), kr(d, c))
            rhs = comp(kr(m, I1), kr(I2, t21), kr(c, I2), kr(a, I2), kr(I2, t12), kr(d, I1))
            if np.array_equal(lhs, rhs):
                found.append((a_, c_))
    return found


def test_yd_enumeration_matches_brute_force():
    expected = oracle_yd_dim1()
    assert len(expected) == 2
    found = enumerate_yd_modules(KZ2, 1)
    assert sorted((tuple(V.action.tolist()[0]), tuple(r[0] for r in V.coaction.tolist())) for V in found) == sorted(expected)
    # trivial action, coaction by δ_0 or δ_1
    assert {tuple(V.action.tolist()[0]) for V in found} == {(1, 1)}


def test_trivial_yd_module():
    assert check_yd_module(trivial_yd_module(KZ2)).ok


def test_regular_action_with_regular_coaction_is_not_yd():
    V = YDModule(KZ2, 2, KZ2.mult, KZ2.comult)
    r = check_yd_module(V)
    assert r.failed() == ["YD compatibility"]
    # hand-derived: on δ_g⊗δ_k the two sides are δ_{gkg}⊗δ_{gk} and δ_{gk}⊗δ_{gk}
    hand = set()
    for f in (lambda g, k: ((g + k + g) % 2, (g + k) % 2), lambda g, k: ((g + k) % 2, (g + k) % 2)):
        M = np.zeros((4, 4), dtype=np.int64)
        for g, k in itertools.product(range(2), repeat=2):
            x, y = f(g, k)
            M[x * 2 + y, g * 2 + k] = 1
        hand.add(Mat(M, 2))
    lhs, rhs, alt = yd_sides(V)
    assert {lhs, rhs} == hand and rhs == alt


def test_self_yd_instances():
    # kz2 is commutative and cocommutative: trivial action with regular
    # coaction, and regular action with trivial coaction
    triv_act = Mat([[1, 0, 1, 0], [0, 1, 0, 1]], 2)  # ε⊗1: B⊗B -> B
    triv_co = Mat([[1, 0], [0, 1], [0, 0], [0, 0]], 2)  # η⊗1: B -> B⊗B
    assert check_yd_module(YDModule(KZ2, 2, triv_act, KZ2.comult)).ok
    assert check_yd_module(YDModule(KZ2, 2, KZ2.mult, triv_co)).ok


def test_yd_needs_matrix_bialgebra():
    K = delooping(group_moncat(*groups.symmetric(3), name="S3"))
    with pytest.raises(MalformedError):
        check_yd_module(YDModule(identity_bimonad(K, STAR), 1, None, None))
