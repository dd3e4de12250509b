import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from catcenter import groups
from catcenter.fincat import identity_functor
from catcenter.matrices import Mat, all_matrices, eye, kron, swap_matrix
from catcenter.moncat import (
    LaxMonFunctor,
    MonCat,
    check_lax_monoidal,
    check_ybo1,
    commutative_monoid_moncat,
    group_moncat,
    identity_braiding,
    identity_monfunctor,
    mat_moncat,
    poset_max_moncat,
    strict_monfunctor,
    swap_braiding,
    validate_moncat,
)
from catcenter.twocat import delooping

mats = st.lists(st.integers(0, 1), min_size=4, max_size=4).map(lambda xs: Mat([xs[:2], xs[2:]], 2))


def z(n):
    e, m = groups.cyclic(n)
    return group_moncat(e, m, name=f"Z{n}")


def s3():
    e, m = groups.symmetric(3)
    return group_moncat(e, m, name="S3")


def test_z2_discrete_moncat():
    C = z(2)
    assert len(C.base.objects) == 2
    assert validate_moncat(C).ok


def test_s3_moncat_against_triple_loop():
    elems, mult = groups.symmetric(3)
    C = s3()
    assert len(C.base.objects) == 6
    assert all(C.tensor(C.tensor(a, b), c) == C.tensor(a, C.tensor(b, c))
               for a, b, c in itertools.product(elems, repeat=3))
    assert validate_moncat(C).ok


def test_table_without_unit_rejected():
    with pytest.raises(ValueError):
        group_moncat([0, 1], {(a, b): 1 for a in (0, 1) for b in (0, 1)}, name="no-unit")


def test_nonstrict_tensor_is_rejected_by_validator():
    C = z(3)
    tobj = dict(C.tensor_obj_table)
    tobj[(1, 1)] = 0  # breaks (1·1)·1 = 1·(1·1)
    bad = MonCat(C.base, tobj, C.tensor_mor_table, C.unit, name="bad")
    r = validate_moncat(bad)
    assert not r.ok


def test_matrix_backend_validates_on_pool():
    pool = [eye(1, 2), eye(2, 2), Mat([[0, 1], [1, 0]], 2), Mat([[1, 1], [0, 1]], 2), Mat([[1, 1]], 2)]
    assert validate_moncat(mat_moncat(2), pool).ok


def test_kron_with_scalar_identity():
    M = Mat([[1, 0, 1], [0, 1, 1]], 3)
    assert kron(eye(1, 3), M) == M == kron(M, eye(1, 3))


def test_kron_of_swaps_is_an_involutive_permutation():
    s = swap_matrix(2, 2, 2)
    k = kron(s, s)
    arr = np.array(k.tolist())
    assert arr.shape == (16, 16)
    assert (arr.sum(axis=0) == 1).all() and (arr.sum(axis=1) == 1).all()
    assert k @ k == eye(16, 2)


def test_kron_row_major_convention():
    a, b = Mat([[1, 0], [0, 0]], 5), Mat([[0, 2], [3, 4]], 5)
    k = np.array(kron(a, b).tolist())
    for i, j in itertools.product(range(2), repeat=2):
        for r, s in itertools.product(range(2), repeat=2):
            assert k[i * 2 + r, j * 2 + s] == (a.tolist()[i][j] * b.tolist()[r][s]) % 5


@given(mats, mats, mats, mats)
def test_kron_interchange(a, b, c, d):
    # direct evaluation of both sides with numpy integers
    lhs = kron(a, b) @ kron(c, d)
    rhs = np.kron(np.array((a @ c).tolist()), np.array((b @ d).tolist())) % 2
    assert np.array_equal(np.array(lhs.tolist()), rhs)
    assert lhs == kron(a @ c, b @ d)


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.randoms())
def test_kron_matches_numpy_on_rectangular_shapes(r1, c1, r2, c2, rnd):
    a = Mat([[rnd.randrange(3) for _ in range(c1)] for _ in range(r1)], 3)
    b = Mat([[rnd.randrange(3) for _ in range(c2)] for _ in range(r2)], 3)
    assert kron(a, b).tolist() == (np.kron(np.array(a.tolist()), np.array(b.tolist())) % 3).tolist()


@given(mats, mats, mats)
def test_kron_associative(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@given(mats, mats, mats)
def test_kron_bilinear(a, b, c):
    assert kron(a + b, c) == kron(a, c) + kron(b, c)


def test_identity_monoidal_functor_passes():
    assert check_lax_monoidal(identity_monfunctor(s3())).ok


def test_s3_endomorphisms_are_strong_monoidal():
    elems, mult = groups.symmetric(3)
    C = s3()
    maps = [dict(zip(elems, img)) for img in itertools.product(elems, repeat=6)]
    endos = [m for m in maps if all(m[mult(a, b)] == mult(m[a], m[b]) for a in elems for b in elems)]
    # oracle: |End(S3)| = 1 (trivial) + 3 (onto an order-2 subgroup) + 6 (automorphisms)
    assert len(endos) == 10
    for m in endos:
        F = strict_monfunctor(C, C, m.__getitem__, name="endo")
        assert check_lax_monoidal(F).ok


def test_non_endomorphism_fails():
    elems, _ = groups.symmetric(3)
    C = s3()
    F = strict_monfunctor(C, C, lambda g: "213", name="const")
    assert not check_lax_monoidal(F).ok


def test_unit_map_breaking_unitality():
    M = commutative_monoid_moncat([0, 1], max, name="max")
    Id = identity_functor(M.base)
    good = LaxMonFunctor(M, M, Id, {("*", "*"): 0}, 0, name="good")
    bad = LaxMonFunctor(M, M, Id, {("*", "*"): 0}, 1, name="bad")
    assert check_lax_monoidal(good).ok
    r = check_lax_monoidal(bad)
    assert not r.ok
    assert any("unit" in law for law in r.failed())


def test_poset_cannot_break_unitality():
    # brute force over every choice of F0: I -> F(I) in the thin poset
    P = poset_max_moncat()
    Id = identity_monfunctor(P)
    objs = P.base.objects
    s2 = {(x, y): P.base.id(P.tensor(x, y)) for x in objs for y in objs}
    for f0 in P.base.homset(P.unit, Id.on_obj(P.unit)):
        assert check_lax_monoidal(LaxMonFunctor(P, P, Id.functor, s2, f0)).ok


def test_reversal_round_trip():
    C = s3()
    assert C.reversed().reversed() == C
    R = C.reversed()
    assert all(R.tensor(a, b) == C.tensor(b, a) for a in C.base.objects for b in C.base.objects)


def test_delooping_translates_back():
    C = s3()
    K = delooping(C)
    objs = C.base.objects
    assert all(K.comp1(g, f) == C.tensor(g, f) for g in objs for f in objs)


def test_identity_braiding_on_commutative_group():
    assert check_ybo1(identity_braiding(z(4))).ok


def test_identity_braiding_on_s3_is_ill_typed():
    r = check_ybo1(identity_braiding(s3()))
    assert not r.ok


def test_swap_braiding_on_matrices():
    C = mat_moncat(2)
    pool = [eye(1, 2), eye(2, 2), Mat([[0, 1], [1, 0]], 2), Mat([[1, 1], [0, 1]], 2), Mat([[1, 1]], 2)]
    assert check_ybo1(swap_braiding(C), pool).ok


def test_all_matrices_count():
    assert len(list(all_matrices(2, 2, 2))) == 16
