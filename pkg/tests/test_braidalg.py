from __future__ import annotations

import random

import pytest

from bhh.braidalg import (
    AlgebraObject,
    DualCocycle,
    alternating_bicharacter_klein,
    braided_enveloping,
    braided_opposite,
    braided_tensor_algebra,
    check_algebra_in_Z,
    check_env_action,
    check_freeness,
    coinvariants,
    env_action,
    dual_cocycle_check,
    j_twist_algebra,
    smash_product,
    twisted_double,
)
from bhh.exactlin import QQ, LinearMap, Subspace, tensor_map, tensor_maps, vec_eq, vec_iadd
from bhh.hopf import (
    GroupTable,
    HModule,
    HopfError,
    ModuleAlgebra,
    check_hopf_axioms,
    check_rmatrix,
    drinfeld_double,
    drinfeld_double_group,
    sweedler,
    trivial_quasitriangular,
)
from bhh.ydmod import YDModule, check_yd, flip_map

from conftest import dual_numbers_mult, dual_numbers_smash, group_smash, smash_of_copies

ONE = QQ.one


def tables_equal(X, Y):
    return all(vec_eq(a, b) for ra, rb in zip(X.table(), Y.table()) for a, b in zip(ra, rb))


def test_dual_numbers_smash(fixture_B):
    B = fixture_B
    assert B.dim == 4
    assert check_algebra_in_Z(B).passed
    assert check_yd(B.yd).passed


def test_smash_over_trivial_E_is_A():
    B = group_smash(GroupTable.trivial())
    assert B.dim == 1
    Q = drinfeld_double_group(GroupTable.trivial(), QQ)
    E = Q.hopf.base
    A = ModuleAlgebra(HModule.trivial(E, 2), dual_numbers_mult(QQ), {0: 1})
    B = smash_product(A, Q)
    assert B.dim == 2 and B.mult == A.mult
    assert all(m == LinearMap.identity(QQ, 2) for m in B.module.mats)


def test_smash_with_A_trivial_is_E_adjoint():
    G = GroupTable.symmetric(3)
    B = group_smash(G)
    E = B.smash.E
    assert B.mult == E.mult
    Y = YDModule.adjoint(E)
    assert B.yd.coaction == Y.coaction
    assert all(a == b for a, b in zip(B.yd.action, Y.action))


def test_coinvariants_recover_A(fixture_B):
    B = fixture_B
    co = coinvariants(B)
    inc = B.smash.A_inclusion()
    assert len(co) == 2
    A = B.smash.A
    for i in range(2):
        for j in range(2):
            lhs = B.mul(inc.column(i), inc.column(j))
            assert vec_eq(lhs, inc.apply(A.mul({i: ONE}, {j: ONE})))
    assert Subspace(QQ, 4, co).rank == Subspace(QQ, 4, co + inc.columns()).rank


def test_smash_rejects_non_module_algebra():
    Q = drinfeld_double_group(GroupTable.cyclic(2), QQ)
    E = Q.hopf.base
    shift = LinearMap(QQ, 2, 2, {0: {0: ONE}, 1: {0: ONE, 1: ONE}})
    A = ModuleAlgebra(HModule(E, [LinearMap.identity(QQ, 2), shift]), dual_numbers_mult(QQ), {0: 1})
    with pytest.raises(HopfError):
        smash_product(A, Q)


def test_flipped_antipode_adjoint_fails():
    E = sweedler(QQ)
    Q = drinfeld_double(E)
    mats = []
    for w in range(4):
        cols = {}
        for v in range(4):
            out = {}
            for a, b, c in E.delta_terms(w):
                vec_iadd(out, E.mul(E.mul(E.S({b: ONE}), {v: ONE}), {a: ONE}), c)
            cols[v] = out
        mats.append(LinearMap(QQ, 4, 4, cols))
    Y = YDModule(E, mats, YDModule.adjoint(E).coaction)
    B = AlgebraObject(Q, Y.to_dmodule(Q), E.mult, E.unit)
    assert not check_algebra_in_Z(B).passed


def test_trivial_action_algebra_in_Z():
    Q = trivial_quasitriangular(drinfeld_double_group(GroupTable.cyclic(2), QQ).hopf.base)
    B = AlgebraObject(Q, HModule.trivial(Q.hopf, 2), dual_numbers_mult(QQ), {0: 1})
    assert check_algebra_in_Z(B).passed


def test_opposite_trivial_braiding_is_ordinary_opposite():
    Q = trivial_quasitriangular(sweedler(QQ))
    E = Q.hopf
    B = AlgebraObject(Q, HModule.trivial(E, 4), E.mult, E.unit)
    op = braided_opposite(B)
    for i in range(4):
        for j in range(4):
            assert vec_eq(op.mul({i: ONE}, {j: ONE}), E.mul({j: ONE}, {i: ONE}))


def test_opposite_of_commutative_trivial_is_itself():
    Q = drinfeld_double_group(GroupTable.cyclic(2), QQ)
    B = AlgebraObject(Q, HModule.trivial(Q.hopf, 2), dual_numbers_mult(QQ), {0: 1})
    assert tables_equal(braided_opposite(B), B)


@pytest.mark.parametrize("G", [GroupTable.cyclic(2), GroupTable.cyclic(3), GroupTable.symmetric(3)])
def test_braided_opposite_of_E_is_E(G):
    B = group_smash(G)
    assert tables_equal(braided_opposite(B), B)


def test_braided_opposite_of_sweedler_is_itself():
    E = sweedler(QQ)
    Q = drinfeld_double(E)
    A = ModuleAlgebra(HModule.trivial(E, 1), LinearMap(QQ, 1, 1, {0: {0: ONE}}), {0: 1})
    B = smash_product(A, Q)
    assert tables_equal(braided_opposite(B), B)


@pytest.mark.parametrize("n", [2, 3])
def test_braided_square_is_smash_of_copies(n):
    B = group_smash(GroupTable.cyclic(n))
    T = braided_tensor_algebra(B, B)
    assert T.mult == smash_of_copies(B.smash.E)


def test_braided_tensor_trivial_R_is_ordinary():
    Q = trivial_quasitriangular(drinfeld_double_group(GroupTable.cyclic(2), QQ).hopf.base)
    B = AlgebraObject(Q, HModule.trivial(Q.hopf, 2), dual_numbers_mult(QQ), {0: 1})
    T = braided_tensor_algebra(B, B)
    I = LinearMap.identity(QQ, 2)
    ordinary = tensor_map(B.mult, B.mult) @ tensor_maps([I, flip_map(QQ, 2, 2), I])
    assert T.mult == ordinary


def test_braided_tensor_of_k():
    B = group_smash(GroupTable.trivial())
    T = braided_tensor_algebra(B, B)
    assert T.dim == 1 and T.mult == B.mult


def test_env_action_module(fixture_B):
    assert check_env_action(fixture_B).passed
    assert check_env_action(group_smash(GroupTable.symmetric(3))).passed


def test_env_action_classical_case():
    E = sweedler(QQ)
    Q = trivial_quasitriangular(E)
    B = AlgebraObject(Q, HModule.trivial(E, 4), E.mult, E.unit)
    act = env_action(B)
    for a in range(4):
        for b in range(4):
            for c in range(4):
                lhs = act.apply({(a * 4 + b) * 4 + c: ONE})
                assert vec_eq(lhs, E.mul(E.mul({b: ONE}, {a: ONE}), {c: ONE}))


@pytest.mark.parametrize("n", [0, 1, 2])
def test_freeness(fixture_B, n):
    assert check_freeness(fixture_B, n).passed


def test_klein_twist():
    f = QQ
    Q = drinfeld_double_group(GroupTable.klein(), f)
    J = DualCocycle(Q, alternating_bicharacter_klein(f))
    assert dual_cocycle_check(J).passed
    QJ = twisted_double(J)
    assert check_hopf_axioms(QJ.hopf).passed
    assert check_rmatrix(QJ).passed
    A = ModuleAlgebra(HModule.trivial(Q.hopf.base, 1), LinearMap(f, 1, 1, {0: {0: f.one}}), {0: 1})
    B = smash_product(A, Q)
    BJ = j_twist_algebra(B, J, QJ)
    assert check_algebra_in_Z(BJ).passed
    assert not tables_equal(BJ, B)


def test_trivial_twist_changes_nothing(fixture_B):
    J = DualCocycle.trivial(fixture_B.Q)
    assert dual_cocycle_check(J).passed
    assert tables_equal(j_twist_algebra(fixture_B, J), fixture_B)


def test_twist_fixes_products_with_A():
    f = QQ
    Q = drinfeld_double_group(GroupTable.klein(), f)
    E = Q.hopf.base
    chars = [LinearMap(f, 2, 2, {0: {0: f.one}, 1: {1: f((-1) ** (x >> 1))}}) for x in range(4)]
    A = ModuleAlgebra(HModule(E, chars), dual_numbers_mult(f), {0: 1})
    B = smash_product(A, Q)
    J = DualCocycle(Q, alternating_bicharacter_klein(f))
    BJ = j_twist_algebra(B, J)
    inc = B.smash.A_inclusion()
    for a in inc.columns():
        for b in range(B.dim):
            assert vec_eq(BJ.mul(a, {b: ONE}), B.mul(a, {b: ONE}))
            assert vec_eq(BJ.mul({b: ONE}, a), B.mul({b: ONE}, a))


def test_random_sign_table_usually_not_a_cocycle():
    Q = drinfeld_double_group(GroupTable.klein(), QQ)
    rng = random.Random(11)
    failures = 0
    for _ in range(10):
        table = [[rng.choice([1, -1]) for _ in range(4)] for _ in range(4)]
        if not dual_cocycle_check(DualCocycle(Q, table)).passed:
            failures += 1
    assert failures >= 8


def test_non_cocycle_rejected():
    Q = drinfeld_double_group(GroupTable.klein(), QQ)
    table = [[1] * 4 for _ in range(4)]
    table[1][1] = -1
    table[1][2] = 2
    with pytest.raises(HopfError):
        twisted_double(DualCocycle(Q, table))
