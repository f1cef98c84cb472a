from __future__ import annotations

import pytest

from bhh.exactlin import QQ, LinearMap, Subspace
from bhh.hopf import GroupTable, HModule, drinfeld_double, drinfeld_double_group, group_algebra, sweedler
from bhh.ydmod import (
    CapExceeded,
    BimoduleObject,
    YDModule,
    bimodule_hom_space,
    categorical_bimodule_homs,
    check_pairing_linear,
    check_yd,
    flip_map,
    hom_space,
    inner_hom,
    invariants,
    invariants_of,
    r_braiding,
    yd_braiding,
)


def _double(G):
    Q = drinfeld_double_group(G, QQ)
    return Q, Q.hopf.base


def test_trivial_yd_passes():
    _, E = _double(GroupTable.cyclic(3))
    assert check_yd(YDModule.trivial(E, 2)).passed


@pytest.mark.parametrize("G", [GroupTable.cyclic(2), GroupTable.symmetric(3)])
def test_adjoint_yd_passes(G):
    _, E = _double(G)
    assert check_yd(YDModule.adjoint(E)).passed


def test_regular_trivial_coaction_z2():
    _, E = _double(GroupTable.cyclic(2))
    assert check_yd(YDModule.regular_trivial_coaction(E)).passed


def test_adjoint_sweedler_is_yd():
    assert check_yd(YDModule.adjoint(sweedler(QQ))).passed


def test_braiding_with_trivial_coaction_is_flip():
    _, E = _double(GroupTable.cyclic(3))
    M = YDModule.adjoint(E)
    N = YDModule.trivial(E, 2)
    c, cinv = yd_braiding(M, N)
    assert c == flip_map(QQ, M.dim, N.dim)
    assert c @ cinv == LinearMap.identity(QQ, M.dim * N.dim)


def test_braiding_symmetric_for_z2():
    _, E = _double(GroupTable.cyclic(2))
    Y = YDModule.adjoint(E)
    c, cinv = yd_braiding(Y, Y)
    assert c @ c == LinearMap.identity(QQ, 4)


@pytest.mark.parametrize("G", [GroupTable.cyclic(2), GroupTable.cyclic(3), GroupTable.symmetric(3)])
def test_yd_braiding_equals_r_braiding(G):
    Q, E = _double(G)
    Y = YDModule.adjoint(E)
    M = Y.to_dmodule(Q)
    c, cinv = yd_braiding(Y, Y)
    assert c == r_braiding(Q, M, M)
    assert cinv @ c == LinearMap.identity(QQ, E.dim ** 2)


def test_yd_braiding_equals_r_braiding_general_double():
    E = sweedler(QQ)
    Q = drinfeld_double(E)
    Y = YDModule.adjoint(E)
    c, _ = yd_braiding(Y, Y)
    assert c == r_braiding(Q, Y.to_dmodule(Q), Y.to_dmodule(Q))


def test_s3_braiding_not_symmetric():
    _, E = _double(GroupTable.symmetric(3))
    Y = YDModule.adjoint(E)
    c, _ = yd_braiding(Y, Y)
    assert not (c @ c == LinearMap.identity(QQ, 36))


def test_inner_hom_of_trivial_modules_is_trivial():
    Q, _ = _double(GroupTable.cyclic(2))
    T = HModule.trivial(Q.hopf, 2)
    H = inner_hom(T, T)
    assert all(H.mats[h] == LinearMap.identity(QQ, 4).scale(Q.hopf.eps_values[h]) for h in range(Q.dim))


def test_pairing_linear_and_invariants_are_homs():
    Q, E = _double(GroupTable.cyclic(2))
    M = YDModule.adjoint(E).to_dmodule(Q)
    N = YDModule.regular_trivial_coaction(E).to_dmodule(Q)
    for X, Y in ((M, M), (M, N), (N, M)):
        assert check_pairing_linear(X, Y).passed
        inv = invariants(inner_hom(X, Y))
        direct = hom_space(X, Y)
        assert len(inv) == len(direct)
        assert Subspace(QQ, X.dim * Y.dim, inv).rank == Subspace(QQ, X.dim * Y.dim, inv + direct).rank


def test_inner_hom_cap():
    Q, E = _double(GroupTable.cyclic(2))
    M = YDModule.adjoint(E).to_dmodule(Q)
    with pytest.raises(CapExceeded):
        inner_hom(M, M, cap=3)


def test_invariants_trivial_and_regular():
    _, E = _double(GroupTable.cyclic(2))
    assert len(invariants(HModule.trivial(E, 3))) == 3
    (v,) = invariants(HModule.regular(E))
    assert v[0] == v[1]


def test_s3_adjoint_invariants():
    G = GroupTable.symmetric(3)
    Q, E = _double(G)
    M = YDModule.adjoint(E).to_dmodule(Q)
    # full invariants of the double: coinvariance forces multiples of 1
    assert len(invariants(M)) == 1
    # invariants of the E^op part: class sums
    from bhh.hopf import double_embeddings
    op, _ = double_embeddings(Q)
    inv = invariants_of(M, op.columns())
    assert len(inv) == len(G.conjugacy_classes()) == 3


def _regular_E_bimodule(Q, E):
    M = YDModule.adjoint(E).to_dmodule(Q)
    one = QQ.one
    left = [E.left_mult_matrix({w: one}) for w in range(E.dim)]
    right = [LinearMap(QQ, E.dim, E.dim, {v: E.mul({v: one}, {w: one}) for v in range(E.dim)}) for w in range(E.dim)]
    return BimoduleObject(M, M, left, right, "E")


def test_regular_bimodule_homs_z2():
    Q, E = _double(GroupTable.cyclic(2))
    X = _regular_E_bimodule(Q, E)
    assert X.check(E.mult).passed
    homs = bimodule_hom_space(Q, X, X)
    assert homs.dim == 2
    assert homs.report.passed
    inv = invariants(homs.module)
    cat = categorical_bimodule_homs(X, X)
    lifted = [homs.subspace.inclusion().apply(v) for v in inv]
    assert len(lifted) == cat.rank
    assert all(cat.contains(v) for v in lifted)


def test_bimodule_homs_trivial_E_are_all_maps():
    Q, E = _double(GroupTable.trivial())
    M = HModule.trivial(Q.hopf, 2)
    E_obj = HModule.trivial(Q.hopf, 1)
    I = LinearMap.identity(QQ, 2)
    X = BimoduleObject(M, E_obj, [I], [I], "M")
    assert bimodule_hom_space(Q, X, X).dim == 4
