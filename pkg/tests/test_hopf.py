from __future__ import annotations

import pytest

from bhh.exactlin import QQ, FieldSpec, LinearMap, vec_eq
from bhh.hopf import (
    FinHopf,
    GroupTable,
    HModule,
    HopfError,
    ModuleAlgebra,
    QuasiTriHopf,
    check_hopf_axioms,
    check_module,
    check_module_algebra,
    check_rmatrix,
    double_embeddings,
    drinfeld_double,
    drinfeld_double_group,
    group_algebra,
    is_cosemisimple,
    is_semisimple,
    sweedler,
    sweedler_rmatrix,
    trivial_quasitriangular,
    twist_quasitriangular,
)

from conftest import dual_numbers_mult


def test_group_algebra_z2_passes():
    H = group_algebra(GroupTable.cyclic(2), QQ)
    assert H.dim == 2
    assert check_hopf_axioms(H).passed
    assert H.antipode == LinearMap.identity(QQ, 2)


def test_trivial_group_algebra():
    H = group_algebra(GroupTable.trivial(), QQ)
    assert H.dim == 1 and check_hopf_axioms(H).passed
    assert H.antipode == LinearMap.identity(QQ, 1)


def test_s3_group_algebra():
    H = group_algebra(GroupTable.symmetric(3), QQ)
    assert H.dim == 6 and check_hopf_axioms(H).passed


def test_corrupted_antipode_fails():
    H = group_algebra(GroupTable.cyclic(3), QQ)
    bad = FinHopf(QQ, H.labels, H.mult, H.unit, H.comult, H.counit, LinearMap.identity(QQ, 3),
                  antipode_inverse=LinearMap.identity(QQ, 3))
    rep = check_hopf_axioms(bad)
    assert rep.status("antipode") == "fail"
    assert rep.status("associativity") == "pass"


def test_sweedler_structure():
    H = sweedler(QQ)
    assert check_hopf_axioms(H).passed
    one = QQ.one
    g, x = {1: one}, {2: one}
    # g^2 = 1, x^2 = 0, xg = -gx
    assert H.mul(g, g) == {0: one}
    assert H.mul(x, x) == {}
    assert vec_eq(H.mul(x, g), {3: -one})
    assert vec_eq(H.mul(g, x), {3: one})
    assert not is_semisimple(H)


def test_sweedler_needs_odd_characteristic():
    with pytest.raises(HopfError):
        sweedler(FieldSpec.prime(2))


def test_sweedler_rmatrices():
    H = sweedler(QQ)
    for lam in (0, 1, QQ(3) / 2):
        assert check_rmatrix(QuasiTriHopf(H, sweedler_rmatrix(H, lam))).passed


@pytest.mark.parametrize("G", [GroupTable.trivial(), GroupTable.cyclic(2), GroupTable.cyclic(3),
                               GroupTable.klein(), GroupTable.symmetric(3)])
def test_group_double_rmatrix(G):
    Q = drinfeld_double_group(G, QQ)
    assert Q.dim == G.order ** 2
    assert check_hopf_axioms(Q.hopf).passed
    assert check_rmatrix(Q).passed


def test_trivial_double_is_one_dimensional():
    Q = drinfeld_double_group(GroupTable.trivial(), QQ)
    assert Q.dim == 1 and Q.R == {0: QQ.one}


def test_double_contains_both_halves():
    G = GroupTable.symmetric(3)
    Q = drinfeld_double_group(G, QQ)
    D = Q.hopf
    op, star = double_embeddings(Q)
    E = D.base
    one = QQ.one
    # E^op: w.w' maps to w' w; E*: delta_x delta_y = [x=y] delta_x
    for a in range(6):
        for b in range(6):
            assert vec_eq(D.mul(op.column(a), op.column(b)), op.apply(E.mul({b: one}, {a: one})))
            prod = D.mul(star.column(a), star.column(b))
            assert vec_eq(prod, star.column(a) if a == b else {})
    # E^op (x) E* -> D is bijective
    cols = [D.mul(op.column(w), star.column(x)) for w in range(6) for x in range(6)]
    assert LinearMap.from_columns(QQ, 36, cols).rank() == 36


def test_general_double_of_sweedler():
    Q = drinfeld_double(sweedler(QQ))
    assert Q.dim == 16
    assert check_hopf_axioms(Q.hopf).passed
    assert check_rmatrix(Q).passed


def test_trivial_r_on_cocommutative_passes():
    assert check_rmatrix(trivial_quasitriangular(group_algebra(GroupTable.symmetric(3), QQ))).passed


def test_trivial_r_on_noncocommutative_fails():
    rep = check_rmatrix(trivial_quasitriangular(sweedler(QQ)))
    assert rep.status("Delta(h) R21 = R21 Delta^op(h)") == "fail"


def test_corrupted_r_fails_with_counterexample():
    Q = drinfeld_double_group(GroupTable.cyclic(3), QQ)
    R = dict(Q.R)
    k = sorted(R)[1]
    R[k] = R[k] * 2
    rep = check_rmatrix(QuasiTriHopf(Q.hopf, R))
    assert not rep.passed
    assert any(c.detail for c in rep.failures())


def z2_on_dual_numbers(action):
    E = group_algebra(GroupTable.cyclic(2), QQ)
    return ModuleAlgebra(HModule(E, [LinearMap.identity(QQ, 2), action]), dual_numbers_mult(QQ), {0: 1})


def test_module_algebra_examples():
    E = group_algebra(GroupTable.cyclic(2), QQ)
    trivial = ModuleAlgebra(HModule.trivial(E, 2), dual_numbers_mult(QQ), {0: 1})
    assert check_module_algebra(trivial).passed
    sign = LinearMap(QQ, 2, 2, {0: {0: QQ.one}, 1: {1: -QQ.one}})
    assert check_module_algebra(z2_on_dual_numbers(sign)).passed
    shift = LinearMap(QQ, 2, 2, {0: {0: QQ.one}, 1: {0: QQ.one, 1: QQ.one}})
    assert not check_module_algebra(z2_on_dual_numbers(shift)).passed


def test_module_axioms():
    E = group_algebra(GroupTable.cyclic(3), QQ)
    assert check_module(HModule.regular(E)).passed


def test_trivial_twist_is_identity():
    Q = drinfeld_double_group(GroupTable.klein(), QQ)
    QJ = twist_quasitriangular(Q, Q.hopf.tensor_unit(2))
    assert QJ.hopf.comult == Q.hopf.comult and QJ.R == Q.R


def test_semisimplicity_decisions():
    G = GroupTable.cyclic(2)
    assert is_semisimple(group_algebra(G, QQ))
    assert not is_semisimple(group_algebra(G, FieldSpec.prime(2)))
    assert is_semisimple(group_algebra(GroupTable.cyclic(3), FieldSpec.prime(2)))
    assert is_cosemisimple(group_algebra(G, FieldSpec.prime(2)))
    assert not is_cosemisimple(sweedler(QQ))
