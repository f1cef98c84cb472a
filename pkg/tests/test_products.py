from __future__ import annotations

import itertools
import json

import pytest

from bhh.braidalg import DualCocycle, smash_product
from bhh.complexes import (
    ComplexError,
    braided_cochain_complex,
    cohomology,
    hochschild_complex,
    relative_cochain_complex,
    restriction_iso,
)
from bhh.exactlin import QQ, FieldSpec, LinearMap, vec_eq
from bhh.hopf import GroupTable, HModule, ModuleAlgebra, drinfeld_double, drinfeld_double_group, sweedler
from bhh.products import (
    BraidedProducts,
    ClassicalProducts,
    SmashGroupData,
    as_map,
    as_vec,
    center_inclusion_check,
    check_commutator_identities,
    check_cup_structure,
    cohomology_ring,
    commutator_identity_defect,
    g_decomposition,
    ideal_annihilation_check,
    maurer_cartan_check,
    random_cochain,
    restricted_cup_check,
    twist_product_equality,
)

from conftest import dual_numbers_mult, dual_numbers_smash, group_smash


@pytest.fixture(scope="module")
def P(fixture_C):
    return BraidedProducts(fixture_C)


def trivial_braiding_pair(N=3):
    Q = drinfeld_double_group(GroupTable.trivial(), QQ)
    A = ModuleAlgebra(HModule.trivial(Q.hopf.base, 2), dual_numbers_mult(QQ), {0: 1})
    B = smash_product(A, Q)
    C = braided_cochain_complex(B, N)
    H = hochschild_complex(B, N)
    return BraidedProducts(C), ClassicalProducts(H, B.mult)


def test_map_round_trip():
    v = {0: QQ(2), 5: QQ(-1)}
    m = as_map(v, 2, 4, QQ)
    assert m.nrows == 2 and m.ncols == 4
    assert as_vec(m) == v


def test_unit(P):
    u = P.unit()
    v = {3: QQ.one, 7: QQ(5)}
    assert vec_eq(P.cup(u, 0, v, 1), v)
    assert vec_eq(P.cup(v, 1, u, 0), v)


def test_trivial_braiding_reduces_to_classical():
    bp, cp = trivial_braiding_pair()
    dims = bp.C.dims
    for p, q in itertools.product(range(3), repeat=2):
        if p + q > 2:
            continue
        for i in range(dims[p]):
            for j in range(dims[q]):
                f, g = {i: QQ.one}, {j: QQ.one}
                assert vec_eq(bp.cup(f, p, g, q), cp.cup(f, p, g, q))
                if p + q >= 1:
                    assert vec_eq(bp.circle(f, p, g, q), cp.circle(f, p, g, q))


def test_circle_with_constant_left_is_zero(P):
    assert P.circle({0: QQ.one}, 0, {1: QQ.one}, 1) == {}


def test_cup_structure_fixture(P, fixture_C):
    rel = relative_cochain_complex(fixture_C)
    assert check_cup_structure(P, 2, rel).passed


def test_restricted_cup(P, fixture_C):
    iso = restriction_iso(relative_cochain_complex(fixture_C))
    assert restricted_cup_check(P, iso, 2).passed


@pytest.mark.parametrize("which", ["k", "z2", "fixture"])
def test_maurer_cartan(which, fixture_C):
    if which == "fixture":
        C = fixture_C
    else:
        G = GroupTable.trivial() if which == "k" else GroupTable.cyclic(2)
        C = braided_cochain_complex(group_smash(G), 3)
    assert maurer_cartan_check(BraidedProducts(C), 2).passed


def test_maurer_cartan_sweedler():
    E = sweedler(QQ)
    A = ModuleAlgebra(HModule.trivial(E, 1), LinearMap(QQ, 1, 1, {0: {0: QQ.one}}), {0: 1})
    C = braided_cochain_complex(smash_product(A, drinfeld_double(E)), 3)
    assert maurer_cartan_check(BraidedProducts(C), 2).passed


def test_commutator_identity_random(P):
    import random
    rng = random.Random(7)
    for _ in range(5):
        p, q = rng.choice([0, 1, 2]), rng.choice([0, 1])
        f = random_cochain(P.C.dims[p], rng, QQ)
        g = random_cochain(P.C.dims[q], rng, QQ)
        assert commutator_identity_defect(P, f, p, g, q) == {}


def test_commutator_suite(P):
    assert check_commutator_identities(P, 8, seed=3, max_degree=2).passed


def test_naive_bracket_differs_from_circle(P):
    f, g = {4: QQ.one}, {9: QQ.one}
    assert P.naive_bracket(f, 1, g, 1) != P.circle(f, 1, g, 1)


def test_ring_of_k():
    C = braided_cochain_complex(group_smash(GroupTable.trivial()), 3)
    ring = cohomology_ring(BraidedProducts(C), cohomology(C, 0, 2), 2)
    assert ring.dims == {0: 1, 1: 0, 2: 0}
    assert not ring.failures
    assert ring.unit_class is not None


def test_ring_fixture(P, fixture_C):
    ring = cohomology_ring(P, cohomology(fixture_C, 0, 2), 2)
    assert not ring.failures
    assert ring.dims == {0: 3, 1: 2, 2: 2}
    assert ring.certificates > 0
    d = ring.as_dict()
    json.dumps(d)
    assert d["dims"] == {"0": 3, "1": 2, "2": 2}


def test_ring_requires_degrees(P, fixture_C):
    with pytest.raises(ComplexError):
        cohomology_ring(P, cohomology(fixture_C, 0, 1), 2)


@pytest.fixture(scope="module")
def group_data(fixture_B, fixture_C):
    return SmashGroupData(fixture_B, 4, fixture_C)


def test_g_decomposition(group_data):
    assert g_decomposition(group_data).passed


def test_ideal_for_identity_is_vacuous(group_data):
    rep = ideal_annihilation_check(group_data, 0, 2)
    assert rep.passed
    assert "I_e = 0" in [c.name for c in rep.checks]


def test_ideal_for_g(group_data):
    rep = ideal_annihilation_check(group_data, 1, 2)
    assert rep.passed and rep.data["certificates"] > 0


def test_center_inclusion(group_data):
    assert center_inclusion_check(group_data, 2).passed


def test_center_inclusion_not_applicable_in_char_2():
    B = dual_numbers_smash(FieldSpec.prime(2))
    rep = center_inclusion_check(SmashGroupData(B, 3), 2)
    assert rep.passed
    assert [c.status for c in rep.checks] == ["not-applicable"]


def test_trivial_twist(fixture_B):
    J = DualCocycle.trivial(fixture_B.Q)
    assert twist_product_equality(fixture_B, J, 2, 2).passed
