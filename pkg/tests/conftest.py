from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from bhh.braidalg import smash_product
from bhh.complexes import braided_cochain_complex
from bhh.exactlin import QQ, FieldSpec, LinearMap, vec_iadd
from bhh.hopf import GroupTable, HModule, ModuleAlgebra, drinfeld_double_group


def dual_numbers_mult(f):
    return LinearMap(f, 2, 4, {0: {0: f.one}, 1: {1: f.one}, 2: {1: f.one}})


def dual_numbers_smash(f=QQ):
    """B = Q[x]/(x^2) * Z/2 with x -> -x, over D(Z/2)."""
    Q = drinfeld_double_group(GroupTable.cyclic(2), f)
    E = Q.hopf.base
    g = LinearMap(f, 2, 2, {0: {0: f.one}, 1: {1: -f.one}})
    A = ModuleAlgebra(HModule(E, [LinearMap.identity(f, 2), g]), dual_numbers_mult(f), {0: 1}, name="A", labels=["1", "x"])
    return smash_product(A, Q)


def group_smash(G, f=QQ):
    """B = k * kG = kG."""
    Q = drinfeld_double_group(G, f)
    E = Q.hopf.base
    A = ModuleAlgebra(HModule.trivial(E, 1), LinearMap(f, 1, 1, {0: {0: f.one}}), {0: 1}, name="k", labels=["1"])
    return smash_product(A, Q)


def smash_of_copies(E):
    """E_1 * E_2 with E_2 a right E_1-module algebra by the adjoint action:
    (a (x) b)(a' (x) b') = a a'_1 (x) S(a'_2) b a'_3 b'."""
    e = E.dim
    cols = {}
    for a in range(e):
        for b in range(e):
            for a2 in range(e):
                for b2 in range(e):
                    out = {}
                    for x, rest, c in E.delta_terms(a2):
                        for y, z, c2 in E.delta_terms(rest):
                            left = E.mul({a: QQ.one}, {x: QQ.one})
                            right = E.mul(E.mul(E.mul(E.S({y: QQ.one}), {b: QQ.one}), {z: QQ.one}), {b2: QQ.one})
                            for i, u in left.items():
                                for j, v in right.items():
                                    vec_iadd(out, {i * e + j: u * v * c * c2})
                    if out:
                        cols[(a * e + b) * e * e + a2 * e + b2] = out
    return LinearMap(QQ, e * e, e ** 4, cols)


@pytest.fixture(scope="session")
def fixture_B():
    return dual_numbers_smash()


@pytest.fixture(scope="session")
def fixture_C(fixture_B):
    return braided_cochain_complex(fixture_B, 4)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
