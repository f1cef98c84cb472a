"""Algebras in the braided category of H-modules.

Constructions: smash products with their YD structure, braided opposite,
braided tensor and enveloping algebras, the freeness isomorphism of the bar
resolution, and twisting by a dual cocycle.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Sequence

from .exactlin import FieldSpec, LinearMap, Vec, multi_index, flat_index, vec_eq, vec_iadd, vec_scale
from .hopf import (
    FinHopf,
    GroupTable,
    HModule,
    HopfError,
    ModuleAlgebra,
    QuasiTriHopf,
    check_module_algebra,
    check_twist,
    twist_quasitriangular,
)
from .report import Report
from .ydmod import YDModule


class AlgebraObject:
    """An algebra whose carrier is a module over the quasitriangular ``Q``."""

    def __init__(self, Q: QuasiTriHopf, module: HModule, mult: LinearMap, unit: Vec,
                 name: str = "B", labels: Optional[Sequence[str]] = None):
        if module.hopf is not Q.hopf:
            raise HopfError("carrier is a module over a different Hopf algebra")
        self.Q = Q
        self.module = module
        self.dim = module.dim
        if (mult.nrows, mult.ncols) != (self.dim, self.dim * self.dim):
            raise HopfError("multiplication has wrong shape")
        self.mult = mult
        self.unit = {k: Q.field(v) for k, v in unit.items() if v}
        self.name = name
        self.labels = list(labels) if labels else ["b%d" % i for i in range(self.dim)]
        self.smash = None
        self.yd = getattr(module, "yd", None)

    @property
    def field(self) -> FieldSpec:
        return self.Q.field

    @property
    def hopf(self) -> FinHopf:
        return self.Q.hopf

    def mul(self, x: Vec, y: Vec) -> Vec:
        d = self.dim
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                c = self.mult.cols.get(i * d + j)
                if c:
                    vec_iadd(out, c, a * b)
        return out

    def left_mult(self, x: Vec) -> LinearMap:
        one = self.field.one
        return LinearMap(self.field, self.dim, self.dim, {j: self.mul(x, {j: one}) for j in range(self.dim)})

    def right_mult(self, x: Vec) -> LinearMap:
        one = self.field.one
        return LinearMap(self.field, self.dim, self.dim, {j: self.mul({j: one}, x) for j in range(self.dim)})

    def table(self) -> List[List[Vec]]:
        one = self.field.one
        return [[self.mul({i: one}, {j: one}) for j in range(self.dim)] for i in range(self.dim)]

    def __repr__(self):
        return "AlgebraObject(%s, dim=%d over %s)" % (self.name, self.dim, self.Q.name)


def check_algebra_in_Z(B: AlgebraObject) -> Report:
    """Associativity, unit, and ``h.(bb') = (h_1.b)(h_2.b')``, ``h.1 = eps(h)1``."""
    H = B.hopf
    f = B.field
    one = f.one
    rep = Report("algebra in Z: %s" % B.name)
    e = [{i: one} for i in range(B.dim)]
    bad = None
    for a, b, c in itertools.product(range(B.dim), repeat=3):
        if not vec_eq(B.mul(B.mul(e[a], e[b]), e[c]), B.mul(e[a], B.mul(e[b], e[c]))):
            bad = (a, b, c)
            break
    rep.add("associative", bad is None, {"basis": bad})
    ok = all(vec_eq(B.mul(B.unit, e[a]), e[a]) and vec_eq(B.mul(e[a], B.unit), e[a]) for a in range(B.dim))
    rep.add("unital", ok)
    M = B.module
    bad = None
    for h in range(H.dim):
        terms = H.delta_terms(h)
        for a in range(B.dim):
            for b in range(B.dim):
                lhs = M.mats[h].apply(B.mul(e[a], e[b]))
                rhs: Vec = {}
                for x, y, c in terms:
                    vec_iadd(rhs, B.mul(M.mats[x].apply(e[a]), M.mats[y].apply(e[b])), c)
                if not vec_eq(lhs, rhs):
                    bad = (h, a, b)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("multiplication is H-linear", bad is None, {"basis (h, b, b')": bad})
    bad = None
    for h in range(H.dim):
        if not vec_eq(M.mats[h].apply(B.unit), vec_scale(B.unit, H.eps_values[h])):
            bad = h
            break
    rep.add("unit is H-linear", bad is None, {"basis": bad})
    return rep


# ------------------------------------------------------------------ smash

class SmashData:
    """Bookkeeping for ``B = A * E``: basis index ``a * dim E + w``."""

    def __init__(self, A: ModuleAlgebra, E: FinHopf):
        self.A = A
        self.E = E
        self.a_dim = A.dim
        self.e_dim = E.dim

    def index(self, a: int, w: int) -> int:
        return a * self.e_dim + w

    def embed_A(self, x: Vec) -> Vec:
        out: Vec = {}
        for a, c in x.items():
            for w, u in self.E.unit.items():
                vec_iadd(out, {a * self.e_dim + w: c * u})
        return out

    def embed_E(self, x: Vec) -> Vec:
        out: Vec = {}
        for w, c in x.items():
            for a, u in self.A.unit.items():
                vec_iadd(out, {a * self.e_dim + w: c * u})
        return out

    def A_inclusion(self) -> LinearMap:
        f = self.E.field
        return LinearMap(f, self.a_dim * self.e_dim, self.a_dim, {a: self.embed_A({a: f.one}) for a in range(self.a_dim)})

    def E_inclusion(self) -> LinearMap:
        f = self.E.field
        return LinearMap(f, self.a_dim * self.e_dim, self.e_dim, {w: self.embed_E({w: f.one}) for w in range(self.e_dim)})


def smash_product(A: ModuleAlgebra, Q: QuasiTriHopf, check: bool = True) -> AlgebraObject:
    """``A * E`` with ``(a*w)(a'*w') = a(w_1.a') * w_2 w'`` as an algebra in YD over E.

    ``Q`` must be the double of E (``Q.hopf.base is A.hopf``).  The YD structure
    is the right adjoint action ``(aw).w' = S(w'_1) a w w'_2`` and coaction
    ``aw -> a w_1 (x) w_2``.
    """
    E = A.hopf
    if getattr(Q.hopf, "base", None) is not E:
        raise HopfError("Q must be the double of the Hopf algebra acting on A")
    if check:
        rep = check_module_algebra(A)
        if not rep.passed:
            raise HopfError("not a module algebra: %s" % [c.name for c in rep.failures()])
    f = A.field
    one = f.one
    a_dim, e = A.dim, E.dim
    n = a_dim * e
    cols = {}
    for a in range(a_dim):
        for w in range(e):
            for a2 in range(a_dim):
                for w2 in range(e):
                    out: Vec = {}
                    for x, y, c in E.delta_terms(w):
                        acted = A.module.mats[x].apply({a2: one})
                        left = A.mul({a: one}, acted)
                        right = E.mul({y: one}, {w2: one})
                        for p, s in left.items():
                            for q, t in right.items():
                                vec_iadd(out, {p * e + q: c * s * t})
                    if out:
                        cols[(a * e + w) * n + a2 * e + w2] = out
    mult = LinearMap(f, n, n * n, cols)
    sd = SmashData(A, E)
    unit = sd.embed_A(A.unit)

    def bmul(x, y):
        out: Vec = {}
        for i, s in x.items():
            for j, t in y.items():
                c = mult.cols.get(i * n + j)
                if c:
                    vec_iadd(out, c, s * t)
        return out

    acts = []
    for w in range(e):
        acols = {}
        for b in range(n):
            out: Vec = {}
            for x, y, c in E.delta_terms(w):
                left = sd.embed_E(E.S({x: one}))
                right = sd.embed_E({y: one})
                vec_iadd(out, bmul(bmul(left, {b: one}), right), c)
            acols[b] = out
        acts.append(LinearMap(f, n, n, acols))
    ccols = {}
    for a in range(a_dim):
        for w in range(e):
            out = {}
            for x, y, c in E.delta_terms(w):
                vec_iadd(out, {(a * e + x) * e + y: c})
            ccols[a * e + w] = out
    co = LinearMap(f, n * e, n, ccols)
    labels = ["%s*%s" % (A.labels[a], E.labels[w]) for a in range(a_dim) for w in range(e)]
    Y = YDModule(E, acts, co, "%s*%s" % (A.name, E.name))
    M = Y.to_dmodule(Q)
    B = AlgebraObject(Q, M, mult, unit, name="%s*%s" % (A.name, E.name), labels=labels)
    B.smash = sd
    B.yd = Y
    return B


def coinvariants(B: AlgebraObject) -> List[Vec]:
    """Basis of ``{b : rho(b) = b (x) 1}`` for an algebra with a YD carrier."""
    from .exactlin import subspace_from_constraints
    Y = B.yd
    if Y is None:
        raise HopfError("carrier has no coaction")
    E = Y.E
    e = E.dim
    f = B.field
    cons = []
    # rho(b) - b (x) 1 = 0 ; row per output index
    T = LinearMap(f, B.dim * e, B.dim, {b: _sub_unit(Y.coaction.cols.get(b, {}), b, E) for b in range(B.dim)})
    cons = [r for r in T.rows() if r]
    return subspace_from_constraints(f, B.dim, cons).basis


def _sub_unit(co: Vec, b: int, E: FinHopf) -> Vec:
    out = dict(co)
    for u, x in E.unit.items():
        vec_iadd(out, {b * E.dim + u: -x})
    return out


def algebra_from_module_algebra(A: ModuleAlgebra, Q: QuasiTriHopf) -> AlgebraObject:
    """An H-module algebra viewed as an algebra object over ``Q``."""
    return AlgebraObject(Q, A.module, A.mult, A.unit, name=A.name, labels=A.labels)


# ---------------------------------------------------- braided constructions

def braided_opposite(B: AlgebraObject) -> AlgebraObject:
    """``b ._op b' = (r^j.b')(r_j.b)``."""
    f = B.field
    one = f.one
    d = B.dim
    M = B.module
    cols = {}
    for b in range(d):
        for b2 in range(d):
            out: Vec = {}
            for i, k, c in B.Q.r_terms():
                vec_iadd(out, B.mul(M.mats[k].apply({b2: one}), M.mats[i].apply({b: one})), c)
            if out:
                cols[b * d + b2] = out
    op = AlgebraObject(B.Q, M, LinearMap(f, d, d * d, cols), B.unit, name=B.name + "^op", labels=B.labels)
    op.yd = B.yd
    return op


def braided_tensor_algebra(B: AlgebraObject, C: AlgebraObject) -> AlgebraObject:
    """``(b (x) c)(b' (x) c') = (b (r^j.b')) (x) ((r_j.c) c')``."""
    if B.Q is not C.Q:
        raise HopfError("algebras live over different quasitriangular structures")
    f = B.field
    one = f.one
    bd, cd = B.dim, C.dim
    n = bd * cd
    terms = B.Q.r_terms()
    # precompute actions
    act_b = {(k, b): B.module.mats[k].apply({b: one}) for _, k, _ in terms for b in range(bd)}
    act_c = {(i, c): C.module.mats[i].apply({c: one}) for i, _, _ in terms for c in range(cd)}
    cols = {}
    for b, c, b2, c2 in itertools.product(range(bd), range(cd), range(bd), range(cd)):
        out: Vec = {}
        for i, k, x in terms:
            left = B.mul({b: one}, act_b[(k, b2)])
            if not left:
                continue
            right = C.mul(act_c[(i, c)], {c2: one})
            for p, s in left.items():
                for q, t in right.items():
                    vec_iadd(out, {p * cd + q: x * s * t})
        if out:
            cols[(b * cd + c) * n + b2 * cd + c2] = out
    unit: Vec = {}
    for p, s in B.unit.items():
        for q, t in C.unit.items():
            unit[p * cd + q] = s * t
    module = B.module.tensor(C.module)
    labels = ["%s|%s" % (x, y) for x in B.labels for y in C.labels]
    return AlgebraObject(B.Q, module, LinearMap(f, n, n * n, cols), unit, name="%s(x)%s" % (B.name, C.name), labels=labels)


def braided_enveloping(B: AlgebraObject) -> AlgebraObject:
    """``B^e = B^op (x) B`` with the braided tensor product."""
    return braided_tensor_algebra(braided_opposite(B), B)


def env_action(B: AlgebraObject) -> LinearMap:
    """Right action ``B (x) B^e -> B``, ``a.(b (x) b') = (r^j.b)(r_j.a) b'``."""
    f = B.field
    one = f.one
    d = B.dim
    M = B.module
    cols = {}
    for a in range(d):
        for b in range(d):
            for b2 in range(d):
                out: Vec = {}
                for i, k, c in B.Q.r_terms():
                    vec_iadd(out, B.mul(B.mul(M.mats[k].apply({b: one}), M.mats[i].apply({a: one})), {b2: one}), c)
                if out:
                    cols[(a * d + b) * d + b2] = out
    return LinearMap(f, d, d ** 3, cols)


def check_env_action(B: AlgebraObject, Be: Optional[AlgebraObject] = None) -> Report:
    """Unital associative right action of ``B^e`` on B."""
    Be = Be or braided_enveloping(B)
    act = env_action(B)
    d = B.dim
    f = B.field
    one = f.one
    rep = Report("right B^e-action on %s" % B.name)

    def apply(a: Vec, u: Vec) -> Vec:
        out: Vec = {}
        for i, s in a.items():
            for j, t in u.items():
                c = act.cols.get(i * d * d + j)
                if c:
                    vec_iadd(out, c, s * t)
        return out

    ok = all(vec_eq(apply({a: one}, Be.unit), {a: one}) for a in range(d))
    rep.add("unital", ok)
    bad = None
    for a in range(d):
        for u in range(d * d):
            au = apply({a: one}, {u: one})
            for v in range(d * d):
                if not vec_eq(apply(au, {v: one}), apply({a: one}, Be.mul({u: one}, {v: one}))):
                    bad = (a, u, v)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("associative: (a.u).v = a.(uv)", bad is None, {"basis": bad})
    return rep


def freeness_maps(B: AlgebraObject, n: int):
    """The map ``B^{(x)n} (x) B^e -> B (x) B^{(x)n} (x) B`` and its stated inverse.

    Forward: ``x (x) b (x) b' -> (r^j.b) (x) (r_j.x) (x) b'``.
    Inverse (two stated forms): ``b (x) x (x) b' -> (S(r_j).x) (x) (r^j.b) (x) b'``
    and ``(r_j.x) (x) (S^-1(r^j).b) (x) b'``.
    """
    f = B.field
    one = f.one
    d = B.dim
    H = B.hopf
    P = B.module.power(n)
    dn = d ** n
    fwd = {}
    inv1 = {}
    inv2 = {}
    terms = B.Q.r_terms()
    for x in range(dn):
        for b in range(d):
            for b2 in range(d):
                out: Vec = {}
                for i, k, c in terms:
                    hb = B.module.mats[k].apply({b: one})
                    hx = P.mats[i].apply({x: one})
                    for p, s in hb.items():
                        for q, t in hx.items():
                            vec_iadd(out, {(p * dn + q) * d + b2: c * s * t})
                fwd[(x * d + b) * d + b2] = out
    for b in range(d):
        for x in range(dn):
            for b2 in range(d):
                o1: Vec = {}
                o2: Vec = {}
                for i, k, c in terms:
                    sx = P.mat(H.S({i: one})).apply({x: one})
                    hb = B.module.mats[k].apply({b: one})
                    for q, t in sx.items():
                        for p, s in hb.items():
                            vec_iadd(o1, {(q * d + p) * d + b2: c * s * t})
                    hx = P.mats[i].apply({x: one})
                    sb = B.module.mat(H.Sinv({k: one})).apply({b: one})
                    for q, t in hx.items():
                        for p, s in sb.items():
                            vec_iadd(o2, {(q * d + p) * d + b2: c * s * t})
                inv1[(b * dn + x) * d + b2] = o1
                inv2[(b * dn + x) * d + b2] = o2
    N = dn * d * d
    return LinearMap(f, N, N, fwd), LinearMap(f, N, N, inv1), LinearMap(f, N, N, inv2)


def check_freeness(B: AlgebraObject, n: int) -> Report:
    fwd, inv1, inv2 = freeness_maps(B, n)
    I = LinearMap.identity(B.field, fwd.nrows)
    rep = Report("freeness isomorphism n=%d" % n)
    rep.add("inverse forms agree", inv1 == inv2)
    rep.add("forward o inverse = id", fwd @ inv1 == I)
    rep.add("inverse o forward = id", inv1 @ fwd == I)
    return rep


# ------------------------------------------------------------------ twists

class DualCocycle:
    """A twist for a group double given by a scalar 2-cochain ``alpha`` on G.

    As an element of ``D (x) D``: ``J = sum alpha(x, y) delta_x (x) delta_y``.
    """

    def __init__(self, Q: QuasiTriHopf, alpha: Sequence[Sequence]):
        D = Q.hopf
        G = getattr(D, "group", None)
        if G is None:
            raise HopfError("twists are implemented for doubles of group algebras")
        f = Q.field
        self.Q = Q
        self.group = G
        self.alpha = [[f(x) for x in row] for row in alpha]
        n = G.order
        if len(self.alpha) != n or any(len(r) != n for r in self.alpha):
            raise HopfError("alpha must be an |G| x |G| table")
        e = n
        N = D.dim
        J: Vec = {}
        for x in range(n):
            for y in range(n):
                a = self.alpha[x][y]
                if a:
                    J[(G.identity * e + x) * N + (G.identity * e + y)] = a
        self.J = J
        self.J_inverse = D.tensor_inverse(J, 2)

    def terms(self):
        """(l, k, c) with ``J = sum c h_l (x) h_k``."""
        N = self.Q.dim
        return [(idx // N, idx % N, c) for idx, c in sorted(self.J.items())]

    @classmethod
    def trivial(cls, Q: QuasiTriHopf) -> "DualCocycle":
        n = Q.hopf.group.order
        return cls(Q, [[1] * n for _ in range(n)])


def alternating_bicharacter_klein(f: FieldSpec) -> List[List]:
    """``alpha((a1,a2),(b1,b2)) = (-1)^(a1 b2)`` on Z/2 x Z/2 (element index 2*a1 + a2)."""
    return [[f(-1) if ((x >> 1) & 1) * (y & 1) else f(1) for y in range(4)] for x in range(4)]


def dual_cocycle_check(J: DualCocycle) -> Report:
    """Invertibility and the cocycle identity, both by enumeration and in ``D^{(x)3}``."""
    G = J.group
    a = J.alpha
    rep = Report("dual cocycle")
    rep.add("alpha invertible", all(x != 0 for row in a for x in row))
    bad = None
    for x, y, z in itertools.product(G.elements(), repeat=3):
        if a[x][y] * a[G.mul(x, y)][z] != a[y][z] * a[x][G.mul(y, z)]:
            bad = (x, y, z)
            break
    rep.add("alpha(x,y)alpha(xy,z) = alpha(y,z)alpha(x,yz)", bad is None, {"triple": bad})
    rep.extend(check_twist(J.Q.hopf, J.J), prefix="in D")
    return rep


def twisted_double(J: DualCocycle) -> QuasiTriHopf:
    rep = dual_cocycle_check(J)
    if not rep.passed:
        raise HopfError("not a dual cocycle: %s" % [c.name for c in rep.failures()])
    QJ = twist_quasitriangular(J.Q, J.J)
    return QJ


def j_twist_algebra(B: AlgebraObject, J: DualCocycle, QJ: Optional[QuasiTriHopf] = None) -> AlgebraObject:
    """``w ._J w' = (J_l.w)(J^l.w')`` as an algebra over the twisted double."""
    if QJ is None:
        QJ = twisted_double(J)
    f = B.field
    one = f.one
    d = B.dim
    M = B.module
    cols = {}
    for x in range(d):
        for y in range(d):
            out: Vec = {}
            for l, k, c in J.terms():
                vec_iadd(out, B.mul(M.mats[l].apply({x: one}), M.mats[k].apply({y: one})), c)
            if out:
                cols[x * d + y] = out
    MJ = HModule(QJ.hopf, M.mats, M.name + "_J")
    MJ.yd = getattr(M, "yd", None)
    BJ = AlgebraObject(QJ, MJ, LinearMap(f, d, d * d, cols), B.unit, name=B.name + "_J", labels=B.labels)
    BJ.smash = B.smash
    BJ.yd = B.yd
    return BJ
