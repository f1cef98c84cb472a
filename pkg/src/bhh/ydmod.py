"""Yetter-Drinfeld modules, braidings, inner homs and invariants.

A right-right YD module over E carries a right action ``m.w`` and a right
coaction ``m -> m_0 (x) m_1`` (flat index ``m0 * dim E + m1``).  Through the
double D of E (see :func:`bhh.hopf.drinfeld_double`) it becomes a left
D-module with ``w . m = m.w`` and ``xi . m = m_0 xi(m_1)``.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .exactlin import (
    FieldSpec,
    LinearMap,
    Subspace,
    Vec,
    kernel_basis,
    subspace_from_constraints,
    tensor_map,
    vec_eq,
    vec_iadd,
)
from .hopf import FinHopf, HModule, HopfError, QuasiTriHopf
from .report import Report

INNER_HOM_CAP = 4096


class CapExceeded(RuntimeError):
    """A configured dimension cap would be exceeded."""


class YDModule:
    def __init__(self, E: FinHopf, action: Sequence[LinearMap], coaction: LinearMap, name: str = "M"):
        self.E = E
        self.action = list(action)
        self.coaction = coaction
        self.dim = coaction.ncols
        self.name = name
        if len(self.action) != E.dim:
            raise HopfError("need one action matrix per basis element of E")
        if coaction.nrows != self.dim * E.dim:
            raise HopfError("coaction must map M -> M (x) E")

    @property
    def field(self) -> FieldSpec:
        return self.E.field

    def act(self, m: Vec, w: Vec) -> Vec:
        out: Vec = {}
        for i, c in w.items():
            vec_iadd(out, self.action[i].apply(m), c)
        return out

    def coact(self, m: Vec) -> Vec:
        return self.coaction.apply(m)

    @classmethod
    def trivial(cls, E: FinHopf, dim: int, name: str = "triv") -> "YDModule":
        f = E.field
        I = LinearMap.identity(f, dim)
        acts = [I.scale(E.eps_values[i]) for i in range(E.dim)]
        co = LinearMap(f, dim * E.dim, dim, {m: {m * E.dim + u: x for u, x in E.unit.items()} for m in range(dim)})
        return cls(E, acts, co, name)

    @classmethod
    def adjoint(cls, E: FinHopf) -> "YDModule":
        """E with ``v.w = S(w_1) v w_2`` and coaction Delta."""
        f = E.field
        e = E.dim
        one = f.one
        acts = []
        for w in range(e):
            cols = {}
            for v in range(e):
                out: Vec = {}
                for a, b, c in E.delta_terms(w):
                    vec_iadd(out, E.mul(E.mul(E.S({a: one}), {v: one}), {b: one}), c)
                cols[v] = out
            acts.append(LinearMap(f, e, e, cols))
        return cls(E, acts, E.comult, "E_ad")

    @classmethod
    def regular_trivial_coaction(cls, E: FinHopf) -> "YDModule":
        """E with right regular action and trivial coaction (YD when E is commutative)."""
        f = E.field
        e = E.dim
        acts = [LinearMap(f, e, e, {v: E.mul({v: f.one}, {w: f.one}) for v in range(e)}) for w in range(e)]
        co = LinearMap(f, e * e, e, {m: {m * e + u: x for u, x in E.unit.items()} for m in range(e)})
        return cls(E, acts, co, "E_reg")

    def tensor(self, other: "YDModule") -> "YDModule":
        """Diagonal action ``(m (x) n).w = m.w_1 (x) n.w_2`` and coaction ``m_0 (x) n_0 (x) m_1 n_1``."""
        E = self.E
        f = self.field
        e = E.dim
        acts = []
        for w in range(e):
            acc = LinearMap.zero(f, self.dim * other.dim, self.dim * other.dim)
            for a, b, c in E.delta_terms(w):
                acc = acc + tensor_map(self.action[a], other.action[b]).scale(c)
            acts.append(acc)
        cols = {}
        nd = other.dim
        for m in range(self.dim):
            cm = self.coaction.cols.get(m, {})
            for n in range(nd):
                cn = other.coaction.cols.get(n, {})
                out: Vec = {}
                for km, x in cm.items():
                    m0, m1 = divmod(km, e)
                    for kn, y in cn.items():
                        n0, n1 = divmod(kn, e)
                        for z, c in E.mult.cols.get(m1 * e + n1, {}).items():
                            vec_iadd(out, {(m0 * nd + n0) * e + z: x * y * c})
                cols[m * nd + n] = out
        co = LinearMap(f, self.dim * nd * e, self.dim * nd, cols)
        return YDModule(E, acts, co, "%s(x)%s" % (self.name, other.name))

    def to_dmodule(self, Q: QuasiTriHopf) -> HModule:
        """The D-module with ``(w xi) . m = (m_0 xi(m_1)).w``."""
        D = Q.hopf
        E = self.E
        e = E.dim
        if getattr(D, "base", None) is None or D.base.dim != e:
            raise HopfError("quasitriangular structure is not the double of this E")
        f = self.field
        proj = []
        for xi in range(e):
            cols = {}
            for m in range(self.dim):
                out: Vec = {}
                for k, c in self.coaction.cols.get(m, {}).items():
                    m0, m1 = divmod(k, e)
                    if m1 == xi:
                        vec_iadd(out, {m0: c})
                if out:
                    cols[m] = out
            proj.append(LinearMap(f, self.dim, self.dim, cols))
        mats = [self.action[w] @ proj[xi] for w in range(e) for xi in range(e)]
        M = HModule(D, mats, self.name)
        M.yd = self
        return M


def check_yd(M: YDModule, E: Optional[FinHopf] = None) -> Report:
    E = E or M.E
    if E.dim != len(M.action):
        raise HopfError("dimension mismatch between module and Hopf algebra")
    f = M.field
    one = f.one
    e = E.dim
    rep = Report("YD module: %s" % M.name)
    bad = None
    for a in range(e):
        for b in range(e):
            prod = E.mul({a: one}, {b: one})
            lhs = M.action[b] @ M.action[a]
            if not lhs == _combo(M.action, prod, M.dim, f):
                bad = (a, b)
                break
        if bad:
            break
    rep.add("action associative", bad is None, {"basis": bad})
    rep.add("action unital", _combo(M.action, E.unit, M.dim, f) == LinearMap.identity(f, M.dim))
    # coassociativity and counit
    bad_co = None
    bad_cu = None
    for m in range(M.dim):
        co = M.coact({m: one})
        lhs: Vec = {}
        rhs: Vec = {}
        cu: Vec = {}
        for k, c in co.items():
            m0, m1 = divmod(k, e)
            for k2, c2 in M.coact({m0: one}).items():
                n0, n1 = divmod(k2, e)
                vec_iadd(lhs, {(n0 * e + n1) * e + m1: c * c2})
            for a, b, c2 in E.delta_terms(m1):
                vec_iadd(rhs, {(m0 * e + a) * e + b: c * c2})
            vec_iadd(cu, {m0: c * E.eps_values[m1]})
        if bad_co is None and not vec_eq(lhs, rhs):
            bad_co = m
        if bad_cu is None and not vec_eq(cu, {m: one}):
            bad_cu = m
    rep.add("coaction coassociative", bad_co is None, {"basis": bad_co})
    rep.add("coaction counital", bad_cu is None, {"basis": bad_cu})
    # (m.w)_0 (x) (m.w)_1 = m_0.w_2 (x) S(w_1) m_1 w_3
    bad = None
    for w in range(e):
        terms = E.iterated_delta(w, 3)
        for m in range(M.dim):
            lhs = M.coact(M.action[w].apply({m: one}))
            rhs: Vec = {}
            co = M.coact({m: one})
            for (w1, w2, w3), c in terms.items():
                sw1 = E.S({w1: one})
                for k, x in co.items():
                    m0, m1 = divmod(k, e)
                    left = M.action[w2].apply({m0: one})
                    right = E.mul(E.mul(sw1, {m1: one}), {w3: one})
                    for p, y in left.items():
                        for q, z in right.items():
                            vec_iadd(rhs, {p * e + q: c * x * y * z})
            if not vec_eq(lhs, rhs):
                bad = (m, w)
                break
        if bad:
            break
    rep.add("YD compatibility", bad is None, {"basis (m, w)": bad})
    return rep


def _combo(mats: Sequence[LinearMap], coeffs: Vec, dim: int, f: FieldSpec) -> LinearMap:
    out = LinearMap.zero(f, dim, dim)
    for i, c in coeffs.items():
        out = out + mats[i].scale(c)
    return out


def yd_braiding(M: YDModule, N: YDModule):
    """``c(m (x) n) = n_0 (x) m.n_1`` and its inverse ``n (x) m -> m.S^-1(n_1) (x) n_0``."""
    E = M.E
    f = M.field
    e = E.dim
    one = f.one
    md, nd = M.dim, N.dim
    cols = {}
    inv_cols = {}
    for n in range(nd):
        co = N.coact({n: one})
        for m in range(md):
            out: Vec = {}
            out_inv: Vec = {}
            for k, c in co.items():
                n0, n1 = divmod(k, e)
                for p, y in M.action[n1].apply({m: one}).items():
                    vec_iadd(out, {n0 * md + p: c * y})
                for s, z in E.Sinv({n1: one}).items():
                    for p, y in M.action[s].apply({m: one}).items():
                        vec_iadd(out_inv, {p * nd + n0: c * z * y})
            cols[m * nd + n] = out
            inv_cols[n * md + m] = out_inv
    c = LinearMap(f, nd * md, md * nd, cols)
    cinv = LinearMap(f, md * nd, nd * md, inv_cols)
    return c, cinv


def r_braiding(Q: QuasiTriHopf, M: HModule, N: HModule) -> LinearMap:
    """``c(m (x) n) = (r^j.n) (x) (r_j.m)``."""
    f = Q.field
    md, nd = M.dim, N.dim
    out = LinearMap.zero(f, nd * md, md * nd)
    flip = flip_map(f, md, nd)
    for i, k, c in Q.r_terms():
        out = out + (flip @ tensor_map(M.mats[i], N.mats[k])).scale(c)
    return out


def flip_map(f: FieldSpec, md: int, nd: int) -> LinearMap:
    """``m (x) n -> n (x) m``."""
    return LinearMap(f, nd * md, md * nd, {m * nd + n: {n * md + m: f.one} for m in range(md) for n in range(nd)})


def inner_hom(M: HModule, N: HModule, cap: int = INNER_HOM_CAP) -> HModule:
    """Hom(M, N) with ``h.F = h_1 F S(h_2)``; F flattened row-major (``out*dim M + in``)."""
    if M.dim * N.dim > cap:
        raise CapExceeded("inner hom of dimension %d exceeds cap %d" % (M.dim * N.dim, cap))
    H = M.hopf
    f = M.field
    one = f.one
    mats = []
    for h in range(H.dim):
        acc = LinearMap.zero(f, M.dim * N.dim, M.dim * N.dim)
        for a, b, c in H.delta_terms(h):
            Sb = M.mat(H.S({b: one}))
            acc = acc + tensor_map(N.mats[a], Sb.transpose()).scale(c)
        mats.append(acc)
    out = HModule(H, mats, "Hom(%s,%s)" % (M.name, N.name))
    out.hom_shape = (N.dim, M.dim)
    return out


def evaluation_map(M: HModule, N: HModule) -> LinearMap:
    """The pairing ``Hom(M,N) (x) M -> N``."""
    f = M.field
    md = M.dim
    cols = {}
    for o in range(N.dim):
        for i in range(md):
            cols[(o * md + i) * md + i] = {o: f.one}
    return LinearMap(f, N.dim, N.dim * md * md, cols)


def check_pairing_linear(M: HModule, N: HModule) -> Report:
    rep = Report("inner hom pairing")
    Hom = inner_hom(M, N)
    ev = evaluation_map(M, N)
    T = Hom.tensor(M)
    bad = None
    for h in range(M.hopf.dim):
        if not (ev @ T.mats[h] == N.mats[h] @ ev):
            bad = h
            break
    rep.add("pairing is H-linear", bad is None, {"basis": bad})
    return rep


def invariants(M: HModule) -> List[Vec]:
    """Basis of ``{m : h.m = eps(h) m}``."""
    H = M.hopf
    cons = []
    for h in range(H.dim):
        A = M.mats[h]
        e = H.eps_values[h]
        rows = A.rows()
        for o in range(M.dim):
            r = dict(rows[o])
            if e:
                vec_iadd(r, {o: -e})
            if r:
                cons.append(r)
    return subspace_from_constraints(M.field, M.dim, cons).basis


def invariants_of(M: HModule, elements: Sequence[Vec]) -> List[Vec]:
    """Vectors fixed (up to the counit) by the listed Hopf elements only."""
    H = M.hopf
    cons = []
    for h in elements:
        A = M.mat(h)
        e = H.eps(h)
        rows = A.rows()
        for o in range(M.dim):
            r = dict(rows[o])
            if e:
                vec_iadd(r, {o: -e})
            if r:
                cons.append(r)
    return subspace_from_constraints(M.field, M.dim, cons).basis


def hom_space(M: HModule, N: HModule) -> List[Vec]:
    """H-linear maps M -> N by a direct solve of ``F rho_M(h) = rho_N(h) F``."""
    from .hopf import module_hom_space
    return module_hom_space(M, N)


# ------------------------------------------------------------ bimodules

class BimoduleObject:
    """An object of the category of E-bimodules in Z.

    ``E_obj`` is E as an H-module (a subobject of some algebra), and ``left[w]``,
    ``right[w]`` are the matrices of left and right multiplication by the basis
    element w of E.
    """

    def __init__(self, module: HModule, E_obj: HModule, left: Sequence[LinearMap], right: Sequence[LinearMap], name: str = "M"):
        self.module = module
        self.E_obj = E_obj
        self.left = list(left)
        self.right = list(right)
        self.name = name
        self.dim = module.dim

    def check(self, E_mult: LinearMap) -> Report:
        """Bimodule axioms and H-linearity of the action maps."""
        f = self.module.field
        e = self.E_obj.dim
        rep = Report("bimodule object: %s" % self.name)
        one = f.one
        bad = None
        for a in range(e):
            for b in range(e):
                ab = E_mult.cols.get(a * e + b, {})
                if not (self.left[a] @ self.left[b] == _combo(self.left, ab, self.dim, f)):
                    bad = ("left", a, b)
                if not (self.right[b] @ self.right[a] == _combo(self.right, ab, self.dim, f)):
                    bad = ("right", a, b)
                if not (self.left[a] @ self.right[b] == self.right[b] @ self.left[a]):
                    bad = ("commute", a, b)
        rep.add("bimodule axioms", bad is None, {"basis": bad})
        H = self.module.hopf
        bad = None
        for h in range(H.dim):
            for w in range(e):
                lhs_l = self.module.mats[h] @ self.left[w]
                lhs_r = self.module.mats[h] @ self.right[w]
                rl = LinearMap.zero(f, self.dim, self.dim)
                rr = LinearMap.zero(f, self.dim, self.dim)
                for a, b, c in H.delta_terms(h):
                    hw = self.E_obj.mats[a].apply({w: one})
                    rl = rl + (_combo(self.left, hw, self.dim, f) @ self.module.mats[b]).scale(c)
                    hw2 = self.E_obj.mats[b].apply({w: one})
                    rr = rr + (_combo(self.right, hw2, self.dim, f) @ self.module.mats[a]).scale(c)
                if not (lhs_l == rl and lhs_r == rr):
                    bad = (h, w)
                    break
            if bad:
                break
        rep.add("action maps are H-linear", bad is None, {"basis": bad})
        return rep


def regular_bimodule(B_module: HModule, E_obj: HModule, left: Sequence[LinearMap], right: Sequence[LinearMap]) -> BimoduleObject:
    return BimoduleObject(B_module, E_obj, left, right, B_module.name)


class BimoduleHoms:
    """Solution space of the two bimodule-hom conditions inside Hom(M, N)."""

    def __init__(self, subspace: Subspace, action: HModule, report: Report):
        self.subspace = subspace
        self.module = action
        self.report = report

    @property
    def dim(self) -> int:
        return self.subspace.rank

    @property
    def basis(self) -> List[Vec]:
        return self.subspace.basis


def bimodule_hom_constraints(Q: QuasiTriHopf, M: BimoduleObject, N: BimoduleObject, Hom: HModule) -> List[Vec]:
    """Rows (functionals on Hom(M,N)) for ``f(xw) = f(x)w`` and ``f(wx) = (r^j.w)(r_j.f)(x)``."""
    f = M.module.field
    one = f.one
    md, nd = M.dim, N.dim
    e = M.E_obj.dim
    cons: List[Vec] = []
    # functional rows of a map F -> (A F B)[o, i] for given A (n x n), B (m x m)
    def add_rows(terms):
        """terms: list of (coeff, A, B, G) meaning coeff * A (G F) B, collected per entry."""
        mats = []
        for c, A, B, G in terms:
            # vec(A F B) = (A (x) B^T) vec(F)
            T = tensor_map(A, B.transpose()).scale(c)
            if G is not None:
                T = T @ G
            mats.append(T)
        tot = mats[0]
        for T in mats[1:]:
            tot = tot + T
        for r in tot.rows():
            if r:
                cons.append(r)
    In = LinearMap.identity(f, nd)
    Im = LinearMap.identity(f, md)
    for w in range(e):
        # F right_M[w] - right_N[w] F
        add_rows([(one, In, M.right[w], None), (-one, N.right[w], Im, None)])
        terms = [(one, In, M.left[w], None)]
        for i, k, c in Q.r_terms():
            hw = M.E_obj.mats[k].apply({w: one})
            L = _combo(N.left, hw, nd, f)
            if not L.is_zero():
                terms.append((-c, L, Im, Hom.mats[i]))
        add_rows(terms)
    return cons


def bimodule_hom_space(Q: QuasiTriHopf, M: BimoduleObject, N: BimoduleObject, cap: int = INNER_HOM_CAP) -> BimoduleHoms:
    Hom = inner_hom(M.module, N.module, cap)
    f = M.module.field
    cons = bimodule_hom_constraints(Q, M, N, Hom)
    sub = subspace_from_constraints(f, M.dim * N.dim, cons)
    rep = Report("bimodule hom space")
    mats = []
    stable = True
    for h in range(Q.dim):
        cols = {}
        for j, v in enumerate(sub.basis):
            img = Hom.mats[h].apply(v)
            coords = sub.coordinates(img)
            if coords is None:
                stable = False
                coords = {}
            cols[j] = coords
        mats.append(LinearMap(f, sub.rank, sub.rank, cols))
    rep.add("H-stable subspace", stable)
    action = HModule(Q.hopf, mats, "Hom_E(%s,%s)" % (M.name, N.name))
    return BimoduleHoms(sub, action, rep)


def categorical_bimodule_homs(M: BimoduleObject, N: BimoduleObject) -> Subspace:
    """H-linear E-bimodule maps M -> N, solved directly."""
    f = M.module.field
    md, nd = M.dim, N.dim
    In = LinearMap.identity(f, nd)
    Im = LinearMap.identity(f, md)
    cons: List[Vec] = []
    pairs = [(M.module.mats[h], N.module.mats[h]) for h in range(M.module.hopf.dim)]
    pairs += list(zip(M.left, N.left)) + list(zip(M.right, N.right))
    for A, B in pairs:
        T = tensor_map(In, A.transpose()) - tensor_map(B, Im)
        cons.extend(r for r in T.rows() if r)
    return subspace_from_constraints(f, md * nd, cons)
