"""Bar constructions, Hochschild cochain complexes and cohomology.

Cochains of degree n are elements of ``Hom(B^{(x)n}, B)`` stored as sparse
vectors with index ``out * b**n + in`` (row-major flattening of the
``b x b**n`` matrix, inputs ordered lexicographically).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .braidalg import AlgebraObject
from .exactlin import (
    ColumnEchelon,
    FieldSpec,
    LinearMap,
    QuotientData,
    Subspace,
    Vec,
    kernel_basis,
    multi_index,
    subspace_from_constraints,
    tensor_map,
    tensor_maps,
    vec_eq,
    vec_iadd,
)
from .hopf import HModule, HopfError
from .report import Report
from .ydmod import CapExceeded

DEFAULT_MAX_COLUMNS = 10 ** 4


class ComplexError(ValueError):
    pass


# --------------------------------------------------------------- containers

class CochainComplex:
    """Cochain complex ``C^lo -> ... -> C^hi`` with ``diffs[n]: C^n -> C^{n+1}``.

    ``action(n)`` (optional) returns one matrix per Hopf basis element acting
    on ``C^n``.
    """

    def __init__(self, field: FieldSpec, dims: Dict[int, int], diffs: Dict[int, LinearMap],
                 name: str = "C", action: Optional[Callable[[int], List[LinearMap]]] = None):
        self.field = field
        self.dims = dict(dims)
        self.diffs = dict(diffs)
        self.name = name
        self._action_fn = action
        self._actions: Dict[int, List[LinearMap]] = {}
        self.lo = min(self.dims)
        self.hi = max(self.dims)
        for n, d in self.diffs.items():
            if (d.ncols, d.nrows) != (self.dims[n], self.dims[n + 1]):
                raise ComplexError("differential %d has shape %dx%d" % (n, d.nrows, d.ncols))

    def d(self, n: int) -> LinearMap:
        if n in self.diffs:
            return self.diffs[n]
        if n + 1 in self.dims and n not in self.dims:
            return LinearMap.zero(self.field, self.dims[n + 1], 0)
        if n in self.dims and n + 1 not in self.dims and n < self.hi:
            raise ComplexError("no differential out of degree %d" % n)
        raise ComplexError("degree %d outside stored range" % n)

    def d_in(self, n: int) -> LinearMap:
        """The differential into degree n (zero map when n is the lowest degree)."""
        if n == self.lo:
            return LinearMap.zero(self.field, self.dims[n], 0)
        return self.diffs[n - 1]

    @property
    def has_action(self) -> bool:
        return self._action_fn is not None

    def action(self, n: int) -> List[LinearMap]:
        if self._action_fn is None:
            raise ComplexError("complex carries no Hopf action")
        if n not in self._actions:
            self._actions[n] = self._action_fn(n)
        return self._actions[n]

    def check_d_squared(self) -> Report:
        rep = Report("d o d = 0: %s" % self.name)
        for n in sorted(self.diffs):
            if n + 1 in self.diffs:
                rep.add("d%d o d%d" % (n + 1, n), (self.diffs[n + 1] @ self.diffs[n]).is_zero())
        return rep

    def check_equivariance(self, elements: Optional[Sequence[int]] = None) -> Report:
        rep = Report("differential commutes with the action: %s" % self.name)
        for n in sorted(self.diffs):
            A = self.action(n)
            A2 = self.action(n + 1)
            idx = range(len(A)) if elements is None else elements
            bad = None
            for h in idx:
                if not (self.diffs[n] @ A[h] == A2[h] @ self.diffs[n]):
                    bad = h
                    break
            rep.add("d%d is H-linear" % n, bad is None, {"basis": bad})
        return rep


class SubComplex(CochainComplex):
    """A subcomplex given by subspaces of an ambient complex (coordinates on RREF bases)."""

    def __init__(self, ambient: CochainComplex, spaces: Dict[int, Subspace], name: str):
        self.ambient = ambient
        self.spaces = spaces
        f = ambient.field
        diffs = {}
        self.closed = True
        for n in sorted(spaces):
            if n + 1 not in spaces or n not in ambient.diffs:
                continue
            S, T = spaces[n], spaces[n + 1]
            cols = {}
            for j, v in enumerate(S.basis):
                img = ambient.diffs[n].apply(v)
                c = T.coordinates(img)
                if c is None:
                    self.closed = False
                    raise ComplexError("subspace in degree %d is not preserved by d" % n)
                if c:
                    cols[j] = c
            diffs[n] = LinearMap(f, T.rank, S.rank, cols)
        action = None
        if ambient.has_action:
            action = self._restricted_action
        super().__init__(f, {n: S.rank for n, S in spaces.items()}, diffs, name, action)

    def _restricted_action(self, n: int) -> List[LinearMap]:
        S = self.spaces[n]
        out = []
        for A in self.ambient.action(n):
            cols = {}
            for j, v in enumerate(S.basis):
                c = S.coordinates(A.apply(v))
                if c is None:
                    raise ComplexError("subspace in degree %d is not H-stable" % n)
                if c:
                    cols[j] = c
            out.append(LinearMap(self.field, S.rank, S.rank, cols))
        return out

    def inclusion(self, n: int) -> LinearMap:
        return self.spaces[n].inclusion()

    def to_ambient(self, n: int, coords: Vec) -> Vec:
        out: Vec = {}
        for j, c in coords.items():
            vec_iadd(out, self.spaces[n].basis[j], c)
        return out

    def from_ambient(self, n: int, v: Vec) -> Optional[Vec]:
        return self.spaces[n].coordinates(v)


# ---------------------------------------------------------------- helpers

def _check_cap(dim: int, cap: int, what: str) -> None:
    if dim > cap:
        raise CapExceeded("%s needs %d columns, cap is %d" % (what, dim, cap))


def merge_map(mult: LinearMap, d: int, n: int, i: int) -> LinearMap:
    """``B^{(x)n} -> B^{(x)n-1}`` multiplying factors i and i+1 (0-based)."""
    f = mult.field
    I = LinearMap.identity(f, d)
    return tensor_maps([I] * i + [mult] + [I] * (n - i - 2)) if n >= 2 else None


def bar_differential(mult: LinearMap, d: int, n: int) -> LinearMap:
    """``d(b_1..b_n) = sum_{i=1}^{n-1} (-1)^i b_1..b_i b_{i+1}..b_n`` on ``B^{(x)n}``."""
    f = mult.field
    if n <= 1:
        return LinearMap.zero(f, d ** max(n - 1, 0), d ** n)
    out = LinearMap.zero(f, d ** (n - 1), d ** n)
    for i in range(n - 1):
        m = merge_map(mult, d, n, i)
        out = out + (m if (i + 1) % 2 == 0 else -m)
    return out


def precompose(T: LinearMap, out_dim: int) -> LinearMap:
    """``F -> F o T`` on flattened ``Hom`` spaces (T: X -> Y gives Hom(Y,.) -> Hom(X,.))."""
    f = T.field
    return tensor_map(LinearMap.identity(f, out_dim), T.transpose())


def postcompose(A: LinearMap, in_dim: int) -> LinearMap:
    """``F -> A o F`` on flattened ``Hom`` spaces."""
    return tensor_map(A, LinearMap.identity(A.field, in_dim))


def vstack(field: FieldSpec, ncols: int, maps: Sequence[LinearMap]) -> LinearMap:
    cols: Dict[int, Vec] = {}
    off = 0
    for m in maps:
        for j, c in m.cols.items():
            col = cols.setdefault(j, {})
            for i, x in c.items():
                col[off + i] = x
        off += m.nrows
    return LinearMap(field, off, ncols, cols)


def kernel_subspace(field: FieldSpec, ncols: int, maps: Sequence[LinearMap]) -> Subspace:
    maps = [m for m in maps if not m.is_zero()]
    if not maps:
        return Subspace(field, ncols, [{i: field.one} for i in range(ncols)])
    return Subspace(field, ncols, kernel_basis(vstack(field, ncols, maps)))


# ---------------------------------------------------------------- bar side

def bar_construction(B: AlgebraObject, N: int) -> CochainComplex:
    """The bar construction ``... -> B^{(x)2} -> B -> k`` stored in degrees ``-(N+1)..-1``.

    Degree ``-l`` holds ``B^{(x)l-1}``... stated concretely: degree ``-(l+1)``
    holds ``B^{(x)l}`` for ``l = 0..N``; differentials raise the degree.
    The diagonal Hopf action is attached.
    """
    f = B.field
    d = B.dim
    dims = {-(l + 1): d ** l for l in range(N + 1)}
    diffs = {}
    for l in range(1, N + 1):
        diffs[-(l + 1)] = bar_differential(B.mult, d, l)
    return CochainComplex(f, dims, diffs, "bar(%s)" % B.name, lambda n: B.module.power(-n - 1).mats)


def bar_resolution(B: AlgebraObject, N: int, augmented: bool = True) -> CochainComplex:
    """``B (x) B^{(x)l} (x) B`` in degree ``-(l+1)``; degree 0 is B (augmentation)."""
    f = B.field
    d = B.dim
    dims = {-(l + 1): d ** (l + 2) for l in range(N + 1)}
    diffs = {}
    for l in range(1, N + 1):
        diffs[-(l + 1)] = full_bar_differential(B.mult, d, l + 2)
    if augmented:
        dims[0] = d
        diffs[-1] = B.mult
    return CochainComplex(f, dims, diffs, "Bar(%s)" % B.name, lambda n: B.module.power(1 - n if n < 0 else 1).mats)


def full_bar_differential(mult: LinearMap, d: int, n: int) -> LinearMap:
    """``sum_{i=0}^{n-2} (-1)^i`` merge of factors i, i+1 on ``B^{(x)n}``."""
    f = mult.field
    out = LinearMap.zero(f, d ** (n - 1), d ** n)
    for i in range(n - 1):
        m = merge_map(mult, d, n, i)
        out = out + (m if i % 2 == 0 else -m)
    return out


def bar_module_action(B: AlgebraObject, n: int) -> LinearMap:
    """Right ``B^e``-action on ``B (x) B^{(x)n} (x) B``: ``u.(b (x) b') = (r^j.b)(r_j.u) b'``.

    As a map ``(B (x) B^{(x)n} (x) B) (x) B (x) B -> B (x) B^{(x)n} (x) B``.
    """
    f = B.field
    one = f.one
    d = B.dim
    P = B.module.power(n + 2)
    D = d ** (n + 2)
    Lm = {b: B.left_mult({b: one}) for b in range(d)}
    Rm = {b: B.right_mult({b: one}) for b in range(d)}
    Iin = LinearMap.identity(f, d ** n)
    cols = {}
    for b in range(d):
        for b2 in range(d):
            acc = LinearMap.zero(f, D, D)
            for i, k, c in B.Q.r_terms():
                hb = B.module.mats[k].apply({b: one})
                L = LinearMap.zero(f, d, d)
                for p, s in hb.items():
                    L = L + Lm[p].scale(s)
                acc = acc + (tensor_maps([L, Iin, Rm[b2]]) @ P.mats[i]).scale(c)
            for u, col in acc.cols.items():
                cols[(u * d + b) * d + b2] = col
    return LinearMap(f, D, D * d * d, cols)


def check_bar_resolution(B: AlgebraObject, N: int) -> Report:
    """Exactness of the augmented bar resolution and the module/differential checks."""
    rep = Report("bar resolution of %s" % B.name)
    C = bar_resolution(B, N)
    rep.extend(C.check_d_squared())
    degs = sorted(C.dims)
    for n in degs:
        if n == degs[0]:
            continue
        dout = C.diffs.get(n)
        din = C.diffs.get(n - 1)
        k = C.dims[n] - (dout.rank() if dout is not None else 0)
        im = din.rank() if din is not None else 0
        rep.add("exact at degree %d" % n, k == im, {"ker": k, "im": im})
    return rep


def check_bar_action(B: AlgebraObject, n: int) -> Report:
    """The B^e action on the bar resolution is a unital associative right ``B^e``-action commuting with d."""
    from .braidalg import braided_enveloping
    rep = Report("B^e-action on B (x) B^%d (x) B" % n)
    f = B.field
    one = f.one
    d = B.dim
    Be = braided_enveloping(B)
    act = bar_module_action(B, n)
    D = d ** (n + 2)

    def apply(u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, s in u.items():
            for j, t in v.items():
                c = act.cols.get(i * d * d + j)
                if c:
                    vec_iadd(out, c, s * t)
        return out

    rep.add("unital", all(vec_eq(apply({u: one}, Be.unit), {u: one}) for u in range(D)))
    bad = None
    for u in range(D):
        for v in range(d * d):
            uv = apply({u: one}, {v: one})
            for w in range(d * d):
                if not vec_eq(apply(uv, {w: one}), apply({u: one}, Be.mul({v: one}, {w: one}))):
                    bad = (u, v, w)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("associative", bad is None, {"basis": bad})
    if n >= 1:
        dd = full_bar_differential(B.mult, d, n + 2)
        act2 = bar_module_action(B, n - 1)
        ok = True
        for u in range(D):
            for v in range(d * d):
                lhs = dd.apply(apply({u: one}, {v: one}))
                rhs: Vec = {}
                for i, s in dd.apply({u: one}).items():
                    c = act2.cols.get(i * d * d + v)
                    if c:
                        vec_iadd(rhs, c, s)
                if not vec_eq(lhs, rhs):
                    ok = False
                    break
            if not ok:
                break
        rep.add("differential is B^e-linear", ok)
    return rep


# ------------------------------------------------------- braided complex

class BraidedComplex(CochainComplex):
    """``Hom(B^{(x)n}, B)``, n = 0..N, with differential d_c and the inner-hom action.

    ``d_c(f)`` for ``|f| = n`` is ``(-1)^{n+1}`` times
    ``(r^j.b)(r_j.f)(y) + f(d_BB(b (x) y)) + (-1)^{n+1} f(b (x) y') b'``.
    """

    def __init__(self, B: AlgebraObject, N: int, max_columns: int = DEFAULT_MAX_COLUMNS):
        if N < 0:
            raise ComplexError("N must be nonnegative")
        self.B = B
        self.N = N
        b = self.b = B.dim
        f = B.field
        _check_cap(b ** (N + 1), max_columns, "braided cochains of degree %d" % N)
        dims = {n: b ** (n + 1) for n in range(N + 1)}
        self._inner: Dict[int, List[LinearMap]] = {}
        one = f.one
        M = B.module
        # LK[k][(o, p)] = m(h_k . e_p (x) e_o)
        self._lk = {}
        for _, k, _ in B.Q.r_terms():
            if k in self._lk:
                continue
            tab = {}
            for p in range(b):
                hp = M.mats[k].apply({p: one})
                if not hp:
                    continue
                for o in range(b):
                    v = B.mul(hp, {o: one})
                    if v:
                        tab[(o, p)] = v
            self._lk[k] = tab
        diffs = {n: self._build_d(n) for n in range(N)}
        super().__init__(f, dims, diffs, "C_c(%s)" % B.name, self.inner_action)

    def inner_action(self, n: int) -> List[LinearMap]:
        """``h.F = h_1 F S(h_2)`` on ``Hom(B^{(x)n}, B)``."""
        if n not in self._inner:
            B = self.B
            H = B.hopf
            one = B.field.one
            P = B.module.power(n)
            Sm = [P.mat(H.S({x: one})).transpose() for x in range(H.dim)]
            mats = []
            for h in range(H.dim):
                acc = LinearMap.zero(B.field, self.b ** (n + 1), self.b ** (n + 1))
                for a, c2, c in H.delta_terms(h):
                    acc = acc + tensor_map(B.module.mats[a], Sm[c2]).scale(c)
                mats.append(acc)
            self._inner[n] = mats
        return self._inner[n]

    def _build_d(self, n: int) -> LinearMap:
        B = self.B
        f = B.field
        b = self.b
        bn = b ** n
        bn1 = bn * b
        G = self.inner_action(n)
        sign = f.one if (n + 1) % 2 == 0 else -f.one
        # T1 = sum c K_k G_i
        T1 = LinearMap.zero(f, b * bn1, b * bn)
        for i, k, c in B.Q.r_terms():
            tab = self._lk[k]
            kcols: Dict[int, Vec] = {}
            for o in range(b):
                for q in range(bn):
                    out: Vec = {}
                    for p in range(b):
                        v = tab.get((o, p))
                        if v:
                            for oo, x in v.items():
                                out[oo * bn1 + p * bn + q] = out.get(oo * bn1 + p * bn + q, 0) + x
                    out = {kk: x for kk, x in out.items() if x}
                    if out:
                        kcols[o * bn + q] = out
            K = LinearMap(f, b * bn1, b * bn, kcols)
            T1 = T1 + (K @ G[i]).scale(c)
        middle = precompose(bar_differential(B.mult, b, n + 1), b)
        last_cols: Dict[int, Vec] = {}
        for o in range(b):
            for q in range(bn):
                out: Vec = {}
                for j in range(b):
                    for oo, x in B.mult.cols.get(o * b + j, {}).items():
                        out[oo * bn1 + q * b + j] = x
                if out:
                    last_cols[o * bn + q] = out
        last = LinearMap(f, b * bn1, b * bn, last_cols)
        return (T1 + middle + last.scale(sign)).scale(sign)

    # cochain helpers
    def evaluate(self, fvec: Vec, n: int, x: Vec) -> Vec:
        """Apply the degree-n cochain to a vector of ``B^{(x)n}``."""
        bn = self.b ** n
        out: Vec = {}
        for idx, c in fvec.items():
            o, q = divmod(idx, bn)
            xq = x.get(q)
            if xq:
                vec_iadd(out, {o: c * xq})
        return out

    def act(self, h: Vec, fvec: Vec, n: int) -> Vec:
        A = self.inner_action(n)
        out: Vec = {}
        for i, c in h.items():
            vec_iadd(out, A[i].apply(fvec), c)
        return out

    def unit_cochain(self) -> Vec:
        return dict(self.B.unit)

    def pi(self) -> Vec:
        """The degree-1 cochain restricting to the identity of B."""
        b = self.b
        return {o * b + o: self.field.one for o in range(b)}


def braided_cochain_complex(B: AlgebraObject, N: int, max_columns: int = DEFAULT_MAX_COLUMNS) -> BraidedComplex:
    return BraidedComplex(B, N, max_columns)


def transported_differential(C: BraidedComplex, n: int) -> LinearMap:
    """d on ``Hom(B^{(x)n}, B)`` obtained by extending f to a ``B^e``-linear map
    F on the bar resolution, ``F(b (x) x (x) b') = (r^j.b)(r_j.f)(x) b'``,
    composing with the bar differential and restricting to ``1 (x) - (x) 1``,
    with the sign ``(-1)^{n+1}``.  Computed by direct evaluation.
    """
    B = C.B
    f = B.field
    one = f.one
    b = C.b
    H = B.hopf
    bn = b ** n
    P = B.module.power(n)
    unit = B.unit
    terms = B.Q.r_terms()
    S_rows = {}
    for x in range(H.dim):
        S_rows[x] = P.mat(H.S({x: one})).rows()  # rho_n(S h_x) rows

    def hf_matrix(i: int, o: int, q: int) -> Dict[int, Vec]:
        """(h_i . E_{o,q}) as {column (input index): output vector}."""
        out: Dict[int, Vec] = {}
        for a, c2, c in H.delta_terms(i):
            col_o = B.module.mats[a].cols.get(o, {})
            if not col_o:
                continue
            row_q = S_rows[c2][q]
            for z, y in row_q.items():
                vec_iadd(out.setdefault(z, {}), col_o, c * y)
        return out

    def Phi(hfs, left: Vec, x: Vec, right: Vec) -> Vec:
        out: Vec = {}
        for (i, k, c), hf in zip(terms, hfs):
            val: Vec = {}
            for z, s in x.items():
                v = hf.get(z)
                if v:
                    vec_iadd(val, v, s)
            if not val:
                continue
            hb = B.module.mats[k].apply(left)
            vec_iadd(out, B.mul(B.mul(hb, val), right), c)
        return out

    sign = one if (n + 1) % 2 == 0 else -one
    bn1 = bn * b
    cols = {}
    for o in range(b):
        for q in range(bn):
            hfs = [hf_matrix(i, o, q) for i, _, _ in terms]
            col: Vec = {}
            for z in range(bn1):
                zi = multi_index(z, b, n + 1)
                val: Vec = {}
                # b_0 = 1, b_1 = z1: merge gives z1 (x) z' (x) 1
                vec_iadd(val, Phi(hfs, {zi[0]: one}, {_flat(zi[1:], b): one}, unit))
                for i in range(1, n + 1):
                    prod = B.mul({zi[i - 1]: one}, {zi[i]: one})
                    x: Vec = {}
                    for p, s in prod.items():
                        x[_flat(zi[:i - 1] + (p,) + zi[i + 1:], b)] = s
                    vec_iadd(val, Phi(hfs, unit, x, unit), one if i % 2 == 0 else -one)
                last = one if (n + 1) % 2 == 0 else -one
                vec_iadd(val, Phi(hfs, unit, {_flat(zi[:n], b): one}, {zi[n]: one}), last)
                for oo, s in val.items():
                    col[oo * bn1 + z] = s * sign
            col = {k: v for k, v in col.items() if v}
            if col:
                cols[o * bn + q] = col
    return LinearMap(f, b * bn1, b * bn, cols)


def _flat(t: Sequence[int], b: int) -> int:
    idx = 0
    for i in t:
        idx = idx * b + i
    return idx


def degree0_solution(B: AlgebraObject) -> Subspace:
    """``{beta : (r^j.b)(r_j.beta) = beta b for all b}`` solved directly."""
    f = B.field
    one = f.one
    # linear map beta -> [(r^j.b)(r_j.beta) - beta b]_b
    maps = []
    for bb in range(B.dim):
        cols = {}
        for beta in range(B.dim):
            v: Vec = {}
            for i, k, c in B.Q.r_terms():
                vec_iadd(v, B.mul(B.module.mats[k].apply({bb: one}), B.module.mats[i].apply({beta: one})), c)
            vec_iadd(v, B.mul({beta: one}, {bb: one}), -one)
            if v:
                cols[beta] = v
        maps.append(LinearMap(f, B.dim, B.dim, cols))
    return kernel_subspace(f, B.dim, maps)


# ---------------------------------------------------- relative complex

def subalgebra_basis(B: AlgebraObject) -> List[Vec]:
    """The canonical subalgebra E of a smash product ``A * E``."""
    if B.smash is None:
        raise ComplexError("no canonical subalgebra E: B was not built as a smash product")
    f = B.field
    return [B.smash.embed_E({w: f.one}) for w in range(B.smash.e_dim)]


def check_subalgebra_in_Z(B: AlgebraObject, E_basis: Sequence[Vec]) -> Report:
    f = B.field
    S = Subspace(f, B.dim, E_basis)
    rep = Report("subalgebra in Z")
    rep.add("contains unit", S.contains(B.unit))
    rep.add("closed under multiplication", all(S.contains(B.mul(x, y)) for x in E_basis for y in E_basis))
    rep.add("H-stable", all(S.contains(A.apply(x)) for A in B.module.mats for x in E_basis))
    return rep


def relative_constraints(C: BraidedComplex, E_basis: Sequence[Vec], n: int) -> List[LinearMap]:
    """Linear maps on ``Hom(B^{(x)n},B)`` whose common kernel is the relative space."""
    B = C.B
    f = B.field
    b = C.b
    bn = b ** n
    I = LinearMap.identity(f, b)
    G = C.inner_action(n)
    Lw = [B.left_mult(w) for w in E_basis]
    Rw = [B.right_mult(w) for w in E_basis]
    maps: List[LinearMap] = []
    if n == 0:
        # beta w = (r^j.w)(r_j.beta) ; beta in B = Hom(k,B)
        for w in E_basis:
            cols = {}
            for beta in range(b):
                v = B.mul({beta: f.one}, w)
                for i, k, c in B.Q.r_terms():
                    hw = B.module.mats[k].apply(w)
                    vec_iadd(v, B.mul(hw, B.module.mats[i].apply({beta: f.one})), -c)
                if v:
                    cols[beta] = v
            maps.append(LinearMap(f, b, b, cols))
        return maps
    for j in range(len(E_basis)):
        # balancing inside
        for pos in range(n - 1):
            T = tensor_maps([I] * pos + [Rw[j], I] + [I] * (n - pos - 2)) - tensor_maps([I] * pos + [I, Lw[j]] + [I] * (n - pos - 2))
            maps.append(precompose(T, b))
        # f(x w) = f(x) w
        Tr = tensor_maps([I] * (n - 1) + [Rw[j]])
        maps.append(precompose(Tr, b) - postcompose(Rw[j], bn))
        # f(w x) = (r^j.w)(r_j.f)(x)
        Tl = tensor_maps([Lw[j]] + [I] * (n - 1))
        acc = precompose(Tl, b)
        for i, k, c in B.Q.r_terms():
            hw = B.module.mats[k].apply(E_basis[j])
            if not hw:
                continue
            acc = acc - (postcompose(B.left_mult(hw), bn) @ G[i]).scale(c)
        maps.append(acc)
    return maps


class RelativeComplex(SubComplex):
    def __init__(self, C: BraidedComplex, E_basis: Sequence[Vec]):
        self.E_basis = list(E_basis)
        f = C.field
        spaces = {}
        for n in range(C.N + 1):
            spaces[n] = kernel_subspace(f, C.dims[n], relative_constraints(C, self.E_basis, n))
        super().__init__(C, spaces, "C_c,E(%s)" % C.B.name)
        self.B = C.B
        self.N = C.N


def relative_cochain_complex(C: BraidedComplex, E_basis: Optional[Sequence[Vec]] = None) -> RelativeComplex:
    if E_basis is None:
        E_basis = subalgebra_basis(C.B)
    rep = check_subalgebra_in_Z(C.B, E_basis)
    if not rep.passed:
        raise ComplexError("E is not a subalgebra in Z: %s" % [c.name for c in rep.failures()])
    return RelativeComplex(C, E_basis)


def relative_bar_dim(B: AlgebraObject, E_basis: Sequence[Vec], n: int) -> int:
    """dim of ``B^{(x)_E n}`` computed as the cokernel of the balancing maps (n >= 1)."""
    f = B.field
    b = B.dim
    I = LinearMap.identity(f, b)
    imgs = []
    for w in E_basis:
        Rw, Lw = B.right_mult(w), B.left_mult(w)
        for pos in range(n - 1):
            T = tensor_maps([I] * pos + [Rw, I] + [I] * (n - pos - 2)) - tensor_maps([I] * pos + [I, Lw] + [I] * (n - pos - 2))
            imgs.extend(T.columns())
    from .exactlin import span_rank
    return b ** n - span_rank(f, b ** n, imgs)


# ---------------------------------------------------- classical complex

class Bimodule:
    """A bimodule over an algebra (mult, unit) given by left/right matrices per basis element."""

    def __init__(self, field: FieldSpec, left: Sequence[LinearMap], right: Sequence[LinearMap], name: str = "M"):
        self.field = field
        self.left = list(left)
        self.right = list(right)
        self.dim = self.left[0].nrows if self.left else 0
        self.name = name


def regular_bimodule_of(B: AlgebraObject) -> Bimodule:
    one = B.field.one
    return Bimodule(B.field, [B.left_mult({i: one}) for i in range(B.dim)], [B.right_mult({i: one}) for i in range(B.dim)], B.name)


def smash_bimodule(B: AlgebraObject) -> Bimodule:
    """B = A * E as an A-bimodule through ``a -> a * 1``."""
    sd = B.smash
    one = B.field.one
    left = [B.left_mult(sd.embed_A({a: one})) for a in range(sd.a_dim)]
    right = [B.right_mult(sd.embed_A({a: one})) for a in range(sd.a_dim)]
    return Bimodule(B.field, left, right, B.name)


def smash_summand(B: AlgebraObject, g: int) -> Tuple[Bimodule, LinearMap]:
    """The A-sub-bimodule ``A g`` of ``A * kG`` and its inclusion into B."""
    sd = B.smash
    f = B.field
    one = f.one
    e = sd.e_dim
    idx = [a * e + g for a in range(sd.a_dim)]
    pos = {k: i for i, k in enumerate(idx)}
    full = smash_bimodule(B)

    def restrict(M: LinearMap) -> LinearMap:
        cols = {}
        for i, k in enumerate(idx):
            v = M.cols.get(k, {})
            c = {}
            for r, x in v.items():
                if r not in pos:
                    raise ComplexError("A g is not a sub-bimodule")
                c[pos[r]] = x
            if c:
                cols[i] = c
        return LinearMap(f, len(idx), len(idx), cols)

    inc = LinearMap(f, B.dim, len(idx), {i: {k: one} for i, k in enumerate(idx)})
    return Bimodule(f, [restrict(M) for M in full.left], [restrict(M) for M in full.right], "%s g%d" % (sd.A.name, g)), inc


class ClassicalComplex(CochainComplex):
    """``Hom(A^{(x)n}, M)`` with ``d(f) = (-1)^{n+1}`` times the standard Hochschild differential."""

    def __init__(self, mult: LinearMap, unit: Vec, M: Bimodule, N: int, name: str = "C(A,M)",
                 max_columns: int = DEFAULT_MAX_COLUMNS):
        f = self.field = M.field
        self.mult = mult
        self.a = a = mult.nrows
        self.m = m = M.dim
        self.M = M
        self.unit = unit
        self.N = N
        _check_cap(m * a ** N, max_columns, "classical cochains of degree %d" % N)
        dims = {n: m * a ** n for n in range(N + 1)}
        diffs = {n: self._build_d(n) for n in range(N)}
        super().__init__(f, dims, diffs, name)

    def _build_d(self, n: int) -> LinearMap:
        f = self.field
        a, m = self.a, self.m
        an = a ** n
        an1 = an * a
        sign = f.one if (n + 1) % 2 == 0 else -f.one
        cols = {}
        for o in range(m):
            for q in range(an):
                out: Vec = {}
                # a_1 f(a_2..)
                for p in range(a):
                    for oo, x in self.M.left[p].cols.get(o, {}).items():
                        k = oo * an1 + p * an + q
                        out[k] = out.get(k, 0) + x
                # f(a_1..a_n) a_{n+1}
                for j in range(a):
                    for oo, x in self.M.right[j].cols.get(o, {}).items():
                        k = oo * an1 + q * a + j
                        out[k] = out.get(k, 0) + sign * x
                cols[o * an + q] = {k: v for k, v in out.items() if v}
        first = LinearMap(f, m * an1, m * an, {k: v for k, v in cols.items() if v})
        middle = precompose(bar_differential(self.mult, a, n + 1), m)
        return (first + middle).scale(sign)


def classical_cochain_complex(mult: LinearMap, unit: Vec, M: Bimodule, N: int, **kw) -> ClassicalComplex:
    return ClassicalComplex(mult, unit, M, N, **kw)


def hochschild_complex(B: AlgebraObject, N: int, **kw) -> ClassicalComplex:
    """The ordinary Hochschild complex ``C(B, B)`` ignoring all braiding."""
    return ClassicalComplex(B.mult, B.unit, regular_bimodule_of(B), N, name="C(%s,%s)" % (B.name, B.name), **kw)


def smash_classical_complex(B: AlgebraObject, N: int, **kw) -> ClassicalComplex:
    """``C(A, B)`` for ``B = A * E``."""
    sd = B.smash
    return ClassicalComplex(sd.A.mult, sd.A.unit, smash_bimodule(B), N, name="C(%s,%s)" % (sd.A.name, B.name), **kw)


# ------------------------------------------------- restriction isomorphism

class RestrictionIso:
    """Restriction along ``A^{(x)n} -> B^{(x)n}`` from the relative complex to ``C(A,B)``."""

    def __init__(self, rel: RelativeComplex, cl: ClassicalComplex):
        B = rel.B
        sd = B.smash
        if sd is None:
            raise ComplexError("B was not constructed as a smash product")
        f = B.field
        self.rel = rel
        self.cl = cl
        iota = sd.A_inclusion()
        self.maps = {}
        for n in rel.spaces:
            if n not in cl.dims:
                continue
            if n == 0:
                R = LinearMap.identity(f, B.dim)
            else:
                R = precompose(tensor_maps([iota] * n), B.dim)
            self.maps[n] = R @ rel.inclusion(n)

    def check(self) -> Report:
        rep = Report("restriction isomorphism")
        for n, R in sorted(self.maps.items()):
            rep.add("degree %d bijective" % n, R.nrows == R.ncols and R.rank() == R.ncols, {"shape": (R.nrows, R.ncols), "rank": R.rank()})
        for n in sorted(self.maps):
            if n + 1 in self.maps and n in self.rel.diffs and n in self.cl.diffs:
                ok = self.maps[n + 1] @ self.rel.diffs[n] == self.cl.diffs[n] @ self.maps[n]
                rep.add("chain map in degree %d" % n, ok)
        return rep

    def transported_action(self, n: int) -> List[LinearMap]:
        """The Hopf action on ``C^n(A,B)`` transported from the relative complex."""
        R = self.maps[n]
        Rinv = R.inverse()
        return [R @ A @ Rinv for A in self.rel.action(n)]


def restriction_iso(rel: RelativeComplex, cl: Optional[ClassicalComplex] = None) -> RestrictionIso:
    if cl is None:
        cl = smash_classical_complex(rel.B, rel.N)
    return RestrictionIso(rel, cl)


def output_dual_action(B: AlgebraObject, cl: ClassicalComplex, n: int) -> List[LinearMap]:
    """``(xi.f)(x) = xi.(f(x))`` on ``C^n(A,B)`` for the dual basis ``e^xi`` of E* in the double."""
    from .hopf import double_embeddings
    _, emb = double_embeddings(B.Q)
    return [postcompose(B.module.mat(v), cl.a ** n) for v in emb.columns()]


# ------------------------------------------------------- normalization

def unit_index(mult_unit: Vec) -> int:
    if len(mult_unit) != 1 or list(mult_unit.values())[0] != 1:
        raise ComplexError("normalization needs the unit to be a basis vector")
    return next(iter(mult_unit))


def normalized_space(dim_out: int, d: int, n: int, u: int, field: FieldSpec) -> Subspace:
    basis = []
    for o in range(dim_out):
        for q in range(d ** n):
            if u not in multi_index(q, d, n):
                basis.append({o * d ** n + q: field.one})
    return Subspace(field, dim_out * d ** n, basis)


def normalized_subcomplex(C: CochainComplex) -> SubComplex:
    """Cochains vanishing on every monomial containing the unit."""
    if isinstance(C, SubComplex):
        amb = C.ambient
        base = _normalized_spaces(amb)
        spaces = {}
        for n, S in C.spaces.items():
            # intersection of S with the normalized coordinate subspace
            zero_coords = _unit_coordinates(amb, n)
            cons_cols = {}
            for j, v in enumerate(S.basis):
                col = {}
                for r, k in enumerate(zero_coords):
                    x = v.get(k)
                    if x:
                        col[r] = x
                if col:
                    cons_cols[j] = col
            K = LinearMap(C.field, len(zero_coords), S.rank, cons_cols)
            sub = [C.to_ambient(n, c) for c in kernel_basis(K)] if zero_coords else list(S.basis)
            spaces[n] = Subspace(C.field, amb.dims[n], sub)
        return SubComplex(amb, spaces, "N" + C.name)
    return SubComplex(C, _normalized_spaces(C), "N" + C.name)


def _normalized_spaces(C: CochainComplex) -> Dict[int, Subspace]:
    if isinstance(C, BraidedComplex):
        u = unit_index(C.B.unit)
        return {n: normalized_space(C.b, C.b, n, u, C.field) for n in C.dims}
    if isinstance(C, ClassicalComplex):
        u = unit_index(C.unit)
        return {n: normalized_space(C.m, C.a, n, u, C.field) for n in C.dims}
    raise ComplexError("normalization needs a braided or classical complex")


def _unit_coordinates(C: CochainComplex, n: int) -> List[int]:
    if isinstance(C, BraidedComplex):
        out_dim, d, u = C.b, C.b, unit_index(C.B.unit)
    else:
        out_dim, d, u = C.m, C.a, unit_index(C.unit)
    dn = d ** n
    return [o * dn + q for o in range(out_dim) for q in range(dn) if u in multi_index(q, d, n)]


# ------------------------------------------------------------ invariants

def invariant_subcomplex(C: CochainComplex, elements: Optional[Sequence[Vec]] = None) -> SubComplex:
    """Degree-wise invariants ``{f : h.f = eps(h) f}`` for the listed Hopf elements.

    With ``elements=None`` every basis element of the Hopf algebra is used.
    """
    H = _hopf_of(C)
    f = C.field
    if elements is None:
        elements = [{i: f.one} for i in range(H.dim)]
    amb = C.ambient if isinstance(C, SubComplex) else C
    spaces = {}
    for n in C.dims:
        acts = C.action(n)
        maps = []
        for h in elements:
            A = LinearMap.zero(f, C.dims[n], C.dims[n])
            for i, c in h.items():
                A = A + acts[i].scale(c)
            e = H.eps(h)
            if e:
                A = A - LinearMap.identity(f, C.dims[n]).scale(e)
            maps.append(A)
        K = kernel_subspace(f, C.dims[n], maps)
        if isinstance(C, SubComplex):
            spaces[n] = Subspace(f, amb.dims[n], [C.to_ambient(n, v) for v in K.basis])
        else:
            spaces[n] = K
    return SubComplex(amb, spaces, "%s^inv" % C.name)


def _hopf_of(C: CochainComplex):
    c = C.ambient if isinstance(C, SubComplex) else C
    if isinstance(c, BraidedComplex):
        return c.B.hopf
    raise ComplexError("complex carries no Hopf algebra")


def eop_elements(B: AlgebraObject) -> List[Vec]:
    """The generators ``w`` of ``E^op`` inside the double acting on B."""
    from .hopf import double_embeddings
    emb, _ = double_embeddings(B.Q)
    return emb.columns()


# ------------------------------------------------------------ cohomology

@dataclass
class DegreeCohomology:
    degree: int
    dim: int
    cocycles: List[Vec]
    representatives: List[Vec]
    quotient: QuotientData
    boundary_solver: ColumnEchelon


class CohomologyResult:
    def __init__(self, C: CochainComplex, degrees: Dict[int, DegreeCohomology]):
        self.complex = C
        self.degrees = degrees

    def dims(self) -> Dict[int, int]:
        return {n: d.dim for n, d in sorted(self.degrees.items())}

    def __getitem__(self, n: int) -> DegreeCohomology:
        return self.degrees[n]

    def representatives(self, n: int) -> List[Vec]:
        return self.degrees[n].representatives

    def is_coboundary(self, fvec: Vec, n: int) -> Optional[Vec]:
        """A witness g with ``d g = f``, or None.  In the lowest degree only 0 is a coboundary."""
        if n == self.complex.lo:
            return {} if not any(fvec.values()) else None
        return self.degrees[n].boundary_solver.solve(fvec)

    def classify(self, fvec: Vec, n: int) -> Optional[Vec]:
        """Coordinates of the class of a cocycle over the representatives (None if not a cocycle)."""
        if not self.complex.d(n).apply(fvec) == {} and n in self.complex.diffs:
            return None
        r = self.degrees[n].quotient.classify(fvec)
        if r is None:
            return None
        return r[0]

    def induced_map(self, n: int, A: LinearMap, target: Optional["CohomologyResult"] = None) -> LinearMap:
        """Matrix of a chain map (degree n component) on cohomology, in representative coordinates."""
        target = target or self
        cols = {}
        for j, r in enumerate(self.degrees[n].representatives):
            img = A.apply(r)
            c = target.degrees[n].quotient.classify(img)
            if c is None:
                raise ComplexError("image of a cocycle is not a cocycle")
            if c[0]:
                cols[j] = c[0]
        return LinearMap(self.complex.field, target.degrees[n].dim, self.degrees[n].dim, cols)


def cohomology(C: CochainComplex, lo: Optional[int] = None, hi: Optional[int] = None) -> CohomologyResult:
    lo = C.lo if lo is None else lo
    hi = (C.hi - 1) if hi is None else hi
    if lo < C.lo or hi > C.hi - 1:
        raise ComplexError("range %d..%d needs differentials outside the stored truncation" % (lo, hi))
    f = C.field
    out = {}
    for n in range(lo, hi + 1):
        dn = C.diffs[n]
        Z = kernel_basis(dn)
        if n == C.lo:
            bvecs: List[Vec] = []
        else:
            bvecs = [v for v in C.diffs[n - 1].columns()]
        solver = ColumnEchelon(f, C.dims[n], C.diffs[n - 1].columns() if n > C.lo else [])
        im = solver.image_basis()
        q = QuotientData(f, C.dims[n], im, Z)
        out[n] = DegreeCohomology(n, q.quotient_dim, Z, q.representatives, q, solver)
    return CohomologyResult(C, out)


def cohomology_dims(C: CochainComplex, lo: Optional[int] = None, hi: Optional[int] = None) -> Dict[int, int]:
    """Dimensions only, by ranks: ``dim C^n - rank d^n - rank d^{n-1}``."""
    lo = C.lo if lo is None else lo
    hi = (C.hi - 1) if hi is None else hi
    if lo < C.lo or hi > C.hi - 1:
        raise ComplexError("range exceeds stored truncation")
    ranks = {}
    out = {}
    for n in range(lo, hi + 1):
        for m in (n - 1, n):
            if m not in ranks:
                ranks[m] = C.diffs[m].rank() if m in C.diffs else 0
        out[n] = C.dims[n] - ranks[n] - ranks[n - 1]
    return out


def invariant_cohomology_dims(res: CohomologyResult, elements: Sequence[Vec]) -> Dict[int, int]:
    """``dim (H^n)^inv`` from the induced action on each H^n."""
    C = res.complex
    H = _hopf_of(C)
    f = C.field
    out = {}
    for n, deg in res.degrees.items():
        acts = C.action(n)
        maps = []
        for h in elements:
            A = LinearMap.zero(f, C.dims[n], C.dims[n])
            for i, c in h.items():
                A = A + acts[i].scale(c)
            ind = res.induced_map(n, A)
            e = H.eps(h)
            if e:
                ind = ind - LinearMap.identity(f, deg.dim).scale(e)
            maps.append(ind)
        out[n] = kernel_subspace(f, deg.dim, maps).rank if deg.dim else 0
    return out
