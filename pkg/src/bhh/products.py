"""Cup product, circle operation and the structure built on them.

For a braided complex of B over ``Q`` with ``R = sum c h_i (x) h_k``:

* ``f cup g (x1 (x) x2) = (-1)^{pq} sum c f(h_k.x1) (h_i.g)(x2)``
* ``f o g (x) = sum_s (-1)^{s(q-1)} sum c f((h_k.x1) (x) (h_i.g)(x2) (x) x3)``, ``|x1| = s``

where p = |f| and q = |g|.  All cochains are sparse vectors in the ambient
``Hom(B^{(x)n}, B)`` coordinates unless stated otherwise.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .braidalg import AlgebraObject, DualCocycle
from .complexes import (
    BraidedComplex,
    ClassicalComplex,
    CochainComplex,
    CohomologyResult,
    ComplexError,
    RelativeComplex,
    RestrictionIso,
    SubComplex,
    cohomology,
    precompose,
    smash_summand,
)
from .exactlin import FieldSpec, LinearMap, Subspace, Vec, multi_index, tensor_map, tensor_maps, vec_add, vec_eq, vec_iadd, vec_scale
from .hopf import is_cosemisimple, is_semisimple
from .report import Report


def _sign(k: int, f: FieldSpec):
    return f.one if k % 2 == 0 else -f.one


def as_map(v: Vec, out_dim: int, in_dim: int, field: FieldSpec) -> LinearMap:
    cols: Dict[int, Vec] = {}
    for idx, c in v.items():
        o, q = divmod(idx, in_dim)
        cols.setdefault(q, {})[o] = c
    return LinearMap(field, out_dim, in_dim, cols)


def as_vec(m: LinearMap) -> Vec:
    out: Vec = {}
    for q, col in m.cols.items():
        for o, c in col.items():
            out[o * m.ncols + q] = c
    return out


# ---------------------------------------------------------------- braided

class BraidedProducts:
    """Cup, circle and bracket on a braided cochain complex."""

    def __init__(self, C: BraidedComplex):
        self.C = C
        self.B = C.B
        self.b = C.b
        self.f = C.field
        self.terms = C.B.Q.r_terms()

    def _check(self, n: int) -> None:
        if n not in self.C.dims:
            raise ComplexError("degree %d outside the stored truncation" % n)

    def act(self, h: int, v: Vec, n: int) -> Vec:
        return self.C.inner_action(n)[h].apply(v)

    def cup(self, fv: Vec, p: int, gv: Vec, q: int) -> Vec:
        self._check(p + q)
        b = self.b
        out: Vec = {}
        if not fv or not gv:
            return out
        P = self.B.module.power(p)
        F = as_map(fv, b, b ** p, self.f)
        for i, k, c in self.terms:
            Fk = F @ P.mats[k]
            if Fk.is_zero():
                continue
            Gi = as_map(self.act(i, gv, q), b, b ** q, self.f)
            if Gi.is_zero():
                continue
            vec_iadd(out, as_vec(self.B.mult @ tensor_map(Fk, Gi)), c)
        return vec_scale(out, _sign(p * q, self.f))

    def braided_swap_cup(self, fv: Vec, p: int, gv: Vec, q: int) -> Vec:
        """``(r^j.g) cup (r_j.f) = sum c (h_k.g) cup (h_i.f)``."""
        out: Vec = {}
        for i, k, c in self.terms:
            vec_iadd(out, self.cup(self.act(k, gv, q), q, self.act(i, fv, p), p), c)
        return out

    def braided_commutator(self, fv: Vec, p: int, gv: Vec, q: int) -> Vec:
        return vec_add(self.cup(fv, p, gv, q), self.braided_swap_cup(fv, p, gv, q), -_sign(p * q, self.f))

    def circle(self, fv: Vec, p: int, gv: Vec, q: int) -> Vec:
        n = p + q - 1
        if p == 0 or not fv or not gv:
            return {}
        self._check(n)
        b = self.b
        f = self.f
        F = as_map(fv, b, b ** p, f)
        out = LinearMap.zero(f, b, b ** n)
        for s in range(p):
            Ps = self.B.module.power(s)
            rest = LinearMap.identity(f, b ** (p - 1 - s))
            sg = _sign(s * (q - 1), f)
            for i, k, c in self.terms:
                Gi = as_map(self.act(i, gv, q), b, b ** q, f)
                if Gi.is_zero():
                    continue
                T = tensor_maps([Ps.mats[k], Gi, rest])
                out = out + (F @ T).scale(c * sg)
        return as_vec(out)

    def naive_bracket(self, fv: Vec, p: int, gv: Vec, q: int) -> Vec:
        out = self.circle(fv, p, gv, q)
        sg = _sign((p - 1) * (q - 1), self.f)
        for i, k, c in self.terms:
            vec_iadd(out, self.circle(self.act(k, gv, q), q, self.act(i, fv, p), p), -sg * c)
        return out

    def d(self, v: Vec, n: int) -> Vec:
        return self.C.diffs[n].apply(v)

    def d_hom(self, v: Vec, n: int) -> Vec:
        """``(-1)^{n+1} f o d_BB``."""
        from .complexes import bar_differential
        T = precompose(bar_differential(self.B.mult, self.b, n + 1), self.b)
        return vec_scale(T.apply(v), _sign(n + 1, self.f))

    def pi(self) -> Vec:
        return self.C.pi()

    def unit(self) -> Vec:
        return self.C.unit_cochain()


class ClassicalProducts:
    """Cup and circle on ``C(A, M)`` computed by direct evaluation on monomials.

    ``value_mult`` multiplies values (``M (x) M -> M``); for the circle
    product M must be A itself.
    """

    def __init__(self, C: ClassicalComplex, value_mult: LinearMap):
        self.C = C
        self.f = C.field
        self.a = C.a
        self.m = C.m
        self.vm = value_mult

    def cup(self, fv: Vec, p: int, gv: Vec, q: int) -> Vec:
        a, m = self.a, self.m
        ap, aq = a ** p, a ** q
        sg = _sign(p * q, self.f)
        out: Vec = {}
        for i1, s in fv.items():
            o1, x1 = divmod(i1, ap)
            for i2, t in gv.items():
                o2, x2 = divmod(i2, aq)
                for o, u in self.vm.cols.get(o1 * m + o2, {}).items():
                    vec_iadd(out, {o * ap * aq + x1 * aq + x2: sg * s * t * u})
        return out

    def circle(self, fv: Vec, p: int, gv: Vec, q: int) -> Vec:
        """``sum_s (-1)^{s(q-1)} f(x_1..x_s, g(x_{s+1}..x_{s+q}), ...)``."""
        if self.m != self.a:
            raise ComplexError("circle product needs coefficients in A")
        a = self.a
        n = p + q - 1
        if p == 0 or n < 0:
            return {}
        out: Vec = {}
        # rows of f as a function of its p inputs
        fmap: Dict[Tuple[int, ...], Vec] = {}
        for idx, c in fv.items():
            o, x = divmod(idx, a ** p)
            vec_iadd(fmap.setdefault(multi_index(x, a, p), {}), {o: c})
        gmap: Dict[Tuple[int, ...], Vec] = {}
        for idx, c in gv.items():
            o, x = divmod(idx, a ** q)
            vec_iadd(gmap.setdefault(multi_index(x, a, q), {}), {o: c})
        for x in itertools.product(range(a), repeat=n):
            val: Vec = {}
            for s in range(p):
                gval = gmap.get(tuple(x[s:s + q]))
                if not gval:
                    continue
                sg = _sign(s * (q - 1), self.f)
                for y, c in gval.items():
                    fval = fmap.get(tuple(x[:s]) + (y,) + tuple(x[s + q:]))
                    if fval:
                        vec_iadd(val, fval, sg * c)
            xi = 0
            for t in x:
                xi = xi * a + t
            for o, c in val.items():
                out[o * a ** n + xi] = c
        return {k: v for k, v in out.items() if v}


# ------------------------------------------------------------ structure checks

def _basis(dim: int, f: FieldSpec) -> List[Vec]:
    return [{i: f.one} for i in range(dim)]


def check_cup_structure(P: BraidedProducts, max_total: int, rel: Optional[RelativeComplex] = None) -> Report:
    """Unit, associativity, Leibniz, H-linearity and relative closure of the cup product."""
    C = P.C
    f = P.f
    rep = Report("cup product on %s" % C.name)
    degs = [n for n in C.dims if n <= max_total]
    basis = {n: _basis(C.dims[n], f) for n in degs}
    unit = P.unit()
    bad = None
    for n in degs:
        for v in basis[n]:
            if not (vec_eq(P.cup(unit, 0, v, n), v) and vec_eq(P.cup(v, n, unit, 0), v)):
                bad = (n, v)
                break
    rep.add("unit", bad is None, {"cochain": bad})
    # cache pairwise products of basis cochains
    cache: Dict[Tuple[int, int, int, int], Vec] = {}

    def cup_b(p, i, q, j):
        key = (p, i, q, j)
        if key not in cache:
            cache[key] = P.cup(basis[p][i], p, basis[q][j], q)
        return cache[key]

    def cup_vec_basis(v: Vec, p: int, q: int, j: int) -> Vec:
        out: Vec = {}
        for i, c in v.items():
            vec_iadd(out, cup_b(p, i, q, j), c)
        return out

    bad = None
    for p, q, r in itertools.product(degs, repeat=3):
        if p + q + r > max_total:
            continue
        for i in range(C.dims[p]):
            for j in range(C.dims[q]):
                fg = cup_b(p, i, q, j)
                for k in range(C.dims[r]):
                    lhs = cup_vec_basis(fg, p + q, r, k)
                    rhs = P.cup(basis[p][i], p, cup_b(q, j, r, k), q + r)
                    if not vec_eq(lhs, rhs):
                        bad = (p, i, q, j, r, k)
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    rep.add("associativity", bad is None, {"basis": bad})
    bad = None
    for p, q in itertools.product(degs, repeat=2):
        if p + q + 1 > max_total or p + q not in C.diffs:
            continue
        for i in range(C.dims[p]):
            for j in range(C.dims[q]):
                fv, gv = basis[p][i], basis[q][j]
                lhs = P.d(cup_b(p, i, q, j), p + q)
                rhs = P.cup(P.d(fv, p), p + 1, gv, q)
                vec_iadd(rhs, P.cup(fv, p, P.d(gv, q), q + 1), _sign(p, f))
                if not vec_eq(lhs, rhs):
                    bad = (p, i, q, j)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("Leibniz rule", bad is None, {"basis": bad})
    H = C.B.hopf
    bad = None
    for p, q in itertools.product(degs, repeat=2):
        if p + q > min(max_total, 2):
            continue
        for h in range(H.dim):
            for i in range(C.dims[p]):
                for j in range(C.dims[q]):
                    lhs = P.act(h, cup_b(p, i, q, j), p + q)
                    rhs: Vec = {}
                    for a1, a2, c in H.delta_terms(h):
                        vec_iadd(rhs, P.cup(P.act(a1, basis[p][i], p), p, P.act(a2, basis[q][j], q), q), c)
                    if not vec_eq(lhs, rhs):
                        bad = (h, p, i, q, j)
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    rep.add("H-linearity", bad is None, {"basis": bad})
    if rel is not None:
        bad = None
        for p, q in itertools.product(degs, repeat=2):
            if p + q > max_total:
                continue
            for u in rel.spaces[p].basis:
                for v in rel.spaces[q].basis:
                    if not rel.spaces[p + q].contains(P.cup(u, p, v, q)):
                        bad = (p, q)
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("relative subcomplex closed under cup", bad is None, {"degrees": bad})
    return rep


def maurer_cartan_check(P: BraidedProducts, max_degree: int = 3) -> Report:
    """``d_Hom(pi) - pi cup pi = 0`` and ``d_c = d_Hom - [pi, -]`` on basis cochains."""
    C = P.C
    f = P.f
    rep = Report("Maurer-Cartan: %s" % C.name)
    pi = P.pi()
    mc = vec_add(P.d_hom(pi, 1), P.cup(pi, 1, pi, 1), -f.one)
    rep.add("d_Hom(pi) - pi cup pi = 0", not mc)
    bad = None
    for n in sorted(C.diffs):
        if n > max_degree:
            continue
        for v in _basis(C.dims[n], f):
            lhs = P.d(v, n)
            br = vec_add(P.cup(pi, 1, v, n), P.cup(v, n, pi, 1), -_sign(n, f))
            rhs = vec_add(P.d_hom(v, n), br, -f.one)
            if not vec_eq(lhs, rhs):
                bad = (n, v)
                break
        if bad:
            break
    rep.add("d_c = d_Hom - [pi, -]", bad is None, {"cochain": bad})
    return rep


def commutator_identity_defect(P: BraidedProducts, fv: Vec, p: int, gv: Vec, q: int) -> Vec:
    """LHS minus RHS of the commutator-coboundary identity for arbitrary cochains."""
    f = P.f
    lhs: Vec = {}
    if p >= 1:
        vec_iadd(lhs, P.d(P.circle(fv, p, gv, q), p + q - 1), _sign(p + 1, f))
    vec_iadd(lhs, P.circle(P.d(fv, p), p + 1, gv, q), _sign(p, f))
    vec_iadd(lhs, P.circle(fv, p, P.d(gv, q), q + 1), -f.one)
    return vec_add(lhs, P.braided_commutator(fv, p, gv, q), -f.one)


def commutator_witness(P: BraidedProducts, fv: Vec, p: int, gv: Vec, q: int) -> Vec:
    """``h = (-1)^{p+1} f o g``; for cocycles ``d h`` is the braided commutator."""
    return vec_scale(P.circle(fv, p, gv, q), _sign(p + 1, P.f))


def random_cochain(dim: int, rng: random.Random, f: FieldSpec, density: float = 0.3) -> Vec:
    out = {}
    for i in range(dim):
        if rng.random() < density:
            x = rng.randint(-3, 3)
            if x:
                out[i] = f(x)
    if not out and dim:
        out[rng.randrange(dim)] = f.one
    return out


def random_combination(vectors: Sequence[Vec], rng: random.Random, f: FieldSpec) -> Vec:
    out: Vec = {}
    for v in vectors:
        x = rng.randint(-2, 2)
        if x:
            vec_iadd(out, v, f(x))
    if not out and vectors:
        out = dict(vectors[rng.randrange(len(vectors))])
    return out


def check_commutator_identities(P: BraidedProducts, n_pairs: int, seed: int, max_degree: int = 2,
                                cohom: Optional[CohomologyResult] = None) -> Report:
    rng = random.Random(seed)
    C = P.C
    f = P.f
    rep = Report("commutator identities")
    degs = [n for n in C.dims if n <= max_degree]
    bad = None
    for t in range(n_pairs):
        p, q = rng.choice(degs), rng.choice(degs)
        fv = random_cochain(C.dims[p], rng, f)
        gv = random_cochain(C.dims[q], rng, f)
        if commutator_identity_defect(P, fv, p, gv, q):
            bad = (t, p, q)
            break
    rep.add("commutator-coboundary identity on %d random cochain pairs" % n_pairs, bad is None, {"pair": bad})
    if cohom is None:
        cohom = cohomology(C, 0, max_degree)
    bad = None
    for t in range(n_pairs):
        p, q = rng.choice(degs), rng.choice(degs)
        fv = random_combination(cohom[p].cocycles, rng, f)
        gv = random_combination(cohom[q].cocycles, rng, f)
        comm = P.braided_commutator(fv, p, gv, q)
        if p + q == 0:
            ok = not comm
        else:
            h = commutator_witness(P, fv, p, gv, q)
            ok = vec_eq(P.d(h, p + q - 1), comm)
        if not ok:
            bad = (t, p, q)
            break
    rep.add("circle witness on %d random cocycle pairs" % n_pairs, bad is None, {"pair": bad})
    return rep


# ---------------------------------------------------------- cohomology ring

@dataclass
class GradedRing:
    degrees: List[int]
    dims: Dict[int, int]
    representatives: Dict[int, List[Vec]]
    structure: Dict[Tuple[int, int, int, int], Vec]
    actions: Dict[int, List[LinearMap]] = dc_field(default_factory=dict)
    certificates: int = 0
    failures: List = dc_field(default_factory=list)
    unit_class: Optional[Vec] = None
    associator_certificates: int = 0

    def as_dict(self):
        return {
            "dims": {str(k): v for k, v in sorted(self.dims.items())},
            "structure": {"%d,%d,%d,%d" % k: {str(i): str(c) for i, c in sorted(v.items())} for k, v in sorted(self.structure.items())},
            "certificates": self.certificates,
            "associator_certificates": self.associator_certificates,
            "unit_class": None if self.unit_class is None else {str(i): str(c) for i, c in sorted(self.unit_class.items())},
        }


def cohomology_ring(P: BraidedProducts, res: CohomologyResult, max_degree: int, certify: bool = True) -> GradedRing:
    """Products of representatives reduced to classes, with braided-commutativity certificates."""
    C = P.C
    missing = [n for n in range(0, max_degree + 1) if n not in res.degrees]
    if missing:
        raise ComplexError("cohomology not computed in degrees %s" % missing)
    degs = [n for n in sorted(res.degrees) if n <= max_degree]
    reps = {n: res.representatives(n) for n in degs}
    structure = {}
    certs = 0
    failures = []
    for p, q in itertools.product(degs, repeat=2):
        if p + q > max_degree or p + q not in res.degrees:
            continue
        for i, u in enumerate(reps[p]):
            for j, v in enumerate(reps[q]):
                prod = P.cup(u, p, v, q)
                cl = res[p + q].quotient.classify(prod)
                if cl is None:
                    failures.append(("product not a cocycle", p, i, q, j))
                    continue
                structure[(p, i, q, j)] = cl[0]
                if certify:
                    comm = P.braided_commutator(u, p, v, q)
                    if p + q == 0:
                        ok = not comm
                    else:
                        w = res.is_coboundary(comm, p + q)
                        ok = w is not None and vec_eq(P.d(w, p + q - 1), comm)
                    if ok:
                        certs += 1
                    else:
                        failures.append(("braided commutator", p, i, q, j))
    unit_class = res[0].quotient.classify(P.unit()) if 0 in res.degrees else None
    if unit_class is None:
        failures.append(("unit is not a cocycle",))
    else:
        unit_class = unit_class[0]
    # associators of representatives are certified coboundaries (here: zero)
    assoc = 0
    for p, q, r in itertools.product(degs, repeat=3):
        if p + q + r > max_degree:
            continue
        for u in reps[p]:
            for v in reps[q]:
                uv = P.cup(u, p, v, q)
                for w in reps[r]:
                    defect = vec_add(P.cup(uv, p + q, w, r), P.cup(u, p, P.cup(v, q, w, r), q + r), -P.f.one)
                    wit = res.is_coboundary(defect, p + q + r) if defect else {}
                    if wit is not None and (not defect or vec_eq(P.d(wit, p + q + r - 1), defect)):
                        assoc += 1
                    else:
                        failures.append(("associator", p, q, r))
    actions = {}
    if C.has_action:
        for n in degs:
            actions[n] = [res.induced_map(n, A) for A in C.action(n)]
    return GradedRing(degs, {n: res[n].dim for n in degs}, reps, structure, actions, certs, failures,
                      unit_class, assoc)


# -------------------------------------------- relative / classical comparison

def restricted_cup_check(P: BraidedProducts, iso: RestrictionIso, max_total: int) -> Report:
    """Restricting the braided cup on relative cochains gives the classical cup on C(A,B)."""
    rel = iso.rel
    B = P.B
    cp = ClassicalProducts(iso.cl, B.mult)
    rep = Report("restricted cup = classical cup")
    bad = None
    for p in rel.spaces:
        for q in rel.spaces:
            if p + q > max_total or p + q not in iso.maps:
                continue
            Sp, Sq = rel.spaces[p], rel.spaces[q]
            for i, u in enumerate(Sp.basis):
                for j, v in enumerate(Sq.basis):
                    prod = P.cup(u, p, v, q)
                    coords = rel.spaces[p + q].coordinates(prod)
                    lhs = iso.maps[p + q].apply(coords) if coords is not None else None
                    rhs = cp.cup(iso.maps[p].apply({i: P.f.one}), p, iso.maps[q].apply({j: P.f.one}), q)
                    if lhs is None or not vec_eq(lhs, rhs):
                        bad = (p, i, q, j)
                        break
                if bad:
                    break
            if bad:
                break
    rep.add("restriction is multiplicative", bad is None, {"basis": bad})
    return rep


# -------------------------------------------------------- group-case results

class SmashGroupData:
    """Classical data for ``B = A * kG``: C(A,B), its summands C(A,Ag), and the D-action."""

    def __init__(self, B: AlgebraObject, N: int, braided: Optional[BraidedComplex] = None):
        from .complexes import braided_cochain_complex, relative_cochain_complex, restriction_iso
        if B.smash is None or getattr(B.smash.E, "group", None) is None:
            raise ComplexError("needs B = A * kG built as a smash product")
        self.B = B
        self.G = B.smash.E.group
        self.N = N
        C = braided or braided_cochain_complex(B, N)
        self.rel = relative_cochain_complex(C)
        self.iso = restriction_iso(self.rel)
        self.cl = self.iso.cl
        self.res = cohomology(self.cl, 0, N - 1)
        self.cp = ClassicalProducts(self.cl, B.mult)
        f = B.field
        e = B.smash.e_dim
        a = B.smash.a_dim
        self.f = f
        # summand projections: output index o = a_idx * e + g
        self.summand_space = {}
        for g in self.G.elements():
            self.summand_space[g] = {}
            for n in range(N + 1):
                an = a ** n
                basis = [{(ai * e + g) * an + x: f.one} for ai in range(a) for x in range(an)]
                self.summand_space[g][n] = Subspace(f, self.cl.dims[n], basis)

    def action(self, n: int) -> List[LinearMap]:
        return self.iso.transported_action(n)

    def eop_index(self, g: int) -> int:
        """Index in the double of the group element g (as g * sum_x delta_x)."""
        return g

    def act_group(self, g: int, v: Vec, n: int) -> Vec:
        from .hopf import double_embeddings
        emb, _ = double_embeddings(self.B.Q)
        h = emb.column(g)
        acts = self.action(n)
        out: Vec = {}
        for i, c in h.items():
            vec_iadd(out, acts[i].apply(v), c)
        return out

    def summand_cohomology(self, g: int) -> Dict[int, List[Vec]]:
        """Cocycle representatives of HH^n(A, Ag), as cochains of C(A,B)."""
        out = {}
        for n in range(self.N):
            S = self.summand_space[g][n]
            Z = self.res[n].cocycles
            # cocycles in the summand: the cocycle space is graded, so project
            proj = [self._project(z, g, n) for z in Z]
            sub = Subspace(self.f, self.cl.dims[n], [v for v in proj if v])
            bdry = [self._project(v, g, n) for v in (self.cl.diffs[n - 1].columns() if n > 0 else [])]
            from .exactlin import QuotientData, ColumnEchelon
            im = ColumnEchelon(self.f, self.cl.dims[n], bdry).image_basis()
            q = QuotientData(self.f, self.cl.dims[n], im, sub.basis)
            out[n] = q.representatives
        return out

    def _project(self, v: Vec, g: int, n: int) -> Vec:
        e = self.B.smash.e_dim
        an = self.cl.a ** n
        return {k: c for k, c in v.items() if (k // an) % e == g}


def g_decomposition(data: SmashGroupData) -> Report:
    rep = Report("G-decomposition of HH(A, A*G)")
    total = {n: data.res[n].dim for n in range(data.N)}
    per = {g: {n: len(v) for n, v in data.summand_cohomology(g).items()} for g in data.G.elements()}
    for n in range(data.N):
        s = sum(per[g][n] for g in per)
        rep.add("degree %d: sum of summands = total" % n, s == total[n], {"sum": s, "total": total[n]})
    # the coaction by E* is the grading
    from .complexes import output_dual_action
    ok = True
    for n in range(data.N):
        trans = data.action(n)
        direct = output_dual_action(data.B, data.cl, n)
        from .hopf import double_embeddings
        _, emb = double_embeddings(data.B.Q)
        for x in data.G.elements():
            h = emb.column(x)
            T = LinearMap.zero(data.f, data.cl.dims[n], data.cl.dims[n])
            for i, c in h.items():
                T = T + trans[i].scale(c)
            if not T == direct[x]:
                ok = False
    rep.add("transported coaction = G-grading", ok)
    e = data.G.identity
    reps = data.summand_cohomology(e)
    ok = True
    for p in reps:
        for q in reps:
            if p + q >= data.N:
                continue
            for u in reps[p]:
                for v in reps[q]:
                    prod = data.cp.cup(u, p, v, q)
                    if not data.summand_space[e][p + q].contains(prod):
                        ok = False
    rep.add("identity component closed under cup", ok)
    rep.data["dims"] = {str(g): per[g] for g in per}
    return rep


def _is_coboundary(data: SmashGroupData, v: Vec, n: int) -> bool:
    if n == 0:
        return not v
    w = data.res.is_coboundary(v, n)
    return w is not None and vec_eq(data.cl.diffs[n - 1].apply(w), v)


@dataclass
class IdealData:
    """Generators ``(1-g).Y`` of I_g, with Y running over a basis of HH(A) up to ``cap``."""
    g: int
    generators: Dict[int, List[Vec]]
    cap: int


def ideal_generators(data: SmashGroupData, g: int, cap: int) -> IdealData:
    Ys = data.summand_cohomology(data.G.identity)
    gens = {}
    for p, reps in Ys.items():
        if p > cap:
            continue
        gens[p] = [v for v in (vec_add(Y, data.act_group(g, Y, p), -data.f.one) for Y in reps) if v]
    return IdealData(g, gens, cap)


def ideal_annihilation_check(data: SmashGroupData, g: int, max_total: int) -> Report:
    """Generators ``(1-g).Y`` of I_g annihilate HH(A, Ag) on both sides, and HH(A) acts centrally."""
    rep = Report("ideal I_g, g=%s" % data.G.names[g])
    e = data.G.identity
    Ys = data.summand_cohomology(e)
    Zs = data.summand_cohomology(g)
    ideal = ideal_generators(data, g, max_total)
    inside = all(data.summand_space[e][p].contains(v) for p, vs in ideal.generators.items() for v in vs)
    rep.add("generators lie in HH(A)", inside)
    if g == e:
        rep.add("I_e = 0", not any(ideal.generators.values()))
    certs = 0
    fails = []
    for p in Ys:
        for q in Zs:
            if p + q > max_total or p + q >= data.N:
                continue
            for Y in Ys[p]:
                gY = data.act_group(g, Y, p)
                diff = vec_add(Y, gY, -data.f.one)
                for Z in Zs[q]:
                    left = data.cp.cup(diff, p, Z, q)
                    right = data.cp.cup(Z, q, diff, p)
                    central = vec_add(data.cp.cup(Y, p, Z, q), data.cp.cup(Z, q, Y, p), -_sign(p * q, data.f))
                    for name, v in (("left", left), ("right", right), ("central", central)):
                        if _is_coboundary(data, v, p + q):
                            certs += 1
                        else:
                            fails.append((name, p, q))
    rep.add("annihilation and centrality certificates", not fails, {"failures": fails[:5]})
    rep.data["certificates"] = certs
    return rep


def center_inclusion_check(data: SmashGroupData, max_total: int) -> Report:
    """Invariant classes commute (graded) with every class of HH(A,B)."""
    rep = Report("HH(B) in the center of HH(A,B)")
    E = data.B.smash.E
    if not (is_semisimple(E) and is_cosemisimple(E)):
        rep.add_na("center inclusion", "E is not semisimple and cosemisimple")
        return rep
    from .complexes import invariant_cohomology_dims
    f = data.f
    certs = 0
    fails = []
    for p in range(min(max_total, data.N - 1) + 1):
        # invariant classes: representatives fixed (mod coboundaries) by the group
        reps = data.res[p].representatives
        maps = []
        for g in data.G.elements():
            cols = {}
            for j, r in enumerate(reps):
                c = data.res[p].quotient.classify(data.act_group(g, r, p))
                diff = dict(c[0])
                vec_iadd(diff, {j: f.one}, -f.one)
                if diff:
                    cols[j] = diff
            maps.append(LinearMap(f, len(reps), len(reps), cols))
        from .complexes import kernel_subspace
        K = kernel_subspace(f, len(reps), maps)
        inv = []
        for coords in K.basis:
            v: Vec = {}
            for j, c in coords.items():
                vec_iadd(v, reps[j], c)
            inv.append(v)
        for q in range(min(max_total - p, data.N - 1) + 1):
            for u in inv:
                for w in data.res[q].representatives:
                    comm = vec_add(data.cp.cup(u, p, w, q), data.cp.cup(w, q, u, p), -_sign(p * q, f))
                    if _is_coboundary(data, comm, p + q):
                        certs += 1
                    else:
                        fails.append((p, q))
    rep.add("invariant classes are central", not fails, {"failures": fails[:5]})
    rep.data["certificates"] = certs
    return rep


def twist_product_equality(B: AlgebraObject, J: DualCocycle, N: int, max_total: int) -> Report:
    """``(J_l.f) cup (J^l.g)`` in C(A,B) equals ``f cup g`` in C(A,B_J) on basis cochains."""
    from .braidalg import j_twist_algebra, twisted_double
    from .complexes import braided_cochain_complex, relative_cochain_complex, restriction_iso
    from .braidalg import dual_cocycle_check
    rep = Report("J-twisted cup products")
    dc = dual_cocycle_check(J)
    rep.extend(dc, prefix="cocycle")
    if not dc.passed:
        return rep
    QJ = twisted_double(J)
    BJ = j_twist_algebra(B, J, QJ)
    C = braided_cochain_complex(B, N)
    rel = relative_cochain_complex(C)
    iso = restriction_iso(rel)
    cl = iso.cl
    cp = ClassicalProducts(cl, B.mult)
    cpJ = ClassicalProducts(cl, BJ.mult)
    f = B.field
    acts = {n: iso.transported_action(n) for n in range(N + 1)}
    bad = None
    untw = None
    sd = B.smash
    e = sd.e_dim
    for p in range(N + 1):
        for q in range(N + 1):
            if p + q > max_total:
                continue
            for i in range(cl.dims[p]):
                fv = {i: f.one}
                for j in range(cl.dims[q]):
                    gv = {j: f.one}
                    lhs: Vec = {}
                    for l, k, c in J.terms():
                        vec_iadd(lhs, cp.cup(acts[p][l].apply(fv), p, acts[q][k].apply(gv), q), c)
                    rhs = cpJ.cup(fv, p, gv, q)
                    if not vec_eq(lhs, rhs):
                        bad = (p, i, q, j)
                    # f or g valued in A = A e
                    a_p = a_q = False
                    o1 = i // (sd.a_dim ** p)
                    o2 = j // (sd.a_dim ** q)
                    if o1 % e == sd.E.group.identity or o2 % e == sd.E.group.identity:
                        if not vec_eq(rhs, cp.cup(fv, p, gv, q)):
                            untw = (p, i, q, j)
                if bad:
                    break
            if bad:
                break
    rep.add("C(A,B)_J = C(A,B_J) products", bad is None, {"basis": bad})
    rep.add("products with C(A) untwisted", untw is None, {"basis": untw})
    return rep
