"""Exact scalars, sparse linear maps and elimination over Q and GF(p).

Vectors are sparse dicts ``{index: scalar}`` holding only nonzero entries.
A :class:`LinearMap` stores its columns as such vectors, so applying a map
to a basis vector is a dictionary lookup.

Tensor-power bases are ordered lexicographically with the leftmost factor
most significant: the monomial ``e_{i1} (x) ... (x) e_{in}`` of ``V^{(x)n}``
has flat index ``((i1*d + i2)*d + ...)*d + in``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Vec = Dict[int, object]

DENSE_COLUMN_THRESHOLD = 512


class FieldMismatch(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


class Fp:
    """Element of GF(p), stored as a representative in ``range(p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatch("GF(%d) vs GF(%d)" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.p)
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d (mod %d)" % (self.v, self.p)

    __str__ = __repr__


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: the rationals, or GF(p) for a prime p."""

    kind: str = "Q"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "GF"):
            raise ValueError("unknown field kind %r" % (self.kind,))
        if self.kind == "GF" and not _is_prime(self.p):
            raise ValueError("GF(p) needs a prime p, got %r" % (self.p,))
        if self.kind == "Q" and self.p != 0:
            raise ValueError("the rationals take no modulus")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("Q", 0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("GF", p)

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x) -> object:
        """Coerce an int, Fraction, string like ``"3/4"`` or Fp into this field."""
        if self.kind == "Q":
            if isinstance(x, Fp):
                raise FieldMismatch("GF(%d) element used over Q" % x.p)
            if isinstance(x, str):
                return Fraction(x)
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch("GF(%d) element used over GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("%s has no image in GF(%d)" % (x, self.p))
            return Fp(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return Fp(int(x), self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def label(self) -> str:
        return "QQ" if self.kind == "Q" else "GF(%d)" % self.p

    def owns(self, x) -> bool:
        if self.kind == "Q":
            return isinstance(x, (int, Fraction))
        return isinstance(x, Fp) and x.p == self.p or isinstance(x, int)


QQ = FieldSpec.rationals()


# ---------------------------------------------------------------- vectors

def vec_add(u: Vec, v: Vec, c=1) -> Vec:
    """Return u + c*v."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def vec_iadd(u: Vec, v: Vec, c=1) -> None:
    for k, x in v.items():
        y = u.get(k, 0) + c * x
        if y:
            u[k] = y
        else:
            u.pop(k, None)


def vec_scale(v: Vec, c) -> Vec:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_eq(u: Vec, v: Vec) -> bool:
    keys = set(u) | set(v)
    return all(u.get(k, 0) == v.get(k, 0) for k in keys)


def dense(v: Vec, n: int, zero=0) -> list:
    out = [zero] * n
    for k, x in v.items():
        out[k] = x
    return out


def sparse(values: Sequence) -> Vec:
    return {i: x for i, x in enumerate(values) if x}


def unit_vec(i: int, one=1) -> Vec:
    return {i: one}


# ------------------------------------------------------------ linear maps

class LinearMap:
    """A matrix ``codomain_dim x domain_dim`` stored column-sparse."""

    __slots__ = ("field", "nrows", "ncols", "cols")

    def __init__(self, field: FieldSpec, nrows: int, ncols: int, cols: Optional[Dict[int, Vec]] = None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.cols = {} if cols is None else {j: c for j, c in cols.items() if c}

    @property
    def domain_dim(self) -> int:
        return self.ncols

    @property
    def codomain_dim(self) -> int:
        return self.nrows

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], ncols: Optional[int] = None) -> "LinearMap":
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        cols: Dict[int, Vec] = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for j, x in enumerate(row):
                x = field(x)
                if x:
                    cols.setdefault(j, {})[i] = x
        return cls(field, nrows, ncols, cols)

    @classmethod
    def from_columns(cls, field: FieldSpec, nrows: int, columns: Sequence[Vec]) -> "LinearMap":
        return cls(field, nrows, len(columns), {j: dict(c) for j, c in enumerate(columns) if c})

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "LinearMap":
        one = field.one
        return cls(field, n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def zero(cls, field: FieldSpec, nrows: int, ncols: int) -> "LinearMap":
        return cls(field, nrows, ncols, {})

    def column(self, j: int) -> Vec:
        return self.cols.get(j, {})

    def columns(self) -> List[Vec]:
        return [self.cols.get(j, {}) for j in range(self.ncols)]

    def rows(self) -> List[Vec]:
        out: List[Vec] = [dict() for _ in range(self.nrows)]
        for j, c in self.cols.items():
            for i, x in c.items():
                out[i][j] = x
        return out

    def to_rows(self) -> List[list]:
        zero = self.field.zero
        out = [[zero] * self.ncols for _ in range(self.nrows)]
        for j, c in self.cols.items():
            for i, x in c.items():
                out[i][j] = x
        return out

    def entry(self, i: int, j: int):
        return self.cols.get(j, {}).get(i, self.field.zero)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols.values())

    def _check(self, other: "LinearMap") -> None:
        if self.field != other.field:
            raise FieldMismatch("%s vs %s" % (self.field.label(), other.field.label()))

    def apply(self, v: Vec) -> Vec:
        out: Vec = {}
        for j, x in v.items():
            c = self.cols.get(j)
            if c:
                vec_iadd(out, c, x)
        return out

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError("cannot compose %dx%d with %dx%d" % (self.nrows, self.ncols, other.nrows, other.ncols))
        cols = {}
        for j, c in other.cols.items():
            v = self.apply(c)
            if v:
                cols[j] = v
        return LinearMap(self.field, self.nrows, other.ncols, cols)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return self._combine(other, 1)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self._combine(other, -1)

    def _combine(self, other: "LinearMap", c) -> "LinearMap":
        self._check(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        cols = {j: dict(v) for j, v in self.cols.items()}
        for j, v in other.cols.items():
            w = vec_add(cols.get(j, {}), v, c)
            if w:
                cols[j] = w
            else:
                cols.pop(j, None)
        return LinearMap(self.field, self.nrows, self.ncols, cols)

    def __neg__(self) -> "LinearMap":
        return self.scale(-1)

    def scale(self, c) -> "LinearMap":
        return LinearMap(self.field, self.nrows, self.ncols, {j: vec_scale(v, c) for j, v in self.cols.items()})

    def transpose(self) -> "LinearMap":
        cols: Dict[int, Vec] = {}
        for j, c in self.cols.items():
            for i, x in c.items():
                cols.setdefault(i, {})[j] = x
        return LinearMap(self.field, self.ncols, self.nrows, cols)

    T = property(transpose)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        for j in set(self.cols) | set(other.cols):
            if not vec_eq(self.cols.get(j, {}), other.cols.get(j, {})):
                return False
        return True

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.cols.values())

    def restrict_columns(self, idx: Sequence[int]) -> "LinearMap":
        return LinearMap(self.field, self.nrows, len(idx), {k: self.cols[j] for k, j in enumerate(idx) if j in self.cols})

    def __repr__(self):
        return "LinearMap(%s, %dx%d, nnz=%d)" % (self.field.label(), self.nrows, self.ncols, self.nnz())

    # elimination-backed queries
    def rank(self) -> int:
        return ColumnEchelon(self.field, self.nrows, self.columns()).rank

    def kernel(self) -> List[Vec]:
        return kernel_basis(self)

    def inverse(self) -> "LinearMap":
        if self.nrows != self.ncols:
            raise ValueError("non-square map has no inverse")
        ech = ColumnEchelon(self.field, self.nrows, self.columns())
        if ech.rank != self.nrows:
            raise ZeroDivisionError("map is singular")
        one = self.field.one
        cols = {}
        for i in range(self.nrows):
            x = ech.solve({i: one})
            cols[i] = x
        return LinearMap(self.field, self.ncols, self.nrows, cols)


def tensor_map(f: LinearMap, g: LinearMap) -> LinearMap:
    """Kronecker product; the left factor indexes the most significant digit."""
    f._check(g)
    cols = {}
    gr, gc = g.nrows, g.ncols
    for j1, c1 in f.cols.items():
        for j2, c2 in g.cols.items():
            col = {}
            for i1, x in c1.items():
                base = i1 * gr
                for i2, y in c2.items():
                    col[base + i2] = x * y
            cols[j1 * gc + j2] = col
    return LinearMap(f.field, f.nrows * gr, f.ncols * gc, cols)


def tensor_maps(maps: Sequence[LinearMap]) -> LinearMap:
    out = maps[0]
    for m in maps[1:]:
        out = tensor_map(out, m)
    return out


def direct_sum(field: FieldSpec, blocks: Sequence[LinearMap]) -> LinearMap:
    cols = {}
    r = c = 0
    for b in blocks:
        for j, v in b.cols.items():
            cols[c + j] = {r + i: x for i, x in v.items()}
        r += b.nrows
        c += b.ncols
    return LinearMap(field, r, c, cols)


# ------------------------------------------------------------ elimination

def _integer_column(v: Vec) -> Tuple[Dict[int, int], Fraction]:
    """Scale a rational vector to a primitive integer one; returns (w, s) with w = s*v."""
    den = 1
    for x in v.values():
        d = x.denominator if isinstance(x, Fraction) else 1
        den = den * d // math.gcd(den, d)
    w = {k: int(x * den) for k, x in v.items()}
    g = 0
    for x in w.values():
        g = math.gcd(g, x)
    if g > 1:
        w = {k: x // g for k, x in w.items()}
    return w, Fraction(den, g or 1)


def _primitive(w: Dict[int, int], combo: Dict[int, int]) -> None:
    g = 0
    for x in w.values():
        g = math.gcd(g, x)
        if g == 1:
            return
    for x in combo.values():
        g = math.gcd(g, x)
        if g == 1:
            return
    if g > 1:
        for k in w:
            w[k] //= g
        for k in combo:
            combo[k] //= g


class ColumnEchelon:
    """Column echelon form of a list of vectors with combination tracking.

    Each input vector is reduced against the pivots found so far.  Vectors that
    reduce to zero yield kernel relations; the others become pivots whose
    expression in the inputs is recorded.  ``solve`` then expresses any target
    in the span as a combination of the inputs.

    Small inputs go through a dense Fraction routine; above
    ``DENSE_COLUMN_THRESHOLD`` vectors, rationals are handled fraction-free on
    primitive integer vectors.  Prime fields always use integers mod p.
    """

    def __init__(self, field: FieldSpec, dim: int, vectors: Sequence[Vec], threshold: Optional[int] = None):
        self.field = field
        self.dim = dim
        self.n = len(vectors)
        if threshold is None:
            threshold = DENSE_COLUMN_THRESHOLD
        if field.kind == "GF":
            self.mode = "modp"
        elif self.n > threshold:
            self.mode = "fracfree"
        else:
            self.mode = "dense"
        # pivot column -> (reduced vector, combination over inputs)
        self.pivots: Dict[int, Tuple[dict, dict]] = {}
        self.relations: List[Vec] = []
        getattr(self, "_run_" + self.mode)(vectors)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    # -- dense rational path ------------------------------------------------
    def _run_dense(self, vectors):
        piv = self.pivots
        order: List[int] = []
        for j, v in enumerate(vectors):
            r = {k: Fraction(x) for k, x in v.items() if x}
            combo = {j: Fraction(1)}
            self._reduce_frac(r, combo)
            if r:
                c = min(r)
                a = r[c]
                r = {k: x / a for k, x in r.items()}
                combo = {k: x / a for k, x in combo.items()}
                piv[c] = (r, combo)
                order.append(c)
            else:
                self.relations.append(combo)

    def _reduce_frac(self, r, combo):
        piv = self.pivots
        while True:
            hits = [k for k in r if k in piv]
            if not hits:
                return
            c = min(hits)
            p, pc = piv[c]
            a = r[c]
            for k, x in p.items():
                y = r.get(k, 0) - a * x
                if y:
                    r[k] = y
                else:
                    r.pop(k, None)
            for k, x in pc.items():
                y = combo.get(k, 0) - a * x
                if y:
                    combo[k] = y
                else:
                    combo.pop(k, None)

    # -- fraction-free rational path --------------------------------------
    def _run_fracfree(self, vectors):
        piv = self.pivots
        for j, v in enumerate(vectors):
            w, s = _integer_column({k: Fraction(x) for k, x in v.items() if x})
            # w = s * v_j, so the combination coefficient of input j is s
            combo = {j: s.numerator}
            scale_den = s.denominator
            r = w
            # track a common denominator for the combination separately
            mult = scale_den
            r, combo, mult = self._reduce_int(r, combo, mult)
            if r:
                c = min(r)
                if r[c] < 0:
                    r = {k: -x for k, x in r.items()}
                    combo = {k: -x for k, x in combo.items()}
                piv[c] = (r, combo, mult)
            else:
                g = 0
                for x in combo.values():
                    g = math.gcd(g, x)
                self.relations.append({k: Fraction(x, g) for k, x in combo.items()})

    def _reduce_int(self, r, combo, mult):
        # invariant: sum_k combo[k] * v_k == r * ... scaled; we keep
        # r == sum_k (combo[k] / mult) * w_scaled... tracked as exact rationals
        piv = self.pivots
        while True:
            hits = [k for k in r if k in piv]
            if not hits:
                return r, combo, mult
            c = min(hits)
            p, pc, pm = piv[c]
            a = p[c]
            b = r[c]
            g = math.gcd(a, b)
            fa, fb = a // g, b // g
            # r <- fa*r - fb*p ; combos are rational: combo/mult and pc/pm
            nr = {}
            for k in set(r) | set(p):
                y = fa * r.get(k, 0) - fb * p.get(k, 0)
                if y:
                    nr[k] = y
            # new combo over common denominator mult*pm
            nc = {}
            for k in set(combo) | set(pc):
                y = fa * combo.get(k, 0) * pm - fb * pc.get(k, 0) * mult
                if y:
                    nc[k] = y
            nm = mult * pm
            # keep numbers small: divide out gcd of vector content
            gr = 0
            for x in nr.values():
                gr = math.gcd(gr, x)
            if gr > 1:
                nr = {k: x // gr for k, x in nr.items()}
                nm *= gr
            gc = nm
            for x in nc.values():
                gc = math.gcd(gc, x)
            if gc > 1:
                nc = {k: x // gc for k, x in nc.items()}
                nm //= gc
            r, combo, mult = nr, nc, nm
            if not r:
                return r, combo, mult

    # -- prime field path -------------------------------------------------
    def _run_modp(self, vectors):
        p = self.field.p
        piv = self.pivots
        for j, v in enumerate(vectors):
            r = {}
            for k, x in v.items():
                y = x.v if isinstance(x, Fp) else int(x) % p
                if y:
                    r[k] = y
            combo = {j: 1}
            while True:
                hits = [k for k in r if k in piv]
                if not hits:
                    break
                c = min(hits)
                pv, pc = piv[c]
                a = r[c]
                for k, x in pv.items():
                    y = (r.get(k, 0) - a * x) % p
                    if y:
                        r[k] = y
                    else:
                        r.pop(k, None)
                for k, x in pc.items():
                    y = (combo.get(k, 0) - a * x) % p
                    if y:
                        combo[k] = y
                    else:
                        combo.pop(k, None)
            if r:
                c = min(r)
                inv = pow(r[c], -1, p)
                r = {k: x * inv % p for k, x in r.items()}
                combo = {k: x * inv % p for k, x in combo.items()}
                piv[c] = (r, combo)
            else:
                self.relations.append({k: Fp(x, p) for k, x in combo.items()})

    # -- queries ------------------------------------------------------------
    def kernel(self) -> List[Vec]:
        return [dict(r) for r in self.relations]

    def image_basis(self) -> List[Vec]:
        """Echelon basis of the span, in field scalars."""
        out = []
        for c in sorted(self.pivots):
            entry = self.pivots[c]
            r = entry[0]
            out.append(self._to_field(r, entry))
        return out

    def pivot_columns(self) -> List[int]:
        return sorted(self.pivots)

    def _to_field(self, r, entry):
        f = self.field
        if self.mode == "modp":
            return {k: Fp(x, f.p) for k, x in r.items()}
        return {k: Fraction(x) for k, x in r.items()}

    def reduce(self, target: Vec) -> Tuple[Vec, Optional[Vec]]:
        """Reduce ``target``; return (residual, coefficients over inputs or None)."""
        f = self.field
        if self.mode == "modp":
            p = f.p
            r = {}
            for k, x in target.items():
                y = x.v if isinstance(x, Fp) else int(f(x).v)
                if y:
                    r[k] = y
            coeff: Dict[int, int] = {}
            piv = self.pivots
            while True:
                hits = [k for k in r if k in piv]
                if not hits:
                    break
                c = min(hits)
                pv, pc = piv[c]
                a = r[c]
                for k, x in pv.items():
                    y = (r.get(k, 0) - a * x) % p
                    if y:
                        r[k] = y
                    else:
                        r.pop(k, None)
                for k, x in pc.items():
                    y = (coeff.get(k, 0) + a * x) % p
                    if y:
                        coeff[k] = y
                    else:
                        coeff.pop(k, None)
            res = {k: Fp(x, p) for k, x in r.items()}
            return res, {k: Fp(x, p) for k, x in coeff.items()}
        r = {k: Fraction(x) for k, x in target.items() if x}
        coeff = {}
        piv = self.pivots
        while True:
            hits = [k for k in r if k in piv]
            if not hits:
                break
            c = min(hits)
            entry = piv[c]
            pv, pc = entry[0], entry[1]
            if self.mode == "dense":
                a = r[c]
                comb = pc
                scale = a
            else:
                pm = entry[2]
                a = r[c] / pv[c]
                comb = {k: Fraction(x, pm) for k, x in pc.items()}
                scale = a
            for k, x in pv.items():
                y = r.get(k, 0) - a * x
                if y:
                    r[k] = y
                else:
                    r.pop(k, None)
            for k, x in comb.items():
                y = coeff.get(k, 0) + scale * x
                if y:
                    coeff[k] = y
                else:
                    coeff.pop(k, None)
        return r, coeff

    def solve(self, target: Vec) -> Optional[Vec]:
        """Coefficients x with sum x_j v_j == target, or None if not in the span."""
        res, coeff = self.reduce(target)
        if res:
            return None
        return coeff

    def contains(self, target: Vec) -> bool:
        return not self.reduce(target)[0]


def kernel_basis(m: LinearMap) -> List[Vec]:
    """Basis of ker(m); its size is ``domain_dim - rank(m)``."""
    return ColumnEchelon(m.field, m.nrows, m.columns()).kernel()


def image_basis(m: LinearMap) -> List[Vec]:
    return ColumnEchelon(m.field, m.nrows, m.columns()).image_basis()


def rank(m: LinearMap) -> int:
    return m.rank()


def span_rank(field: FieldSpec, dim: int, vectors: Sequence[Vec]) -> int:
    return ColumnEchelon(field, dim, list(vectors)).rank


class QuotientData:
    """Representatives completing ``sub`` to a basis of ``span(ambient)``.

    ``solver(v)`` returns coefficients of v over ``sub`` when v lies in
    span(sub), else None.  ``classify(v)`` expresses v in span(ambient) as
    (coefficients over representatives, coefficients over sub).
    """

    def __init__(self, field: FieldSpec, dim: int, sub: Sequence[Vec], ambient: Sequence[Vec]):
        self.field = field
        self.dim = dim
        self.sub = [dict(v) for v in sub]
        self._sub = ColumnEchelon(field, dim, self.sub)
        amb = ColumnEchelon(field, dim, [dict(v) for v in ambient])
        for v in self.sub:
            if not amb.contains(v):
                raise ValueError("sub is not contained in span(ambient)")
        reps = []
        combined = ColumnEchelon(field, dim, self.sub)
        # greedily extend with ambient vectors
        chosen = list(self.sub)
        for v in ambient:
            if not combined.contains(v):
                chosen.append(dict(v))
                reps.append(dict(v))
                combined = ColumnEchelon(field, dim, chosen)
        self.representatives = reps
        self._all = ColumnEchelon(field, dim, reps + self.sub)

    @property
    def quotient_dim(self) -> int:
        return len(self.representatives)

    def solver(self, v: Vec) -> Optional[Vec]:
        return self._sub.solve(v)

    def classify(self, v: Vec) -> Optional[Tuple[Vec, Vec]]:
        x = self._all.solve(v)
        if x is None:
            return None
        nr = len(self.representatives)
        head = {k: c for k, c in x.items() if k < nr}
        tail = {k - nr: c for k, c in x.items() if k >= nr}
        return head, tail


def image_quotient(sub: Sequence[Vec], ambient: Sequence[Vec], field: FieldSpec = QQ, dim: Optional[int] = None) -> QuotientData:
    if dim is None:
        dim = 1 + max([max(v) for v in list(sub) + list(ambient) if v] or [-1])
    return QuotientData(field, dim, sub, ambient)


class Subspace:
    """Subspace of field^dim with an echelon basis and coordinate extraction."""

    def __init__(self, field: FieldSpec, dim: int, spanning: Sequence[Vec]):
        self.field = field
        self.dim = dim
        ech = ColumnEchelon(field, dim, [dict(v) for v in spanning])
        basis = ech.image_basis()
        # fully reduce to RREF so coordinates are read off pivot entries
        self.basis, self.pivots = _rref(field, basis)
        self._pos = {c: i for i, c in enumerate(self.pivots)}

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Vec) -> Optional[Vec]:
        coords = {}
        for c, i in self._pos.items():
            x = v.get(c)
            if x:
                coords[i] = x
        recon: Vec = {}
        for i, x in coords.items():
            vec_iadd(recon, self.basis[i], x)
        if not vec_eq(recon, v):
            return None
        return coords

    def contains(self, v: Vec) -> bool:
        return self.coordinates(v) is not None

    def inclusion(self) -> LinearMap:
        return LinearMap.from_columns(self.field, self.dim, self.basis)


def _rref(field: FieldSpec, echelon: List[Vec]) -> Tuple[List[Vec], List[int]]:
    rows = sorted((dict(r) for r in echelon if r), key=lambda r: min(r))
    pivots = [min(r) for r in rows]
    for i, r in enumerate(rows):
        c = pivots[i]
        a = r[c]
        if a != 1:
            inv = field.one / a
            rows[i] = r = {k: x * inv for k, x in r.items()}
    for i in range(len(rows) - 1, -1, -1):
        c = pivots[i]
        for j in range(i):
            x = rows[j].get(c)
            if x:
                rows[j] = vec_add(rows[j], rows[i], -x)
    return rows, pivots


def subspace_from_constraints(field: FieldSpec, dim: int, constraints: Iterable[Vec]) -> Subspace:
    """Solution space of the linear equations ``sum_k c[k] x_k = 0``."""
    rows = [c for c in constraints if c]
    if not rows:
        return Subspace(field, dim, [{i: field.one} for i in range(dim)])
    m = LinearMap(field, len(rows), dim, {})
    cols: Dict[int, Vec] = {}
    for i, r in enumerate(rows):
        for k, x in r.items():
            cols.setdefault(k, {})[i] = x
    m = LinearMap(field, len(rows), dim, cols)
    return Subspace(field, dim, kernel_basis(m))


@dataclass
class GradedSpace:
    """Per-degree dimensions over a finite degree range."""

    dims: Dict[int, int]
    labels: Dict[int, List[str]] = field(default_factory=dict)

    def __post_init__(self):
        for d, n in self.dims.items():
            if n < 0:
                raise ValueError("negative dimension in degree %d" % d)

    @property
    def degrees(self) -> List[int]:
        return sorted(self.dims)

    def __getitem__(self, d: int) -> int:
        return self.dims.get(d, 0)


def flat_index(multi: Sequence[int], d: int) -> int:
    idx = 0
    for i in multi:
        idx = idx * d + i
    return idx


def multi_index(idx: int, d: int, n: int) -> Tuple[int, ...]:
    out = [0] * n
    for k in range(n - 1, -1, -1):
        idx, out[k] = divmod(idx, d)
    return tuple(out)
