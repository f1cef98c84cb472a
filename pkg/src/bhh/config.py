"""Job configuration: TOML documents with sparse structure constants.

Sparse entries are lists ``[i, j, k, num, den]`` (``den`` may be omitted).
Layout::

    name = "dual-numbers-z2"
    field = "QQ"            # or "GF(p)"
    max_degree = 4

    [hopf]
    group = "cyclic"        # trivial | cyclic | klein | symmetric | table
    order = 2               # "table" takes table = [[...]]
    # or preset = "sweedler", or explicit constants: dim, mult, unit,
    # comult, counit, antipode

    [algebra]               # omitted: A = k
    dim = 2
    unit = [[0, 1]]
    mult = [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]   # e_i e_j += c e_k

    [action]                # omitted: h acts by eps(h)
    entries = [[1, 1, 1, -1]]                          # h . e_j += c e_i as [h, j, i, c]
    identity = true         # basis element 0 / the group identity acts as 1 (default)

    [twist]
    alpha = "alternating-bicharacter"                  # or [[x, y, num, den], ...] (default 1)
"""

from __future__ import annotations

import hashlib
import json
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from . import __version__
from .braidalg import AlgebraObject, DualCocycle, alternating_bicharacter_klein, smash_product
from .exactlin import FieldSpec, LinearMap, Vec, vec_iadd
from .hopf import (
    FinHopf,
    GroupTable,
    HModule,
    HopfError,
    ModuleAlgebra,
    QuasiTriHopf,
    drinfeld_double,
    drinfeld_double_group,
    group_algebra,
    sweedler,
)


class ConfigError(ValueError):
    pass


@dataclass
class JobConfig:
    raw: Dict[str, Any]
    max_degree: int

    @property
    def name(self) -> str:
        return self.raw.get("name", "job")

    def canonical(self) -> Dict[str, Any]:
        d = dict(self.raw)
        d["max_degree"] = self.max_degree
        return d

    def hash(self) -> str:
        blob = json.dumps({"config": self.canonical(), "version": __version__}, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


@dataclass
class Job:
    config: JobConfig
    field: FieldSpec
    E: FinHopf
    Q: QuasiTriHopf
    A: ModuleAlgebra
    B: AlgebraObject
    group: Optional[GroupTable]
    twist: Optional[DualCocycle]


def parse_config(text: str, max_degree: Optional[int] = None) -> JobConfig:
    try:
        raw = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError("cannot parse config: %s" % e) from e
    N = raw.get("max_degree", 4) if max_degree is None else max_degree
    if not isinstance(N, int) or N < 1:
        raise ConfigError("max_degree must be an integer >= 1")
    if "hopf" not in raw:
        raise ConfigError("missing [hopf] table")
    return JobConfig(raw, N)


def load_config(path: str, max_degree: Optional[int] = None) -> JobConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ConfigError("cannot read %s: %s" % (path, e)) from e
    return parse_config(text, max_degree)


def parse_field(value: Any) -> FieldSpec:
    if value in (None, "QQ", "Q", "rationals"):
        return FieldSpec.rationals()
    try:
        if isinstance(value, int):
            return FieldSpec.prime(value)
        if isinstance(value, str) and value.upper().startswith("GF(") and value.endswith(")"):
            return FieldSpec.prime(int(value[3:-1]))
    except ValueError as e:
        raise ConfigError(str(e)) from e
    raise ConfigError("unknown field %r" % (value,))


def _scalar(f: FieldSpec, entry: List, k: int):
    """Coefficient from the tail of a sparse entry starting at position k."""
    tail = entry[k:]
    if len(tail) == 1:
        num, den = tail[0], 1
    elif len(tail) == 2:
        num, den = tail
    else:
        raise ConfigError("bad sparse entry %r" % (entry,))
    if not isinstance(num, int) or not isinstance(den, int) or den == 0:
        raise ConfigError("coefficients must be integers num[/den], got %r" % (entry,))
    return f(num) / f(den)


def _index(x, bound: int, what: str) -> int:
    if not isinstance(x, int) or not 0 <= x < bound:
        raise ConfigError("%s index %r out of range 0..%d" % (what, x, bound - 1))
    return x


def _bilinear(f: FieldSpec, entries, d: int, what: str) -> LinearMap:
    cols: Dict[int, Vec] = {}
    for ent in entries:
        i, j, k = (_index(x, d, what) for x in ent[:3])
        vec_iadd(cols.setdefault(i * d + j, {}), {k: _scalar(f, ent, 3)})
    return LinearMap(f, d, d * d, {c: v for c, v in cols.items() if v})


def _vector(f: FieldSpec, entries, d: int, what: str) -> Vec:
    out: Vec = {}
    for ent in entries:
        vec_iadd(out, {_index(ent[0], d, what): _scalar(f, ent, 1)})
    return out


def parse_group(h: Dict[str, Any]) -> GroupTable:
    kind = h.get("group")
    try:
        if kind == "trivial":
            return GroupTable.trivial()
        if kind == "cyclic":
            return GroupTable.cyclic(int(h["order"]))
        if kind == "klein":
            return GroupTable.klein()
        if kind == "symmetric":
            return GroupTable.symmetric(int(h.get("degree", 3)))
        if kind == "table":
            return GroupTable(h["table"], h.get("names"))
    except (KeyError, HopfError, TypeError) as e:
        raise ConfigError("bad group description: %s" % e) from e
    raise ConfigError("unknown group kind %r" % (kind,))


def parse_hopf(f: FieldSpec, h: Dict[str, Any]) -> FinHopf:
    if h.get("preset") == "sweedler":
        try:
            return sweedler(f)
        except HopfError as e:
            raise ConfigError(str(e)) from e
    d = h.get("dim")
    if not isinstance(d, int) or d < 1:
        raise ConfigError("[hopf] needs group, preset or dim")
    mult = _bilinear(f, h.get("mult", []), d, "hopf mult")
    unit = _vector(f, h.get("unit", []), d, "hopf unit")
    ccols: Dict[int, Vec] = {}
    for ent in h.get("comult", []):
        i, j, k = (_index(x, d, "comult") for x in ent[:3])
        vec_iadd(ccols.setdefault(i, {}), {j * d + k: _scalar(f, ent, 3)})
    comult = LinearMap(f, d * d, d, ccols)
    counit = LinearMap(f, 1, d, {i: {0: c} for i, c in _vector(f, h.get("counit", []), d, "counit").items()})
    scols: Dict[int, Vec] = {}
    for ent in h.get("antipode", []):
        i, j = (_index(x, d, "antipode") for x in ent[:2])
        vec_iadd(scols.setdefault(i, {}), {j: _scalar(f, ent, 2)})
    S = LinearMap(f, d, d, scols)
    labels = h.get("labels") or ["h%d" % i for i in range(d)]
    try:
        return FinHopf(f, labels, mult, unit, comult, counit, S, name=h.get("name", "H"))
    except (HopfError, ValueError) as e:
        raise ConfigError("bad Hopf structure constants: %s" % e) from e


def build_job(cfg: JobConfig, check: bool = True) -> Job:
    raw = cfg.raw
    f = parse_field(raw.get("field"))
    h = raw["hopf"]
    G = None
    if "group" in h:
        G = parse_group(h)
        Q = drinfeld_double_group(G, f)
        E = Q.hopf.base
    else:
        E = parse_hopf(f, h)
        Q = drinfeld_double(E)
    e = E.dim
    alg = raw.get("algebra")
    if alg is None:
        a = 1
        mult = LinearMap(f, 1, 1, {0: {0: f.one}})
        unit = {0: f.one}
        labels = ["1"]
    else:
        a = alg.get("dim")
        if not isinstance(a, int) or a < 1:
            raise ConfigError("[algebra] needs dim >= 1")
        mult = _bilinear(f, alg.get("mult", []), a, "algebra mult")
        unit = _vector(f, alg.get("unit", [[0, 1]]), a, "algebra unit")
        labels = alg.get("labels") or ["a%d" % i for i in range(a)]
        if len(labels) != a:
            raise ConfigError("algebra labels do not match dim")
    act = raw.get("action")
    mats = [LinearMap.identity(f, a).scale(E.eps_values[i]) for i in range(e)]
    if act is not None:
        entries = act.get("entries", [])
        touched = sorted({_index(ent[0], e, "action element") for ent in entries})
        for x in touched:
            mats[x] = LinearMap.zero(f, a, a)
        if act.get("identity", True):
            ident = next(iter(E.unit)) if len(E.unit) == 1 else None
            if ident is not None and ident not in touched:
                mats[ident] = LinearMap.identity(f, a)
        cols: Dict[int, Dict[int, Vec]] = {}
        for ent in entries:
            x = ent[0]
            j, i = _index(ent[1], a, "action source"), _index(ent[2], a, "action target")
            vec_iadd(cols.setdefault(x, {}).setdefault(j, {}), {i: _scalar(f, ent, 3)})
        for x, c in cols.items():
            mats[x] = LinearMap(f, a, a, {j: v for j, v in c.items() if v})
    try:
        A = ModuleAlgebra(HModule(E, mats, "A"), mult, unit, name=raw.get("algebra_name", "A"), labels=labels)
        B = smash_product(A, Q, check=check)
    except HopfError as e:
        raise ConfigError("invalid algebra/action: %s" % e) from e
    J = None
    tw = raw.get("twist")
    if tw is not None:
        if G is None:
            raise ConfigError("twists need a group")
        alpha = tw.get("alpha")
        if alpha == "alternating-bicharacter":
            if G.order != 4:
                raise ConfigError("the alternating bicharacter preset is for Z/2 x Z/2")
            table = alternating_bicharacter_klein(f)
        elif isinstance(alpha, list):
            table = [[f.one] * G.order for _ in range(G.order)]
            for ent in alpha:
                x, y = _index(ent[0], G.order, "twist"), _index(ent[1], G.order, "twist")
                table[x][y] = _scalar(f, ent, 2)
        else:
            raise ConfigError("twist.alpha must be a preset name or a list of entries")
        try:
            J = DualCocycle(Q, table)
        except HopfError as e:
            raise ConfigError(str(e)) from e
    return Job(cfg, f, E, Q, A, B, G, J)
