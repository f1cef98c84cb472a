"""Verification suites and dimension tables for a built job."""

from __future__ import annotations

import time
from typing import Dict, List, Optional, Tuple

from .braidalg import check_algebra_in_Z, check_env_action, check_freeness
from .complexes import (
    DEFAULT_MAX_COLUMNS,
    ClassicalComplex,
    CochainComplex,
    ComplexError,
    braided_cochain_complex,
    cohomology,
    cohomology_dims,
    eop_elements,
    hochschild_complex,
    invariant_cohomology_dims,
    invariant_subcomplex,
    normalized_subcomplex,
    relative_cochain_complex,
    restriction_iso,
    smash_classical_complex,
    transported_differential,
)
from .config import Job
from .hopf import check_hopf_axioms, check_module_algebra, check_rmatrix, is_cosemisimple, is_semisimple
from .products import (
    BraidedProducts,
    SmashGroupData,
    center_inclusion_check,
    check_commutator_identities,
    check_cup_structure,
    cohomology_ring,
    g_decomposition,
    ideal_annihilation_check,
    maurer_cartan_check,
    restricted_cup_check,
    twist_product_equality,
)
from .report import Report
from .ydmod import check_yd

COMPLEX_NAMES = [
    "braided", "relative", "classical", "hochschild", "invariant",
    "normalized-braided", "normalized-relative", "normalized-classical",
]


def semisimple_gate(job: Job) -> Tuple[bool, str]:
    E = job.E
    if not is_semisimple(E):
        return False, "E is not semisimple over %s" % job.field.label()
    if not is_cosemisimple(E):
        return False, "E is not cosemisimple over %s" % job.field.label()
    return True, ""


class Timer:
    def __init__(self):
        self.times: Dict[str, float] = {}

    def run(self, name, fn, *args, **kw):
        t = time.perf_counter()
        try:
            return fn(*args, **kw)
        finally:
            self.times[name] = round(time.perf_counter() - t, 3)


def verify(job: Job, max_columns: int = DEFAULT_MAX_COLUMNS, seed: int = 0, pairs: int = 20) -> Tuple[Report, Dict]:
    """Run every applicable check; returns the combined report and timings."""
    N = job.config.max_degree
    T = Timer()
    rep = Report("verify %s (N=%d)" % (job.config.name, N))
    E, Q, A, B = job.E, job.Q, job.A, job.B

    def structures():
        r = Report("structures")
        r.extend(check_hopf_axioms(E), "E")
        r.extend(check_hopf_axioms(Q.hopf), "double")
        r.extend(check_rmatrix(Q), "R-matrix")
        r.extend(check_module_algebra(A), "module algebra")
        r.extend(check_algebra_in_Z(B), "B in Z")
        if B.yd is not None:
            r.extend(check_yd(B.yd), "B YD")
        r.extend(check_env_action(B), "enveloping action")
        for n in range(min(N, 2) + 1):
            r.extend(check_freeness(B, n), "freeness n=%d" % n)
        return r

    rep.extend(T.run("structures", structures))

    C = T.run("braided complex", braided_cochain_complex, B, N, max_columns)

    def braided_checks():
        r = Report("braided")
        r.extend(C.check_d_squared(), "braided")
        r.extend(C.check_equivariance(), "braided")
        for n in range(min(N - 1, 3) + 1):
            r.add("braided/transported differential agrees in degree %d" % n, transported_differential(C, n) == C.diffs[n])
        return r

    rep.extend(T.run("braided checks", braided_checks))
    rel = T.run("relative complex", relative_cochain_complex, C)
    iso = T.run("restriction", restriction_iso, rel)

    def relative_checks():
        r = Report("relative")
        r.add("relative/closed under d_c", rel.closed)
        r.extend(rel.check_d_squared(), "relative")
        r.extend(iso.check(), "restriction")
        return r

    rep.extend(T.run("relative checks", relative_checks))
    P = BraidedProducts(C)
    top = N - 1
    res = T.run("braided cohomology", cohomology, C, 0, top)

    def product_checks():
        r = Report("products")
        r.extend(maurer_cartan_check(P, min(top, 3)), "products")
        r.extend(check_cup_structure(P, min(top, 3), rel), "products")
        r.extend(restricted_cup_check(P, iso, min(top, 3)), "products")
        r.extend(check_commutator_identities(P, pairs, seed, min(2, N // 2), res), "products")
        ring = cohomology_ring(P, res, top)
        r.add("products/ring certificates", not ring.failures, {"failures": ring.failures[:5]})
        r.data["ring"] = ring.as_dict()
        return r

    pr = T.run("products", product_checks)
    rep.extend(pr)
    rep.data["ring"] = pr.data["ring"]

    ok, why = semisimple_gate(job)

    def comparison():
        r = Report("comparison")
        if not ok:
            r.add_na("semisimple comparison", why)
            r.data["relative dims"] = cohomology_dims(rel, 0, top)
            return r
        rres = cohomology(rel, 0, top)
        for n in range(top + 1):
            M = rres.induced_map(n, rel.inclusion(n), res)
            r.add("comparison/relative -> braided iso in degree %d" % n,
                  M.nrows == M.ncols and M.rank() == M.ncols, {"shape": (M.nrows, M.ncols)})
        hh = cohomology_dims(hochschild_complex(B, N))
        inv = invariant_cohomology_dims(res, eop_elements(B))
        r.add("comparison/dim HH(B) = dim H_c(B)^E", all(hh[n] == inv[n] for n in range(top + 1)), {"HH": hh, "inv": inv})
        return r

    rep.extend(T.run("comparison", comparison))

    def normalized():
        r = Report("normalized")
        cl = iso.cl
        for name, X in (("braided", C), ("relative", rel), ("classical", cl)):
            full = cohomology_dims(X, 0, min(top, 2))
            norm = cohomology_dims(normalized_subcomplex(X), 0, min(top, 2))
            r.add("normalized/%s dims agree" % name, full == norm, {"full": full, "normalized": norm})
        if ok:
            nb = normalized_subcomplex(C)
            inv = invariant_subcomplex(nb, eop_elements(B))
            hh = cohomology_dims(hochschild_complex(B, N), 0, min(top, 2))
            d = cohomology_dims(inv, 0, min(top, 2))
            r.add("normalized/invariant normalized braided = HH(B)", d == hh, {"invariant": d, "HH": hh})
        else:
            r.add_na("normalized/invariant normalized braided = HH(B)", why)
        return r

    rep.extend(T.run("normalized", normalized))

    if job.group is not None:
        def group_checks():
            r = Report("group")
            data = SmashGroupData(B, N, C)
            r.extend(g_decomposition(data), "group")
            for g in job.group.elements():
                r.extend(ideal_annihilation_check(data, g, top), "group")
            r.extend(center_inclusion_check(data, top), "group")
            return r

        rep.extend(T.run("group", group_checks))
    if job.twist is not None:
        rep.extend(T.run("twist", twist_product_equality, B, job.twist, N, min(N, 2)), "twist")
    return rep, T.times


def build_complex(job: Job, name: str, N: int, max_columns: int = DEFAULT_MAX_COLUMNS) -> CochainComplex:
    B = job.B
    if name in ("classical", "normalized-classical"):
        X = smash_classical_complex(B, N)
    elif name == "hochschild":
        X = hochschild_complex(B, N)
    else:
        C = braided_cochain_complex(B, N, max_columns)
        if name in ("braided", "normalized-braided"):
            X = C
        elif name in ("relative", "normalized-relative"):
            X = relative_cochain_complex(C)
        elif name == "invariant":
            X = invariant_subcomplex(C, eop_elements(B))
        else:
            raise ComplexError("unknown complex %r (known: %s)" % (name, ", ".join(COMPLEX_NAMES)))
    if name.startswith("normalized-"):
        X = normalized_subcomplex(X)
    return X


def dims_table(job: Job, complexes: List[str], lo: int, hi: int, max_columns: int = DEFAULT_MAX_COLUMNS) -> List[Dict]:
    """Rows ``{degree, dim, complex, component}`` of cohomology dimensions."""
    rows = []
    N = hi + 1
    for name in complexes:
        X = build_complex(job, name, N, max_columns)
        for n, d in sorted(cohomology_dims(X, lo, hi).items()):
            rows.append({"degree": n, "dim": d, "complex": name, "component": "total"})
        if name == "braided":
            res = cohomology(X, lo, hi)
            for n, d in sorted(invariant_cohomology_dims(res, eop_elements(job.B)).items()):
                rows.append({"degree": n, "dim": d, "complex": name, "component": "E-invariant"})
        if name == "classical" and job.group is not None:
            data = SmashGroupData(job.B, N)
            for g in job.group.elements():
                per = data.summand_cohomology(g)
                for n in range(lo, hi + 1):
                    rows.append({"degree": n, "dim": len(per[n]), "complex": name, "component": "g=%s" % job.group.names[g]})
    return rows
