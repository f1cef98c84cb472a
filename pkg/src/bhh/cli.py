"""Command line interface: ``bhh verify|compute|examples|export``.

Exit codes: 0 all checks pass (or are not applicable), 1 a check failed,
2 configuration error, 3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from typing import Dict, List, Optional, Tuple

from . import __version__, catalog
from .complexes import DEFAULT_MAX_COLUMNS, ComplexError
from .config import ConfigError, JobConfig, build_job, load_config, parse_config
from .ydmod import CapExceeded

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_CAP = 0, 1, 2, 3
CSV_HEADER = ["degree", "dim", "complex", "component"]


# ------------------------------------------------------------------ export

def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def export(report: Dict, fmt: str) -> bytes:
    """Serialize a report.  CSV carries only the dimension table."""
    if fmt == "json":
        return (json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
        w.writeheader()
        for row in report.get("dims", []):
            w.writerow({k: row[k] for k in CSV_HEADER})
        return buf.getvalue().encode()
    raise ValueError("unknown format %r" % (fmt,))


def import_csv(data: bytes) -> List[Dict]:
    rows = []
    for r in csv.DictReader(io.StringIO(data.decode())):
        rows.append({"degree": int(r["degree"]), "dim": int(r["dim"]), "complex": r["complex"], "component": r["component"]})
    return rows


def atomic_write(path: str, data: bytes) -> None:
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(data: bytes, out: Optional[str]) -> None:
    if out:
        atomic_write(out, data)
    else:
        sys.stdout.write(data.decode())


# ------------------------------------------------------------------- cache

def cache_dir(flag: Optional[str]) -> Optional[str]:
    return flag or os.environ.get("BHH_CACHE_DIR") or None


def cache_load(directory: Optional[str], key: str):
    if not directory:
        return None
    path = os.path.join(directory, key + ".json")
    try:
        with open(path, "rb") as fh:
            return json.loads(fh.read().decode())
    except (OSError, ValueError):
        return None


def cache_store(directory: Optional[str], key: str, value) -> None:
    if directory:
        atomic_write(os.path.join(directory, key + ".json"), json.dumps(value, sort_keys=True).encode())


# -------------------------------------------------------------------- runs

def _config(args) -> JobConfig:
    if args.config and args.example:
        raise ConfigError("give either --config or --example, not both")
    if args.config:
        return load_config(args.config, args.max_degree)
    if args.example:
        try:
            text = catalog.get(args.example)
        except KeyError as e:
            raise ConfigError(str(e)) from e
        return parse_config(text, args.max_degree)
    raise ConfigError("one of --config or --example is required")


def parse_degrees(text: Optional[str], N: int) -> Tuple[int, int]:
    if not text:
        return 0, N - 1
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ConfigError("degrees must look like 0..3 or 2, got %r" % text) from None
    if lo < 0 or hi < lo:
        raise ConfigError("bad degree range %r" % text)
    return lo, hi


def _header(cfg: JobConfig, command: str) -> Dict:
    return {"tool": "bhh", "version": __version__, "command": command, "name": cfg.name,
            "config_hash": cfg.hash(), "max_degree": cfg.max_degree}


def cmd_verify(args) -> int:
    from .suites import verify
    cfg = _config(args)
    job = build_job(cfg)
    rep, times = verify(job, args.max_columns, args.seed, args.pairs)
    out = _header(cfg, "verify")
    out.update({"passed": rep.passed, "checks": [c.as_dict() for c in rep.checks], "ring": rep.data.get("ring"),
                "dims": [], "timing": times})
    if args.format == "json" or args.out:
        _emit(export(out, args.format), args.out)
    if not args.quiet:
        for c in rep.checks:
            print("[%s] %s" % (c.status, c.name), file=sys.stderr if args.out is None and args.format == "json" else sys.stdout)
        print("%s: %s" % (rep.title, "PASS" if rep.passed else "FAIL"),
              file=sys.stderr if args.out is None and args.format == "json" else sys.stdout)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_compute(args) -> int:
    from .suites import COMPLEX_NAMES, dims_table
    cfg = _config(args)
    lo, hi = parse_degrees(args.degrees, cfg.max_degree)
    names = [c.strip() for c in args.complex.split(",")] if args.complex else ["braided", "relative", "classical", "hochschild"]
    for n in names:
        if n not in COMPLEX_NAMES:
            raise ConfigError("unknown complex %r (known: %s)" % (n, ", ".join(COMPLEX_NAMES)))
    job = build_job(cfg)
    key = "%s-%s-%d-%d" % (cfg.hash(), "_".join(names), lo, hi)
    cdir = cache_dir(args.cache_dir)
    rows = cache_load(cdir, key)
    if rows is None:
        rows = dims_table(job, names, lo, hi, args.max_columns)
        cache_store(cdir, key, rows)
    out = _header(cfg, "compute")
    out.update({"degrees": [lo, hi], "dims": rows})
    if args.ring:
        from .complexes import braided_cochain_complex, cohomology
        from .products import BraidedProducts, cohomology_ring
        C = braided_cochain_complex(job.B, hi + 1, args.max_columns)
        ring = cohomology_ring(BraidedProducts(C), cohomology(C, 0, hi), hi)
        out["ring"] = ring.as_dict()
        if ring.failures:
            _emit(export(out, args.format), args.out)
            return EXIT_FAIL
    _emit(export(out, args.format), args.out)
    return EXIT_OK


def cmd_examples(args) -> int:
    if args.show:
        try:
            sys.stdout.write(catalog.get(args.show))
        except KeyError as e:
            raise ConfigError(str(e)) from e
        return EXIT_OK
    for name in catalog.names():
        print("%-18s %s" % (name, catalog.description(name)))
    return EXIT_OK


def cmd_export(args) -> int:
    try:
        with open(args.report, "rb") as fh:
            data = fh.read()
    except OSError as e:
        raise ConfigError("cannot read report: %s" % e) from e
    try:
        report = json.loads(data.decode())
    except ValueError:
        report = {"dims": import_csv(data)}
    _emit(export(report, args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bhh", description="Braided Hochschild cohomology of small algebras, exactly.")
    p.add_argument("--version", action="version", version="bhh " + __version__)
    sub = p.add_subparsers(dest="command", required=True)

    def job_args(sp):
        sp.add_argument("--config", help="TOML job description")
        sp.add_argument("--example", help="name from the built-in catalog")
        sp.add_argument("--max-degree", type=int, default=None, help="top cochain degree N (default from config, else 4)")
        sp.add_argument("--max-columns", type=int, default=DEFAULT_MAX_COLUMNS)
        sp.add_argument("--format", choices=["json", "csv"], default="json")
        sp.add_argument("--out")
        sp.add_argument("--cache-dir")
        sp.add_argument("--seed", type=int, default=0, help="seed for random cocycle spot checks")

    v = sub.add_parser("verify", help="run the check suite")
    job_args(v)
    v.add_argument("--pairs", type=int, default=20, help="random pairs for the commutator identities")
    v.add_argument("--quiet", action="store_true")
    v.set_defaults(fn=cmd_verify)
    c = sub.add_parser("compute", help="cohomology dimension tables")
    job_args(c)
    c.add_argument("--complex", help="comma separated: braided, relative, classical, hochschild, invariant, normalized-*")
    c.add_argument("--degrees", help="range like 0..3")
    c.add_argument("--ring", action="store_true", help="add the braided cohomology ring")
    c.set_defaults(fn=cmd_compute)
    e = sub.add_parser("examples", help="list the example catalog")
    e.add_argument("--list", action="store_true")
    e.add_argument("--show", metavar="NAME")
    e.set_defaults(fn=cmd_examples)
    x = sub.add_parser("export", help="convert a saved report")
    x.add_argument("--report", required=True)
    x.add_argument("--format", choices=["json", "csv"], default="csv")
    x.add_argument("--out")
    x.set_defaults(fn=cmd_export)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as e:
        print("config error: %s" % e, file=sys.stderr)
        return EXIT_CONFIG
    except CapExceeded as e:
        print("resource cap exceeded: %s" % e, file=sys.stderr)
        return EXIT_CAP
    except ComplexError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
