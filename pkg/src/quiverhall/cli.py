"""Command-line front end.

Exit codes: 0 ok, 1 a verification failed, 2 usage error, 3 internal error.
"""
import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import hall
from .algebra import TWISTS, AlgebraElement, multiply
from .cache import ENV_VAR, CorruptCache, PolyCache
from .canonical import bar_matrix_gs, bar_matrix_oracle, canonical_basis, select_direction
from .quiver import UnknownType, catalog_labels
from .reps import NotFiniteType, ParseError, SizeLimitExceeded, canonical_string, enumerate_modules, \
    parse_module, root_token, type_data
from .verify import SUITES, run_suite

FORMATS = ("table", "json", "csv", "latex")


class UsageError(Exception):
    pass


@dataclass
class JobSpec:
    command: str
    type_label: str = "A2"
    dim: tuple = ()
    keys: tuple = ()
    qs: tuple = ()
    fmt: str = "table"
    cache: str = None
    verbosity: int = 0
    direction: str = "auto"
    twist: str = "negative"
    jobs: int = 1

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        for k in ("dim", "keys", "qs"):
            d[k] = tuple(d[k])
        return cls(**d)


# output -------------------------------------------------------------------------

def _rows_out(header, rows, fmt):
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        body = [" & ".join(str(x) for x in r) + " \\\\" for r in rows]
        return "\\begin{tabular}{" + "l" * len(header) + "}\n" + " & ".join(header) + " \\\\ \\hline\n" + \
            "\n".join(body) + "\n\\end{tabular}"
    cols = [[str(h)] + [str(r[k]) for r in rows] for k, h in enumerate(header)]
    widths = [max(map(len, c)) for c in cols]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(str(x).ljust(w) for x, w in zip(r, widths)) for r in rows]
    return "\n".join(ln.rstrip() for ln in lines)


def _matrix_out(mats, report, fmt):
    if fmt == "json":
        out = {m.role: m.to_json() for m in mats}
        if report is not None:
            out["report"] = report
        return json.dumps(out, indent=2, default=str)
    parts = []
    for m in mats:
        if fmt == "latex":
            parts.append(m.latex())
        elif fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow([m.role] + [canonical_string(c) for c in m.classes])
            for c, row in zip(m.classes, m.entries):
                w.writerow([canonical_string(c)] + [repr(x) for x in row])
            parts.append(buf.getvalue().rstrip("\n"))
        else:
            parts.append(f"{m.role}:\n{m.table()}")
    if report is not None and fmt == "table":
        parts.append("report: " + json.dumps(report, default=str))
    return "\n\n".join(parts)


# commands -------------------------------------------------------------------------

def _data(job):
    try:
        return type_data(job.type_label)
    except UnknownType:
        raise UsageError(f"unknown type {job.type_label!r}; choose from {', '.join(catalog_labels())}")
    except NotFiniteType as e:
        raise UsageError(str(e))


def _dim(job, data):
    if len(job.dim) != data.n or any(x < 0 for x in job.dim):
        raise UsageError(f"--dim needs {data.n} nonnegative entries for {data.label}")
    return job.dim


def _classes(job, data, n):
    if len(job.keys) != n:
        raise UsageError(f"expected {n} module classes, got {len(job.keys)}")
    try:
        return [parse_module(data, k) for k in job.keys]
    except ParseError as e:
        raise UsageError(str(e))


def cmd_roots(job):
    data = _data(job)
    rows = [(t, root_token(r), data.end_indec[t]) for t, r in enumerate(data.indec)]
    if job.fmt == "json":
        return json.dumps({"type": data.label, "cartan": [list(r) for r in data.cartan.cartan],
                           "symmetrizer": list(data.s),
                           "roots": [{"index": t, "root": list(r), "end_dim": e}
                                     for t, (r, e) in enumerate(zip(data.indec, data.end_indec))]}, indent=2)
    return _rows_out(("index", "root", "end_dim"), rows, job.fmt)


def cmd_modules(job):
    data = _data(job)
    dim = _dim(job, data)
    rows = [(canonical_string(m), m.orbit_dim, m.end_dim) for m in enumerate_modules(data, dim)]
    return _rows_out(("class", "orbit_dim", "end_dim"), rows, job.fmt)


def cmd_hallpoly(job):
    data = _data(job)
    L, M, N = _classes(job, data, 3)
    hp = hall.hall_polynomial(L, M, N)
    if job.fmt == "json":
        return json.dumps({"L": str(L), "M": str(M), "N": str(N), "coeffs": list(hp.poly.c),
                           "samples": list(hp.samples), "heldout": list(hp.heldout)}, indent=2)
    rows = [(str(hp.poly), ",".join(map(str, hp.samples)), ",".join(map(str, hp.heldout)))]
    return _rows_out(("g", "samples", "heldout"), rows, job.fmt)


def cmd_product(job):
    data = _data(job)
    if job.twist not in TWISTS:
        raise UsageError(f"--twist must be one of {TWISTS}")
    a, b = _classes(job, data, 2)
    x = multiply(AlgebraElement.basis(a, job.twist), AlgebraElement.basis(b, job.twist))
    if job.fmt == "json":
        return json.dumps(x.to_json(), indent=2)
    key = lambda m: (m.dim, m.mult)
    rows = [(canonical_string(m), repr(x.terms[m])) for m in sorted(x.terms, key=key)]
    return _rows_out(("class", "coeff"), rows, job.fmt)


def cmd_barmatrix(job):
    data = _data(job)
    dim = _dim(job, data)
    if job.direction == "auto":
        R = bar_matrix_oracle(data.label, dim)
        report = select_direction(data.label, dim)[1]
    else:
        R = bar_matrix_gs(data.label, dim, job.direction)
        report = None
    return _matrix_out([R], report, job.fmt)


def cmd_canonical(job):
    data = _data(job)
    dim = _dim(job, data)
    P, Q = canonical_basis(data.label, dim)
    report = select_direction(data.label, dim)[1]
    return _matrix_out([P, Q], report, job.fmt)


def _suite_lines(name):
    return [(c.name, c.ok, c.detail) for c in run_suite(name)]


def cmd_verify(job):
    suite = job.keys[0] if job.keys else "all"
    names = list(SUITES) if suite == "all" else [suite]
    if any(n not in SUITES for n in names):
        raise UsageError(f"unknown suite {suite!r}; choose from {SUITES + ('all',)}")
    if job.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(job.jobs) as ex:
            results = list(ex.map(_suite_lines, names))
    else:
        results = [_suite_lines(n) for n in names]
    checks = [c for r in results for c in r]
    ok = all(c[1] for c in checks)
    if job.fmt == "json":
        out = json.dumps([{"name": n, "ok": k, "detail": d} for n, k, d in checks], indent=2, default=str)
    else:
        lines = [f"{'PASS' if k else 'FAIL'} {n}" for n, k, _ in checks]
        if job.verbosity:
            lines = [ln + "  " + json.dumps(d, default=str) for ln, (_, _, d) in zip(lines, checks)]
        lines.append(f"{sum(c[1] for c in checks)}/{len(checks)} checks passed")
        out = "\n".join(lines)
    return out, (0 if ok else 1)


def cmd_cache(job):
    action = job.keys[0] if job.keys else "list"
    cache = PolyCache.from_env(job.cache)
    if cache.path is None:
        raise UsageError("no cache path: pass --cache or set QUIVERHALL_CACHE")
    if action == "list":
        return "\n".join(cache.keys())
    if action == "compact":
        cache.compact()
        return f"{len(cache.keys())} records"
    if action == "verify":
        picked = cache.verify()
        return f"verified {len(picked)} of {len(cache.keys())} records"
    raise UsageError(f"unknown cache action {action!r}")


COMMANDS = {"roots": cmd_roots, "modules": cmd_modules, "hallpoly": cmd_hallpoly, "product": cmd_product,
            "barmatrix": cmd_barmatrix, "canonical": cmd_canonical, "verify": cmd_verify, "cache": cmd_cache}


def run(job):
    """Execute a job; returns (text, exit status)."""
    if job.fmt not in FORMATS:
        raise UsageError(f"--format must be one of {FORMATS}")
    path = job.cache or os.environ.get(ENV_VAR)
    hall.set_default_cache(PolyCache(path) if path else None)
    out = COMMANDS[job.command](job)
    return out if isinstance(out, tuple) else (out, 0)


# argument parsing ------------------------------------------------------------------

def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="type_label", default="A2", help=f"one of {', '.join(catalog_labels())}")
    common.add_argument("--dim", type=_int_list, default=())
    common.add_argument("--q", dest="qs", type=_int_list, default=())
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="table")
    common.add_argument("--latex", dest="fmt", action="store_const", const="latex", help="same as --format latex")
    common.add_argument("--cache", default=None)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--direction", choices=("auto", "top", "bottom"), default="auto")
    common.add_argument("--twist", choices=TWISTS, default="negative")
    common.add_argument("-v", "--verbose", dest="verbosity", action="count", default=0)

    p = argparse.ArgumentParser(prog="quiverhall", description="Hall polynomials and canonical bases in finite type")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[common], help="indecomposables in directed order")
    sub.add_parser("modules", parents=[common], help="isoclasses of a dimension vector")
    sp = sub.add_parser("hallpoly", parents=[common], help="certified Hall polynomial g^L_{M,N}")
    sp.add_argument("keys", nargs=3, metavar="CLASS")
    sp = sub.add_parser("product", parents=[common], help="product of two basis elements")
    sp.add_argument("keys", nargs=2, metavar="CLASS")
    sub.add_parser("barmatrix", parents=[common], help="bar involution on PBW classes")
    sub.add_parser("canonical", parents=[common], help="P and Q matrices of the bar-invariant basis")
    sp = sub.add_parser("verify", parents=[common], help="run verification suites")
    sp.add_argument("keys", nargs="?", default="all", metavar="SUITE")
    sp = sub.add_parser("cache", parents=[common], help="polynomial cache administration")
    sp.add_argument("keys", nargs="?", default="list", metavar="ACTION", choices=("list", "compact", "verify"))
    return p


def parse_job(argv):
    ns = build_parser().parse_args(argv)
    keys = getattr(ns, "keys", None) or []
    keys = [keys] if isinstance(keys, str) else keys
    return JobSpec(command=ns.command, type_label=ns.type_label, dim=ns.dim, keys=tuple(keys), qs=ns.qs,
                   fmt=ns.fmt, cache=ns.cache, verbosity=ns.verbosity, direction=ns.direction,
                   twist=ns.twist, jobs=ns.jobs)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        job = parse_job(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        out, status = run(job)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CorruptCache as e:
        print(f"corrupt cache: {e}", file=sys.stderr)
        return 1
    except SizeLimitExceeded as e:
        print(f"error: instance too large: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # noqa: BLE001
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    if out:
        print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
