"""Command-line front end.

Point queries print one JSON document carrying a run manifest; sweeps print
one JSON object per line.  Exit codes: 0 success, 1 domain error, 2 resource
ceiling, 64 usage error, 65 malformed sweep configuration.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import logging
import os
import sys
import time
from pathlib import Path

from . import __version__, cache, config
from .errors import CeilingError, DomainError

log = logging.getLogger("gctkit")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CEILING = 2
EXIT_USAGE = 64
EXIT_CONFIG = 65


class UsageError(Exception):
    pass


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _jsonable(x):
    """Fractions become strings, tuples become lists."""
    from fractions import Fraction

    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def manifest(command: str, params: dict) -> dict:
    return {
        "command": command,
        "parameters": _jsonable(params),
        "tool_version": __version__,
        "cache_digest": cache.state_digest() if config.caching_enabled() else None,
    }


def _partition_arg(text):
    from .partitions import parse_partition

    return parse_partition(text)


# ---------------------------------------------------------------- kron

def _kron_point(args, out):
    from .kronecker import certificates, flush_cache, kron, kron_lr

    if len(args.rest) != 3:
        raise UsageError("kron needs three partitions, or 'rect' / 'sweep'")
    pi, mu, nu = (_partition_arg(x) for x in args.rest)
    m = manifest("kron", {"pi": pi, "mu": mu, "nu": nu})
    value = kron(pi, mu, nu)
    routes = {"character": value}
    try:
        routes["lr"] = kron_lr(pi, mu, nu)
    except CeilingError as exc:
        routes["lr"] = None
        log.info("LR route skipped: %s", exc)
    flush_cache()
    doc = {
        "triple": [list(pi), list(mu), list(nu)],
        "value": value,
        "routes": routes,
        "routes_agree": routes["lr"] is None or routes["lr"] == value,
        "certificates": _jsonable(certificates(pi, mu, nu, value)),
        "manifest": m,
    }
    out.write(_dumps(doc) + "\n")


def _kron_rect(args, out):
    from .kronecker import flush_cache, kron, rect_kron, rect_route
    from .partitions import rectangle

    p = _Parser(prog="gctkit kron rect")
    p.add_argument("--jobs", type=int, default=args.jobs)
    p.add_argument("delta", type=int)
    p.add_argument("n", type=int)
    p.add_argument("pi", type=_partition_arg)
    a = p.parse_args(args.rest[1:])
    m = manifest("kron rect", {"delta": a.delta, "n": a.n, "pi": a.pi})
    value = rect_kron(a.delta, a.n, a.pi)
    r = rectangle(a.delta, a.n)
    generic = kron(r, r, a.pi)
    flush_cache()
    out.write(_dumps({
        "delta": a.delta, "n": a.n, "pi": list(a.pi), "value": value,
        "route": rect_route(a.delta, a.n, a.pi), "generic_value": generic,
        "routes_agree": generic == value, "manifest": m,
    }) + "\n")


def _kron_sweep_lines(n: int, routes, jobs: int):
    from .parallel import ordered_map
    from .partitions import enumerate_partitions

    parts = enumerate_partitions(n)
    triples = list(itertools.combinations_with_replacement(parts, 3))
    return ordered_map(_kron_line, [(t, tuple(routes)) for t in triples], jobs=jobs)


def _kron_line(args):
    from .kronecker import certificates, kron_char, kron_lr

    t, routes = args
    # canonical order: decreasing lex
    t = tuple(sorted(t, reverse=True))
    values = {}
    if "character" in routes:
        values["character"] = kron_char(*t)
    if "lr" in routes:
        values["lr"] = kron_lr(*t)
    value = next(iter(values.values()))
    return {
        "triple": [list(p) for p in t],
        "value": value,
        "route": "+".join(sorted(values)),
        "routes_agree": len(set(values.values())) == 1,
        "certificates": _jsonable(certificates(*t, value)),
    }


def _kron_sweep(args, out):
    p = _Parser(prog="gctkit kron sweep")
    p.add_argument("--jobs", type=int, default=args.jobs)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--routes", default="character,lr")
    a = p.parse_args(args.rest[1:])
    routes = [r for r in a.routes.split(",") if r]
    if not routes or any(r not in ("character", "lr") for r in routes):
        raise UsageError("routes must be a subset of character,lr")
    if a.n < 1:
        raise DomainError("n must be positive")
    print(_dumps({"manifest": manifest("kron sweep", {"n": a.n, "routes": routes})}), file=sys.stderr)
    if a.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    for line in _kron_sweep_lines(a.n, routes, a.jobs):
        out.write(_dumps(line) + "\n")


def cmd_kron(args, out):
    if args.rest and args.rest[0] == "rect":
        return _kron_rect(args, out)
    if args.rest and args.rest[0] == "sweep":
        return _kron_sweep(args, out)
    return _kron_point(args, out)


# ---------------------------------------------------------------- lr / characters

def cmd_lr(args, out):
    from .lr import lr_coefficient, multi_lr, rectangle_duality_check

    m = manifest("lr", {"pi": args.pi, "mu": args.mu, "nu": args.nu})
    doc = {"pi": list(args.pi), "mu": list(args.mu), "nu": list(args.nu),
           "value": lr_coefficient(args.pi, args.mu, args.nu),
           "multi_lr_check": multi_lr(args.pi, [args.mu, args.nu]), "manifest": m}
    out.write(_dumps(doc) + "\n")


def cmd_chartable(args, out):
    from .characters import character_table

    m = manifest("chartable", {"n": args.n})
    table = character_table(args.n, jobs=args.jobs)
    out.write(_dumps({"n": args.n, **table.to_payload(), "manifest": m}) + "\n")


def cmd_stanley_audit(args, out):
    from .characters import stanley_audit

    m = manifest("stanley-audit", {"max_size": args.max_size})
    records = stanley_audit(args.max_size)
    out.write(_dumps({
        "records": records,
        "mismatches": sum(not r["match"] for r in records),
        "manifest": m,
    }) + "\n")


def cmd_plethysm(args, out):
    from .partitions import gl_dimension
    from .plethysm import decompose_sym_power, plethysm_mult, sym_power_dimension

    params = {"n": args.n, "delta": args.delta}
    if args.pi is not None:
        params["pi"] = args.pi
    m = manifest("plethysm", params)
    if args.pi is not None:
        doc = {"pi": list(args.pi), "n": args.n, "delta": args.delta,
               "multiplicity": plethysm_mult(args.pi, args.n, args.delta), "manifest": m}
    else:
        dec = decompose_sym_power(args.n, args.delta)
        doc = {
            "n": args.n, "delta": args.delta,
            "decomposition": [{"pi": list(p), "multiplicity": c} for p, c in sorted(dec.items(), reverse=True)],
            "dimension": sym_power_dimension(args.n, args.delta),
            "dimension_check": sum(c * gl_dimension(p, args.n) for p, c in dec.items())
            == sym_power_dimension(args.n, args.delta),
            "manifest": m,
        }
    out.write(_dumps(doc) + "\n")


# ---------------------------------------------------------------- gct

def cmd_gct(args, out):
    from . import gct
    from .kronecker import flush_cache

    if args.gct_cmd == "sigma-perm":
        params = {"m": args.m, "delta": args.delta}
        if args.n is not None:
            params["n"] = args.n
        m = manifest("gct sigma-perm", params)
        if args.n is None:
            entries = gct.sigma_perm(args.m, args.delta)
        else:
            entries = gct.sigma_perm_n(args.m, args.n, args.delta)
        doc = {**params, "entries": [e.to_json() for e in entries], "manifest": m}
    elif args.gct_cmd == "det-modules":
        m = manifest("gct det-modules", {"n": args.n, "delta": args.delta})
        mods = gct.det_orbit_modules(args.n, args.delta)
        doc = {"n": args.n, "delta": args.delta,
               "modules": [{"pi": list(p), "k": k} for p, k in sorted(mods.items(), reverse=True)],
               "manifest": m}
    else:
        params = {"m": args.m, "n": args.n, "delta_max": args.delta_max}
        m = manifest("gct obstruct", params)
        report = gct.occurrence_obstruction_scan(args.m, args.n, args.delta_max, jobs=args.jobs)
        if args.csv:
            Path(args.csv).write_text(gct.report_csv(report))
        doc = {**report, "manifest": m}
    flush_cache()
    out.write(_dumps(doc) + "\n")


# ---------------------------------------------------------------- circuits

def _read_circuit(path):
    from .circuits import loads

    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"cannot read circuit file: {exc}") from exc
    return loads(text)


def _file_digest(path) -> str:
    if path == "-":
        return "stdin"
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def cmd_circuit(args, out):
    from .circuits import (
        classify,
        coefficient_extract,
        dumps,
        evaluate,
        projection_determinant,
        ryser_permanent,
        to_json,
        universality_projection,
    )

    c = args.circuit_cmd
    if c == "ryser":
        circ = ryser_permanent(args.m, shared=not args.unshared)
        if args.output:
            Path(args.output).write_text(dumps(circ) + "\n")
        m = manifest("circuit ryser", {"m": args.m, "unshared": args.unshared})
        doc = {"m": args.m, "size": circ.size, "class": classify(circ), "circuit": to_json(circ), "manifest": m}
        out.write(_dumps(doc) + "\n")
        return
    circ = _read_circuit(args.file)
    params = {"file_sha256": _file_digest(args.file)}
    if c == "eval":
        doc = {"size": circ.size, "polynomial": evaluate(circ).to_json(), "text": str(evaluate(circ))}
    elif c == "classify":
        doc = {"size": circ.size, "class": classify(circ)}
    elif c == "universal":
        r = universality_projection(circ)
        det = projection_determinant(r)
        doc = {
            "matrix_size": r["matrix_size"],
            "abp_size": r["abp_size"],
            "source_size": r["source_size"],
            "entries": _jsonable(r["entries"]),
            "verified": det == evaluate(circ),
        }
    else:
        params["q"] = args.q
        r = coefficient_extract(circ, args.q)
        doc = {
            "q": args.q,
            "shared_size": r["shared_size"],
            "bound": r["bound"],
            "coefficients": [
                {"k": k, "circuit": to_json(cc), "polynomial": str(evaluate(cc))}
                for k, cc in enumerate(r["circuits"])
            ],
        }
    doc["manifest"] = manifest(f"circuit {c}", params)
    out.write(_dumps(doc) + "\n")


# ---------------------------------------------------------------- cache

def cmd_cache(args, out):
    if args.cache_cmd == "clear":
        removed = cache.clear()
        out.write(_dumps({"removed": removed, "cache_dir": str(config.cache_dir())}) + "\n")
    elif args.cache_cmd == "info":
        files = [{"name": p.name, "bytes": p.stat().st_size} for p in cache.files()]
        out.write(_dumps({
            "cache_dir": str(config.cache_dir()),
            "enabled": config.caching_enabled(),
            "files": files,
            "digest": cache.state_digest(),
        }) + "\n")
    else:
        from .characters import character_table

        if args.n > config.max_table_n():
            raise CeilingError(f"n={args.n} exceeds the table ceiling {config.max_table_n()}")
        for n in range(1, args.n + 1):
            table = character_table(n, jobs=args.jobs)
            # a table already held in memory may never have reached this cache dir
            if cache.load("chartable", n) is None:
                cache.store("chartable", n, table.to_payload())
        out.write(_dumps({"warmed_tables": list(range(1, args.n + 1)), "digest": cache.state_digest()}) + "\n")


# ---------------------------------------------------------------- sweeps

def _range(cfg, key, default=None):
    v = cfg.get(key, default)
    if v is None:
        raise ConfigError(f"missing '{key}'")
    if isinstance(v, bool):
        raise ConfigError(f"'{key}' must be an integer or [min, max]")
    if isinstance(v, int):
        return range(v, v + 1)
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        return range(v[0], v[1] + 1)
    if isinstance(v, dict) and set(v) == {"min", "max"} and all(isinstance(x, int) for x in v.values()):
        return range(v["min"], v["max"] + 1)
    raise ConfigError(f"'{key}' must be an integer, [min, max] or {{\"min\":..,\"max\":..}}")


SWEEP_KINDS = ("kron", "rect_kron", "plethysm", "gct_obstruct")


def load_sweep_config(path) -> dict:
    try:
        cfg = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    kind = cfg.get("kind")
    if kind not in SWEEP_KINDS:
        raise ConfigError(f"'kind' must be one of {', '.join(SWEEP_KINDS)}")
    allowed = {"kind", "n", "m", "delta", "delta_max", "routes", "jobs"}
    extra = set(cfg) - allowed
    if extra:
        raise ConfigError(f"unknown keys: {', '.join(sorted(extra))}")
    routes = cfg.get("routes", ["character", "lr"])
    if not isinstance(routes, list) or not routes or any(r not in ("character", "lr") for r in routes):
        raise ConfigError("'routes' must be a non-empty subset of [\"character\", \"lr\"]")
    jobs = cfg.get("jobs", 1)
    if not isinstance(jobs, int) or isinstance(jobs, bool) or jobs < 1:
        raise ConfigError("'jobs' must be a positive integer")
    if kind == "kron":
        _range(cfg, "n")
    elif kind in ("rect_kron", "plethysm"):
        _range(cfg, "n")
        _range(cfg, "delta")
    else:
        _range(cfg, "m")
        _range(cfg, "n")
        _range(cfg, "delta_max")
    return cfg


def sweep_queries(cfg) -> list:
    """Deterministic list of (kind, params) queries for a config."""
    from .partitions import enumerate_partitions

    kind = cfg["kind"]
    q = []
    if kind == "kron":
        routes = tuple(cfg.get("routes", ["character", "lr"]))
        for n in _range(cfg, "n"):
            if n < 1:
                continue
            for t in itertools.combinations_with_replacement(enumerate_partitions(n), 3):
                q.append(("kron", (t, routes)))
    elif kind == "rect_kron":
        for n in _range(cfg, "n"):
            for d in _range(cfg, "delta"):
                if n < 1 or d < 1:
                    continue
                for pi in enumerate_partitions(n * d, max_length=n * n):
                    q.append(("rect_kron", (d, n, pi)))
    elif kind == "plethysm":
        for n in _range(cfg, "n"):
            for d in _range(cfg, "delta"):
                if n < 1 or d < 1:
                    continue
                for pi in enumerate_partitions(n * d, max_length=n):
                    q.append(("plethysm", (n, d, pi)))
    else:
        for m in _range(cfg, "m"):
            for n in _range(cfg, "n"):
                for d in _range(cfg, "delta_max"):
                    if m < 1 or n < m or d < 1:
                        continue
                    q.append(("gct_obstruct", (m, n, d)))
    return q


def run_query(item) -> dict:
    kind, params = item
    if kind == "kron":
        return _kron_line(params)
    if kind == "rect_kron":
        from .kronecker import rect_kron, rect_route

        d, n, pi = params
        return {"delta": d, "n": n, "pi": list(pi), "value": rect_kron(d, n, pi), "route": rect_route(d, n, pi)}
    if kind == "plethysm":
        from .plethysm import plethysm_mult

        n, d, pi = params
        return {"n": n, "delta": d, "pi": list(pi), "multiplicity": plethysm_mult(pi, n, d)}
    from .gct import occurrence_obstruction_scan

    m, n, d = params
    rep = occurrence_obstruction_scan(m, n, d)
    return {
        "m": m, "n": n, "delta_max": d,
        "verdicts": [{"lambda": c["lambda"], "verdict": c["verdict"], "blockers": len(c["blocked_by"])}
                     for c in rep["candidates"]],
        "caveat": rep["caveat"],
    }


def _config_digest(cfg) -> str:
    return hashlib.sha256(_dumps(cfg).encode()).hexdigest()


def cmd_sweep(args, out):
    cfg = load_sweep_config(args.config)
    jobs = args.jobs if args.jobs > 1 else cfg.get("jobs", 1)
    queries = sweep_queries(cfg)
    digest = _config_digest(cfg)
    man = manifest("sweep", {"config": cfg, "config_sha256": digest, "queries": len(queries)})
    done = 0
    if args.output:
        outpath = Path(args.output)
        manpath = outpath.with_name(outpath.name + ".manifest.json")
        if args.resume and outpath.exists():
            if not manpath.exists():
                raise ConfigError("cannot resume: manifest file is missing")
            old = json.loads(manpath.read_text())
            if old.get("parameters", {}).get("config_sha256") != digest:
                raise ConfigError("cannot resume: output was produced by a different config")
            data = outpath.read_bytes()
            # keep complete lines only; a torn last line is recomputed
            keep = data[: data.rfind(b"\n") + 1] if b"\n" in data else b""
            outpath.write_bytes(keep)
            done = keep.count(b"\n")
            if done > len(queries):
                raise ConfigError("cannot resume: output is longer than the query list")
        else:
            outpath.write_bytes(b"")
        manpath.write_text(_dumps(man) + "\n")
        sink = open(outpath, "a", encoding="utf-8")
    else:
        print(_dumps({"manifest": man}), file=sys.stderr)
        sink = out
    try:
        remaining = queries[done:]
        batch = max(jobs * 8, 1)
        from .parallel import ordered_map

        for i in range(0, len(remaining), batch):
            for line in ordered_map(run_query, remaining[i:i + batch], jobs=jobs):
                sink.write(_dumps(line) + "\n")
            sink.flush()
    finally:
        if sink is not out:
            sink.close()


# ---------------------------------------------------------------- acceptance

def cmd_acceptance(args, out):
    from . import acceptance

    criteria = sorted({int(x) for x in args.criteria.split(",")}) if args.criteria else None
    if criteria and any(k not in acceptance.CRITERIA for k in criteria):
        raise UsageError("criteria must be numbers 1..10")
    for k in criteria or sorted(acceptance.CRITERIA):
        out.write(acceptance.serialise(acceptance.CRITERIA[k](args.jobs)) + "\n")
        out.flush()


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gctkit", description="Exact GCT representation-theory and circuit toolkit.")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (results do not depend on it)")
    p.add_argument("--timing", action="store_true", help="print wall time to stderr")
    p.add_argument("--verbose", "-v", action="store_true")
    p.add_argument("--version", action="version", version=f"gctkit {__version__}")
    # the same flags are accepted after the subcommand too
    common = _Parser(add_help=False)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **kw: _add(*a, parents=[common], **kw)

    k = sub.add_parser("kron", help="Kronecker coefficients: kron P M N | kron rect D N P | kron sweep --n N")
    k.add_argument("rest", nargs=argparse.REMAINDER)

    lr = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^pi_{mu,nu}")
    lr.add_argument("pi", type=_partition_arg)
    lr.add_argument("mu", type=_partition_arg)
    lr.add_argument("nu", type=_partition_arg)

    ct = sub.add_parser("chartable", help="character table of S_n")
    ct.add_argument("n", type=int)

    st = sub.add_parser("stanley-audit", help="audit the transcribed rectangular character formula")
    st.add_argument("--max-size", type=int, default=6)

    pl = sub.add_parser("plethysm", help="decomposition of S^n(S^delta C^n)")
    pl.add_argument("n", type=int)
    pl.add_argument("delta", type=int)
    pl.add_argument("--pi", type=_partition_arg)

    g = sub.add_parser("gct", help="Sigma sets, det-orbit modules, obstruction scan")
    gs = g.add_subparsers(dest="gct_cmd", parser_class=_Parser)
    gs.required = True
    _sub_gs = gs.add_parser
    gs.add_parser = lambda *a, _f=_sub_gs, **kw: _f(*a, parents=[common], **kw)
    sp = gs.add_parser("sigma-perm")
    sp.add_argument("m", type=int)
    sp.add_argument("delta", type=int)
    sp.add_argument("--n", type=int, help="lift to the padded set for this n")
    dm = gs.add_parser("det-modules")
    dm.add_argument("n", type=int)
    dm.add_argument("delta", type=int)
    ob = gs.add_parser("obstruct")
    ob.add_argument("--m", type=int, required=True)
    ob.add_argument("--n", type=int, required=True)
    ob.add_argument("--delta-max", type=int, required=True)
    ob.add_argument("--csv", help="also write a CSV table of the scanned lifts")

    c = sub.add_parser("circuit", help="circuit tools")
    cs = c.add_subparsers(dest="circuit_cmd", parser_class=_Parser)
    cs.required = True
    _sub_cs = cs.add_parser
    cs.add_parser = lambda *a, _f=_sub_cs, **kw: _f(*a, parents=[common], **kw)
    for name in ("eval", "classify", "universal"):
        x = cs.add_parser(name)
        x.add_argument("file", help="circuit JSON file, or - for stdin")
    ex = cs.add_parser("extract")
    ex.add_argument("file")
    ex.add_argument("--q", type=int, required=True)
    ry = cs.add_parser("ryser")
    ry.add_argument("m", type=int)
    ry.add_argument("--unshared", action="store_true", help="rebuild row sums (weakly-skew variant)")
    ry.add_argument("--output", help="write the circuit file here")

    ca = sub.add_parser("cache", help="cache administration")
    cas = ca.add_subparsers(dest="cache_cmd", parser_class=_Parser)
    cas.required = True
    _sub_cas = cas.add_parser
    cas.add_parser = lambda *a, _f=_sub_cas, **kw: _f(*a, parents=[common], **kw)
    cas.add_parser("clear")
    cas.add_parser("info")
    w = cas.add_parser("warm")
    w.add_argument("--n", type=int, default=10)

    sw = sub.add_parser("sweep", help="batch run from a JSON config")
    sw.add_argument("config")
    sw.add_argument("--output")
    sw.add_argument("--resume", action="store_true")

    ac = sub.add_parser("acceptance", help="run acceptance criteria 1-10 as JSON lines")
    ac.add_argument("--criteria", help="comma-separated subset, e.g. 1,4")
    return p


COMMANDS = {
    "kron": cmd_kron,
    "lr": cmd_lr,
    "chartable": cmd_chartable,
    "stanley-audit": cmd_stanley_audit,
    "plethysm": cmd_plethysm,
    "gct": cmd_gct,
    "circuit": cmd_circuit,
    "cache": cmd_cache,
    "sweep": cmd_sweep,
    "acceptance": cmd_acceptance,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_help())
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
        start = time.perf_counter()
        COMMANDS[args.command](args, out)
        if args.timing:
            print(f"wall_time_seconds={time.perf_counter() - start:.3f}", file=sys.stderr)
        return EXIT_OK
    except UsageError as exc:
        print(str(exc).rstrip(), file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"malformed config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CeilingError as exc:
        print(f"ceiling: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
