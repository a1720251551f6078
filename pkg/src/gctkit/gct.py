"""Occurrence-obstruction machinery for the padded permanent versus the determinant.

Sigma sets bound the modules in the coordinate ring of the permanent orbit
(and of its padded version l^{n-m} perm_m); the determinant side is given by
rectangular Kronecker coefficients k(d^n, d^n, pi).  The scan looks for an
SL weight all of whose compatible lifts have vanishing rectangular
coefficient, over a finite range of degrees only.
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field
from functools import lru_cache

from . import config
from .errors import CeilingError, ConsistencyError, DomainError
from .kronecker import kron, kron_char, rect_kron, rect_route
from .parallel import ordered_map
from .partitions import (
    enumerate_partitions,
    format_partition,
    interlaces,
    interlacing_lifts,
    length,
    min_partition_of,
    partition,
    rectangle,
    size,
    sl_weight_of,
    SLWeight,
)
from .plethysm import plethysm_mult

log = logging.getLogger(__name__)

REPORT_VERSION = 1

CAVEAT = (
    "range-limited scan: only degrees delta <= scanned_delta_max were examined; "
    "the obstruction criterion quantifies over all degrees, so 'no blocker found "
    "up to delta_max' is evidence, not a proof"
)


@dataclass
class SigmaEntry:
    pi: tuple
    delta: int
    mult: int
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "pi": list(self.pi),
            "delta": self.delta,
            "mult": self.mult,
            "witnesses": [
                {"mu": list(mu), "nu": list(nu), "k": k} for mu, nu, k in self.witnesses
            ],
        }


def _check_gct_size(total: int):
    if total > config.max_gct_size():
        raise CeilingError(
            f"partition size {total} exceeds the gct ceiling {config.max_gct_size()} "
            "(set GCTKIT_MAX_GCT_SIZE to raise it)"
        )


@lru_cache(maxsize=None)
def plethysm_support(m: int, d: int) -> tuple:
    """(mu, N(mu; m, d)) for every Schur module occurring in S^m(S^d C^m)."""
    out = []
    for mu in enumerate_partitions(m * d, max_length=m):
        c = plethysm_mult(mu, m, d)
        if c:
            out.append((mu, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _sigma_perm(m: int, d: int) -> tuple:
    support = plethysm_support(m, d)
    entries = []
    for pi in enumerate_partitions(m * d):
        witnesses = []
        mult = 0
        for mu, a in support:
            for nu, b in support:
                k = kron(mu, nu, pi)
                if k:
                    witnesses.append((mu, nu, k))
                    mult += k * a * b
        if not witnesses:
            continue
        if length(pi) > m * m:
            # k(mu, nu, pi) != 0 forces l(pi) <= l(mu) l(nu) <= m^2
            raise ConsistencyError(f"{format_partition(pi)} has a witness but more than {m * m} parts")
        entries.append(SigmaEntry(pi, d, mult, witnesses))
    return tuple(entries)


def sigma_perm(m: int, d: int) -> list[SigmaEntry]:
    """Partitions pi of m*d (at most m^2 parts) in the permanent-orbit Sigma set."""
    if m < 1 or d < 1:
        raise DomainError("m and delta must be positive")
    _check_gct_size(m * d)
    return list(_sigma_perm(m, d))


def perm_orbit_modules(m: int, d: int) -> dict:
    """Degree-d upper bound for the permanent orbit closure: pi -> mult_pi."""
    return {e.pi: e.mult for e in sigma_perm(m, d)}


def sigma_perm_n(m: int, n: int, d: int) -> list[SigmaEntry]:
    """Padded Sigma set: pi of n*d with pi -> pi' for some pi' in sigma_perm(m, d).

    The multiplicity is the sum of mult_{pi'} over the interlaced pi'; the
    witnesses list records (pi', mult_{pi'}) pairs as (pi', (), mult).
    """
    if n < m:
        raise DomainError(f"need n >= m, got n={n}, m={m}")
    _check_gct_size(n * d)
    acc: dict = {}
    for e in sigma_perm(m, d):
        for pi in interlacing_lifts(e.pi, n * d):
            if length(pi) > n * n:
                continue
            mult, wit = acc.get(pi, (0, []))
            acc[pi] = (mult + e.mult, wit + [(e.pi, (), e.mult)])
    return [SigmaEntry(pi, d, mult, wit) for pi, (mult, wit) in sorted(acc.items(), reverse=True)]


def det_orbit_modules(n: int, d: int) -> dict:
    """pi -> k(d^n, d^n, pi) for pi of n*d, nonzero values only."""
    if n < 1 or d < 1:
        raise DomainError("n and delta must be positive")
    _check_gct_size(n * d)
    out = {}
    for pi in enumerate_partitions(n * d, max_length=n * n):
        k = rect_kron(d, n, pi)
        if k:
            out[pi] = k
    return out


def _weight_key(w: SLWeight) -> tuple:
    return min_partition_of(w)


def _scan_weight(args):
    m, n, delta_max, coeffs = args
    lam = SLWeight(tuple(coeffs), m * m)
    per_delta = []
    blockers = []
    compatible = 0
    for d in range(1, delta_max + 1):
        sigma = [e for e in sigma_perm(m, d) if sl_weight_of(e.pi, m * m) == lam]
        lifts = []
        for e in sigma:
            for pi in interlacing_lifts(e.pi, n * d):
                if length(pi) > n * n:
                    continue
                compatible += 1
                k = rect_kron(d, n, pi)
                rec = {"pi": list(pi), "pi_prime": list(e.pi), "rect_kron": k, "route": rect_route(d, n, pi)}
                lifts.append(rec)
                if k > 0:
                    blockers.append({"delta": d, **rec})
        per_delta.append({
            "delta": d,
            "sigma_partitions": [list(e.pi) for e in sigma],
            "lifts": lifts,
        })
    if blockers:
        verdict = "blocked"
    elif compatible == 0:
        verdict = "out_of_model"
    else:
        verdict = "no_blocker_found_up_to_delta_max"
    return {
        "lambda": list(lam.coeffs),
        "lambda_rank": lam.rank,
        "min_partition": list(min_partition_of(lam)),
        "verdict": verdict,
        "blocked_by": blockers,
        "per_delta": per_delta,
    }


def candidate_weights(m: int, delta_max: int) -> list[SLWeight]:
    """Distinct SL weights of the Sigma entries with degree <= delta_max."""
    seen = {}
    for d in range(1, delta_max + 1):
        for e in sigma_perm(m, d):
            w = sl_weight_of(e.pi, m * m)
            seen.setdefault(w.coeffs, w)
    return sorted(seen.values(), key=_weight_key, reverse=True)


def occurrence_obstruction_scan(m: int, n: int, delta_max: int, jobs: int = 1) -> dict:
    """Scan every candidate weight for blockers up to degree delta_max."""
    if n < m:
        raise DomainError(f"need n >= m, got n={n}, m={m}")
    if m < 1 or delta_max < 1:
        raise DomainError("m and delta_max must be positive")
    _check_gct_size(n * delta_max)
    weights = candidate_weights(m, delta_max)
    results = ordered_map(
        _scan_weight, [(m, n, delta_max, w.coeffs) for w in weights], jobs=jobs, chunksize=1
    )
    counts = {}
    for r in results:
        counts[r["verdict"]] = counts.get(r["verdict"], 0) + 1
    return {
        "report_version": REPORT_VERSION,
        "m": m,
        "n": n,
        "delta_max": delta_max,
        "scanned_delta_max": delta_max,
        "caveat": CAVEAT,
        "model_assumptions": [
            "lifted partitions have at most n^2 parts",
            "lifts interlace their base partition, so they have at most m^2 + 1 parts",
        ],
        "verdict_counts": dict(sorted(counts.items())),
        "candidates": results,
    }


def verify_blocker(m: int, n: int, d: int, pi, pi_prime, weight) -> dict:
    """Re-check a reported blocker without going through the scan.

    Membership of pi' is re-derived from Kronecker and plethysm values, and
    the rectangular coefficient from the character route directly.
    """
    pi, pi_prime = partition(pi), partition(pi_prime)
    lam = weight if isinstance(weight, SLWeight) else SLWeight(tuple(weight), m * m)
    support = [mu for mu in enumerate_partitions(m * d, max_length=m) if plethysm_mult(mu, m, d)]
    in_sigma = any(kron_char(mu, nu, pi_prime) for mu in support for nu in support)
    r = rectangle(d, n)
    k = kron_char(r, r, pi)
    checks = {
        "size_pi": size(pi) == n * d,
        "size_pi_prime": size(pi_prime) == m * d,
        "interlaces": interlaces(pi, pi_prime),
        "length_pi": length(pi) <= n * n,
        "pi_prime_in_sigma": in_sigma,
        "sl_weight_match": length(pi_prime) <= m * m and sl_weight_of(pi_prime, m * m) == lam,
        "rect_kron_positive": k > 0,
    }
    return {"checks": checks, "rect_kron": k, "ok": all(checks.values())}


def verify_report(report: dict) -> bool:
    """Every blocker in a scan report passes :func:`verify_blocker`."""
    m, n = report["m"], report["n"]
    for cand in report["candidates"]:
        for b in cand["blocked_by"]:
            res = verify_blocker(m, n, b["delta"], b["pi"], b["pi_prime"], cand["lambda"])
            if not res["ok"] or res["rect_kron"] != b["rect_kron"]:
                return False
    return "range-limited" in report["caveat"]


def report_csv(report: dict) -> str:
    """One row per scanned lift: lambda, delta, pi', pi, mult^n_pi, rect_kron."""
    m, n = report["m"], report["n"]
    mult_n = {}
    for d in range(1, report["scanned_delta_max"] + 1):
        for e in sigma_perm_n(m, n, d):
            mult_n[e.pi] = e.mult
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda", "delta", "pi_prime", "pi", "mult_n", "rect_kron", "verdict"])
    for cand in report["candidates"]:
        for pd in cand["per_delta"]:
            for lift in pd["lifts"]:
                pi = tuple(lift["pi"])
                w.writerow([
                    format_partition(cand["lambda"]),
                    pd["delta"],
                    format_partition(lift["pi_prime"]),
                    format_partition(pi),
                    mult_n.get(pi, 0),
                    lift["rect_kron"],
                    cand["verdict"],
                ])
    return buf.getvalue()
