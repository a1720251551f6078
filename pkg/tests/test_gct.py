import json
from pathlib import Path

import pytest

from gctkit import gct
from gctkit.errors import CeilingError, DomainError
from gctkit.kronecker import entropy_check, kron_char
from gctkit.partitions import SLWeight, enumerate_partitions, interlaces, rectangle, size
from gctkit.plethysm import plethysm_mult


def as_map(entries):
    return {e.pi: e.mult for e in entries}


def sigma_bruteforce(m, d):
    """pi -> sum over the plethysm support of k(mu, nu, pi) N(mu) N(nu)."""
    support = {mu: plethysm_mult(mu, m, d) for mu in enumerate_partitions(m * d, max_length=m)}
    support = {mu: c for mu, c in support.items() if c}
    out = {}
    for pi in enumerate_partitions(m * d):
        c = sum(kron_char(mu, nu, pi) * a * b for mu, a in support.items() for nu, b in support.items())
        if c:
            out[pi] = c
    return out


def test_sigma_perm_examples():
    assert as_map(gct.sigma_perm(2, 1)) == {(2,): 1}
    s22 = gct.sigma_perm(2, 2)
    entry = next(e for e in s22 if e.pi == (4,))
    assert {mu for mu, _, _ in entry.witnesses} <= {(4,), (2, 2)}
    assert ((4,), (4,), 1) in entry.witnesses
    assert as_map(s22) == {(4,): 2, (2, 2): 3, (1, 1, 1, 1): 1}


@pytest.mark.parametrize("m,d", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_sigma_perm_matches_bruteforce(m, d):
    assert as_map(gct.sigma_perm(m, d)) == sigma_bruteforce(m, d)


@pytest.mark.parametrize("m,d", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_sigma_witness_invariants(m, d):
    entries = gct.sigma_perm(m, d)
    assert as_map(entries) == gct.perm_orbit_modules(m, d)
    for e in entries:
        assert size(e.pi) == m * d and e.delta == d
        for mu, nu, k in e.witnesses:
            assert len(mu) <= m and len(nu) <= m
            assert size(mu) == size(nu) == m * d
            assert k == kron_char(mu, nu, e.pi) > 0


def test_sigma_perm_n_examples():
    assert as_map(gct.sigma_perm_n(2, 3, 1)) == {(3,): 1, (2, 1): 1}
    assert as_map(gct.sigma_perm_n(2, 4, 1)) == {(4,): 1, (3, 1): 1, (2, 2): 1}
    for m, d in [(2, 1), (2, 2), (3, 1)]:
        assert as_map(gct.sigma_perm_n(m, m, d)) == as_map(gct.sigma_perm(m, d))


def test_sigma_perm_n_lifts_interlace():
    base = as_map(gct.sigma_perm(2, 2))
    for e in gct.sigma_perm_n(2, 3, 2):
        assert size(e.pi) == 6
        assert any(interlaces(e.pi, q) for q in base)


def test_det_orbit_examples():
    assert gct.det_orbit_modules(2, 1) == {(2,): 1}
    assert gct.det_orbit_modules(2, 2) == {(4,): 1, (2, 2): 1, (1, 1, 1, 1): 1}
    assert gct.det_orbit_modules(3, 1) == {(3,): 1}
    assert gct.perm_orbit_modules(2, 1) == {(2,): 1}
    assert gct.perm_orbit_modules(3, 1) == {(3,): 1}


@pytest.mark.parametrize("n,d", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (2, 4)])
def test_det_orbit_keys_satisfy_constraints(n, d):
    r = rectangle(d, n)
    for pi, k in gct.det_orbit_modules(n, d).items():
        assert k > 0 and size(pi) == n * d
        assert sum(pi[:n]) >= d
        assert entropy_check(r, r, pi, k)["bound_holds"]


def test_scan_example_blocked_by_row():
    rep = gct.occurrence_obstruction_scan(2, 3, 1)
    assert rep["report_version"] == gct.REPORT_VERSION
    assert "range-limited" in rep["caveat"]
    assert rep["scanned_delta_max"] == 1
    cand = next(c for c in rep["candidates"] if c["min_partition"] == [2])
    assert cand["verdict"] == "blocked"
    assert any(b["pi"] == [3] for b in cand["blocked_by"])


@pytest.mark.parametrize("m,n,dmax", [(2, 2, 2), (2, 3, 2), (3, 3, 1), (2, 4, 2)])
def test_scan_blockers_reverify(m, n, dmax):
    rep = gct.occurrence_obstruction_scan(m, n, dmax)
    assert gct.verify_report(rep)
    for cand in rep["candidates"]:
        for pd in cand["per_delta"]:
            for lift in pd["lifts"]:
                assert size(lift["pi"]) == n * pd["delta"]  # degree grading


def test_verify_blocker_rejects_bad_claim():
    res = gct.verify_blocker(2, 3, 1, (2, 1), (2,), (2, 0, 0))
    assert not res["ok"] and not res["checks"]["rect_kron_positive"]


def test_scan_is_deterministic_across_jobs():
    a = json.dumps(gct.occurrence_obstruction_scan(2, 3, 2, jobs=1), sort_keys=True)
    b = json.dumps(gct.occurrence_obstruction_scan(2, 3, 2, jobs=2), sort_keys=True)
    assert a == b


def test_weight_without_sigma_entries_is_out_of_model():
    # a weight that no Sigma entry of degree <= 1 has: vacuous, not an obstruction
    res = gct._scan_weight((2, 3, 1, (0, 1, 0)))
    assert res["verdict"] == "out_of_model" and not res["blocked_by"]


def test_scan_schema_fields():
    schema = json.loads((Path(gct.__file__).parent / "schemas" / "obstruction-report.schema.json").read_text())
    rep = gct.occurrence_obstruction_scan(2, 2, 1)
    assert set(schema["required"]) <= set(rep)
    for c in rep["candidates"]:
        assert c["verdict"] in schema["properties"]["candidates"]["items"]["properties"]["verdict"]["enum"]


def test_csv_has_one_row_per_lift():
    rep = gct.occurrence_obstruction_scan(2, 3, 1)
    lines = gct.report_csv(rep).strip().splitlines()
    lifts = sum(len(pd["lifts"]) for c in rep["candidates"] for pd in c["per_delta"])
    assert lines[0].startswith("lambda,delta,pi_prime,pi,mult_n,rect_kron")
    assert len(lines) == lifts + 1


def test_scan_domain_and_ceiling(monkeypatch):
    with pytest.raises(DomainError):
        gct.occurrence_obstruction_scan(3, 2, 1)
    monkeypatch.setenv("GCTKIT_MAX_GCT_SIZE", "4")
    with pytest.raises(CeilingError):
        gct.occurrence_obstruction_scan(2, 3, 2)


def test_sigma_entry_json():
    e = gct.sigma_perm(2, 1)[0]
    assert e.to_json() == {"pi": [2], "delta": 1, "mult": 1, "witnesses": [{"mu": [2], "nu": [2], "k": 1}]}
