"""Acceptance suite: one PASS/FAIL line per criterion, printed to the terminal."""
import os
import subprocess
import sys
import time

import pytest

from quiverhall import verify as V
from quiverhall.cache import PolyCache
from quiverhall.hall import hall_polynomial, set_default_cache


@pytest.fixture
def report(capsys):
    def emit(n, ok, text):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {text}")
        return ok
    return emit


def _failed(checks):
    return [(c.name, c.detail) for c in checks if not c.ok]


def test_criterion_01_hall_existence(report):
    t0 = time.perf_counter()
    checks = V.check_hall_existence()
    dt = time.perf_counter() - t0
    triples = sum(c.detail["triples"] for c in checks)
    bad = _failed(checks)
    ok = not bad and dt < 300
    assert report(1, ok, f"{triples} triples certified at held-out prime powers in {dt:.1f}s"), bad


def test_criterion_02_seed_counts(report):
    checks = V.check_seeds()
    ok = not _failed(checks)
    assert report(2, ok, f"seed Hall numbers at q=2,3,4: {checks[0].detail['counts']}"), checks[0].detail


def test_criterion_03_laurent_and_associativity(report):
    checks = V.check_algebra()
    laurent = [c for c in checks if c.name.startswith("structure")]
    n_h = sum(c.detail["constants"] for c in laurent)
    omega = sum(c.detail["omega_dependent"] for c in laurent)
    n_assoc = sum(c.detail["triples"] for c in checks if c.name.startswith("associativity"))
    ok = not _failed(checks) and omega == 0
    assert report(3, ok, f"{n_h} structure constants Laurent, omega part zero in all; "
                         f"{n_assoc} associativity triples exact"), _failed(checks)


def test_criterion_04_involutivity(report):
    checks = [c for c in V.check_bar() if c.name.startswith("involution")]
    ok = not _failed(checks)
    assert report(4, ok, f"R bar(R) = I on {len(checks)} dimension vectors"), _failed(checks)


def test_criterion_05_p_matrix_properties(report):
    checks = [c for c in V.check_corollary(qs=()) if c.name.startswith("P properties")]
    ok = not _failed(checks)
    assert report(5, ok, f"triangularity, unit diagonal, vZ[v] and parity on {len(checks)} matrices P"), \
        _failed(checks)


def test_criterion_06_route_agreement(report):
    checks = [c for c in V.check_bar() if not c.name.startswith("involution")]
    names = "; ".join(c.name for c in checks)
    ok = not _failed(checks)
    assert report(6, ok, names), _failed(checks)


def test_criterion_07_slice_identities(report):
    t0 = time.perf_counter()
    checks = V.check_slice()
    dt = time.perf_counter() - t0
    ok = not _failed(checks) and dt < 120
    assert report(7, ok, f"{len(checks)} slice/unipotent checks at q=2,3 in {dt:.1f}s"), _failed(checks)


def test_criterion_08_bar_pbw_identity(report):
    checks = [c for c in V.check_corollary() if c.name.startswith("bar-PBW")]
    ok = not _failed(checks)
    assert report(8, ok, f"bar-PBW identity exact on {len(checks)} (dimension, q) pairs, q in 4, 9"), \
        _failed(checks)


def test_criterion_09_folding(report):
    checks = V.check_folding()
    ok = not _failed(checks)
    text = "; ".join(f"{c.name.split()[-1]} cartan={c.detail['cartan']} s={c.detail['symmetrizer']} "
                     f"roots={c.detail['roots']}" for c in checks)
    assert report(9, ok, text), _failed(checks)


def _verify_all():
    env = dict(os.environ)
    env.pop("QUIVERHALL_CACHE", None)
    out = subprocess.run([sys.executable, "-m", "quiverhall.cli", "verify", "all", "--format", "json",
                          "--jobs", "4"], capture_output=True, env=env)
    return out.returncode, out.stdout


def test_criterion_10_determinism_and_cache(report, tmp_path):
    (c1, o1), (c2, o2) = _verify_all(), _verify_all()
    same = c1 == c2 == 0 and o1 == o2 and len(o1) > 0
    path = tmp_path / "cache.jsonl"
    cache = PolyCache(str(path))
    set_default_cache(cache)
    try:
        for L, M, N in V.hall_triples("A2", 4):
            hall_polynomial(L, M, N)
    finally:
        set_default_cache(None)
    picked = PolyCache(str(path)).verify(fraction=0.1, seed=0)
    ok = same and len(picked) > 0
    assert report(10, ok, f"two verify-all runs byte-identical ({len(o1)} bytes); "
                          f"cache verify re-evaluated {len(picked)} of {len(cache.keys())} records"), (c1, c2)
