"""Exit criteria for the package. Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the summary lines.
"""

import itertools
import math
import os
import subprocess
import sys
import time

import numpy as np
import pytest

from qwhash import stats
from qwhash.digest import digest
from qwhash.message import Message
from qwhash.params import WalkParams
from qwhash.walk import (
    coin_matrix,
    dense_step_matrix,
    evolve,
    initial_state,
    shift,
    step,
    step_adjoint,
)

from conftest import random_params
from test_walk import random_state

SETTINGS = [
    WalkParams(0.7, 1.1, alpha=0.6, beta=0.8j),
    WalkParams(0.3, 1.3),
    WalkParams(1.0, 0.45, alpha=2**-0.5, beta=-(2**-0.5)),
]


@pytest.fixture
def verdict(capsys):
    def report(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {title}: {detail}")
        assert ok, f"criterion {number} failed: {detail}"

    return report


def test_c1_unitarity(verdict):
    rng = np.random.default_rng(2024)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(100):
        p = random_params(rng, d=int(rng.integers(2, 4)), n=int(rng.integers(2, 8)))
        bits = rng.integers(0, 2, size=int(rng.integers(0, 201)), dtype=np.uint8)
        worst = max(worst, abs(evolve(p, bits).norm() - 1))
    elapsed = time.perf_counter() - start
    verdict(1, "unitarity", worst <= 1e-9 and elapsed < 5, f"max |norm-1| = {worst:.2e}, {elapsed:.2f} s")


def test_c2_oracle_equivalence(verdict):
    start = time.perf_counter()
    worst = 0.0
    checked = 0
    for n in (2, 3):
        p = WalkParams(0.45, 1.2, alpha=0.6, beta=-0.8j, n=n)
        mats = [dense_step_matrix(p, b) for b in (0, 1)]
        for length in range(1, 4):
            for bits in itertools.product((0, 1), repeat=length):
                ref = initial_state(p).flat()
                for b in bits:
                    ref = mats[b] @ ref
                worst = max(worst, float(np.abs(evolve(p, bits).flat() - ref).max()))
                checked += 1
    elapsed = time.perf_counter() - start
    ok = checked == 28 and worst <= 1e-12 and elapsed < 5
    verdict(2, "oracle equivalence", ok, f"{checked} cases, max deviation {worst:.2e}, {elapsed:.2f} s")


def test_c3_structural_identities(verdict):
    rng = np.random.default_rng(7)
    inv = max(
        float(np.abs(coin_matrix(t) @ coin_matrix(t) - np.eye(2)).max())
        for t in np.linspace(0.01, math.pi / 2 - 0.01, 50)
    )
    cycle_ok = True
    rev = lin = 0.0
    for n, d in [(2, 2), (5, 2), (4, 3)]:
        s = random_state(rng, n, d)
        for axis in range(d):
            cur = s
            for _ in range(n):
                cur = shift(cur, axis)
            cycle_ok &= np.array_equal(cur.amplitudes, s.amplitudes)
        c = coin_matrix(rng.uniform(0.01, 1.56))
        rev = max(rev, float(np.abs(step_adjoint(step(s, c), c).amplitudes - s.amplitudes).max()))
    for _ in range(20):
        p = random_params(rng)
        bits = rng.integers(0, 2, size=64)
        up = evolve(WalkParams(p.theta1, p.theta2, 1, 0, n=p.n), bits).amplitudes
        dn = evolve(WalkParams(p.theta1, p.theta2, 0, 1, n=p.n), bits).amplitudes
        lin = max(lin, float(np.abs(evolve(p, bits).amplitudes - (p.alpha * up + p.beta * dn)).max()))
    ok = inv <= 1e-14 and cycle_ok and rev <= 1e-12 and lin <= 1e-12
    verdict(3, "structural identities", ok, f"C^2-I {inv:.1e}, cycle {cycle_ok}, adjoint {rev:.1e}, linearity {lin:.1e}")


def test_c4_digest_laws(verdict):
    msg = stats.random_message(128, 1)
    lengths = {
        (n, d, k): digest(WalkParams(0.7, 1.1, n=n, d=d, k=k), msg).bit_length
        for n, d, k in [(5, 2, 8), (5, 3, 8), (7, 2, 8)]
    }
    length_ok = lengths == {(5, 2, 8): 200, (5, 3, 8): 1000, (7, 2, 8): 392}
    empty_ok = all(not digest(p, "").cells.any() for p in SETTINGS)
    nibble_ok = True
    for p in SETTINGS:
        p4 = WalkParams(p.theta1, p.theta2, p.alpha, p.beta, k=4)
        nibble_ok &= np.array_equal(digest(p4, msg).cells, digest(p, msg).cells & np.uint64(15))
    verdict(4, "digest laws", length_ok and empty_ok and nibble_ok, f"lengths {sorted(lengths.values())}, empty zero {empty_ok}, k=4 low nibble {nibble_ok}")


def test_c5_diffusion_band(verdict):
    start = time.perf_counter()
    rows = []
    ok = True
    for i, p in enumerate(SETTINGS):
        r = stats.diffusion_test(p, 1024, msg_len=128, seed=100 + i)
        rows.append(f"B={r.b_mean:.2f} P={r.p_mean:.2f}% dB={r.delta_b:.2f} [{r.b_min},{r.b_max}]")
        ok &= 96 <= r.b_mean <= 104 and 48 <= r.p_mean <= 52 and 5.5 <= r.delta_b <= 8.5
        ok &= r.b_min > 60 and r.b_max < 140
    elapsed = time.perf_counter() - start
    verdict(5, "diffusion band", ok and elapsed < 60, "; ".join(rows) + f"; {elapsed:.1f} s")


@pytest.fixture(scope="module")
def campaign():
    p = SETTINGS[0]
    start = time.perf_counter()
    col = stats.collision_test(p, 10_000, msg_len=128, seed=2017)
    uni = stats.uniform_test(p, 10_000, msg_len=128, seed=2017)
    return col, uni, time.perf_counter() - start


def test_c6_collision(verdict, campaign):
    col, _, elapsed = campaign
    theory = [round(stats.theoretical_w(10_000, 25, 8, w)) for w in range(4)]
    obs = col.histogram
    tail = sum(obs[w] for w in range(4, 26))
    ok = theory == [9068, 889, 42, 1] and abs(obs[0] - 9068) <= 200 and tail <= 3 and elapsed < 600
    detail = f"theory {theory}, observed {[obs[w] for w in range(4)]} + {tail} for w>=4, {elapsed:.1f} s"
    verdict(6, "collision", ok, detail)


def test_c7_uniform(verdict, campaign):
    _, uni, elapsed = campaign
    lo, hi = min(uni.counts), max(uni.counts)
    ok = 4900 <= uni.mean <= 5100 and 4700 <= lo and hi <= 5300 and elapsed < 600
    verdict(7, "uniform", ok, f"mean {uni.mean:.2f}, range [{lo}, {hi}]")


def test_c8_sensitivity(verdict):
    p = SETTINGS[0]
    m = stats.random_message(128, 8)
    base = digest(p, m)
    variants = {
        "flip 8th bit": stats.mutate_flip(m, 7),
        "delete last": stats.mutate_delete_last(m),
        "insert before 100th": stats.mutate_insert(m, 99, 1),
    }
    dist = {name: stats.hamming(base, digest(p, v)) for name, v in variants.items()}
    hexes = [base.hex] + [digest(p, v).hex for v in variants.values()]
    detail = ", ".join(f"{k}={v}" for k, v in dist.items()) + " | " + " ".join(hexes)
    verdict(8, "sensitivity", all(v >= 60 for v in dist.values()) and len(hexes[0]) == 50, detail)


def _cli(*argv):
    cmd = [sys.executable, "-m", "qwhash", *argv]
    return subprocess.run(cmd, capture_output=True, check=True, env=os.environ.copy()).stdout


def test_c9_determinism(verdict):
    base = ["--theta1", "0.7", "--theta2", "1.1", "--alpha=0.6,0", "--beta=0,0.8"]
    hash_same = _cli("hash", *base, "--msg-text", "determinism") == _cli("hash", *base, "--msg-text", "determinism")
    camp = ["avalanche", *base, "--trials", "64", "--seed", "9"]
    camp_same = _cli(*camp) == _cli(*camp) == _cli(*camp, "--workers", "4")
    p = SETTINGS[1]
    par_same = all(
        fn(p, 40, 128, 3, 1).to_json() == fn(p, 40, 128, 3, 3).to_json()
        for fn in (stats.diffusion_test, stats.collision_test, stats.uniform_test)
    )
    ok = hash_same and camp_same and par_same
    verdict(9, "determinism", ok, f"hash {hash_same}, campaign CLI {camp_same}, worker-count invariance {par_same}")


def test_birthday_accounting(verdict):
    wf = stats.birthday_work_factor(200)
    verdict("B", "birthday work factor", wf == 2**100 and f"{wf:.4e}" == "1.2677e+30", f"2^100 = {wf:.4e}")
