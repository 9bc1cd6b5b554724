import os
import subprocess
import sys

import numpy as np
import pytest

from qwhash import _backend, _kernel_py
from qwhash.walk import _coin_tables, _shift_sources, initial_state

from conftest import BACKENDS, random_params

needs_ext = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernel not built")


@needs_ext
@pytest.mark.parametrize("d", [2, 3])
def test_kernels_bit_identical(d):
    rng = np.random.default_rng(d)
    fast = BACKENDS["cython"]
    for _ in range(25):
        p = random_params(rng, d=d)
        bits = rng.integers(0, 2, size=int(rng.integers(0, 300)), dtype=np.uint8)
        plus, minus = _shift_sources(p.n, p.d)
        cos2, sin2 = _coin_tables(p)
        planes = initial_state(p)._planes()
        a = fast.evolve_planes(planes, bits, cos2, sin2, plus, minus)
        b = _kernel_py.evolve_planes(planes, bits, cos2, sin2, plus, minus)
        assert np.array_equal(a, b)
        assert np.array_equal(fast.probabilities(a), _kernel_py.probabilities(b))


def test_kernel_does_not_mutate_input():
    p = random_params(np.random.default_rng(0))
    planes = initial_state(p)._planes()
    before = planes.copy()
    for kern in BACKENDS.values():
        kern.evolve_planes(planes, np.ones(5, np.uint8), *_coin_tables(p), *_shift_sources(p.n, p.d))
    assert np.array_equal(planes, before)


def test_backend_name():
    assert _backend.BACKEND in ("cython", "python")


def test_forced_fallback_same_digest():
    code = (
        "from qwhash import BACKEND, WalkParams, digest;"
        "print(BACKEND, digest(WalkParams(0.7, 1.1, 0.6, 0.8j), '1100101' * 20).hex)"
    )
    env_py = {**os.environ, "QWHASH_PURE_PYTHON": "1"}
    out_py = subprocess.run([sys.executable, "-c", code], env=env_py, capture_output=True, text=True, check=True)
    out_def = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    name_py, hex_py = out_py.stdout.split()
    _, hex_def = out_def.stdout.split()
    assert name_py == "python"
    assert hex_py == hex_def
