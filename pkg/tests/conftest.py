import math

import numpy as np
import pytest

from qwhash import _kernel_py, walk
from qwhash.params import WalkParams

try:
    from qwhash import _kernel as _kernel_c
except ImportError:  # pragma: no cover
    _kernel_c = None

BACKENDS = {"python": _kernel_py}
if _kernel_c is not None:
    BACKENDS["cython"] = _kernel_c


@pytest.fixture(params=sorted(BACKENDS))
def backend(request, monkeypatch):
    """Run a test once per available kernel."""
    monkeypatch.setattr(walk, "kernel", BACKENDS[request.param])
    return request.param


@pytest.fixture
def params():
    return WalkParams(theta1=0.7, theta2=1.1, alpha=0.6, beta=0.8j)


def random_params(rng: np.random.Generator, n=None, d=2, k=8) -> WalkParams:
    t1, t2 = rng.uniform(0.01, math.pi / 2 - 0.01, size=2)
    phi, a, b = rng.uniform(0, 2 * math.pi, size=3)
    alpha = math.cos(phi) * complex(math.cos(a), math.sin(a))
    beta = math.sin(phi) * complex(math.cos(b), math.sin(b))
    n = int(rng.integers(2, 8)) if n is None else n
    return WalkParams(t1, t2, alpha, beta, n=n, d=d, k=k)
