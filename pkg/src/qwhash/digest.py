"""Turn the final position distribution into a fixed-length hash value."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import WalkParams
from .walk import evolve_probabilities

__all__ = ["SCALE", "Digest", "cell_value", "cell_values", "digest", "render_hex"]

SCALE = 10**8


def cell_value(p: float, k: int) -> int:
    """``floor(p * 1e8) mod 2**k`` using the double-precision product."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p!r}")
    return int(math.floor(float(p) * SCALE)) % (1 << k)


def cell_values(probs: np.ndarray, k: int) -> np.ndarray:
    """Vectorized :func:`cell_value`; returns uint64 cells."""
    scaled = np.floor(np.asarray(probs, dtype=np.float64) * float(SCALE))
    # p may exceed 1 by an ulp after rounding; the int cast is still exact.
    return (scaled.astype(np.int64) % (1 << k)).astype(np.uint64)


@dataclass(frozen=True, eq=False)
class Digest:
    """``n**d`` cells of ``k`` bits each, in canonical position order."""

    n: int
    d: int
    k: int
    cells: np.ndarray

    def __post_init__(self):
        cells = np.asarray(self.cells, dtype=np.uint64).reshape(-1)
        if cells.size != self.n**self.d:
            raise ValueError(f"expected {self.n ** self.d} cells, got {cells.size}")
        if cells.size and int(cells.max()) >= 1 << self.k:
            raise ValueError(f"cell value exceeds {self.k} bits")
        cells.flags.writeable = False
        object.__setattr__(self, "cells", cells)

    @property
    def bit_length(self) -> int:
        return self.cells.size * self.k

    def bit_array(self) -> np.ndarray:
        """Digest bits as a uint8 array, each cell most-significant bit first."""
        shifts = np.arange(self.k - 1, -1, -1, dtype=np.uint64)
        return ((self.cells[:, None] >> shifts) & np.uint64(1)).astype(np.uint8).reshape(-1)

    @property
    def bits(self) -> str:
        return "".join("01"[b] for b in self.bit_array())

    def to_int(self) -> int:
        value = 0
        for cell in self.cells.tolist():
            value = (value << self.k) | cell
        return value

    @property
    def hex(self) -> str:
        return render_hex(self)

    def to_bytes(self) -> bytes:
        """Raw cells, one byte each; defined only for ``k == 8``."""
        if self.k != 8:
            raise ValueError("binary output is defined only for k == 8")
        return self.cells.astype(np.uint8).tobytes()

    def __eq__(self, other):
        if not isinstance(other, Digest):
            return NotImplemented
        return (self.n, self.d, self.k) == (other.n, other.d, other.k) and np.array_equal(
            self.cells, other.cells
        )

    def __hash__(self):
        return hash((self.n, self.d, self.k, self.cells.tobytes()))

    def __str__(self) -> str:
        return self.hex


def render_hex(digest: Digest) -> str:
    """Uppercase hex of the digest bit string read as a big-endian integer.

    Lengths that are not a multiple of four are zero-padded on the left.
    """
    width = -(-digest.bit_length // 4)
    return format(digest.to_int(), f"0{width}X") if width else ""


def digest(params: WalkParams, message) -> Digest:
    probs = evolve_probabilities(params, message)
    return Digest(params.n, params.d, params.k, cell_values(probs, params.k))
