"""Controlled alternate quantum walk on a cyclic ``d``-dimensional lattice.

Positions are labelled ``0..n-1`` on every axis and flattened
lexicographically with axis 0 varying slowest. Coin index 0 is "up" (moves
+1 along the current axis), coin index 1 is "down" (moves -1). One walk step
applies coin then shift along axis 0, coin then shift along axis 1, and so
on through axis ``d-1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._backend import kernel
from .message import Message
from .params import ParamError, WalkParams, check_angle

__all__ = [
    "StateVector",
    "coin_matrix",
    "initial_state",
    "apply_coin",
    "shift",
    "unshift",
    "step",
    "step_adjoint",
    "evolve",
    "evolve_probabilities",
    "probabilities",
    "dense_step_matrix",
]

UP, DOWN = 0, 1
DENSE_MAX_CELLS = 1000


@dataclass(frozen=True, eq=False)
class StateVector:
    """Walker state: complex amplitudes of shape ``(n,)*d + (2,)``.

    The last axis is the coin. ``amplitudes`` is treated as read-only; every
    operation returns a new state.
    """

    n: int
    d: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=np.complex128)
        expected = (self.n,) * self.d + (2,)
        if amp.shape != expected:
            raise ValueError(f"amplitude shape {amp.shape} does not match {expected}")
        amp.flags.writeable = False
        object.__setattr__(self, "amplitudes", amp)

    def flat(self) -> np.ndarray:
        """Amplitudes in canonical basis order ``position * 2 + coin``."""
        return self.amplitudes.reshape(-1)

    def norm(self) -> float:
        return float(np.linalg.norm(self.flat()))

    def with_amplitudes(self, amp: np.ndarray) -> "StateVector":
        return StateVector(self.n, self.d, amp)

    @classmethod
    def from_flat(cls, n: int, d: int, flat: np.ndarray) -> "StateVector":
        return cls(n, d, np.asarray(flat).reshape((n,) * d + (2,)))

    def _planes(self) -> np.ndarray:
        flat = self.amplitudes.reshape(-1, 2)
        return np.stack([flat[:, 0].real, flat[:, 0].imag, flat[:, 1].real, flat[:, 1].imag])

    @classmethod
    def _from_planes(cls, n: int, d: int, planes: np.ndarray) -> "StateVector":
        amp = np.empty((n**d, 2), dtype=np.complex128)
        amp[:, 0].real, amp[:, 0].imag = planes[0], planes[1]
        amp[:, 1].real, amp[:, 1].imag = planes[2], planes[3]
        return cls(n, d, amp.reshape((n,) * d + (2,)))


def coin_matrix(theta: float) -> np.ndarray:
    """Return the real coin ``[[cos t, sin t], [sin t, -cos t]]``.

    Raises
    ------
    ParamError
        If ``theta`` is outside the open interval ``(0, pi/2)``.
    """
    theta = check_angle(theta)
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [s, -c]], dtype=np.float64)


def initial_state(params: WalkParams) -> StateVector:
    amp = np.zeros((params.n,) * params.d + (2,), dtype=np.complex128)
    origin = (0,) * params.d
    amp[origin + (UP,)] = params.alpha
    amp[origin + (DOWN,)] = params.beta
    return StateVector(params.n, params.d, amp)


def apply_coin(state: StateVector, coin: np.ndarray) -> StateVector:
    """Apply the 2x2 ``coin`` to the coin register at every position."""
    amp = state.amplitudes
    up, dn = amp[..., UP], amp[..., DOWN]
    out = np.empty_like(amp)
    out[..., UP] = coin[0, 0] * up + coin[0, 1] * dn
    out[..., DOWN] = coin[1, 0] * up + coin[1, 1] * dn
    return state.with_amplitudes(out)


def _check_axis(state: StateVector, axis: int) -> None:
    if not 0 <= axis < state.d:
        raise ValueError(f"axis must be in 0..{state.d - 1}, got {axis}")


def shift(state: StateVector, axis: int) -> StateVector:
    """Move up components +1 and down components -1 along ``axis`` (cyclic)."""
    _check_axis(state, axis)
    amp = state.amplitudes
    out = np.empty_like(amp)
    out[..., UP] = np.roll(amp[..., UP], 1, axis=axis)
    out[..., DOWN] = np.roll(amp[..., DOWN], -1, axis=axis)
    return state.with_amplitudes(out)


def unshift(state: StateVector, axis: int) -> StateVector:
    """Inverse of :func:`shift`."""
    _check_axis(state, axis)
    amp = state.amplitudes
    out = np.empty_like(amp)
    out[..., UP] = np.roll(amp[..., UP], -1, axis=axis)
    out[..., DOWN] = np.roll(amp[..., DOWN], 1, axis=axis)
    return state.with_amplitudes(out)


def step(state: StateVector, coin: np.ndarray) -> StateVector:
    for axis in range(state.d):
        state = shift(apply_coin(state, coin), axis)
    return state


def step_adjoint(state: StateVector, coin: np.ndarray) -> StateVector:
    """Undo :func:`step`; the coin is real symmetric and self-inverse."""
    for axis in reversed(range(state.d)):
        state = apply_coin(unshift(state, axis), coin.T)
    return state


@lru_cache(maxsize=None)
def _shift_sources(n: int, d: int) -> tuple[np.ndarray, np.ndarray]:
    # src_plus[a, p]: flat index of p - e_a, i.e. where up amplitude at p came from.
    idx = np.arange(n**d).reshape((n,) * d)
    plus = np.stack([np.roll(idx, 1, axis=a).reshape(-1) for a in range(d)])
    minus = np.stack([np.roll(idx, -1, axis=a).reshape(-1) for a in range(d)])
    plus.flags.writeable = False
    minus.flags.writeable = False
    return plus, minus


def _coin_tables(params: WalkParams) -> tuple[np.ndarray, np.ndarray]:
    cos2 = np.array([math.cos(params.theta1), math.cos(params.theta2)])
    sin2 = np.array([math.sin(params.theta1), math.sin(params.theta2)])
    return cos2, sin2


def _bits_array(message) -> np.ndarray:
    if isinstance(message, Message):
        return message.as_array()
    if isinstance(message, str):
        return Message.from_bits(message).as_array()
    bits = np.asarray(message, dtype=np.uint8)
    if bits.size and bits.max() > 1:
        raise ValueError("message bits must be 0 or 1")
    return bits


def _evolve_planes(params: WalkParams, message) -> np.ndarray:
    plus, minus = _shift_sources(params.n, params.d)
    cos2, sin2 = _coin_tables(params)
    planes = initial_state(params)._planes()
    return kernel.evolve_planes(planes, _bits_array(message), cos2, sin2, plus, minus)


def evolve(params: WalkParams, message) -> StateVector:
    """Evolve the initial state one step per message bit.

    Bit 0 uses the coin built from ``theta1``, bit 1 the one from ``theta2``.
    The first bit drives the first step.
    """
    return StateVector._from_planes(params.n, params.d, _evolve_planes(params, message))


def evolve_probabilities(params: WalkParams, message) -> np.ndarray:
    """Position probabilities after evolution, flat in canonical order.

    This is the path the digest uses; it never leaves the active kernel.
    """
    return kernel.probabilities(_evolve_planes(params, message))


def probabilities(state: StateVector) -> np.ndarray:
    """Probability of each position, shape ``(n,)*d``."""
    probs = kernel.probabilities(state._planes())
    return probs.reshape((state.n,) * state.d)


def _cyclic_matrix(n: int, offset: int) -> np.ndarray:
    # |x + offset mod n><x|
    m = np.zeros((n, n))
    for x in range(n):
        m[(x + offset) % n, x] = 1.0
    return m


def dense_step_matrix(params: WalkParams, bit: int) -> np.ndarray:
    """Explicit ``(2 n^d) x (2 n^d)`` matrix of one controlled step.

    Built from Kronecker products of cyclic permutations and the coin, with
    no reference to the kernels, so it can serve as an oracle.
    """
    n, d = params.n, params.d
    if n**d > DENSE_MAX_CELLS:
        raise ParamError("n", f"dense matrix limited to n**d <= {DENSE_MAX_CELLS}, got {n**d}")
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit!r}")
    coin = coin_matrix(params.angle(bit))
    eye_n = np.eye(n)
    proj_up = np.diag([1.0, 0.0])
    proj_dn = np.diag([0.0, 1.0])
    coin_full = np.kron(np.eye(n**d), coin)
    total = np.eye(2 * n**d, dtype=np.complex128)
    for axis in range(d):
        fwd = bwd = np.ones((1, 1))
        for a in range(d):
            fwd = np.kron(fwd, _cyclic_matrix(n, 1) if a == axis else eye_n)
            bwd = np.kron(bwd, _cyclic_matrix(n, -1) if a == axis else eye_n)
        shift_full = np.kron(fwd, proj_up) + np.kron(bwd, proj_dn)
        total = shift_full @ coin_full @ total
    return total
