"""Hash function built on a message-controlled alternate quantum walk.

The walker moves on a cyclic ``n x n`` (or ``n x n x n``) lattice; each
message bit picks one of two real coins for a full step. The final position
distribution, scaled by ``1e8`` and reduced modulo ``2**k`` per cell, is the
digest.
"""

from ._backend import BACKEND
from .digest import Digest, cell_value, digest, render_hex
from .message import Message, MessageError
from .params import ParamError, WalkParams
from .stats import (
    collision_test,
    diffusion_test,
    hamming,
    mutate_delete_last,
    mutate_flip,
    mutate_insert,
    random_message,
    theoretical_w,
    uniform_test,
)
from .walk import (
    StateVector,
    apply_coin,
    coin_matrix,
    dense_step_matrix,
    evolve,
    initial_state,
    probabilities,
    shift,
    step,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Digest",
    "Message",
    "MessageError",
    "ParamError",
    "StateVector",
    "WalkParams",
    "apply_coin",
    "cell_value",
    "coin_matrix",
    "collision_test",
    "dense_step_matrix",
    "diffusion_test",
    "digest",
    "evolve",
    "hamming",
    "initial_state",
    "mutate_delete_last",
    "mutate_flip",
    "mutate_insert",
    "probabilities",
    "random_message",
    "render_hex",
    "shift",
    "step",
    "theoretical_w",
    "uniform_test",
]
