"""Walk parameters and their validation."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["WalkParams", "ParamError"]

_NORM_TOL = 1e-12


class ParamError(ValueError):
    """Raised when walk parameters violate their domain constraints.

    ``field`` names the offending parameter so front ends can point at it.
    """

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def check_angle(theta: float, field: str = "theta") -> float:
    theta = float(theta)
    if not (0.0 < theta < math.pi / 2):
        raise ParamError(field, f"angle must lie in the open interval (0, pi/2), got {theta!r}")
    return theta


@dataclass(frozen=True)
class WalkParams:
    """Parameters of a message-controlled alternate walk.

    Parameters
    ----------
    theta1, theta2 : float
        Coin angles (radians) used for message bits 0 and 1.
    alpha, beta : complex
        Initial coin amplitudes for up and down; must be normalized.
    n : int
        Side length of the cyclic lattice.
    d : int
        Number of spatial axes (2 or 3).
    k : int
        Bits kept per lattice cell in the digest.
    """

    theta1: float
    theta2: float
    alpha: complex = 1.0
    beta: complex = 0.0
    n: int = 5
    d: int = 2
    k: int = 8

    def __post_init__(self):
        for name in ("n", "d", "k"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ParamError(name, f"must be an integer, got {value!r}")
        if self.n < 2:
            raise ParamError("n", f"lattice side must be >= 2, got {self.n}")
        if self.d not in (2, 3):
            raise ParamError("d", f"dimension must be 2 or 3, got {self.d}")
        if not 1 <= self.k <= 32:
            raise ParamError("k", f"bits per cell must be in 1..32, got {self.k}")
        object.__setattr__(self, "theta1", check_angle(self.theta1, "theta1"))
        object.__setattr__(self, "theta2", check_angle(self.theta2, "theta2"))
        alpha, beta = complex(self.alpha), complex(self.beta)
        norm = abs(alpha) ** 2 + abs(beta) ** 2
        if not abs(norm - 1.0) <= _NORM_TOL:
            raise ParamError("alpha/beta", f"|alpha|^2 + |beta|^2 must equal 1, got {norm!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def cells(self) -> int:
        """Number of lattice positions, ``n**d``."""
        return self.n**self.d

    @property
    def bit_length(self) -> int:
        return self.cells * self.k

    def angle(self, bit: int) -> float:
        return self.theta2 if bit else self.theta1
