"""Seeded statistical campaigns over the hash: avalanche, collisions, uniformity.

Every campaign draws trial ``i`` from its own generator, ``PCG64`` seeded by
``SeedSequence(seed, spawn_key=(i,))``. A trial is a random ``msg_len``-bit
message plus one uniformly chosen bit to flip, so diffusion, collision and
uniform campaigns with the same seed look at the same message pairs, and the
results do not depend on how trials are scheduled across workers.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .digest import Digest, cell_values
from .message import Message
from .params import WalkParams
from .walk import evolve_probabilities

__all__ = [
    "DEFAULT_MSG_LEN",
    "mutate_flip",
    "mutate_delete_last",
    "mutate_insert",
    "random_message",
    "trial_rng",
    "hamming",
    "matching_cells",
    "paired_trials",
    "DiffusionReport",
    "CollisionReport",
    "UniformReport",
    "diffusion_test",
    "collision_test",
    "uniform_test",
    "theoretical_w",
    "birthday_work_factor",
]

DEFAULT_MSG_LEN = 128


def mutate_flip(message: Message, index: int) -> Message:
    if not 0 <= index < len(message):
        raise IndexError(f"flip index {index} out of range for {len(message)}-bit message")
    bits = list(message.bits)
    bits[index] ^= 1
    return Message(tuple(bits))


def mutate_delete_last(message: Message) -> Message:
    if not len(message):
        raise IndexError("cannot delete from an empty message")
    return Message(message.bits[:-1])


def mutate_insert(message: Message, index: int, bit: int) -> Message:
    """Insert ``bit`` in front of the bit currently at ``index``."""
    if not 0 <= index <= len(message):
        raise IndexError(f"insert index {index} out of range for {len(message)}-bit message")
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit!r}")
    return Message(message.bits[:index] + (bit,) + message.bits[index:])


def trial_rng(seed: int, trial: int | None = None) -> np.random.Generator:
    if trial is None:
        ss = np.random.SeedSequence(seed)
    else:
        ss = np.random.SeedSequence(seed, spawn_key=(trial,))
    return np.random.Generator(np.random.PCG64(ss))


def random_message(length: int, seed: int) -> Message:
    if length < 1:
        raise ValueError(f"message length must be >= 1, got {length}")
    bits = trial_rng(seed).integers(0, 2, size=length, dtype=np.uint8)
    return Message(tuple(bits.tolist()))


def _check_same_shape(a: Digest, b: Digest) -> None:
    if (a.n, a.d, a.k) != (b.n, b.d, b.k):
        raise ValueError(f"digest lengths differ: {a.bit_length} vs {b.bit_length}")


def hamming(a: Digest, b: Digest) -> int:
    """Number of differing digest bits."""
    _check_same_shape(a, b)
    return int(np.bitwise_count(a.cells ^ b.cells).sum())


def matching_cells(a: Digest, b: Digest) -> int:
    """Number of cells with equal value at equal index."""
    _check_same_shape(a, b)
    return int(np.count_nonzero(a.cells == b.cells))


def _one_trial(params: WalkParams, msg_len: int, seed: int, trial: int):
    rng = trial_rng(seed, trial)
    bits = rng.integers(0, 2, size=msg_len, dtype=np.uint8)
    flip = int(rng.integers(msg_len))
    flipped = bits.copy()
    flipped[flip] ^= 1
    a = cell_values(evolve_probabilities(params, bits), params.k)
    b = cell_values(evolve_probabilities(params, flipped), params.k)
    return a, b


def paired_trials(
    params: WalkParams, trials: int, msg_len: int = DEFAULT_MSG_LEN, seed: int = 0, workers: int = 1
) -> tuple[np.ndarray, np.ndarray]:
    """Cells of the original and one-bit-flipped digests for every trial.

    Returns two ``(trials, n**d)`` uint64 arrays in trial order.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if msg_len < 1:
        raise ValueError(f"msg_len must be >= 1, got {msg_len}")
    run = lambda i: _one_trial(params, msg_len, seed, i)  # noqa: E731
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(trials)))
    else:
        results = [run(i) for i in range(trials)]
    orig = np.stack([r[0] for r in results])
    new = np.stack([r[1] for r in results])
    return orig, new


class _Report:
    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def _csv(self, header, rows) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()


@dataclass(frozen=True)
class DiffusionReport(_Report):
    trials: int
    bit_length: int
    b_min: int
    b_max: int
    b_mean: float
    p_mean: float
    delta_b: float
    delta_p: float
    changed_bits: list[int] = field(repr=False)

    def to_csv(self) -> str:
        return self._csv(["trial", "changed_bits"], enumerate(self.changed_bits))


@dataclass(frozen=True)
class CollisionReport(_Report):
    trials: int
    cells: int
    k: int
    histogram: dict[int, int]
    theoretical: dict[int, float]

    def to_csv(self) -> str:
        rows = ((w, self.histogram[w], repr(self.theoretical[w])) for w in range(self.cells + 1))
        return self._csv(["omega", "observed", "theoretical"], rows)


@dataclass(frozen=True)
class UniformReport(_Report):
    trials: int
    bit_length: int
    counts: list[int]
    mean: float

    def to_csv(self) -> str:
        return self._csv(["position", "changed"], enumerate(self.counts))


def summarize_changes(changed: np.ndarray, bit_length: int) -> DiffusionReport:
    changed = np.asarray(changed, dtype=np.int64)
    n = changed.size
    b_mean = float(changed.sum()) / n
    if n > 1:
        delta_b = math.sqrt(float(((changed - b_mean) ** 2).sum()) / (n - 1))
    else:
        delta_b = 0.0
    return DiffusionReport(
        trials=n,
        bit_length=bit_length,
        b_min=int(changed.min()),
        b_max=int(changed.max()),
        b_mean=b_mean,
        p_mean=b_mean / bit_length * 100,
        delta_b=delta_b,
        delta_p=delta_b / bit_length * 100,
        changed_bits=changed.tolist(),
    )


def diffusion_test(
    params: WalkParams, trials: int, msg_len: int = DEFAULT_MSG_LEN, seed: int = 0, workers: int = 1
) -> DiffusionReport:
    orig, new = paired_trials(params, trials, msg_len, seed, workers)
    changed = np.bitwise_count(orig ^ new).sum(axis=1)
    return summarize_changes(changed, params.bit_length)


def theoretical_w(trials: int, cells: int, k: int, omega: int) -> float:
    """Expected number of trials with exactly ``omega`` matching cells.

    Models each cell as matching independently with probability ``2**-k``.
    """
    if not 0 <= omega <= cells:
        raise ValueError(f"omega must be in 0..{cells}, got {omega}")
    p = 2.0**-k
    log_comb = math.lgamma(cells + 1) - math.lgamma(omega + 1) - math.lgamma(cells - omega + 1)
    log_prob = log_comb + omega * math.log(p) + (cells - omega) * math.log1p(-p)
    return trials * math.exp(log_prob)


def collision_test(
    params: WalkParams, trials: int, msg_len: int = DEFAULT_MSG_LEN, seed: int = 0, workers: int = 1
) -> CollisionReport:
    orig, new = paired_trials(params, trials, msg_len, seed, workers)
    omega = np.count_nonzero(orig == new, axis=1)
    counts = np.bincount(omega, minlength=params.cells + 1)
    return CollisionReport(
        trials=trials,
        cells=params.cells,
        k=params.k,
        histogram={w: int(counts[w]) for w in range(params.cells + 1)},
        theoretical={w: theoretical_w(trials, params.cells, params.k, w) for w in range(params.cells + 1)},
    )


def changed_positions(orig: np.ndarray, new: np.ndarray, k: int) -> np.ndarray:
    """Per digest-bit count of trials in which that bit changed."""
    diff = orig ^ new
    shifts = np.arange(k - 1, -1, -1, dtype=np.uint64)
    bits = (diff[:, :, None] >> shifts) & np.uint64(1)
    return bits.reshape(diff.shape[0], -1).sum(axis=0).astype(np.int64)


def uniform_test(
    params: WalkParams, trials: int, msg_len: int = DEFAULT_MSG_LEN, seed: int = 0, workers: int = 1
) -> UniformReport:
    orig, new = paired_trials(params, trials, msg_len, seed, workers)
    counts = changed_positions(orig, new, params.k)
    return UniformReport(
        trials=trials,
        bit_length=params.bit_length,
        counts=counts.tolist(),
        mean=float(counts.sum()) / params.bit_length,
    )


def birthday_work_factor(bit_length: int) -> int:
    """Trials a generic birthday search needs for a ``bit_length``-bit digest: ``2**(L/2)``."""
    return 2 ** (bit_length // 2) if bit_length % 2 == 0 else math.isqrt(2**bit_length)
