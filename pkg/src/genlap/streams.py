"""Seeded random streams.

All randomness goes through numpy's PCG64 bit generator.  A user seed (an
unsigned 64-bit integer) is expanded with :class:`numpy.random.SeedSequence`,
and per-replication substreams use the ``spawn_key`` mechanism, so replication
``i`` of seed ``s`` always sees the same stream no matter how replications are
scheduled across workers.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

_SEED_MAX = 2**64 - 1
_MANTISSA = 2**53


def check_seed(seed) -> int:
    if isinstance(seed, bool) or int(seed) != seed or not 0 <= int(seed) <= _SEED_MAX:
        raise DomainError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    return int(seed)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(check_seed(seed))))


def substream_seed(seed: int, index: int) -> int:
    """64-bit seed for substream ``index`` of ``seed``."""
    if index < 0:
        raise DomainError("substream index must be nonnegative")
    ss = np.random.SeedSequence(check_seed(seed), spawn_key=(int(index),))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def open_uniforms(rng: np.random.Generator, n: int) -> np.ndarray:
    """``n`` uniforms on the open interval (0, 1), on the grid (j + 1/2) / 2**53."""
    k = rng.integers(0, _MANTISSA, size=n, dtype=np.uint64)
    return (k.astype(float) + 0.5) / _MANTISSA
