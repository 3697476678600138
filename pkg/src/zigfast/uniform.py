"""Seeded, pluggable 64-bit uniform sources.

The default generator is xoshiro256++ seeded through splitmix64; splitmix64
itself is available as a lightweight alternative, and a replay source exists
so tests can force exact word sequences through the samplers.  All generators
share one compiled kernel, selected by an integer id, so swapping generators
never touches the sampling code.
"""

from __future__ import annotations

import os
import time

import numpy as np

from . import _kernels
from .errors import BitBudgetExceeded

_MASK64 = (1 << 64) - 1

GENERATOR_IDS = {
    "xoshiro256++": _kernels.XOSHIRO256PP,
    "splitmix64": _kernels.SPLITMIX64,
    "replay": _kernels.REPLAY,
}

SEED_ENV_VAR = "ZIGFAST_SEED"

# The paper-era fast path multiplies the whole word by a 52-bit mantissa,
# squashing the low 12 bits; reusing more than that would leak into output.
MAX_REUSED_BITS = 12


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def _mix(h: int, v: int) -> int:
    _, out = _splitmix64((h ^ (v & _MASK64)) & _MASK64)
    return out


def auto_seed_value() -> int:
    """Seed from ZIGFAST_SEED if set, else hash time-of-day with the PIDs."""
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        return int(env) & _MASK64
    try:
        ppid = os.getppid()
    except OSError:
        ppid = 0x5DEECE66D
    h = _mix(0, time.time_ns())
    h = _mix(h, os.getpid())
    h = _mix(h, ppid)
    return h


def split_index(u: int, bits: int) -> tuple[int, int]:
    """Low ``bits`` bits of ``u`` as an index, plus the word itself.

    The word is returned unmodified: the fast path multiplies the full word,
    accepting sub-ulp coupling between index and magnitude.
    """
    if not 1 <= bits:
        raise ValueError("bits must be >= 1")
    if bits > MAX_REUSED_BITS:
        raise BitBudgetExceeded(f"cannot reuse {bits} low bits; limit is {MAX_REUSED_BITS}")
    return u & ((1 << bits) - 1), u


class UniformSource:
    """Single-owner 64-bit word stream.

    Identical seed and generator give an identical stream on every platform.
    Not thread-safe: concurrent use requires independent instances.
    """

    def __init__(self, seed: int | None = None, generator: str = "xoshiro256++"):
        if generator not in GENERATOR_IDS:
            raise ValueError(f"unknown generator: {generator!r}")
        if generator == "replay":
            raise ValueError("use UniformSource.replay() for replay sources")
        self.generator_id = generator
        self.gid = GENERATOR_IDS[generator]
        if seed is None:
            seed = auto_seed_value()
        self.seed = int(seed) & _MASK64
        if generator == "xoshiro256++":
            s, words = self.seed, []
            for _ in range(4):
                s, w = _splitmix64(s)
                words.append(w)
            self.state = np.array(words, dtype=np.uint64)
        else:
            self.state = np.array([self.seed], dtype=np.uint64)

    @classmethod
    def replay(cls, words) -> "UniformSource":
        """A source that plays back ``words`` verbatim (wrapping)."""
        src = object.__new__(cls)
        src.generator_id = "replay"
        src.gid = GENERATOR_IDS["replay"]
        src.seed = 0
        arr = np.asarray(words, dtype=np.uint64)
        if arr.size == 0:
            raise ValueError("replay source needs at least one word")
        src.state = np.concatenate([np.zeros(1, dtype=np.uint64), arr])
        return src

    def next_u64(self) -> int:
        return int(_kernels.next_u64(self.state, self.gid))

    def next_block(self, n: int) -> np.ndarray:
        out = np.empty(n, dtype=np.uint64)
        _kernels.next_block(self.state, self.gid, out)
        return out

    def clone(self) -> "UniformSource":
        src = object.__new__(UniformSource)
        src.generator_id = self.generator_id
        src.gid = self.gid
        src.seed = self.seed
        src.state = self.state.copy()
        return src


def derive_seed(base: int, stream: int) -> int:
    """Decorrelated per-shard seed for parallel generation."""
    return _mix(_mix(0, base), 0x5851F42D4C957F2D + stream)
