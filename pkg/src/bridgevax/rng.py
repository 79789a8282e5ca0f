"""Deterministic, platform-independent random streams for simulations.

The generator is fixed by contract and must never change silently:
seeded runs, stream splitting, and every committed expected value in the
test suite depend on the exact construction below.

Construction (all arithmetic modulo 2**64):

* ``mix64`` is the splitmix64 finalizer (Steele, Lea & Flood), a full
  64-bit avalanche function.
* A stream seeded with ``s`` produces, as its j-th raw draw (j >= 0),
  ``mix64(s + (j + 1) * GOLDEN)`` where ``GOLDEN`` is the splitmix64
  increment 0x9E3779B97F4A7C15.
* Raw draws map to floats by taking the top 53 bits:
  ``u = (raw >> 11) * 2**-53``, uniform on [0, 1).  ``u`` can be exactly
  0.0 (probability 2**-53) and is always strictly below 1.0.
* Substream ``i`` of seed ``s`` is seeded with
  ``substream_seed(s, i) = mix64(s + (i + 1) * GOLDEN)`` -- a counter
  mixed with the parent seed through the avalanche function.

Only Python integer arithmetic is used, so results are identical on
every platform and interpreter.
"""

from __future__ import annotations

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN = 0x9E3779B97F4A7C15

_MIX_M1 = 0xBF58476D1CE4E5B9
_MIX_M2 = 0x94D049BB133111EB
_TO_UNIT = 2.0**-53


def mix64(x: int) -> int:
    """splitmix64 finalizer: avalanche a 64-bit value."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * _MIX_M1) & MASK64
    x = ((x ^ (x >> 27)) * _MIX_M2) & MASK64
    return x ^ (x >> 31)


def substream_seed(seed: int, index: int) -> int:
    """Seed of substream ``index`` (>= 0) of ``seed``."""
    if index < 0:
        raise ValueError(f"substream index must be >= 0, got {index}")
    return mix64((seed + (index + 1) * GOLDEN) & MASK64)


class RandomStream:
    """Sequential stream of uniform floats on [0, 1).

    Stateful but tiny: the state is a single 64-bit counter seeded at
    construction.  Streams for parallel work should be derived with
    :func:`substream_seed` / :func:`stream`, never by seed arithmetic.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_float(self) -> float:
        """Next uniform draw on [0, 1)."""
        self._state = s = (self._state + GOLDEN) & MASK64
        z = ((s ^ (s >> 30)) * _MIX_M1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX_M2) & MASK64
        return ((z ^ (z >> 31)) >> 11) * _TO_UNIT


def stream(seed: int, index: int) -> RandomStream:
    """Independent stream ``index`` derived from ``seed``."""
    return RandomStream(substream_seed(seed, index))
