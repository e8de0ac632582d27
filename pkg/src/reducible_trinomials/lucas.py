"""The sequence a_1 = 0, a_2 = 1, a_{i+2} = k*a_{i+1} - a_i.

Indexing is 1-based throughout the public functions. In Lucas-sequence
terms a_i = U_{i-1}(k, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

__all__ = [
    "LucasSeq",
    "lucas_term",
    "lucas_term_fast",
    "lucas_pair_fast",
    "lucas_prefix",
]


def _check_index(i: int) -> None:
    if i < 1:
        raise ValueError(f"sequence index must be >= 1, got {i}")


def lucas_term(k: int, i: int) -> int:
    """a_i by forward iteration from the seeds."""
    _check_index(i)
    a, b = 0, 1
    for _ in range(i - 1):
        a, b = b, k * b - a
    return a


def _u_pair(k: int, n: int) -> Tuple[int, int]:
    # (U_n, U_{n+1}) for U_0 = 0, U_1 = 1, by binary doubling:
    #   U_{2m}   = U_m * (2*U_{m+1} - k*U_m)
    #   U_{2m+1} = U_{m+1}^2 - U_m^2
    u, v = 0, 1
    for bit in bin(n)[2:] if n else "":
        u, v = u * (2 * v - k * u), v * v - u * u
        if bit == "1":
            u, v = v, k * v - u
    return u, v


def lucas_pair_fast(k: int, i: int) -> Tuple[int, int]:
    """(a_i, a_{i+1}) in O(log i) big-integer steps."""
    _check_index(i)
    return _u_pair(k, i - 1)


def lucas_term_fast(k: int, i: int) -> int:
    """a_i via recurrence doubling; agrees with :func:`lucas_term`."""
    return lucas_pair_fast(k, i)[0]


def lucas_prefix(k: int, n: int) -> List[int]:
    """[a_1, ..., a_n] in one forward pass."""
    if n < 1:
        raise ValueError(f"prefix length must be >= 1, got {n}")
    out = [0, 1][:n]
    while len(out) < n:
        out.append(k * out[-1] - out[-2])
    return out


@dataclass(frozen=True)
class LucasSeq:
    """The sequence for a fixed multiplier ``k``, indexable from 1."""

    k: int

    def __getitem__(self, i: int) -> int:
        return lucas_term_fast(self.k, i)

    def prefix(self, n: int) -> List[int]:
        return lucas_prefix(self.k, n)
