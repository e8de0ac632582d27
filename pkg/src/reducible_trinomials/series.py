"""Truncated integer power series and the Riordan array
R((1 - z^2)/(1 + z^2), z/(1 + z^2)).

Row n of that array, read against powers of k, is the coefficient of z^n
in (1 - z^2)/(1 - k z + z^2), which is the middle coefficient A(k, n) of
the trinomial family.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import check_odd_p

__all__ = [
    "TruncatedSeries",
    "RiordanSpec",
    "series_mul",
    "series_inverse",
    "gf_coefficient_A",
    "riordan_entry",
    "riordan_row_poly",
    "TruncationError",
]


class TruncationError(ValueError):
    """A coefficient beyond the known truncation order was requested."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of z^0 .. z^order. Trailing zeros are kept."""

    coeffs: Tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, cs: Iterable[int], order: int) -> "TruncatedSeries":
        """Pad with zeros or cut off at ``order``."""
        cs = list(cs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        return cls(tuple(cs), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([1], order)

    def __getitem__(self, n: int) -> int:
        if n < 0 or n > self.order:
            raise TruncationError(f"z^{n} is outside truncation order {self.order}")
        return self.coeffs[n]

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    N = a.order
    out = [0] * (N + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(N + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return TruncatedSeries(tuple(out), N)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be +1 or -1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise ValueError(f"constant term {a0} is not a unit")
    N = a.order
    b = [a0]
    for n in range(1, N + 1):
        s = sum(a.coeffs[i] * b[n - i] for i in range(1, n + 1))
        b.append(-a0 * s)
    return TruncatedSeries(tuple(b), N)


def gf_coefficient_A(k: int, p: int) -> int:
    """[z^p] (1 - z^2)/(1 - k z + z^2), by series arithmetic at order p."""
    check_odd_p(p)
    num = TruncatedSeries.from_coeffs([1, 0, -1], p)
    den = TruncatedSeries.from_coeffs([1, -k, 1], p)
    return series_mul(num, series_inverse(den))[p]


class RiordanSpec:
    """The pair g = (1 - z^2)/(1 + z^2), f = z/(1 + z^2) to a fixed order.

    Columns g*f^j are memoized. Reads are lock-free; fills take a lock so
    that each column is computed once.
    """

    __slots__ = ("order", "g", "f", "_cols", "_lock")

    def __init__(self, order: int):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        self.order = order
        inv = series_inverse(TruncatedSeries.from_coeffs([1, 0, 1], order))
        self.g = series_mul(TruncatedSeries.from_coeffs([1, 0, -1], order), inv)
        self.f = series_mul(TruncatedSeries.from_coeffs([0, 1], order), inv)
        self._cols: Dict[int, TruncatedSeries] = {0: self.g}
        self._lock = threading.Lock()

    def column(self, j: int) -> TruncatedSeries:
        """g * f^j."""
        if j < 0:
            raise ValueError("column index must be >= 0")
        col = self._cols.get(j)
        if col is not None:
            return col
        with self._lock:
            top = max(i for i in self._cols if i <= j)
            col = self._cols[top]
            for i in range(top + 1, j + 1):
                col = series_mul(col, self.f)
                self._cols.setdefault(i, col)
            return self._cols[j]

    def entry(self, n: int, j: int) -> int:
        return riordan_entry(n, j, self)

    def __repr__(self):
        return f"RiordanSpec(order={self.order})"


def riordan_entry(n: int, j: int, spec: RiordanSpec) -> int:
    """d_{n,j} = [z^n] g f^j."""
    if n < 0 or j < 0:
        raise ValueError("indices must be >= 0")
    if n > spec.order:
        raise TruncationError(f"row {n} needs order >= {n}, spec has {spec.order}")
    if j > n:
        return 0  # f^j starts at z^j
    return spec.column(j)[n]


def riordan_row_poly(p: int, spec: Optional[RiordanSpec] = None) -> List[int]:
    """[d_{p,0}, ..., d_{p,p}]: A(k, p) as a polynomial in k, ascending."""
    check_odd_p(p)
    if spec is None:
        spec = RiordanSpec(p)
    return [riordan_entry(p, j, spec) for j in range(p + 1)]
