"""Dense univariate polynomials over the integers.

A polynomial c_0 + c_1 x + ... + c_n x^n is stored as the tuple
(c_0, c_1, ..., c_n) with c_n nonzero; the zero polynomial stores ().
Python ints are arbitrary precision, so every operation here is exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

__all__ = [
    "Poly",
    "poly_from_coeffs",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_divrem",
    "poly_eval",
    "is_palindromic",
    "inflate",
    "serialize",
    "parse",
    "UnsupportedDivisor",
]

_COEFF_RE = re.compile(r"[+-]?[0-9]+")


class UnsupportedDivisor(ValueError):
    """Raised when dividing by zero or by a divisor whose leading coefficient is not +1 or -1."""


def _strip(cs) -> Tuple[int, ...]:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class Poly:
    """Immutable integer polynomial in ascending coefficient order."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, j: int) -> int:
        # coefficient of x^j; zero beyond the degree
        if j < 0:
            raise IndexError("negative exponent")
        return self.coeffs[j] if j < len(self.coeffs) else 0

    def __add__(self, other: "Poly") -> "Poly":
        return poly_add(self, other)

    def __sub__(self, other: "Poly") -> "Poly":
        return poly_sub(self, other)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        return poly_mul(self, other)

    def __divmod__(self, other: "Poly"):
        return poly_divrem(self, other)

    def __call__(self, v: int) -> int:
        return poly_eval(self, v)

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def poly_from_coeffs(cs: Iterable[int]) -> Poly:
    """Build a normalized polynomial from ascending coefficients."""
    return Poly(tuple(cs))


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = list(a.coeffs)
    for j, c in enumerate(b.coeffs):
        out[j] += c
    return Poly(tuple(out))


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, -b)


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Schoolbook product."""
    if not a.coeffs or not b.coeffs:
        return Poly()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            out[i + j] += ai * bj
    return Poly(tuple(out))


def poly_divrem(n: Poly, d: Poly) -> Tuple[Poly, Poly]:
    """Return (q, r) with n == q*d + r and deg r < deg d.

    The divisor must have leading coefficient +1 or -1 so that the
    quotient stays integral.
    """
    if d.is_zero():
        raise UnsupportedDivisor("division by the zero polynomial")
    lead = d.coeffs[-1]
    if lead not in (1, -1):
        raise UnsupportedDivisor(
            f"leading coefficient {lead} of divisor is not a unit"
        )
    dd = len(d.coeffs) - 1
    rem = list(n.coeffs)
    if len(rem) <= dd:
        return Poly(), n
    quot = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i] * lead  # lead is its own inverse
        if c == 0:
            continue
        quot[i - dd] = c
        for j, dj in enumerate(d.coeffs):
            rem[i - dd + j] -= c * dj
    return Poly(tuple(quot)), Poly(tuple(rem[:dd]))


def poly_eval(p: Poly, v: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def is_palindromic(p: Poly) -> bool:
    return p.coeffs == p.coeffs[::-1]


def inflate(p: Poly, t: int) -> Poly:
    """Substitute x -> x^t."""
    if t < 1:
        raise ValueError(f"inflation factor must be >= 1, got {t}")
    if t == 1 or not p.coeffs:
        return p
    out = [0] * ((len(p.coeffs) - 1) * t + 1)
    for j, c in enumerate(p.coeffs):
        out[j * t] = c
    return Poly(tuple(out))


def serialize(p: Poly) -> str:
    """Ascending comma-separated decimal coefficients; the zero polynomial is ``0``."""
    if not p.coeffs:
        return "0"
    return ",".join(str(c) for c in p.coeffs)


def parse(text: str) -> Poly:
    """Inverse of :func:`serialize`.

    Accepts whitespace after commas and an explicit sign on each coefficient.
    """
    parts = text.strip().split(",")
    cs = []
    for i, part in enumerate(parts):
        tok = part.lstrip() if i else part
        if not _COEFF_RE.fullmatch(tok):
            raise ValueError(f"malformed coefficient {part!r} in {text!r}")
        cs.append(int(tok))
    return Poly(tuple(cs))
