"""The family x^(2p) - A x^p + 1 = (x^2 - k x + 1) * Q(k, p).

For odd p and any integer k, the middle coefficient is

    A(k, p) = sum_{i=0}^{(p-1)/2} (-1)^(i + (p-1)/2) * p/(2i+1)
              * binomial(i + (p-1)/2, 2i) * k^(2i+1)

which equals a_{p+2} - a_p for the sequence of :mod:`.lucas`. The
cofactor Q is the palindrome a_2, a_3, ..., a_{p+1}, a_p, ..., a_2.

Three routes compute A: closed form, recurrence, and generating function
(:func:`.series.gf_coefficient_A`). The recurrence is the default.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt
from typing import Iterable, List, NamedTuple, Optional

from .errors import ConsistencyError, ParameterError, check_odd_p
from .lucas import lucas_pair_fast, lucas_prefix
from .polyint import Poly, inflate, is_palindromic, poly_divrem, poly_mul

__all__ = [
    "FamilyPoint",
    "FactorizationCertificate",
    "TableRow",
    "coeff_A",
    "coeff_A_closed",
    "coeff_A_recurrence",
    "row_polynomial",
    "trinomial",
    "quadratic_factor",
    "cofactor_Q",
    "build_certificate",
    "inflate_certificate",
    "verify_divides",
    "solve_k",
    "is_probable_prime",
    "scan_table",
    "VERIFY_EVERY",
]

VERIFY_EVERY = 16
PRIME_LIMIT = 1 << 20


@dataclass(frozen=True)
class FamilyPoint:
    """A member of the family: odd p >= 1 and any integer k."""

    p: int
    k: int

    def __post_init__(self):
        check_odd_p(self.p)
        if not isinstance(self.k, int):
            raise ParameterError(f"k must be an integer, got {self.k!r}")


def _closed_coeff(p: int, i: int) -> int:
    # coefficient of k^(2i+1); p * binomial is divisible by 2i+1
    h = (p - 1) // 2
    num = p * comb(i + h, 2 * i)
    q, r = divmod(num, 2 * i + 1)
    if r:
        raise ConsistencyError(
            f"p*binomial = {num} not divisible by {2 * i + 1} (p={p}, i={i})"
        )
    return -q if (i + h) % 2 else q


def row_polynomial(p: int) -> List[int]:
    """Ascending coefficients of A(k, p) as a polynomial in k.

    >>> row_polynomial(5)
    [0, 5, 0, -5, 0, 1]
    """
    check_odd_p(p)
    out = [0] * (p + 1)
    for i in range((p - 1) // 2 + 1):
        out[2 * i + 1] = _closed_coeff(p, i)
    return out


def coeff_A_closed(pt: FamilyPoint) -> int:
    p, k = pt.p, pt.k
    return sum(
        _closed_coeff(p, i) * k ** (2 * i + 1) for i in range((p - 1) // 2 + 1)
    )


def coeff_A_recurrence(pt: FamilyPoint) -> int:
    """k*a_{p+1} - 2*a_p, with both terms from one doubling pass."""
    a_p, a_p1 = lucas_pair_fast(pt.k, pt.p)
    return pt.k * a_p1 - 2 * a_p


def coeff_A(k: int, p: int) -> int:
    """A(k, p) by the default (recurrence) route."""
    return coeff_A_recurrence(FamilyPoint(p, k))


def trinomial(p: int, A: int) -> Poly:
    """x^(2p) - A x^p + 1."""
    if p < 1:
        raise ParameterError(f"p must be positive, got {p}")
    cs = [0] * (2 * p + 1)
    cs[0] = cs[2 * p] = 1
    cs[p] = -A
    return Poly(tuple(cs))


def quadratic_factor(k: int) -> Poly:
    return Poly((1, -k, 1))


def cofactor_Q(pt: FamilyPoint) -> Poly:
    """Palindromic cofactor of degree 2p - 2 whose first half is a_2 .. a_{p+1}."""
    half = lucas_prefix(pt.k, pt.p + 1)[1:]
    return Poly(tuple(half + half[-2::-1]))


@dataclass(frozen=True)
class FactorizationCertificate:
    point: FamilyPoint
    A: int
    quadratic: Poly
    cofactor: Poly
    verified: bool

    @property
    def trinomial(self) -> Poly:
        return trinomial(self.point.p, self.A)


def build_certificate(pt: FamilyPoint) -> FactorizationCertificate:
    """Construct both factors and check their product against the trinomial.

    Raises ConsistencyError if the product differs; an unverified
    certificate is never returned.
    """
    A = coeff_A_recurrence(pt)
    quad = quadratic_factor(pt.k)
    cof = cofactor_Q(pt)
    expected = trinomial(pt.p, A)
    product = poly_mul(quad, cof)
    verified = (
        product == expected
        and cof.degree == 2 * pt.p - 2
        and is_palindromic(cof)
    )
    if not verified:
        raise ConsistencyError(
            f"(x^2 - {pt.k}x + 1) * Q != x^{2 * pt.p} - {A}x^{pt.p} + 1"
        )
    return FactorizationCertificate(pt, A, quad, cof, verified)


def inflate_certificate(cert: FactorizationCertificate, t: int):
    """Both factors under x -> x^t, and their product.

    The product is x^(2tp) - A x^(tp) + 1, so P(tp, A) is reducible too.
    """
    q, c = inflate(cert.quadratic, t), inflate(cert.cofactor, t)
    return q, c, poly_mul(q, c)


def verify_divides(A: int, p: int, k: int) -> bool:
    """True iff x^2 - kx + 1 divides x^(2p) - A x^p + 1, by exact division."""
    check_odd_p(p)
    _, r = poly_divrem(trinomial(p, A), quadratic_factor(k))
    return r.is_zero()


def _solve_nonneg(A: int, p: int) -> Optional[int]:
    # k >= 0 with A(k, p) == A; A is strictly increasing in k from k = 2 on
    if A == 0:
        return 0
    if coeff_A(1, p) == A:
        return 1
    if A < 2:
        return None
    if A == 2:
        return 2
    hi = 1 << (-(-A.bit_length() // p) + 2)
    while coeff_A(hi, p) < A:
        hi <<= 1
    lo = 2  # A(lo) < A <= A(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if coeff_A(mid, p) < A:
            lo = mid
        else:
            hi = mid
    return hi if coeff_A(hi, p) == A else None


def solve_k(A: int, p: int) -> Optional[int]:
    """Find k with A(k, p) == A, or None.

    Non-negative solutions are preferred. Negative A falls back to the odd
    symmetry A(-k, p) = -A(k, p) and returns a negative k. Some small values
    have two preimages (for p = 3 mod 6, A(1, p) = A(-2, p) = -2); the
    non-negative one is returned.
    """
    check_odd_p(p)
    k = _solve_nonneg(A, p)
    if k is None and A < 0:
        k = _solve_nonneg(-A, p)
        if k is not None:
            k = -k
    return k


def is_probable_prime(p: int) -> bool:
    """Trial division; exact for p < 2^20."""
    if p < 1:
        raise ParameterError(f"p must be positive, got {p}")
    if p >= PRIME_LIMIT:
        raise ParameterError(f"primality annotation supports p < 2^20, got {p}")
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


class TableRow(NamedTuple):
    p: int
    k: int
    A: int
    prime: Optional[bool]  # None above the annotation limit
    verified: Optional[bool]  # None when the row was not sampled


def scan_table(
    p_list: Iterable[int], k_max: int, verify_all: bool = False
) -> List[TableRow]:
    """Rows (p, k, A) for each p in ``p_list`` and 1 <= k <= k_max.

    Every VERIFY_EVERY-th row (starting with the first) is re-checked by
    exact division; ``verify_all`` checks every row.
    """
    p_list = list(p_list)
    for p in p_list:
        check_odd_p(p)
    if k_max < 1:
        raise ParameterError(f"k_max must be >= 1, got {k_max}")
    rows = []
    n = 0
    for p in p_list:
        prime = is_probable_prime(p) if p < PRIME_LIMIT else None
        for k in range(1, k_max + 1):
            A = coeff_A(k, p)
            verified = None
            if verify_all or n % VERIFY_EVERY == 0:
                verified = verify_divides(A, p, k)
                if not verified:
                    raise ConsistencyError(f"row p={p}, k={k}, A={A} failed division")
            rows.append(TableRow(p, k, A, prime, verified))
            n += 1
    return rows
