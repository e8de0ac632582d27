"""Exact construction and checking of reducible trinomials x^(2p) - A x^p + 1."""

from .errors import ConsistencyError, ParameterError
from .lucas import LucasSeq, lucas_prefix, lucas_term, lucas_term_fast
from .polyint import (
    Poly,
    inflate,
    is_palindromic,
    parse,
    poly_add,
    poly_divrem,
    poly_eval,
    poly_from_coeffs,
    poly_mul,
    serialize,
)
from .series import (
    RiordanSpec,
    TruncatedSeries,
    gf_coefficient_A,
    riordan_entry,
    riordan_row_poly,
    series_inverse,
    series_mul,
)
from .trinomial import (
    FactorizationCertificate,
    FamilyPoint,
    build_certificate,
    coeff_A,
    coeff_A_closed,
    coeff_A_recurrence,
    cofactor_Q,
    row_polynomial,
    scan_table,
    solve_k,
    verify_divides,
)

__version__ = "0.1.0"
