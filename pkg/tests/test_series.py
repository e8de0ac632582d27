import threading

import pytest
from hypothesis import given, strategies as st

from reducible_trinomials.errors import ParameterError
from reducible_trinomials.series import (
    RiordanSpec,
    TruncatedSeries,
    TruncationError,
    gf_coefficient_A,
    riordan_entry,
    riordan_row_poly,
    series_inverse,
    series_mul,
)

from oracles import a_iter, closed_form_fraction

S = TruncatedSeries.from_coeffs


def test_series_keeps_trailing_zeros():
    s = series_mul(S([1, 1], 3), S([1, -1], 3))
    assert s.coeffs == (1, 0, -1, 0) and s.order == 3
    with pytest.raises(ValueError):
        TruncatedSeries((1, 0), 3)


def test_mul_identity_and_mismatch():
    a = S([2, -7, 0, 4], 3)
    assert series_mul(a, TruncatedSeries.one(3)) == a
    with pytest.raises(ValueError):
        series_mul(a, TruncatedSeries.one(4))


def test_inverse_examples():
    inv = series_inverse(S([1, 0, 1], 6))
    assert inv.coeffs == (1, 0, -1, 0, 1, 0, -1)
    assert series_mul(S([1, 0, 1], 6), inv) == TruncatedSeries.one(6)
    assert series_inverse(TruncatedSeries.one(0)).coeffs == (1,)
    inv = series_inverse(S([1, -3, 1], 5))
    assert inv.coeffs == (1, 3, 8, 21, 55, 144)
    assert list(inv.coeffs) == [a_iter(3, n + 2) for n in range(6)]
    with pytest.raises(ValueError):
        series_inverse(S([2, 1], 3))


def test_coefficient_beyond_order():
    with pytest.raises(TruncationError):
        S([1], 3)[4]


@given(
    st.sampled_from([1, -1]),
    st.lists(st.integers(-10**6, 10**6), max_size=15),
    st.integers(0, 15),
)
def test_inverse_property(c0, rest, order):
    a = S([c0] + rest, order)
    assert series_mul(a, series_inverse(a)) == TruncatedSeries.one(order)


def test_gf_coefficient_examples():
    assert gf_coefficient_A(3, 5) == 123
    assert gf_coefficient_A(2, 7) == 2
    assert gf_coefficient_A(1, 3) == -2
    for p in (0, 2, -1):
        with pytest.raises(ParameterError):
            gf_coefficient_A(3, p)


def test_gf_matches_lucas_difference():
    for p in range(1, 40, 2):
        for k in range(-12, 13):
            assert gf_coefficient_A(k, p) == a_iter(k, p + 2) - a_iter(k, p)


def test_riordan_spec_shape():
    spec = RiordanSpec(8)
    assert spec.g[0] == 1
    assert spec.f[0] == 0 and spec.f[1] == 1


def test_riordan_entries():
    spec = RiordanSpec(5)
    assert riordan_entry(5, 1, spec) == 5
    assert riordan_entry(5, 3, spec) == -5
    assert riordan_entry(5, 2, spec) == 0
    assert riordan_entry(5, 5, spec) == 1
    assert riordan_entry(2, 7, spec) == 0
    with pytest.raises(TruncationError):
        riordan_entry(6, 1, spec)


def test_riordan_rows():
    assert riordan_row_poly(5) == [0, 5, 0, -5, 0, 1]
    assert riordan_row_poly(1) == [0, 1]
    assert riordan_row_poly(3) == [0, -3, 0, 1]
    with pytest.raises(ParameterError):
        riordan_row_poly(4)
    with pytest.raises(TruncationError):
        riordan_row_poly(7, RiordanSpec(5))


def test_row_sums_equal_gf_coefficient():
    spec = RiordanSpec(11)
    for p in (1, 3, 5, 7, 9, 11):
        row = riordan_row_poly(p, spec)
        for k in range(-10, 11):
            assert sum(c * k ** j for j, c in enumerate(row)) == gf_coefficient_A(k, p)


def test_parity_vanishing():
    spec = RiordanSpec(24)
    for n in range(25):
        for j in range(n + 1):
            if (n - j) % 2:
                assert riordan_entry(n, j, spec) == 0


def test_odd_columns_match_binomial_sum():
    spec = RiordanSpec(11)
    for p in (1, 3, 5, 7, 9, 11):
        for i in range((p - 1) // 2 + 1):
            assert riordan_entry(p, 2 * i + 1, spec) == closed_form_fraction(p, i)


def test_concurrent_fill_is_consistent():
    spec = RiordanSpec(40)
    results = []

    def work():
        results.append([riordan_entry(40, j, spec) for j in range(41)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    expected = [riordan_entry(40, j, RiordanSpec(40)) for j in range(41)]
    assert all(r == expected for r in results)
