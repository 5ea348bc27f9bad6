"""Series expansion, explicit formulas, and the growth estimate."""

from fractions import Fraction
from math import factorial

import pytest

from kinks import (
    CoefficientError,
    asymptotic_estimate,
    bivariate_series,
    closed_form,
    convergence_report,
    dp_table,
    fixed_kinks_series,
    max_kinks,
    series_table,
)
from kinks.genfunc import _as_count
from helpers import GOLDEN


def test_series_table_reference_coefficients():
    assert series_table(7, 3).count(7, 2) == 2880
    assert series_table(10, 4).row(10) == (512, 128512, 1304832, 1841152, 353792)


def test_series_table_reproduces_reference_rows():
    table = series_table(10, 4)
    for n in range(2, 11):
        assert table.row(n) == GOLDEN[n]


def test_series_vanishes_above_max_kinks():
    series = bivariate_series(9, 9)
    ninth = series.coefficient(9)
    for d in range(max_kinks(9) + 1, 10):
        assert ninth.coefficient(d) == 0
    assert series.coefficient(0).is_zero()
    assert series.coefficient(1).is_zero()


def test_series_table_matches_recurrences_and_partitions():
    table = series_table(12, 5)
    dp = dp_table(12)
    for n in range(2, 13):
        assert table.row(n) == dp.row(n)
        assert sum(table.row(n)) == factorial(n)


def test_series_table_truncated_rows():
    table = series_table(9, 2)
    assert table.row(9) == (256, 31616, 185856)  # d <= 2 only
    assert not table.is_complete(9)
    assert table.is_complete(5)


def test_series_table_guards():
    with pytest.raises(ValueError):
        series_table(1, 3)
    with pytest.raises(ValueError):
        series_table(5, -1)


def test_fixed_kinks_series_reference_values():
    assert fixed_kinks_series(0, 6) == (2, 4, 8, 16, 32)
    assert fixed_kinks_series(1, 5)[-1] == 88
    assert fixed_kinks_series(3, 7)[-1] == 272
    assert fixed_kinks_series(1, 4) == (0, 2, 16)


def test_fixed_kinks_series_matches_recurrence_columns():
    dp = dp_table(20)
    for d in range(4):
        sequence = fixed_kinks_series(d, 20)
        for n in range(2, 21):
            assert sequence[n - 2] == dp.count(n, d), (n, d)


def test_fixed_kinks_series_guards():
    with pytest.raises(ValueError):
        fixed_kinks_series(4, 10)
    with pytest.raises(ValueError):
        fixed_kinks_series(1, 1)


def test_closed_form_reference_values():
    assert closed_form(5, 1) == 88  # 2^3 * (2^4 - 5)
    assert closed_form(9, 3) == 137216
    assert closed_form(5, 2) == 16
    assert closed_form(2, 0) == 2


def test_closed_form_below_validity_is_zero():
    assert closed_form(2, 1) == 0
    assert closed_form(4, 2) == 0
    assert closed_form(6, 3) == 0
    assert closed_form(1, 0) == 1  # the one-site history


def test_closed_form_guards():
    with pytest.raises(ValueError):
        closed_form(5, 4)
    with pytest.raises(ValueError):
        closed_form(0, 0)


def test_closed_form_matches_recurrences():
    dp = dp_table(30)
    for d in range(4):
        for n in range(2 * d + 1, 31):
            assert closed_form(n, d) == dp.count(n, d), (n, d)


def test_extraction_gate_rejects_non_counts():
    with pytest.raises(CoefficientError):
        _as_count(Fraction(1, 2), "probe")
    with pytest.raises(CoefficientError):
        _as_count(-3, "probe")
    assert _as_count(Fraction(8, 2), "probe") == 4


def test_asymptotic_estimate_values():
    for n in (1, 5, 12):
        assert asymptotic_estimate(n, 0) == 2 ** (n - 1) == closed_form(n, 0)
    assert asymptotic_estimate(20, 1) == 137438953472
    assert closed_form(20, 1) == 137433710592
    deviation = abs(Fraction(closed_form(20, 1)) / asymptotic_estimate(20, 1) - 1)
    assert deviation == Fraction(2 * 20, 2**20)
    assert asymptotic_estimate(3, 1) == 8  # against an exact count of 2
    assert closed_form(3, 1) == 2
    assert asymptotic_estimate(1, 1) == Fraction(1, 2)  # fractional below n = 2d+1
    with pytest.raises(ValueError):
        asymptotic_estimate(0, 0)
    with pytest.raises(ValueError):
        asymptotic_estimate(3, -1)


def test_convergence_report_zero_kinks_is_exact():
    rows = convergence_report(0, 25)
    assert all(r.deviation == 0 for r in rows)
    assert rows[0].n == 1


def test_convergence_report_single_kink_identity():
    rows = convergence_report(1, 30)
    assert rows[0].n == 3
    for r in rows:
        assert r.deviation == Fraction(2 * r.n, 2**r.n)


def test_convergence_report_two_kinks_shrinks():
    rows = convergence_report(2, 40, threshold=Fraction(1, 10**4))
    window = [r for r in rows if r.n >= 12]
    assert all(b.deviation < a.deviation for a, b in zip(window, window[1:]))


def test_convergence_report_threshold_violation():
    with pytest.raises(ValueError):
        convergence_report(1, 10, threshold=Fraction(1, 10**9))


def test_convergence_report_accepts_precomputed_table():
    table = dp_table(15)
    rows = convergence_report(1, 15, table=table)
    assert rows[-1].exact == table.count(15, 1)


def test_convergence_report_guards():
    with pytest.raises(ValueError):
        convergence_report(2, 4)  # counts start at n = 5
    with pytest.raises(ValueError):
        convergence_report(-1, 10)
