"""Counting through the closed-form generating functions.

The bivariate generating function of the counts (v marks kinks, t marks
chain length) has a closed form as a sum of algebraic terms indexed by
j >= 0, each carrying a v^j prefactor; expanding the terms with exact
truncated arithmetic recovers the count table.  Fixing the kink number
gives rational functions of t with explicit formulas for d <= 3, and the
counts grow like 2^(n-2d-1) (d+1)^n, which this module also evaluates
and checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import TruncPoly, TSeries, sqrt_one_minus_v
from .core import CountTable, max_kinks
from .treedp import dp_table

__all__ = [
    "CoefficientError",
    "bivariate_series",
    "series_table",
    "fixed_kinks_series",
    "closed_form",
    "asymptotic_estimate",
    "convergence_report",
    "ConvergenceRow",
]


class CoefficientError(ArithmeticError):
    """An extracted coefficient failed to be a nonnegative integer.

    Count extraction is an internal consistency gate: the series algebra
    works over rationals, but every count it produces must land back in
    the nonnegative integers.
    """


def _as_count(value: int | Fraction, where: str) -> int:
    f = Fraction(value)
    if f.denominator != 1:
        raise CoefficientError(f"{where} is not an integer: {f}")
    if f < 0:
        raise CoefficientError(f"{where} is negative: {f}")
    return int(f)


def _series_term(j: int, t_order: int, v_order: int, root: TruncPoly) -> TSeries:
    # One j-indexed summand of the closed form:
    #   4 t^2 s (1 - (1+2j) s t - t(1-v)) v^j
    #   / ((1+s)^(1+2j) (1-2jts)^2 (1-2(j+1)ts)^2),      s = sqrt(1-v)
    d = v_order
    one = TruncPoly.one(d)
    one_minus_v = TruncPoly((1, -1), d)
    linear = -((1 + 2 * j) * root + one_minus_v)
    numer = TSeries((one, linear), t_order, d).scale(root * 4).scale(one.shift(j)).shift(2)
    lin_a = TSeries((one, -2 * j * root), t_order, d)
    lin_b = TSeries((one, -2 * (j + 1) * root), t_order, d)
    denom = (lin_a * lin_a) * (lin_b * lin_b)
    alg = (one + root) ** (1 + 2 * j)
    return (numer * denom.inverse()).scale(alg.inverse())


def bivariate_series(t_order: int, v_order: int) -> TSeries:
    """Expansion of the closed-form count series to the given orders.

    Terms with j > v_order vanish under truncation thanks to their v^j
    prefactor, so the sum is finite; the first omitted term is checked to
    be zero.
    """
    if t_order < 2:
        raise ValueError("the series starts at t^2; need t_order >= 2")
    if v_order < 0:
        raise ValueError("v_order must be nonnegative")
    root = sqrt_one_minus_v(v_order)
    total = TSeries.zero(t_order, v_order)
    for j in range(v_order + 1):
        total = total + _series_term(j, t_order, v_order, root)
    assert _series_term(v_order + 1, t_order, v_order, root) == TSeries.zero(
        t_order, v_order
    ), "truncated-away term is not zero"
    return total


def series_table(t_order: int, v_order: int) -> CountTable:
    """Count table read off the expanded closed-form series.

    Rows cover n = 2..t_order; each row stores d up to
    min(v_order, max_kinks(n)), so rows are complete whenever v_order
    reaches max_kinks(n).  Every extracted coefficient is checked to be a
    nonnegative integer before it enters the table.

    >>> series_table(4, 1).row(4)
    (8, 16)
    """
    series = bivariate_series(t_order, v_order)
    rows: dict[int, tuple[int, ...]] = {}
    for n in range(2, t_order + 1):
        poly = series.coefficient(n)
        top = min(v_order, max_kinks(n))
        rows[n] = tuple(
            _as_count(poly.coefficient(d), f"coefficient of t^{n} v^{d}")
            for d in range(top + 1)
        )
    return CountTable(rows)


#: Rational generating functions of the counts at fixed d <= 3: numerator
#: coefficients in t, and the denominator as (scale, multiplicity) pairs
#: for factors (1 - scale*t)^multiplicity.
_RATIONAL_FORMS: dict[int, tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = {
    0: ((0, 0, 2), ((2, 1),)),
    1: ((0, 0, 0, 2), ((2, 2), (4, 1))),
    2: ((0, 0, 0, 0, 0, 16, -48), ((2, 3), (4, 2), (6, 1))),
    3: ((0, 0, 0, 0, 0, 0, 0, 272, -2944, 10176, -11520), ((2, 4), (4, 3), (6, 2), (8, 1))),
}


def fixed_kinks_series(d: int, n_max: int) -> tuple[int, ...]:
    """Counts at fixed kink number d for n = 2..n_max, from the rational form.

    Only d = 0..3 have published rational generating functions; the entry
    at index i is the count for n = i + 2.

    >>> fixed_kinks_series(1, 5)
    (0, 2, 16, 88)
    """
    if d not in _RATIONAL_FORMS:
        raise ValueError(f"rational forms cover d = 0..3, got {d}")
    if n_max < 2:
        raise ValueError("the series starts at n = 2")
    numer_coeffs, factors = _RATIONAL_FORMS[d]
    numer = TSeries(
        (TruncPoly((c,), 0) for c in numer_coeffs), n_max, 0
    )
    denom = TSeries.one(n_max, 0)
    for scale, mult in factors:
        linear = TSeries((TruncPoly.one(0), TruncPoly((-scale,), 0)), n_max, 0)
        for _ in range(mult):
            denom = denom * linear
    series = numer * denom.inverse()
    return tuple(
        _as_count(series.coefficient(n).coefficient(0), f"series count at n={n}, d={d}")
        for n in range(2, n_max + 1)
    )


def closed_form(n: int, d: int) -> int:
    """Exact count from the explicit formulas, valid for d = 0..3.

    Below n = 2d + 1 there is no room for d extra blocks and the count is
    zero.  The d = 2, 3 formulas carry rational prefactors (1/32, 1/64,
    1/128, 1/192); exact divisibility is checked before returning.

    >>> closed_form(5, 1)
    88
    """
    if n < 1:
        raise ValueError(f"chain length must be at least 1, got {n}")
    if d < 0 or d > 3:
        raise ValueError(f"closed forms cover d = 0..3, got {d}")
    if d == 0:
        return 2 ** (n - 1)
    if n < 2 * d + 1:
        return 0
    if d == 1:
        return 2 ** (n - 2) * (2 ** (n - 1) - n)
    if d == 2:
        value = (
            Fraction(6**n, 32)
            - Fraction(4**n * (n - 1), 16)
            + Fraction(2**n * (2 * n * n - 4 * n - 1), 32)
        )
    else:
        value = (
            Fraction(8**n, 128)
            - Fraction(6**n * (n - 2), 64)
            + Fraction(4**n * (n * n - 4 * n + 2), 64)
            - Fraction(2**n * (2 * n**3 - 12 * n * n + 13 * n + 6), 192)
        )
    return _as_count(value, f"closed form at n={n}, d={d}")


def asymptotic_estimate(n: int, d: int) -> Fraction:
    """Leading-order growth 2^(n-2d-1) (d+1)^n, as an exact rational.

    The power of two is fractional when n < 2d + 1; the value is exact
    (not rounded) so deviations from true counts can be compared without
    floating-point tolerances.  At d = 0 the estimate equals the count.
    """
    if n < 1:
        raise ValueError(f"chain length must be at least 1, got {n}")
    if d < 0:
        raise ValueError("kink count cannot be negative")
    return Fraction(2) ** (n - 2 * d - 1) * (d + 1) ** n


@dataclass(frozen=True)
class ConvergenceRow:
    """Exact count against its growth estimate at one chain length."""

    n: int
    exact: int
    estimate: Fraction
    deviation: Fraction  # |exact / estimate - 1|


def convergence_report(
    d: int,
    n_max: int,
    *,
    threshold: Fraction | None = None,
    table: CountTable | None = None,
) -> tuple[ConvergenceRow, ...]:
    """Tabulate |count/estimate - 1| for n up to n_max, checking its decay.

    Rows start at the first nonzero count (n = 2d + 1, or n = 1 at d = 0).
    Once n clears the pre-asymptotic window (n >= 4d + 4) the deviation
    must shrink strictly at every step, except at d = 0 where it is
    identically zero; when a threshold is supplied, the final deviation
    must not exceed it.  Violations raise ValueError.  `table` supplies
    precomputed exact counts, else they come from the level recurrences.
    """
    if d < 0:
        raise ValueError("kink count cannot be negative")
    start = 2 * d + 1 if d else 1
    if n_max < start:
        raise ValueError(f"no nonzero counts below n = {start}")
    if table is None:
        table = dp_table(n_max)
    rows = []
    for n in range(start, n_max + 1):
        exact = table.count(n, d)
        estimate = asymptotic_estimate(n, d)
        rows.append(ConvergenceRow(n, exact, estimate, abs(Fraction(exact) / estimate - 1)))
    if d == 0:
        off = next((r for r in rows if r.deviation != 0), None)
        if off is not None:
            raise ValueError(f"estimate is not exact at d = 0, n = {off.n}")
    else:
        window = [r for r in rows if r.n >= 4 * d + 4]
        for prev, cur in zip(window, window[1:]):
            if not cur.deviation < prev.deviation:
                raise ValueError(f"deviation fails to shrink at n = {cur.n} for d = {d}")
    if threshold is not None and rows[-1].deviation > threshold:
        raise ValueError(
            f"deviation {float(rows[-1].deviation):.3e} at n = {n_max} "
            f"exceeds the threshold for d = {d}"
        )
    return tuple(rows)
