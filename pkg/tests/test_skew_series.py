from __future__ import annotations

import pytest

from src.errors import PoleError, PrecisionError, RingMismatchError
from src.rings.rational_y import RationalY
from src.rings.scalar_field import ScalarK
from src.rings.skew_laurent import TAG_FG, SkewLaurentPoly
from src.rings.skew_series import (
    DifferAt,
    Equal,
    SkewSeries,
    equal_to_precision,
    evaluate_rational_at,
    refine,
    series_invert,
    to_series,
)
from tests.conftest import INSTANCES, random_poly, random_unit_series

X = SkewLaurentPoly.x()
Y = SkewLaurentPoly.y()


def test_geometric_series() -> None:
    inverse = series_invert(to_series(1 - X, 6))
    assert inverse.valuation == 0
    assert inverse.precision == 6
    assert all(inverse.coefficient(i) == RationalY.one() for i in range(6))


def test_precision_of_sum_and_product() -> None:
    a = to_series(X, 5)
    b = to_series(1 + X, 7)
    assert (a + b).precision == 5
    assert (a * b).precision == 5
    assert (b * b).precision == 7


def test_inverse_precision_and_valuation() -> None:
    inverse = to_series(X + X**2, 6).invert()
    assert inverse.valuation == -1
    assert inverse.precision == 4
    assert inverse.coefficient(-1) == RationalY.one()


def test_inverse_is_two_sided() -> None:
    s = to_series(Y + X, 8)
    one = SkewLaurentPoly.one()
    assert equal_to_precision(s * s.invert(), one)
    assert equal_to_precision(s.invert() * s, one)


def test_zero_series_cannot_be_inverted() -> None:
    with pytest.raises(PrecisionError):
        SkewSeries.zero(5).invert()


def test_coefficients_beyond_precision_are_unknown() -> None:
    with pytest.raises(PrecisionError):
        to_series(X, 3).coefficient(3)


def test_exact_operand_does_not_limit_precision() -> None:
    s = to_series(1 + X, 4)
    assert (s * X**10).precision == 14
    assert (X**-1 * s).precision == 3


def test_equality_reports_the_first_difference() -> None:
    s = to_series(1 + X, 6)
    t = s.with_coefficient(3, ScalarK.omega())
    outcome = equal_to_precision(s, t)
    assert isinstance(outcome, DifferAt)
    assert outcome.exponent == 3
    assert equal_to_precision(s, 1 + X) == Equal(6)


def test_truncate() -> None:
    s = series_invert(to_series(1 - X, 8)).truncate(3)
    assert s.precision == 3
    assert len(s.coefficients) == 3


def test_refine_reaches_the_requested_precision() -> None:
    result = refine(lambda working: to_series(X + X**2, working).invert(), 6)
    assert result.precision == 6


def test_refine_passes_exact_results_through() -> None:
    assert refine(lambda working: X + Y, 6) == X + Y


def test_evaluate_rational_at_series() -> None:
    f = (RationalY.one() - RationalY.y()).inverse()
    value = evaluate_rational_at(f, to_series(X, 6))
    assert all(value.coefficient(i) == RationalY.one() for i in range(6))


def test_pole_at_substitution_point() -> None:
    f = (RationalY.one() - RationalY.y()).inverse()
    with pytest.raises(PoleError):
        evaluate_rational_at(f, to_series(1 + X, 6))


def test_tags_do_not_mix() -> None:
    with pytest.raises(RingMismatchError):
        to_series(X, 4) + to_series(SkewLaurentPoly.x(TAG_FG), 4)


def test_render() -> None:
    assert to_series(X, 3).render() == "(1)*x + O(x^3)"
    assert SkewSeries.zero(2, TAG_FG).render() == "O(f^2)"


def test_recomputing_at_higher_precision_agrees(rng) -> None:
    for _ in range(INSTANCES):
        low = random_unit_series(rng, 4)
        high = SkewSeries.build(0, 6, list(low.coefficients) + [RationalY.one(), RationalY.y()])
        assert equal_to_precision(low.invert(), high.invert())
        assert equal_to_precision(low * low, high * high)


def test_embedding_of_polynomials_is_multiplicative(rng) -> None:
    for _ in range(INSTANCES):
        p, r = random_poly(rng), random_poly(rng)
        assert equal_to_precision(to_series(p * r, 8), to_series(p, 8) * to_series(r, 8))
