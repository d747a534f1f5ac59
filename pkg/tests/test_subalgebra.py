from __future__ import annotations

import pytest

from src.catalog.elements import value
from src.catalog.subalgebra import Combination, NotFound, subalgebra_express
from src.errors import AlgebraError
from src.rings.rational_y import RationalY
from src.rings.scalar_field import ScalarK
from src.rings.skew_laurent import SkewLaurentPoly

THETAS = ("theta1", "theta2", "theta3")


def _thetas() -> list[SkewLaurentPoly]:
    return [value(name) for name in THETAS]


def test_generator_is_found_at_length_one() -> None:
    result = subalgebra_express(value("theta1"), [value("theta1")], 1, ["theta1"])
    assert isinstance(result, Combination)
    assert result.word_length == 1
    assert result.terms == ((("theta1",), ScalarK.one()),)


def test_constant_is_found_at_length_zero() -> None:
    result = subalgebra_express(SkewLaurentPoly.constant(ScalarK.from_int(5)), _thetas(), 2, THETAS)
    assert result.word_length == 0
    assert result.terms == (((), ScalarK.from_int(5)),)


def test_r20_needs_a_square() -> None:
    result = subalgebra_express(value("R20"), _thetas(), 2, THETAS)
    assert result
    assert result.word_length == 2
    assert "theta1*theta1" in result.render()


def test_x_is_not_sigma_invariant() -> None:
    result = subalgebra_express(SkewLaurentPoly.x(), _thetas(), 2, THETAS)
    assert isinstance(result, NotFound)
    assert not result
    assert result.render() == "not_found (words up to length 2)"


def test_default_names() -> None:
    result = subalgebra_express(value("theta2"), _thetas(), 1)
    assert result.terms == ((("e2",), ScalarK.one()),)


def test_target_coefficients_must_be_laurent() -> None:
    target = SkewLaurentPoly.constant((RationalY.one() + RationalY.y()).inverse())
    with pytest.raises(AlgebraError):
        subalgebra_express(target, _thetas(), 1, THETAS)


def test_one_name_per_generator() -> None:
    with pytest.raises(ValueError):
        subalgebra_express(value("theta1"), _thetas(), 1, ["theta1"])
