from __future__ import annotations

from fractions import Fraction

import pytest

from src.errors import AlgebraError, DivisionByZeroError
from src.rings.scalar_field import Y, EisensteinRational, ScalarK, scalar_arithmetic, scalar_equal
from tests.conftest import INSTANCES, random_scalar

W = ScalarK.omega()


def test_omega_is_a_primitive_cube_root_of_unity() -> None:
    assert W * W == -1 - W
    assert W**3 == ScalarK.one()
    assert W != ScalarK.one()


@pytest.mark.parametrize(
    ("value", "expected"),
    [
        (ScalarK.q(), ScalarK.t(6)),
        (ScalarK.qhat() ** 2, ScalarK.q()),
        (ScalarK.cbrt_q() ** 3, ScalarK.q()),
        (ScalarK.p(), ScalarK.t(-2)),
        (ScalarK.q(-1) * ScalarK.q(), ScalarK.one()),
    ],
)
def test_named_constants(value: ScalarK, expected: ScalarK) -> None:
    assert value == expected


def test_conjugate_swaps_omega_and_omega_squared() -> None:
    assert W.conjugate() == W**2
    assert (W**2).conjugate() == W
    assert ScalarK.q().conjugate() == ScalarK.q()


def test_qhat_power_recognition() -> None:
    assert ScalarK.qhat(5).as_qhat_power() == 5
    assert ScalarK.qhat(-2).as_qhat_power() == -2
    assert ScalarK.t(1).as_qhat_power() is None
    assert (2 * ScalarK.qhat(1)).as_qhat_power() is None


def test_inverse_of_zero_raises() -> None:
    with pytest.raises(DivisionByZeroError):
        ScalarK.zero().inverse()
    with pytest.raises(DivisionByZeroError):
        scalar_arithmetic(ScalarK.one(), ScalarK.zero(), "div")


def test_unknown_operation_is_rejected() -> None:
    with pytest.raises(ValueError):
        scalar_arithmetic(ScalarK.one(), ScalarK.one(), "pow")


def test_scalars_cannot_depend_on_y() -> None:
    with pytest.raises(AlgebraError):
        ScalarK(Y)


def test_fractions_and_ints_coerce() -> None:
    half = ScalarK.from_fraction(Fraction(1, 2))
    assert half + half == ScalarK.one()
    assert 2 * half == 1
    assert scalar_equal(ScalarK.from_int(3), half * 6)


def test_eisenstein_arithmetic() -> None:
    omega = EisensteinRational(0, 1)
    assert omega * omega == EisensteinRational(-1, -1)
    value = EisensteinRational(Fraction(2, 3), -1)
    assert value * value.inverse() == EisensteinRational(1)
    assert ScalarK.from_eisenstein(omega) == W


def test_field_axioms_on_random_scalars(rng) -> None:
    for _ in range(INSTANCES):
        a, b, c = random_scalar(rng), random_scalar(rng), random_scalar(rng)
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        d = random_scalar(rng, nonzero=True)
        assert d * d.inverse() == ScalarK.one()
        assert (a / d) * d == a
