from __future__ import annotations

import math

import pytest

from src.catalog.morphisms import ETA, RHO, SIGMA, get_morphism, phi, psi
from src.errors import MorphismError, PrecisionError
from src.maps.morphism import (
    MONOMIAL,
    Morphism,
    Sl2Matrix,
    apply,
    compose,
    elementary,
    elementary_inverse,
    from_matrix,
    h_x,
    h_y,
    identity,
    is_fixed,
    monomial_cocycle,
    monomial_order,
    tau,
)
from src.rings.rational_y import RationalY
from src.rings.scalar_field import ScalarK
from src.rings.skew_laurent import SkewLaurentPoly
from src.rings.skew_series import SkewSeries, equal_to_precision, to_series
from tests.conftest import INSTANCES, random_poly, random_sl2

X = SkewLaurentPoly.x()
Y = SkewLaurentPoly.y()
ONE_PLUS_Y = RationalY.one() + RationalY.y()


def test_sigma_images() -> None:
    sigma = from_matrix(SIGMA, "sigma")
    assert sigma.kind == MONOMIAL
    assert sigma.image_x == Y
    assert sigma.image_y == ScalarK.qhat() * Y**-1 * X**-1


def test_tau_inverts_both_generators() -> None:
    assert tau().image_x == X**-1
    assert tau().image_y == Y**-1


def test_matrix_must_be_unimodular() -> None:
    with pytest.raises(MorphismError):
        from_matrix(Sl2Matrix(2, 0, 0, 1))


def test_images_must_q_commute() -> None:
    with pytest.raises(MorphismError):
        Morphism("bad", X, X)


@pytest.mark.parametrize(
    ("matrix", "order"),
    [
        (Sl2Matrix.identity(), 1),
        (-Sl2Matrix.identity(), 2),
        (SIGMA, 3),
        (RHO, 4),
        (ETA, 6),
        (Sl2Matrix(1, 1, 0, 1), math.inf),
    ],
)
def test_monomial_order(matrix: Sl2Matrix, order) -> None:
    assert monomial_order(matrix) == order


def test_phi_on_x_and_y() -> None:
    m = phi()
    assert apply(m, X) == SkewLaurentPoly.monomial(RationalY.lambda_(), -1)
    assert apply(m, Y) == -(Y**-1)


def test_apply_is_exact_when_no_inverse_is_needed() -> None:
    value = apply(psi(), X * Y + 1)
    assert isinstance(value, SkewLaurentPoly)


def test_apply_falls_back_to_series() -> None:
    value = apply(psi(), SkewLaurentPoly.monomial(ONE_PLUS_Y.inverse(), 1), 6)
    assert isinstance(value, SkewSeries)
    assert value.precision == 6


def test_fixed_element_of_psi() -> None:
    assert is_fixed(psi(), SkewLaurentPoly.monomial(ONE_PLUS_Y.inverse(), 1), 8)
    assert not is_fixed(psi(), Y, 8)


def test_series_input_needs_positive_valuation_for_x() -> None:
    with pytest.raises(PrecisionError):
        apply(phi(), to_series(1 + X, 5))


def test_compose_of_h_maps() -> None:
    m = compose(h_x(ONE_PLUS_Y), identity())
    assert m.image_x == SkewLaurentPoly.monomial(ONE_PLUS_Y, 1)
    undone = compose(h_x(ONE_PLUS_Y), elementary_inverse(h_x(ONE_PLUS_Y)))
    assert undone.image_x == X
    assert undone.image_y == Y


def test_h_y_reads_its_parameter_in_x() -> None:
    m = h_y(ONE_PLUS_Y)
    assert m.image_y == (1 + X) * Y
    assert m.image_x == X


def test_elementary_families() -> None:
    assert elementary("tau").image_x == X**-1
    assert elementary("h_X", ONE_PLUS_Y).image_x == h_x(ONE_PLUS_Y).image_x
    with pytest.raises(MorphismError):
        elementary("shear")
    with pytest.raises(MorphismError):
        h_x(0)


def test_monomial_cocycle_vanishes(rng) -> None:
    for _ in range(INSTANCES):
        m1, m2 = random_sl2(rng), random_sl2(rng)
        assert monomial_cocycle(m1, m2) == (0, 0)


def test_monomial_images_q_commute(rng) -> None:
    for _ in range(INSTANCES):
        m = from_matrix(random_sl2(rng))
        assert m.image_x * m.image_y == ScalarK.q() * m.image_y * m.image_x


@pytest.mark.parametrize("name", ["phi", "psi", "sigma", "tau"])
def test_apply_distributes_over_products(rng, name: str) -> None:
    m = get_morphism(name)
    for _ in range(INSTANCES // 10):
        p, r = random_poly(rng, 0, 1), random_poly(rng, 0, 1)
        assert equal_to_precision(apply(m, p * r, 8), apply(m, p, 8) * apply(m, r, 8))
