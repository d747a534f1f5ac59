from __future__ import annotations

import pytest

from src.catalog.morphisms import gamma_images, get_morphism, morphism_names, psi, psi_power, psi_power_y
from src.errors import RegistryError
from src.maps.morphism import apply
from src.rings.rational_y import RationalY
from src.rings.scalar_field import ScalarK
from src.rings.skew_laurent import NOT_INNER, TAG_FG, SkewLaurentPoly, degree_obstruction, fraction_degree, left_fraction

X = SkewLaurentPoly.x()
Y = SkewLaurentPoly.y()


def test_catalog_names() -> None:
    assert set(morphism_names()) >= {"identity", "tau", "sigma", "rho", "eta", "phi", "h1", "h2", "h3", "psi", "gamma"}


def test_unknown_morphism() -> None:
    with pytest.raises(RegistryError) as excinfo:
        get_morphism("chi")
    assert excinfo.value.kind == "morphism"


def test_phi_is_an_involution() -> None:
    phi = get_morphism("phi")
    assert apply(phi, phi.image_x) == X
    assert apply(phi, phi.image_y) == Y


def test_psi_image_of_y() -> None:
    one_plus_y = RationalY.one() + RationalY.y()
    expected = Y + SkewLaurentPoly.monomial(ScalarK.q() * RationalY.y() * one_plus_y.inverse(), 1)
    assert psi().image_y == expected


def test_recursion_starts_at_psi() -> None:
    assert psi_power_y(0) == Y
    assert psi_power_y(1) == psi().image_y
    assert psi_power(1).image_x == psi().image_x


def test_recursion_rejects_negative_powers() -> None:
    with pytest.raises(ValueError):
        psi_power_y(-1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_degree_of_psi_powers_grows(n: int) -> None:
    assert fraction_degree(*left_fraction(psi_power_y(n))) == n


def test_psi_squared_is_not_inner() -> None:
    assert degree_obstruction(psi_power(2)) == NOT_INNER


def test_psi_power_images_q_commute() -> None:
    m = psi_power(2)
    assert m.image_x * m.image_y == ScalarK.q() * m.image_y * m.image_x


def test_gamma_image_of_g_starts_at_q_inverse_g() -> None:
    image = gamma_images(4)["g"]
    assert image.tag == TAG_FG
    assert image.valuation == 0
    assert image.coefficient(0) == ScalarK.q(-1) * RationalY.y()


def test_gamma_image_of_f_has_positive_valuation() -> None:
    assert gamma_images(4)["f"].valuation >= 1
