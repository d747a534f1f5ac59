from __future__ import annotations

from dataclasses import replace
from functools import lru_cache
from typing import Callable

from ..errors import RegistryError
from ..maps.morphism import (
    DEFAULT_PRECISION,
    GENERAL,
    Morphism,
    Sl2Matrix,
    compose,
    from_matrix,
    h_x,
    h_y,
    identity,
    tau,
)
from ..rings.rational_y import RationalY
from ..rings.scalar_field import ScalarK
from ..rings.skew_laurent import TAG_FG, SkewLaurentPoly
from ..rings.skew_series import Element, refine, to_series
from .elements import value

SIGMA = Sl2Matrix(-1, 1, -1, 0)
RHO = Sl2Matrix(0, -1, 1, 0)
ETA = Sl2Matrix(1, -1, 1, 0)


def phi() -> Morphism:
    """x -> (y^-1 - q^-1 y) x^-1, y -> -y^-1."""
    image_x = SkewLaurentPoly.monomial(RationalY.lambda_(), -1)
    image_y = SkewLaurentPoly.constant(-RationalY.y(-1))
    return Morphism("phi", image_x, image_y, GENERAL)


def _one_plus_y() -> RationalY:
    return RationalY.one() + RationalY.y()


def h1() -> Morphism:
    return h_x(_one_plus_y(), "h1")


def h2() -> Morphism:
    return h_y(_one_plus_y(), "h2")


def h3() -> Morphism:
    return h_x(_one_plus_y().inverse(), "h3")


def psi(precision: int = DEFAULT_PRECISION) -> Morphism:
    return replace(compose(h3(), compose(h2(), h1(), precision), precision), name="psi")


def psi_step() -> SkewLaurentPoly:
    """1 + q (1+y)^-1 x."""
    return 1 + SkewLaurentPoly.monomial(ScalarK.q() * _one_plus_y().inverse(), 1)


def psi_power_y(n: int) -> SkewLaurentPoly:
    """psi^n(y) through the recursion psi^n(y) = psi^(n-1)(y) (1 + q (1+y)^-1 x)."""
    if n < 0:
        raise ValueError("psi_power_y needs n >= 0")
    image = SkewLaurentPoly.y()
    step = psi_step()
    for _ in range(n):
        image = image * step
    return image


def psi_power(n: int) -> Morphism:
    """psi^n with exact images; x's image follows from psi fixing (1+y)^-1 x."""
    image_y = psi_power_y(n)
    fixed = SkewLaurentPoly.monomial(_one_plus_y().inverse(), 1)
    image_x = (1 + image_y) * fixed
    return Morphism(f"psi^{n}", image_x, image_y, GENERAL)


def gamma_images(precision: int = DEFAULT_PRECISION) -> dict[str, Element]:
    """gamma(r) = b r b^-1 on k_q(f,g): images of g, h and f as f-series."""
    bsq, ab, cb = value("bsq_fg"), value("ab_fg"), value("cb_fg")

    def image_g(working: int) -> Element:
        return cb * to_series(bsq, working, TAG_FG).invert()

    def image_h(working: int) -> Element:
        return ab * to_series(bsq, working, TAG_FG).invert()

    def image_f(working: int) -> Element:
        return 1 - image_g(working) * image_h(working)

    return {
        "g": refine(image_g, precision),
        "h": refine(image_h, precision),
        "f": refine(image_f, precision),
    }


def gamma_inverse_images(precision: int = DEFAULT_PRECISION) -> dict[str, Element]:
    """gamma^-1(r) = b^-1 r b: images of g and h."""
    bsq, ab, cb = value("bsq_fg"), value("ab_fg"), value("cb_fg")
    return {
        "g": refine(lambda working: to_series(bsq, working, TAG_FG).invert() * cb, precision),
        "h": refine(lambda working: to_series(bsq, working, TAG_FG).invert() * ab, precision),
    }


def gamma(precision: int = DEFAULT_PRECISION) -> Morphism:
    images = gamma_images(precision)
    return Morphism("gamma", images["f"], images["g"], GENERAL, source_tag=TAG_FG)


_BUILDERS: dict[str, Callable[[int], Morphism]] = {
    "identity": lambda precision: identity(),
    "tau": lambda precision: tau(),
    "sigma": lambda precision: from_matrix(SIGMA, "sigma"),
    "rho": lambda precision: from_matrix(RHO, "rho"),
    "eta": lambda precision: from_matrix(ETA, "eta"),
    "phi": lambda precision: phi(),
    "h1": lambda precision: h1(),
    "h2": lambda precision: h2(),
    "h3": lambda precision: h3(),
    "psi": psi,
    "gamma": gamma,
}


def morphism_names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


@lru_cache(maxsize=None)
def get_morphism(name: str, precision: int = DEFAULT_PRECISION) -> Morphism:
    build = _BUILDERS.get(name)
    if build is None:
        raise RegistryError("morphism", name, list(_BUILDERS))
    return build(precision)
