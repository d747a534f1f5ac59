"""Named elements of the q-division ring and of its fixed rings.

Every entry has a constructive builder and a textual definition in the expression language;
the two are kept in agreement by the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from ..errors import RegistryError
from ..rings.rational_y import RationalY
from ..rings.scalar_field import ScalarK
from ..rings.skew_laurent import TAG_FG, TAG_XY, SkewLaurentPoly
from ..rings.skew_series import Element, refine, to_series

CONTEXT_XY = "xy"
CONTEXT_FG = "fg"

CONTEXT_TAGS = {CONTEXT_XY: TAG_XY, CONTEXT_FG: TAG_FG}

DEFAULT_PRECISION = 12


@dataclass(frozen=True)
class NamedElement:
    name: str
    value: Element
    context: str
    description: str
    definition: str


@dataclass(frozen=True)
class _Entry:
    name: str
    context: str
    description: str
    definition: str
    build: Callable[[int], Element]


_REGISTRY: dict[str, _Entry] = {}


def _register(name: str, context: str, description: str, definition: str):
    def decorator(build: Callable[[int], Element]) -> Callable[[int], Element]:
        _REGISTRY[name] = _Entry(name, context, description, definition, build)
        return build

    return decorator


def element_names() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def element_definitions() -> dict[str, tuple[str, str]]:
    """name -> (context, textual definition)."""
    return {name: (entry.context, entry.definition) for name, entry in _REGISTRY.items()}


@lru_cache(maxsize=None)
def get_element(name: str, precision: int = DEFAULT_PRECISION) -> NamedElement:
    entry = _REGISTRY.get(name)
    if entry is None:
        raise RegistryError("element", name, sorted(_REGISTRY))
    return NamedElement(name, entry.build(precision), entry.context, entry.description, entry.definition)


def value(name: str, precision: int = DEFAULT_PRECISION) -> Element:
    return get_element(name, precision).value


def x(tag: str = TAG_XY) -> SkewLaurentPoly:
    return SkewLaurentPoly.x(tag)


def y(k: int = 1, tag: str = TAG_XY) -> SkewLaurentPoly:
    return SkewLaurentPoly.constant(RationalY.y(k), tag)


def term(coeff, y_exponent: int, x_exponent: int, tag: str = TAG_XY) -> SkewLaurentPoly:
    """coeff * y^a * x^c in left normal form."""
    return SkewLaurentPoly.monomial(RationalY.one() * coeff * RationalY.y(y_exponent), x_exponent, tag)


W = ScalarK.omega()
QH = ScalarK.qhat


# k_q(x,y)^phi building blocks


@_register("Lambda", CONTEXT_XY, "y^-1 - q^-1 y", "y^-1 - q^-1*y")
def _lambda(precision: int) -> Element:
    return SkewLaurentPoly.constant(RationalY.lambda_())


@_register("a2", CONTEXT_XY, "phi-odd building block x - Lambda x^-1", "x - Lambda*x^-1")
def _a2(precision: int) -> Element:
    return x() - value("Lambda") * x() ** -1


@_register("b2", CONTEXT_XY, "phi-odd building block y + y^-1", "y + y^-1")
def _b2(precision: int) -> Element:
    return SkewLaurentPoly.constant(RationalY.b())


@_register("c2", CONTEXT_XY, "phi-odd building block x y + Lambda x^-1 y^-1", "x*y + Lambda*x^-1*y^-1")
def _c2(precision: int) -> Element:
    return x() * y() + value("Lambda") * x() ** -1 * y(-1)


@_register("h2", CONTEXT_XY, "phi-invariant generator b^-1 a", "b2^-1*a2")
def _h2(precision: int) -> Element:
    return value("b2").invert_unit() * value("a2")


@_register("g2", CONTEXT_XY, "phi-invariant generator b^-1 c", "b2^-1*c2")
def _g2(precision: int) -> Element:
    return value("b2").invert_unit() * value("c2")


@_register("f2", CONTEXT_XY, "q-commuting partner 1 - g h of g2", "1 - g2*h2")
def _f2(precision: int) -> Element:
    return 1 - value("g2") * value("h2")


@_register("mu", CONTEXT_XY, "mu = -b^2", "-b2^2")
def _mu(precision: int) -> Element:
    return -(value("b2") ** 2)


# order 3: sigma-graded building blocks


@_register("a3", CONTEXT_XY, "sigma acts by w^2", "x + w*y + w^2*qh*y^-1*x^-1")
def _a3(precision: int) -> Element:
    return x() + W * y() + term(W**2 * QH(1), -1, -1)


@_register("b3", CONTEXT_XY, "sigma acts by w^2", "x^-1 + w*y^-1 + w^2*qh*y*x")
def _b3(precision: int) -> Element:
    return x() ** -1 + W * y(-1) + term(W**2 * QH(1), 1, 1)


@_register("c3", CONTEXT_XY, "sigma acts by w^2", "y^-1*x + w*qh^3*y^2*x + w^2*qh^3*y^-1*x^-2")
def _c3(precision: int) -> Element:
    return term(1, -1, 1) + term(W * QH(3), 2, 1) + term(W**2 * QH(3), -1, -2)


@_register("theta1", CONTEXT_XY, "sigma-invariant", "x + y + qh*y^-1*x^-1")
def _theta1(precision: int) -> Element:
    return x() + y() + term(QH(1), -1, -1)


@_register("theta2", CONTEXT_XY, "sigma-invariant", "x^-1 + y^-1 + qh*y*x")
def _theta2(precision: int) -> Element:
    return x() ** -1 + y(-1) + term(QH(1), 1, 1)


@_register("theta3", CONTEXT_XY, "sigma-invariant", "y^-1*x + qh^3*y^2*x + qh^3*y^-1*x^-2")
def _theta3(precision: int) -> Element:
    return term(1, -1, 1) + term(QH(3), 2, 1) + term(QH(3), -1, -2)


@_register("g3", CONTEXT_XY, "sigma-invariant generator a^-1 b", "a3^-1*b3")
def _g3(precision: int) -> Element:
    a3, b3 = value("a3"), value("b3")
    return refine(lambda working: to_series(a3, working).invert() * b3, precision)


@_register(
    "f3",
    CONTEXT_XY,
    "sigma-invariant partner of g3 with f g = q g f",
    "theta2 - w^2*theta1*g3 + (w^2 - w)*qh^-1*(w^2*g3^2 + qh^2*g3^-1)",
)
def _f3(precision: int) -> Element:
    theta1, theta2 = value("theta1"), value("theta2")
    a3, b3 = value("a3"), value("b3")

    def build(working: int) -> Element:
        g = to_series(a3, working).invert() * b3
        g_inverse = to_series(b3, working).invert() * a3
        tail = (W**2 - W) * QH(-1) * (W**2 * g * g + QH(2) * g_inverse)
        return theta2 - W**2 * theta1 * g + tail

    return refine(build, precision)


# order 2, 4 and 6


@_register("u", CONTEXT_XY, "tau-invariant generator", "(x - x^-1)*(y^-1 - y)^-1")
def _u(precision: int) -> Element:
    return (x() - x() ** -1) * (y(-1) - y()).invert_unit()


@_register("v", CONTEXT_XY, "tau-invariant generator", "(x*y - x^-1*y^-1)*(y^-1 - y)^-1")
def _v(precision: int) -> Element:
    return (x() * y() - x() ** -1 * y(-1)) * (y(-1) - y()).invert_unit()


@_register("u1", CONTEXT_XY, "rescaled u on which eta is monomial", "-p^-1*qh^-1*u")
def _u1(precision: int) -> Element:
    return -(ScalarK.p(-1) * QH(-1)) * value("u")


@_register("v1", CONTEXT_XY, "rescaled v on which eta is monomial", "p*v")
def _v1(precision: int) -> Element:
    return ScalarK.p() * value("v")


# Lie generators of the sigma-invariant quantum torus


@_register("R00", CONTEXT_XY, "Lie generator", "1")
def _r00(precision: int) -> Element:
    return SkewLaurentPoly.one()


@_register("R10", CONTEXT_XY, "Lie generator, equal to theta1", "x + y + qh*y^-1*x^-1")
def _r10(precision: int) -> Element:
    return value("theta1")


@_register("R11", CONTEXT_XY, "Lie generator, equal to theta2", "x^-1 + y^-1 + qh*y*x")
def _r11(precision: int) -> Element:
    return value("theta2")


@_register("R12", CONTEXT_XY, "Lie generator, equal to theta3", "y^-1*x + qh^3*y^2*x + qh^3*y^-1*x^-2")
def _r12(precision: int) -> Element:
    return value("theta3")


@_register("R13", CONTEXT_XY, "Lie generator", "y^-1*x^2 + qh^5*y^3*x + qh^8*y^-2*x^-3")
def _r13(precision: int) -> Element:
    return term(1, -1, 2) + term(QH(5), 3, 1) + term(QH(8), -2, -3)


@_register("R20", CONTEXT_XY, "Lie generator", "x^2 + y^2 + qh^4*y^-2*x^-2")
def _r20(precision: int) -> Element:
    return x() ** 2 + y(2) + term(QH(4), -2, -2)


@_register("R30", CONTEXT_XY, "Lie generator", "x^3 + y^3 + qh^9*y^-3*x^-3")
def _r30(precision: int) -> Element:
    return x() ** 3 + y(3) + term(QH(9), -3, -3)


# k_q(f,g): the phi-fixed ring with f = 1 - g h


def _fg_x() -> SkewLaurentPoly:
    return x(TAG_FG)


def _fg_y(k: int = 1) -> SkewLaurentPoly:
    return y(k, TAG_FG)


@_register("hfg", CONTEXT_FG, "h = g^-1 (1 - f)", "g^-1*(1 - f)")
def _hfg(precision: int) -> Element:
    return _fg_y(-1) * (1 - _fg_x())


@_register("ydiff_fg", CONTEXT_FG, "y - y^-1 written in f and g", "-q^-1*f^-1*(q*g^2 - hfg^2)")
def _ydiff_fg(precision: int) -> Element:
    h = value("hfg")
    return -ScalarK.q(-1) * _fg_x() ** -1 * (ScalarK.q() * _fg_y(2) - h * h)


@_register("xplus_fg", CONTEXT_FG, "x + Lambda x^-1 written in f and g", "-ydiff_fg*hfg + 2*q^-1*g")
def _xplus_fg(precision: int) -> Element:
    return -value("ydiff_fg") * value("hfg") + 2 * ScalarK.q(-1) * _fg_y()


@_register("xyminus_fg", CONTEXT_FG, "x y - Lambda x^-1 y^-1 written in f and g", "2*q*hfg + ydiff_fg*g")
def _xyminus_fg(precision: int) -> Element:
    return 2 * ScalarK.q() * value("hfg") + value("ydiff_fg") * _fg_y()


@_register("bsq_fg", CONTEXT_FG, "b^2 = (y - y^-1)^2 + 4 written in f and g", "ydiff_fg^2 + 4")
def _bsq_fg(precision: int) -> Element:
    return value("ydiff_fg") ** 2 + 4


@_register("ab_fg", CONTEXT_FG, "a b written in f and g", "2*xyminus_fg - xplus_fg*ydiff_fg")
def _ab_fg(precision: int) -> Element:
    return 2 * value("xyminus_fg") - value("xplus_fg") * value("ydiff_fg")


@_register("cb_fg", CONTEXT_FG, "c b written in f and g", "xyminus_fg*ydiff_fg + 2*xplus_fg")
def _cb_fg(precision: int) -> Element:
    return value("xyminus_fg") * value("ydiff_fg") + 2 * value("xplus_fg")
