"""Registered identity suites.

S1: the phi-fixed ring and gamma. S2: the order-3 action sigma. S3: rho and eta (orders 4 and 6).
S4: the non-inner map psi and the conjugators. S5: cross-checks between representations.
"""

from __future__ import annotations

import logging
from typing import Callable

from ..errors import RegistryError
from ..maps.conjugation import (
    build_z,
    conjugate,
    match_coefficient,
    normalize_to_standard_form,
    refine_standard_form,
    scalar_multiple,
    verify_conjugation,
)
from ..maps.morphism import (
    Sl2Matrix,
    apply,
    compose,
    monomial_order,
)
from ..rings.rational_y import RationalY
from ..rings.scalar_field import ScalarK
from ..rings.skew_laurent import (
    NOT_INNER,
    TAG_FG,
    TAG_XY,
    SkewLaurentPoly,
    degree_obstruction,
    fraction_degree,
    left_fraction,
)
from ..rings.skew_series import Element, refine, to_series
from ..utils.reports import INCONCLUSIVE, IdentityReport
from .elements import value
from .embedding import embed_fg_to_xy
from .identities import Check, Claim, Equation, Identity, Observation, evaluate_identity, run_identities
from .morphisms import ETA, RHO, SIGMA, gamma_images, get_morphism, phi, psi, psi_power, psi_power_y
from .subalgebra import subalgebra_express

SUITES = ("S1", "S2", "S3", "S4", "S5")
ALL = "all"

# words in theta1, theta2, theta3 searched for the Lie generators
LIE_WORD_LENGTH = 4

W = ScalarK.omega()
Q = ScalarK.q
QH = ScalarK.qhat

_REGISTRY: dict[str, Identity] = {}


def _identity(name: str, suite: str, note: str | None = None):
    def decorator(check: Callable[[int], list[Check]]) -> Callable[[int], list[Check]]:
        _REGISTRY[name] = Identity(name, suite, check, note)
        return check

    return decorator


def suite_names() -> tuple[str, ...]:
    return SUITES + (ALL,)


def identity_names(suite: str = ALL) -> tuple[str, ...]:
    return tuple(identity.name for identity in _members(suite))


def _members(suite: str) -> list[Identity]:
    if suite == ALL:
        return list(_REGISTRY.values())
    if suite not in SUITES:
        raise RegistryError("suite", suite, suite_names())
    return [identity for identity in _REGISTRY.values() if identity.suite == suite]


def verify_identity(name: str, precision: int, logger: logging.Logger | None = None) -> IdentityReport:
    identity = _REGISTRY.get(name)
    if identity is None:
        raise RegistryError("identity", name, list(_REGISTRY))
    return evaluate_identity(identity, precision, logger)


def run_suite(suite: str, precision: int, logger: logging.Logger | None = None) -> list[IdentityReport]:
    """Reports in registry order."""
    members = _members(suite)
    if logger is not None:
        logger.info("suite %s: %d identities at precision %d", suite, len(members), precision)
    return run_identities(members, precision, logger)


# shorthands


def _x(tag: str = TAG_XY) -> SkewLaurentPoly:
    return SkewLaurentPoly.x(tag)


def _y(k: int = 1, tag: str = TAG_XY) -> SkewLaurentPoly:
    return SkewLaurentPoly.constant(RationalY.y(k), tag)


def _const(c, tag: str = TAG_XY) -> SkewLaurentPoly:
    return SkewLaurentPoly.constant(c, tag)


def _inverse(p: Element, working: int) -> Element:
    if isinstance(p, SkewLaurentPoly) and p.is_unit():
        return p.invert_unit()
    return to_series(p, working, p.tag).invert()


def _phi_blocks():
    return value("a2"), value("b2"), value("c2"), value("h2"), value("g2")


def _lambda_x_inverse() -> SkewLaurentPoly:
    return value("Lambda") * _x() ** -1


# S1


@_identity("phi-order-2", "S1")
def _phi_order_2(precision: int) -> list[Check]:
    m = phi()
    return [
        Equation("phi^2(x) = x", apply(m, m.image_x, precision), _x()),
        Equation("phi^2(y) = y", apply(m, m.image_y, precision), _y()),
    ]


@_identity("hg-relation", "S1")
def _hg_relation(precision: int) -> list[Check]:
    a, b, c, h, g = _phi_blocks()
    b_inv, q = b.invert_unit(), Q()
    return [
        Equation("a*b^-1*c - q*c*b^-1*a = (1-q)*b", a * b_inv * c - q * c * b_inv * a, (1 - q) * b),
        Equation("h*g - q*g*h = 1 - q", h * g - q * g * h, _const(1 - q)),
    ]


@_identity("y-minus-yinv", "S1")
def _y_minus_yinv(precision: int) -> list[Check]:
    a, b, c, h, g = _phi_blocks()
    b_inv, q = b.invert_unit(), Q()
    ydiff = _y() - _y(-1)
    return [
        Equation(
            "(a*b^-1*c - b)*(y - y^-1) = q*c*b^-1*c - a*b^-1*a",
            (a * b_inv * c - b) * ydiff,
            q * c * b_inv * c - a * b_inv * a,
        ),
        Equation("(h*g - 1)*(y - y^-1) = q*g^2 - h^2", (h * g - 1) * ydiff, q * g * g - h * h),
    ]


@_identity("formula-for-x", "S1")
def _formula_for_x(precision: int) -> list[Check]:
    _, _, _, h, g = _phi_blocks()
    return [Equation("y^-1*h + q^-1*g = x", _y(-1) * h + Q(-1) * g, _x())]


@_identity("lambda-xinv", "S1")
def _lambda_xinv(precision: int) -> list[Check]:
    _, _, _, h, g = _phi_blocks()
    target = _lambda_x_inverse()
    return [
        Equation("phi(y^-1*h + q^-1*g) = Lambda*x^-1", apply(phi(), _y(-1) * h + Q(-1) * g, precision), target),
        Equation("q^-1*g - y*h = Lambda*x^-1", Q(-1) * g - _y() * h, target),
    ]


@_identity("x-plus-decomp", "S1")
def _x_plus_decomp(precision: int) -> list[Check]:
    _, _, _, h, g = _phi_blocks()
    lhs = _x() + _lambda_x_inverse()
    return [Equation("x + Lambda*x^-1 = (y^-1 - y)*h + 2*q^-1*g", lhs, (_y(-1) - _y()) * h + 2 * Q(-1) * g)]


@_identity("xy-minus-decomp", "S1")
def _xy_minus_decomp(precision: int) -> list[Check]:
    _, _, _, h, g = _phi_blocks()
    lhs = _x() * _y() - _lambda_x_inverse() * _y(-1)
    return [Equation("x*y - Lambda*x^-1*y^-1 = 2*q*h + (y - y^-1)*g", lhs, 2 * Q() * h + (_y() - _y(-1)) * g)]


@_identity("b-squared", "S1")
def _b_squared(precision: int) -> list[Check]:
    b = value("b2")
    ydiff = _y() - _y(-1)
    return [Equation("b^2 = (y - y^-1)^2 + 4", b * b, ydiff * ydiff + 4)]


def _xplus_xyminus() -> tuple[SkewLaurentPoly, SkewLaurentPoly, SkewLaurentPoly]:
    lx = _lambda_x_inverse()
    return _x() + lx, _x() * _y() - lx * _y(-1), _y() - _y(-1)


@_identity("ab-decomp", "S1")
def _ab_decomp(precision: int) -> list[Check]:
    a, b = value("a2"), value("b2")
    plus, minus, ydiff = _xplus_xyminus()
    return [Equation("a*b = 2*(x*y - Lambda*x^-1*y^-1) - (x + Lambda*x^-1)*(y - y^-1)", a * b, 2 * minus - plus * ydiff)]


@_identity("cb-decomp", "S1")
def _cb_decomp(precision: int) -> list[Check]:
    b, c = value("b2"), value("c2")
    plus, minus, ydiff = _xplus_xyminus()
    return [Equation("c*b = (x*y - Lambda*x^-1*y^-1)*(y - y^-1) + 2*(x + Lambda*x^-1)", c * b, minus * ydiff + 2 * plus)]


@_identity("gamma-welldef", "S1")
def _gamma_welldef(precision: int) -> list[Check]:
    a, b, c, h, g = _phi_blocks()
    b_inv = b.invert_unit()
    bsq_inv = (b * b).invert_unit()
    return [
        Equation("b*h*b^-1 = (a*b)*(b^2)^-1", b * h * b_inv, (a * b) * bsq_inv),
        Equation("b*g*b^-1 = (c*b)*(b^2)^-1", b * g * b_inv, (c * b) * bsq_inv),
    ]


@_identity("quad-ext-conditions", "S1")
def _quad_ext_conditions(precision: int) -> list[Check]:
    _, b, _, h, g = _phi_blocks()
    b_inv, mu = b.invert_unit(), value("mu")

    def gamma_of(r: SkewLaurentPoly) -> SkewLaurentPoly:
        return b * r * b_inv

    return [
        Equation("gamma^2(h)*mu = mu*h", gamma_of(gamma_of(h)) * mu, mu * h),
        Equation("gamma^2(g)*mu = mu*g", gamma_of(gamma_of(g)) * mu, mu * g),
        Equation("gamma(mu) = mu", gamma_of(mu), mu),
    ]


# S2


def _order3():
    return (value("a3"), value("b3"), value("c3")), (value("theta1"), value("theta2"), value("theta3"))


@_identity("sigma-grading", "S2")
def _sigma_grading(precision: int) -> list[Check]:
    sigma = get_morphism("sigma")
    graded, invariant = _order3()
    checks: list[Check] = []
    for name, element in zip(("theta1", "theta2", "theta3"), invariant):
        checks.append(Equation(f"sigma({name}) = {name}", apply(sigma, element, precision), element))
    for name, element in zip(("a", "b", "c"), graded):
        checks.append(Equation(f"sigma({name}) = w^2*{name}", apply(sigma, element, precision), W**2 * element))
    return checks


@_identity("a-theta1", "S2")
def _a_theta1(precision: int) -> list[Check]:
    (a, b, _), (theta1, _, _) = _order3()
    rhs = theta1 * a + (W - W**2) * (QH(1) - QH(-1)) * b
    return [Equation("a*theta1 = theta1*a + (w - w^2)*(qh - qh^-1)*b", a * theta1, rhs)]


@_identity("a-theta2", "S2")
def _a_theta2(precision: int) -> list[Check]:
    (a, _, c), (_, theta2, _) = _order3()
    rhs = QH(2) * theta2 * a + (QH(-2) - QH(2)) * c
    return [Equation("a*theta2 = qh^2*theta2*a + (qh^-2 - qh^2)*c", a * theta2, rhs)]


@_identity("theta1-b", "S2")
def _theta1_b(precision: int) -> list[Check]:
    (_, b, c), (theta1, _, _) = _order3()
    rhs = QH(2) * b * theta1 + W * (QH(-2) - QH(2)) * c
    return [Equation("theta1*b = qh^2*b*theta1 + w*(qh^-2 - qh^2)*c", theta1 * b, rhs)]


@_identity("theta2-b", "S2")
def _theta2_b(precision: int) -> list[Check]:
    (a, b, _), (_, theta2, _) = _order3()
    rhs = b * theta2 + (W**2 - W) * (QH(1) - QH(-1)) * a
    return [Equation("theta2*b = b*theta2 + (w^2 - w)*(qh - qh^-1)*a", theta2 * b, rhs)]


def _series_equation(label: str, lhs: Callable[[int], Element], rhs: Callable[[int], Element], precision: int) -> Equation:
    return Equation(label, refine(lhs, precision), refine(rhs, precision))


@_identity("g-theta1", "S2")
def _g_theta1(precision: int) -> list[Check]:
    (a, _, c), (theta1, _, _) = _order3()

    def lhs(working: int) -> Element:
        return value("g3", working) * theta1

    def rhs(working: int) -> Element:
        g = value("g3", working)
        a_inv_c = _inverse(a, working) * c
        return (
            QH(-2) * theta1 * g
            - QH(-2) * W * (QH(-2) - QH(2)) * a_inv_c
            - (W - W**2) * QH(-2) * (QH(1) - QH(-1)) * g * g
        )

    label = "g*theta1 = qh^-2*theta1*g - qh^-2*w*(qh^-2 - qh^2)*a^-1*c - (w - w^2)*qh^-2*(qh - qh^-1)*g^2"
    return [_series_equation(label, lhs, rhs, precision)]


@_identity("g-theta2", "S2")
def _g_theta2(precision: int) -> list[Check]:
    (a, _, c), (_, theta2, _) = _order3()

    def lhs(working: int) -> Element:
        return value("g3", working) * theta2

    def rhs(working: int) -> Element:
        g = value("g3", working)
        a_inv_c = _inverse(a, working) * c
        return QH(-2) * theta2 * g - (W**2 - W) * (QH(1) - QH(-1)) - QH(-2) * (QH(-2) - QH(2)) * a_inv_c * g

    label = "g*theta2 = qh^-2*theta2*g - (w^2 - w)*(qh - qh^-1) - qh^-2*(qh^-2 - qh^2)*a^-1*c*g"
    return [_series_equation(label, lhs, rhs, precision)]


@_identity("fg-q-commute", "S2")
def _fg_q_commute(precision: int) -> list[Check]:
    def lhs(working: int) -> Element:
        return value("f3", working) * value("g3", working)

    def rhs(working: int) -> Element:
        return Q() * value("g3", working) * value("f3", working)

    return [_series_equation("f*g = q*g*f", lhs, rhs, precision)]


@_identity("qgf-chain", "S2")
def _qgf_chain(precision: int) -> list[Check]:
    _, (theta1, theta2, _) = _order3()

    def chain(working: int) -> Element:
        g = value("g3", working)
        return theta2 * g - W**2 * theta1 * g * g + (W**2 - W) * QH(-1) * (W**2 * g * g * g + QH(2))

    def qgf(working: int) -> Element:
        return QH(2) * value("g3", working) * value("f3", working)

    def fg(working: int) -> Element:
        return value("f3", working) * value("g3", working)

    label = "theta2*g - w^2*theta1*g^2 + (w^2 - w)*qh^-1*(w^2*g^3 + qh^2)"
    return [
        _series_equation(f"qh^2*g*f = {label}", qgf, chain, precision),
        _series_equation(f"f*g = {label}", fg, chain, precision),
    ]


@_identity("theta1-in-fg", "S2", note="printed coefficient of g is w^2*qh + w*qh^-1")
def _theta1_in_fg(precision: int) -> list[Check]:
    # theta1 = (w - w^2)^-1*qh^-2*g^-1*f + (w*qh + w^2*qh^-1)*g + (qh + qh^-1)*g^-2
    #          + (w - w^2)*(qh^-2*g^3 + (qh^2 + 1) + qh^4*g^-3)*f^-1, multiplied on the right by f.
    # f has valuation 1 and a non-monomial leading coefficient; clearing f^-1 keeps every
    # coefficient a Laurent polynomial in y.
    (a, b, _), (theta1, _, _) = _order3()

    def lhs(working: int) -> Element:
        return theta1 * value("f3", working)

    def rhs(working: int) -> Element:
        f, g = value("f3", working), value("g3", working)
        g_inv = to_series(b, working).invert() * a
        g_inv2 = g_inv * g_inv
        return (
            (W - W**2).inverse() * QH(-2) * g_inv * f * f
            + (W * QH(1) + W**2 * QH(-1)) * g * f
            + (QH(1) + QH(-1)) * g_inv2 * f
            + (W - W**2) * (QH(-2) * g * g * g + (QH(2) + 1) + QH(4) * g_inv2 * g_inv)
        )

    label = (
        "theta1*f = (w - w^2)^-1*qh^-2*g^-1*f^2 + (w*qh + w^2*qh^-1)*g*f + (qh + qh^-1)*g^-2*f"
        " + (w - w^2)*(qh^-2*g^3 + (qh^2 + 1) + qh^4*g^-3)"
    )
    return [_series_equation(label, lhs, rhs, precision)]


@_identity("theta-bracket", "S2")
def _theta_bracket(precision: int) -> list[Check]:
    _, (theta1, theta2, theta3) = _order3()
    lhs = theta1 * theta2 - QH(2) * theta2 * theta1
    rhs = (QH(-2) - QH(2)) * theta3 - 3 * QH(2) + 3
    return [Equation("theta1*theta2 - qh^2*theta2*theta1 = (qh^-2 - qh^2)*theta3 - 3*qh^2 + 3", lhs, rhs)]


@_identity("baudry-express", "S2")
def _baudry_express(precision: int) -> list[Check]:
    _, thetas = _order3()
    checks: list[Check] = []
    for name in ("R13", "R20", "R30"):
        found = subalgebra_express(value(name), thetas, LIE_WORD_LENGTH, ("theta1", "theta2", "theta3"))
        checks.append(Claim(f"{name} in the algebra of theta1, theta2, theta3", bool(found), found.render()))
    return checks


# S3


def _uv():
    return value("u"), value("v")


@_identity("rho-u", "S3")
def _rho_u(precision: int) -> list[Check]:
    u, _ = _uv()
    lhs = apply(get_morphism("rho"), u, precision)
    return [Equation("rho(u) = -u^-1", lhs, refine(lambda working: -_inverse(u, working), precision))]


@_identity("rho-v", "S3")
def _rho_v(precision: int) -> list[Check]:
    u, v = _uv()
    lhs = apply(get_morphism("rho"), v, precision)

    def rhs(working: int) -> Element:
        return (_inverse(u, working) - Q() * u) * _inverse(v, working)

    return [Equation("rho(v) = (u^-1 - q*u)*v^-1", lhs, refine(rhs, precision))]


@_identity("eta-u", "S3")
def _eta_u(precision: int) -> list[Check]:
    u, v = _uv()
    lhs = apply(get_morphism("eta"), u, precision)
    return [Equation("eta(u) = -qh*v^-1", lhs, refine(lambda working: -QH(1) * _inverse(v, working), precision))]


@_identity("eta-v", "S3")
def _eta_v(precision: int) -> list[Check]:
    u, v = _uv()
    lhs = apply(get_morphism("eta"), v, precision)
    return [Equation("eta(v) = -v^-1*u", lhs, refine(lambda working: -_inverse(v, working) * u, precision))]


@_identity("eta-change-of-vars", "S3")
def _eta_change_of_vars(precision: int) -> list[Check]:
    eta = get_morphism("eta")
    u1, v1 = value("u1"), value("v1")
    return [
        Equation("eta(u1) = v1^-1", apply(eta, u1, precision), refine(lambda working: _inverse(v1, working), precision)),
        Equation(
            "eta(v1) = qh^-1*v1^-1*u1",
            apply(eta, v1, precision),
            refine(lambda working: QH(-1) * _inverse(v1, working) * u1, precision),
        ),
    ]


# S4


def _one_plus_y_inverse() -> RationalY:
    return (RationalY.one() + RationalY.y()).inverse()


@_identity("psi-composition", "S4")
def _psi_composition(precision: int) -> list[Check]:
    m = psi(precision)
    yy = RationalY.y()
    printed_y = _y() + SkewLaurentPoly.monomial(Q() * yy * _one_plus_y_inverse(), 1)
    denominator = (RationalY.one() + yy) * (RationalY.one() + Q() * yy)
    printed_x = _x() + SkewLaurentPoly.monomial(Q() * yy * denominator.inverse(), 2)
    return [
        Equation("h3*h2*h1(x) = x + q*y*((1+y)*(1+q*y))^-1*x^2", m.image_x, printed_x),
        Equation("h3*h2*h1(y) = y + q*y*(1+y)^-1*x", m.image_y, printed_y),
    ]


@_identity("psi-fixed-point", "S4")
def _psi_fixed_point(precision: int) -> list[Check]:
    m = psi(precision)
    fixed = SkewLaurentPoly.monomial(_one_plus_y_inverse(), 1)
    # psi((1+y)^-1 x) = (1 + psi(y))^-1 psi(x), cleared of the inverse
    return [Equation("psi(x) = (1 + psi(y))*(1+y)^-1*x", m.image_x, (1 + m.image_y) * fixed)]


@_identity("psi-induction", "S4")
def _psi_induction(precision: int) -> list[Check]:
    m = psi(precision)
    checks: list[Check] = []
    for n in range(1, 7):
        numerator, denominator = left_fraction(psi_power_y(n - 1))
        # psi(t^-1 s) = psi(t)^-1 psi(s)
        checks.append(
            Equation(
                f"psi(psi^{n - 1}(y)) = psi^{n - 1}(y)*(1 + q*(1+y)^-1*x)",
                apply(m, denominator, precision) * psi_power_y(n),
                apply(m, numerator, precision),
            )
        )
    return checks


@_identity("psi-degree", "S4")
def _psi_degree(precision: int) -> list[Check]:
    checks: list[Check] = []
    for n in range(1, 7):
        degree = fraction_degree(*left_fraction(psi_power_y(n)))
        checks.append(Claim(f"deg psi^{n}(y) = {n}", degree == n, f"degree {degree}"))
    checks.append(Claim("psi is not inner", degree_obstruction(psi(precision)) == NOT_INNER))
    checks.append(Claim("psi^2 is not inner", degree_obstruction(psi_power(2)) == NOT_INNER))
    return checks


def _conjugation_claim(label: str, report) -> Claim:
    holds = None if report.status == INCONCLUSIVE else report.passed
    detail = report.equation if report.witness is None else f"{report.equation} differs at exponent {report.witness.exponent}"
    return Claim(label, holds, detail, window=report.window)


@_identity("z-psi", "S4")
def _z_psi(precision: int) -> list[Check]:
    m = psi(precision)
    sf, corrections = normalize_to_standard_form(m.image_x, m.image_y, precision)
    c = build_z(sf, precision)
    checks: list[Check] = [
        Claim("psi is in standard form", not corrections, f"{len(corrections)} corrections"),
        _conjugation_claim("z*F*z^-1 = x and z*G*z^-1 = y", verify_conjugation(c, precision)),
    ]
    for n in range(1, min(8, precision - 1) + 1):
        checks.append(Claim(f"z_{n} agrees with coefficient matching", match_coefficient(sf, c, n) == c.coefficients[n]))
    z_inverse = c.as_series.invert()
    checks.append(Equation("z^-1*x*z = psi(x)", conjugate(z_inverse, _x(), precision), m.image_x))
    checks.append(Equation("z^-1*y*z = psi(y)", conjugate(z_inverse, _y(), precision), m.image_y))
    return checks


def _leading_fg(name: str) -> tuple[int, RationalY]:
    element = value(name)
    return element.valuation(), element.coefficient(element.valuation())


def _quartic_product() -> RationalY:
    g4 = RationalY.y(4)
    return (Q(3) - g4) * (Q(7) - g4)


@_identity("gamma-bsq-leading", "S4", note="printed as (q^3 - g^4)(q^7 - g^4)q^-6 g^-3 f^-2")
def _gamma_bsq_leading(precision: int) -> list[Check]:
    exponent, coeff = _leading_fg("bsq_fg")
    expected = _quartic_product() * Q(-6) * RationalY.y(-4)
    return [
        Claim("lowest f-exponent of b^2 is -2", exponent == -2, f"lowest exponent {exponent}"),
        Equation("f^-2 coefficient of b^2", _const(coeff, TAG_FG), _const(expected, TAG_FG)),
    ]


@_identity("gamma-cb-leading", "S4")
def _gamma_cb_leading(precision: int) -> list[Check]:
    exponent, coeff = _leading_fg("cb_fg")
    expected = _quartic_product() * Q(-7) * RationalY.y(-3)
    return [
        Claim("lowest f-exponent of c*b is -2", exponent == -2, f"lowest exponent {exponent}"),
        Equation("f^-2 coefficient of c*b", _const(coeff, TAG_FG), _const(expected, TAG_FG)),
    ]


@_identity("gamma-g-leading", "S4", note="printed lowest term q*g")
def _gamma_g_leading(precision: int) -> list[Check]:
    image = gamma_images(precision)["g"]
    return [
        Claim("gamma(g) has valuation 0", image.valuation == 0, f"valuation {image.valuation}"),
        Equation("lowest term of (c*b)*(b^2)^-1", _const(image.coefficient(0), TAG_FG), _const(Q(-1) * RationalY.y(), TAG_FG)),
    ]


def _gamma_pair(working: int) -> tuple[Element, Element]:
    images = gamma_images(working)
    return images["f"], images["g"]


def _z_squared_against_b_squared(c, corrections, precision: int) -> Observation:
    bsq = value("bsq_fg")
    for correction in reversed(corrections):
        bsq = apply(correction, bsq, precision)
    z_squared = c.as_series * c.as_series
    scalar = scalar_multiple(z_squared, bsq, precision)
    label = "z^2 against the normalized b^2"
    if scalar is not None:
        return Observation(label, f"z^2 = {scalar.render()} * b^2")
    valuations = f"{z_squared.valuation} and {to_series(bsq, precision, bsq.tag).valuation}"
    return Observation(
        label,
        f"not a scalar multiple (f-valuations {valuations}); downgraded to the conjugation post-conditions",
    )


@_identity("z-gamma", "S4", note="normalization rescales g by q")
def _z_gamma(precision: int) -> list[Check]:
    sf, corrections = refine_standard_form(_gamma_pair, precision)
    c = build_z(sf, precision)
    names = ", ".join(m.name for m in corrections) or "none"
    return [
        Claim("gamma normalizes with s = 1", sf.s == 1, f"s = {sf.s}, corrections {names}"),
        _conjugation_claim("z*F*z^-1 = x and z*G*z^-1 = y", verify_conjugation(c, precision)),
        _z_squared_against_b_squared(c, corrections, precision),
    ]


# S5


@_identity("phi-fixes-hg", "S5")
def _phi_fixes_hg(precision: int) -> list[Check]:
    _, _, _, h, g = _phi_blocks()
    m = phi()
    return [
        Equation("phi(h) = h", apply(m, h, precision), h),
        Equation("phi(g) = g", apply(m, g, precision), g),
    ]


@_identity("gamma-inverse", "S5")
def _gamma_inverse(precision: int) -> list[Check]:
    a, b, c, h, g = _phi_blocks()
    b_inv = b.invert_unit()
    bsq_inv = (b * b).invert_unit()
    return [
        Equation("b^-1*h*b = (b^2)^-1*(a*b)", b_inv * h * b, bsq_inv * (a * b)),
        Equation("b^-1*g*b = (b^2)^-1*(c*b)", b_inv * g * b, bsq_inv * (c * b)),
    ]


@_identity("weyl-f-q-commute", "S5")
def _weyl_f_q_commute(precision: int) -> list[Check]:
    _, _, _, h, g = _phi_blocks()
    f, q = value("f2"), Q()
    return [
        Equation("f*g = q*g*f", f * g, q * g * f),
        Equation("1 - g*h = (1-q)^-1*(h*g - g*h)", f, (1 - q).inverse() * (h * g - g * h)),
    ]


@_identity("bsq-fg-embed", "S5")
def _bsq_fg_embed(precision: int) -> list[Check]:
    b = value("b2")
    plus, minus, ydiff = _xplus_xyminus()
    pairs = (
        ("hfg", "h", value("h2")),
        ("ydiff_fg", "y - y^-1", ydiff),
        ("xplus_fg", "x + Lambda*x^-1", plus),
        ("xyminus_fg", "x*y - Lambda*x^-1*y^-1", minus),
        ("bsq_fg", "b^2", b * b),
    )
    return [
        Equation(f"embedded {name} = {text}", embed_fg_to_xy(value(name), precision), target)
        for name, text, target in pairs
    ]


@_identity("tau-fixes-uv", "S5")
def _tau_fixes_uv(precision: int) -> list[Check]:
    tau = get_morphism("tau")
    u, v = _uv()
    return [
        Equation("tau(u) = u", apply(tau, u, precision), u),
        Equation("tau(v) = v", apply(tau, v, precision), v),
    ]


@_identity("sigma-fixes-fg", "S5")
def _sigma_fixes_fg(precision: int) -> list[Check]:
    sigma = get_morphism("sigma")
    (a, b, _), (theta1, theta2, _) = _order3()
    sa, sb = apply(sigma, a, precision), apply(sigma, b, precision)
    s_theta1, s_theta2 = apply(sigma, theta1, precision), apply(sigma, theta2, precision)

    def image_g(working: int) -> Element:
        return _inverse(sa, working) * sb

    def image_f(working: int) -> Element:
        g = image_g(working)
        g_inv = _inverse(sb, working) * sa
        return s_theta2 - W**2 * s_theta1 * g + (W**2 - W) * QH(-1) * (W**2 * g * g + QH(2) * g_inv)

    return [
        Equation("sigma(g) = g", refine(image_g, precision), value("g3", precision)),
        Equation("sigma(f) = f", refine(image_f, precision), value("f3", precision)),
    ]


@_identity("monomial-relations", "S5")
def _monomial_relations(precision: int) -> list[Check]:
    one = Sl2Matrix.identity()
    rho, eta, sigma, tau = (get_morphism(name) for name in ("rho", "eta", "sigma", "tau"))
    rho2 = compose(rho, rho, precision)
    eta3 = compose(eta, compose(eta, eta, precision), precision)
    sigma3 = compose(sigma, compose(sigma, sigma, precision), precision)
    return [
        Claim("rho^2 = -1 as a matrix", RHO @ RHO == -one),
        Claim("eta^3 = -1 as a matrix", ETA**3 == -one),
        Claim("sigma^3 = 1 as a matrix", SIGMA**3 == one),
        Claim("orders 3, 4, 6", (monomial_order(SIGMA), monomial_order(RHO), monomial_order(ETA)) == (3, 4, 6)),
        Equation("rho^2(x) = tau(x)", rho2.image_x, tau.image_x),
        Equation("rho^2(y) = tau(y)", rho2.image_y, tau.image_y),
        Equation("eta^3(x) = tau(x)", eta3.image_x, tau.image_x),
        Equation("eta^3(y) = tau(y)", eta3.image_y, tau.image_y),
        Equation("sigma^3(x) = x", sigma3.image_x, _x()),
        Equation("sigma^3(y) = y", sigma3.image_y, _y()),
    ]


@_identity("gamma-f-shape", "S5")
def _gamma_f_shape(precision: int) -> list[Check]:
    image = gamma_images(precision)["f"]
    return [Claim("gamma(f) has valuation 1", image.valuation == 1, f"valuation {image.valuation}")]
