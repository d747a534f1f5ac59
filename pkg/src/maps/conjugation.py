"""Standard-form pairs, the conjugating series z and the elementary normalization in front of it.

A q-commuting pair F = f_s x^s + ..., G = lam y^s + sum_{i>0} g_i x^i is conjugated to
(f_s x^s, lam y^s) by z = sum z_n x^n with z_0 = 1 and

    z_n = lam^-1 y^-s (1 - q^(s n))^-1 (g_n + sum_{0<j<n} z_j alpha^j(g_(n-j)))

which is what matching the x^n coefficients of z G = lam y^s z gives.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from ..errors import PrecisionError, ShapeError
from ..rings.rational_y import RationalY, alpha_power
from ..rings.scalar_field import ScalarK
from ..rings.skew_laurent import SkewLaurentPoly
from ..rings.skew_series import (
    DifferAt,
    Element,
    SkewSeries,
    equal_to_precision,
    series_invert,
    to_series,
)
from ..utils.reports import FAIL, INCONCLUSIVE, PASS
from .morphism import (
    DEFAULT_PRECISION,
    GENERAL,
    Morphism,
    compose,
    elementary_inverse,
    h_x,
    h_y,
)


@dataclass(frozen=True)
class StandardFormPair:
    F: SkewSeries
    G: SkewSeries
    s: int
    lam: ScalarK
    f_s: RationalY

    @property
    def tag(self) -> str:
        return self.F.tag

    def g(self, n: int) -> RationalY:
        return self.G.coefficient(n)

    def leading_y(self) -> SkewLaurentPoly:
        return SkewLaurentPoly.constant(self.lam * RationalY.y(self.s), self.tag)

    def leading_x(self) -> SkewLaurentPoly:
        return SkewLaurentPoly.monomial(self.f_s, self.s, self.tag)


@dataclass(frozen=True)
class Conjugator:
    coefficients: tuple[RationalY, ...]
    source: StandardFormPair
    as_series: SkewSeries


@dataclass(frozen=True)
class ConjugationReport:
    status: str
    window: int
    witness: DifferAt | None = None
    equation: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS


def _coefficient_name(n: int, tag: str) -> str:
    return f"coefficient of {tag.split('/')[0]}^{n}"


def detect_standard_form(F: Element, G: Element, precision: int = DEFAULT_PRECISION) -> StandardFormPair:
    F = to_series(F, precision, F.tag)
    G = to_series(G, precision, G.tag)
    if isinstance(equal_to_precision(F * G, ScalarK.q() * G * F), DifferAt):
        raise ShapeError("F and G do not q-commute")
    if F.is_zero():
        raise ShapeError(f"F is zero to precision {F.precision}")
    s = F.valuation
    if s not in (1, -1):
        raise ShapeError(
            f"F has valuation {s}, expected 1 or -1 ({_coefficient_name(s, F.tag)} is {F.coefficients[0].render()})"
        )
    if not G.is_zero() and G.valuation < 0:
        raise ShapeError(
            f"G has a negative-exponent term ({_coefficient_name(G.valuation, G.tag)} is {G.coefficients[0].render()})"
        )
    g0 = G.coefficient(0)
    lam = (g0 * RationalY.y(-s)).as_scalar()
    if lam is None or lam.is_zero():
        raise ShapeError(f"{_coefficient_name(0, G.tag)} of G is {g0.render()}, not a nonzero scalar times y^{s}")
    return StandardFormPair(F, G, s, lam, F.coefficient(s))


def build_z(sf: StandardFormPair, N: int, logger: logging.Logger | None = None) -> Conjugator:
    """Coefficients z_0..z_(N-1) of the conjugator."""
    if N < 1:
        raise ValueError("N must be at least 1")
    if N > sf.G.precision:
        raise PrecisionError(f"z_{N - 1} needs g_{N - 1}, but G is known only below exponent {sf.G.precision}")
    scale = sf.lam.inverse() * RationalY.y(-sf.s)
    q_s = ScalarK.q(sf.s)
    z: list[RationalY] = [RationalY.one()]
    for n in range(1, N):
        acc = sf.g(n)
        for j in range(1, n):
            if z[j]:
                acc = acc + z[j] * alpha_power(sf.g(n - j), j)
        z.append(scale * (1 - q_s**n).inverse() * acc)
        if logger is not None:
            logger.info("z_%d computed", n)
    series = SkewSeries.build(0, N, z, sf.tag)
    return Conjugator(tuple(z), sf, series)


def _residual(sf: StandardFormPair, head: list[RationalY], n: int) -> RationalY:
    z = SkewSeries.build(0, n + 1, head, sf.tag)
    G = sf.G.truncate(n + 1)
    return (z * G - sf.leading_y() * z).coefficient(n)


def match_coefficient(sf: StandardFormPair, z, n: int) -> RationalY:
    """Solve [z G - lam y^s z]_n = 0 for z_n given z_0..z_(n-1); an oracle independent of build_z."""
    known = list(z.coefficients if isinstance(z, Conjugator) else z)[:n]
    if len(known) < n:
        raise PrecisionError(f"z_{n} needs z_0..z_{n - 1}")
    if n >= sf.G.precision:
        raise PrecisionError(f"G is known only below exponent {sf.G.precision}")
    constant = _residual(sf, known + [RationalY.zero()], n)
    slope = _residual(sf, known + [RationalY.one()], n) - constant
    return -constant / slope


def verify_conjugation(c: Conjugator, precision: int = DEFAULT_PRECISION) -> ConjugationReport:
    """Check z F = f_s x^s z and z G = lam y^s z on the largest window the data supports."""
    sf = c.source
    z = c.as_series
    checks = (
        ("z*F = f_s*x^s*z", z * sf.F, sf.leading_x() * z),
        ("z*G = lam*y^s*z", z * sf.G, sf.leading_y() * z),
    )
    window = precision
    for label, lhs, rhs in checks:
        outcome = equal_to_precision(lhs, rhs)
        if isinstance(outcome, DifferAt):
            return ConjugationReport(FAIL, min(lhs.precision, rhs.precision), outcome, label)
        window = min(window, outcome.precision)
    if window < precision:
        return ConjugationReport(INCONCLUSIVE, window, None, f"inconclusive beyond exponent {window - 1}")
    return ConjugationReport(PASS, window)


def conjugate(z: Element, p: Element, precision: int = DEFAULT_PRECISION) -> Element:
    """z p z^-1."""
    if isinstance(z, SkewLaurentPoly) and z.is_unit():
        return z * p * z.invert_unit()
    series = to_series(z, precision, z.tag)
    return series * p * series_invert(series)


def normalize_to_standard_form(
    image_x: Element, image_y: Element, precision: int = DEFAULT_PRECISION
) -> tuple[StandardFormPair, list[Morphism]]:
    """Rescale a q-commuting pair so that lam = 1 and f_s = 1.

    The corrections [h_Y(lam^-1), h_X(1/f_s)] are listed outermost first; the normalized map is
    the input map composed with them, and identity factors are omitted.
    """
    raw = detect_standard_form(image_x, image_y, precision)
    tag = raw.tag
    lam_is_one = raw.lam == ScalarK.one()
    lead_is_one = raw.f_s == RationalY.one()
    if lam_is_one and lead_is_one:
        return raw, []
    if raw.s != 1:
        raise ShapeError(
            f"normalization with s = {raw.s} is only available when lam = 1 and f_s = 1 "
            f"(lam = {raw.lam.render()}, f_s = {raw.f_s.render()})"
        )
    source = Morphism("input", image_x, image_y, GENERAL, source_tag=tag)
    corrections: list[Morphism] = []
    if not lam_is_one:
        corrections.append(h_y(raw.lam.inverse(), name="h_Y(lam^-1)", precision=precision, tag=tag))
    if not lead_is_one:
        corrections.append(h_x(raw.f_s.inverse(), name="h_X(1/f_s)", tag=tag))
    normalized = source
    for correction in corrections:
        normalized = compose(normalized, correction, precision)
    return detect_standard_form(normalized.image_x, normalized.image_y, precision), corrections


def refine_standard_form(
    images: Callable[[int], tuple[Element, Element]], precision: int, attempts: int = 6
) -> tuple[StandardFormPair, list[Morphism]]:
    """Normalize at a growing working precision until F and G are both known below ``precision``.

    Composing with the corrections loses a few exponents, so the images are recomputed with the
    deficit added, the same way ``refine`` treats a single pipeline.
    """
    working = precision
    known = None
    for _ in range(attempts):
        image_x, image_y = images(working)
        sf, corrections = normalize_to_standard_form(image_x, image_y, working)
        reached = min(sf.F.precision, sf.G.precision)
        if reached >= precision:
            return sf, corrections
        if known is not None and reached <= known:
            break
        known = reached
        working += precision - reached
    raise PrecisionError(f"normalized pair is known only below exponent {known}, {precision} requested")


def inverse_corrections(corrections: list[Morphism], precision: int = DEFAULT_PRECISION) -> list[Morphism]:
    return [elementary_inverse(m, precision) for m in reversed(corrections)]


def scalar_multiple(lhs: Element, rhs: Element, precision: int = DEFAULT_PRECISION) -> ScalarK | None:
    """The scalar c with lhs = c rhs to precision, if there is one."""
    lhs = to_series(lhs, precision, lhs.tag)
    rhs = to_series(rhs, precision, rhs.tag)
    if rhs.is_zero():
        return ScalarK.zero() if lhs.is_zero() else None
    exponent, lead = rhs.leading_term()
    if exponent >= lhs.precision:
        return None
    ratio = (lhs.coefficient(exponent) / lead).as_scalar()
    if ratio is None:
        return None
    return ratio if equal_to_precision(lhs, ratio * rhs) else None
