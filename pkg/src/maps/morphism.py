"""Endomorphisms of the q-division ring given by the images of its two generators."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import MorphismError, PrecisionError, RingMismatchError
from ..rings.rational_y import RationalY, substitute_unit_monomial
from ..rings.scalar_field import ScalarK
from ..rings.skew_laurent import TAG_XY, SkewLaurentPoly, as_rational
from ..rings.skew_series import (
    DifferAt,
    Element,
    SkewSeries,
    equal_to_precision,
    evaluate_rational_at,
    refine,
    to_series,
)

MONOMIAL = "monomial"
ELEMENTARY = "elementary"
GENERAL = "general"

DEFAULT_PRECISION = 12


@dataclass(frozen=True)
class Sl2Matrix:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls) -> Sl2Matrix:
        return cls(1, 0, 0, 1)

    def determinant(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def check(self) -> Sl2Matrix:
        if self.determinant() != 1:
            raise MorphismError(f"matrix {self} has determinant {self.determinant()}, expected 1")
        return self

    def __matmul__(self, other: Sl2Matrix) -> Sl2Matrix:
        return Sl2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> Sl2Matrix:
        return Sl2Matrix(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, n: int) -> Sl2Matrix:
        if n < 0:
            return Sl2Matrix(self.d, -self.b, -self.c, self.a) ** (-n)
        result = Sl2Matrix.identity()
        for _ in range(n):
            result = result @ self
        return result

    def __str__(self) -> str:
        return f"({self.a} {self.b}; {self.c} {self.d})"


@dataclass(frozen=True)
class Morphism:
    name: str
    image_x: Element
    image_y: Element
    kind: str = GENERAL
    matrix: Sl2Matrix | None = None
    family: str | None = None
    parameter: RationalY | None = None
    source_tag: str = TAG_XY

    def __post_init__(self) -> None:
        if self.image_x.tag != self.image_y.tag:
            raise RingMismatchError(f"images of {self.name} live in different rings")
        lhs = self.image_x * self.image_y
        rhs = ScalarK.q() * self.image_y * self.image_x
        outcome = equal_to_precision(lhs, rhs)
        if isinstance(outcome, DifferAt):
            raise MorphismError(
                f"images of {self.name} do not q-commute: first difference at exponent {outcome.exponent}"
            )

    @property
    def tag(self) -> str:
        return self.image_x.tag

    def is_exact(self) -> bool:
        return isinstance(self.image_x, SkewLaurentPoly) and isinstance(self.image_y, SkewLaurentPoly)

    def __str__(self) -> str:
        x_name, y_name = self.source_tag.split("/")
        return f"{self.name}: {x_name} -> {self.image_x.render()}, {y_name} -> {self.image_y.render()}"


def from_matrix(m: Sl2Matrix, name: str | None = None) -> Morphism:
    """Monomial map y -> qh^(ac) y^a x^c, x -> qh^(bd) y^b x^d."""
    m.check()
    image_y = SkewLaurentPoly.monomial(ScalarK.qhat(m.a * m.c) * RationalY.y(m.a), m.c)
    image_x = SkewLaurentPoly.monomial(ScalarK.qhat(m.b * m.d) * RationalY.y(m.b), m.d)
    return Morphism(name or f"monomial{m}", image_x, image_y, MONOMIAL, matrix=m)


def identity(tag: str = TAG_XY) -> Morphism:
    if tag == TAG_XY:
        return from_matrix(Sl2Matrix.identity(), "identity")
    return Morphism("identity", SkewLaurentPoly.x(tag), SkewLaurentPoly.y(tag), MONOMIAL,
                    matrix=Sl2Matrix.identity(), source_tag=tag)


def tau() -> Morphism:
    return from_matrix(-Sl2Matrix.identity(), "tau")


def h_x(b, name: str = "h_X", tag: str = TAG_XY) -> Morphism:
    """x -> b(y) x, y -> y."""
    b = as_rational(b)
    if b is None or not b:
        raise MorphismError("h_X needs a nonzero coefficient function b(y)")
    return Morphism(name, SkewLaurentPoly.monomial(b, 1, tag), SkewLaurentPoly.y(tag), ELEMENTARY,
                    family="h_X", parameter=b, source_tag=tag)


def _function_of_x(a: RationalY, precision: int, tag: str) -> Element:
    if a.is_laurent():
        return SkewLaurentPoly.from_mapping(a.laurent_terms(), tag)
    numer, denom = a.y_coefficients()
    if not denom.get(0):
        raise MorphismError(f"a(x) = {a.render('x')} has a pole at x = 0")
    if not numer.get(0):
        raise MorphismError(f"a(x) = {a.render('x')} vanishes at x = 0")
    return evaluate_rational_at(a, to_series(SkewLaurentPoly.x(tag), precision, tag))


def h_y(a, name: str = "h_Y", precision: int = DEFAULT_PRECISION, tag: str = TAG_XY) -> Morphism:
    """y -> a(x) y, x -> x; ``a`` is a rational function read in the variable x."""
    a = as_rational(a)
    if a is None or not a:
        raise MorphismError("h_Y needs a nonzero coefficient function a(x)")
    image_y = _function_of_x(a, precision, tag) * SkewLaurentPoly.y(tag)
    return Morphism(name, SkewLaurentPoly.x(tag), image_y, ELEMENTARY, family="h_Y", parameter=a,
                    source_tag=tag)


def elementary(kind: str, parameter=None, precision: int = DEFAULT_PRECISION) -> Morphism:
    if kind == "tau":
        return tau()
    if kind == "h_X":
        return h_x(parameter)
    if kind == "h_Y":
        return h_y(parameter, precision=precision)
    raise MorphismError(f"unknown elementary family '{kind}'")


def elementary_inverse(m: Morphism, precision: int = DEFAULT_PRECISION) -> Morphism:
    if m.family == "h_X":
        return h_x(m.parameter.inverse(), name=f"{m.name}^-1", tag=m.source_tag)
    if m.family == "h_Y":
        return h_y(m.parameter.inverse(), name=f"{m.name}^-1", precision=precision, tag=m.source_tag)
    if m.matrix is not None:
        n = m.matrix
        return from_matrix(Sl2Matrix(n.d, -n.b, -n.c, n.a), f"{m.name}^-1")
    raise MorphismError(f"{m.name} is not elementary")


def _y_monomial(coeff: RationalY) -> tuple[ScalarK, int] | None:
    for e in (1, -1):
        scale = (coeff * RationalY.y(-e)).as_scalar()
        if scale is not None:
            return scale, e
    return None


def _exact_coefficient_image(m: Morphism, f: RationalY) -> SkewLaurentPoly | None:
    if f.as_scalar() is not None:
        return SkewLaurentPoly.constant(f, m.tag)
    image_y = m.image_y
    if not isinstance(image_y, SkewLaurentPoly):
        return None
    if image_y.support == (0,):
        monomial = _y_monomial(image_y.coefficient(0))
        if monomial is not None:
            return SkewLaurentPoly.constant(substitute_unit_monomial(f, *monomial), m.tag)
    if not f.is_laurent():
        return None
    terms = f.laurent_terms()
    if min(terms) < 0 and not image_y.is_unit():
        return None
    total = SkewLaurentPoly.zero(m.tag)
    for k, c in terms.items():
        total = total + c * image_y**k
    return total


def _exact_x_power(m: Morphism, i: int) -> SkewLaurentPoly | None:
    image_x = m.image_x
    if not isinstance(image_x, SkewLaurentPoly):
        return None
    if i < 0 and not image_x.is_unit():
        return None
    return image_x**i


def _check_source(m: Morphism, value: Element) -> None:
    if value.tag != m.source_tag:
        raise RingMismatchError(f"{m.name} acts on {m.source_tag}, got an element of {value.tag}")


def _apply_exact(m: Morphism, p: SkewLaurentPoly) -> SkewLaurentPoly | None:
    total = SkewLaurentPoly.zero(m.tag)
    for i, f in p.terms:
        coeff = _exact_coefficient_image(m, f)
        power = _exact_x_power(m, i)
        if coeff is None or power is None:
            return None
        total = total + coeff * power
    return total


def _coefficient_image(m: Morphism, f: RationalY, image_y: SkewSeries) -> Element:
    exact = _exact_coefficient_image(m, f)
    if exact is not None:
        return exact
    return evaluate_rational_at(f, image_y)


def _x_power(m: Morphism, image_x: SkewSeries, i: int) -> Element:
    exact = _exact_x_power(m, i)
    if exact is not None:
        return exact
    return image_x.power(i)


def _apply_poly_series(m: Morphism, p: SkewLaurentPoly, working: int) -> Element:
    image_x = to_series(m.image_x, working, m.tag)
    image_y = to_series(m.image_y, working, m.tag)
    total: Element = SkewLaurentPoly.zero(m.tag)
    for i, f in p.terms:
        total = total + _coefficient_image(m, f, image_y) * _x_power(m, image_x, i)
    return total


def _apply_series(m: Morphism, s: SkewSeries, working: int) -> SkewSeries:
    image_x = to_series(m.image_x, working, m.tag)
    image_y = to_series(m.image_y, working, m.tag)
    if image_x.is_zero() or image_x.valuation < 1:
        raise PrecisionError(f"{m.name} cannot act on a truncated series: image of x must have positive valuation")
    if image_y.is_zero() or image_y.valuation != 0:
        raise PrecisionError(f"{m.name} cannot act on a truncated series: image of y must have valuation 0")
    cap = s.precision * image_x.valuation
    total = SkewSeries.zero(cap, m.tag)
    for i, f in s.items():
        total = total + _coefficient_image(m, f, image_y) * _x_power(m, image_x, i)
    return total.truncate(cap)


def apply(m: Morphism, p, precision: int = DEFAULT_PRECISION) -> Element:
    """Image of ``p``: exact when no non-unit inverse is needed, a series at ``precision`` otherwise."""
    if isinstance(p, SkewSeries):
        _check_source(m, p)
        x_valuation = to_series(m.image_x, precision, m.tag).valuation
        target = min(precision, p.precision * max(x_valuation, 1))
        return refine(lambda working: _apply_series(m, p, working), target)
    if not isinstance(p, SkewLaurentPoly):
        value = as_rational(p)
        if value is None:
            raise TypeError(f"cannot apply a morphism to {p!r}")
        p = SkewLaurentPoly.constant(value, m.source_tag)
    _check_source(m, p)
    exact = _apply_exact(m, p)
    if exact is not None:
        return exact
    return refine(lambda working: _apply_poly_series(m, p, working), precision)


def compose(outer: Morphism, inner: Morphism, precision: int = DEFAULT_PRECISION) -> Morphism:
    """outer after inner: x -> outer(inner(x)), y -> outer(inner(y))."""
    if outer.source_tag != inner.tag:
        raise RingMismatchError(f"cannot compose {outer.name} after {inner.name}")
    image_x = apply(outer, inner.image_x, precision)
    image_y = apply(outer, inner.image_y, precision)
    name = f"{outer.name}*{inner.name}"
    if outer.matrix is not None and inner.matrix is not None and inner.source_tag == TAG_XY:
        candidate = from_matrix(outer.matrix @ inner.matrix, name)
        if candidate.image_x == image_x and candidate.image_y == image_y:
            return candidate
    return Morphism(name, image_x, image_y, GENERAL, source_tag=inner.source_tag)


def monomial_order(m: Sl2Matrix) -> int | float:
    """Order of a monomial map as a matrix; ``math.inf`` when no power up to 6 is the identity."""
    m.check()
    one = Sl2Matrix.identity()
    if m == one:
        return 1
    if m == -one:
        return 2
    if abs(m.trace()) >= 2:
        return math.inf
    power = m
    for n in range(2, 7):
        power = power @ m
        if power == one:
            return n
    return math.inf


def monomial_cocycle(m1: Sl2Matrix, m2: Sl2Matrix) -> tuple[int | None, int | None]:
    """Powers of qh by which from_matrix(m1) after from_matrix(m2) differs from from_matrix(m1 m2) on x and y."""
    composed = compose(from_matrix(m1), from_matrix(m2))
    direct = from_matrix(m1 @ m2)
    powers = []
    for got, want in ((composed.image_x, direct.image_x), (composed.image_y, direct.image_y)):
        if got.support != want.support or len(got.terms) != 1:
            powers.append(None)
            continue
        (exponent, coeff), = got.terms
        ratio = (coeff / want.coefficient(exponent)).as_scalar()
        powers.append(None if ratio is None else ratio.as_qhat_power())
    return powers[0], powers[1]


def is_fixed(m: Morphism, element, precision: int = DEFAULT_PRECISION) -> bool:
    return bool(equal_to_precision(apply(m, element, precision), element))
