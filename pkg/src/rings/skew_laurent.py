from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import AlgebraError, MorphismError, NotAUnitError, RingMismatchError
from .rational_y import RationalY, alpha_power
from .scalar_field import OmegaPair

TAG_XY = "x/y"
TAG_FG = "f/g"

INNER_POSSIBLE = "inner_possible"
NOT_INNER = "not_inner"


def variables(tag: str) -> tuple[str, str]:
    x_name, y_name = tag.split("/")
    return x_name, y_name


def as_rational(value) -> RationalY | None:
    if isinstance(value, RationalY):
        return value
    if isinstance(value, (OmegaPair, int, Fraction)) and not isinstance(value, bool):
        return RationalY.one() * value
    return None


def render_terms(terms, tag: str) -> str:
    x_name, y_name = variables(tag)
    pieces = []
    for i, coeff in terms:
        text = f"({coeff.render(y_name)})"
        if i == 1:
            text += f"*{x_name}"
        elif i != 0:
            text += f"*{x_name}^{i}"
        pieces.append(text)
    return " + ".join(pieces) if pieces else "0"


@dataclass(frozen=True)
class SkewLaurentPoly:
    """Finite sum of f_i(y)*x^i with coefficients on the left and x*f(y) = f(qy)*x."""

    terms: tuple[tuple[int, RationalY], ...] = ()
    tag: str = TAG_XY

    @classmethod
    def from_mapping(cls, mapping: dict[int, object], tag: str = TAG_XY) -> SkewLaurentPoly:
        cleaned = []
        for i, coeff in sorted(mapping.items()):
            value = as_rational(coeff)
            if value is None:
                raise TypeError(f"unsupported coefficient {coeff!r}")
            if value:
                cleaned.append((i, value))
        return cls(tuple(cleaned), tag)

    @classmethod
    def zero(cls, tag: str = TAG_XY) -> SkewLaurentPoly:
        return cls((), tag)

    @classmethod
    def one(cls, tag: str = TAG_XY) -> SkewLaurentPoly:
        return cls.constant(RationalY.one(), tag)

    @classmethod
    def constant(cls, value, tag: str = TAG_XY) -> SkewLaurentPoly:
        return cls.from_mapping({0: value}, tag)

    @classmethod
    def monomial(cls, coeff, exponent: int, tag: str = TAG_XY) -> SkewLaurentPoly:
        return cls.from_mapping({exponent: coeff}, tag)

    @classmethod
    def x(cls, tag: str = TAG_XY) -> SkewLaurentPoly:
        return cls.monomial(RationalY.one(), 1, tag)

    @classmethod
    def y(cls, tag: str = TAG_XY) -> SkewLaurentPoly:
        return cls.constant(RationalY.y(), tag)

    @property
    def coefficients(self) -> dict[int, RationalY]:
        return dict(self.terms)

    def coefficient(self, i: int) -> RationalY:
        for j, coeff in self.terms:
            if j == i:
                return coeff
        return RationalY.zero()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.terms)

    def degree(self) -> int:
        if not self.terms:
            raise AlgebraError("degree of the zero polynomial is undefined")
        return self.terms[-1][0]

    def valuation(self) -> int:
        if not self.terms:
            raise AlgebraError("valuation of the zero polynomial is undefined")
        return self.terms[0][0]

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    def _operand(self, other) -> SkewLaurentPoly | None:
        if isinstance(other, SkewLaurentPoly):
            if other.tag != self.tag:
                raise RingMismatchError(f"cannot combine {self.tag} with {other.tag}")
            return other
        value = as_rational(other)
        if value is None:
            return None
        return SkewLaurentPoly.constant(value, self.tag)

    def __add__(self, other):
        rhs = self._operand(other)
        if rhs is None:
            return NotImplemented
        total = dict(self.terms)
        for i, coeff in rhs.terms:
            total[i] = total[i] + coeff if i in total else coeff
        return SkewLaurentPoly.from_mapping(total, self.tag)

    __radd__ = __add__

    def __neg__(self) -> SkewLaurentPoly:
        return SkewLaurentPoly(tuple((i, -c) for i, c in self.terms), self.tag)

    def __sub__(self, other):
        rhs = self._operand(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        lhs = self._operand(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other):
        rhs = self._operand(other)
        if rhs is None:
            return NotImplemented
        product: dict[int, RationalY] = {}
        for i, f in self.terms:
            for j, g in rhs.terms:
                term = f * alpha_power(g, i)
                product[i + j] = product[i + j] + term if i + j in product else term
        return SkewLaurentPoly.from_mapping(product, self.tag)

    def __rmul__(self, other):
        lhs = self._operand(other)
        if lhs is None:
            return NotImplemented
        return lhs * self

    def __pow__(self, n: int) -> SkewLaurentPoly:
        if n < 0:
            return self.invert_unit() ** (-n)
        result = SkewLaurentPoly.one(self.tag)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def invert_unit(self) -> SkewLaurentPoly:
        if len(self.terms) != 1:
            raise NotAUnitError(
                f"{self.render()} is not a unit of the Laurent ring (support {list(self.support)}); "
                "promote it to a series and use series_invert"
            )
        (m, f), = self.terms
        return SkewLaurentPoly.monomial(alpha_power(f.inverse(), -m), -m, self.tag)

    def render(self) -> str:
        return render_terms(self.terms, self.tag)

    def __str__(self) -> str:
        return self.render()


def poly_arithmetic(lhs: SkewLaurentPoly, rhs: SkewLaurentPoly, op: str) -> SkewLaurentPoly:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown polynomial operation '{op}'")


def invert_unit(p: SkewLaurentPoly) -> SkewLaurentPoly:
    return p.invert_unit()


def fraction_degree(s: SkewLaurentPoly, t: SkewLaurentPoly) -> int:
    if s.is_zero() or t.is_zero():
        raise AlgebraError("fraction degree needs nonzero numerator and denominator")
    return s.degree() - t.degree()


def left_fraction(p: SkewLaurentPoly) -> tuple[SkewLaurentPoly, SkewLaurentPoly]:
    """Write p = t^-1 * s with t a polynomial in y and s polynomial in y on every x-power."""
    if p.is_zero():
        raise AlgebraError("zero has no fraction form")
    denominator = RationalY.one()
    for _, coeff in p.terms:
        # only the part of the denominator not already cleared
        _, denom = (denominator * coeff).y_coefficients()
        denominator = denominator * RationalY.from_laurent_terms(denom)
    t = SkewLaurentPoly.constant(denominator, p.tag)
    return t * p, t


def degree_obstruction(m) -> str:
    image_y = getattr(m, "image_y", None)
    if not isinstance(image_y, SkewLaurentPoly):
        raise MorphismError(f"image of y under {getattr(m, 'name', m)} is not an exact fraction of polynomials")
    s, t = left_fraction(image_y)
    return NOT_INNER if fraction_degree(s, t) != 0 else INNER_POSSIBLE
