"""Truncated skew Laurent series sum_{i >= v} f_i(y) x^i known below an absolute precision P."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from ..errors import PoleError, PrecisionError, RingMismatchError
from .rational_y import RationalY, alpha_power
from .scalar_field import ScalarK
from .skew_laurent import TAG_XY, SkewLaurentPoly, as_rational, render_terms, variables


@dataclass(frozen=True)
class Equal:
    precision: int | None

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class DifferAt:
    exponent: int
    delta: RationalY

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class SkewSeries:
    valuation: int
    precision: int
    coefficients: tuple[RationalY, ...]
    tag: str = TAG_XY

    @classmethod
    def build(cls, start: int, precision: int, coeffs, tag: str = TAG_XY) -> SkewSeries:
        width = max(0, precision - start)
        coeffs = list(coeffs)[:width]
        coeffs.extend(RationalY.zero() for _ in range(width - len(coeffs)))
        skip = 0
        while skip < len(coeffs) and not coeffs[skip]:
            skip += 1
        if skip == len(coeffs):
            return cls.zero(precision, tag)
        return cls(start + skip, precision, tuple(coeffs[skip:]), tag)

    @classmethod
    def zero(cls, precision: int, tag: str = TAG_XY) -> SkewSeries:
        return cls(precision, precision, (), tag)

    @classmethod
    def constant(cls, value, precision: int, tag: str = TAG_XY) -> SkewSeries:
        return cls.build(0, precision, [as_rational(value)], tag)

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> RationalY:
        if i >= self.precision:
            raise PrecisionError(f"coefficient {i} lies beyond precision {self.precision}")
        if i < self.valuation:
            return RationalY.zero()
        return self.coefficients[i - self.valuation]

    def items(self):
        for offset, coeff in enumerate(self.coefficients):
            if coeff:
                yield self.valuation + offset, coeff

    def leading_term(self) -> tuple[int, RationalY]:
        if self.is_zero():
            raise PrecisionError(f"series is zero to precision {self.precision}")
        return self.valuation, self.coefficients[0]

    def truncate(self, precision: int) -> SkewSeries:
        if precision >= self.precision:
            return self
        return SkewSeries.build(self.valuation, precision, self.coefficients, self.tag)

    def with_coefficient(self, i: int, value) -> SkewSeries:
        if i >= self.precision:
            raise PrecisionError(f"coefficient {i} lies beyond precision {self.precision}")
        start = min(self.valuation, i)
        coeffs = [self.coefficient(k) for k in range(start, self.precision)]
        coeffs[i - start] = as_rational(value)
        return SkewSeries.build(start, self.precision, coeffs, self.tag)

    def _check_tag(self, other: SkewSeries) -> None:
        if other.tag != self.tag:
            raise RingMismatchError(f"cannot combine {self.tag} with {other.tag}")

    def _promote(self, other, for_product: bool) -> SkewSeries | None:
        if isinstance(other, SkewSeries):
            self._check_tag(other)
            return other
        if isinstance(other, SkewLaurentPoly):
            if other.tag != self.tag:
                raise RingMismatchError(f"cannot combine {self.tag} with {other.tag}")
            poly = other
        else:
            value = as_rational(other)
            if value is None:
                return None
            poly = SkewLaurentPoly.constant(value, self.tag)
        if poly.is_zero():
            return SkewSeries.zero(self.precision, self.tag)
        if not for_product:
            return from_poly(poly, self.precision)
        reach = self.precision + poly.valuation() - self.valuation
        return from_poly(poly, max(poly.degree() + 1, reach))

    def __add__(self, other):
        rhs = self._promote(other, for_product=False)
        if rhs is None:
            return NotImplemented
        precision = min(self.precision, rhs.precision)
        start = min(self.valuation, rhs.valuation, precision)
        coeffs = [self.coefficient(i) + rhs.coefficient(i) for i in range(start, precision)]
        return SkewSeries.build(start, precision, coeffs, self.tag)

    __radd__ = __add__

    def __neg__(self) -> SkewSeries:
        return SkewSeries(self.valuation, self.precision, tuple(-c for c in self.coefficients), self.tag)

    def __sub__(self, other):
        rhs = self._promote(other, for_product=False)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        lhs = self._promote(other, for_product=False)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other):
        rhs = self._promote(other, for_product=True)
        if rhs is None:
            return NotImplemented
        return _multiply(self, rhs)

    def __rmul__(self, other):
        lhs = self._promote(other, for_product=True)
        if lhs is None:
            return NotImplemented
        return _multiply(lhs, self)

    def invert(self) -> SkewSeries:
        return series_invert(self)

    def power(self, n: int) -> SkewSeries:
        if n < 0:
            return self.invert().power(-n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        if result is None:
            return SkewSeries.constant(RationalY.one(), self.precision - self.valuation, self.tag)
        return result

    def __pow__(self, n: int) -> SkewSeries:
        return self.power(n)

    def render(self) -> str:
        x_name, _ = variables(self.tag)
        body = render_terms(list(self.items()), self.tag)
        tail = f"O({x_name}^{self.precision})"
        return tail if body == "0" else f"{body} + {tail}"

    def __str__(self) -> str:
        return self.render()


Element = Union[SkewLaurentPoly, SkewSeries]


def _multiply(a: SkewSeries, b: SkewSeries) -> SkewSeries:
    precision = min(a.precision + b.valuation, b.precision + a.valuation)
    if a.is_zero() or b.is_zero():
        return SkewSeries.zero(precision, a.tag)
    start = a.valuation + b.valuation
    coeffs = []
    for n in range(start, precision):
        acc = None
        for i in range(a.valuation, n - b.valuation + 1):
            ai = a.coefficients[i - a.valuation]
            if not ai:
                continue
            bj = b.coefficients[n - i - b.valuation]
            if not bj:
                continue
            term = ai * alpha_power(bj, i)
            acc = term if acc is None else acc + term
        coeffs.append(RationalY.zero() if acc is None else acc)
    return SkewSeries.build(start, precision, coeffs, a.tag)


def series_arithmetic(lhs: SkewSeries, rhs: SkewSeries, op: str) -> SkewSeries:
    if lhs.tag != rhs.tag:
        raise RingMismatchError(f"cannot combine {lhs.tag} with {rhs.tag}")
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown series operation '{op}'")


def series_invert(p: SkewSeries) -> SkewSeries:
    if p.is_zero():
        raise PrecisionError(f"cannot invert a series that is zero to precision {p.precision}")
    v = p.valuation
    lead_inverse = p.coefficients[0].inverse()
    count = p.precision - v
    inverse: list[RationalY] = []
    for n in range(count):
        acc = RationalY.one() if n == 0 else RationalY.zero()
        for k in range(1, n + 1):
            pk = p.coefficients[k]
            if not pk:
                continue
            w = inverse[n - k]
            if not w:
                continue
            acc = acc - pk * alpha_power(w, v + k)
        inverse.append(alpha_power(lead_inverse * acc, -v) if acc else RationalY.zero())
    return SkewSeries.build(-v, p.precision - 2 * v, inverse, p.tag)


def from_poly(p: SkewLaurentPoly, precision: int) -> SkewSeries:
    if p.is_zero():
        return SkewSeries.zero(precision, p.tag)
    start = min(p.valuation(), precision)
    coeffs = [p.coefficient(i) for i in range(start, precision)]
    return SkewSeries.build(start, precision, coeffs, p.tag)


def to_series(value, precision: int, tag: str = TAG_XY) -> SkewSeries:
    if isinstance(value, SkewSeries):
        return value
    if isinstance(value, SkewLaurentPoly):
        return from_poly(value, precision)
    return SkewSeries.constant(value, precision, tag)


def _horner(poly: dict[int, ScalarK], target: SkewSeries):
    top = max(poly)
    acc: Element = SkewLaurentPoly.constant(poly[top], target.tag)
    for b in range(top - 1, -1, -1):
        acc = acc * target
        if b in poly:
            acc = acc + poly[b]
    return acc


def evaluate_rational_at(f: RationalY, target: SkewSeries) -> Element:
    """f(T) = N(T) * D(T)^-1, evaluated by Horner's rule on numerator and denominator."""
    if f.as_scalar() is not None:
        return SkewLaurentPoly.constant(f, target.tag)
    numer, denom = f.y_coefficients()
    if target.valuation == 0 and not target.is_zero():
        lead = target.coefficients[0]
        at_lead = RationalY.zero()
        for b, c in denom.items():
            at_lead = at_lead + c * lead**b
        if not at_lead:
            raise PoleError(f"pole at substitution point: denominator of {f.render()} vanishes at {lead.render()}")
    top = _horner(numer, target)
    bottom = _horner(denom, target)
    if isinstance(bottom, SkewLaurentPoly):
        return top * bottom.invert_unit()
    return top * series_invert(bottom)


def equal_to_precision(lhs: Element, rhs: Element) -> Equal | DifferAt:
    if isinstance(lhs, SkewLaurentPoly) and isinstance(rhs, SkewLaurentPoly):
        if lhs.tag != rhs.tag:
            raise RingMismatchError(f"cannot compare {lhs.tag} with {rhs.tag}")
        diff = lhs - rhs
        if diff.is_zero():
            return Equal(None)
        i, delta = diff.terms[0]
        return DifferAt(i, delta)
    if isinstance(lhs, SkewLaurentPoly):
        lhs = rhs._promote(lhs, for_product=False)
    elif isinstance(rhs, SkewLaurentPoly):
        rhs = lhs._promote(rhs, for_product=False)
    if lhs.tag != rhs.tag:
        raise RingMismatchError(f"cannot compare {lhs.tag} with {rhs.tag}")
    precision = min(lhs.precision, rhs.precision)
    for i in range(min(lhs.valuation, rhs.valuation), precision):
        delta = lhs.coefficient(i) - rhs.coefficient(i)
        if delta:
            return DifferAt(i, delta)
    return Equal(precision)


def refine(build: Callable[[int], Element], precision: int, attempts: int = 6) -> Element:
    """Rebuild a pipeline with a growing working precision until the result reaches ``precision``."""
    working = precision
    best: SkewSeries | None = None
    for _ in range(attempts):
        result = build(working)
        if not isinstance(result, SkewSeries):
            return result
        if result.precision >= precision:
            return result.truncate(precision)
        if best is not None and result.precision <= best.precision:
            return best
        best = result
        working += precision - result.precision
    return best
