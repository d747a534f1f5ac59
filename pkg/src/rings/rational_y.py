from __future__ import annotations

from functools import lru_cache
from itertools import chain

from sympy.polys.fields import FracElement

from ..errors import AlgebraError, DivisionByZeroError
from .scalar_field import FIELD, Q_EXPONENT, RING, Y, OmegaPair, ScalarK, _is_y_free


def y_power(k: int) -> FracElement:
    if k >= 0:
        return Y**k
    return FIELD.one / Y ** (-k)


def _group_by_y(poly) -> dict[int, object]:
    grouped: dict[int, dict] = {}
    for (a, b), coeff in poly.items():
        grouped.setdefault(b, {})[(a, 0)] = coeff
    return {b: RING.from_dict(terms) for b, terms in grouped.items()}


def _substitute_component(value: FracElement, t_shift: int, e: int, negate: bool) -> FracElement:
    """Replace y by (+-) t^t_shift * y^e inside one component."""
    if not value:
        return value

    def moved(poly) -> dict:
        out = {}
        for (a, b), coeff in poly.items():
            if negate and b % 2:
                coeff = -coeff
            out[(a + t_shift * b, e * b)] = coeff
        return out

    numer, denom = moved(value.numer), moved(value.denom)
    low_t = min(m[0] for m in chain(numer, denom))
    low_y = min(m[1] for m in chain(numer, denom))
    numer = {(a - low_t, b - low_y): c for (a, b), c in numer.items()}
    denom = {(a - low_t, b - low_y): c for (a, b), c in denom.items()}
    return FIELD.new(RING.from_dict(numer), RING.from_dict(denom))


class RationalY(OmegaPair):
    """Rational function of y over K; Laurent polynomials have a power of y as denominator."""

    __slots__ = ()
    _rank = 1

    @classmethod
    def zero(cls) -> RationalY:
        return cls(FIELD.zero)

    @classmethod
    def one(cls) -> RationalY:
        return cls(FIELD.one)

    @classmethod
    def y(cls, k: int = 1) -> RationalY:
        return cls(y_power(k))

    @classmethod
    def from_scalar(cls, value: ScalarK) -> RationalY:
        return cls(value.re, value.om)

    @classmethod
    def from_laurent_terms(cls, terms: dict[int, ScalarK]) -> RationalY:
        result = cls.zero()
        for k, coeff in terms.items():
            result = result + cls.from_scalar(coeff) * cls.y(k)
        return result

    @classmethod
    def lambda_(cls) -> RationalY:
        return cls.y(-1) - ScalarK.q(-1) * cls.y()

    @classmethod
    def b(cls) -> RationalY:
        return cls.y() + cls.y(-1)

    def as_scalar(self) -> ScalarK | None:
        if _is_y_free(self.re) and _is_y_free(self.om):
            return ScalarK(self.re, self.om)
        return None

    def is_laurent(self) -> bool:
        return all(len({m[1] for m in c.denom}) == 1 for c in (self.re, self.om))

    def laurent_terms(self) -> dict[int, ScalarK]:
        terms: dict[int, list] = {}
        for slot, component in enumerate((self.re, self.om)):
            if not component:
                continue
            shifts = {m[1] for m in component.denom}
            if len(shifts) != 1:
                raise AlgebraError(f"{self.render()} is not a Laurent polynomial in y")
            shift = shifts.pop()
            d_t = RING.from_dict({(a, 0): c for (a, _), c in component.denom.items()})
            for b, n_t in _group_by_y(component.numer).items():
                pair = terms.setdefault(b - shift, [FIELD.zero, FIELD.zero])
                pair[slot] = pair[slot] + FIELD.new(n_t, d_t)
        return {k: ScalarK(re, om) for k, (re, om) in sorted(terms.items()) if re or om}

    def y_coefficients(self) -> tuple[dict[int, ScalarK], dict[int, ScalarK]]:
        """Numerator and denominator as polynomials in y with coefficients in K."""
        if not self.om:
            numer = {b: ScalarK(FIELD.new(p)) for b, p in _group_by_y(self.re.numer).items()}
            denom = {b: ScalarK(FIELD.new(p)) for b, p in _group_by_y(self.re.denom).items()}
            return numer, denom
        if not self.re:
            numer = {b: ScalarK(FIELD.zero, FIELD.new(p)) for b, p in _group_by_y(self.om.numer).items()}
            denom = {b: ScalarK(FIELD.new(p)) for b, p in _group_by_y(self.om.denom).items()}
            return numer, denom
        re_part = _group_by_y(self.re.numer * self.om.denom)
        om_part = _group_by_y(self.om.numer * self.re.denom)
        numer = {}
        for b in sorted(set(re_part) | set(om_part)):
            re = FIELD.new(re_part[b]) if b in re_part else FIELD.zero
            om = FIELD.new(om_part[b]) if b in om_part else FIELD.zero
            numer[b] = ScalarK(re, om)
        denom = {b: ScalarK(FIELD.new(p)) for b, p in _group_by_y(self.re.denom * self.om.denom).items()}
        return numer, denom

    def alpha(self, j: int = 1) -> RationalY:
        return alpha_power(self, j)


@lru_cache(maxsize=65536)
def _alpha_cached(f: RationalY, j: int) -> RationalY:
    shift = Q_EXPONENT * j
    return RationalY(
        _substitute_component(f.re, shift, 1, False),
        _substitute_component(f.om, shift, 1, False),
    )


def alpha_power(f: RationalY, j: int) -> RationalY:
    if j == 0 or f.as_scalar() is not None:
        return f
    return _alpha_cached(f, j)


def substitute_unit_monomial(f: RationalY, c: ScalarK, e: int) -> RationalY:
    if e not in (1, -1):
        raise ValueError("exponent must be +1 or -1")
    if c.is_zero():
        raise DivisionByZeroError("substitution scale must be nonzero")
    if f.as_scalar() is not None:
        return f
    k = c.as_t_power()
    negate = False
    if k is None:
        k = (-c).as_t_power()
        negate = k is not None
    if k is not None:
        return RationalY(
            _substitute_component(f.re, k, e, negate),
            _substitute_component(f.om, k, e, negate),
        )

    numer, denom = f.y_coefficients()

    def image(poly: dict[int, ScalarK]) -> RationalY:
        total = RationalY.zero()
        for b, coeff in poly.items():
            total = total + coeff * c**b * RationalY.y(e * b)
        return total

    return image(numer) / image(denom)


def rat_arithmetic(lhs: RationalY, rhs: RationalY, op: str) -> RationalY:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        if not rhs:
            raise DivisionByZeroError("rational division by zero")
        return lhs / rhs
    raise ValueError(f"unknown rational operation '{op}'")
