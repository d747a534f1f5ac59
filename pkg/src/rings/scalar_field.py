"""Exact scalars K = Q(w)(t) with q = t^6, qh = t^3, cbrt(q) = t^2 and p = t^-2.

Every value is stored as a pair ``re + om*w`` of rational functions over Q, using
w^2 = -1 - w. The same pair layout is reused by :class:`RationalY`, whose
components may also depend on y; both live in the shared field Q(t, y).
"""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass

from sympy.polys.domains import ZZ
from sympy.polys.fields import FracElement, field

from ..errors import AlgebraError, DivisionByZeroError

FIELD, T, Y = field("t,y", ZZ)
RING = FIELD.ring

Q_EXPONENT = 6
QHAT_EXPONENT = 3


def rational(numerator: int, denominator: int = 1) -> FracElement:
    if denominator == 0:
        raise DivisionByZeroError("zero denominator in rational constant")
    return FIELD.new(RING(numerator), RING(denominator))


def t_power(k: int) -> FracElement:
    if k >= 0:
        return T**k
    return FIELD.one / T ** (-k)


def render_component(value: FracElement, var: str = "y") -> str:
    numer = str(value.numer).replace("**", "^")
    if value.denom == 1:
        text = numer
    else:
        denom = str(value.denom).replace("**", "^")
        text = f"({numer})*({denom})^-1"
    if var != "y":
        text = text.replace("y", var)
    return text


def _pair_mul(a: FracElement, b: FracElement, c: FracElement, d: FracElement):
    if not b and not d:
        return a * c, FIELD.zero
    if not b:
        return a * c, a * d
    if not d:
        return a * c, b * c
    bd = b * d
    return a * c - bd, a * d + b * c - bd


def _pair_inverse(a: FracElement, b: FracElement):
    if not a and not b:
        raise DivisionByZeroError("inverse of zero")
    if not b:
        return FIELD.one / a, FIELD.zero
    norm = a * a - a * b + b * b
    return (a - b) / norm, -b / norm


@dataclass(frozen=True)
class EisensteinRational:
    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __add__(self, other: EisensteinRational) -> EisensteinRational:
        return EisensteinRational(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisensteinRational) -> EisensteinRational:
        return EisensteinRational(self.a - other.a, self.b - other.b)

    def __neg__(self) -> EisensteinRational:
        return EisensteinRational(-self.a, -self.b)

    def __mul__(self, other: EisensteinRational) -> EisensteinRational:
        bd = self.b * other.b
        return EisensteinRational(self.a * other.a - bd, self.a * other.b + self.b * other.a - bd)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> EisensteinRational:
        n = self.norm()
        if n == 0:
            raise DivisionByZeroError("inverse of zero")
        return EisensteinRational((self.a - self.b) / n, -self.b / n)

    def __truediv__(self, other: EisensteinRational) -> EisensteinRational:
        return self * other.inverse()

    def conjugate(self) -> EisensteinRational:
        return EisensteinRational(self.a - self.b, -self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


class OmegaPair:
    """Shared arithmetic for values ``re + om*w``; subclasses fix what may appear in the components."""

    __slots__ = ("re", "om", "_hash")
    _rank = 0

    def __init__(self, re: FracElement, om: FracElement | None = None) -> None:
        self.re = re
        self.om = FIELD.zero if om is None else om
        self._hash = None

    @classmethod
    def _coerce(cls, other) -> OmegaPair | None:
        if isinstance(other, OmegaPair):
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, int):
            return cls(FIELD(other))
        if isinstance(other, Fraction):
            return cls(rational(other.numerator, other.denominator))
        if isinstance(other, EisensteinRational):
            return cls(
                rational(other.a.numerator, other.a.denominator),
                rational(other.b.numerator, other.b.denominator),
            )
        return None

    def _result_type(self, other: OmegaPair) -> type:
        return type(self) if self._rank >= other._rank else type(other)

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._result_type(rhs)(self.re + rhs.re, self.om + rhs.om)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._result_type(rhs)(self.re - rhs.re, self.om - rhs.om)

    def __rsub__(self, other):
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __neg__(self):
        return type(self)(-self.re, -self.om)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        re, om = _pair_mul(self.re, self.om, rhs.re, rhs.om)
        return self._result_type(rhs)(re, om)

    __rmul__ = __mul__

    def inverse(self):
        re, om = _pair_inverse(self.re, self.om)
        return type(self)(re, om)

    def __truediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other):
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = type(self)(FIELD.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conjugate(self):
        return type(self)(self.re - self.om, -self.om)

    def is_zero(self) -> bool:
        return not self.re and not self.om

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.re == rhs.re and self.om == rhs.om

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.re, self.om))
        return self._hash

    def render(self, var: str = "y") -> str:
        if not self.om:
            return render_component(self.re, var)
        if not self.re:
            return f"({render_component(self.om, var)})*w"
        return f"({render_component(self.re, var)}) + ({render_component(self.om, var)})*w"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.render()})"


def _is_y_free(value: FracElement) -> bool:
    return value.numer.degree(1) <= 0 and value.denom.degree(1) <= 0


class ScalarK(OmegaPair):
    __slots__ = ()
    _rank = 0

    def __init__(self, re: FracElement, om: FracElement | None = None) -> None:
        super().__init__(re, om)
        if not (_is_y_free(self.re) and _is_y_free(self.om)):
            raise AlgebraError("scalar depends on y")

    @classmethod
    def zero(cls) -> ScalarK:
        return cls(FIELD.zero)

    @classmethod
    def one(cls) -> ScalarK:
        return cls(FIELD.one)

    @classmethod
    def from_int(cls, n: int) -> ScalarK:
        return cls(FIELD(n))

    @classmethod
    def from_fraction(cls, value: Fraction) -> ScalarK:
        return cls(rational(value.numerator, value.denominator))

    @classmethod
    def from_eisenstein(cls, value: EisensteinRational) -> ScalarK:
        return cls._coerce(value)

    @classmethod
    def omega(cls) -> ScalarK:
        return cls(FIELD.zero, FIELD.one)

    @classmethod
    def t(cls, k: int = 1) -> ScalarK:
        return cls(t_power(k))

    @classmethod
    def q(cls, k: int = 1) -> ScalarK:
        return cls(t_power(Q_EXPONENT * k))

    @classmethod
    def qhat(cls, k: int = 1) -> ScalarK:
        return cls(t_power(QHAT_EXPONENT * k))

    @classmethod
    def cbrt_q(cls, k: int = 1) -> ScalarK:
        return cls(t_power(2 * k))

    @classmethod
    def p(cls, k: int = 1) -> ScalarK:
        return cls(t_power(-2 * k))

    def as_t_power(self) -> int | None:
        if self.om or not self.re:
            return None
        numer, denom = self.re.numer, self.re.denom
        if len(numer) != 1 or len(denom) != 1:
            return None
        (n_monom, n_coeff), = numer.items()
        (d_monom, d_coeff), = denom.items()
        if n_coeff != d_coeff:
            return None
        return n_monom[0] - d_monom[0]

    def as_qhat_power(self) -> int | None:
        k = self.as_t_power()
        if k is None or k % QHAT_EXPONENT:
            return None
        return k // QHAT_EXPONENT


def scalar_arithmetic(lhs: ScalarK, rhs: ScalarK, op: str) -> ScalarK:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        if rhs.is_zero():
            raise DivisionByZeroError("scalar division by zero")
        return lhs / rhs
    raise ValueError(f"unknown scalar operation '{op}'")


def scalar_equal(lhs: ScalarK, rhs: ScalarK) -> bool:
    return lhs == rhs
