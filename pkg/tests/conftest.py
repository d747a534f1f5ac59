from __future__ import annotations

import random

import pytest

from src.maps.morphism import Sl2Matrix
from src.rings.rational_y import RationalY
from src.rings.scalar_field import ScalarK
from src.rings.skew_laurent import TAG_XY, SkewLaurentPoly
from src.rings.skew_series import SkewSeries

SEED = 20240611
INSTANCES = 100


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


def random_scalar(rng: random.Random, nonzero: bool = False) -> ScalarK:
    while True:
        value = (
            ScalarK.from_int(rng.randint(-3, 3))
            + ScalarK.from_int(rng.randint(-2, 2)) * ScalarK.t(rng.randint(-3, 3))
            + ScalarK.from_int(rng.randint(-1, 1)) * ScalarK.omega()
        )
        if value or not nonzero:
            return value


def random_laurent(rng: random.Random, spread: int = 2) -> RationalY:
    total = RationalY.zero()
    for k in range(-spread, spread + 1):
        if rng.random() < 0.5:
            total = total + random_scalar(rng) * RationalY.y(k)
    return total


def random_rational(rng: random.Random) -> RationalY:
    numerator = random_laurent(rng, 1)
    if rng.random() < 0.3:
        return numerator / (RationalY.one() + random_scalar(rng, nonzero=True) * RationalY.y())
    return numerator


def random_poly(rng: random.Random, low: int = -1, high: int = 1, tag: str = TAG_XY) -> SkewLaurentPoly:
    return SkewLaurentPoly.from_mapping({i: random_laurent(rng, 1) for i in range(low, high + 1)}, tag)


def random_unit_series(rng: random.Random, precision: int) -> SkewSeries:
    coeffs = [RationalY.one() + random_scalar(rng, nonzero=True) * RationalY.y()]
    coeffs += [random_laurent(rng, 1) for _ in range(1, precision)]
    return SkewSeries.build(0, precision, coeffs)


def random_sl2(rng: random.Random, steps: int = 3) -> Sl2Matrix:
    m = Sl2Matrix.identity()
    for _ in range(steps):
        k = rng.randint(-2, 2)
        factor = Sl2Matrix(1, k, 0, 1) if rng.random() < 0.5 else Sl2Matrix(1, 0, k, 1)
        m = m @ factor
    return m
