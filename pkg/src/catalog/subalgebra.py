"""Bounded membership in the subalgebra generated by exact elements.

Words in the generators are enumerated by length; for each length bound the target is matched
against a K-linear combination of all words so far, one exact linear system per bound. The
unknowns c = c_re + c_om*w are split over Q(t), so every K-coefficient equation contributes a
real row and a w row.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from sympy.polys.matrices import DomainMatrix

from ..errors import AlgebraError
from ..rings.scalar_field import FIELD, ScalarK
from ..rings.skew_laurent import SkewLaurentPoly

DOMAIN = FIELD.to_domain()


@dataclass(frozen=True)
class Combination:
    terms: tuple[tuple[tuple[str, ...], ScalarK], ...]
    word_length: int

    def __bool__(self) -> bool:
        return True

    def render(self) -> str:
        pieces = []
        for word, coeff in self.terms:
            pieces.append(f"({coeff.render()})*{'*'.join(word) if word else '1'}")
        return " + ".join(pieces) if pieces else "0"


@dataclass(frozen=True)
class NotFound:
    word_length: int

    def __bool__(self) -> bool:
        return False

    def render(self) -> str:
        return f"not_found (words up to length {self.word_length})"


def _monomials(p: SkewLaurentPoly) -> dict[tuple[int, int], ScalarK]:
    """(y-exponent, x-exponent) -> K-coefficient."""
    out: dict[tuple[int, int], ScalarK] = {}
    for i, coeff in p.terms:
        if not coeff.is_laurent():
            raise AlgebraError(f"coefficient {coeff.render()} of x^{i} is not a Laurent polynomial in y")
        for a, c in coeff.laurent_terms().items():
            out[(a, i)] = c
    return out


def _extend(level, generators: Sequence[SkewLaurentPoly], names: Sequence[str]):
    """Words one letter longer, each product multiplied on the right."""
    return [(word + (names[k],), product * g) for word, product in level for k, g in enumerate(generators)]


def _solve(words, target: SkewLaurentPoly) -> list[ScalarK] | None:
    expansions = [_monomials(product) for _, product in words]
    goal = _monomials(target)
    keys = sorted(set(goal).union(*expansions))
    width = 2 * len(words)
    rows = []
    for key in keys:
        real_row, omega_row = [], []
        for expansion in expansions:
            value = expansion.get(key)
            a = value.re if value is not None else FIELD.zero
            b = value.om if value is not None else FIELD.zero
            real_row += [a, -b]
            omega_row += [b, a - b]
        rhs = goal.get(key, ScalarK.zero())
        rows.append(real_row + [rhs.re])
        rows.append(omega_row + [rhs.om])
    if not rows:
        return [ScalarK.zero()] * len(words)
    reduced, pivots = DomainMatrix(rows, (len(rows), width + 1), DOMAIN).rref()
    if width in pivots:
        return None
    table = reduced.to_list()
    solution = [FIELD.zero] * width
    for row, column in enumerate(pivots):
        solution[column] = table[row][width]
    return [ScalarK(solution[2 * k], solution[2 * k + 1]) for k in range(len(words))]


def subalgebra_express(
    target: SkewLaurentPoly,
    generators: Sequence[SkewLaurentPoly],
    max_word_length: int,
    names: Sequence[str] | None = None,
    logger: logging.Logger | None = None,
) -> Combination | NotFound:
    names = list(names) if names is not None else [f"e{k + 1}" for k in range(len(generators))]
    if len(names) != len(generators):
        raise ValueError("one name per generator is required")
    _monomials(target)
    level = [((), SkewLaurentPoly.one(target.tag))]
    words = []
    for length in range(max_word_length + 1):
        if length:
            level = _extend(level, generators, names)
        words.extend(level)
        if logger is not None:
            logger.info("subalgebra search: %d words up to length %d", len(words), length)
        solution = _solve(words, target)
        if solution is None:
            continue
        terms = tuple((word, c) for (word, _), c in zip(words, solution) if c)
        expansion = SkewLaurentPoly.zero(target.tag)
        for (word, product), c in zip(words, solution):
            if c:
                expansion = expansion + c * product
        if expansion != target:
            raise AlgebraError("subalgebra solution does not re-expand to the target")
        return Combination(terms, length)
    return NotFound(max_word_length)
