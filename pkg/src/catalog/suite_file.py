"""User-defined identity suites, one identity per line:

    name, context, lhs, rhs, mode

context is xy or fg, mode is exact (both sides must evaluate to polynomials) or series
(compared to the requested precision). Blank lines and text after '#' are ignored.
"""

from __future__ import annotations

from pathlib import Path

from ..errors import ParseError
from ..parsing.expr_parser import CONTEXT_TAGS, Ast, evaluate, parse_expression
from ..rings.skew_laurent import SkewLaurentPoly
from ..rings.skew_series import Element
from .elements import value
from .identities import Check, Claim, Equation, Identity

EXACT_MODE = "exact"
SERIES_MODE = "series"
MODES = (EXACT_MODE, SERIES_MODE)


def _resolve(name: str, precision: int) -> Element:
    return value(name, precision)


def _checker(context: str, lhs: Ast, rhs: Ast, mode: str):
    def check(precision: int) -> list[Check]:
        left = evaluate(lhs, context, precision, _resolve)
        right = evaluate(rhs, context, precision, _resolve)
        if mode == EXACT_MODE:
            for side, result in (("lhs", left), ("rhs", right)):
                if not isinstance(result, SkewLaurentPoly):
                    return [Claim(f"{side} is exact", False, f"{side} needs a series inverse")]
        return [Equation("lhs = rhs", left, right)]

    return check


def parse_line(line: str, number: int, suite: str) -> Identity | None:
    text = line.split("#", 1)[0]
    if not text.strip():
        return None
    fields = [part.strip() for part in text.split(",")]
    if len(fields) != 5:
        raise ParseError(f"line {number}: expected 5 comma-separated fields, got {len(fields)}", 0)
    name, context, lhs_text, rhs_text, mode = fields
    if not name:
        raise ParseError(f"line {number}: empty identity name", 0)
    if context not in CONTEXT_TAGS:
        raise ParseError(f"line {number}: unknown context '{context}'", text.index(context))
    if mode not in MODES:
        raise ParseError(f"line {number}: mode must be one of {', '.join(MODES)}, got '{mode}'", text.rindex(mode))
    try:
        lhs, rhs = parse_expression(lhs_text), parse_expression(rhs_text)
    except ParseError as exc:
        raise ParseError(f"line {number}: {exc.message}", exc.position) from exc
    return Identity(name, suite, _checker(context, lhs, rhs, mode))


def parse_suite(text: str, suite: str = "file") -> list[Identity]:
    identities: list[Identity] = []
    seen: set[str] = set()
    for number, line in enumerate(text.splitlines(), start=1):
        identity = parse_line(line, number, suite)
        if identity is None:
            continue
        if identity.name in seen:
            raise ParseError(f"line {number}: duplicate identity name '{identity.name}'", 0)
        seen.add(identity.name)
        identities.append(identity)
    return identities


def load_suite_file(path: Path) -> list[Identity]:
    return parse_suite(path.read_text(encoding="utf-8"), path.stem)
