from __future__ import annotations

import pytest

from src.catalog.elements import element_definitions, value
from src.catalog.morphisms import phi
from src.errors import ParseError
from src.parsing.expr_parser import (
    INTEGER,
    OPERATOR,
    SYMBOL,
    Add,
    Const,
    Mul,
    Neg,
    Pow,
    Var,
    evaluate_text,
    parse_expression,
    render,
    render_value,
    tokenize,
)
from src.rings.scalar_field import ScalarK
from src.rings.skew_laurent import TAG_FG, SkewLaurentPoly
from src.rings.skew_series import SkewSeries

X = SkewLaurentPoly.x()
Y = SkewLaurentPoly.y()


def _resolve(name: str, precision: int):
    return value(name, precision)


def test_negative_exponent_is_one_token() -> None:
    tokens = tokenize("x^-2")
    assert [(t.kind, t.text) for t in tokens] == [(SYMBOL, "x"), (OPERATOR, "^"), (INTEGER, "-2")]
    assert tokens[2].position == 2


def test_unexpected_character() -> None:
    with pytest.raises(ParseError) as excinfo:
        tokenize("x $ y")
    assert excinfo.value.position == 2


def test_unary_minus_binds_tighter_than_product() -> None:
    assert parse_expression("-x^2") == Neg(Pow(Var("x"), 2))
    assert parse_expression("-x*y") == Mul(Neg(Var("x")), Var("y"))


def test_scalars_are_constants() -> None:
    assert parse_expression("qh + 1/2") == Add(Const("qh"), Const("1/2"))


@pytest.mark.parametrize(
    ("source", "position", "fragment"),
    [
        ("", 0, "empty"),
        ("(x + y", 6, "unbalanced"),
        ("x +", 3, "end of input"),
        ("x y", 2, "unexpected token"),
        ("x^y", 2, "integer literal"),
        ("*x", 0, "unexpected token"),
    ],
)
def test_parse_errors_carry_positions(source: str, position: int, fragment: str) -> None:
    with pytest.raises(ParseError) as excinfo:
        parse_expression(source)
    assert excinfo.value.position == position
    assert fragment in str(excinfo.value)


EXTRA_SOURCES = [
    "x*y - q*y*x",
    "-(x + y)^-1",
    "(y^-1 - q^-1*y)*x^-1",
    "theta1*(x - 1/3)^2",
    "x - (y - x)",
    "x*(y*x)",
    "(1/2)^3 + qh^-5",
    "x",
    "y^-1",
    "f*g - q*g*f",
    "w^2 + w + 1",
    "t^3 - qh",
    "p^-1*qh^-1",
    "(1 + x)^-1",
    "(1 - x)^-1*(1 - x)",
    "-(x - y)",
    "x - y - (x + y)",
    "(x*y)^2",
    "x*y^2",
    "2*x + 3/4",
    "-1/2",
    "(w - w^2)^-1*qh^-2",
    "theta1*theta2 - qh^2*theta2*theta1",
    "a3^-1*b3 - g3",
    "(x + y)*(x - y)*(x^-1 + y^-1)",
    "u*v - q*v*u",
]

ROUND_TRIP_CORPUS = list(dict.fromkeys([definition for _, definition in element_definitions().values()] + EXTRA_SOURCES))


def test_round_trip_corpus_covers_the_registry() -> None:
    assert len(ROUND_TRIP_CORPUS) >= 50


@pytest.mark.parametrize("source", ROUND_TRIP_CORPUS)
def test_render_parses_back(source: str) -> None:
    tree = parse_expression(source)
    assert parse_expression(render(tree)) == tree


def test_q_commutation() -> None:
    assert evaluate_text("x*y - q*y*x").is_zero()


def test_phi_image_of_x() -> None:
    assert evaluate_text("(y^-1 - q^-1*y)*x^-1") == phi().image_x


def test_fractions_add_up() -> None:
    assert evaluate_text("1/2 + 1/2") == SkewLaurentPoly.one()


def test_scalar_names() -> None:
    assert evaluate_text("qh^2") == SkewLaurentPoly.constant(ScalarK.q())
    assert evaluate_text("w^2 + w + 1").is_zero()


def test_render_value_matches_the_element_rendering() -> None:
    exact = evaluate_text("x*y + 1")
    assert render_value(exact) == exact.render()
    series = evaluate_text("(1 - x)^-1", precision=4)
    assert render_value(series) == series.render()


def test_non_unit_inverse_gives_a_series() -> None:
    result = evaluate_text("(1 + x)^-1", precision=5)
    assert isinstance(result, SkewSeries)
    assert result.precision == 5
    assert render_value(result).startswith("(1)")


def test_named_elements_through_the_resolver() -> None:
    result = evaluate_text("theta1 - x - y", resolver=_resolve)
    assert result == ScalarK.qhat() * Y**-1 * X**-1


def test_bindings_take_precedence() -> None:
    assert evaluate_text("theta1 + 1", bindings={"theta1": X}, resolver=_resolve) == X + 1


def test_fg_context_variables() -> None:
    result = evaluate_text("f*g - q*g*f", context="fg")
    assert result.tag == TAG_FG
    assert result.is_zero()


def test_variable_outside_the_context() -> None:
    with pytest.raises(ParseError) as excinfo:
        evaluate_text("x + f")
    assert excinfo.value.position == 4


def test_unknown_name_without_resolver() -> None:
    with pytest.raises(ParseError) as excinfo:
        evaluate_text("1 + theta1")
    assert excinfo.value.position == 4


def test_unknown_context() -> None:
    with pytest.raises(ParseError):
        evaluate_text("x", context="uv")


def test_algebra_errors_point_at_the_operator() -> None:
    with pytest.raises(ParseError) as excinfo:
        evaluate_text("0^-1")
    assert excinfo.value.position == 1
