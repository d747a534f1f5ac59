"""Expression language for ring elements.

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" signed-integer)?
    atom   := integer | rational | symbol | "(" expr ")"

Multiplication is explicit and left-associative; '^' binds tighter than unary minus.
Symbols x, y (context xy) and f, g (context fg) are the generators; q, qh, w, t and p are
scalars; every other identifier names a registered element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Union

from ..errors import AlgebraError, ParseError
from ..rings.rational_y import RationalY
from ..rings.scalar_field import ScalarK
from ..rings.skew_laurent import TAG_FG, TAG_XY, SkewLaurentPoly
from ..rings.skew_series import Element, refine, to_series

SYMBOL = "symbol"
INTEGER = "integer"
RATIONAL = "rational"
OPERATOR = "operator"
LPAREN = "lparen"
RPAREN = "rparen"

CONTEXT_VARIABLES = {"xy": ("x", "y"), "fg": ("f", "g")}
CONTEXT_TAGS = {"xy": TAG_XY, "fg": TAG_FG}
VARIABLES = frozenset({"x", "y", "f", "g"})

SCALARS: dict[str, Callable[[], ScalarK]] = {
    "q": ScalarK.q,
    "qh": ScalarK.qhat,
    "w": ScalarK.omega,
    "t": ScalarK.t,
    "p": ScalarK.p,
}

_TOKEN_RE = re.compile(
    r"(?P<rational>\d+/\d+)|(?P<integer>\d+)|(?P<symbol>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<operator>[-+*^])|(?P<lparen>\()|(?P<rparen>\))"
)
_SIGNED_EXPONENT_RE = re.compile(r"\s*(-?\d+)")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(source):
        if source[pos].isspace():
            pos += 1
            continue
        if tokens and tokens[-1].text == "^" and tokens[-1].kind == OPERATOR:
            exponent = _SIGNED_EXPONENT_RE.match(source, pos)
            if exponent is not None:
                tokens.append(Token(INTEGER, exponent.group(1), exponent.start(1)))
                pos = exponent.end()
                continue
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            raise ParseError(f"unexpected character {source[pos]!r}", pos)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    return tokens


# Ast


@dataclass(frozen=True)
class Const:
    text: str
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Named:
    name: str
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Ast"
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Add:
    left: "Ast"
    right: "Ast"
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sub:
    left: "Ast"
    right: "Ast"
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Mul:
    left: "Ast"
    right: "Ast"
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Ast"
    exponent: int
    position: int = field(default=0, compare=False)


Ast = Union[Const, Var, Named, Neg, Add, Sub, Mul, Pow]


class _Parser:
    def __init__(self, tokens: list[Token], source_length: int) -> None:
        self.tokens = tokens
        self.index = 0
        self.end = source_length

    def peek(self) -> Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def position(self) -> int:
        token = self.peek()
        return token.position if token is not None else self.end

    def take(self) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input", self.end)
        self.index += 1
        return token

    def at_operator(self, *texts: str) -> bool:
        token = self.peek()
        return token is not None and token.kind == OPERATOR and token.text in texts

    def expr(self) -> Ast:
        node = self.term()
        while self.at_operator("+", "-"):
            op = self.take()
            right = self.term()
            node = Add(node, right, op.position) if op.text == "+" else Sub(node, right, op.position)
        return node

    def term(self) -> Ast:
        node = self.unary()
        while self.at_operator("*"):
            op = self.take()
            node = Mul(node, self.unary(), op.position)
        return node

    def unary(self) -> Ast:
        if self.at_operator("-"):
            op = self.take()
            return Neg(self.unary(), op.position)
        return self.power()

    def power(self) -> Ast:
        base = self.atom()
        if self.at_operator("^"):
            op = self.take()
            token = self.take()
            if token.kind != INTEGER:
                raise ParseError(f"exponent must be an integer literal, got {token.text!r}", token.position)
            return Pow(base, int(token.text), op.position)
        return base

    def atom(self) -> Ast:
        token = self.take()
        if token.kind in (INTEGER, RATIONAL):
            return Const(token.text, token.position)
        if token.kind == SYMBOL:
            if token.text in VARIABLES:
                return Var(token.text, token.position)
            if token.text in SCALARS:
                return Const(token.text, token.position)
            return Named(token.text, token.position)
        if token.kind == LPAREN:
            node = self.expr()
            closing = self.peek()
            if closing is None or closing.kind != RPAREN:
                raise ParseError("unbalanced parenthesis: expected ')'", self.position())
            self.take()
            return node
        raise ParseError(f"unexpected token {token.text!r}", token.position)


def parse(tokens: list[Token], source_length: int | None = None) -> Ast:
    if source_length is None:
        source_length = tokens[-1].position + len(tokens[-1].text) if tokens else 0
    parser = _Parser(tokens, source_length)
    if parser.peek() is None:
        raise ParseError("empty expression", 0)
    node = parser.expr()
    extra = parser.peek()
    if extra is not None:
        raise ParseError(f"unexpected token {extra.text!r}", extra.position)
    return node


def parse_expression(source: str) -> Ast:
    return parse(tokenize(source), len(source))


def _is_sum(node: Ast) -> bool:
    return isinstance(node, (Add, Sub))


def render(node: Ast) -> str:
    """Text that parses back to an equal Ast."""
    if isinstance(node, Const):
        return node.text
    if isinstance(node, (Var, Named)):
        return node.name
    if isinstance(node, Neg):
        inner = render(node.operand)
        return f"-({inner})" if _is_sum(node.operand) else f"-{inner}"
    if isinstance(node, Add):
        right = render(node.right)
        return f"{render(node.left)} + {f'({right})' if _is_sum(node.right) else right}"
    if isinstance(node, Sub):
        right = render(node.right)
        return f"{render(node.left)} - {f'({right})' if _is_sum(node.right) else right}"
    if isinstance(node, Mul):
        left, right = render(node.left), render(node.right)
        if _is_sum(node.left):
            left = f"({left})"
        if _is_sum(node.right) or isinstance(node.right, Mul):
            right = f"({right})"
        return f"{left}*{right}"
    if isinstance(node, Pow):
        base = render(node.base)
        if not isinstance(node.base, (Var, Named)) and not (isinstance(node.base, Const) and "/" not in node.base.text):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    raise TypeError(f"not an expression node: {node!r}")


# evaluation

Resolver = Callable[[str, int], Element]


def _constant(text: str) -> ScalarK:
    if text in SCALARS:
        return SCALARS[text]()
    return ScalarK.from_fraction(Fraction(text))


class _Evaluator:
    def __init__(self, context: str, working: int, resolver: Resolver | None, bindings: Mapping[str, Element]) -> None:
        if context not in CONTEXT_TAGS:
            raise ParseError(f"unknown context '{context}'", 0)
        self.context = context
        self.tag = CONTEXT_TAGS[context]
        self.working = working
        self.resolver = resolver
        self.bindings = bindings

    def run(self, node: Ast) -> Element:
        try:
            return self.visit(node)
        except ParseError:
            raise
        except AlgebraError as exc:
            raise ParseError(str(exc), node.position) from exc

    def visit(self, node: Ast) -> Element:
        if isinstance(node, Const):
            return SkewLaurentPoly.constant(_constant(node.text), self.tag)
        if isinstance(node, Var):
            x_name, y_name = CONTEXT_VARIABLES[self.context]
            if node.name == x_name:
                return SkewLaurentPoly.x(self.tag)
            if node.name == y_name:
                return SkewLaurentPoly.constant(RationalY.y(), self.tag)
            raise ParseError(f"variable '{node.name}' is not part of context {self.context}", node.position)
        if isinstance(node, Named):
            return self.named(node)
        if isinstance(node, Neg):
            return -self.run(node.operand)
        if isinstance(node, Add):
            return self.run(node.left) + self.run(node.right)
        if isinstance(node, Sub):
            return self.run(node.left) - self.run(node.right)
        if isinstance(node, Mul):
            return self.run(node.left) * self.run(node.right)
        if isinstance(node, Pow):
            return self.power(node)
        raise TypeError(f"not an expression node: {node!r}")

    def named(self, node: Named) -> Element:
        if node.name in self.bindings:
            return self.bindings[node.name]
        if self.resolver is None:
            raise ParseError(f"unknown name '{node.name}'", node.position)
        return self.resolver(node.name, self.working)

    def power(self, node: Pow) -> Element:
        base = self.run(node.base)
        n = node.exponent
        if n >= 0:
            return base**n
        if isinstance(base, SkewLaurentPoly) and base.is_unit():
            return base**n
        return to_series(base, self.working, base.tag).power(n)


def evaluate(
    node: Ast,
    context: str = "xy",
    precision: int = 12,
    resolver: Resolver | None = None,
    bindings: Mapping[str, Element] | None = None,
) -> Element:
    """Exact element when no non-unit inverse occurs, otherwise a series at ``precision``."""
    bindings = dict(bindings or {})

    def build(working: int) -> Element:
        return _Evaluator(context, working, resolver, bindings).run(node)

    return refine(build, precision)


def evaluate_text(
    source: str,
    context: str = "xy",
    precision: int = 12,
    resolver: Resolver | None = None,
    bindings: Mapping[str, Element] | None = None,
) -> Element:
    return evaluate(parse_expression(source), context, precision, resolver, bindings)


def render_value(value: Element) -> str:
    return value.render()
