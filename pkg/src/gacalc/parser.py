"""Recursive-descent parser for statements of the calculator language.

Binding strength, loosest to tightest: ``+ -``, then ``* /`` (geometric
product and division, including number-basis juxtaposition like 3e12),
then ``|`` (inner), then ``^`` (outer, right-associative), then the
prefix operators ``-`` and ``~``.  Every node carries the source span it
was parsed from.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .lexer import Token, tokenize

Span = tuple[int, int]


@dataclass(frozen=True)
class Num:
    value: object  # Fraction or float
    span: Span


@dataclass(frozen=True)
class Basis:
    sign: int
    indices: tuple[int, ...]  # strictly increasing
    span: Span


@dataclass(frozen=True)
class Name:
    ident: str
    span: Span


@dataclass(frozen=True)
class Unary:
    op: str
    operand: object
    span: Span


@dataclass(frozen=True)
class Binary:
    op: str
    left: object
    right: object
    span: Span


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    span: Span


@dataclass(frozen=True)
class Let:
    name: str
    value: object
    span: Span


@dataclass(frozen=True)
class Directive:
    name: str
    args: tuple[str, ...]
    span: Span


def parse_statement(source: str):
    """Parse one statement: directive, let-binding, or expression.

    Returns None for blank/comment-only input.
    """
    stripped = source.strip()
    if stripped.startswith(":"):
        words = stripped[1:].split()
        if not words:
            raise ParseError("empty directive", (0, len(source)), source,
                             expected=frozenset({"directive name"}))
        return Directive(words[0], tuple(words[1:]), (0, len(source)))
    tokens = tokenize(source)
    if tokens[0].kind == "end":
        return None
    parser = _Parser(tokens, source)
    if tokens[0].kind == "ident" and tokens[0].value == "let":
        return parser.parse_let()
    node = parser.parse_expression()
    parser.expect_end()
    return node


def parse_expression(source: str):
    """Parse a single expression; rejects directives and let-bindings."""
    tokens = tokenize(source)
    parser = _Parser(tokens, source)
    if tokens[0].kind == "end":
        raise ParseError("expected an expression", (0, len(source)), source,
                         expected=frozenset({"expression"}))
    node = parser.parse_expression()
    parser.expect_end()
    return node


class _Parser:
    def __init__(self, tokens: list[Token], source: str):
        self.tokens = tokens
        self.source = source
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def at_op(self, *ops: str) -> bool:
        token = self.peek()
        return token.kind == "op" and token.text in ops

    def fail(self, message: str, expected: set[str], token: Token | None = None):
        token = token or self.peek()
        raise ParseError(message, token.span, self.source,
                         expected=frozenset(expected))

    def expect_op(self, op: str):
        if not self.at_op(op):
            self.fail(f"expected {op!r}", {op})
        return self.advance()

    def expect_end(self):
        if self.peek().kind != "end":
            self.fail(f"unexpected {self.peek().text!r}",
                      {"end of statement", "operator"})

    def parse_let(self) -> Let:
        start = self.advance()  # 'let'
        name = self.peek()
        if name.kind != "ident":
            self.fail("expected a name to bind", {"identifier"})
        self.advance()
        self.expect_op("=")
        value = self.parse_expression()
        self.expect_end()
        return Let(name.value, value, (start.span[0], value.span[1]))

    # precedence ladder -------------------------------------------------

    def parse_expression(self):
        return self.parse_sum()

    def parse_sum(self):
        node = self.parse_product()
        while self.at_op("+", "-"):
            op = self.advance().text
            right = self.parse_product()
            node = Binary(op, node, right, (node.span[0], right.span[1]))
        return node

    def parse_product(self):
        node = self.parse_inner()
        while self.at_op("*", "/"):
            op = self.advance().text
            right = self.parse_inner()
            node = Binary(op, node, right, (node.span[0], right.span[1]))
        return node

    def parse_inner(self):
        node = self.parse_outer()
        while self.at_op("|"):
            self.advance()
            right = self.parse_outer()
            node = Binary("|", node, right, (node.span[0], right.span[1]))
        return node

    def parse_outer(self):
        node = self.parse_unary()
        if self.at_op("^"):
            self.advance()
            right = self.parse_outer()  # right-associative
            node = Binary("^", node, right, (node.span[0], right.span[1]))
        return node

    def parse_unary(self):
        if self.at_op("-", "~"):
            op = self.advance()
            operand = self.parse_unary()
            return Unary(op.text, operand, (op.span[0], operand.span[1]))
        return self.parse_atom()

    def parse_atom(self):
        token = self.peek()
        if token.kind == "num":
            self.advance()
            node = Num(token.value, token.span)
            nxt = self.peek()
            if nxt.kind == "basis":  # juxtaposition: 3e12 means 3 * e12
                blade = self.parse_atom()
                return Binary("*", node, blade, (token.span[0], blade.span[1]))
            return node
        if token.kind == "basis":
            self.advance()
            return _canonical_basis(token, self.source)
        if token.kind == "ident":
            self.advance()
            if self.at_op("("):
                return self.parse_call(token)
            return Name(token.value, token.span)
        if self.at_op("("):
            self.advance()
            node = self.parse_expression()
            self.expect_op(")")
            return node
        self.fail(f"unexpected {token.text or 'end of statement'!r}",
                  {"number", "basis symbol", "identifier", "'('"})

    def parse_call(self, name: Token) -> Call:
        self.expect_op("(")
        args = []
        if not self.at_op(")"):
            args.append(self.parse_expression())
            while self.at_op(","):
                self.advance()
                args.append(self.parse_expression())
        closing = self.expect_op(")")
        return Call(name.value, tuple(args), (name.span[0], closing.span[1]))


def _canonical_basis(token: Token, source: str) -> Basis:
    """Sort indices into canonical order, folding the swap parity into
    the sign; repeated indices are rejected (their square depends on the
    signature, which the parser does not know)."""
    raw = list(token.value)
    if len(set(raw)) != len(raw):
        raise ParseError("repeated generator index in basis symbol",
                         token.span, source,
                         expected=frozenset({"distinct indices"}))
    sign = 1
    indices = list(raw)
    for i in range(1, len(indices)):
        j = i
        while j > 0 and indices[j - 1] > indices[j]:
            indices[j - 1], indices[j] = indices[j], indices[j - 1]
            sign = -sign
            j -= 1
    return Basis(sign, tuple(indices), token.span)
