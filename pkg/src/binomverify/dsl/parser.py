"""Recursive-descent parser for the identity language.

    identity  := expr "==" expr
    expr      := term (("+" | "-") term)*
    term      := factor ("*" factor)*
    factor    := "-"? atom ("^" atom)?
    atom      := INT | IDENT | "C" "(" expr "," expr ")" | "(" expr ")" | sum
    sum       := "sum" "(" binder ")" term
    binder    := IDENT "=" expr ".." expr | IDENT "+" IDENT "=" expr

A summation body extends over a whole product, so ``sum(i=0..n) a * b`` sums
``a * b``. Wrap the sum in parentheses to multiply it by something.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from binomverify.dsl.ast import (
    Add,
    Binomial,
    Expr,
    Identity,
    IntegerLiteral,
    Multiply,
    Negate,
    Power,
    Subtract,
    SumPair,
    SumRange,
    Variable,
)
from binomverify.dsl.errors import DslSyntaxError

KEYWORDS = frozenset({"sum", "C"})

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>==|\.\.|[-+*^(),=])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "end"
    text: str
    column: int


def tokenize(text: str, line: int = 1) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise DslSyntaxError(f"unexpected character {text[pos]!r}", line, pos + 1)
        if match.lastgroup != "ws":
            tokens.append(Token(match.lastgroup, match.group(), pos + 1))
        pos = match.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, line: int):
        self.tokens = tokenize(text, line)
        self.line = line
        self.pos = 0
        self.binders: list[str] = []

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def error(self, message: str, token: Token | None = None) -> DslSyntaxError:
        token = token or self.current
        return DslSyntaxError(message, self.line, token.column)

    def at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def advance(self) -> Token:
        token = self.current
        self.pos += 1
        return token

    def expect_op(self, op: str) -> Token:
        if not self.at_op(op):
            found = self.current.text or "end of input"
            raise self.error(f"expected {op!r}, found {found!r}")
        return self.advance()

    def expect_ident(self) -> str:
        token = self.current
        if token.kind != "name" or token.text in KEYWORDS:
            found = token.text or "end of input"
            raise self.error(f"expected an identifier, found {found!r}")
        self.advance()
        return token.text

    # grammar rules

    def identity(self) -> Identity:
        lhs = self.expr()
        if not self.at_op("=="):
            if self.current.kind == "end":
                raise self.error("missing '=='")
            raise self.error(f"unexpected {self.current.text!r}")
        self.advance()
        rhs = self.expr()
        self.expect_end()
        return Identity(lhs, rhs)

    def expect_end(self) -> None:
        if self.current.kind != "end":
            raise self.error(f"unexpected {self.current.text!r}")

    def expr(self) -> Expr:
        node = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            right = self.term()
            node = Add(node, right) if op == "+" else Subtract(node, right)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.at_op("*"):
            self.advance()
            node = Multiply(node, self.factor())
        return node

    def factor(self) -> Expr:
        negate = False
        if self.at_op("-"):
            self.advance()
            negate = True
        node = self.atom()
        if self.at_op("^"):
            self.advance()
            node = Power(node, self.atom())
        return Negate(node) if negate else node

    def atom(self) -> Expr:
        token = self.current
        if token.kind == "int":
            self.advance()
            return IntegerLiteral(int(token.text))
        if token.kind == "name":
            if token.text == "C":
                self.advance()
                self.expect_op("(")
                upper = self.expr()
                self.expect_op(",")
                lower = self.expr()
                self.expect_op(")")
                return Binomial(upper, lower)
            if token.text == "sum":
                return self.sum()
            self.advance()
            return Variable(token.text)
        if self.at_op("("):
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        found = token.text or "end of input"
        raise self.error(f"unexpected {found!r}")

    def bind(self, name: str, token: Token) -> None:
        if name in self.binders:
            raise self.error(f"duplicate binder variable {name!r}", token)
        self.binders.append(name)

    def sum(self) -> Expr:
        self.advance()
        self.expect_op("(")
        first_token = self.current
        first = self.expect_ident()
        if self.at_op("+"):
            self.advance()
            second_token = self.current
            second = self.expect_ident()
            self.expect_op("=")
            total = self.expr()
            self.expect_op(")")
            self.bind(first, first_token)
            if second == first:
                raise self.error(f"duplicate binder variable {second!r}", second_token)
            self.bind(second, second_token)
            body = self.term()
            del self.binders[-2:]
            return SumPair(first, second, total, body)
        self.expect_op("=")
        lower = self.expr()
        self.expect_op("..")
        upper = self.expr()
        self.expect_op(")")
        self.bind(first, first_token)
        body = self.term()
        self.binders.pop()
        return SumRange(first, lower, upper, body)


def parse_identity(text: str, line: int = 1) -> Identity:
    """Parse ``lhs == rhs``. ``line`` only affects error positions."""
    identity = _Parser(text, line).identity()
    return Identity(identity.lhs, identity.rhs, source=text.strip())


def parse_expression(text: str, line: int = 1) -> Expr:
    parser = _Parser(text, line)
    node = parser.expr()
    parser.expect_end()
    return node


def parse_identity_file(text: str) -> list[Identity]:
    """One identity per line; blank lines and ``#`` comments are skipped."""
    identities = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if content.strip():
            identities.append(parse_identity(content, line=lineno))
    return identities
