"""Recursive-descent parser for the expression grammar.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' intlit)?
    atom   := number | 'x' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'

Binding strength is ``^`` > unary minus > ``* /`` > ``+ -``, so ``-x^2`` is
``-(x^2)``.  A minus directly in front of a number literal that is not
raised to a power folds into a negative constant.
"""

import re

from ..errors import ParseError
from .ast import (FUNCTIONS, MAX_EXPONENT, NAMED_CONSTANTS, Binary, Const,
                  Pow, Unary, Var)

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_]\w*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self, offset=0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_op(self, symbol, offset=0):
        kind, value, _ = self.peek(offset)
        return kind == "op" and value == symbol

    def expect_op(self, symbol):
        kind, value, pos = self.advance()
        if kind != "op" or value != symbol:
            raise ParseError(f"expected {symbol!r}, found {value or 'end of input'!r}", pos)

    def parse(self):
        node = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while self.at_op("+") or self.at_op("-"):
            op = "add" if self.advance()[1] == "+" else "sub"
            node = Binary(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.at_op("*") or self.at_op("/"):
            op = "mul" if self.advance()[1] == "*" else "div"
            node = Binary(op, node, self.unary())
        return node

    def unary(self):
        if self.at_op("-"):
            self.advance()
            if self.peek()[0] == "num" and not self.at_op("^", 1):
                return self.number(negate=True)
            return Unary("neg", self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            base = Pow(base, self.intlit())
        return base

    def intlit(self):
        sign = 1
        if self.at_op("-") or self.at_op("+"):
            sign = -1 if self.advance()[1] == "-" else 1
        kind, value, pos = self.advance()
        if kind != "num":
            raise ParseError(f"expected integer exponent, found {value or 'end of input'!r}", pos)
        if not value.isdigit():
            raise ParseError(f"non-integer exponent literal {value!r}", pos)
        n = sign * int(value)
        if abs(n) > MAX_EXPONENT:
            raise ParseError(f"exponent {n} exceeds |n| <= {MAX_EXPONENT}", pos)
        return n

    def number(self, negate=False):
        _, value, pos = self.advance()
        v = float(value)
        if v == float("inf"):
            raise ParseError(f"number {value!r} overflows binary64", pos)
        return Const(-v if negate else v)

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "num":
            return self.number()
        self.advance()
        if kind == "ident":
            if value == "x":
                return Var()
            if value in NAMED_CONSTANTS:
                return Const(NAMED_CONSTANTS[value], value)
            if value in FUNCTIONS:
                self.expect_op("(")
                arg = self.expr()
                self.expect_op(")")
                return Unary(value, arg)
            raise ParseError(f"unknown identifier {value!r}", pos)
        if kind == "op" and value == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)


def parse(text: str):
    """Parse ``text`` into an expression tree; raises :class:`ParseError`."""
    if not text or not text.strip():
        raise ParseError("empty expression", 0)
    return _Parser(text).parse()
