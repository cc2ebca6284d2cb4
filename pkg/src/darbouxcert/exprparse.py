"""Recursive-descent evaluator for polynomial expressions.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('+' | '-') unary | power
    power   := primary ('^' INTEGER)?
    primary := INTEGER | IDENT | '(' expr ')'

Multiplication is always explicit. The evaluator works directly on values
(rationals, cyclotomic numbers, polynomials); no syntax tree is built.
"""

import re
from fractions import Fraction

MAX_EXPONENT_LITERAL = 2**16 - 1

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


class ParseError(ValueError):
    """Malformed expression. ``position`` is the 0-based offset into the text."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownIdentifierError(ParseError):
    def __init__(self, name, position):
        super().__init__(f"unknown identifier {name!r}", position)
        self.name = name


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        start = m.start()
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Evaluator:
    def __init__(self, text, names):
        self.tokens = _tokenize(text)
        self.names = names
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}", tok[2])
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except ZeroDivisionError:
                    raise ParseError("division by zero", pos) from None
                except TypeError:
                    raise ParseError("divisor must be a nonzero constant", pos) from None
        return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.primary()
        if self.peek() == "^":
            self.take()
            kind, exp, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", pos)
            if exp > MAX_EXPONENT_LITERAL:
                raise ParseError(f"exponent exceeds {MAX_EXPONENT_LITERAL}", pos)
            return base**exp
        return base

    def primary(self):
        kind, value, pos = self.take()
        if kind == "int":
            return Fraction(value)
        if kind == "ident":
            if value not in self.names:
                raise UnknownIdentifierError(value, pos)
            return self.names[value]
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {value!r}", pos)


def evaluate(text, names):
    """Evaluate ``text`` with identifiers bound by the mapping ``names``.

    Integer literals evaluate to :class:`fractions.Fraction`; everything else
    is whatever arithmetic the bound values implement.
    """
    ev = _Evaluator(text, names)
    value = ev.expr()
    kind, _, pos = ev.take()
    if kind != "end":
        raise ParseError("trailing input", pos)
    return value
