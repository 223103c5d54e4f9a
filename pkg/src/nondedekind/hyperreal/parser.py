"""Recursive-descent parser for hyperreal expressions.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := '-' factor | atom ('^' ['-'] integer)?
    atom     := rational | 'e' | '(' expr ')' | 'std' '(' expr ')'
    rational := integer ('/' positive-integer)?

A literal ``p/q`` is a single atom, so ``3/2^2`` is ``(3/2)^2``. ``^``
binds tighter than unary minus. Whitespace is insignificant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from .number import EPS, Hyperreal, std

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(.))")
_FUNCTIONS = {"std": lambda h: Hyperreal.rational(std(h))}


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            toks.append(_Tok("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(_Tok("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            toks.append(_Tok("op", ch, m.start(3)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> _Tok:
        tok = self.cur
        if tok.kind != "op" or tok.text != text:
            found = tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", tok.pos)
        return self.take()

    def is_op(self, *ops: str) -> bool:
        return self.cur.kind == "op" and self.cur.text in ops

    def parse(self) -> Hyperreal:
        value = self.expr()
        if self.cur.kind != "end":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.pos)
        return value

    def expr(self) -> Hyperreal:
        value = self.term()
        while self.is_op("+", "-"):
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Hyperreal:
        value = self.factor()
        while self.is_op("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op.text == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ZeroDivisionError(f"division by zero at position {op.pos}")
                value = value / rhs
        return value

    def factor(self) -> Hyperreal:
        if self.is_op("-"):
            self.take()
            return -self.factor()
        base = self.atom()
        if self.is_op("^"):
            caret = self.take()
            negative = False
            if self.is_op("-"):
                self.take()
                negative = True
            tok = self.cur
            if tok.kind != "int":
                raise ParseError("exponent must be an integer", tok.pos)
            self.take()
            k = -int(tok.text) if negative else int(tok.text)
            if k < 0 and base.is_zero():
                raise ZeroDivisionError(f"zero raised to a negative power at position {caret.pos}")
            base = base**k
        return base

    def atom(self) -> Hyperreal:
        tok = self.cur
        if tok.kind == "int":
            self.take()
            if self.is_op("/") and self.peek().kind == "int":
                self.take()
                den_tok = self.take()
                den = int(den_tok.text)
                if den == 0:
                    raise ZeroDivisionError(f"zero denominator at position {den_tok.pos}")
                return Hyperreal.rational(Fraction(int(tok.text), den))
            return Hyperreal.rational(int(tok.text))
        if tok.kind == "name":
            self.take()
            if tok.text == "e":
                return EPS
            fn = _FUNCTIONS.get(tok.text)
            if fn is None:
                raise ParseError(f"unknown name {tok.text!r}", tok.pos)
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return fn(inner)
        if self.is_op("("):
            self.take()
            inner = self.expr()
            self.expect(")")
            return inner
        found = tok.text or "end of input"
        raise ParseError(f"unexpected {found!r}", tok.pos)


def parse_hyperreal(text: str) -> Hyperreal:
    """Parse ``text`` into its reduced normal form."""
    return _Parser(text).parse()
