"""Parser for scalar and element expressions.

Scalars: integers, ``q``, ``q^k`` (``k`` may be negative), ``+ - *`` and
parentheses, e.g. ``-(q + q^-1)``.  Elements add words over ``{x, y}``;
``1`` on its own is the trivial word times one.  A product of two elements
is their concatenation.
"""

from __future__ import annotations

import re
from typing import List, NamedTuple, Union

from .coeff import LaurentInt, q_power
from .words import FreeElement, free_mul

__all__ = ["ParseError", "parse_laurent", "parse_element"]


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class Token(NamedTuple):
    kind: str
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(q)|([xy]+)|(\^)|([-+*()]))")


def tokenize(text: str) -> List[Token]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        num, q, word, caret, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(Token("NUM", num, start))
        elif q is not None:
            out.append(Token("Q", q, start))
        elif word is not None:
            out.append(Token("WORD", word, start))
        elif caret is not None:
            out.append(Token("^", caret, start))
        else:
            out.append(Token(op, op, start))
        pos = m.end()
    out.append(Token("END", "", n))
    return out


Value = Union[LaurentInt, FreeElement]


def _promote(v: Value) -> FreeElement:
    return FreeElement.scalar(v) if isinstance(v, LaurentInt) else v


def _add(a: Value, b: Value) -> Value:
    if isinstance(a, LaurentInt) and isinstance(b, LaurentInt):
        return a + b
    return _promote(a) + _promote(b)


def _mul(a: Value, b: Value) -> Value:
    if isinstance(a, LaurentInt):
        return a * b if isinstance(b, LaurentInt) else b.scale(a)
    if isinstance(b, LaurentInt):
        return a.scale(b)
    return free_mul(a, b)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self, kind: str) -> Token:
        tok = self.toks[self.i]
        if tok.kind != kind:
            self.fail(tok)
        self.i += 1
        return tok

    def fail(self, tok: Token):
        what = "end of input" if tok.kind == "END" else f"token {tok.value!r}"
        raise ParseError(f"unexpected {what}", self.text, tok.pos)

    def parse(self) -> Value:
        if self.peek().kind == "END":
            self.fail(self.peek())
        v = self.expr()
        if self.peek().kind != "END":
            self.fail(self.peek())
        return v

    def expr(self) -> Value:
        tok = self.peek()
        sign = 1
        if tok.kind in "+-":
            self.i += 1
            sign = -1 if tok.kind == "-" else 1
        v = self.term()
        if sign < 0:
            v = -v
        while self.peek().kind in ("+", "-"):
            op = self.take(self.peek().kind)
            t = self.term()
            v = _add(v, t if op.kind == "+" else -t)
        return v

    def term(self) -> Value:
        v = self.factor()
        while self.peek().kind == "*":
            self.i += 1
            v = _mul(v, self.factor())
        return v

    def factor(self) -> Value:
        tok = self.peek()
        if tok.kind == "NUM":
            self.i += 1
            return LaurentInt(int(tok.value))
        if tok.kind == "Q":
            self.i += 1
            if self.peek().kind == "^":
                self.i += 1
                sign = 1
                if self.peek().kind in "+-":
                    sign = -1 if self.take(self.peek().kind).kind == "-" else 1
                return q_power(sign * int(self.take("NUM").value))
            return q_power(1)
        if tok.kind == "WORD":
            self.i += 1
            return FreeElement.word(tok.value)
        if tok.kind == "(":
            self.i += 1
            v = self.expr()
            self.take(")")
            return v
        if tok.kind == "-":
            self.i += 1
            return -self.factor()
        self.fail(tok)


def parse_laurent(text: str) -> LaurentInt:
    p = _Parser(text)
    v = p.parse()
    if not isinstance(v, LaurentInt):
        bad = next(t for t in p.toks if t.kind == "WORD")
        raise ParseError(f"unexpected word {bad.value!r} in a scalar", text, bad.pos)
    return v


def parse_element(text: str) -> FreeElement:
    return _promote(_Parser(text).parse())
