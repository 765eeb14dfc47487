"""Recursive-descent parser for binary forms in x and y.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'x' | 'y' | '(' expr ')'

Division is only allowed by a nonzero constant.  Input without y is read as
f(x, 1) and homogenized.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Tuple

from .arith import DomainError
from .forms import BinaryForm

Poly = Dict[Tuple[int, int], Fraction]


class ParseError(DomainError):
    def __init__(self, message: str, text: str, offset: int):
        line = text.count("\n", 0, offset) + 1
        column = offset - (text.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"{message} at offset {offset} (line {line}, column {column})")
        self.offset = offset
        self.line = line
        self.column = column


def _add(a: Poly, b: Poly, sign: int = 1) -> Poly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def _mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for (i, j), u in a.items():
        for (k, l), v in b.items():
            key = (i + k, j + l)
            out[key] = out.get(key, 0) + u * v
    return {k: v for k, v in out.items() if v}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, at: Optional[int] = None):
        raise ParseError(msg, self.text, self.pos if at is None else at)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse(self) -> Poly:
        if not self.peek():
            self.error("empty input")
        p = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek() in ("+", "-"):
            sign = 1 if self.text[self.pos] == "+" else -1
            self.pos += 1
            p = _add(p, self.term(), sign)
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            at = self.pos
            rhs = self.unary()
            if op == "*":
                p = _mul(p, rhs)
            else:
                if set(rhs) - {(0, 0)} or not rhs.get((0, 0)):
                    self.error("division by a non-constant or zero", at)
                p = {k: v / rhs[(0, 0)] for k, v in p.items()}
        return p

    def unary(self) -> Poly:
        c = self.peek()
        if c in ("+", "-"):
            self.pos += 1
            p = self.unary()
            return p if c == "+" else {k: -v for k, v in p.items()}
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            k = self.integer()
            out: Poly = {(0, 0): Fraction(1)}
            for _ in range(k):
                out = _mul(out, base)
            return out
        return base

    def atom(self) -> Poly:
        c = self.peek()
        if c.isdigit():
            return {(0, 0): Fraction(self.integer())}
        if c == "x":
            self.pos += 1
            return {(1, 0): Fraction(1)}
        if c == "y":
            self.pos += 1
            return {(0, 1): Fraction(1)}
        if c == "(":
            self.pos += 1
            p = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return p
        self.error("expected a number, x, y or '('" if c else "unexpected end of input")


def parse_polynomial(text: str) -> Poly:
    """Parse to a map ``(power of x, power of y) -> coefficient``."""
    return _Parser(text).parse()


def parse_form(text: str, degree: Optional[int] = None) -> BinaryForm:
    poly = parse_polynomial(text)
    if not poly:
        raise DomainError("zero form")
    has_y = any(j for _, j in poly)
    if has_y:
        degs = {i + j for i, j in poly}
        if len(degs) != 1:
            raise DomainError(f"mixed-degree terms: total degrees {sorted(degs)}")
        d = degs.pop()
        if degree is not None and degree != d:
            raise DomainError(f"form has degree {d}, expected {degree}")
    else:
        top = max(i for i, _ in poly)
        d = top if degree is None else degree
        if d < top:
            raise DomainError(f"polynomial of degree {top} exceeds declared degree {d}")
    if d < 1:
        raise DomainError("constant input is not a binary form")
    coeffs = [Fraction(0)] * (d + 1)
    for (i, _), v in poly.items():
        coeffs[i] = v
    return BinaryForm(coeffs)
