"""Polynomial strings: a small recursive-descent parser and the canonical printer.

Grammar (whitespace ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"

Juxtaposition is rejected, so ``2X1`` and ``X1 X2`` are errors.
"""

from __future__ import annotations

import re

from .arith import Poly, Ring

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.pos = pos


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        tok = self.peek()
        if tok[0] == ")":
            self.fail("unbalanced ')'")
        if tok[0] in ("int", "name", "("):
            self.fail("missing operator (juxtaposition is not multiplication)")
        if tok[0] != "end":
            self.fail(f"unexpected {tok[1]!r}")
        return value

    def expr(self) -> Poly:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Poly:
        value = self.unary()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self) -> Poly:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int" or int(tok[1]) <= 0:
                self.fail("malformed exponent (expected a positive integer)", tok)
            self.take()
            nxt = self.peek()
            if nxt[0] == "^":
                self.fail("chained exponents need parentheses", nxt)
            return base ** int(tok[1])
        return base

    def atom(self) -> Poly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return self.ring.const(int(val))
        if kind == "name":
            if val not in self.ring.names:
                self.fail(f"unknown identifier {val!r}", tok)
            return self.ring.var(val)
        if kind == "(":
            inner = self.expr()
            if self.peek()[0] != ")":
                self.fail("unbalanced '(' (missing ')')")
            self.take()
            return inner
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected {val!r}", tok)


def parse_polynomial(text: str, ring: Ring) -> Poly:
    """Parse ``text`` into a polynomial over ``ring`` (coefficients reduced mod p)."""
    return _Parser(text, ring).parse()


def _format_monomial(e, names) -> str:
    parts = []
    for x, name in zip(e, names):
        if x == 1:
            parts.append(name)
        elif x > 1:
            parts.append(f"{name}^{x}")
    return "*".join(parts)


def format_polynomial(f: Poly) -> str:
    """Canonical text: terms in decreasing order, coefficients symmetric mod p."""
    if f.is_zero():
        return "0"
    out = []
    for e, c in f.sorted_terms():
        c = f.ring.symmetric(c)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = _format_monomial(e, f.ring.names)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if not out:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)
