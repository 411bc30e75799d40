"""Parse and print curve right-hand sides such as ``x^5 + u*x + 2``.

Grammar (juxtaposition also multiplies, so ``2x^3`` works)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*')? unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'x' | 'u' | '(' expr ')'

``u`` is the generator of F_p[u]/(h) and is only allowed when f > 1.
"""

from __future__ import annotations

import re

from lcurve.errors import ParseError
from lcurve.finite_field import FieldSpec
from lcurve.polynomial import FqPolynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*^()])|([A-Za-z_]\w*))")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at offset {pos}")
        tok = m.group(1) or m.group(2) or m.group(3)
        tokens.append("^" if tok == "**" else tok)
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, spec: FieldSpec, text: str):
        self.spec = spec
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'a token'}, got {tok or 'end of input'}")
        self.i += 1
        return tok

    def parse(self) -> FqPolynomial:
        if not self.tokens:
            raise ParseError("empty expression")
        out = self.expr()
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.peek()!r}")
        return out

    def expr(self):
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
            elif tok is None or tok in ("+", "-", ")", "^"):
                break
            acc = acc * self.unary()
        return acc

    def unary(self):
        tok = self.peek()
        if tok == "-":
            self.take()
            return -self.unary()
        if tok == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"exponent must be a non-negative integer, got {tok!r}")
            return base ** int(tok)
        return base

    def atom(self):
        tok = self.take()
        spec = self.spec
        if tok.isdigit():
            return FqPolynomial(spec, (int(tok) % spec.p,))
        if tok == "x":
            return FqPolynomial.x(spec)
        if tok == "u":
            if spec.f == 1:
                raise ParseError("symbol u needs an extension field (f > 1)")
            return FqPolynomial(spec, (spec.gen().value,))
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {tok!r}")


def parse_poly(spec: FieldSpec, text: str) -> FqPolynomial:
    return _Parser(spec, text).parse()


def format_element(spec: FieldSpec, value: int) -> str:
    residues = [int(r) for r in spec.residues(value)]
    terms = []
    for j in range(len(residues) - 1, -1, -1):
        r = residues[j]
        if r == 0:
            continue
        if j == 0:
            terms.append(str(r))
        else:
            mono = "u" if j == 1 else f"u^{j}"
            terms.append(mono if r == 1 else f"{r}*{mono}")
    return " + ".join(terms) if terms else "0"


def format_poly(poly: FqPolynomial) -> str:
    spec = poly.field
    if poly.is_zero():
        return "0"
    terms = []
    for k in range(poly.degree, -1, -1):
        c = poly.coeffs[k]
        if c == 0:
            continue
        coeff = format_element(spec, c)
        if "+" in coeff:
            coeff = f"({coeff})"
        if k == 0:
            terms.append(coeff)
            continue
        mono = "x" if k == 1 else f"x^{k}"
        terms.append(mono if coeff == "1" else f"{coeff}*{mono}")
    return " + ".join(terms)
