"""Recursive-descent parser for model text, and the canonical formatter.

Grammar::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' uint)?
    atom     := 'z1' | 'z2' | 'i' | 'conj(' expr ')' | 'Re(' expr ')' | 'Im(' expr ')'
              | '|' expr '|' '^' uint | rational | '(' expr ')'
    rational := int ('/' uint)?

``|e|^n`` requires an even ``n`` and means ``(e * conj(e))^(n/2)``.
The leading sign and the imaginary unit ``i`` are small extensions used by
the canonical formatter so that every Gaussian-rational model round-trips.
"""

from __future__ import annotations

import re
from fractions import Fraction

from crsym.errors import HermitianViolation, ModelSyntaxError
from crsym.poly import CRat, Poly, RealPoly, conj_pair_check

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<word>conj\(|Re\(|Im\(|z1|z2|i)|(?P<op>[-+*/^()|]))"
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ModelSyntaxError(f"unexpected character {text[bad]!r}", bad, text)
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def take(self, value=None):
        tok = self.peek()
        if value is not None and tok[1] != value:
            raise ModelSyntaxError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2], self.text)
        self.i += 1
        return tok

    def uint(self) -> int:
        tok = self.peek()
        if tok[0] != "num":
            raise ModelSyntaxError("expected an unsigned integer", tok[2], self.text)
        self.i += 1
        return int(tok[1])

    def parse(self) -> Poly:
        if not self.tokens:
            raise ModelSyntaxError("empty model", 0, self.text)
        out = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            raise ModelSyntaxError(f"unexpected {tok[1]!r}", tok[2], self.text)
        return out

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        out = self.term()
        if sign < 0:
            out = -out
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> Poly:
        out = self.factor()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            base = base ** self.uint()
        return base

    def atom(self) -> Poly:
        kind, value, pos = self.peek()
        if kind == "num":
            self.i += 1
            num = int(value)
            if self.peek()[1] == "/" and self.peek()[0] == "op":
                self.take()
                den = self.uint()
                if den == 0:
                    raise ModelSyntaxError("zero denominator", self.tokens[self.i - 1][2], self.text)
                return Poly.constant(Fraction(num, den))
            return Poly.constant(num)
        if kind == "word":
            self.i += 1
            if value == "z1":
                return Poly.monomial((1, 0, 0, 0, 0))
            if value == "z2":
                return Poly.monomial((0, 1, 0, 0, 0))
            if value == "i":
                return Poly.constant(CRat(0, 1))
            inner = self.expr()
            self.take(")")
            if value == "conj(":
                return inner.conj()
            if value == "Re(":
                return Poly._raw(inner.real_part()._t)
            return Poly._raw(inner.imag_part()._t)
        if kind == "op" and value == "(":
            self.i += 1
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "op" and value == "|":
            self.i += 1
            inner = self.expr()
            self.take("|")
            self.take("^")
            exp_pos = self.peek()[2]
            n = self.uint()
            if n % 2:
                raise ModelSyntaxError("|.| needs an even exponent", exp_pos, self.text)
            return (inner * inner.conj()) ** (n // 2)
        raise ModelSyntaxError(f"unexpected {value or 'end of input'!r}", pos, self.text)


def parse_poly(text: str) -> Poly:
    """Parse model text into a (not necessarily real) polynomial."""
    return _Parser(text).parse()


def parse_model(text: str) -> RealPoly:
    p = parse_poly(text)
    if not conj_pair_check(p):
        raise HermitianViolation(f"model {text!r} is not real valued")
    return RealPoly._raw(p._t)


def parse_scalar(text: str) -> CRat:
    p = parse_poly(text)
    if any(any(k) for k in p._t):
        raise ModelSyntaxError("expected a constant", 0, text)
    return p.coeff((0, 0, 0, 0, 0))


def _monomial_text(key) -> str:
    names = ("z1", "z2", "conj(z1)", "conj(z2)", "u")
    parts = []
    for name, e in zip(names, key):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _scalar_text(c: CRat) -> tuple[str, str]:
    """Sign and magnitude text for a coefficient."""
    if not c.im:
        return ("-" if c.re < 0 else "+"), str(abs(c.re))
    if not c.re:
        return ("-" if c.im < 0 else "+"), f"{abs(c.im)}*i"
    return "+", str(c)


def format_poly(p: Poly) -> str:
    """Canonical text, terms in lexicographic exponent order; re-parses exactly."""
    if not p:
        return "0"
    out = []
    for key, c in p.items():
        sign, mag = _scalar_text(c)
        mono = _monomial_text(key)
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)
