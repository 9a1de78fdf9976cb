"""Text form of polynomials over Q.

Grammar (whitespace is ignored)::

    expr  := ['+' | '-'] term (('+' | '-') term)*
    term  := coeff ('*' atom)* | atom ('*' atom)*
    atom  := ('x' | 'y') ('^' nat)?
    coeff := nat ('/' nat)?

``x`` is the first variable, ``y`` the second.  :func:`format_poly` emits text
that :func:`parse_poly` reads back to an equal polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Polynomial

MAX_EXPONENT = 10**6

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([xy])|([-+*/^]))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN_RE.match(text, pos)
            if m is None or m.end() == pos:
                bad = len(text) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
            start = m.start(m.lastindex)
            if m.group(1) is not None:
                self.tokens.append(("nat", m.group(1), start))
            elif m.group(2) is not None:
                self.tokens.append(("var", m.group(2), start))
            else:
                self.tokens.append((m.group(3), m.group(3), start))
            pos = m.end()
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)

    def take(self, kind: str, expected: str) -> str:
        if self.peek() != kind:
            got = "end of input" if self.peek() is None else repr(self.tokens[self.i][1])
            raise ParseError(f"expected {expected}, got {got}", self.pos(), self.text)
        tok = self.tokens[self.i][1]
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        terms: dict = {}
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take(self.peek(), "sign") == "-" else 1
        while True:
            (k, l), c = self.term()
            key = (k, l)
            terms[key] = terms.get(key, 0) + sign * c
            if self.peek() in ("+", "-"):
                sign = -1 if self.take(self.peek(), "'+' or '-'") == "-" else 1
                continue
            if self.peek() is not None:
                raise ParseError(
                    f"expected '+', '-' or end of input, got {self.tokens[self.i][1]!r}",
                    self.pos(),
                    self.text,
                )
            return Polynomial(terms)

    def term(self):
        k = l = 0
        c = Fraction(1)
        if self.peek() == "nat":
            num = int(self.take("nat", "number"))
            den = 1
            if self.peek() == "/":
                self.take("/", "'/'")
                at = self.pos()
                den = int(self.take("nat", "denominator"))
                if den == 0:
                    raise ParseError("zero denominator", at, self.text)
            c = Fraction(num, den)
            if self.peek() != "*":
                return (0, 0), c
            self.take("*", "'*'")
        elif self.peek() != "var":
            raise ParseError(
                "expected number or variable"
                + ("" if self.peek() is None else f", got {self.tokens[self.i][1]!r}"),
                self.pos(),
                self.text,
            )
        while True:
            dk, dl = self.atom()
            k += dk
            l += dl
            if k > MAX_EXPONENT or l > MAX_EXPONENT:
                raise ParseError(f"exponent exceeds {MAX_EXPONENT}", self.pos(), self.text)
            if self.peek() != "*":
                return (k, l), c
            self.take("*", "'*'")

    def atom(self):
        var = self.take("var", "'x' or 'y'")
        e = 1
        if self.peek() == "^":
            self.take("^", "'^'")
            at = self.pos()
            digits = self.take("nat", "exponent")
            if len(digits) > 7 or int(digits) > MAX_EXPONENT:
                raise ParseError(f"exponent exceeds {MAX_EXPONENT}", at, self.text)
            e = int(digits)
        return (e, 0) if var == "x" else (0, e)


def parse_poly(text: str) -> Polynomial:
    """Parse a polynomial in ``x`` and ``y`` with exact rational coefficients."""
    parser = _Parser(text)
    if not parser.tokens:
        raise ParseError("empty expression", 0, text)
    return parser.expr()


def _monomial_text(k: int, l: int) -> str:
    parts = []
    if k:
        parts.append("x" if k == 1 else f"x^{k}")
    if l:
        parts.append("y" if l == 1 else f"y^{l}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    """Terms by descending total degree, then descending power of ``x``."""
    if p.is_zero():
        return "0"
    out = []
    for (k, l), c in sorted(p.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _monomial_text(k, l)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)
