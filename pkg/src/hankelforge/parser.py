"""Parse and print Laurent polynomial symbols such as ``z^3 - 1/2 z^5``.

Grammar (whitespace insignificant)::

    expr  := sign? term (('+'|'-') term)*
    term  := coeff? '*'? 'z' ('^' int)? | coeff
    coeff := int ('/' int)?
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LaurentPoly

__all__ = ["ParseError", "SymbolExpr", "parse_symbol", "parse_poly", "format_poly"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class SymbolExpr:
    source: str
    poly: LaurentPoly


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self, signed: bool = False) -> int:
        sign = 1
        if signed and self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected integer", self.pos)
        return sign * int(self.text[start:self.pos])


def _term(sc: _Scanner) -> tuple[int, Fraction]:
    coeff = Fraction(1)
    have_coeff = False
    if sc.peek().isdigit():
        num = sc.integer()
        coeff = Fraction(num)
        if sc.take("/"):
            den_pos = sc.pos
            den = sc.integer()
            if den == 0:
                raise ParseError("division by zero", den_pos)
            coeff = Fraction(num, den)
        have_coeff = True
    starred = sc.take("*")
    if sc.peek() == "z":
        sc.pos += 1
        exp = 1
        if sc.take("^"):
            exp = sc.integer(signed=True)
        return exp, coeff
    if starred or not have_coeff:
        found = sc.peek()
        raise ParseError(f"expected 'z' or a number, found {found!r}" if found else "unexpected end of input", sc.pos)
    return 0, coeff


def parse_poly(text: str) -> LaurentPoly:
    sc = _Scanner(text)
    if sc.peek() == "":
        raise ParseError("empty input", len(text))
    terms = {}
    sign = 1
    if sc.take("-"):
        sign = -1
    else:
        sc.take("+")
    while True:
        exp, c = _term(sc)
        terms[exp] = terms.get(exp, 0) + sign * c
        nxt = sc.peek()
        if nxt == "":
            break
        if nxt == "+":
            sign = 1
        elif nxt == "-":
            sign = -1
        else:
            raise ParseError(f"unexpected character {nxt!r}", sc.pos)
        sc.pos += 1
    return LaurentPoly(terms)


def parse_symbol(text: str) -> SymbolExpr:
    return SymbolExpr(text, parse_poly(text))


def format_poly(p: LaurentPoly) -> str:
    if not p:
        return "0"
    parts = []
    for e in sorted(p.keys()):
        c = Fraction(p[e])
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = str(mag)
        else:
            zpart = "z" if e == 1 else f"z^{e}"
            body = zpart if mag == 1 else f"{mag}*{zpart}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)
