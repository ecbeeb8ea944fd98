"""Text form of vector fields.

    expr     := ["+"|"-"] term (("+"|"-") term)*
    term     := [coef ["*"]] (monomial ["*"])* tail
    coef     := integer ["/" positive-integer]
    monomial := "x" index ["^" exponent]
    tail     := "d" index | "E" | "(" expr ")"

``E`` stands for the Euler field x1 d1 + ... + xn dn, and a parenthesised
expression may be multiplied by a coefficient and monomials, as in
``x1*(x1 d1 + x2 d2)``.  Whitespace is insignificant.  The single token ``0``
denotes the zero field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .derlie import Derivation, euler, format_derivation
from .polyring import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<var>x(?P<vi>\d*))|(?P<d>d(?P<di>\d*))|(?P<E>E)|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int
    value: int = 0


def tokenize(text: str) -> List[Token]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            p = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[p]!r}", p)
        for kind in ("int", "var", "d", "E", "op"):
            if m.group(kind) is not None:
                start = m.start(kind)
                break
        if kind == "int":
            toks.append(Token("int", m.group("int"), start, int(m.group("int"))))
        elif kind in ("var", "d"):
            digits = m.group("vi" if kind == "var" else "di")
            if not digits or int(digits) == 0:
                raise ParseError(f"missing or zero index after {kind[0]!r}", start)
            toks.append(Token(kind, m.group(kind), start, int(digits)))
        elif kind == "E":
            toks.append(Token("E", "E", start))
        else:
            toks.append(Token(m.group("op"), m.group("op"), start))
        pos = m.end()
    toks.append(Token("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, n: int):
        self.n = n
        self.toks = tokenize(text)
        self.k = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def take(self, kind: str | None = None) -> Token:
        t = self.tok
        if kind is not None and t.kind != kind:
            raise ParseError(f"expected {kind!r}, found {t.text or 'end of input'!r}", t.pos)
        self.k += 1
        return t

    def index(self, t: Token) -> int:
        if t.value > self.n:
            raise ParseError(f"variable index {t.value} out of range 1..{self.n}", t.pos)
        return t.value

    def expr(self) -> Derivation:
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.take().kind == "-" else 1
        out = self.term() * sign
        while self.tok.kind in ("+", "-"):
            s = -1 if self.take().kind == "-" else 1
            out = out + self.term() * s
        return out

    def term(self) -> Derivation:
        coef = Fraction(1)
        if self.tok.kind == "int":
            num = self.take().value
            if self.tok.kind == "/":
                self.take()
                den_tok = self.take("int")
                if den_tok.value == 0:
                    raise ParseError("zero denominator", den_tok.pos)
                coef = Fraction(num, den_tok.value)
            else:
                coef = Fraction(num)
            if self.tok.kind == "*":
                self.take()
        exps = [0] * self.n
        while self.tok.kind == "var":
            i = self.index(self.take())
            e = 1
            if self.tok.kind == "^":
                self.take()
                if self.tok.kind != "int":
                    raise ParseError("malformed exponent", self.tok.pos)
                e = self.take().value
            exps[i - 1] += e
            if self.tok.kind == "*":
                self.take()
        factor = Polynomial.monomial(exps, coef)
        t = self.tok
        if t.kind == "d":
            self.take()
            i = self.index(t)
            cs = [Polynomial.zero(self.n)] * self.n
            cs[i - 1] = factor
            return Derivation(cs)
        if t.kind == "E":
            self.take()
            if self.n < 2:
                raise ParseError("E needs n >= 2", t.pos)
            return euler(self.n) * factor
        if t.kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner * factor
        raise ParseError(f"expected d<i>, E or '(', found {t.text or 'end of input'!r}", t.pos)


def parse_derivation(text: str, n: int) -> Derivation:
    if n < 1:
        raise ValueError("n must be positive")
    if text.strip() == "0":
        return Derivation.zero(n)
    p = _Parser(text, n)
    if p.tok.kind == "end":
        raise ParseError("empty expression", 0)
    D = p.expr()
    if p.tok.kind != "end":
        raise ParseError(f"unexpected {p.tok.text!r}", p.tok.pos)
    return D


@dataclass(frozen=True)
class DerivationExpr:
    source: str
    derivation: Derivation

    @classmethod
    def parse(cls, text: str, n: int) -> "DerivationExpr":
        return cls(text, parse_derivation(text, n))

    def canonical(self) -> str:
        return format_derivation(self.derivation)


def roundtrip(text: str, n: int) -> Tuple[Derivation, Derivation]:
    D = parse_derivation(text, n)
    return D, parse_derivation(format_derivation(D), n)
