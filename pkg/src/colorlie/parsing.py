"""Text syntax for scalars, unit monomials and noncommutative expressions.

Grammar (one parser serves all three; generator names are only accepted when a
name table is supplied)::

    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := ('+'|'-') unary | factor
    factor := atom ('^' ['-'] int)?
    atom   := ident | int | 'q' | '(' expr ')'

Division and negative powers are only allowed for invertible scalars.  Values
are elements of the free algebra: dicts mapping words (tuples of generator
indices) to Scalars, expanded eagerly.
"""
from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple

from .errors import ParseError
from .scalars import ONE, Scalar, UnitMonomial

_NUMBER = re.compile(r"[0-9]+")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

MAX_POWER = 64
MAX_TERMS = 20000

Word = Tuple[int, ...]
FreeElement = Dict[Word, Scalar]


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        m = _NUMBER.match(text, i) or _IDENT.match(text, i)
        if m:
            kind = "int" if ch.isdigit() else "ident"
            toks.append(_Tok(kind, m.group(0), line, col))
            col += m.end() - i
            i = m.end()
            continue
        if ch not in "+-*/^()":
            raise ParseError(f"unexpected character {ch!r}", line, col)
        toks.append(_Tok("op", ch, line, col))
        i += 1
        col += 1
    toks.append(_Tok("end", "", line, col))
    return toks


def _add(a: FreeElement, b: FreeElement, sign=1) -> FreeElement:
    out = dict(a)
    for w, c in b.items():
        v = out.get(w)
        v = c if sign > 0 and v is None else (-c if v is None else (v + c if sign > 0 else v - c))
        if v.is_zero():
            out.pop(w, None)
        else:
            out[w] = v
    return out


def _mul(a: FreeElement, b: FreeElement, tok: _Tok) -> FreeElement:
    if len(a) * len(b) > MAX_TERMS:
        raise ParseError("expression expands to too many terms", tok.line, tok.col)
    out: FreeElement = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            v = out.get(w)
            v = ca * cb if v is None else v + ca * cb
            if v.is_zero():
                out.pop(w, None)
            else:
                out[w] = v
    return out


def _scalar_of(x: FreeElement) -> Optional[Scalar]:
    if not x:
        return Scalar(0)
    if len(x) == 1 and () in x:
        return x[()]
    return None


class _Parser:
    def __init__(self, text: str, generators: Optional[Dict[str, int]]):
        self.toks = _tokenize(text)
        self.i = 0
        self.generators = generators

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, ch):
        t = self.take()
        if t.kind != "op" or t.text != ch:
            what = "end of input" if t.kind == "end" else repr(t.text)
            raise ParseError(f"expected {ch!r}, found {what}", t.line, t.col)
        return t

    def parse(self) -> FreeElement:
        t = self.peek()
        if t.kind == "end":
            raise ParseError("empty expression", t.line, t.col)
        val = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected token {t.text!r}", t.line, t.col)
        return val

    def expr(self) -> FreeElement:
        val = self.term()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "+-":
                self.take()
                val = _add(val, self.term(), 1 if t.text == "+" else -1)
            else:
                return val

    def term(self) -> FreeElement:
        val = self.unary()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "*/":
                self.take()
                rhs = self.unary()
                if t.text == "*":
                    val = _mul(val, rhs, t)
                else:
                    s = _scalar_of(rhs)
                    if s is None:
                        raise ParseError("can only divide by a scalar", t.line, t.col)
                    if s.is_zero():
                        raise ParseError("division by zero", t.line, t.col)
                    inv = s.inverse()
                    val = {w: c * inv for w, c in val.items()}
            else:
                return val

    def unary(self) -> FreeElement:
        t = self.peek()
        if t.kind == "op" and t.text in "+-":
            self.take()
            val = self.unary()
            return val if t.text == "+" else {w: -c for w, c in val.items()}
        return self.factor()

    def factor(self) -> FreeElement:
        base = self.atom()
        t = self.peek()
        if not (t.kind == "op" and t.text == "^"):
            return base
        self.take()
        neg = False
        e = self.take()
        if e.kind == "op" and e.text == "-":
            neg = True
            e = self.take()
        if e.kind != "int":
            raise ParseError("exponent must be an integer", e.line, e.col)
        n = int(e.text)
        if n > MAX_POWER:
            raise ParseError(f"exponent {n} exceeds limit {MAX_POWER}", e.line, e.col)
        s = _scalar_of(base)
        if neg:
            if s is None:
                raise ParseError("negative powers are only allowed for scalars", e.line, e.col)
            if s.is_zero():
                raise ParseError("division by zero", e.line, e.col)
            return {(): s ** (-n)}
        if s is not None:
            p = s ** n
            return {} if p.is_zero() else {(): p}
        out: FreeElement = {(): ONE}
        for _ in range(n):
            out = _mul(out, base, e)
        return out

    def atom(self) -> FreeElement:
        t = self.take()
        if t.kind == "int":
            v = int(t.text)
            return {(): Scalar(v)} if v else {}
        if t.kind == "ident":
            if t.text == "q":
                return {(): Scalar.q(1)}
            if self.generators is None:
                raise ParseError(f"unknown symbol {t.text!r}", t.line, t.col)
            idx = self.generators.get(t.text)
            if idx is None:
                raise ParseError(f"unknown generator {t.text!r}", t.line, t.col)
            return {(idx,): ONE}
        if t.kind == "op" and t.text == "(":
            val = self.expr()
            self.expect_op(")")
            return val
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {what}", t.line, t.col)


def parse_scalar(text: str) -> Scalar:
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string, got {type(text).__name__}")
    val = _Parser(text, None).parse()
    return _scalar_of(val)


def parse_unit(text: str) -> UnitMonomial:
    s = parse_scalar(text)
    u = s.as_unit()
    if u is None:
        raise ParseError(f"{text!r} is not of the form ±q^k")
    return u


def parse_free(text: str, generators: Dict[str, int]) -> FreeElement:
    """Parse into a free-algebra element keyed by generator-index words."""
    return _Parser(text, dict(generators)).parse()


def lower_word(word: Word, names) -> List[Tuple[str, int]]:
    out: List[Tuple[str, int]] = []
    for g in word:
        if out and out[-1][0] == names[g]:
            out[-1] = (names[g], out[-1][1] + 1)
        else:
            out.append((names[g], 1))
    return out


def parse_expression(text: str, presentation) -> List[Tuple[Scalar, List[Tuple[str, int]]]]:
    """Parse ``text`` into scalar-prefixed words over the presentation's generators.

    The result lists ``(coefficient, [(generator, power), ...])`` pairs in
    deterministic order; sums and powers are expanded in the free algebra.
    """
    names = list(presentation.names)
    val = parse_free(text, {n: i for i, n in enumerate(names)})
    return [(c, lower_word(w, names)) for w, c in sorted(val.items(), key=lambda kv: (len(kv[0]), kv[0]))]
