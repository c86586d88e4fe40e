"""Exact arithmetic in the rational function field Q(q).

A :class:`Scalar` is stored as a reduced fraction of integer polynomials in
the formal parameter ``q``.  The canonical form (coprime numerator and
denominator over Z[q], denominator with positive leading coefficient, zero as
0/1) makes equality a comparison of coefficient tuples.

Character values are restricted to :class:`UnitMonomial` (``sign * q**k``),
which embed multiplicatively into the scalars.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Union

import flint

from .errors import ColorLieError

_Poly = flint.fmpz_poly
_ONE_POLY = _Poly([1])
_ZERO_POLY = _Poly([])


def _q_power(k: int) -> _Poly:
    return _Poly([0] * k + [1])


class Scalar:
    __slots__ = ("num", "den", "_key")

    def __init__(self, value: Union[int, Fraction, "Scalar", "UnitMonomial"] = 0, den=None):
        if den is None:
            if isinstance(value, Scalar):
                self.num, self.den, self._key = value.num, value.den, value._key
                return
            if isinstance(value, UnitMonomial):
                s = value.to_scalar()
                self.num, self.den, self._key = s.num, s.den, s._key
                return
            if isinstance(value, Fraction):
                num, den = _Poly([value.numerator]), _Poly([value.denominator])
            elif isinstance(value, int):
                self.num, self.den, self._key = _Poly([value]), _ONE_POLY, None
                return
            elif isinstance(value, _Poly):
                self.num, self.den, self._key = value, _ONE_POLY, None
                return
            else:
                raise TypeError(f"cannot build a Scalar from {type(value).__name__}")
        else:
            num = value if isinstance(value, _Poly) else _Poly([int(value)])
            den = den if isinstance(den, _Poly) else _Poly([int(den)])
        self.num, self.den = _reduce(num, den)
        self._key = None

    @classmethod
    def _raw(cls, num: _Poly, den: _Poly) -> "Scalar":
        s = object.__new__(cls)
        s.num, s.den, s._key = num, den, None
        return s

    @classmethod
    def q(cls, k: int = 1) -> "Scalar":
        if k >= 0:
            return cls._raw(_q_power(k), _ONE_POLY)
        return cls._raw(_ONE_POLY, _q_power(-k))

    @classmethod
    def from_fraction(cls, a, b=1) -> "Scalar":
        return cls(Fraction(a, b))

    @staticmethod
    def parse(text: str) -> "Scalar":
        from .parsing import parse_scalar

        return parse_scalar(text)

    def key(self):
        if self._key is None:
            self._key = (tuple(int(c) for c in self.num.coeffs()),
                         tuple(int(c) for c in self.den.coeffs()))
        return self._key

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den == 1 and self.num == 1

    def __bool__(self):
        return not self.num.is_zero()

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __neg__(self):
        return Scalar._raw(-self.num, self.den)

    def __add__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            if self.den == 1:
                return Scalar._raw(self.num + other.num, _ONE_POLY)
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == 1 and other.den == 1:
            return Scalar._raw(self.num * other.num, _ONE_POLY)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        num, den = self.den, self.num
        if int(den.leading_coefficient()) < 0:
            num, den = -num, -den
        return Scalar._raw(num, den)

    def __truediv__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Scalar._raw(self.num ** n, self.den ** n)

    def as_fraction(self) -> Fraction | None:
        """The rational value, or None if the scalar depends on q."""
        if self.num.degree() <= 0 and self.den.degree() == 0:
            n = int(self.num[0]) if not self.num.is_zero() else 0
            return Fraction(n, int(self.den[0]))
        return None

    def as_unit(self) -> "UnitMonomial | None":
        """Return ``sign * q**k`` if the scalar has that form, else None."""
        num, den = self.num, self.den
        if num.is_zero():
            return None
        if _is_monomial(num) and _is_monomial(den):
            c = int(num.leading_coefficient())
            d = int(den.leading_coefficient())
            if abs(c) == 1 and d == 1:
                return UnitMonomial(c, num.degree() - den.degree())
        return None

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


def _is_monomial(p: _Poly) -> bool:
    coeffs = p.coeffs()
    return sum(1 for c in coeffs if c != 0) == 1


def _reduce(num: _Poly, den: _Poly):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return _ZERO_POLY, _ONE_POLY
    if den == 1:
        return num, _ONE_POLY
    g = num.gcd(den)
    if g != 1:
        num, den = num // g, den // g
    if int(den.leading_coefficient()) < 0:
        num, den = -num, -den
    return num, den


def _coerce(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar._raw(_Poly([x]), _ONE_POLY) if x else ZERO
    if isinstance(x, Fraction):
        return Scalar(x)
    if isinstance(x, UnitMonomial):
        return x.to_scalar()
    raise TypeError(f"unsupported scalar operand {type(x).__name__}")


def as_scalar(x) -> Scalar:
    return _coerce(x)


ZERO = Scalar._raw(_ZERO_POLY, _ONE_POLY)
ONE = Scalar._raw(_ONE_POLY, _ONE_POLY)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if _coerce(b).is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return a / b
    raise ColorLieError(f"unknown operation {op!r}")


class UnitMonomial(NamedTuple):
    """The unit ``sign * q**exponent`` of Q(q)."""

    sign: int = 1
    exponent: int = 0

    def __mul__(self, other):
        if not isinstance(other, UnitMonomial):
            return NotImplemented
        return UnitMonomial(self.sign * other.sign, self.exponent + other.exponent)

    def inverse(self) -> "UnitMonomial":
        return UnitMonomial(self.sign, -self.exponent)

    def __pow__(self, n: int):
        return unit_pow(self, n)

    def is_one(self) -> bool:
        return self.sign == 1 and self.exponent == 0

    def to_scalar(self) -> Scalar:
        s = _UNIT_CACHE.get(self)
        if s is None:
            s = Scalar.q(self.exponent)
            if self.sign < 0:
                s = -s
            _UNIT_CACHE[self] = s
        return s

    @staticmethod
    def parse(text: str) -> "UnitMonomial":
        from .parsing import parse_unit

        return parse_unit(text)

    def __str__(self):
        if self.exponent == 0:
            return "1" if self.sign > 0 else "-1"
        body = "q" if self.exponent == 1 else f"q^{self.exponent}"
        return body if self.sign > 0 else "-" + body


_UNIT_CACHE: dict = {}

UNIT_ONE = UnitMonomial(1, 0)
HALF = Scalar(Fraction(1, 2))


def unit_pow(u: UnitMonomial, n: int) -> UnitMonomial:
    sign = -1 if (u.sign < 0 and n % 2) else 1
    return UnitMonomial(sign, u.exponent * n)


def _format_coeff_term(c: Fraction, e: int) -> str:
    if e == 0:
        return str(c)
    mono = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _format_laurent(terms) -> str:
    # terms: list of (Fraction coeff, exponent), highest exponent first
    out = ""
    for c, e in terms:
        piece = _format_coeff_term(c, e)
        if not out:
            out = piece
        elif piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out or "0"


def _poly_terms(p: _Poly, scale=Fraction(1), shift=0):
    coeffs = [int(c) for c in p.coeffs()]
    return [(Fraction(c) * scale, i + shift) for i, c in reversed(list(enumerate(coeffs))) if c]


def format_scalar(s: Scalar) -> str:
    """Canonical text form, parseable by :func:`colorlie.parsing.parse_scalar`."""
    if s.num.is_zero():
        return "0"
    if _is_monomial(s.den):
        d = int(s.den.leading_coefficient())
        return _format_laurent(_poly_terms(s.num, Fraction(1, d), -s.den.degree()))
    num = _format_laurent(_poly_terms(s.num))
    den = _format_laurent(_poly_terms(s.den))
    if len(_poly_terms(s.num)) > 1:
        num = f"({num})"
    return f"{num}/({den})"
