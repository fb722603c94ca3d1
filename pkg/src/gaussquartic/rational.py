"""The field Q(i) as reduced fractions of Gaussian integers."""

from __future__ import annotations

from typing import Optional, Union

from .gaussian import (
    ONE,
    UNITS,
    ZERO,
    GaussianInt,
    canonical_associate,
    divrem,
    gcd,
    parse_gaussian,
    sqrt_exact,
)

__all__ = ["GaussianRational", "as_integral", "sqrt_in_field", "parse_rational"]

Number = Union["GaussianRational", GaussianInt, int]


class GaussianRational:
    """``num / den`` in lowest terms with a canonical-associate denominator.

    Two values are equal iff their normalized (num, den) pairs are equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[GaussianInt, int] = 0, den: Union[GaussianInt, int] = 1):
        num = GaussianInt.coerce(num)
        den = GaussianInt.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        if not den.is_unit():
            g = gcd(num, den)
            if g != ONE:
                num = divrem(num, g)[0]
                den = divrem(den, g)[0]
        den, u = canonical_associate(den)
        self.num = num * u
        self.den = den

    @staticmethod
    def coerce(value: Number) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(value)

    @classmethod
    def _raw(cls, num: GaussianInt, den: GaussianInt) -> "GaussianRational":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return GaussianRational(self.num + o.num, self.den)
        return GaussianRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "GaussianRational":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.den, self.num)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inv()

    def __pow__(self, exp: int):
        if exp < 0:
            return self.inv() ** (-exp)
        return GaussianRational(self.num**exp, self.den**exp)

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.num.conj(), self.den.conj())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, GaussianInt)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == ONE:
            return hash(self.num)
        return hash((self.num, self.den))

    def sort_key(self) -> tuple:
        return (self.den.sort_key(), self.num.sort_key())

    def __repr__(self):
        return f"GaussianRational({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"{_wrap(self.num)}/{_wrap(self.den)}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "GaussianRational":
        return cls(GaussianInt.from_json(obj["num"]), GaussianInt.from_json(obj["den"]))


def _wrap(g: GaussianInt) -> str:
    s = str(g)
    return f"({s})" if g.re != 0 and g.im != 0 else s


def parse_rational(text: str) -> GaussianRational:
    """Parse ``num`` or ``num/den``; each part may be parenthesized."""
    head, sep, tail = text.partition("/")
    num = parse_gaussian(head)
    if not sep:
        return GaussianRational(num)
    return GaussianRational(num, parse_gaussian(tail))


def as_integral(q: GaussianRational) -> Optional[GaussianInt]:
    """``q`` as a Gaussian integer, or ``None`` if its denominator is not a unit."""
    q = GaussianRational.coerce(q)
    if q.den == ONE:
        return q.num
    return None


def sqrt_in_field(q: Number) -> Optional[GaussianRational]:
    """A square root of ``q`` in Q(i), or ``None``.

    With ``q = n/d`` reduced, ``q`` is a square iff ``u*n`` and ``u*d`` are
    both squares in Z[i] for one common unit ``u``. Of the two roots the one
    whose numerator has ``re > 0`` (or ``re == 0, im >= 0``) is returned.
    """
    q = GaussianRational.coerce(q)
    if q.is_zero():
        return GaussianRational(0)
    for u in UNITS:
        sd = sqrt_exact(u * q.den)
        if sd is None:
            continue
        sn = sqrt_exact(u * q.num)
        if sn is None:
            continue
        root = GaussianRational(sn, sd)
        n = root.num
        if n.re < 0 or (n.re == 0 and n.im < 0):
            root = -root
        return root
    return None
