"""Arithmetic in the Gaussian integers Z[i].

Values are immutable; every function here is pure. Integer parts are Python
ints, so there is no overflow anywhere in this module.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

__all__ = [
    "GaussianInt",
    "GaussianFactorization",
    "UNITS",
    "ONE",
    "ZERO",
    "I",
    "canonical_associate",
    "divrem",
    "gcd",
    "factor",
    "divisors",
    "sqrt_exact",
    "is_gaussian_prime",
    "monic_cubic_integral_roots",
    "parse_gaussian",
    "FACTOR_NORM_CEILING",
]

# Trial division of the norm is only meant for the tiny values of the
# torsion pipeline; larger input is refused rather than left to hang.
FACTOR_NORM_CEILING = 10**12

IntLike = Union["GaussianInt", int]


class GaussianInt:
    """An element ``re + im*i`` of Z[i]."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = int(re)
        self.im = int(im)

    @staticmethod
    def coerce(value: IntLike) -> "GaussianInt":
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return GaussianInt(value, 0)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")

    # ring operations

    def __add__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im)
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re - other, self.im)
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if isinstance(other, int):
            return GaussianInt(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        if not isinstance(other, GaussianInt):
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianInt(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exp: int):
        if exp < 0:
            raise ValueError("negative powers are not defined in Z[i]")
        result = ONE
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_rational(self) -> bool:
        return self.im == 0

    def divides(self, other: IntLike) -> bool:
        """True iff ``other`` is a multiple of ``self`` (``0`` divides only ``0``)."""
        other = GaussianInt.coerce(other)
        if self.is_zero():
            return other.is_zero()
        return divrem(other, self)[1].is_zero()

    def exact_div(self, other: IntLike) -> "GaussianInt":
        """Divide, raising ``ValueError`` if the quotient is not in Z[i]."""
        q, r = divrem(self, other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    # value semantics

    def __eq__(self, other):
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def sort_key(self) -> tuple:
        return (self.norm(), self.re, self.im)

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self):
        a, b = self.re, self.im
        if b == 0:
            return str(a)
        if b == 1:
            imag = "i"
        elif b == -1:
            imag = "-i"
        else:
            imag = f"{b}i"
        if a == 0:
            return imag
        if b > 0:
            return f"{a}+{imag}"
        return f"{a}{imag}"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj: dict) -> "GaussianInt":
        return cls(int(obj["re"]), int(obj["im"]))


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
# Fixed order; unit searches elsewhere rely on it for determinism.
UNITS = (ONE, I, GaussianInt(-1, 0), GaussianInt(0, -1))


_REAL_FIRST = re.compile(r"^(?P<re>[+-]?\d+)(?:(?P<sign>[+-])(?P<coef>\d*)i)?$")
_IMAG_ONLY = re.compile(r"^(?P<sign>[+-]?)(?P<coef>\d*)i$")
# whitespace is allowed around signs and parentheses, never inside a term
_SPLIT_TERM = re.compile(r"[\di]\s+[\di]")


def parse_gaussian(text: str) -> GaussianInt:
    """Parse ``a``, ``bi``, ``a+bi``, ``a-bi``, ``i``, ``-i``.

    Surrounding parentheses are accepted so that ``str`` of compound
    rationals and points round-trips.
    """
    if _SPLIT_TERM.search(text):
        raise ValueError(f"malformed Gaussian integer literal: {text!r}")
    s = "".join(text.split())
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    m = _REAL_FIRST.match(s)
    if m is not None:
        re_val = int(m.group("re"))
    else:
        m = _IMAG_ONLY.match(s)
        if m is None:
            raise ValueError(f"malformed Gaussian integer literal: {text!r}")
        re_val = 0
    im_val = 0
    if m.group("sign") is not None and s.endswith("i"):
        coef = m.group("coef")
        im_val = int(coef) if coef else 1
        if m.group("sign") == "-":
            im_val = -im_val
    return GaussianInt(re_val, im_val)


def canonical_associate(g: IntLike) -> tuple[GaussianInt, GaussianInt]:
    """Return ``(u*g, u)`` where ``u*g`` has ``re > 0`` and ``im >= 0``."""
    g = GaussianInt.coerce(g)
    if g.is_zero():
        raise ValueError("zero has no canonical associate")
    for u in UNITS:
        c = u * g
        if c.re > 0 and c.im >= 0:
            return c, u
    raise AssertionError("unreachable: some associate lies in the first quadrant")


def _round_half_up(num: int, den: int) -> int:
    # den > 0; nearest integer to num/den, ties toward +infinity
    return (2 * num + den) // (2 * den)


def divrem(a: IntLike, b: IntLike) -> tuple[GaussianInt, GaussianInt]:
    """Euclidean division ``a = q*b + r`` with ``norm(r) <= norm(b)/2``.

    Each coordinate of the exact quotient is rounded to the nearest
    integer; half-integers round toward positive infinity.
    """
    a = GaussianInt.coerce(a)
    b = GaussianInt.coerce(b)
    n = b.norm()
    if n == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    t = a * b.conj()
    q = GaussianInt(_round_half_up(t.re, n), _round_half_up(t.im, n))
    return q, a - q * b


def gcd(a: IntLike, b: IntLike) -> GaussianInt:
    """Greatest common divisor, normalized to its canonical associate."""
    a = GaussianInt.coerce(a)
    b = GaussianInt.coerce(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, divrem(a, b)[1]
    return canonical_associate(a)[0]


@dataclass(frozen=True)
class GaussianFactorization:
    """``unit * prod(p**e for p, e in factors)``, primes canonical and distinct."""

    unit: GaussianInt
    factors: tuple[tuple[GaussianInt, int], ...]

    def value(self) -> GaussianInt:
        out = self.unit
        for p, e in self.factors:
            out = out * p**e
        return out

    def __str__(self):
        parts = []
        for p, e in self.factors:
            s = str(p)
            if p.re != 0 and p.im != 0:
                s = f"({s})"
            parts.append(s if e == 1 else f"{s}^{e}")
        if not parts:
            return str(self.unit)
        if self.unit != ONE:
            parts.insert(0, str(self.unit))
        return " * ".join(parts)


def _rational_factor(n: int) -> list[tuple[int, int]]:
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p = 5
    step = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return out


def _split_prime(p: int) -> GaussianInt:
    """A Gaussian prime of norm ``p`` for a rational prime ``p = 1 (mod 4)``."""
    for n in range(2, p):
        if pow(n, (p - 1) // 2, p) == p - 1:
            x = pow(n, (p - 1) // 4, p)
            return gcd(GaussianInt(p), GaussianInt(x, 1))
    raise ValueError(f"{p} is not a prime congruent to 1 mod 4")


def _strip(g: GaussianInt, p: GaussianInt) -> tuple[GaussianInt, int]:
    e = 0
    while True:
        q, r = divrem(g, p)
        if not r.is_zero():
            return g, e
        g = q
        e += 1


def factor(g: IntLike, max_norm: int = FACTOR_NORM_CEILING) -> GaussianFactorization:
    """Factor ``g`` into a unit times canonical Gaussian prime powers.

    Writing ``g = k*h`` with ``k = gcd(re, im)``, the rational integers ``k``
    and ``norm(h)`` are factored by trial division; each rational prime is
    then split (``p = 2`` or ``p = 1 mod 4``) or kept inert (``p = 3 mod 4``).
    Raises ``ValueError`` for zero, or when ``k`` or ``norm(h)`` exceeds
    ``max_norm``.
    """
    g = GaussianInt.coerce(g)
    if g.is_zero():
        raise ValueError("cannot factor zero")
    k = math.gcd(g.re, g.im)
    n = (g.re // k) ** 2 + (g.im // k) ** 2
    if max(k, n) > max_norm:
        raise ValueError(f"{g} exceeds factoring ceiling {max_norm}")
    rational_primes = sorted({p for p, _ in _rational_factor(k)} | {p for p, _ in _rational_factor(n)})
    factors: list[tuple[GaussianInt, int]] = []
    rest = g
    for p in rational_primes:
        if p == 2:
            primes = [GaussianInt(1, 1)]
        elif p % 4 == 3:
            primes = [GaussianInt(p)]
        else:
            pi = _split_prime(p)
            primes = [pi, canonical_associate(pi.conj())[0]]
        for q in primes:
            rest, e = _strip(rest, q)
            if e:
                factors.append((q, e))
    if not rest.is_unit():
        raise AssertionError(f"factorization of {g} left non-unit cofactor {rest}")
    factors.sort(key=lambda pe: pe[0].sort_key())
    return GaussianFactorization(rest, tuple(factors))


def is_gaussian_prime(g: IntLike) -> bool:
    g = GaussianInt.coerce(g)
    n = g.norm()
    if n < 2:
        return False
    if _is_rational_prime(n):
        return True
    if g.re == 0 or g.im == 0:
        q = abs(g.re + g.im)
        return q % 4 == 3 and _is_rational_prime(q)
    return False


def _is_rational_prime(n: int) -> bool:
    return n >= 2 and _rational_factor(n) == [(n, 1)]


def divisors(g: IntLike) -> list[GaussianInt]:
    """All divisors of ``g`` up to associates, canonical, sorted by norm."""
    fac = factor(g)
    out = [ONE]
    for p, e in fac.factors:
        powers = [p**k for k in range(e + 1)]
        out = [d * pk for d in out for pk in powers]
    return sorted((canonical_associate(d)[0] for d in out), key=GaussianInt.sort_key)


def sqrt_exact(g: IntLike) -> Optional[GaussianInt]:
    """The square root of ``g`` in Z[i] with ``re > 0`` (or ``re == 0, im >= 0``).

    Returns ``None`` when ``g`` is not a square.
    """
    g = GaussianInt.coerce(g)
    p, q = g.re, g.im
    n = p * p + q * q
    m = math.isqrt(n)
    if m * m != n:
        return None
    # (a+bi)^2 = p+qi  =>  a^2 = (m+p)/2, b^2 = (m-p)/2
    if (m + p) & 1:
        return None
    a2, b2 = (m + p) // 2, (m - p) // 2
    a, b = math.isqrt(a2), math.isqrt(b2)
    if a * a != a2 or b * b != b2:
        return None
    if a == 0:
        return GaussianInt(0, b)
    if q < 0:
        b = -b
    root = GaussianInt(a, b)
    if root * root != g:
        return None
    return root


def _associates(values: Iterable[GaussianInt]) -> Iterator[GaussianInt]:
    for d in values:
        for u in UNITS:
            yield u * d


def monic_cubic_integral_roots(A: IntLike, c: IntLike) -> list[GaussianInt]:
    """Distinct roots in Z[i] of ``x^3 + A*x + c``, sorted by norm."""
    A = GaussianInt.coerce(A)
    c = GaussianInt.coerce(c)
    roots = set()
    if c.is_zero():
        roots.add(ZERO)
        s = sqrt_exact(-A)
        if s is not None:
            roots.update((s, -s))
    else:
        for x in _associates(divisors(c)):
            if x * x * x + A * x + c == ZERO:
                roots.add(x)
    return sorted(roots, key=GaussianInt.sort_key)
