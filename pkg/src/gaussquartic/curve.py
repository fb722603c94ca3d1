"""Short Weierstrass curves y^2 = x^3 + Ax + B over Q(i).

Points are affine with exact Q(i) coordinates; ``INFINITY`` is the identity.
"""

from __future__ import annotations

from typing import Optional, Union

from .gaussian import GaussianInt
from .rational import GaussianRational, parse_rational

__all__ = [
    "Curve",
    "Point",
    "INFINITY",
    "SingularCurveError",
    "NotOnCurveError",
    "new_curve",
    "contains",
    "add",
    "scalar_mul",
    "point_order",
    "parse_point",
    "DEFAULT_ORDER_BOUND",
]

# Largest torsion order over Q(i) for a curve with rational coefficients.
DEFAULT_ORDER_BOUND = 12


class SingularCurveError(ValueError):
    pass


class NotOnCurveError(ValueError):
    pass


class Point:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = None if x is None else GaussianRational.coerce(x)
        self.y = None if y is None else GaussianRational.coerce(y)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __neg__(self):
        if self.is_infinity:
            return self
        return Point(self.x, -self.y)

    def sort_key(self) -> tuple:
        if self.is_infinity:
            return (0,)
        return (1, self.x.sort_key(), self.y.sort_key())

    def __repr__(self):
        return "INFINITY" if self.is_infinity else f"Point({self.x}, {self.y})"

    def __str__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"

    def to_json(self) -> dict:
        if self.is_infinity:
            return {"infinity": True}
        return {"infinity": False, "x": self.x.to_json(), "y": self.y.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "Point":
        if obj["infinity"]:
            return INFINITY
        return cls(GaussianRational.from_json(obj["x"]), GaussianRational.from_json(obj["y"]))


INFINITY = Point(None, None)


def parse_point(text: str) -> Point:
    """Inverse of ``str(Point)``: ``"O"`` or ``"(x, y)"``."""
    s = text.strip()
    if s == "O":
        return INFINITY
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"malformed point: {text!r}")
    # the coordinate separator is the only ", " in the rendering
    xs, sep, ys = s[1:-1].partition(",")
    if not sep:
        raise ValueError(f"malformed point: {text!r}")
    return Point(parse_rational(xs), parse_rational(ys))


def _coef_term(c: GaussianInt, var: str) -> str:
    if c.is_zero():
        return ""
    if c.im == 0:
        sign = "-" if c.re < 0 else "+"
        mag = abs(c.re)
        body = var if (mag == 1 and var) else f"{mag}{var}"
        return f" {sign} {body}"
    if c.re == 0:
        sign = "-" if c.im < 0 else "+"
        mag = GaussianInt(0, abs(c.im))
        return f" {sign} {mag}{'*' + var if var else ''}"
    return f" + ({c}){'*' + var if var else ''}"


class Curve:
    """The curve ``y^2 = x^3 + A*x + B`` with ``A, B`` in Z[i]."""

    __slots__ = ("A", "B")

    def __init__(self, A: Union[GaussianInt, int], B: Union[GaussianInt, int]):
        A = GaussianInt.coerce(A)
        B = GaussianInt.coerce(B)
        if (4 * A**3 + 27 * B**2).is_zero():
            raise SingularCurveError(f"singular curve: 4A^3 + 27B^2 = 0 for A={A}, B={B}")
        self.A = A
        self.B = B

    def discriminant_quantity(self) -> GaussianInt:
        """``4A^3 + 27B^2``, the quantity bounding torsion y-coordinates."""
        return 4 * self.A**3 + 27 * self.B**2

    def has_rational_coefficients(self) -> bool:
        return self.A.is_rational() and self.B.is_rational()

    def rhs(self, x: GaussianRational) -> GaussianRational:
        return x * x * x + x * self.A + self.B

    def contains(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        return P.y * P.y == self.rhs(P.x)

    def point(self, x, y) -> Point:
        P = Point(x, y)
        if not self.contains(P):
            raise NotOnCurveError(f"{P} is not on {self}")
        return P

    def _check(self, P: Point) -> None:
        if not self.contains(P):
            raise NotOnCurveError(f"{P} is not on {self}")

    def _add(self, P: Point, Q: Point) -> Point:
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x:
            if P.y == -Q.y:
                return INFINITY
            # P == Q with y != 0: tangent
            lam = (3 * P.x * P.x + self.A) / (2 * P.y)
        else:
            lam = (Q.y - P.y) / (Q.x - P.x)
        x3 = lam * lam - P.x - Q.x
        y3 = lam * (P.x - x3) - P.y
        return Point(x3, y3)

    def add(self, P: Point, Q: Point) -> Point:
        self._check(P)
        self._check(Q)
        return self._add(P, Q)

    def _mul(self, n: int, P: Point) -> Point:
        if n < 0:
            n, P = -n, -P
        result = INFINITY
        while n:
            if n & 1:
                result = self._add(result, P)
            P = self._add(P, P)
            n >>= 1
        return result

    def scalar_mul(self, n: int, P: Point) -> Point:
        self._check(P)
        return self._mul(n, P)

    def point_order(self, P: Point, bound: int = DEFAULT_ORDER_BOUND) -> Optional[int]:
        """Least ``n <= bound`` with ``n*P = O``, else ``None``."""
        self._check(P)
        Q = P
        for n in range(1, bound + 1):
            if Q.is_infinity:
                return n
            Q = self._add(Q, P)
        return None

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return self.A == other.A and self.B == other.B

    def __hash__(self):
        return hash((self.A, self.B))

    def __repr__(self):
        return f"Curve(A={self.A}, B={self.B})"

    def __str__(self):
        return "y^2 = x^3" + _coef_term(self.A, "x") + _coef_term(self.B, "")

    def to_json(self) -> dict:
        return {"A": self.A.to_json(), "B": self.B.to_json(), "equation": str(self)}


def new_curve(A, B) -> Curve:
    return Curve(A, B)


def contains(E: Curve, P: Point) -> bool:
    return E.contains(P)


def add(E: Curve, P: Point, Q: Point) -> Point:
    return E.add(P, Q)


def scalar_mul(E: Curve, n: int, P: Point) -> Point:
    return E.scalar_mul(n, P)


def point_order(E: Curve, P: Point, bound: int = DEFAULT_ORDER_BOUND) -> Optional[int]:
    return E.point_order(P, bound)
