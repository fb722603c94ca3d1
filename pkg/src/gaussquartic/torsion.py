"""Torsion subgroups of E(Q(i)) via the extended Lutz-Nagell theorem.

A torsion point of ``y^2 = x^3 + Ax + B`` (``A, B`` in Z[i]) has integral
coordinates, and either ``y = 0`` or ``y^2`` divides ``4A^3 + 27B^2``. That
gives a finite candidate list; each candidate is kept iff it has finite order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd as igcd
from typing import Iterable, Optional

from .curve import DEFAULT_ORDER_BOUND, INFINITY, Curve, Point
from .gaussian import UNITS, divisors, divrem, monic_cubic_integral_roots

__all__ = [
    "Structure",
    "TorsionGroup",
    "StructureError",
    "CLASSIFICATION",
    "candidates_y_zero",
    "candidates_y_nonzero",
    "torsion_subgroup",
    "identify_structure",
]


class StructureError(ValueError):
    """The point set is not a group matching any admissible torsion structure."""


@dataclass(frozen=True)
class Structure:
    """``cyclic`` -> Z_m, ``z2xz2m`` -> Z_2 + Z_2m, ``z4xz4`` -> Z_4 + Z_4."""

    kind: str
    m: int

    @property
    def invariants(self) -> tuple[int, int]:
        if self.kind == "cyclic":
            return (1, self.m)
        if self.kind == "z2xz2m":
            return (2, 2 * self.m)
        return (4, 4)

    @property
    def order(self) -> int:
        a, b = self.invariants
        return a * b

    def order_counts(self) -> Counter:
        a, b = self.invariants
        return Counter(
            _lcm(a // igcd(i, a), b // igcd(j, b)) for i in range(a) for j in range(b)
        )

    def __str__(self):
        if self.kind == "cyclic":
            return f"Z{self.m}"
        a, b = self.invariants
        return f"Z{a} x Z{b}"


def _lcm(a: int, b: int) -> int:
    return a * b // igcd(a, b)


CLASSIFICATION: tuple[Structure, ...] = (
    *(Structure("cyclic", m) for m in (*range(1, 11), 12)),
    *(Structure("z2xz2m", m) for m in range(1, 5)),
    Structure("z4xz4", 4),
)


@dataclass(frozen=True)
class TorsionGroup:
    curve: Curve
    points: tuple[Point, ...]
    structure: Structure
    candidate_count: int

    @property
    def affine_points(self) -> tuple[Point, ...]:
        return tuple(P for P in self.points if not P.is_infinity)

    def to_json(self) -> dict:
        return {
            "curve": self.curve.to_json(),
            "discriminant_quantity": self.curve.discriminant_quantity().to_json(),
            "candidate_count": self.candidate_count,
            "order": len(self.points),
            "structure": str(self.structure),
            "points": [P.to_json() for P in self.points],
            "points_text": [str(P) for P in self.points],
        }


def candidates_y_zero(E: Curve) -> set[Point]:
    return {Point(x, 0) for x in monic_cubic_integral_roots(E.A, E.B)}


def candidates_y_nonzero(E: Curve) -> set[Point]:
    D = E.discriminant_quantity()
    out = set()
    for d in divisors(D):
        for u in UNITS:
            y = u * d
            y2 = y * y
            if not divrem(D, y2)[1].is_zero():
                continue
            for x in monic_cubic_integral_roots(E.A, E.B - y2):
                out.add(Point(x, y))
    return out


def _sorted(points: Iterable[Point]) -> tuple[Point, ...]:
    return tuple(sorted(points, key=Point.sort_key))


def torsion_subgroup(E: Curve, bound: Optional[int] = None) -> TorsionGroup:
    """All torsion points of ``E`` over Q(i) and the group they form.

    ``bound`` caps the order search. It defaults to 12, which is justified
    only for rational ``A, B``; curves with non-rational coefficients must
    pass an explicit bound.
    """
    if bound is None:
        if not E.has_rational_coefficients():
            raise ValueError(
                "the order bound 12 only holds for rational coefficients; pass bound explicitly"
            )
        bound = DEFAULT_ORDER_BOUND
    candidates = candidates_y_zero(E) | candidates_y_nonzero(E)
    points = {INFINITY}
    for P in candidates:
        if E.point_order(P, bound) is not None:
            points.add(P)
    points = _sorted(points)
    return TorsionGroup(E, points, identify_structure(points, E), len(candidates))


def identify_structure(points: Iterable[Point], E: Curve) -> Structure:
    pts = set(points)
    for P in pts:
        if -P not in pts:
            raise StructureError(f"{P} has no inverse in the set")
        for Q in pts:
            if E._add(P, Q) not in pts:
                raise StructureError(f"{P} + {Q} is outside the set")
    counts = Counter()
    for P in pts:
        Q, n = P, 1
        while not Q.is_infinity:
            Q = E._add(Q, P)
            n += 1
        counts[n] += 1
    for s in CLASSIFICATION:
        if s.order == len(pts) and s.order_counts() == counts:
            return s
    raise StructureError(f"no admissible structure has element orders {dict(counts)}")
