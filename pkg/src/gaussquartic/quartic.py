"""Solving x^4 + eps*y^4 = c*z^2 over Z[i] through an elliptic curve.

For a nontrivial solution put ``s = x/y``, ``t = z/y^2`` and ``r = s^2``, so
that ``r^2 + eps = c*t^2``. Multiplying by ``r`` gives
``c*(s*t)^2 = r^3 + eps*r``. Writing ``r = u_r*b`` and ``s*t = u_a*a`` with
units satisfying ``c*u_a^2 = u_r^3`` turns this into

    a^2 = b^3 + eps' * b,    eps' = eps / u_r^2 = +-1.

Every unit ``c`` lands on one of the two curves ``a^2 = b^3 + b`` and
``a^2 = b^3 - b``. Both have rank 0 over Q(i), so E(Q(i)) is its torsion
subgroup and each torsion point is pulled back through the substitutions.
A point survives only if ``r`` is a square in Q(i) and ``t != 0``.

The cases c = -1 and c = -i need no separate treatment: c = -1 gives
u_r = -1, u_a = 1 and the same eps' as c = 1, while c = -i gives
u_r = -i, u_a = i and eps' = -eps, as for c = i.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .curve import Curve, NotOnCurveError, Point
from .gaussian import ONE, UNITS, GaussianInt, gcd, sqrt_exact
from .rational import GaussianRational, as_integral, sqrt_in_field
from .torsion import TorsionGroup, torsion_subgroup

__all__ = [
    "RankCertificate",
    "RankCertificateError",
    "QuarticProblem",
    "Substitution",
    "SolutionFamily",
    "Classification",
    "PUBLISHED_RANK_ZERO_CURVES",
    "reduce_to_curve",
    "lift_torsion_point",
    "classify",
    "default_certificate",
    "bounded_point_search",
    "brute_force_solutions",
    "SCHEMA_VERSION",
]

SCHEMA_VERSION = "gaussquartic.classification/1"

Triple = tuple[GaussianInt, GaussianInt, GaussianInt]


class RankCertificate(enum.Enum):
    PAPER_ASSERTED = "paper-asserted"
    CALLER_SUPPLIED = "caller-supplied"
    ABSENT = "absent"


class RankCertificateError(ValueError):
    """Raised when completeness is requested without a rank-0 certificate."""


# (A, B) of the curves whose Q(i)-rank 0 was computed externally by 2-descent.
PUBLISHED_RANK_ZERO_CURVES = frozenset({(GaussianInt(1), GaussianInt(0)), (GaussianInt(-1), GaussianInt(0))})


@dataclass(frozen=True)
class QuarticProblem:
    epsilon: int
    c: GaussianInt

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon}")
        object.__setattr__(self, "c", GaussianInt.coerce(self.c))
        if not self.c.is_unit():
            raise ValueError(f"c must be a unit of Z[i], got {self.c}")

    def residual(self, x: GaussianInt, y: GaussianInt, z: GaussianInt) -> GaussianInt:
        return x**4 + self.epsilon * y**4 - self.c * z * z

    def __str__(self):
        sign = "+" if self.epsilon == 1 else "-"
        c = {1: "", -1: "-"}.get(self.c, f"{self.c}*")
        return f"x^4 {sign} y^4 = {c}z^2"

    def to_json(self) -> dict:
        return {"epsilon": self.epsilon, "c": self.c.to_json(), "equation": str(self)}


@dataclass(frozen=True)
class Substitution:
    """``r = u_r*b``, ``s*t = u_a*a``; the curve is ``a^2 = b^3 + epsilon_prime*b``."""

    u_r: GaussianInt
    u_a: GaussianInt
    epsilon_prime: int

    def to_json(self) -> dict:
        return {"u_r": self.u_r.to_json(), "u_a": self.u_a.to_json(), "epsilon_prime": self.epsilon_prime}


@dataclass(frozen=True)
class SolutionFamily:
    """Solutions with ``x/y = +-s`` and ``z/y^2 = +-t``.

    ``primitive_solutions`` lists every triple with ``gcd(x, y, z) = 1``
    in the family; all others are ``(w*x, w*y, w^2*z)`` for nonzero ``w``.
    """

    s: GaussianRational
    t: GaussianRational
    primitive_solutions: tuple[Triple, ...]

    def contains_ratio(self, s: GaussianRational, t: GaussianRational) -> bool:
        return s in (self.s, -self.s) and t in (self.t, -self.t)

    def to_json(self) -> dict:
        return {
            "s": self.s.to_json(),
            "t": self.t.to_json(),
            "s_text": str(self.s),
            "t_text": str(self.t),
            "primitive_solutions": [
                {"x": x.to_json(), "y": y.to_json(), "z": z.to_json()}
                for x, y, z in self.primitive_solutions
            ],
        }


@dataclass(frozen=True)
class Classification:
    problem: QuarticProblem
    curve: Curve
    substitution: Substitution
    torsion: TorsionGroup
    families: tuple[SolutionFamily, ...]
    rank_certificate: RankCertificate

    @property
    def only_trivial(self) -> bool:
        return not self.families

    @property
    def outcome(self) -> str:
        return "only_trivial" if self.only_trivial else "families"

    @property
    def primitive_solutions(self) -> tuple[Triple, ...]:
        return tuple(sol for fam in self.families for sol in fam.primitive_solutions)

    def covers(self, x: GaussianInt, y: GaussianInt, z: GaussianInt) -> bool:
        """Whether a nontrivial solution is a scaling of a listed primitive one."""
        s = GaussianRational(x, y)
        t = GaussianRational(z, y * y)
        return any(f.contains_ratio(s, t) for f in self.families)

    def qi_statement(self) -> str:
        if self.only_trivial:
            return f"{self.problem} has no solution with xyz != 0 over Q(i)"
        return (
            f"every solution of {self.problem} over Q(i) with xyz != 0 is "
            "(w*x, w*y, w^2*z) for some nonzero w in Q(i) and a listed primitive (x, y, z)"
        )

    def to_json(self) -> dict:
        t = self.torsion
        return {
            "schema": SCHEMA_VERSION,
            "problem": self.problem.to_json(),
            "curve": self.curve.to_json(),
            "substitution": self.substitution.to_json(),
            "torsion": {
                "structure": str(t.structure),
                "order": len(t.points),
                "points_text": [str(P) for P in t.points],
            },
            "rank_certificate": self.rank_certificate.value,
            "outcome": self.outcome,
            "families": [f.to_json() for f in self.families],
            "primitive_solution_count": len(self.primitive_solutions),
            "qi_statement": self.qi_statement(),
            "completeness": "complete given rank 0 of the reduced curve",
        }


def reduce_to_curve(p: QuarticProblem) -> tuple[Curve, Substitution]:
    for u_r in UNITS:
        for u_a in UNITS:
            if p.c * u_a * u_a == u_r**3:
                eps_prime = p.epsilon * (u_r * u_r).re  # 1/u_r^2 = u_r^2 = +-1
                sub = Substitution(u_r, u_a, eps_prime)
                return Curve(eps_prime, 0), sub
    raise AssertionError(f"no unit substitution for c = {p.c}")


def _primitive_family(s: GaussianRational, t: GaussianRational) -> tuple[Triple, ...]:
    out = []
    for ss in (s, -s):
        for tt in (t, -t):
            num, den = ss.num, ss.den
            zq = as_integral(tt * den * den)
            if zq is None:
                raise AssertionError(f"t*y^2 not integral for s={ss}, t={tt}")
            for u in UNITS:
                out.append((u * num, u * den, u * u * zq))
    return tuple(sorted(out, key=lambda xyz: tuple(g.sort_key() for g in xyz)))


def lift_torsion_point(P: Point, sub: Substitution, p: QuarticProblem) -> Optional[SolutionFamily]:
    """Pull a point of the reduced curve back to solutions of the quartic.

    Returns ``None`` for points yielding only trivial solutions: the point
    at infinity, ``r = 0``, ``r`` not a square in Q(i), or ``t = 0``.
    """
    E = Curve(sub.epsilon_prime, 0)
    if not E.contains(P):
        raise NotOnCurveError(f"{P} is not on {E}")
    if P.is_infinity:
        return None
    r = P.x * sub.u_r
    if r.is_zero():
        return None
    s = sqrt_in_field(r)
    if s is None:
        return None
    w = (r * r + p.epsilon) / p.c
    if w.is_zero():
        return None
    t = sqrt_in_field(w)
    # t is forced by the point itself: s*t = u_a*a
    t_from_point = P.y * sub.u_a / s
    if t is None or t_from_point not in (t, -t):
        raise AssertionError(f"inconsistent t-recovery at {P}")
    return SolutionFamily(s, t, _primitive_family(s, t))


def default_certificate(curve: Curve) -> RankCertificate:
    if (curve.A, curve.B) in PUBLISHED_RANK_ZERO_CURVES:
        return RankCertificate.PAPER_ASSERTED
    return RankCertificate.ABSENT


def classify(p: QuarticProblem, rank_certificate: RankCertificate) -> Classification:
    """Every primitive nontrivial solution of ``p``, given rank 0 of its curve."""
    if rank_certificate is RankCertificate.ABSENT:
        raise RankCertificateError(
            f"classification of {p} is conditional on rank 0; no certificate supplied"
        )
    curve, sub = reduce_to_curve(p)
    if (
        rank_certificate is RankCertificate.PAPER_ASSERTED
        and default_certificate(curve) is not RankCertificate.PAPER_ASSERTED
    ):
        raise RankCertificateError(f"no published rank computation for {curve}")
    torsion = torsion_subgroup(curve)
    families = {}
    for P in torsion.points:
        fam = lift_torsion_point(P, sub, p)
        if fam is not None:
            families.setdefault((fam.s, fam.t), fam)
    ordered = sorted(families.values(), key=lambda f: (str(f.s), str(f.t)))
    return Classification(p, curve, sub, torsion, tuple(ordered), rank_certificate)


def _square_class_denominators(height: int):
    """Canonical ``d`` in the box that are a unit times a square, with that unit."""
    for re in range(1, height + 1):
        for im in range(0, height + 1):
            d = GaussianInt(re, im)
            for u in UNITS:
                if sqrt_exact(u * d) is not None:
                    # d = conj(u) * e^2
                    yield d, u.conj()
                    break


def bounded_point_search(E: Curve, height_bound: int, backend: Optional[str] = None) -> set[Point]:
    """Affine points with ``x = n/d`` reduced and all parts of ``n, d`` within the bound.

    Heuristic rank check: an exhaustive search of a finite box finds small
    non-torsion points if they exist, but can never certify rank 0.

    The denominator of x in lowest terms is a unit times a square, so only
    those ``d`` are scanned; the kernel then tests each numerator.
    """
    A, B = E.A, E.B
    points = set()
    for d, v in _square_class_denominators(height_bound):
        hits = kernels.square_class_hits(
            (A.re, A.im), (B.re, B.im), (d.re, d.im), (v.re, v.im), height_bound, backend=backend
        )
        for nr, ni in hits:
            n = GaussianInt(nr, ni)
            if (n.is_zero() and d != ONE) or (not n.is_zero() and gcd(n, d) != ONE):
                continue
            x = GaussianRational(n, d)
            y = sqrt_in_field(E.rhs(x))
            if y is None:
                raise AssertionError(f"kernel reported non-point x = {x}")
            points.add(Point(x, y))
            points.add(Point(x, -y))
    return points


def brute_force_solutions(p: QuarticProblem, bound: int, backend: Optional[str] = None) -> list[Triple]:
    """All nontrivial solutions with every coordinate part in ``[-bound, bound]``."""
    raw = kernels.quartic_box_solutions(p.epsilon, (p.c.re, p.c.im), bound, backend=backend)
    return [
        (GaussianInt(a, b), GaussianInt(c, d), GaussianInt(e, f)) for a, b, c, d, e, f in raw
    ]
