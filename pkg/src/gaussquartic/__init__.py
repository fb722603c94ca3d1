"""Elliptic curves over Q(i) and the quartic equations x^4 +- y^4 = c*z^2."""

from .curve import INFINITY, Curve, NotOnCurveError, Point, SingularCurveError
from .gaussian import GaussianInt, divisors, factor, gcd, parse_gaussian, sqrt_exact
from .kernels import BACKEND
from .quartic import (
    Classification,
    QuarticProblem,
    RankCertificate,
    RankCertificateError,
    bounded_point_search,
    classify,
    reduce_to_curve,
)
from .rational import GaussianRational, sqrt_in_field
from .torsion import TorsionGroup, torsion_subgroup

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Classification",
    "Curve",
    "GaussianInt",
    "GaussianRational",
    "INFINITY",
    "NotOnCurveError",
    "Point",
    "QuarticProblem",
    "RankCertificate",
    "RankCertificateError",
    "SingularCurveError",
    "TorsionGroup",
    "bounded_point_search",
    "classify",
    "divisors",
    "factor",
    "gcd",
    "parse_gaussian",
    "reduce_to_curve",
    "sqrt_exact",
    "sqrt_in_field",
    "torsion_subgroup",
]
