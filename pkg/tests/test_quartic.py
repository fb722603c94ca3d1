import random

import pytest

from gaussquartic.curve import INFINITY, Curve, NotOnCurveError, Point
from gaussquartic.gaussian import ONE, UNITS, GaussianInt as G, gcd
from gaussquartic.quartic import (
    QuarticProblem,
    RankCertificate,
    RankCertificateError,
    bounded_point_search,
    brute_force_solutions,
    classify,
    lift_torsion_point,
    reduce_to_curve,
)
from gaussquartic.rational import GaussianRational as Q, sqrt_in_field
from gaussquartic.torsion import torsion_subgroup

from oracles import box, brute_primitive_quartic

I = G(0, 1)
ASSERTED = RankCertificate.PAPER_ASSERTED
ALL_PROBLEMS = [QuarticProblem(eps, c) for eps in (1, -1) for c in UNITS]


def test_problem_validation():
    with pytest.raises(ValueError):
        QuarticProblem(2, ONE)
    with pytest.raises(ValueError):
        QuarticProblem(1, G(1, 1))
    assert str(QuarticProblem(1, I)) == "x^4 + y^4 = i*z^2"
    assert str(QuarticProblem(-1, G(-1))) == "x^4 - y^4 = -z^2"


def test_reduce_to_curve_examples():
    assert reduce_to_curve(QuarticProblem(-1, I))[0] == Curve(1, 0)
    assert reduce_to_curve(QuarticProblem(1, I))[0] == Curve(-1, 0)
    assert reduce_to_curve(QuarticProblem(1, ONE))[0] == Curve(1, 0)
    assert reduce_to_curve(QuarticProblem(-1, ONE))[0] == Curve(-1, 0)
    _, sub = reduce_to_curve(QuarticProblem(1, I))
    assert (sub.u_r, sub.u_a, sub.epsilon_prime) == (I, I, -1)


@pytest.mark.parametrize("p", ALL_PROBLEMS, ids=str)
def test_substitution_identity(p):
    E, sub = reduce_to_curve(p)
    assert E.B == 0 and E.A in (1, -1)
    assert p.c * sub.u_a * sub.u_a == sub.u_r**3
    rng = random.Random(str(p))
    for _ in range(6):
        b = Q(G(rng.randint(-9, 9), rng.randint(-9, 9)), G(rng.randint(1, 9), rng.randint(-9, 9)))
        r = b * sub.u_r
        # c*(st)^2 = r^3 + eps*r with st = u_a*a  =>  a^2 = (r^3 + eps*r) / (c*u_a^2)
        a_squared = (r**3 + r * p.epsilon) / (p.c * sub.u_a * sub.u_a)
        assert a_squared == b**3 + b * sub.epsilon_prime
    # one consistency point: a quartic solution maps onto the curve
    if p.epsilon == 1 and p.c in (I, -I):
        x, y = ONE, ONE
        z = [z for z in box(2) if p.residual(x, y, z) == 0][0]
        s, t = Q(x, y), Q(z, y * y)
        assert E.contains(Point(s * s / sub.u_r, s * t / sub.u_a))


def test_lift_examples():
    p = QuarticProblem(1, I)
    E, sub = reduce_to_curve(p)
    assert lift_torsion_point(Point(1, 0), sub, p) is None  # r = i is not a square
    assert lift_torsion_point(Point(-1, 0), sub, p) is None
    assert lift_torsion_point(Point(0, 0), sub, p) is None
    assert lift_torsion_point(INFINITY, sub, p) is None
    fam = lift_torsion_point(Point(-I, G(1, 1)), sub, p)
    assert fam.s == 1 and fam.t == G(1, -1)
    fam_i = lift_torsion_point(Point(I, G(1, -1)), sub, p)
    assert fam_i.s == I and fam_i.t == G(1, -1)
    # z = +-i(1+i) = -+(1-i)
    assert {z for _, _, z in fam.primitive_solutions} == {I * G(1, 1), -I * G(1, 1)}
    with pytest.raises(NotOnCurveError):
        lift_torsion_point(Point(2, 2), sub, p)


def test_lift_same_family_for_opposite_points():
    p = QuarticProblem(1, I)
    _, sub = reduce_to_curve(p)
    a = lift_torsion_point(Point(I, G(1, -1)), sub, p)
    b = lift_torsion_point(Point(I, G(-1, 1)), sub, p)
    assert a == b


def test_classify_theorem_one():
    assert classify(QuarticProblem(-1, I), ASSERTED).only_trivial
    res = classify(QuarticProblem(1, I), ASSERTED)
    sols = res.primitive_solutions
    assert len(sols) == 32 == len(set(sols))
    expected = {(x, y, z) for x in UNITS for y in UNITS for z in (I * G(1, 1), -I * G(1, 1))}
    assert set(sols) == expected


def test_classify_theorem_two():
    for eps in (1, -1):
        assert classify(QuarticProblem(eps, ONE), ASSERTED).only_trivial


def test_classify_other_units():
    # x^4 + y^4 = -i z^2 is x^4 + y^4 = i (iz)^2 in disguise
    res = classify(QuarticProblem(1, -I), ASSERTED)
    assert len(res.primitive_solutions) == 32
    assert {z for _, _, z in res.primitive_solutions} == {G(1, 1), G(-1, -1)}
    assert classify(QuarticProblem(-1, -I), ASSERTED).only_trivial
    assert classify(QuarticProblem(1, G(-1)), ASSERTED).only_trivial
    assert classify(QuarticProblem(-1, G(-1)), ASSERTED).only_trivial


def test_classify_requires_certificate():
    with pytest.raises(RankCertificateError):
        classify(QuarticProblem(1, I), RankCertificate.ABSENT)
    res = classify(QuarticProblem(1, I), RankCertificate.CALLER_SUPPLIED)
    assert res.rank_certificate is RankCertificate.CALLER_SUPPLIED


@pytest.mark.parametrize("p", ALL_PROBLEMS, ids=str)
def test_emitted_solutions_sound_and_primitive(p):
    for x, y, z in classify(p, ASSERTED).primitive_solutions:
        assert p.residual(x, y, z) == 0
        assert x * y * z != 0
        assert gcd(gcd(x, y), z) == ONE


@pytest.mark.parametrize("p", ALL_PROBLEMS, ids=str)
def test_forward_completeness_box(p):
    res = classify(p, ASSERTED)
    found = brute_primitive_quartic(p.epsilon, p.c, 3)
    assert bool(found) == (not res.only_trivial)
    assert bool(found) == (p.epsilon == 1 and p.c in (I, -I))
    E, sub = res.curve, res.substitution
    for x, y, z in found:
        assert res.covers(x, y, z)
        s, t = Q(x, y), Q(z, y * y)
        assert E.contains(Point(s * s / sub.u_r, s * t / sub.u_a))


@pytest.mark.parametrize("p", ALL_PROBLEMS, ids=str)
def test_kernel_box_search_matches_oracle(p):
    oracle = sorted(brute_primitive_quartic(p.epsilon, p.c, 2), key=str)
    for backend in ("python", None):
        got = sorted(brute_force_solutions(p, 2, backend=backend), key=str)
        assert got == oracle


def naive_point_search(E, h):
    """Every reduced x = n/d in the box, tested directly with sqrt_in_field."""
    pts = set()
    for n in box(h):
        for d in box(h):
            if not (d.re > 0 and d.im >= 0) or gcd(n, d) != ONE:
                continue
            x = Q(n, d)
            y = sqrt_in_field(E.rhs(x))
            if y is not None:
                pts.update((Point(x, y), Point(x, -y)))
    return pts


@pytest.mark.parametrize(
    "A, B", [(-1, 0), (1, 0), (0, -4), (0, 1), (-2, 1), (G(0, 1), G(1, 1)), (G(2, -1), 0)]
)
def test_bounded_search_matches_naive(A, B):
    E = Curve(A, B)
    expected = naive_point_search(E, 5)
    for backend in ("python", None):
        assert bounded_point_search(E, 5, backend=backend) == expected


def test_bounded_search_examples():
    for A, n in ((-1, 7), (1, 3)):
        E = Curve(A, 0)
        found = bounded_point_search(E, 30)
        assert found == set(torsion_subgroup(E).affine_points)
        assert len(found) == n
    E = Curve(0, -4)
    found = bounded_point_search(E, 30)
    assert Point(2, 2) in found
    assert E.point_order(Point(2, 2)) is None


def test_classification_json():
    doc = classify(QuarticProblem(1, I), ASSERTED).to_json()
    assert doc["outcome"] == "families"
    assert doc["primitive_solution_count"] == 32
    assert doc["rank_certificate"] == "paper-asserted"
    assert doc["torsion"]["structure"] == "Z2 x Z4"
