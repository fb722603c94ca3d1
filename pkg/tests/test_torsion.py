import random

import pytest

from gaussquartic.curve import INFINITY, Curve, Point, SingularCurveError
from gaussquartic.gaussian import GaussianInt as G
from gaussquartic.rational import as_integral
from gaussquartic.torsion import (
    CLASSIFICATION,
    Structure,
    StructureError,
    candidates_y_nonzero,
    candidates_y_zero,
    identify_structure,
    torsion_subgroup,
)

from oracles import brute_integral_points

I = G(0, 1)


def test_classification_orders():
    assert [s.order for s in CLASSIFICATION] == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 4, 8, 12, 16, 16]
    assert str(Structure("z2xz2m", 2)) == "Z2 x Z4"
    assert str(Structure("z4xz4", 4)) == "Z4 x Z4"
    assert Structure("z2xz2m", 1).order_counts() == {1: 1, 2: 3}
    assert Structure("cyclic", 4).order_counts() == {1: 1, 2: 1, 4: 2}


def test_candidates_y_zero():
    assert candidates_y_zero(Curve(1, 0)) == {Point(0, 0), Point(I, 0), Point(-I, 0)}
    assert candidates_y_zero(Curve(-1, 0)) == {Point(0, 0), Point(1, 0), Point(-1, 0)}
    E = Curve(0, 4)
    brute = {Point(x, 0) for x, y in brute_integral_points(E.A, E.B, 6) if y == 0}
    assert candidates_y_zero(E) == brute == set()


def test_candidates_y_nonzero():
    E = Curve(-1, 0)
    assert E.discriminant_quantity() == -4
    cands = candidates_y_nonzero(E)
    for P in [Point(I, G(1, -1)), Point(I, G(-1, 1)), Point(-I, G(1, 1)), Point(-I, G(-1, -1))]:
        assert P in cands
    assert all(E.contains(P) for P in cands)
    # nothing with y != 0 on a^2 = b^3 + b is torsion
    E = Curve(1, 0)
    assert all(E.point_order(P) is None for P in candidates_y_nonzero(E))


def test_candidates_unit_discriminant():
    # 4A^3 + 27B^2 = -4 + 27 = 23 is squarefree, so y^2 | 23 forces a unit y
    E = Curve(-1, 1)
    for P in candidates_y_nonzero(E):
        assert P.y.num.is_unit()


def test_torsion_reference_curves():
    T = torsion_subgroup(Curve(1, 0))
    assert str(T.structure) == "Z2 x Z2"
    assert set(T.points) == {INFINITY, Point(0, 0), Point(I, 0), Point(-I, 0)}
    T = torsion_subgroup(Curve(-1, 0))
    assert str(T.structure) == "Z2 x Z4"
    assert len(T.points) == 8
    assert {P.x for P in T.affine_points} == {G(0), G(1), G(-1), I, -I}


def test_torsion_cyclic_six():
    T = torsion_subgroup(Curve(0, 1))
    assert T.structure == Structure("cyclic", 6)
    assert Point(2, 3) in T.points


def test_identify_structure_examples():
    E = Curve(-1, 0)
    T = torsion_subgroup(E)
    assert identify_structure(T.points, E) == Structure("z2xz2m", 2)
    two_torsion = [INFINITY, Point(0, 0), Point(1, 0), Point(-1, 0)]
    assert identify_structure(two_torsion, E) == Structure("z2xz2m", 1)
    cyclic4 = [INFINITY, Point(0, 0), Point(I, G(1, -1)), Point(I, G(-1, 1))]
    assert identify_structure(cyclic4, E) == Structure("cyclic", 4)
    with pytest.raises(StructureError):
        identify_structure([INFINITY, Point(I, G(1, -1))], E)


def test_torsion_requires_bound_for_gaussian_coefficients():
    E = Curve(I, 0)
    with pytest.raises(ValueError):
        torsion_subgroup(E)
    assert torsion_subgroup(E, bound=16).points[0] == INFINITY


def test_torsion_singular():
    with pytest.raises(SingularCurveError):
        torsion_subgroup(Curve(0, 0))


@pytest.mark.parametrize(
    "A, B, label",
    [
        (0, 1, "Z6"),
        (-1, 0, "Z2 x Z4"),
        (1, 0, "Z2 x Z2"),
    ],
)
def test_known_structures(A, B, label):
    assert str(torsion_subgroup(Curve(A, B)).structure) == label


def test_large_rational_discriminant():
    # 4A^3 + 27B^2 = 27 * 432^2 has norm above the ceiling but is rational
    E = Curve(0, -432)
    T = torsion_subgroup(E)
    assert E.point_order(Point(12, 36)) == 3
    assert Point(12, 36) in T.points and Point(12, -36) in T.points


def random_rational_curves(n, seed=1):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        A, B = rng.randint(-12, 12), rng.randint(-12, 12)
        try:
            out.append(Curve(A, B))
        except SingularCurveError:
            pass
    return out


def small_discriminant_curves():
    out = []
    for A in range(-4, 5):
        for B in range(-4, 5):
            D = 4 * A**3 + 27 * B**2
            if D != 0 and D * D <= 10**4:
                out.append(Curve(A, B))
    return out


def test_candidate_completeness_against_box():
    curves = small_discriminant_curves()
    assert len(curves) >= 10
    for E in curves:
        T = set(torsion_subgroup(E).points)
        for x, y in brute_integral_points(E.A, E.B, 30):
            P = Point(x, y)
            if E.point_order(P) is not None:
                assert P in T


def test_torsion_properties_random():
    for E in random_rational_curves(15, seed=4):
        T = torsion_subgroup(E)
        pts = set(T.points)
        assert T.structure.order == len(pts)
        for P in T.affine_points:
            assert as_integral(P.x) is not None and as_integral(P.y) is not None
        for P in pts:
            assert -P in pts
            for Q in pts:
                assert E.add(P, Q) in pts
