import random
from fractions import Fraction

import pytest

from logbundles.arrangement import (
    Arrangement,
    ArrangementError,
    HyperplaneArrangement,
    conic_arrangement_normal_crossings,
    hyperplanes_normal_crossings,
    pencil_determinant,
    quadric_matrix,
    quadric_pair_normal_crossings,
    quadric_poly,
    veronese_lift,
    veronese_point,
)
from logbundles.exactpoly import HomogeneousPoly
from logbundles.linalg import RationalMatrix
from logbundles.sampling import random_invertible_matrix, random_smooth_conic


def conic(diag):
    return quadric_poly(RationalMatrix.diagonal(diag))


def test_arrangement_validation():
    with pytest.raises(ArrangementError):
        Arrangement(2, ())
    f = conic([1, 2, -1])
    with pytest.raises(ArrangementError):
        Arrangement(2, (f, f * 3))  # projectively equal
    with pytest.raises(ArrangementError):
        Arrangement(1, (f,))  # wrong variable count


def test_arrangement_json_round_trip():
    arr = Arrangement(2, (conic([1, 2, -1]), conic([3, 5, -1])))
    assert Arrangement.from_json(arr.to_json()).hypersurfaces == arr.hypersurfaces


def test_quadric_matrix_round_trip():
    m = RationalMatrix([[1, 2, 0], [2, -1, Fraction(1, 2)], [0, Fraction(1, 2), 3]])
    assert quadric_matrix(quadric_poly(m)) == m


def test_pencil_determinant_matches_expansion():
    a = RationalMatrix.diagonal([1, 2, -1])
    b = RationalMatrix.diagonal([3, 5, -1])
    # det(sA + B) = (s+3)(2s+5)(-s-1)
    form = pencil_determinant(a, b)
    for s in range(-4, 5):
        expected = (s + 3) * (2 * s + 5) * (-s - 1)
        assert form.evaluate(Fraction(s), Fraction(1)) == expected


def test_quadric_pair_normal_crossings():
    a = RationalMatrix.diagonal([1, 2, -1])
    assert quadric_pair_normal_crossings(a, RationalMatrix.diagonal([3, 5, -1]))
    # repeated ratio -> double root -> fails
    assert not quadric_pair_normal_crossings(a, RationalMatrix.diagonal([1, 2, -2]))
    with pytest.raises(ArrangementError):
        quadric_pair_normal_crossings(a, RationalMatrix.diagonal([1, 0, 1]))


def test_quadric_pair_nc_congruence_invariant():
    rng = random.Random(5)
    a = RationalMatrix.diagonal([1, 2, -1])
    b_good = RationalMatrix.diagonal([3, 5, -1])
    b_bad = RationalMatrix.diagonal([1, 2, -2])
    for _ in range(10):
        p = random_invertible_matrix(rng, 3)
        pt = p.transpose()
        assert quadric_pair_normal_crossings(pt @ a @ p, pt @ b_good @ p)
        assert not quadric_pair_normal_crossings(pt @ a @ p, pt @ b_bad @ p)


def test_conic_arrangement_triple_point():
    # three conics through [0:0:1]: x0^2 - x1*x2 style members share it
    f = HomogeneousPoly.parse("x0^2 - x1*x2", 3)
    g = HomogeneousPoly.parse("x1^2 - x0*x2", 3)
    h = HomogeneousPoly.parse("x0^2 + x1^2 - 2*x0*x2 - x1*x2", 3)
    for poly in (f, g, h):
        assert poly.evaluate([0, 0, 1]) == 0
    arr = Arrangement(2, (f, g, h))
    assert not conic_arrangement_normal_crossings(arr)


def test_conic_arrangement_generic_is_nc():
    arr = Arrangement(
        2, (conic([1, 2, -1]), conic([3, 5, -1]), conic([2, 7, -3]))
    )
    assert conic_arrangement_normal_crossings(arr)


def test_hyperplanes_normal_crossings():
    good = HyperplaneArrangement(2, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert hyperplanes_normal_crossings(good)
    concurrent = HyperplaneArrangement(2, [(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert not hyperplanes_normal_crossings(concurrent)


def test_veronese_lift_and_point_pairing():
    arr = Arrangement(2, (conic([1, 2, -1]), conic([3, 5, -1])))
    lift = veronese_lift(arr)
    assert lift.ambient_dim == 5
    # <lift(f), nu_2(p)> = f(p) for sample points
    for f, normal in zip(arr.hypersurfaces, lift.normals):
        for p in ([1, 1, 1], [2, -1, 3], [0, 1, 5]):
            pairing = sum(
                c * v for c, v in zip(normal, veronese_point(p, 2, 2))
            )
            assert pairing == f.evaluate(p)
